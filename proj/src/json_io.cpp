#include "vclines/json_io.hpp"

#include "vclines/incidence.hpp"

#include <stdexcept>
#include <string>

namespace vclines {

namespace {

Rational rational_from(const Json& j, const char* where) {
  if (!j.is_string())
    throw std::invalid_argument(std::string(where) + ": rationals must be strings");
  return parse_rational(j.get<std::string>());
}

Vec vec_from(const Json& j, const char* where) {
  if (!j.is_array()) throw std::invalid_argument(std::string(where) + ": expected an array");
  Vec v;
  for (const Json& e : j) v.push_back(rational_from(e, where));
  return v;
}

Json vec_json(const Vec& v) {
  Json out = Json::array();
  for (const Rational& r : v) out.push_back(rational_str(r));
  return out;
}

Json indices_json(Mask m) {
  Json out = Json::array();
  for (int i : mask_indices(m)) out.push_back(i);
  return out;
}

}  // namespace

PointConfig config_from_json(const Json& j) {
  if (!j.is_object() || !j.contains("points"))
    throw std::invalid_argument("config: expected an object with a \"points\" array");
  const Json& arr = j.at("points");
  if (!arr.is_array()) throw std::invalid_argument("config: \"points\" must be an array");
  std::vector<Point> pts;
  for (const Json& p : arr) {
    if (!p.is_array() || p.size() != 2)
      throw std::invalid_argument("config: each point must be a [\"x\",\"y\"] pair");
    pts.push_back({rational_from(p[0], "point"), rational_from(p[1], "point")});
  }
  return PointConfig::build(std::move(pts));
}

AffineConfig affine_from_json(const Json& j) {
  if (!j.is_object() || !j.contains("n") || !j.contains("elements"))
    throw std::invalid_argument("affine config: expected {\"n\": ..., \"elements\": [...]}");
  if (!j.at("n").is_number_integer())
    throw std::invalid_argument("affine config: \"n\" must be an integer");
  int n = j.at("n").get<int>();
  const Json& els = j.at("elements");
  if (!els.is_array()) throw std::invalid_argument("affine config: \"elements\" must be an array");
  std::vector<AffineSubspace> out;
  for (const Json& e : els) {
    if (!e.is_object() || !e.contains("offset"))
      throw std::invalid_argument("affine element: expected {\"offset\": ..., \"basis\": ...}");
    Vec off = vec_from(e.at("offset"), "offset");
    Mat basis;
    if (e.contains("basis"))
      for (const Json& row : e.at("basis")) basis.push_back(vec_from(row, "basis"));
    out.push_back(AffineSubspace::make(std::move(off), std::move(basis)));
  }
  return AffineConfig::build(n, std::move(out));
}

FiniteSetSystem system_from_json(const Json& j) {
  if (!j.is_object() || !j.contains("ground") || !j.contains("family"))
    throw std::invalid_argument("set system: expected {\"ground\": n, \"family\": [[...], ...]}");
  if (!j.at("ground").is_number_integer())
    throw std::invalid_argument("set system: \"ground\" must be an integer");
  int ground = j.at("ground").get<int>();
  std::vector<Mask> family;
  const Json& fam = j.at("family");
  if (!fam.is_array()) throw std::invalid_argument("set system: \"family\" must be an array");
  for (const Json& s : fam) {
    if (!s.is_array()) throw std::invalid_argument("set system: each member must be an index array");
    Mask m = 0;
    for (const Json& e : s) {
      if (!e.is_number_integer())
        throw std::invalid_argument("set system: indices must be integers");
      int i = e.get<int>();
      if (i < 0 || i >= ground) throw std::invalid_argument("set system: index out of range");
      m |= bit(i);
    }
    family.push_back(m);
  }
  return make_system(ground, std::move(family));
}

Json point_json(const Point& p) { return Json::array({rational_str(p.x), rational_str(p.y)}); }

Json config_json(const PointConfig& cfg) {
  Json pts = Json::array();
  for (const Point& p : cfg.points()) pts.push_back(point_json(p));
  return Json{{"points", std::move(pts)}};
}

Json incidence_json(const PointConfig& cfg) {
  Json lines = Json::array();
  for (const LineTrace& lt : cfg.lines()) {
    Json coeffs = Json::array({lt.line.a.str(), lt.line.b.str(), lt.line.c.str()});
    lines.push_back(Json{{"coeffs", std::move(coeffs)}, {"trace", indices_json(lt.trace)}});
  }
  auto [m, cover] = min_line_cover(cfg);
  Json cover_json = Json::array();
  for (const LineClass& lc : cover) cover_json.push_back(line_class_json(cfg, lc));
  return Json{{"n", cfg.size()},
              {"collin", cfg.collin()},
              {"lines", std::move(lines)},
              {"min_cover_size", m},
              {"min_cover", std::move(cover_json)}};
}

Json line_class_json(const PointConfig& cfg, const LineClass& lc) {
  if (lc.is_line()) {
    const LineTrace& lt = cfg.lines().at(lc.index);
    return Json{{"kind", "line"},
                {"coeffs", Json::array({lt.line.a.str(), lt.line.b.str(), lt.line.c.str()})},
                {"trace", indices_json(lt.trace)}};
  }
  return Json{{"kind", "singleton"}, {"point", lc.index}};
}

Json shatter_report_json(const PointConfig& cfg, const ShatterReport& r) {
  Json out{{"shattered", r.shattered}, {"k", r.k}, {"n", r.n}};
  if (r.failing_subset) out["failing_subset"] = indices_json(*r.failing_subset);
  if (r.witnesses) {
    Json ws = Json::array();
    for (const auto& [target, w] : *r.witnesses) {
      Json classes = Json::array();
      for (const LineClass& lc : w.classes) classes.push_back(line_class_json(cfg, lc));
      ws.push_back(Json{{"subset", indices_json(target)}, {"classes", std::move(classes)}});
    }
    out["witnesses"] = std::move(ws);
  }
  return out;
}

Json verdict_json(const AxiomVerdict& v) {
  Json out{{"condition", v.condition}, {"holds", v.holds}};
  if (v.subset) out["subset"] = indices_json(*v.subset);
  if (v.line_and_point)
    out["line_and_point"] = Json{{"line", v.line_and_point->first},
                                 {"point", v.line_and_point->second}};
  if (v.cover) {
    Json cov = Json::array();
    for (const LineClass& lc : *v.cover)
      cov.push_back(lc.is_line() ? Json{{"kind", "line"}, {"index", lc.index}}
                                 : Json{{"kind", "singleton"}, {"point", lc.index}});
    out["cover"] = std::move(cov);
  }
  if (v.point) out["point"] = *v.point;
  return out;
}

Json characterization_json(const F3Characterization& c) {
  Json out{{"four_collinear", c.has_four_collinear}, {"conditions", Json::array()}};
  Json& conds = out["conditions"];
  conds.push_back(verdict_json(c.o));
  for (const auto& v : {c.a1, c.a2, c.b1, c.b2})
    if (v) conds.push_back(verdict_json(*v));
  out["predicted_shattered"] = c.predicted_shattered;
  return out;
}

Json structure_json(const ShatterStructure& s) {
  Json classes = Json::array();
  for (Mask m : s.classes) classes.push_back(indices_json(m));
  return Json{{"n", s.n}, {"classes", std::move(classes)}};
}

Json certificate_json(const IsoCertificate& cert) {
  Json cm = Json::array();
  for (auto [from, to] : cert.class_map) cm.push_back(Json::array({from, to}));
  return Json{{"bijection", cert.bijection}, {"class_map", std::move(cm)}};
}

Json subspace_json(const AffineSubspace& s) {
  Json basis = Json::array();
  for (const Vec& row : s.basis) basis.push_back(vec_json(row));
  return Json{{"offset", vec_json(s.offset)}, {"basis", std::move(basis)}};
}

Json affine_json(const AffineConfig& cfg) {
  Json els = Json::array();
  for (const AffineSubspace& e : cfg.elements) els.push_back(subspace_json(e));
  return Json{{"n", cfg.ambient}, {"elements", std::move(els)}};
}

Json reduction_json(const Reduction& r) {
  return Json{{"reduced", affine_json(r.reduced)},
              {"cut", subspace_json(r.cut)},
              {"dropped_coord", r.dropped_coord}};
}

Json system_json(const FiniteSetSystem& sys) {
  Json fam = Json::array();
  for (Mask m : sys.family) fam.push_back(indices_json(m));
  return Json{{"ground", sys.ground}, {"family", std::move(fam)}};
}

}  // namespace vclines
