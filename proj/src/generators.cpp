#include "vclines/generators.hpp"

#include "vclines/axioms.hpp"
#include "vclines/incidence.hpp"
#include "vclines/shatter.hpp"

#include <algorithm>
#include <optional>
#include <set>
#include <stdexcept>
#include <utility>

namespace vclines {

namespace {

constexpr int kRetries = 500;

bool has_point(const std::vector<Point>& pts, const Point& p) {
  return std::find(pts.begin(), pts.end(), p) != pts.end();
}

Point point_on(const Point& p, const Point& q, const Rational& t) {
  return Point{p.x + t * (q.x - p.x), p.y + t * (q.y - p.y)};
}

}  // namespace

Rational rand_rational(Rng& rng, int lo, int hi, int max_den) {
  std::int64_t den = rng.range(1, max_den);
  std::int64_t num = rng.range(lo * den, hi * den);
  return make_rational(BigInt(num), BigInt(den));
}

Point rand_point(Rng& rng, int lo, int hi, int max_den) {
  Rational x = rand_rational(rng, lo, hi, max_den);
  Rational y = rand_rational(rng, lo, hi, max_den);
  return Point{std::move(x), std::move(y)};
}

PointConfig random_distinct_config(Rng& rng, int n, int span) {
  std::vector<Point> pts;
  while (static_cast<int>(pts.size()) < n) {
    Point p = rand_point(rng, -span, span);
    if (!has_point(pts, p)) pts.push_back(std::move(p));
  }
  return PointConfig::build(std::move(pts));
}

namespace {

std::optional<PointConfig> place_on_lines(Rng& rng, const std::vector<int>& sizes, int span) {
  const int lines = static_cast<int>(sizes.size());
  std::vector<std::pair<Point, Point>> anchors;
  std::vector<Line> carriers;
  int guard = 0;
  while (static_cast<int>(carriers.size()) < lines) {
    if (++guard > 200) return std::nullopt;
    Point p = rand_point(rng, -span, span, 2);
    Point q = rand_point(rng, -span, span, 2);
    if (p == q) continue;
    Line l = Line::through(p, q);
    if (std::find(carriers.begin(), carriers.end(), l) != carriers.end()) continue;
    carriers.push_back(std::move(l));
    anchors.emplace_back(std::move(p), std::move(q));
  }
  std::vector<Point> pts;
  for (int i = 0; i < lines; ++i) {
    for (int j = 0; j < sizes[i]; ++j) {
      for (int tries = 0;; ++tries) {
        if (tries > 100) return std::nullopt;
        Rational t = rand_rational(rng, -span / 2, span / 2, 3);
        Point np = point_on(anchors[i].first, anchors[i].second, t);
        if (!has_point(pts, np)) {
          pts.push_back(std::move(np));
          break;
        }
      }
    }
  }
  return PointConfig::build(std::move(pts));
}

PointConfig sized_lines(Rng& rng, std::vector<int> sizes, int span) {
  for (int attempt = 0; attempt < kRetries; ++attempt) {
    if (std::optional<PointConfig> cfg = place_on_lines(rng, sizes, span)) return *cfg;
  }
  throw std::logic_error("line placement kept colliding");
}

}  // namespace

PointConfig random_on_lines(Rng& rng, int n, int lines, int span) {
  if (lines < 1 || n < lines) throw std::invalid_argument("need at least one point per line");
  std::vector<int> sizes(lines, 1);
  for (int i = lines; i < n; ++i) ++sizes[rng.below(lines)];
  return sized_lines(rng, std::move(sizes), span);
}

AffineMap2 random_affine_map(Rng& rng) {
  for (;;) {
    AffineMap2 m{rand_rational(rng, -3, 3, 2), rand_rational(rng, -3, 3, 2),
                 rand_rational(rng, -3, 3, 2), rand_rational(rng, -3, 3, 2),
                 rand_rational(rng, -5, 5, 2), rand_rational(rng, -5, 5, 2)};
    if (m.invertible()) return m;
  }
}

PointConfig apply_map(const AffineMap2& map, const PointConfig& cfg) {
  std::vector<Point> pts;
  for (const Point& p : cfg.points()) pts.push_back(map.apply(p));
  return PointConfig::build(std::move(pts));
}

PointConfig x_configuration() {
  auto pt = [](int x, int y) { return Point{Rational(x), Rational(y)}; };
  return PointConfig::build({pt(0, 0), pt(2, 0), pt(6, 0), pt(1, 1), pt(3, 1), pt(4, 1),
                             pt(0, 2), pt(2, 2), pt(6, 2)});
}

namespace {

// One attempt at a fresh instance: four collinear points a1..a4 on y = 0,
// free points b4, b5 above, the rest forced by the class's incidences.
std::optional<PointConfig> try_construct(CaseLabel label, Rng& rng) {
  std::vector<Rational> ax;
  while (ax.size() < 4) {
    Rational x(rng.range(-6, 6));
    if (std::find(ax.begin(), ax.end(), x) == ax.end()) ax.push_back(std::move(x));
  }
  Point a1{ax[0], 0}, a2{ax[1], 0}, a3{ax[2], 0}, a4{ax[3], 0};
  Point b4 = Point{rand_rational(rng, -6, 6, 2), rand_rational(rng, 1, 4, 2)};
  Point b5 = Point{rand_rational(rng, -6, 6, 2), rand_rational(rng, 1, 4, 2)};
  if (b4 == b5) return std::nullopt;

  auto cross = [](const Point& p1, const Point& q1, const Point& p2,
                  const Point& q2) -> std::optional<Point> {
    if (p1 == q1 || p2 == q2) return std::nullopt;
    return line_intersection(Line::through(p1, q1), Line::through(p2, q2));
  };
  Rational slope = rand_rational(rng, -3, 3, 3);
  Rational t = rand_rational(rng, 2, 4, 2);

  Point b1, b2, b3;
  switch (label) {
    case CaseLabel::f3_ia: {
      auto i1 = cross(a1, b5, a2, b4);
      auto i2 = cross(a3, b5, a4, b4);
      if (!i1 || !i2 || *i1 == *i2) return std::nullopt;
      b1 = *i1;
      b2 = *i2;
      b3 = point_on(b1, b2, t);
      break;
    }
    case CaseLabel::f3_ib: {
      auto i2 = cross(a2, b5, a3, b4);
      if (!i2) return std::nullopt;
      b2 = *i2;
      Point dir = Point{b2.x + 1, b2.y + slope};
      if (dir == b2) return std::nullopt;
      auto i1 = cross(b2, dir, a1, b4);
      auto i3 = cross(b2, dir, a4, b5);
      if (!i1 || !i3) return std::nullopt;
      b1 = *i1;
      b3 = *i3;
      break;
    }
    case CaseLabel::f3_iia: {
      Point dir = Point{a1.x + 1, a1.y + slope};
      auto i1 = cross(a1, dir, a2, b4);
      auto i2 = cross(a1, dir, a3, b4);
      auto i3 = cross(a1, dir, a4, b5);
      if (!i1 || !i2 || !i3) return std::nullopt;
      b1 = *i1;
      b2 = *i2;
      b3 = *i3;
      break;
    }
    case CaseLabel::f3_iib: {
      b5 = point_on(a2, b4, t);
      Point dir = Point{a1.x + 1, a1.y + slope};
      auto i3 = cross(a1, dir, a2, b4);
      auto i1 = cross(a1, dir, a3, b4);
      auto i2 = cross(a1, dir, a4, b5);
      if (!i1 || !i2 || !i3) return std::nullopt;
      b1 = *i1;
      b2 = *i2;
      b3 = *i3;
      break;
    }
    default:
      throw std::invalid_argument("constructions exist for the four-collinear classes only");
  }

  std::vector<Point> pts{a1, a2, a3, a4, b1, b2, b3, b4, b5};
  for (std::size_t i = 0; i < pts.size(); ++i)
    for (std::size_t j = i + 1; j < pts.size(); ++j)
      if (pts[i] == pts[j]) return std::nullopt;
  PointConfig cfg = PointConfig::build(std::move(pts));
  try {
    if (classify_case(cfg, 3) != label) return std::nullopt;
  } catch (const not_shattered_error&) {
    return std::nullopt;
  }
  return cfg;
}

}  // namespace

PointConfig construct_case(CaseLabel label, Rng& rng) {
  if (label != CaseLabel::f3_ia && label != CaseLabel::f3_ib && label != CaseLabel::f3_iia &&
      label != CaseLabel::f3_iib)
    throw std::invalid_argument("constructions exist for the four-collinear classes only");
  for (int attempt = 0; attempt < kRetries; ++attempt) {
    std::optional<PointConfig> cfg = try_construct(label, rng);
    if (!cfg) continue;
    if (rng.chance(1, 2)) return apply_map(random_affine_map(rng), *cfg);
    return *cfg;
  }
  throw std::logic_error("construction kept degenerating");
}

namespace {

// Moves one point to a fresh spot on one of its cover lines, keeping the
// cover (and so the cover bound) intact.
PointConfig perturb_on_cover(Rng& rng, const PointConfig& cfg) {
  auto [m, cover] = min_line_cover(cfg);
  std::vector<int> line_indices;
  for (const LineClass& lc : cover)
    if (lc.is_line()) line_indices.push_back(lc.index);
  if (line_indices.empty()) return cfg;
  int li = line_indices[rng.below(line_indices.size())];
  std::vector<int> on = mask_indices(cfg.lines()[li].trace);
  int victim = on[rng.below(on.size())];
  const Point& p = cfg.point(on[0]);
  const Point& q = cfg.point(on[1]);
  for (int tries = 0; tries < 50; ++tries) {
    Point np = point_on(p, q, rand_rational(rng, -4, 4, 3));
    if (np == cfg.point(victim)) continue;
    std::vector<Point> pts = cfg.points();
    pts[victim] = np;
    bool dup = false;
    for (std::size_t i = 0; i < pts.size() && !dup; ++i)
      for (std::size_t j = i + 1; j < pts.size() && !dup; ++j) dup = pts[i] == pts[j];
    if (!dup) return PointConfig::build(std::move(pts));
  }
  return cfg;
}

}  // namespace

PointConfig equivalence_sample9(Rng& rng, int span, int lines) {
  static const CaseLabel four_collinear[] = {CaseLabel::f3_ia, CaseLabel::f3_ib,
                                             CaseLabel::f3_iia, CaseLabel::f3_iib};
  int roll = static_cast<int>(rng.below(100));
  if (roll < 30) return random_on_lines(rng, 9, lines, span);
  if (roll < 50) {
    auto reps = representatives(3);
    return apply_map(random_affine_map(rng), reps[rng.below(reps.size())].second);
  }
  if (roll < 65) return construct_case(four_collinear[rng.below(4)], rng);
  if (roll < 75) return apply_map(random_affine_map(rng), x_configuration());
  if (roll < 85) {
    auto reps = representatives(3);
    return perturb_on_cover(rng, reps[rng.below(reps.size())].second);
  }
  std::vector<int> sizes{4, 3, 2};
  std::swap(sizes[0], sizes[rng.below(3)]);
  return sized_lines(rng, std::move(sizes), span);
}

PointConfig equivalence_sample5(Rng& rng, int span, int lines) {
  int roll = static_cast<int>(rng.below(100));
  if (roll < 35) return random_on_lines(rng, 5, lines, span);
  if (roll < 55) {
    auto reps = representatives(2);
    return apply_map(random_affine_map(rng), reps[rng.below(reps.size())].second);
  }
  if (roll < 70) return sized_lines(rng, {4, 1}, span);
  if (roll < 78) return sized_lines(rng, {5}, span);
  if (roll < 88) return random_distinct_config(rng, 5, span);
  auto reps = representatives(2);
  return perturb_on_cover(rng, reps[rng.below(reps.size())].second);
}

MatchingInstance matching_lemma_instance(Rng& rng) {
  for (int attempt = 0; attempt < kRetries; ++attempt) {
    Point p = rand_point(rng, -8, 8, 2);
    Point q = rand_point(rng, -8, 8, 2);
    if (p == q) continue;

    std::vector<Point> pts;
    std::vector<Rational> used;
    while (pts.size() < 3) {
      Rational t = rand_rational(rng, -4, 4, 3);
      if (std::find(used.begin(), used.end(), t) != used.end()) continue;
      used.push_back(t);
      pts.push_back(point_on(p, q, t));
    }
    bool bad = false;
    for (int i = 0; i < 3 && !bad; ++i) {
      Point r = rand_point(rng, -8, 8, 2);
      if (has_point(pts, r))
        bad = true;
      else
        pts.push_back(std::move(r));
    }
    if (bad) continue;
    for (int i = 0; i < 2 && !bad; ++i) {
      Point spare;
      if (rng.chance(1, 2)) {
        // Plant the spare on a pair line to force bad pairs.
        const Point& a = pts[rng.below(3)];
        const Point& b = pts[3 + rng.below(3)];
        spare = point_on(a, b, rand_rational(rng, 2, 4, 3));
      } else {
        spare = rand_point(rng, -8, 8, 2);
      }
      if (has_point(pts, spare))
        bad = true;
      else
        pts.push_back(std::move(spare));
    }
    if (bad) continue;

    PointConfig cfg = PointConfig::build(std::move(pts));
    if (cfg.collin() >= 4) continue;
    Mask a = 0b111, b = 0b111000;
    if (!bad_quadruples(cfg, a, b).empty()) continue;
    return MatchingInstance{std::move(cfg), a, b};
  }
  throw std::logic_error("matching instance generation kept degenerating");
}

PointConfig case_a_corpus_sample(Rng& rng) {
  static const CaseLabel four_collinear[] = {CaseLabel::f3_ia, CaseLabel::f3_ib,
                                             CaseLabel::f3_iia, CaseLabel::f3_iib};
  for (int attempt = 0; attempt < kRetries; ++attempt) {
    PointConfig cfg = construct_case(four_collinear[rng.below(4)], rng);
    if (cfg.collin() < 4) continue;
    if (!check_O(cfg).holds || !check_A1(cfg).holds || !check_A2(cfg).holds) continue;
    return cfg;
  }
  throw std::logic_error("corpus generation kept degenerating");
}

namespace {

Vec rand_vec3(Rng& rng, int span, int max_den) {
  return {rand_rational(rng, -span, span, max_den), rand_rational(rng, -span, span, max_den),
          rand_rational(rng, -span, span, max_den)};
}

bool vec_is_zero(const Vec& v) {
  return std::all_of(v.begin(), v.end(), [](const Rational& x) { return x == 0; });
}

AffineConfig transform3(Rng& rng, const AffineConfig& cfg) {
  Mat m;
  for (;;) {
    m = {rand_vec3(rng, 2, 2), rand_vec3(rng, 2, 2), rand_vec3(rng, 2, 2)};
    Mat copy = m;
    if (rref(copy).size() == 3) break;
  }
  Vec t = rand_vec3(rng, 4, 2);
  auto map = [&](const Vec& v) {
    Vec out(3);
    for (int i = 0; i < 3; ++i) out[i] = dot(m[i], v) + t[i];
    return out;
  };
  auto map_dir = [&](const Vec& v) {
    Vec out(3);
    for (int i = 0; i < 3; ++i) out[i] = dot(m[i], v);
    return out;
  };
  std::vector<AffineSubspace> els;
  for (const AffineSubspace& e : cfg.elements) {
    Mat dirs;
    for (const Vec& b : e.basis) dirs.push_back(map_dir(b));
    els.push_back(AffineSubspace::make(map(e.offset), std::move(dirs)));
  }
  return AffineConfig::build(3, std::move(els));
}

}  // namespace

// The dimension reduction is structure-faithful only when every pair of
// elements spans a hyperplane, so all branches below emit pairwise coplanar
// line families: parallel classes, pencils through a point, or lines inside
// one plane. Skew pairs would gain a common line after reduction that no
// source hyperplane matches.
AffineConfig random_affine3_instance(Rng& rng, int max_elements) {
  for (int attempt = 0; attempt < kRetries; ++attempt) {
    try {
      int roll = static_cast<int>(rng.below(100));
      if (roll < 45) {
        int n = static_cast<int>(rng.range(3, max_elements));
        PointConfig planar = rng.chance(1, 2)
                                 ? random_on_lines(rng, n, static_cast<int>(rng.range(1, 3)))
                                 : random_distinct_config(rng, n);
        return transform3(rng, lift_planar(planar));
      }
      std::vector<AffineSubspace> els;
      int n = static_cast<int>(rng.range(2, max_elements));
      if (roll < 70) {
        Vec apex = rand_vec3(rng, 5, 2);
        for (int i = 0; i < n; ++i) {
          Vec dir = rand_vec3(rng, 3, 1);
          if (vec_is_zero(dir)) throw std::invalid_argument("degenerate direction");
          els.push_back(AffineSubspace::make(apex, {std::move(dir)}));
        }
      } else if (roll < 85) {
        AffineSubspace plane =
            AffineSubspace::make(rand_vec3(rng, 5, 2), {rand_vec3(rng, 3, 1), rand_vec3(rng, 3, 1)});
        if (plane.dim() != 2) throw std::invalid_argument("degenerate plane");
        for (int i = 0; i < n; ++i) {
          Vec off = plane.offset;
          off = vec_add(off, vec_scale(rand_rational(rng, -3, 3, 2), plane.basis[0]));
          off = vec_add(off, vec_scale(rand_rational(rng, -3, 3, 2), plane.basis[1]));
          Vec dir = vec_add(vec_scale(rand_rational(rng, -2, 2, 1), plane.basis[0]),
                            vec_scale(rand_rational(rng, -2, 2, 1), plane.basis[1]));
          if (vec_is_zero(dir)) throw std::invalid_argument("degenerate direction");
          els.push_back(AffineSubspace::make(std::move(off), {std::move(dir)}));
        }
      } else {
        Vec dir = rand_vec3(rng, 3, 1);
        if (vec_is_zero(dir)) throw std::invalid_argument("degenerate direction");
        for (int i = 0; i < n; ++i)
          els.push_back(AffineSubspace::make(rand_vec3(rng, 5, 2), {dir}));
      }
      std::vector<AffineSubspace> unique;
      for (AffineSubspace& e : els)
        if (std::find(unique.begin(), unique.end(), e) == unique.end())
          unique.push_back(std::move(e));
      if (unique.size() < 2) continue;
      return transform3(rng, AffineConfig::build(3, std::move(unique)));
    } catch (const std::invalid_argument&) {
      continue;
    }
  }
  throw std::logic_error("affine instance generation kept degenerating");
}

FiniteSetSystem random_intersection_closed(Rng& rng, int ground) {
  Mask full = full_mask(ground);
  std::set<Mask> fam;
  int k = static_cast<int>(rng.range(3, 6));
  for (int i = 0; i < k; ++i) fam.insert(static_cast<Mask>(rng.next()) & full);
  if (rng.chance(1, 2)) fam.insert(full);
  bool grew = true;
  while (grew) {
    grew = false;
    std::vector<Mask> cur(fam.begin(), fam.end());
    for (std::size_t i = 0; i < cur.size(); ++i)
      for (std::size_t j = i + 1; j < cur.size(); ++j)
        if (fam.insert(cur[i] & cur[j]).second) grew = true;
  }
  return make_system(ground, std::vector<Mask>(fam.begin(), fam.end()));
}

}  // namespace vclines
