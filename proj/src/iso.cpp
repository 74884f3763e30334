#include "vclines/iso.hpp"

#include "vclines/shatter.hpp"

#include <algorithm>
#include <map>
#include <stdexcept>
#include <string>

namespace vclines {

ShatterStructure shatter_structure(const PointConfig& cfg) {
  ShatterStructure s;
  s.n = cfg.size();
  for (const auto& lt : cfg.lines()) s.classes.push_back(lt.trace);
  return s;
}

namespace {

std::vector<Mask> canonical_classes(std::vector<Mask> classes) {
  std::sort(classes.begin(), classes.end(), subset_lex_less);
  classes.erase(std::unique(classes.begin(), classes.end()), classes.end());
  return classes;
}

// Per-point invariant: sorted sizes of the classes through the point.
std::vector<std::vector<int>> point_profiles(int n, const std::vector<Mask>& classes) {
  std::vector<std::vector<int>> prof(n);
  for (Mask c : classes)
    for (int p : mask_indices(c)) prof[p].push_back(popcount(c));
  for (auto& v : prof) std::sort(v.begin(), v.end());
  return prof;
}

// Pair invariant: sorted sizes of the classes through both points.
std::vector<std::vector<std::vector<int>>> pair_profiles(int n, const std::vector<Mask>& classes) {
  std::vector<std::vector<std::vector<int>>> prof(n, std::vector<std::vector<int>>(n));
  for (Mask c : classes) {
    auto idx = mask_indices(c);
    for (size_t i = 0; i < idx.size(); ++i)
      for (size_t j = i + 1; j < idx.size(); ++j) {
        prof[idx[i]][idx[j]].push_back(popcount(c));
        prof[idx[j]][idx[i]].push_back(popcount(c));
      }
  }
  for (auto& row : prof)
    for (auto& v : row) std::sort(v.begin(), v.end());
  return prof;
}

}  // namespace

std::optional<std::vector<int>> find_structure_bijection(int n, std::vector<Mask> from,
                                                         std::vector<Mask> to) {
  from = canonical_classes(std::move(from));
  to = canonical_classes(std::move(to));
  if (from.size() != to.size()) return std::nullopt;

  std::vector<int> size_a, size_b;
  for (Mask c : from) size_a.push_back(popcount(c));
  for (Mask c : to) size_b.push_back(popcount(c));
  std::sort(size_a.begin(), size_a.end());
  std::sort(size_b.begin(), size_b.end());
  if (size_a != size_b) return std::nullopt;

  auto prof_a = point_profiles(n, from);
  auto prof_b = point_profiles(n, to);
  {
    auto sa = prof_a;
    auto sb = prof_b;
    std::sort(sa.begin(), sa.end());
    std::sort(sb.begin(), sb.end());
    if (sa != sb) return std::nullopt;
  }
  auto pair_a = pair_profiles(n, from);
  auto pair_b = pair_profiles(n, to);

  // Assign rare profiles first.
  std::map<std::vector<int>, int> freq;
  for (const auto& pr : prof_a) ++freq[pr];
  std::vector<int> order(n);
  for (int i = 0; i < n; ++i) order[i] = i;
  std::sort(order.begin(), order.end(), [&](int x, int y) {
    if (freq[prof_a[x]] != freq[prof_a[y]]) return freq[prof_a[x]] < freq[prof_a[y]];
    return x < y;
  });

  std::vector<int> f(n, -1);
  std::vector<bool> used(n, false);

  auto whole_map_ok = [&]() {
    std::vector<Mask> mapped;
    for (Mask c : from) {
      Mask m = 0;
      for (int p : mask_indices(c)) m |= bit(f[p]);
      mapped.push_back(m);
    }
    return canonical_classes(std::move(mapped)) == to;
  };

  auto rec = [&](auto&& self, int pos) -> bool {
    if (pos == n) return whole_map_ok();
    int p = order[pos];
    for (int q = 0; q < n; ++q) {
      if (used[q] || prof_a[p] != prof_b[q]) continue;
      bool ok = true;
      for (int pos2 = 0; pos2 < pos && ok; ++pos2) {
        int p2 = order[pos2];
        ok = pair_a[p][p2] == pair_b[q][f[p2]];
      }
      if (!ok) continue;
      f[p] = q;
      used[q] = true;
      if (self(self, pos + 1)) return true;
      f[p] = -1;
      used[q] = false;
    }
    return false;
  };

  if (!rec(rec, 0)) return std::nullopt;
  return f;
}

std::optional<IsoCertificate> shatter_isomorphic(const ShatterStructure& s,
                                                 const ShatterStructure& t) {
  if (s.n != t.n) return std::nullopt;
  auto f = find_structure_bijection(s.n, s.classes, t.classes);
  if (!f) return std::nullopt;
  IsoCertificate cert;
  cert.bijection = *f;
  for (size_t ci = 0; ci < s.classes.size(); ++ci) {
    Mask m = 0;
    for (int p : mask_indices(s.classes[ci])) m |= bit(cert.bijection[p]);
    auto it = std::find(t.classes.begin(), t.classes.end(), m);
    if (it == t.classes.end()) throw std::logic_error("bijection does not map classes");
    cert.class_map.emplace_back(static_cast<int>(ci),
                                static_cast<int>(it - t.classes.begin()));
  }
  return cert;
}

bool iso_certificate_valid(const ShatterStructure& s, const ShatterStructure& t,
                           const IsoCertificate& cert) {
  if (s.n != t.n || static_cast<int>(cert.bijection.size()) != s.n) return false;
  std::vector<bool> seen(s.n, false);
  for (int v : cert.bijection) {
    if (v < 0 || v >= s.n || seen[v]) return false;
    seen[v] = true;
  }
  std::vector<Mask> mapped;
  for (Mask c : s.classes) {
    Mask m = 0;
    for (int p : mask_indices(c)) m |= bit(cert.bijection[p]);
    mapped.push_back(m);
  }
  if (canonical_classes(std::move(mapped)) != canonical_classes(t.classes)) return false;
  for (auto [ci, cj] : cert.class_map) {
    if (ci < 0 || ci >= static_cast<int>(s.classes.size())) return false;
    if (cj < 0 || cj >= static_cast<int>(t.classes.size())) return false;
    Mask m = 0;
    for (int p : mask_indices(s.classes[ci])) m |= bit(cert.bijection[p]);
    if (m != t.classes[cj]) return false;
  }
  return true;
}

const char* case_label_str(CaseLabel label) {
  switch (label) {
    case CaseLabel::f2_i: return "F2-I";
    case CaseLabel::f2_ii: return "F2-II";
    case CaseLabel::f3_ia: return "F3-Ia";
    case CaseLabel::f3_ib: return "F3-Ib";
    case CaseLabel::f3_iia: return "F3-IIa";
    case CaseLabel::f3_iib: return "F3-IIb";
    case CaseLabel::f3_iii: return "F3-III";
  }
  return "?";
}

std::optional<CaseLabel> parse_case_label(std::string_view s) {
  for (CaseLabel l : {CaseLabel::f2_i, CaseLabel::f2_ii, CaseLabel::f3_ia, CaseLabel::f3_ib,
                      CaseLabel::f3_iia, CaseLabel::f3_iib, CaseLabel::f3_iii})
    if (s == case_label_str(l)) return l;
  return std::nullopt;
}

CaseLabel classify_case(const PointConfig& cfg, int k) {
  if (k == 2) {
    if (cfg.size() != 5) throw std::invalid_argument("k = 2 classification needs 5 points");
    if (!shatters(cfg, 2).shattered) throw not_shattered_error("config is not shattered (k = 2)");
    int triples = 0;
    for (const auto& lt : cfg.lines())
      if (popcount(lt.trace) == 3) ++triples;
    return triples == 1 ? CaseLabel::f2_i : CaseLabel::f2_ii;
  }
  if (k != 3) throw std::invalid_argument("classification supports k = 2 and k = 3 only");
  if (cfg.size() != 9) throw std::invalid_argument("k = 3 classification needs 9 points");
  if (!shatters(cfg, 3).shattered) throw not_shattered_error("config is not shattered (k = 3)");

  std::vector<Mask> fours;
  for (const auto& lt : cfg.lines())
    if (popcount(lt.trace) == 4) fours.push_back(lt.trace);

  switch (fours.size()) {
    case 0: return CaseLabel::f3_iii;
    case 2: return CaseLabel::f3_iia;
    case 3: return CaseLabel::f3_iib;
    case 1: break;
    default: throw std::logic_error("shattered 9-set with more than three 4-point lines");
  }

  // One 4-point line: split on how the diagonals meet the collinear triple
  // off it. The five points off the 4-line carry a unique 3-point trace; the
  // remaining big traces are the four 3-point diagonals.
  Mask la = fours[0];
  Mask rest = cfg.all() & ~la;
  Mask lb = 0;
  std::vector<Mask> diagonals;
  for (const auto& lt : cfg.lines()) {
    if (popcount(lt.trace) < 3 || lt.trace == la) continue;
    if ((lt.trace & ~rest) == 0) {
      if (lb) throw std::logic_error("two collinear triples off the 4-line");
      lb = lt.trace;
    } else {
      diagonals.push_back(lt.trace);
    }
  }
  if (!lb || diagonals.size() != 4)
    throw std::logic_error("unexpected trace pattern for a shattered 9-set");
  std::vector<int> degs;
  for (int p : mask_indices(lb)) {
    int d = 0;
    for (Mask k3 : diagonals)
      if (k3 & bit(p)) ++d;
    degs.push_back(d);
  }
  std::sort(degs.begin(), degs.end());
  if (degs == std::vector<int>{0, 2, 2}) return CaseLabel::f3_ia;
  if (degs == std::vector<int>{1, 1, 2}) return CaseLabel::f3_ib;
  throw std::logic_error("unexpected diagonal degrees for a shattered 9-set");
}

namespace {

PointConfig config_of(std::vector<std::pair<Rational, Rational>> coords) {
  std::vector<Point> pts;
  for (auto& [x, y] : coords) pts.push_back({x, y});
  return PointConfig::build(std::move(pts));
}

}  // namespace

std::vector<std::pair<CaseLabel, PointConfig>> representatives(int k) {
  if (k == 2)
    return {
        {CaseLabel::f2_i, config_of({{0, 0}, {2, 0}, {4, 0}, {1, 2}, {3, 2}})},
        {CaseLabel::f2_ii, config_of({{0, 0}, {2, 0}, {4, 0}, {0, 2}, {0, 4}})},
    };
  if (k != 3) throw std::invalid_argument("representatives supports k = 2 and k = 3 only");
  return {
      {CaseLabel::f3_ia,
       config_of({{2, 2}, {4, 2}, {6, 2}, {8, 2}, {4, 3}, {6, 3}, {8, 3}, {4, 4}, {6, 4}})},
      {CaseLabel::f3_ib,
       config_of({{2, 2}, {4, 2}, {6, 2}, {8, 2}, {3, 3}, {5, 3}, {7, 3}, {4, 4}, {6, 4}})},
      {CaseLabel::f3_iia,
       config_of({{2, 4}, {5, 5}, {8, 6}, {11, 7}, {5, 3}, {8, 2}, {11, 1}, {6, 4}, {11, 5}})},
      {CaseLabel::f3_iib,
       config_of({{2, 1}, {4, 1}, {6, 1}, {8, 1}, {2, 3}, {2, 5}, {2, 7}, {3, 4}, {5, 2}})},
      {CaseLabel::f3_iii,
       config_of({{0, 0},
                  {3, 0},
                  {6, 0},
                  {Rational(3, 2), 3},
                  {3, 3},
                  {6, 3},
                  {3, 6},
                  {4, 2},
                  {6, -6}})},
  };
}

}  // namespace vclines
