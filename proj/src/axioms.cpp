#include "vclines/axioms.hpp"

#include "vclines/iso.hpp"

#include <algorithm>
#include <stdexcept>

namespace vclines {

namespace {

// 4-subsets of [0, n) as masks, in lexicographic order of index lists.
template <typename F>
void for_each_quad(int n, F&& fn) {
  for (int a = 0; a < n; ++a)
    for (int b = a + 1; b < n; ++b)
      for (int c = b + 1; c < n; ++c)
        for (int d = c + 1; d < n; ++d)
          if (!fn(bit(a) | bit(b) | bit(c) | bit(d))) return;
}

void require_no_four_collinear(const PointConfig& cfg, const char* who) {
  if (cfg.collin() > 3)
    throw std::invalid_argument(std::string(who) + " requires collin(P) <= 3");
}

}  // namespace

AxiomVerdict check_O(const PointConfig& cfg) {
  AxiomVerdict v;
  v.condition = "O";
  auto [m, cover] = min_line_cover(cfg);
  if (m > 3) {
    v.holds = false;
    v.cover = cover;
  }
  return v;
}

std::pair<AxiomVerdict, AxiomVerdict> check_F2(const PointConfig& cfg) {
  if (cfg.size() != 5) throw std::invalid_argument("F2 conditions are for 5-point configs");
  AxiomVerdict cov;
  cov.condition = "F2-cover";
  auto [m, cover] = min_line_cover(cfg);
  if (m > 2) {
    cov.holds = false;
    cov.cover = cover;
  }
  AxiomVerdict no4;
  no4.condition = "F2-no-4-collinear";
  if (cfg.collin() > 3) {
    no4.holds = false;
    for (const auto& lt : cfg.lines())
      if (popcount(lt.trace) >= 4) {
        no4.subset = lt.trace;
        break;
      }
  }
  return {cov, no4};
}

AxiomVerdict check_A1(const PointConfig& cfg) {
  AxiomVerdict v;
  v.condition = "A1";
  for_each_quad(cfg.size(), [&](Mask quad) {
    auto idx = mask_indices(quad);
    for (size_t i = 0; i < idx.size(); ++i)
      for (size_t j = i + 1; j < idx.size(); ++j)
        if (pairs_inside(cfg, quad, idx[i], idx[j])) return true;
    v.holds = false;
    v.subset = quad;
    return false;
  });
  return v;
}

AxiomVerdict check_A2(const PointConfig& cfg) {
  AxiomVerdict v;
  v.condition = "A2";
  for (int li = 0; li < static_cast<int>(cfg.lines().size()) && v.holds; ++li) {
    if (popcount(cfg.lines()[li].trace) < 4) continue;
    for (int p : mask_indices(cfg.lines()[li].trace)) {
      bool found = false;
      for (int lj : cfg.lines_through(p))
        if (lj != li && popcount(cfg.lines()[lj].trace) >= 3) {
          found = true;
          break;
        }
      if (!found) {
        v.holds = false;
        v.line_and_point = {li, p};
        break;
      }
    }
  }
  return v;
}

AxiomVerdict check_B1(const PointConfig& cfg) {
  require_no_four_collinear(cfg, "B1");
  AxiomVerdict v;
  v.condition = "B1";
  auto [m, witness] = min_line_cover(cfg);
  (void)witness;
  for (const Cover& cover : all_covers(cfg, m)) {
    auto cross = cross_lines(cfg, cover);
    for (int p = 0; p < cfg.size(); ++p) {
      int deg = 0;
      for (int li : cross)
        if (cfg.lines()[li].trace & bit(p)) ++deg;
      if (deg != 2) {
        v.holds = false;
        v.cover = cover;
        v.point = p;
        return v;
      }
    }
  }
  return v;
}

AxiomVerdict check_B2(const PointConfig& cfg, B2Reading reading) {
  require_no_four_collinear(cfg, "B2");
  AxiomVerdict v;
  v.condition = "B2";
  auto [m, witness] = min_line_cover(cfg);
  (void)witness;
  for (const Cover& cover : all_covers(cfg, m)) {
    auto cross = cross_lines(cfg, cover);
    auto meets = [&](int li, int lj) {
      if (reading == B2Reading::within_config)
        return (cfg.lines()[li].trace & cfg.lines()[lj].trace) != 0;
      return !parallel(cfg.lines()[li].line, cfg.lines()[lj].line);
    };
    bool found = false;
    for (int y = 0; y < cfg.size() && !found; ++y) {
      std::vector<int> through, avoiding;
      for (int li : cross)
        (cfg.lines()[li].trace & bit(y) ? through : avoiding).push_back(li);
      for (size_t i = 0; i < through.size() && !found; ++i)
        for (size_t j = i + 1; j < through.size() && !found; ++j)
          for (int l : avoiding)
            if (meets(l, through[i]) && meets(l, through[j])) {
              found = true;
              break;
            }
    }
    if (!found) {
      v.holds = false;
      v.cover = cover;
      return v;
    }
  }
  return v;
}

std::optional<std::vector<int>> is_x_configuration(const PointConfig& cfg) {
  if (cfg.size() != 9) throw std::invalid_argument("the X-configuration has 9 points");
  std::vector<Mask> triples;
  for (const auto& lt : cfg.lines()) {
    int sz = popcount(lt.trace);
    if (sz >= 4) return std::nullopt;
    if (sz == 3) triples.push_back(lt.trace);
  }
  if (triples.size() != 9) return std::nullopt;
  // Roles 0..8 = a1,a2,a3,b1,b2,b3,c1,c2,c3.
  const std::vector<Mask> target = {
      bit(0) | bit(1) | bit(2), bit(3) | bit(4) | bit(5), bit(6) | bit(7) | bit(8),
      bit(0) | bit(3) | bit(7), bit(0) | bit(4) | bit(8), bit(1) | bit(3) | bit(6),
      bit(1) | bit(5) | bit(8), bit(2) | bit(4) | bit(6), bit(2) | bit(5) | bit(7)};
  auto f = find_structure_bijection(9, triples, target);
  if (!f) return std::nullopt;
  std::vector<int> labeling(9, -1);
  for (int p = 0; p < 9; ++p) labeling[(*f)[p]] = p;
  return labeling;
}

F3Characterization characterize_F3(const PointConfig& cfg, B2Reading reading) {
  if (cfg.size() != 9) throw std::invalid_argument("characterize_F3 needs 9 points");
  F3Characterization out;
  out.o = check_O(cfg);
  out.has_four_collinear = cfg.collin() >= 4;
  if (out.has_four_collinear) {
    out.a1 = check_A1(cfg);
    out.a2 = check_A2(cfg);
    out.predicted_shattered = out.o.holds && out.a1->holds && out.a2->holds;
  } else {
    out.b1 = check_B1(cfg);
    out.b2 = check_B2(cfg, reading);
    out.predicted_shattered = out.o.holds && out.b1->holds && out.b2->holds;
  }
  return out;
}

}  // namespace vclines
