#include "vclines/incidence.hpp"

#include "vclines/shatter.hpp"

#include <algorithm>
#include <stdexcept>

namespace vclines {

Mask class_trace(const PointConfig& cfg, const LineClass& lc) {
  if (lc.is_line()) return cfg.lines().at(lc.index).trace;
  if (lc.index < 0 || lc.index >= cfg.size()) throw std::out_of_range("singleton point index");
  return bit(lc.index);
}

LineClass class_for_trace(const PointConfig& cfg, Mask t) {
  if (popcount(t) == 1) return LineClass::singleton(lowest_bit(t));
  for (int li = 0; li < static_cast<int>(cfg.lines().size()); ++li)
    if (cfg.lines()[li].trace == t) return LineClass::line(li);
  throw std::logic_error("trace has no backing line class");
}

namespace {

struct CandidateList {
  std::vector<Mask> traces;
  std::vector<LineClass> classes;
};

CandidateList cover_candidates(const PointConfig& cfg) {
  CandidateList out;
  for (int p = 0; p < cfg.size(); ++p) {
    out.traces.push_back(bit(p));
    out.classes.push_back(LineClass::singleton(p));
  }
  for (int li = 0; li < static_cast<int>(cfg.lines().size()); ++li) {
    out.traces.push_back(cfg.lines()[li].trace);
    out.classes.push_back(LineClass::line(li));
  }
  std::vector<int> order(out.traces.size());
  for (size_t i = 0; i < order.size(); ++i) order[i] = static_cast<int>(i);
  std::sort(order.begin(), order.end(),
            [&](int x, int y) { return subset_lex_less(out.traces[x], out.traces[y]); });
  CandidateList sorted;
  for (int i : order) {
    sorted.traces.push_back(out.traces[i]);
    sorted.classes.push_back(out.classes[i]);
  }
  return sorted;
}

void require_cover(const PointConfig& cfg, const Cover& cover) {
  Mask u = 0;
  for (const LineClass& lc : cover) u |= class_trace(cfg, lc);
  if (u != cfg.all()) throw std::invalid_argument("line classes do not cover the config");
}

}  // namespace

std::pair<int, Cover> min_line_cover(const PointConfig& cfg) {
  TraceFamily fam = family_of(cfg);
  auto codes = fam.isolation_cover(cfg.all(), cfg.size());
  Cover cover;
  for (int code : *codes) cover.push_back(class_for_trace(cfg, fam.code_trace(code)));
  return {static_cast<int>(cover.size()), cover};
}

std::vector<Cover> all_covers(const PointConfig& cfg, int k) {
  if (k < 0) throw std::invalid_argument("cover size must be >= 0");
  CandidateList cands = cover_candidates(cfg);
  int m = static_cast<int>(cands.traces.size());
  std::vector<Cover> out;
  Mask all = cfg.all();
  std::vector<int> idx;
  auto rec = [&](auto&& self, int start, Mask covered) -> void {
    if (static_cast<int>(idx.size()) == k) {
      if (covered == all) {
        Cover c;
        for (int i : idx) c.push_back(cands.classes[i]);
        out.push_back(std::move(c));
      }
      return;
    }
    int need = k - static_cast<int>(idx.size());
    for (int i = start; i + need <= m; ++i) {
      idx.push_back(i);
      self(self, i + 1, covered | cands.traces[i]);
      idx.pop_back();
    }
  };
  rec(rec, 0, 0);
  return out;
}

bool pairs_inside(const PointConfig& cfg, Mask a, int i, int j) {
  if (i == j || !(a & bit(i)) || !(a & bit(j)))
    throw std::invalid_argument("pairs_inside needs two distinct members of the subset");
  return (cfg.lines()[cfg.line_between(i, j)].trace & ~a) == 0;
}

std::vector<Line> ordinary_lines(const PointConfig& cfg, const Line& l, int n) {
  if (n < 2) throw std::invalid_argument("ordinary_lines requires n >= 2");
  Mask lt = 0;
  for (int p = 0; p < cfg.size(); ++p)
    if (l.contains(cfg.point(p))) lt |= bit(p);
  std::vector<Line> out;
  for (const auto& cand : cfg.lines())
    if (popcount(cand.trace) == n && popcount(cand.trace & lt) == 1) out.push_back(cand.line);
  return out;
}

std::vector<int> cross_lines(const PointConfig& cfg, const Cover& cover) {
  require_cover(cfg, cover);
  std::vector<Mask> traces;
  for (const LineClass& lc : cover) traces.push_back(class_trace(cfg, lc));
  std::vector<int> out;
  for (int li = 0; li < static_cast<int>(cfg.lines().size()); ++li) {
    Mask t = cfg.lines()[li].trace;
    bool ok = true;
    for (Mask ct : traces)
      if (popcount(t & ct) != 1) {
        ok = false;
        break;
      }
    if (ok) out.push_back(li);
  }
  return out;
}

int node_degree(const PointConfig& cfg, const Cover& cover, int p) {
  if (p < 0 || p >= cfg.size()) throw std::out_of_range("node_degree point index");
  int deg = 0;
  for (int li : cross_lines(cfg, cover))
    if (cfg.lines()[li].trace & bit(p)) ++deg;
  return deg;
}

std::vector<std::pair<int, int>> bad_pairs(const PointConfig& cfg, Mask a, Mask b) {
  if (a & b) throw std::invalid_argument("bad_pairs requires disjoint sets");
  Mask outside = cfg.all() & ~(a | b);
  std::vector<std::pair<int, int>> out;
  for (int i : mask_indices(a))
    for (int j : mask_indices(b))
      if (cfg.lines()[cfg.line_between(i, j)].trace & outside) out.emplace_back(i, j);
  return out;
}

std::vector<std::array<int, 4>> bad_quadruples(const PointConfig& cfg, Mask a, Mask b) {
  auto bad = bad_pairs(cfg, a, b);
  auto is_bad = [&](int i, int j) {
    return std::find(bad.begin(), bad.end(), std::make_pair(i, j)) != bad.end();
  };
  std::vector<std::array<int, 4>> out;
  auto ai = mask_indices(a);
  auto bi = mask_indices(b);
  for (size_t x = 0; x < ai.size(); ++x)
    for (size_t y = x + 1; y < ai.size(); ++y)
      for (size_t u = 0; u < bi.size(); ++u)
        for (size_t v = u + 1; v < bi.size(); ++v)
          if (is_bad(ai[x], bi[u]) && is_bad(ai[x], bi[v]) && is_bad(ai[y], bi[u]) &&
              is_bad(ai[y], bi[v]))
            out.push_back({ai[x], ai[y], bi[u], bi[v]});
  return out;
}

std::optional<Matching> find_matching(const PointConfig& cfg, Mask a, Mask b) {
  if (a & b) throw std::invalid_argument("find_matching requires disjoint sets");
  Mask outside = cfg.all() & ~(a | b);
  auto small = mask_indices(popcount(a) <= popcount(b) ? a : b);
  auto large = mask_indices(popcount(a) <= popcount(b) ? b : a);

  auto usable = [&](int i, int j) {
    Mask t = cfg.lines()[cfg.line_between(i, j)].trace;
    return (t & outside) == 0 && popcount(t & a) == 1 && popcount(t & b) == 1;
  };

  std::vector<int> partner(small.size(), -1);
  std::vector<bool> used(large.size(), false);
  auto rec = [&](auto&& self, size_t i) -> bool {
    if (i == small.size()) return true;
    for (size_t j = 0; j < large.size(); ++j) {
      if (used[j] || !usable(small[i], large[j])) continue;
      used[j] = true;
      partner[i] = static_cast<int>(j);
      if (self(self, i + 1)) return true;
      used[j] = false;
      partner[i] = -1;
    }
    return false;
  };
  if (!rec(rec, 0)) return std::nullopt;

  std::vector<Mask> traces;
  for (size_t i = 0; i < small.size(); ++i)
    traces.push_back(cfg.lines()[cfg.line_between(small[i], large[partner[i]])].trace);
  for (size_t j = 0; j < large.size(); ++j)
    if (std::find(partner.begin(), partner.end(), static_cast<int>(j)) == partner.end())
      traces.push_back(bit(large[j]));
  std::sort(traces.begin(), traces.end(), subset_lex_less);

  Matching m;
  for (Mask t : traces) m.lines.push_back(class_for_trace(cfg, t));
  for (int p : mask_indices(a | b))
    for (size_t li = 0; li < traces.size(); ++li)
      if (traces[li] & bit(p)) {
        m.assignment.emplace_back(p, static_cast<int>(li));
        break;
      }
  return m;
}

bool matching_valid(const PointConfig& cfg, Mask a, Mask b, const Matching& m) {
  if (a & b) return false;
  Mask outside = cfg.all() & ~(a | b);
  auto bound = static_cast<size_t>(std::max(popcount(a), popcount(b)));
  if (m.lines.size() > bound) return false;
  Mask covered = 0;
  for (const LineClass& lc : m.lines) {
    Mask t = class_trace(cfg, lc);
    if ((t & outside) || popcount(t & a) > 1 || popcount(t & b) > 1) return false;
    covered |= t;
  }
  if ((a | b) & ~covered) return false;
  for (auto [p, li] : m.assignment) {
    if (li < 0 || li >= static_cast<int>(m.lines.size())) return false;
    if (!(class_trace(cfg, m.lines[li]) & bit(p))) return false;
  }
  return true;
}

}  // namespace vclines
