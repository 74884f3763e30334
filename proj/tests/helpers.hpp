#pragma once

#include "vclines/config.hpp"
#include "vclines/incidence.hpp"
#include "vclines/shatter.hpp"

#include <algorithm>
#include <set>
#include <vector>

// First-principles oracles: everything here recomputes traces from raw pair
// geometry (Line::through + contains) and searches covers by brute recursion,
// sharing none of the TraceFamily/cover machinery it is used to check.
namespace testutil {

using vclines::bit;
using vclines::Line;
using vclines::Mask;
using vclines::Point;
using vclines::PointConfig;
using vclines::popcount;

inline std::vector<Mask> raw_line_traces(const PointConfig& cfg) {
  std::set<Mask> traces;
  int n = cfg.size();
  for (int i = 0; i < n; ++i)
    for (int j = i + 1; j < n; ++j) {
      Line l = Line::through(cfg.point(i), cfg.point(j));
      Mask t = 0;
      for (int p = 0; p < n; ++p)
        if (l.contains(cfg.point(p))) t |= bit(p);
      traces.insert(t);
    }
  return {traces.begin(), traces.end()};
}

// Can `want` be covered by at most k of the given traces?
inline bool cover_search(const std::vector<Mask>& usable, Mask want, int k) {
  if (want == 0) return true;
  if (k == 0) return false;
  int pivot = vclines::lowest_bit(want);
  for (Mask t : usable)
    if (t & bit(pivot))
      if (cover_search(usable, want & ~t, k - 1)) return true;
  return false;
}

// Is there a union of k real lines whose trace on `within` is exactly
// `target`? Lines outside the pair-lines contribute at most singletons.
inline bool oracle_isolable_within(const PointConfig& cfg, Mask within, Mask target, int k) {
  std::vector<Mask> usable;
  for (Mask t : raw_line_traces(cfg))
    if ((t & within & ~target) == 0) usable.push_back(t & within);
  for (int p : vclines::mask_indices(target)) usable.push_back(bit(p));
  std::sort(usable.begin(), usable.end());
  usable.erase(std::unique(usable.begin(), usable.end()), usable.end());
  return cover_search(usable, target, k);
}

inline bool oracle_isolable(const PointConfig& cfg, Mask target, int k) {
  return oracle_isolable_within(cfg, cfg.all(), target, k);
}

inline bool oracle_shatters(const PointConfig& cfg, int k) {
  for (Mask t = 0; t <= cfg.all(); ++t)
    if (!oracle_isolable(cfg, t, k)) return false;
  return true;
}

inline bool oracle_subset_shattered(const PointConfig& cfg, Mask subset, int k) {
  Mask t = subset;
  for (;;) {
    if (!oracle_isolable_within(cfg, subset, t, k)) return false;
    if (t == 0) return true;
    t = (t - 1) & subset;
  }
}

inline int oracle_max_shattered(const PointConfig& cfg, int k) {
  int best = 0;
  for (Mask s = 0; s <= cfg.all(); ++s)
    if (popcount(s) > best && oracle_subset_shattered(cfg, s, k)) best = popcount(s);
  return best;
}

// Validates an isolation witness geometrically: class traces recomputed from
// scratch, union compared against the target.
inline bool witness_isolates(const PointConfig& cfg, const vclines::IsolationWitness& w, int k) {
  if (static_cast<int>(w.classes.size()) > k) return false;
  Mask covered = 0;
  for (const vclines::LineClass& lc : w.classes) {
    if (lc.is_line()) {
      const vclines::LineTrace& lt = cfg.lines().at(lc.index);
      Mask t = 0;
      for (int p = 0; p < cfg.size(); ++p)
        if (lt.line.contains(cfg.point(p))) t |= bit(p);
      covered |= t;
    } else {
      covered |= bit(lc.index);
    }
  }
  return covered == w.target;
}

// A matching rechecked against the lemma's definition, trace by trace.
inline bool oracle_matching_valid(const PointConfig& cfg, Mask a, Mask b,
                                  const vclines::Matching& m) {
  Mask rest = cfg.all() & ~(a | b);
  int bound = std::max(popcount(a), popcount(b));
  if (static_cast<int>(m.lines.size()) > bound) return false;
  std::vector<Mask> traces;
  for (const vclines::LineClass& lc : m.lines) {
    Mask t = lc.is_line() ? cfg.lines().at(lc.index).trace : bit(lc.index);
    if (popcount(t & a) > 1 || popcount(t & b) > 1 || (t & rest) != 0) return false;
    traces.push_back(t);
  }
  Mask covered = 0;
  for (auto [p, li] : m.assignment) {
    if (li < 0 || li >= static_cast<int>(traces.size())) return false;
    if (!(traces[li] & bit(p))) return false;
    covered |= bit(p);
  }
  return covered == (a | b);
}

inline PointConfig grid(std::vector<std::pair<int, int>> coords) {
  std::vector<Point> pts;
  for (auto [x, y] : coords) pts.push_back({vclines::Rational(x), vclines::Rational(y)});
  return PointConfig::build(std::move(pts));
}

}  // namespace testutil
