#pragma once

#include "vclines/config.hpp"

#include <array>
#include <optional>
#include <utility>
#include <vector>

namespace vclines {

// A line up to the equivalence "same trace on the config": either a concrete
// config line (>= 2 points) or the class of lines through exactly one point.
struct LineClass {
  enum class Kind { line, singleton };
  Kind kind;
  int index;  // line index into cfg.lines(), or the point index

  static LineClass line(int li) { return {Kind::line, li}; }
  static LineClass singleton(int p) { return {Kind::singleton, p}; }
  bool is_line() const { return kind == Kind::line; }

  bool operator==(const LineClass&) const = default;
};

using Cover = std::vector<LineClass>;

Mask class_trace(const PointConfig& cfg, const LineClass& lc);

// Inverse of class_trace: the class whose trace is exactly `t`.
LineClass class_for_trace(const PointConfig& cfg, Mask t);

// Minimum number of lines covering all points, with a deterministic witness
// cover (minimum cardinality, then lexicographically least by trace order).
std::pair<int, Cover> min_line_cover(const PointConfig& cfg);

// Every k-subset of line classes (config lines and singletons) whose union is
// the whole config, in deterministic order.
std::vector<Cover> all_covers(const PointConfig& cfg, int k);

// Do i and j pair inside A, i.e. does the line through them stay within A?
bool pairs_inside(const PointConfig& cfg, Mask a, int i, int j);

// O_n(l, P): lines with exactly n config points meeting l in exactly one
// config point. Lines that miss the config entirely yield the empty set.
std::vector<Line> ordinary_lines(const PointConfig& cfg, const Line& l, int n);

// Indices of config lines meeting every member of `cover` in exactly one
// config point.
std::vector<int> cross_lines(const PointConfig& cfg, const Cover& cover);

// Number of cross-lines (w.r.t. cover) through point p.
int node_degree(const PointConfig& cfg, const Cover& cover, int p);

// Pairs (a, b), a in A, b in B, whose connecting line escapes into
// P \ (A u B). A and B must be disjoint.
std::vector<std::pair<int, int>> bad_pairs(const PointConfig& cfg, Mask a, Mask b);

// Quadruples (a, a', b, b') all four of whose connecting pairs are bad.
std::vector<std::array<int, 4>> bad_quadruples(const PointConfig& cfg, Mask a, Mask b);

// A matching of A with B: at most max(|A|,|B|) lines covering A u B, each
// meeting A and B at most once and avoiding P \ (A u B) entirely.
struct Matching {
  Cover lines;
  std::vector<std::pair<int, int>> assignment;  // point index -> index into lines
};

std::optional<Matching> find_matching(const PointConfig& cfg, Mask a, Mask b);

// Re-checks a matching against the definition (used to validate witnesses).
bool matching_valid(const PointConfig& cfg, Mask a, Mask b, const Matching& m);

}  // namespace vclines
