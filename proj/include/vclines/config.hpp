#pragma once

#include "vclines/bits.hpp"
#include "vclines/geom.hpp"

#include <vector>

namespace vclines {

struct LineTrace {
  Line line;
  Mask trace;  // indices of config points on the line, always >= 2 of them
};

// A finite planar point set with its full incidence cache: every line through
// at least two of the points, stored with its trace. Lines are kept in
// canonical order (traces as sorted index lists, lexicographic), so identical
// configs produce identical caches.
class PointConfig {
 public:
  static constexpr int kMaxPoints = 31;

  static PointConfig build(std::vector<Point> pts);  // throws on duplicates/overflow

  int size() const { return static_cast<int>(pts_.size()); }
  const Point& point(int i) const { return pts_.at(i); }
  const std::vector<Point>& points() const { return pts_; }
  Mask all() const { return full_mask(size()); }

  const std::vector<LineTrace>& lines() const { return lines_; }
  const std::vector<int>& lines_through(int p) const { return through_.at(p); }
  // Index into lines() for the line through points i and j.
  int line_between(int i, int j) const;

  // Size of the largest collinear subset; 0 and 1 for configs of that size.
  int collin() const { return collin_; }

  // Lines whose trace has exactly n points (n >= 2).
  std::vector<Line> n_lines(int n) const;

  // The subconfig on the given point subset. Point order is preserved;
  // the incidence cache is restricted rather than recomputed.
  PointConfig restrict_to(Mask subset) const;

 private:
  PointConfig() = default;

  std::vector<Point> pts_;
  std::vector<LineTrace> lines_;
  std::vector<std::vector<int>> through_;
  std::vector<std::vector<int>> pair_line_;
  int collin_ = 0;

  void index_lines();
};

}  // namespace vclines
