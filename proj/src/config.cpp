#include "vclines/config.hpp"

#include <algorithm>
#include <stdexcept>
#include <string>

namespace vclines {

PointConfig PointConfig::build(std::vector<Point> pts) {
  if (pts.size() > kMaxPoints)
    throw std::invalid_argument("config too large: " + std::to_string(pts.size()) + " points");
  PointConfig cfg;
  cfg.pts_ = std::move(pts);
  int n = cfg.size();

  for (int i = 0; i < n; ++i)
    for (int j = i + 1; j < n; ++j)
      if (cfg.pts_[i] == cfg.pts_[j])
        throw std::invalid_argument("duplicate point at indices " + std::to_string(i) + " and " +
                                    std::to_string(j) + ": " + point_str(cfg.pts_[i]));

  std::vector<std::vector<bool>> seen(n, std::vector<bool>(n, false));
  for (int i = 0; i < n; ++i) {
    for (int j = i + 1; j < n; ++j) {
      if (seen[i][j]) continue;
      Line l = Line::through(cfg.pts_[i], cfg.pts_[j]);
      Mask t = 0;
      for (int k = 0; k < n; ++k)
        if (l.contains(cfg.pts_[k])) t |= bit(k);
      auto idx = mask_indices(t);
      for (size_t a = 0; a < idx.size(); ++a)
        for (size_t b = a + 1; b < idx.size(); ++b) seen[idx[a]][idx[b]] = true;
      cfg.lines_.push_back({l, t});
    }
  }
  std::sort(cfg.lines_.begin(), cfg.lines_.end(),
            [](const LineTrace& a, const LineTrace& b) { return subset_lex_less(a.trace, b.trace); });
  cfg.index_lines();
  return cfg;
}

void PointConfig::index_lines() {
  int n = size();
  through_.assign(n, {});
  pair_line_.assign(n, std::vector<int>(n, -1));
  collin_ = n < 2 ? n : 2;
  for (int li = 0; li < static_cast<int>(lines_.size()); ++li) {
    Mask t = lines_[li].trace;
    collin_ = std::max(collin_, popcount(t));
    auto idx = mask_indices(t);
    for (int p : idx) through_[p].push_back(li);
    for (size_t a = 0; a < idx.size(); ++a)
      for (size_t b = a + 1; b < idx.size(); ++b)
        pair_line_[idx[a]][idx[b]] = pair_line_[idx[b]][idx[a]] = li;
  }
}

int PointConfig::line_between(int i, int j) const {
  if (i == j) throw std::invalid_argument("line_between needs two distinct indices");
  int li = pair_line_.at(i).at(j);
  return li;
}

std::vector<Line> PointConfig::n_lines(int n) const {
  if (n < 2) throw std::invalid_argument("n_lines requires n >= 2");
  std::vector<Line> out;
  for (const auto& lt : lines_)
    if (popcount(lt.trace) == n) out.push_back(lt.line);
  return out;
}

PointConfig PointConfig::restrict_to(Mask subset) const {
  PointConfig sub;
  for (int i : mask_indices(subset)) sub.pts_.push_back(pts_[i]);
  for (const auto& lt : lines_) {
    Mask t = lt.trace & subset;
    if (popcount(t) >= 2) sub.lines_.push_back({lt.line, compress_mask(t, subset)});
  }
  std::sort(sub.lines_.begin(), sub.lines_.end(),
            [](const LineTrace& a, const LineTrace& b) { return subset_lex_less(a.trace, b.trace); });
  sub.index_lines();
  return sub;
}

}  // namespace vclines
