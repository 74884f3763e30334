#include "vclines/abstract.hpp"

#include "vclines/iso.hpp"

#include <algorithm>
#include <cstdlib>
#include <stdexcept>
#include <string>

namespace vclines {

namespace {

std::vector<Mask> dedup(std::vector<Mask> v) {
  std::sort(v.begin(), v.end());
  v.erase(std::unique(v.begin(), v.end()), v.end());
  return v;
}

int ground_guard(int limit) {
  if (limit > 0) return limit;
  if (const char* env = std::getenv("VCLINES_MAX_GROUND")) {
    int v = std::atoi(env);
    if (v > 0) return std::min(v, 20);
  }
  return 12;
}

void check_ground(const FiniteSetSystem& sys, int limit) {
  if (sys.ground > limit)
    throw std::invalid_argument("ground set exceeds size limit of " + std::to_string(limit) +
                                " (override with VCLINES_MAX_GROUND or --limit)");
}

std::vector<Mask> traces_on(const FiniteSetSystem& sys, Mask y) {
  std::vector<Mask> t;
  t.reserve(sys.family.size());
  for (Mask f : sys.family) t.push_back(f & y);
  return dedup(std::move(t));
}

}  // namespace

FiniteSetSystem make_system(int ground, std::vector<Mask> family) {
  if (ground < 0 || ground > 31) throw std::invalid_argument("ground size out of range");
  for (Mask f : family)
    if (f & ~full_mask(ground)) throw std::invalid_argument("family member outside ground set");
  return {ground, dedup(std::move(family))};
}

FiniteSetSystem k_fold_union(const FiniteSetSystem& sys, int k) {
  if (k < 1) throw std::invalid_argument("k must be >= 1");
  std::vector<Mask> cur = sys.family;
  for (int step = 1; step < k; ++step) {
    std::vector<Mask> next = cur;
    for (Mask u : cur)
      for (Mask f : sys.family) next.push_back(u | f);
    next = dedup(std::move(next));
    if (next == cur) break;
    cur = std::move(next);
  }
  return {sys.ground, std::move(cur)};
}

bool system_shatters(const FiniteSetSystem& sys, Mask y) {
  int sz = popcount(y);
  auto needed = static_cast<size_t>(1) << sz;
  std::vector<bool> seen(needed, false);
  size_t count = 0;
  for (Mask f : sys.family) {
    Mask t = compress_mask(f & y, y);
    if (!seen[t]) {
      seen[t] = true;
      if (++count == needed) return true;
    }
  }
  return false;
}

int vc_dim(const FiniteSetSystem& sys, int limit) {
  check_ground(sys, ground_guard(limit));
  if (sys.family.empty()) return 0;
  int best = 0;
  Mask top = full_mask(sys.ground);
  for (Mask y = 0;; ++y) {
    if (popcount(y) > best && system_shatters(sys, y)) best = popcount(y);
    if (y == top) break;
  }
  return best;
}

bool intersection_closed(const FiniteSetSystem& sys) {
  for (size_t i = 0; i < sys.family.size(); ++i)
    for (size_t j = i + 1; j < sys.family.size(); ++j)
      if (!std::binary_search(sys.family.begin(), sys.family.end(),
                              sys.family[i] & sys.family[j]))
        return false;
  return true;
}

Mask s_hull(const FiniteSetSystem& sys, Mask y) {
  if (y & ~full_mask(sys.ground)) throw std::invalid_argument("subset outside ground set");
  if (!intersection_closed(sys))
    throw std::invalid_argument("family is not intersection-closed");
  bool found = false;
  Mask hull = full_mask(sys.ground);
  for (Mask f : sys.family)
    if ((y & ~f) == 0) {
      hull &= f;
      found = true;
    }
  if (!found) throw std::invalid_argument("no family member contains the subset");
  return hull;
}

int s_k_count(const FiniteSetSystem& sys, int k, int limit) {
  check_ground(sys, ground_guard(limit));
  FiniteSetSystem kf = k_fold_union(sys, k);
  int d = vc_dim(kf, limit);
  std::vector<std::pair<int, std::vector<Mask>>> reps;  // (|Y|, compressed traces)
  for (Mask y = 0; y <= full_mask(sys.ground); ++y) {
    if (popcount(y) == d && system_shatters(kf, y)) {
      std::vector<Mask> tr;
      for (Mask t : traces_on(sys, y)) tr.push_back(compress_mask(t, y));
      tr = dedup(std::move(tr));
      bool fresh = true;
      for (const auto& [n, rep] : reps)
        if (n == popcount(y) && find_structure_bijection(n, rep, tr)) {
          fresh = false;
          break;
        }
      if (fresh) reps.emplace_back(popcount(y), std::move(tr));
    }
    if (y == full_mask(sys.ground)) break;
  }
  return static_cast<int>(reps.size());
}

FiniteSetSystem intervals_system(int m) {
  if (m < 0 || m > 31) throw std::invalid_argument("chain length out of range");
  std::vector<Mask> fam{0};
  for (int i = 0; i < m; ++i) {
    Mask run = 0;
    for (int j = i; j < m; ++j) {
      run |= bit(j);
      fam.push_back(run);
    }
  }
  return make_system(m, std::move(fam));
}

}  // namespace vclines
