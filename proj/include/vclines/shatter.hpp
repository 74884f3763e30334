#pragma once

#include "vclines/config.hpp"
#include "vclines/incidence.hpp"
#include "vclines/trace_family.hpp"

#include <optional>
#include <utility>
#include <vector>

namespace vclines {

TraceFamily family_of(const PointConfig& cfg);

struct IsolationWitness {
  Mask target = 0;
  Cover classes;  // at most k classes whose union meets the config exactly in target
};

struct ShatterReport {
  bool shattered = false;
  int k = 0;
  int n = 0;
  std::optional<Mask> failing_subset;  // lexicographically first failure
  std::optional<std::vector<std::pair<Mask, IsolationWitness>>> witnesses;
};

// Can `target` be isolated, i.e. is there a union of k lines meeting the
// config exactly in target?
bool isolable(const PointConfig& cfg, Mask target, int k);

std::optional<IsolationWitness> isolate(const PointConfig& cfg, Mask target, int k);

// Checks all 2^n subsets. size_limit <= 0 means the default (16, overridable
// via VCLINES_MAX_POINTS).
ShatterReport shatters(const PointConfig& cfg, int k, bool want_witnesses = false,
                       int size_limit = 0);

// (size, first witness subset in lex order) of a largest shattered subset.
std::pair<int, Mask> max_shattered_subset(const PointConfig& cfg, int k, int size_limit = 0);

}  // namespace vclines
