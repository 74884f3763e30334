#pragma once

#include <cstdint>
#include <random>

namespace vclines {

// mt19937_64 with hand-rolled mappings: std::uniform_int_distribution is not
// pinned down by the standard, and the fuzz suites freeze seeds.
class Rng {
 public:
  explicit Rng(std::uint64_t seed) : eng_(seed) {}

  std::uint64_t next() { return eng_(); }
  std::uint64_t below(std::uint64_t n) { return n ? next() % n : 0; }
  std::int64_t range(std::int64_t lo, std::int64_t hi) {
    return lo + static_cast<std::int64_t>(below(static_cast<std::uint64_t>(hi - lo + 1)));
  }
  bool chance(unsigned num, unsigned den) { return below(den) < num; }

 private:
  std::mt19937_64 eng_;
};

inline std::uint64_t derive_seed(std::uint64_t base, std::uint64_t stream) {
  std::mt19937_64 e(base + 0x9e3779b97f4a7c15ull * (stream + 1));
  e.discard(3);
  return e();
}

}  // namespace vclines
