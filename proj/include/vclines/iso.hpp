#pragma once

#include "vclines/config.hpp"

#include <optional>
#include <stdexcept>
#include <string_view>
#include <utility>
#include <vector>

namespace vclines {

struct not_shattered_error : std::runtime_error {
  using std::runtime_error::runtime_error;
};

// The quotient of a config by "same line trace": ground size plus the traces
// of size >= 2 in canonical order. Singleton and empty classes are implicit
// (every planar config has them), so two configs admit the same shattering
// behaviour iff their structures are isomorphic.
struct ShatterStructure {
  int n = 0;
  std::vector<Mask> classes;
};

ShatterStructure shatter_structure(const PointConfig& cfg);

struct IsoCertificate {
  std::vector<int> bijection;                    // from-point -> to-point
  std::vector<std::pair<int, int>> class_map;    // from-class -> to-class indices
};

// Bijections of [0, n) mapping one class set onto the other; nullopt when the
// structures are not isomorphic. Deterministic: the first bijection in the
// search order used.
std::optional<std::vector<int>> find_structure_bijection(int n, std::vector<Mask> from,
                                                         std::vector<Mask> to);

std::optional<IsoCertificate> shatter_isomorphic(const ShatterStructure& s,
                                                 const ShatterStructure& t);

bool iso_certificate_valid(const ShatterStructure& s, const ShatterStructure& t,
                           const IsoCertificate& cert);

enum class CaseLabel { f2_i, f2_ii, f3_ia, f3_ib, f3_iia, f3_iib, f3_iii };

const char* case_label_str(CaseLabel label);
std::optional<CaseLabel> parse_case_label(std::string_view s);

// Which structure class a shattered config of maximum size belongs to
// (|P| = 5 for k = 2, |P| = 9 for k = 3). Throws not_shattered_error when the
// config is not shattered by k-fold unions.
CaseLabel classify_case(const PointConfig& cfg, int k);

// Built-in representatives of every class, k in {2, 3}.
std::vector<std::pair<CaseLabel, PointConfig>> representatives(int k);

}  // namespace vclines
