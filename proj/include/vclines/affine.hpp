#pragma once

#include "vclines/config.hpp"
#include "vclines/linalg.hpp"
#include "vclines/trace_family.hpp"

#include <optional>
#include <vector>

namespace vclines {

// Affine flat in R^n in a unique canonical form: basis in reduced row-echelon
// form and offset zeroed at every pivot coordinate. Two flats are then equal
// as point sets iff their representations are equal field-by-field.
struct AffineSubspace {
  Vec offset;
  Mat basis;

  // Canonicalizes; directions need not be independent. Throws on an empty
  // offset or width mismatches.
  static AffineSubspace make(Vec offset, Mat directions);
  static AffineSubspace single_point(Vec p) { return make(std::move(p), {}); }

  int ambient() const { return static_cast<int>(offset.size()); }
  int dim() const { return static_cast<int>(basis.size()); }

  bool contains_point(const Vec& p) const;
  bool contains(const AffineSubspace& s) const;  // s as a subset of this

  bool operator==(const AffineSubspace&) const = default;
};

// Deterministic total order on canonical forms (ambient, dim, then entries).
bool subspace_less(const AffineSubspace& a, const AffineSubspace& b);

AffineSubspace affine_span(const std::vector<Vec>& pts);

// Intersection as a flat; nullopt when empty.
std::optional<AffineSubspace> intersect(const AffineSubspace& a,
                                        const AffineSubspace& b);

// Equations n_i . x = d_i cutting out the flat; rows are the canonical kernel
// basis of the direction space.
std::pair<Mat, Vec> equations_of(const AffineSubspace& s);

// A finite set of codimension-2 flats in R^ambient, pairwise distinct.
struct AffineConfig {
  int ambient = 0;
  std::vector<AffineSubspace> elements;

  static AffineConfig build(int ambient, std::vector<AffineSubspace> els);
  int size() const { return static_cast<int>(elements.size()); }
};

// Indices of elements contained (as sets) in the hyperplane v.
Mask hyperplane_trace(const AffineConfig& cfg, const AffineSubspace& v);

// Every hyperplane containing >= 2 elements: the affine span of each element
// pair when that span is a hyperplane, deduplicated, in canonical order.
std::vector<AffineSubspace> candidate_hyperplanes(const AffineConfig& cfg);

// The combinatorial structure of cfg under hyperplane traces; ground set is
// the element list, classes are the candidate-hyperplane traces.
TraceFamily hyperplane_family(const AffineConfig& cfg);

// A translate U' = U + q of the hyperplane direction u_dir such that U' meets
// every element properly, distinct elements have distinct intersections with
// U', and every >= 2-element hyperplane keeps its trace after intersecting.
// q walks j * e_c (c = pivot coordinate of the normal) for j = 0, 1, 2, ...;
// at most C(m,2) + #candidates * m translates can fail, so the search is
// bounded. Throws invalid_argument when some element's direction space lies
// inside u_dir.
AffineSubspace find_good_translate(const AffineConfig& cfg,
                                   const AffineSubspace& u_dir);

// Independent verification of the three conditions above, via parametric
// solves and equation evaluation rather than canonical-form comparisons.
bool good_translate_conditions(const AffineConfig& cfg,
                               const AffineSubspace& u_prime);

struct Reduction {
  AffineConfig reduced;       // ambient one lower
  AffineSubspace cut;         // the hyperplane U' that was intersected with
  int dropped_coord;          // coordinate removed by the chart on U'
};

// One step down: pick a hyperplane direction transverse to every element,
// find a good translate, intersect, and re-express in the chart that drops
// the normal's pivot coordinate. Throws invalid_argument when ambient <= 2.
Reduction reduce_dimension(const AffineConfig& cfg);

// Iterate reduce_dimension to ambient 2 and read the elements off as points.
PointConfig planar_config(const AffineConfig& cfg);

// Vertical lines in R^3 over the points of cfg; its hyperplane structure
// matches the planar line structure exactly.
AffineConfig lift_planar(const PointConfig& cfg);

struct VcCheckReport {
  int k = 0;
  int m = 0;
  bool planar_shattered = false;
  bool direct_shattered = false;
  bool agree() const { return planar_shattered == direct_shattered; }
};

// Decides shattering by k-fold hyperplane unions twice: via the planar
// reduction and directly in R^n over candidate hyperplanes + singletons.
VcCheckReport vc_equal_check(const AffineConfig& cfg, int k, int limit = 12);

}  // namespace vclines
