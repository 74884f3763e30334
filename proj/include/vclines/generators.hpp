#pragma once

#include "vclines/abstract.hpp"
#include "vclines/affine.hpp"
#include "vclines/config.hpp"
#include "vclines/iso.hpp"
#include "vclines/rng.hpp"

namespace vclines {

Rational rand_rational(Rng& rng, int lo, int hi, int max_den = 4);
Point rand_point(Rng& rng, int lo, int hi, int max_den = 4);

// n distinct points with small rational coordinates.
PointConfig random_distinct_config(Rng& rng, int n, int span = 10);

// n distinct points spread over `lines` random distinct lines, each line
// carrying at least one of them, so the result is covered by that many lines.
PointConfig random_on_lines(Rng& rng, int n, int lines, int span = 10);

AffineMap2 random_affine_map(Rng& rng);
PointConfig apply_map(const AffineMap2& map, const PointConfig& cfg);

// The nine-point, nine-triple figure: three rows of three plus six cross
// triples. It meets the two-cross-lines-per-point condition but not the
// meeting condition, and its largest shattered subset has size 8.
PointConfig x_configuration();

// A fresh randomized nine-point instance of the given structure class
// (four-collinear classes only), verified by classification before return.
PointConfig construct_case(CaseLabel label, Rng& rng);

// Fuzz mixtures: 9-point configs coverable by three lines, and 5-point
// configs biased toward the cover/collinearity boundaries. `span` bounds the
// coordinate height of generated points, `lines` caps the carrier count of
// the on-lines branches; small spans raise the rate of degenerate
// coincidences.
PointConfig equivalence_sample9(Rng& rng, int span = 10, int lines = 3);
PointConfig equivalence_sample5(Rng& rng, int span = 10, int lines = 2);

struct MatchingInstance {
  PointConfig cfg;
  Mask a = 0;
  Mask b = 0;
};

// Eight points: three collinear ones (a), three more (b), two spares, with
// collin < 4 and no bad quadruple; half the spares are planted on pair lines
// to force bad pairs.
MatchingInstance matching_lemma_instance(Rng& rng);

// Nine points with four collinear satisfying the cover size, pairing-four,
// and second-line conditions.
PointConfig case_a_corpus_sample(Rng& rng);

// Pairwise coplanar line families in R^3 (lifted planar configs, pencils
// through a point, lines inside one plane, parallel classes), each under a
// random invertible affine map, between 2 and max_elements of them. Pairwise
// coplanarity is what makes the dimension reduction structure-faithful.
AffineConfig random_affine3_instance(Rng& rng, int max_elements = 9);

FiniteSetSystem random_intersection_closed(Rng& rng, int ground);

}  // namespace vclines
