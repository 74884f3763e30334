#include "vclines/iso.hpp"

#include "helpers.hpp"
#include "vclines/generators.hpp"
#include "vclines/shatter.hpp"

#include <doctest.h>

#include <algorithm>
#include <set>

using namespace vclines;
using testutil::grid;

namespace {

// Certificate re-check from first principles: the bijection must carry the
// class set of s exactly onto the class set of t.
bool certificate_recheck(const ShatterStructure& s, const ShatterStructure& t,
                         const IsoCertificate& cert) {
  if (s.n != t.n || static_cast<int>(cert.bijection.size()) != s.n) return false;
  std::vector<bool> hit(s.n, false);
  for (int img : cert.bijection) {
    if (img < 0 || img >= s.n || hit[img]) return false;
    hit[img] = true;
  }
  std::multiset<Mask> want(t.classes.begin(), t.classes.end()), got;
  for (Mask c : s.classes) {
    Mask img = 0;
    for (int p : mask_indices(c)) img |= bit(cert.bijection[p]);
    got.insert(img);
  }
  return got == want;
}

}  // namespace

TEST_CASE("each representative classifies as its own label") {
  for (int k : {2, 3})
    for (const auto& [label, cfg] : representatives(k)) {
      CAPTURE(case_label_str(label));
      CHECK(classify_case(cfg, k) == label);
    }
}

TEST_CASE("representatives are pairwise non-isomorphic") {
  for (int k : {2, 3}) {
    auto reps = representatives(k);
    for (size_t i = 0; i < reps.size(); ++i)
      for (size_t j = i + 1; j < reps.size(); ++j) {
        CAPTURE(case_label_str(reps[i].first));
        CAPTURE(case_label_str(reps[j].first));
        CHECK(!shatter_isomorphic(shatter_structure(reps[i].second),
                                  shatter_structure(reps[j].second))
                   .has_value());
      }
  }
}

TEST_CASE("affine images stay isomorphic, keep their label, and certify") {
  for (int k : {2, 3})
    for (const auto& [label, cfg] : representatives(k))
      for (int t = 0; t < 8; ++t) {
        Rng rng(derive_seed(3100 + k, t));
        PointConfig img = apply_map(random_affine_map(rng), cfg);
        CHECK(classify_case(img, k) == label);
        ShatterStructure s = shatter_structure(cfg), u = shatter_structure(img);
        auto cert = shatter_isomorphic(s, u);
        REQUIRE(cert.has_value());
        CHECK(iso_certificate_valid(s, u, *cert));
        CHECK(certificate_recheck(s, u, *cert));
      }
}

TEST_CASE("isomorphism composes across two affine images") {
  PointConfig base = representatives(3)[1].second;
  Rng rng(97);
  PointConfig a = apply_map(random_affine_map(rng), base);
  PointConfig b = apply_map(random_affine_map(rng), base);
  ShatterStructure sa = shatter_structure(a), sb = shatter_structure(b);
  CHECK(shatter_isomorphic(sa, sb).has_value());
  CHECK(shatter_isomorphic(sb, sa).has_value());
  auto self = shatter_isomorphic(sa, sa);
  REQUIRE(self.has_value());
  CHECK(iso_certificate_valid(sa, sa, *self));
}

TEST_CASE("freshly constructed instances land in the requested class") {
  for (CaseLabel label :
       {CaseLabel::f3_ia, CaseLabel::f3_ib, CaseLabel::f3_iia, CaseLabel::f3_iib}) {
    Rng rng(derive_seed(880, static_cast<uint64_t>(label)));
    PointConfig fresh = construct_case(label, rng);
    CHECK(classify_case(fresh, 3) == label);
    PointConfig rep = [&] {
      for (auto& [l, c] : representatives(3))
        if (l == label) return c;
      return representatives(3)[0].second;
    }();
    CHECK(shatter_isomorphic(shatter_structure(fresh), shatter_structure(rep)).has_value());
  }
}

TEST_CASE("structure mismatch is detected") {
  ShatterStructure a = shatter_structure(grid({{0, 0}, {1, 0}, {2, 0}, {0, 1}}));
  ShatterStructure b = shatter_structure(grid({{0, 0}, {1, 0}, {2, 1}, {0, 1}}));
  CHECK(!shatter_isomorphic(a, b).has_value());
  CHECK(!find_structure_bijection(a.n, a.classes, b.classes).has_value());

  // A mangled certificate must fail validation.
  auto self = shatter_isomorphic(a, a);
  REQUIRE(self.has_value());
  // Swapping a row point with the apex sends the triple class to a non-class.
  IsoCertificate broken = *self;
  std::swap(broken.bijection[0], broken.bijection[3]);
  CHECK(!iso_certificate_valid(a, a, broken));
  CHECK(!certificate_recheck(a, a, broken));
}

TEST_CASE("classification refuses unshattered or wrongly sized input") {
  CHECK_THROWS_AS(classify_case(x_configuration(), 3), not_shattered_error);
  PointConfig run = grid({{0, 0}, {1, 0}, {2, 0}, {3, 0}, {4, 0}});
  CHECK_THROWS_AS(classify_case(run, 2), not_shattered_error);
}
