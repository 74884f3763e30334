#include "vclines/incidence.hpp"

#include "helpers.hpp"
#include "vclines/generators.hpp"
#include "vclines/iso.hpp"

#include <doctest.h>

#include <algorithm>
#include <set>

using namespace vclines;
using testutil::grid;

namespace {

PointConfig rep_of(CaseLabel label, int k) {
  for (const auto& [l, cfg] : representatives(k))
    if (l == label) return cfg;
  throw std::logic_error("missing representative");
}

// Exhaustive cover enumeration straight from the definition.
std::set<std::set<Mask>> brute_covers(const PointConfig& cfg, int k) {
  std::vector<Mask> classes;
  for (const LineTrace& lt : cfg.lines()) classes.push_back(lt.trace);
  for (int p = 0; p < cfg.size(); ++p) classes.push_back(bit(p));
  std::set<std::set<Mask>> out;
  std::vector<int> pick(k);
  auto rec = [&](auto&& self, int start, int depth, Mask covered) -> void {
    if (depth == k) {
      if (covered == cfg.all()) {
        std::set<Mask> key;
        for (int i : pick) key.insert(classes[i]);
        if (static_cast<int>(key.size()) == k) out.insert(std::move(key));
      }
      return;
    }
    for (int i = start; i < static_cast<int>(classes.size()); ++i) {
      pick[depth] = i;
      self(self, i + 1, depth + 1, covered | classes[i]);
    }
  };
  rec(rec, 0, 0, 0);
  return out;
}

std::set<std::set<Mask>> cover_keys(const PointConfig& cfg, const std::vector<Cover>& covers) {
  std::set<std::set<Mask>> out;
  for (const Cover& c : covers) {
    std::set<Mask> key;
    for (const LineClass& lc : c) key.insert(class_trace(cfg, lc));
    out.insert(std::move(key));
  }
  return out;
}

}  // namespace

TEST_CASE("class traces round-trip through class_for_trace") {
  PointConfig cfg = grid({{0, 0}, {2, 0}, {4, 0}, {1, 2}, {3, 5}});
  for (std::size_t li = 0; li < cfg.lines().size(); ++li) {
    LineClass lc = LineClass::line(static_cast<int>(li));
    CHECK(class_for_trace(cfg, class_trace(cfg, lc)) == lc);
  }
  for (int p = 0; p < cfg.size(); ++p) {
    LineClass lc = LineClass::singleton(p);
    CHECK(class_trace(cfg, lc) == bit(p));
    CHECK(class_for_trace(cfg, bit(p)) == lc);
  }
}

TEST_CASE("minimum cover of a triangle needs two classes") {
  PointConfig tri = grid({{0, 0}, {4, 0}, {0, 4}});
  auto [m, cover] = min_line_cover(tri);
  CHECK(m == 2);
  Mask covered = 0;
  for (const LineClass& lc : cover) covered |= class_trace(tri, lc);
  CHECK(covered == tri.all());
}

TEST_CASE("all_covers agrees with brute-force enumeration") {
  PointConfig tri = grid({{0, 0}, {4, 0}, {0, 4}});
  auto covers = all_covers(tri, 3);
  CHECK(cover_keys(tri, covers) == brute_covers(tri, 3));
  CHECK(covers.size() == 17);

  PointConfig five = grid({{0, 0}, {1, 0}, {2, 1}, {3, 4}, {0, 3}});
  CHECK(cover_keys(five, all_covers(five, 3)) == brute_covers(five, 3));
}

TEST_CASE("the four-collinear representative has a unique minimum cover") {
  PointConfig ib = rep_of(CaseLabel::f3_ib, 3);
  CHECK(ib.collin() == 4);
  auto [m, cover] = min_line_cover(ib);
  CHECK(m == 3);
  CHECK(all_covers(ib, 3).size() == 1);
}

TEST_CASE("cross-line counts on the no-four-collinear figures") {
  PointConfig iii = rep_of(CaseLabel::f3_iii, 3);
  auto [m, cover] = min_line_cover(iii);
  REQUIRE(m == 3);
  CHECK(cross_lines(iii, cover).size() == 6);

  PointConfig x = x_configuration();
  auto [mx, cover_x] = min_line_cover(x);
  REQUIRE(mx == 3);
  CHECK(cross_lines(x, cover_x).size() == 6);
  for (int p = 0; p < x.size(); ++p) CHECK(node_degree(x, cover_x, p) == 2);
}

TEST_CASE("the X-configuration has exactly its three line partitions as covers") {
  PointConfig x = x_configuration();
  auto covers = all_covers(x, 3);
  CHECK(cover_keys(x, covers) == brute_covers(x, 3));
  CHECK(covers.size() == 3);
}

TEST_CASE("pairs_inside tracks line escapes") {
  // Row of three plus an apex: the outer pair's line escapes through the
  // middle point whenever that point is excluded.
  PointConfig cfg = grid({{0, 0}, {2, 0}, {4, 0}, {2, 3}});
  Mask a = bit(0) | bit(2) | bit(3);
  CHECK(!pairs_inside(cfg, a, 0, 2));
  CHECK(pairs_inside(cfg, a, 0, 3));
  CHECK(pairs_inside(cfg, cfg.all(), 0, 2));
}

TEST_CASE("ordinary lines meet the selected line exactly once") {
  PointConfig ib = rep_of(CaseLabel::f3_ib, 3);
  int li = -1;
  for (std::size_t i = 0; i < ib.lines().size(); ++i)
    if (popcount(ib.lines()[i].trace) == 4) li = static_cast<int>(i);
  REQUIRE(li >= 0);
  const Line& l = ib.lines()[li].line;
  auto o3 = ordinary_lines(ib, l, 3);
  CHECK(!o3.empty());
  for (const Line& k : o3) {
    int on_k = 0, shared = 0;
    for (int p = 0; p < ib.size(); ++p)
      if (k.contains(ib.point(p))) {
        ++on_k;
        if (l.contains(ib.point(p))) ++shared;
      }
    CHECK(on_k == 3);
    CHECK(shared == 1);
  }
}

TEST_CASE("bad pairs and quadruples on a planted fixture") {
  std::vector<Point> pts = {{Rational(0), Rational(0)}, {Rational(4), Rational(0)},
                            {Rational(8), Rational(0)}, {Rational(2), Rational(2, 3)},
                            {Rational(2), Rational(2)}, {Rational(0), Rational(5)},
                            {Rational(1), Rational(1)}, {Rational(3), Rational(1)}};
  PointConfig cfg = PointConfig::build(std::move(pts));
  Mask a = 0b111, b = 0b111000;

  // Oracle: a pair is bad iff its connecting line hits a point off A u B.
  auto pair_is_bad = [&](int i, int j) {
    Line l = Line::through(cfg.point(i), cfg.point(j));
    for (int p : mask_indices(cfg.all() & ~(a | b)))
      if (l.contains(cfg.point(p))) return true;
    return false;
  };
  auto bad = bad_pairs(cfg, a, b);
  for (int i : mask_indices(a))
    for (int j : mask_indices(b)) {
      bool listed = std::find(bad.begin(), bad.end(), std::make_pair(i, j)) != bad.end();
      CHECK(listed == pair_is_bad(i, j));
    }

  auto quads = bad_quadruples(cfg, a, b);
  CHECK(std::find(quads.begin(), quads.end(), std::array<int, 4>{0, 1, 3, 4}) != quads.end());
  for (const auto& [a1, a2, b1, b2] : quads) {
    CHECK(pair_is_bad(a1, b1));
    CHECK(pair_is_bad(a1, b2));
    CHECK(pair_is_bad(a2, b1));
    CHECK(pair_is_bad(a2, b2));
  }
}

TEST_CASE("matchings found on seeded lemma instances revalidate from scratch") {
  for (int i = 0; i < 25; ++i) {
    Rng rng(derive_seed(404, i));
    MatchingInstance inst = matching_lemma_instance(rng);
    auto m = find_matching(inst.cfg, inst.a, inst.b);
    REQUIRE(m.has_value());
    CHECK(matching_valid(inst.cfg, inst.a, inst.b, *m));
    CHECK(testutil::oracle_matching_valid(inst.cfg, inst.a, inst.b, *m));
  }
}

TEST_CASE("a fully blocked instance has no matching") {
  // Every A-to-B line with coordinate sum 1..5 passes through a blocker, so
  // only two of the sixteen cross pairs are usable and no perfect matching
  // exists.
  std::vector<Point> pts;
  for (int x = 0; x <= 3; ++x) pts.push_back({Rational(x), Rational(0)});
  for (int x = 0; x <= 3; ++x) pts.push_back({Rational(x), Rational(2)});
  for (int i = 1; i <= 5; ++i) pts.push_back({Rational(i, 2), Rational(1)});
  PointConfig cfg = PointConfig::build(std::move(pts));
  Mask a = 0b1111, b = 0b11110000;
  CHECK(!find_matching(cfg, a, b).has_value());
}
