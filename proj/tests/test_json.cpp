#include "vclines/json_io.hpp"

#include "helpers.hpp"
#include "vclines/generators.hpp"

#include <doctest.h>

#include <stdexcept>

using namespace vclines;
using testutil::grid;

TEST_CASE("point configs survive a round trip with exact coordinates") {
  PointConfig cfg = PointConfig::build(
      {{Rational(3, 2), Rational(-7)}, {Rational(0), Rational(1, 3)}, {Rational(2), Rational(2)}});
  Json j = config_json(cfg);
  CHECK(j["points"][0][0] == "3/2");
  CHECK(j["points"][0][1] == "-7");
  CHECK(j["points"][1][1] == "1/3");
  PointConfig back = config_from_json(j);
  REQUIRE(back.size() == cfg.size());
  for (int i = 0; i < cfg.size(); ++i) CHECK(back.point(i) == cfg.point(i));
}

TEST_CASE("config parsing rejects malformed shapes") {
  CHECK_THROWS_AS(config_from_json(Json::parse(R"({"pts": []})")), std::invalid_argument);
  CHECK_THROWS_AS(config_from_json(Json::parse(R"({"points": [["1"]]})")), std::invalid_argument);
  CHECK_THROWS_AS(config_from_json(Json::parse(R"({"points": [[1, 2]]})")), std::invalid_argument);
  CHECK_THROWS_AS(config_from_json(Json::parse(R"({"points": [["1", "x"]]})")),
                  std::invalid_argument);
  CHECK_THROWS_AS(config_from_json(Json::parse(R"({"points": [["1","2"],["1","2"]]})")),
                  std::invalid_argument);
  CHECK_THROWS_AS(config_from_json(Json::parse(R"({"points": [["1/0", "2"]]})")),
                  std::invalid_argument);
  auto parse_truncated = [] { return Json::parse("{\"points\": ["); };
  CHECK_THROWS_AS(parse_truncated(), Json::parse_error);
}

TEST_CASE("affine configs round trip through canonical form") {
  Rng rng(77);
  AffineConfig cfg = random_affine3_instance(rng, 5);
  Json j = affine_json(cfg);
  CHECK(j["n"] == 3);
  AffineConfig back = affine_from_json(j);
  REQUIRE(back.size() == cfg.size());
  for (int i = 0; i < cfg.size(); ++i) CHECK(back.elements[i] == cfg.elements[i]);

  CHECK_THROWS_AS(affine_from_json(Json::parse(R"({"n": 3, "elements": [{"offset": ["0","0","0"],
      "basis": []}]})")),
                  std::invalid_argument);
  CHECK_THROWS_AS(affine_from_json(Json::parse(R"({"n": 1, "elements": []})")),
                  std::invalid_argument);
}

TEST_CASE("set systems round trip and validate indices") {
  FiniteSetSystem sys = make_system(4, {0b0011, 0b1100, 0});
  Json j = system_json(sys);
  CHECK(j["ground"] == 4);
  FiniteSetSystem back = system_from_json(j);
  CHECK(back.ground == 4);
  CHECK(back.family == sys.family);

  CHECK_THROWS_AS(system_from_json(Json::parse(R"({"ground": 2, "family": [[0, 2]]})")),
                  std::invalid_argument);
  CHECK_THROWS_AS(system_from_json(Json::parse(R"({"ground": -1, "family": []})")),
                  std::invalid_argument);
  CHECK_THROWS_AS(system_from_json(Json::parse(R"({"ground": 2, "family": [["a"]]})")),
                  std::invalid_argument);
}

TEST_CASE("report emitters expose the decision payloads") {
  PointConfig five = grid({{0, 0}, {2, 0}, {4, 0}, {1, 2}, {3, 2}});
  Json rep = shatter_report_json(five, shatters(five, 2, true));
  CHECK(rep["shattered"] == true);
  CHECK(rep["k"] == 2);
  CHECK(rep["n"] == 5);
  REQUIRE(rep.contains("witnesses"));
  CHECK(rep["witnesses"].size() == 32);

  PointConfig x = x_configuration();
  Json bad = shatter_report_json(x, shatters(x, 3));
  CHECK(bad["shattered"] == false);
  REQUIRE(bad.contains("failing_subset"));
  CHECK(!bad["failing_subset"].empty());

  Json inc = incidence_json(five);
  CHECK(inc["n"] == 5);
  CHECK(inc["min_cover_size"] == 2);
  for (const auto& line : inc["lines"]) {
    CHECK(line["coeffs"].size() == 3);
    CHECK(line["trace"].size() >= 2);
  }

  Json ch = characterization_json(characterize_F3(x));
  CHECK(ch["predicted_shattered"] == false);
  CHECK(ch["four_collinear"] == false);
}

TEST_CASE("structures and certificates serialize with their maps") {
  PointConfig ia = representatives(3)[0].second;
  ShatterStructure s = shatter_structure(ia);
  Json js = structure_json(s);
  CHECK(js["n"] == 9);
  CHECK(js["classes"].size() == s.classes.size());
  auto cert = shatter_isomorphic(s, s);
  REQUIRE(cert.has_value());
  Json jc = certificate_json(*cert);
  CHECK(jc["bijection"].size() == 9);
}
