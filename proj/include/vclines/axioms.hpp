#pragma once

#include "vclines/config.hpp"
#include "vclines/incidence.hpp"

#include <optional>
#include <string>
#include <utility>
#include <vector>

namespace vclines {

// How "l meets l' somewhere" is read in the connectivity axiom: at a shared
// config point (the quotient-level reading used by every other axiom), or
// anywhere in the real plane (non-parallel).
enum class B2Reading { within_config, real_plane };

struct AxiomVerdict {
  std::string condition;
  bool holds = true;
  // Counterexample payload; exactly the fields relevant to the condition are
  // set when holds is false.
  std::optional<Mask> subset;
  std::optional<std::pair<int, int>> line_and_point;  // (line index, point index)
  std::optional<Cover> cover;
  std::optional<int> point;
};

// m_P <= 3. Counterexample: a minimum cover (necessarily larger).
AxiomVerdict check_O(const PointConfig& cfg);

// The two conditions characterizing shattered 5-point sets: coverable by two
// lines, and no four collinear points. Requires |P| = 5.
std::pair<AxiomVerdict, AxiomVerdict> check_F2(const PointConfig& cfg);

// Every 4-point subset has two points pairing inside it.
AxiomVerdict check_A1(const PointConfig& cfg);

// Every point of a >= 4-point line lies on another line with >= 3 config
// points.
AxiomVerdict check_A2(const PointConfig& cfg);

// For every minimum-size cover, every point lies on exactly two cross-lines.
// Requires collin(P) <= 3.
AxiomVerdict check_B1(const PointConfig& cfg);

// For every minimum-size cover there are two cross-lines through a common
// point and a third cross-line avoiding that point but meeting both.
// Requires collin(P) <= 3.
AxiomVerdict check_B2(const PointConfig& cfg, B2Reading reading = B2Reading::within_config);

// Labeling (role -> point index) exhibiting the config as the X-configuration
// (rows a1a2a3 / b1b2b3 / c1c2c3 plus the six listed diagonals); nullopt if it
// is not one. Requires |P| = 9.
std::optional<std::vector<int>> is_x_configuration(const PointConfig& cfg);

struct F3Characterization {
  bool has_four_collinear = false;
  AxiomVerdict o;
  std::optional<AxiomVerdict> a1, a2, b1, b2;  // the applicable case's verdicts
  bool predicted_shattered = false;
};

// The axiomatic prediction for |P| = 9: (O) plus (A1),(A2) when four points
// are collinear, (O) plus (B1),(B2) otherwise.
F3Characterization characterize_F3(const PointConfig& cfg,
                                   B2Reading reading = B2Reading::within_config);

}  // namespace vclines
