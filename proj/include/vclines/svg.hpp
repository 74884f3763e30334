#pragma once

#include "vclines/config.hpp"

#include <string>

namespace vclines {

// Incidence drawing: every config line as a segment through its trace,
// points as labeled circles. Rendering is the one deliberately inexact
// corner of the library; verdicts never depend on it.
std::string config_svg(const PointConfig& cfg);

}  // namespace vclines
