#pragma once

#include "vclines/abstract.hpp"
#include "vclines/affine.hpp"
#include "vclines/axioms.hpp"
#include "vclines/config.hpp"
#include "vclines/iso.hpp"
#include "vclines/shatter.hpp"

#include <json.hpp>

namespace vclines {

// Key order is part of the output contract (byte-identical reruns), so all
// emission goes through ordered_json.
using Json = nlohmann::ordered_json;

// Parsers validate shape and semantics; they throw std::invalid_argument on
// bad content and let nlohmann's parse_error (with byte offset) escape for
// malformed text.
PointConfig config_from_json(const Json& j);
AffineConfig affine_from_json(const Json& j);
FiniteSetSystem system_from_json(const Json& j);

Json point_json(const Point& p);
Json config_json(const PointConfig& cfg);

// Lines as {"coeffs": ["a","b","c"], "trace": [indices]} plus cover stats.
Json incidence_json(const PointConfig& cfg);

Json line_class_json(const PointConfig& cfg, const LineClass& lc);
Json shatter_report_json(const PointConfig& cfg, const ShatterReport& r);

Json verdict_json(const AxiomVerdict& v);
Json characterization_json(const F3Characterization& c);

Json structure_json(const ShatterStructure& s);
Json certificate_json(const IsoCertificate& cert);

Json subspace_json(const AffineSubspace& s);
Json affine_json(const AffineConfig& cfg);
Json reduction_json(const Reduction& r);

Json system_json(const FiniteSetSystem& sys);

}  // namespace vclines
