#pragma once

#include <string>

#include "circlemap/fourier.hpp"
#include "circlemap/geometry.hpp"
#include "circlemap/poisson.hpp"

namespace circlemap {

// Map description document (JSON):
//   {"numerator":   {"sigma_angle": <radians>, "zeros": [[re, im], ...]},
//    "denominator": {"sigma_angle": <radians>, "zeros": [[re, im], ...]}}
// A missing denominator means the constant 1. Parse failures throw
// ParseError; invalid zeros surface as DomainError.
RationalCircleMap parse_map_json(const std::string& text);
std::string map_to_json(const RationalCircleMap& f);

// Criterion report as a JSON document with fields verdict,
// margin_lower_bound, witness_angle, grid_size, lipschitz_bound.
std::string report_to_json(const CriterionReport& r);
// Same five fields as one tab-separated row under a header line.
std::string report_to_delimited(const CriterionReport& r);

// Tab-separated, one row per index: n, re, im, abs.
std::string spectrum_to_delimited(const FourierSpectrum& sp);

// Tab-separated curve table: theta, re, im. The profile overload appends
// radial and angle columns. parse_curve_delimited accepts both layouts and
// requires the uniform power-of-two grid of SampledCircleMap.
std::string curve_to_delimited(const SampledCircleMap& s);
std::string curve_to_delimited(const SampledCircleMap& s, const StarlikeProfile& p);
SampledCircleMap parse_curve_delimited(const std::string& text);

// Shortest-round-trip decimal rendering used by every emitter, so identical
// inputs produce byte-identical artifacts.
std::string format_double(double v);

} // namespace circlemap
