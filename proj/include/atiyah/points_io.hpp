#pragma once

#include <span>
#include <string>
#include <string_view>
#include <vector>

#include "atiyah/geometry.hpp"

namespace atiyah {

/// Shortest decimal representation that round-trips the double exactly.
std::string format_double(double value);

/// Points-file text: one point per line, whitespace-separated decimals,
/// `#` starts a comment. Two fields read as planar (re, im), three as
/// (a, re, im). Throws ParseError on malformed input.
std::vector<Point> parse_points_text(std::string_view text);

/// Inverse of parse_points_text, always emitting three fields per line.
std::string format_points(std::span<const Point> points);

/// Canonical fixture coordinates: square, collinear3, collinear4,
/// equilateral, figure1. Throws InvalidSpecError for unknown names.
std::vector<Point> fixture(std::string_view name);

std::vector<std::string> fixture_names();

}  // namespace atiyah
