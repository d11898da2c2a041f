#pragma once

#include <string>

#include "subord/series.hpp"

namespace subord {

/// Parses arithmetic over truncated series: numbers, i, pi, z, exp(...),
/// + - * / ^ (integer powers) and parentheses. "0.7*exp(i*pi/3)" or "z^2".
Series parse_series_expression(const std::string& text, int degree = 64);

/// Same grammar without z; the result must be constant.
cplx parse_complex_expression(const std::string& text);

}  // namespace subord
