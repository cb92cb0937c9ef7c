#pragma once

#include <string>
#include <string_view>
#include <vector>

#include "tlforge/matrix.hpp"

namespace tlforge {

/// Parses complex literals of the form "a", "bi", "a+bi", "a-bi" with
/// optional signs and decimal/exponent parts ("i" alone means 1i).
/// Throws std::invalid_argument on malformed input.
Complex parse_complex(std::string_view text);

/// Comma-separated list of complex literals.
std::vector<Complex> parse_complex_list(std::string_view text);

std::string format_complex(Complex z);

}  // namespace tlforge
