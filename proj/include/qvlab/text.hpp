#pragma once

#include <string>
#include <string_view>
#include <vector>

#include <gmpxx.h>

namespace qvlab {

std::string_view strip(std::string_view s);

// Splits on `sep`, stripping whitespace from each piece. An empty input
// yields no pieces.
std::vector<std::string_view> split(std::string_view s, char sep);

// Decimal integer with optional sign; throws parse_error.
mpz_class parse_integer(std::string_view s);

} // namespace qvlab
