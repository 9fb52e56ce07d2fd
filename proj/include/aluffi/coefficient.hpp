#pragma once

#include <gmpxx.h>

#include <string>
#include <string_view>

namespace aluffi {

// Exact rationals. mpq_class keeps values in lowest terms with a positive
// denominator after every arithmetic operation.
using Coefficient = mpq_class;

/// "3", "-2", "5/7". Inverse of parse_coefficient.
std::string format_coefficient(const Coefficient& c);

/// Accepts an optionally signed integer or a/b with b > 0.
Coefficient parse_coefficient(std::string_view text);

}  // namespace aluffi
