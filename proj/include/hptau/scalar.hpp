#pragma once

#include <gmpxx.h>

#include <string>
#include <string_view>

namespace hptau {

/// Exact rational coefficient. GMP keeps results of arithmetic in lowest terms
/// with a positive denominator; values built from strings go through
/// parse_scalar, which canonicalizes.
using Scalar = mpq_class;

/// Accepts "p" or "p/q" with optional leading sign. Throws Error(Parse).
Scalar parse_scalar(std::string_view text);

/// "p" when the denominator is 1, otherwise "p/q".
std::string to_string(const Scalar& value);

inline bool is_zero(const Scalar& value) { return sgn(value) == 0; }

/// (-1)^e for a nonnegative exponent.
inline int sign_power(long long e) { return (e % 2 == 0) ? 1 : -1; }

}  // namespace hptau
