#pragma once

#include <gmpxx.h>
#include <string>

namespace qh {

// Arbitrary-precision integer and rational scalars. Everything the library
// computes is exact; doubles never appear.
using Int = mpz_class;
using Rat = mpq_class;

inline std::string to_decimal(const Int& n) { return n.get_str(10); }

inline Int int_from_decimal(const std::string& s) { return Int(s, 10); }

} // namespace qh
