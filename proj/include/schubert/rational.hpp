#pragma once

#include <boost/multiprecision/gmp.hpp>

namespace schubert {

/// Exact arbitrary-precision rational. All hull / pairing arithmetic uses
/// this type; there is no floating point anywhere in the decision paths.
using Rat = boost::multiprecision::mpq_rational;
using BigInt = boost::multiprecision::mpz_int;

inline bool is_integral(const Rat& q) { return denominator(q) == 1; }

}  // namespace schubert
