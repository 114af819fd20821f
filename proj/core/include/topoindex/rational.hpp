#pragma once

#include <cstdint>
#include <string>

#include <boost/multiprecision/gmp.hpp>

namespace topoindex {

/// Exact arbitrary-precision rational; every bound verdict goes through this
/// or through integer cross-multiplication, never through floating point.
using Rational = boost::multiprecision::mpq_rational;

inline Rational make_rational(std::int64_t num, std::int64_t den = 1) {
  return Rational(boost::multiprecision::mpz_int(num), boost::multiprecision::mpz_int(den));
}

/// "p/q" in lowest terms, or "p" when the denominator is 1.
std::string to_string(const Rational& r);

}  // namespace topoindex
