#pragma once

#include <boost/multiprecision/cpp_int.hpp>

#include <stdexcept>
#include <string>

namespace pathgf {

/// Arbitrary-precision signed integer.
using BigInt = boost::multiprecision::cpp_int;

/// Exact rational number, kept in lowest terms with denominator >= 1.
/// All arithmetic on it is exact; nothing in this library ever rounds.
using Rational = boost::multiprecision::cpp_rational;

inline bool is_integer(const Rational& r) {
  return denominator(r) == 1;
}

/// Exact conversion to an integer; rejects anything with a nontrivial
/// denominator instead of rounding.
inline BigInt to_integer(const Rational& r) {
  if (!is_integer(r)) {
    throw std::logic_error("rational " + r.str() + " is not an integer");
  }
  return numerator(r);
}

}  // namespace pathgf
