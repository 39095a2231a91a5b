#pragma once

#include <algorithm>
#include <cstddef>
#include <initializer_list>
#include <sstream>
#include <stdexcept>
#include <string>
#include <utility>
#include <vector>

#include "pathgf/rational.hpp"

namespace pathgf {

/// Truncated formal power series with exact rational coefficients.
///
/// A series of order N carries the coefficients of x^0 .. x^N. Coefficients
/// beyond the order are undefined, not zero: binary operations truncate to
/// the smaller operand order rather than padding with false zeros.
class PowerSeries {
 public:
  /// Zero series of the given truncation order.
  explicit PowerSeries(std::size_t order) : coeffs_(order + 1) {}

  /// Takes ownership of the coefficient vector; order = coeffs.size() - 1.
  explicit PowerSeries(std::vector<Rational> coeffs) : coeffs_(std::move(coeffs)) {
    if (coeffs_.empty()) {
      throw std::invalid_argument("a power series carries at least the x^0 coefficient");
    }
  }

  /// Polynomial low[0] + low[1] x + ... padded with zeros up to `order`.
  /// Terms of the polynomial above `order` are dropped.
  static PowerSeries polynomial(std::initializer_list<Rational> low, std::size_t order) {
    std::vector<Rational> c(order + 1);
    std::size_t j = 0;
    for (const Rational& v : low) {
      if (j > order) break;
      c[j++] = v;
    }
    return PowerSeries(std::move(c));
  }

  static PowerSeries one(std::size_t order) { return polynomial({1}, order); }

  std::size_t order() const { return coeffs_.size() - 1; }

  const Rational& operator[](std::size_t j) const { return coeffs_[j]; }
  Rational& operator[](std::size_t j) { return coeffs_[j]; }

  const std::vector<Rational>& coefficients() const { return coeffs_; }

  /// Copy truncated to `new_order` (must not exceed the current order).
  PowerSeries truncated(std::size_t new_order) const {
    if (new_order > order()) {
      throw std::domain_error("cannot extend a series from order " +
                              std::to_string(order()) + " to order " +
                              std::to_string(new_order));
    }
    return PowerSeries(std::vector<Rational>(coeffs_.begin(), coeffs_.begin() + new_order + 1));
  }

  bool operator==(const PowerSeries&) const = default;

 private:
  std::vector<Rational> coeffs_;
};

/// Coefficient-wise sum, truncated to the smaller order.
inline PowerSeries operator+(const PowerSeries& a, const PowerSeries& b) {
  const std::size_t n = std::min(a.order(), b.order());
  PowerSeries r(n);
  for (std::size_t j = 0; j <= n; ++j) r[j] = a[j] + b[j];
  return r;
}

/// Coefficient-wise difference, truncated to the smaller order.
inline PowerSeries operator-(const PowerSeries& a, const PowerSeries& b) {
  const std::size_t n = std::min(a.order(), b.order());
  PowerSeries r(n);
  for (std::size_t j = 0; j <= n; ++j) r[j] = a[j] - b[j];
  return r;
}

/// Cauchy product, truncated to the smaller order.
inline PowerSeries operator*(const PowerSeries& a, const PowerSeries& b) {
  const std::size_t n = std::min(a.order(), b.order());
  PowerSeries r(n);
  for (std::size_t j = 0; j <= n; ++j) {
    Rational acc = 0;
    for (std::size_t i = 0; i <= j; ++i) acc += a[i] * b[j - i];
    r[j] = acc;
  }
  return r;
}

/// Series square root of a series with constant term 1: returns s with
/// s*s = a through the truncation order and s(0) = 1, via
/// s_k = (a_k - sum_{i=1..k-1} s_i s_{k-i}) / 2.
inline PowerSeries sqrt(const PowerSeries& a) {
  if (a[0] != 1) {
    throw std::domain_error("series sqrt requires constant term 1, got " + a[0].str());
  }
  PowerSeries s(a.order());
  s[0] = 1;
  for (std::size_t k = 1; k <= a.order(); ++k) {
    Rational acc = a[k];
    for (std::size_t i = 1; i < k; ++i) acc -= s[i] * s[k - i];
    s[k] = acc / 2;
  }
  return s;
}

/// Multiplicative inverse of a series with nonzero constant term: returns r
/// with a*r = 1 through the truncation order.
inline PowerSeries reciprocal(const PowerSeries& a) {
  if (a[0] == 0) {
    throw std::domain_error("series reciprocal requires a nonzero constant term");
  }
  PowerSeries r(a.order());
  r[0] = Rational(1) / a[0];
  for (std::size_t k = 1; k <= a.order(); ++k) {
    Rational acc = 0;
    for (std::size_t i = 1; i <= k; ++i) acc += a[i] * r[k - i];
    r[k] = -acc / a[0];
  }
  return r;
}

/// a / (scalar * x^k): drops the k leading coefficients, which must all be
/// exactly zero, and divides the rest by scalar. Result order = order(a) - k.
/// A nonzero coefficient among the first k means some closed form upstream
/// was transcribed wrong, so that case is a hard logic error.
inline PowerSeries div_exact(const PowerSeries& a, const Rational& scalar, std::size_t k) {
  if (scalar == 0) {
    throw std::domain_error("div_exact: scalar divisor must be nonzero");
  }
  if (k > a.order()) {
    throw std::domain_error("div_exact: cannot drop x^" + std::to_string(k) +
                            " from a series of order " + std::to_string(a.order()));
  }
  for (std::size_t i = 0; i < k; ++i) {
    if (a[i] != 0) {
      throw std::logic_error("div_exact: coefficient of x^" + std::to_string(i) +
                             " is " + a[i].str() + ", expected 0");
    }
  }
  PowerSeries r(a.order() - k);
  for (std::size_t j = 0; j + k <= a.order(); ++j) r[j] = a[j + k] / scalar;
  return r;
}

/// scalar * x^k * a, truncated to the original order (the top k coefficients
/// fall off the end).
inline PowerSeries scale_shift(const PowerSeries& a, const Rational& scalar, std::size_t k) {
  PowerSeries r(a.order());
  for (std::size_t j = k; j <= a.order(); ++j) r[j] = scalar * a[j - k];
  return r;
}

inline std::string to_string(const PowerSeries& a) {
  std::ostringstream os;
  os << "[";
  for (std::size_t j = 0; j <= a.order(); ++j) {
    if (j) os << ", ";
    os << a[j].str();
  }
  os << "]";
  return os.str();
}

}  // namespace pathgf
