#pragma once

#include <array>
#include <cstddef>
#include <stdexcept>
#include <string>
#include <string_view>
#include <vector>

#include "pathgf/power_series.hpp"
#include "pathgf/rational.hpp"

namespace pathgf {

/// The four lattice-path families. Catalan paths use up (1,1) and down
/// (1,-1) steps only; the Schroder families add a (2,0) level step (banned
/// at height 0 for the small variant); Motzkin paths use a (1,0) level step.
enum class Family { Catalan, SchroderLarge, SchroderSmall, Motzkin };

inline constexpr std::array<Family, 4> kAllFamilies = {
    Family::Catalan, Family::SchroderLarge, Family::SchroderSmall, Family::Motzkin};

inline std::string family_name(Family f) {
  switch (f) {
    case Family::Catalan: return "catalan";
    case Family::SchroderLarge: return "schroder-large";
    case Family::SchroderSmall: return "schroder-small";
    case Family::Motzkin: return "motzkin";
  }
  throw std::logic_error("unknown family");
}

inline Family family_from_name(std::string_view name) {
  for (Family f : kAllFamilies) {
    if (family_name(f) == name) return f;
  }
  throw std::domain_error("unknown family '" + std::string(name) +
                          "'; expected one of catalan, schroder-large, schroder-small, motzkin");
}

/// A path family together with its color weights: m colors on the down step
/// and n colors on the level step. Catalan paths have no level step, so n is
/// accepted there but ignored (and reported as ignored in output metadata).
struct FamilySpec {
  Family family = Family::Catalan;
  unsigned m = 1;
  unsigned n = 1;

  bool level_colors_ignored() const { return family == Family::Catalan; }

  /// True where the color semantics is not pinned down by a known generating
  /// function: small Schroder paths with n != 1 (level steps above the axis
  /// weighted n per step is the natural reading, but no closed form backs it).
  bool conjectural_semantics() const {
    return family == Family::SchroderSmall && n != 1;
  }

  bool operator==(const FamilySpec&) const = default;
};

enum class Method { ClosedForm, Recurrence, Oracle };

inline std::string method_name(Method m) {
  switch (m) {
    case Method::ClosedForm: return "closed";
    case Method::Recurrence: return "recurrence";
    case Method::Oracle: return "oracle";
  }
  throw std::logic_error("unknown method");
}

inline Method method_from_name(std::string_view name) {
  if (name == "closed") return Method::ClosedForm;
  if (name == "recurrence") return Method::Recurrence;
  if (name == "oracle") return Method::Oracle;
  throw std::domain_error("unknown method '" + std::string(name) +
                          "'; expected closed, recurrence, or oracle");
}

/// Coefficient sequence of one family/coloring, indexed by size 0..order.
struct SequenceResult {
  FamilySpec spec;
  Method method = Method::Recurrence;
  std::vector<BigInt> coefficients;

  std::size_t order() const { return coefficients.size() - 1; }
};

/// The universal first-return shape
///   F = 1 + linear_weight * x * F + quadratic_weight * x^quadratic_power * F^2.
/// Catalan:        linear 0, quadratic m, power 1
/// large Schroder: linear n, quadratic m, power 1
/// Motzkin:        linear n, quadratic m, power 2
/// Small Schroder paths are not of this shape (their first return is linear
/// given the large-Schroder series) and are handled by small_schroder_series.
struct FunctionalEquation {
  Rational linear_weight;
  Rational quadratic_weight;
  std::size_t quadratic_power = 1;

  bool operator==(const FunctionalEquation&) const = default;
};

inline FunctionalEquation functional_equation_of(const FamilySpec& spec) {
  switch (spec.family) {
    case Family::Catalan:
      return {Rational(0), Rational(spec.m), 1};
    case Family::SchroderLarge:
      return {Rational(spec.n), Rational(spec.m), 1};
    case Family::Motzkin:
      return {Rational(spec.n), Rational(spec.m), 2};
    case Family::SchroderSmall:
      throw std::domain_error(
          "small Schroder paths do not have the quadratic first-return shape; "
          "use small_schroder_series");
  }
  throw std::logic_error("unknown family");
}

namespace detail {

/// Converts an exactly-integral rational series into the integer sequence it
/// represents. Path counts are nonnegative integers starting at 1 (the empty
/// path), so any other outcome is an algebra bug and fails loudly.
inline std::vector<BigInt> emit_counts(const PowerSeries& s, const std::string& context) {
  std::vector<BigInt> out;
  out.reserve(s.order() + 1);
  for (std::size_t j = 0; j <= s.order(); ++j) {
    if (!is_integer(s[j])) {
      throw std::logic_error(context + ": coefficient of x^" + std::to_string(j) +
                             " is " + s[j].str() + ", not an integer");
    }
    out.push_back(numerator(s[j]));
    if (out.back() < 0) {
      throw std::logic_error(context + ": coefficient of x^" + std::to_string(j) +
                             " is negative (" + out.back().str() + ")");
    }
  }
  if (out[0] != 1) {
    throw std::logic_error(context + ": constant term is " + out[0].str() + ", expected 1");
  }
  return out;
}

/// c_0 = 1, c_j = linear*c_{j-1} + quad * sum_{i=0}^{j-k} c_i c_{j-k-i}
/// (the convolution term is empty while j < k).
inline std::vector<BigInt> first_return_recurrence(const BigInt& linear, const BigInt& quad,
                                                   std::size_t k, std::size_t order) {
  std::vector<BigInt> c(order + 1);
  c[0] = 1;
  for (std::size_t j = 1; j <= order; ++j) {
    BigInt v = linear * c[j - 1];
    if (j >= k) {
      BigInt conv = 0;
      for (std::size_t i = 0; i + k <= j; ++i) conv += c[i] * c[j - k - i];
      v += quad * conv;
    }
    c[j] = v;
  }
  return c;
}

}  // namespace detail

/// Coefficient sequence by the first-return recurrence. For the three
/// quadratic families this runs the (linear, quadratic, power) recurrence
/// directly. Small Schroder paths first need the large-Schroder sequence
/// S with the same coloring: every first return is up, S, down (m choices),
/// then s again, so s_j = m * sum_{i<j} S_i s_{j-1-i}.
inline SequenceResult recurrence_series(const FamilySpec& spec, std::size_t order) {
  std::vector<BigInt> c;
  if (spec.family == Family::SchroderSmall) {
    const std::vector<BigInt> large =
        detail::first_return_recurrence(spec.n, spec.m, 1, order);
    c.assign(order + 1, 0);
    c[0] = 1;
    for (std::size_t j = 1; j <= order; ++j) {
      BigInt acc = 0;
      for (std::size_t i = 0; i < j; ++i) acc += large[i] * c[j - 1 - i];
      c[j] = spec.m * acc;
    }
  } else {
    const FunctionalEquation eq = functional_equation_of(spec);
    c = detail::first_return_recurrence(to_integer(eq.linear_weight),
                                        to_integer(eq.quadratic_weight),
                                        eq.quadratic_power, order);
  }
  return SequenceResult{spec, Method::Recurrence, std::move(c)};
}

/// Expands the family's closed form
///   F = (1 - a x - sqrt((1 - a x)^2 - 4 b x^k)) / (2 b x^k)
/// (with a, b, k from the functional equation), or for small Schroder with
/// n = 1 the linear-solve form (1 + x - sqrt(1 - 2(1+2m)x + x^2)) / (2(1+m)x).
/// All arithmetic is exact; the result is checked for integrality on emission.
/// m = 0 is a removable singularity of every closed form and is rejected;
/// use recurrence_series or the oracle there.
inline SequenceResult closed_form_series(const FamilySpec& spec, std::size_t order) {
  if (spec.m == 0) {
    throw std::domain_error(
        "closed form undefined at m = 0 (removable singularity); "
        "use the recurrence or oracle method");
  }

  PowerSeries result = PowerSeries::one(0);
  if (spec.family == Family::SchroderSmall) {
    if (spec.n != 1) {
      throw std::domain_error(
          "no known closed form for small Schroder paths with n != 1; "
          "use the recurrence or oracle method");
    }
    const std::size_t work = order + 1;
    const Rational mm(spec.m);
    const PowerSeries radicand =
        PowerSeries::polynomial({1, -2 * (1 + 2 * mm), 1}, work);
    const PowerSeries numerator =
        PowerSeries::polynomial({1, 1}, work) - sqrt(radicand);
    result = div_exact(numerator, 2 * (1 + mm), 1);
  } else {
    const FunctionalEquation eq = functional_equation_of(spec);
    const Rational& a = eq.linear_weight;
    const Rational& b = eq.quadratic_weight;
    const std::size_t k = eq.quadratic_power;
    const std::size_t work = order + k;
    PowerSeries radicand = PowerSeries::polynomial({1, -2 * a, a * a}, work);
    radicand[k] -= 4 * b;
    const PowerSeries numerator =
        PowerSeries::polynomial({1, -a}, work) - sqrt(radicand);
    result = div_exact(numerator, 2 * b, k);
  }

  return SequenceResult{
      spec, Method::ClosedForm,
      detail::emit_counts(result, "closed form for " + family_name(spec.family))};
}

/// Small Schroder sequence by the linear solve s = 1 / (1 - m x S_m), with
/// the m-colored large-Schroder sequence S_m supplied by its recurrence.
/// Equals the closed form for every m >= 1; m = 0 leaves only the empty path.
inline SequenceResult small_schroder_series(unsigned m, std::size_t order) {
  const std::vector<BigInt> large =
      detail::first_return_recurrence(1, m, 1, order);
  std::vector<Rational> coeffs(large.begin(), large.end());
  const PowerSeries large_series{std::move(coeffs)};
  const PowerSeries s =
      reciprocal(PowerSeries::one(order) - scale_shift(large_series, m, 1));
  return SequenceResult{FamilySpec{Family::SchroderSmall, m, 1},
                        Method::Recurrence,
                        detail::emit_counts(s, "small Schroder linear solve")};
}

}  // namespace pathgf
