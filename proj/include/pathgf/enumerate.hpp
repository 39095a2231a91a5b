#pragma once

#include <cstddef>
#include <map>
#include <stdexcept>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

#include "pathgf/families.hpp"
#include "pathgf/rational.hpp"

namespace pathgf {

enum class StepKind { Up, Down, Level };

inline char step_char(StepKind k) {
  switch (k) {
    case StepKind::Up: return 'U';
    case StepKind::Down: return 'D';
    case StepKind::Level: return 'L';
  }
  throw std::logic_error("unknown step kind");
}

inline int step_rise(StepKind k) {
  switch (k) {
    case StepKind::Up: return 1;
    case StepKind::Down: return -1;
    case StepKind::Level: return 0;
  }
  throw std::logic_error("unknown step kind");
}

/// Horizontal width of a step. Level steps are (2,0) in the Schroder
/// families and (1,0) in Motzkin; up and down steps are always width 1.
inline std::size_t step_span(Family family, StepKind k) {
  if (k == StepKind::Level) {
    return family == Family::Motzkin ? 1 : 2;
  }
  return 1;
}

/// A path from the origin back to the x-axis that never dips below it.
/// Size is the coefficient index the path contributes to: the semilength
/// (half the horizontal span) for Catalan/Schroder paths, the step count
/// for Motzkin paths.
struct LatticePath {
  Family family = Family::Catalan;
  std::vector<StepKind> steps;

  std::size_t span() const {
    std::size_t total = 0;
    for (StepKind s : steps) total += step_span(family, s);
    return total;
  }

  std::size_t size() const {
    return family == Family::Motzkin ? span() : span() / 2;
  }

  unsigned down_steps() const {
    unsigned d = 0;
    for (StepKind s : steps) d += s == StepKind::Down;
    return d;
  }

  unsigned level_steps() const {
    unsigned l = 0;
    for (StepKind s : steps) l += s == StepKind::Level;
    return l;
  }

  bool operator==(const LatticePath&) const = default;
};

/// Default per-family size guard for exhaustive enumeration. Path counts
/// grow exponentially; anything past these needs an explicit override.
inline std::size_t default_size_cap(Family f) {
  switch (f) {
    case Family::Catalan: return 12;
    case Family::SchroderLarge:
    case Family::SchroderSmall: return 8;
    case Family::Motzkin: return 10;
  }
  throw std::logic_error("unknown family");
}

namespace detail {

template <typename Visitor>
void walk_paths(LatticePath& path, std::size_t height, std::size_t span_left,
                Visitor& visit) {
  if (span_left == 0) {
    if (height == 0) visit(std::as_const(path));
    return;
  }
  if (height > span_left) return;  // cannot get back to the axis

  const Family f = path.family;
  // Child order U, L, D: emission is lexicographic in the step string
  // under U < L < D.
  path.steps.push_back(StepKind::Up);
  walk_paths(path, height + 1, span_left - 1, visit);
  path.steps.back() = StepKind::Level;
  const std::size_t lspan = step_span(f, StepKind::Level);
  const bool level_ok =
      f != Family::Catalan && span_left >= lspan &&
      !(f == Family::SchroderSmall && height == 0);
  if (level_ok) walk_paths(path, height, span_left - lspan, visit);
  if (height > 0) {
    path.steps.back() = StepKind::Down;
    walk_paths(path, height - 1, span_left - 1, visit);
  }
  path.steps.pop_back();
}

}  // namespace detail

/// Visits every valid path of the family and size exactly once, in
/// lexicographic step-string order with U < L < D. The visited reference is
/// only valid during the call; copy it to keep it.
template <typename Visitor>
void for_each_path(Family family, std::size_t size, Visitor&& visit) {
  LatticePath path{family, {}};
  const std::size_t span = family == Family::Motzkin ? size : 2 * size;
  detail::walk_paths(path, 0, span, visit);
}

inline std::vector<LatticePath> enumerate_paths(Family family, std::size_t size) {
  std::vector<LatticePath> out;
  for_each_path(family, size, [&](const LatticePath& p) { out.push_back(p); });
  return out;
}

/// Exact weighted path count for one family, size, and coloring.
struct ColoredCount {
  Family family = Family::Catalan;
  unsigned m = 1;
  unsigned n = 1;
  std::size_t size = 0;
  BigInt count;
};

namespace detail {

inline std::vector<BigInt> power_table(unsigned base, std::size_t max_exp) {
  std::vector<BigInt> p(max_exp + 1);
  p[0] = 1;  // empty product, also for base 0
  for (std::size_t i = 1; i <= max_exp; ++i) p[i] = p[i - 1] * base;
  return p;
}

}  // namespace detail

/// Sum of m^(#down) * n^(#level) over all valid paths, as a direct per-path
/// weighted sum. Colored paths are never materialized: each color choice is
/// independent per step, so the weight per uncolored path already counts
/// every colored copy.
inline ColoredCount colored_count(Family family, std::size_t size, unsigned m, unsigned n) {
  const std::vector<BigInt> m_pow = detail::power_table(m, size);
  const std::vector<BigInt> n_pow = detail::power_table(n, size);
  BigInt total = 0;
  for_each_path(family, size, [&](const LatticePath& p) {
    total += m_pow[p.down_steps()] * n_pow[p.level_steps()];
  });
  return ColoredCount{family, m, n, size, std::move(total)};
}

/// Census of uncolored paths keyed by (down steps, level steps). Grouping
/// this way lets one enumeration serve every (m, n) coloring.
using StepHistogram = std::map<std::pair<unsigned, unsigned>, BigInt>;

inline StepHistogram step_histogram(Family family, std::size_t size) {
  StepHistogram hist;
  for_each_path(family, size, [&](const LatticePath& p) {
    hist[{p.down_steps(), p.level_steps()}] += 1;
  });
  return hist;
}

/// Weighted count from a census: sum over (d, l) of N(d, l) * m^d * n^l.
inline BigInt weighted_count(const StepHistogram& hist, unsigned m, unsigned n) {
  BigInt total = 0;
  for (const auto& [key, paths] : hist) {
    const auto [downs, levels] = key;
    BigInt w = paths;
    for (unsigned i = 0; i < downs; ++i) w *= m;
    for (unsigned i = 0; i < levels; ++i) w *= n;
    total += w;
  }
  return total;
}

inline std::string path_to_string(const LatticePath& p) {
  std::string s;
  s.reserve(p.steps.size());
  for (StepKind k : p.steps) s.push_back(step_char(k));
  return s;
}

/// Parses a step string ('U', 'D', 'L') and validates every path invariant:
/// staying on or above the axis, returning to it, no level steps at all for
/// Catalan, and none at height 0 for small Schroder. Positions in
/// diagnostics are 1-based.
inline LatticePath parse_path(std::string_view s, Family family) {
  LatticePath path{family, {}};
  path.steps.reserve(s.size());
  long height = 0;
  for (std::size_t i = 0; i < s.size(); ++i) {
    const std::size_t pos = i + 1;
    StepKind kind;
    switch (s[i]) {
      case 'U': kind = StepKind::Up; break;
      case 'D': kind = StepKind::Down; break;
      case 'L': kind = StepKind::Level; break;
      default:
        throw std::domain_error("invalid step character '" + std::string(1, s[i]) +
                                "' at position " + std::to_string(pos));
    }
    if (kind == StepKind::Level) {
      if (family == Family::Catalan) {
        throw std::domain_error("level step not allowed in catalan paths at position " +
                                std::to_string(pos));
      }
      if (family == Family::SchroderSmall && height == 0) {
        throw std::domain_error("level step at height 0 at position " + std::to_string(pos));
      }
    }
    height += step_rise(kind);
    if (height < 0) {
      throw std::domain_error("path drops below the x-axis at position " + std::to_string(pos));
    }
    path.steps.push_back(kind);
  }
  if (height != 0) {
    throw std::domain_error("final height " + std::to_string(height) + ", expected 0");
  }
  return path;
}

/// Oracle route for a whole sequence: brute-force colored counts for every
/// size 0..order. Independent of all generating-function algebra.
inline SequenceResult oracle_series(const FamilySpec& spec, std::size_t order) {
  std::vector<BigInt> coeffs;
  coeffs.reserve(order + 1);
  for (std::size_t size = 0; size <= order; ++size) {
    coeffs.push_back(colored_count(spec.family, size, spec.m, spec.n).count);
  }
  return SequenceResult{spec, Method::Oracle, std::move(coeffs)};
}

}  // namespace pathgf
