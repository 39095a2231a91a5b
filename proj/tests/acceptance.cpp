// Integration gate: runs every cross-verification criterion end to end and
// prints one pass/fail line per criterion. Exits nonzero if any fail.

#include <array>
#include <chrono>
#include <cstdio>
#include <functional>
#include <iomanip>
#include <iostream>
#include <random>
#include <sstream>
#include <string>
#include <sys/wait.h>
#include <vector>

#include <json.hpp>

#include "pathgf/enumerate.hpp"
#include "pathgf/families.hpp"
#include "pathgf/power_series.hpp"
#include "pathgf/report.hpp"
#include "random_series.hpp"

using namespace pathgf;

namespace {

struct Check {
  bool ok = true;
  std::string detail;

  void expect(bool condition, const std::string& message) {
    if (!condition && ok) {
      ok = false;
      detail = message;
    }
  }
};

struct CliResult {
  int exit_code = -1;
  std::string output;
};

CliResult run_cli(const std::string& args) {
  const std::string cmd = std::string(PATHGF_CLI_PATH) + " " + args + " 2>/dev/null";
  FILE* pipe = popen(cmd.c_str(), "r");
  CliResult result;
  if (!pipe) return result;
  std::array<char, 4096> buffer{};
  std::size_t got = 0;
  while ((got = fread(buffer.data(), 1, buffer.size(), pipe)) > 0) {
    result.output.append(buffer.data(), got);
  }
  const int status = pclose(pipe);
  result.exit_code = WIFEXITED(status) ? WEXITSTATUS(status) : -1;
  return result;
}

std::string show(const std::vector<BigInt>& v) {
  std::ostringstream os;
  for (std::size_t i = 0; i < v.size(); ++i) os << (i ? " " : "") << v[i].str();
  return os.str();
}

// --- criteria ---------------------------------------------------------

Check uncolored_baselines() {
  Check c;
  const std::vector<std::pair<Family, std::vector<BigInt>>> expected = {
      {Family::Catalan, {1, 1, 2, 5, 14, 42, 132, 429, 1430}},
      {Family::SchroderLarge, {1, 2, 6, 22, 90, 394, 1806, 8558, 41586}},
      {Family::SchroderSmall, {1, 1, 3, 11, 45, 197, 903, 4279, 20793}},
      {Family::Motzkin, {1, 1, 2, 4, 9, 21, 51, 127, 323}},
  };
  for (const auto& [family, want] : expected) {
    const FamilySpec spec{family, 1, 1};
    const auto rec = recurrence_series(spec, 8).coefficients;
    const auto closed = closed_form_series(spec, 8).coefficients;
    const auto oracle = oracle_series(spec, 8).coefficients;
    c.expect(rec == want, family_name(family) + " recurrence: " + show(rec));
    c.expect(closed == want, family_name(family) + " closed form: " + show(closed));
    c.expect(oracle == want, family_name(family) + " oracle: " + show(oracle));
  }
  return c;
}

Check three_way_grid() {
  Check c;
  const VerificationReport report = run_verification(VerifyOptions{});
  c.expect(report.overall,
           report.first_disagreement() ? describe_cell(*report.first_disagreement())
                                       : std::string("empty report"));
  c.expect(report.cells.size() == 4 * 3 * 3 * 9, "unexpected cell count");
  for (const VerificationCell& cell : report.cells) {
    const bool closed_expected =
        cell.spec.family != Family::SchroderSmall || cell.spec.n == 1;
    c.expect(cell.closed_form.has_value() == closed_expected,
             "closed-form presence wrong at " + describe_cell(cell));
  }
  return c;
}

Check catalan_scaling() {
  Check c;
  const auto base = recurrence_series({Family::Catalan, 1, 1}, 12).coefficients;
  for (unsigned m : {1u, 2u, 3u, 5u}) {
    const auto colored = recurrence_series({Family::Catalan, m, 1}, 12).coefficients;
    BigInt power = 1;
    for (std::size_t j = 0; j <= 12; ++j) {
      c.expect(colored[j] == power * base[j],
               "m=" + std::to_string(m) + " j=" + std::to_string(j));
      power *= m;
    }
  }
  return c;
}

Check schroder_pairing() {
  Check c;
  const auto large = recurrence_series({Family::SchroderLarge, 1, 1}, 12).coefficients;
  const auto small = recurrence_series({Family::SchroderSmall, 1, 1}, 12).coefficients;
  c.expect(large[0] == 1 && small[0] == 1, "constant terms");
  for (std::size_t j = 1; j <= 12; ++j) {
    c.expect(large[j] == 2 * small[j], "j=" + std::to_string(j));
  }
  return c;
}

Check motzkin_catalan_bridge() {
  Check c;
  const auto motzkin = recurrence_series({Family::Motzkin, 1, 2}, 11).coefficients;
  const auto catalan = recurrence_series({Family::Catalan, 1, 1}, 12).coefficients;
  for (std::size_t j = 0; j <= 11; ++j) {
    c.expect(motzkin[j] == catalan[j + 1], "j=" + std::to_string(j));
  }
  return c;
}

Check series_kernel_properties() {
  Check c;
  std::mt19937_64 rng(testing::kSeed);
  constexpr std::size_t kOrder = 16;
  for (int iter = 0; iter < 200 && c.ok; ++iter) {
    const std::string tag = " (iteration " + std::to_string(iter) + ")";
    const PowerSeries a = testing::random_series(rng, kOrder);
    const PowerSeries b = testing::random_series(rng, kOrder);
    const PowerSeries d = testing::random_series(rng, kOrder);
    c.expect(a * b == b * a, "mul commutativity" + tag);
    c.expect((a * b) * d == a * (b * d), "mul associativity" + tag);

    const PowerSeries unit = testing::random_series_with_constant(rng, kOrder, 1);
    const PowerSeries root = sqrt(unit);
    c.expect(root * root == unit, "sqrt-square identity" + tag);

    const PowerSeries invertible = testing::random_series_with_constant(
        rng, kOrder, testing::random_nonzero_rational(rng));
    c.expect(invertible * reciprocal(invertible) == PowerSeries::one(kOrder),
             "reciprocal-multiply identity" + tag);

    const Rational scalar = testing::random_nonzero_rational(rng);
    const std::size_t shift = static_cast<std::size_t>(iter % 5);
    c.expect(div_exact(scale_shift(a, scalar, shift), scalar, shift) ==
                 a.truncated(kOrder - shift),
             "div/scale inverse" + tag);
  }
  return c;
}

Check degenerate_cases() {
  Check c;
  const std::vector<BigInt> only_empty = {1, 0, 0, 0, 0, 0};
  const std::vector<BigInt> all_ones = {1, 1, 1, 1, 1, 1};
  for (Family f : {Family::Catalan, Family::SchroderSmall}) {
    c.expect(recurrence_series({f, 0, 1}, 5).coefficients == only_empty,
             family_name(f) + " m=0 recurrence");
    c.expect(oracle_series({f, 0, 1}, 5).coefficients == only_empty,
             family_name(f) + " m=0 oracle");
  }
  c.expect(recurrence_series({Family::SchroderLarge, 0, 1}, 5).coefficients == all_ones,
           "schroder-large m=0 recurrence");
  c.expect(oracle_series({Family::SchroderLarge, 0, 1}, 5).coefficients == all_ones,
           "schroder-large m=0 oracle");
  for (Family f : kAllFamilies) {
    bool rejected = false;
    try {
      closed_form_series({f, 0, 1}, 4);
    } catch (const std::domain_error&) {
      rejected = true;
    }
    c.expect(rejected, family_name(f) + " closed form at m=0 not rejected");
  }
  return c;
}

Check small_schroder_linear_solve() {
  Check c;
  for (unsigned m = 1; m <= 3; ++m) {
    const auto solved = small_schroder_series(m, 10).coefficients;
    const auto closed = closed_form_series({Family::SchroderSmall, m, 1}, 10).coefficients;
    c.expect(solved == closed, "m=" + std::to_string(m) + ": " + show(solved) +
                                   " vs " + show(closed));
  }
  return c;
}

Check open_problem_sequences() {
  Check c;
  const CliResult cli = run_cli("series --family schroder-small -m 1 -n 2 --method oracle "
                                "--format json");
  c.expect(cli.exit_code == 0, "cli exited " + std::to_string(cli.exit_code));
  if (!c.ok) return c;

  const nlohmann::json j = nlohmann::json::parse(cli.output, nullptr, false);
  c.expect(!j.is_discarded(), "cli output is not valid json");
  if (!c.ok) return c;
  c.expect(j["metadata"]["conjectural_semantics"] == true, "conjectural flag missing");

  const std::size_t order = j["coefficients"].size() - 1;
  for (std::size_t size = 0; size <= order; ++size) {
    const BigInt direct = colored_count(Family::SchroderSmall, size, 1, 2).count;
    const BigInt grouped = weighted_count(step_histogram(Family::SchroderSmall, size), 1, 2);
    const BigInt from_cli{j["coefficients"][size].get<std::string>()};
    c.expect(direct == grouped,
             "direct vs grouped mismatch at size " + std::to_string(size));
    c.expect(from_cli == direct, "cli vs enumeration mismatch at size " + std::to_string(size));
  }
  return c;
}

struct Criterion {
  std::string name;
  std::function<Check()> run;
  double budget_seconds = 0;  // 0 = untimed
};

}  // namespace

int main() {
  const std::vector<Criterion> criteria = {
      {"uncolored baselines agree across all three methods", uncolored_baselines, 10.0},
      {"three-way agreement over the full color grid", three_way_grid, 60.0},
      {"catalan coloring rescales coefficients by m^j", catalan_scaling, 0},
      {"large and small Schroder sequences pair at one color", schroder_pairing, 0},
      {"two-colored-level Motzkin shifts into catalan", motzkin_catalan_bridge, 0},
      {"series kernel identities on 200 random series", series_kernel_properties, 10.0},
      {"degenerate colorings and closed-form rejection at m=0", degenerate_cases, 0},
      {"small Schroder linear solve equals its closed form", small_schroder_linear_solve, 0},
      {"open-problem sequences computable via the oracle", open_problem_sequences, 0},
  };

  int failures = 0;
  for (std::size_t i = 0; i < criteria.size(); ++i) {
    const auto start = std::chrono::steady_clock::now();
    Check check;
    try {
      check = criteria[i].run();
    } catch (const std::exception& e) {
      check.ok = false;
      check.detail = std::string("exception: ") + e.what();
    }
    const double elapsed =
        std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
    if (criteria[i].budget_seconds > 0 && elapsed > criteria[i].budget_seconds) {
      check.ok = false;
      check.detail = "exceeded " + std::to_string(criteria[i].budget_seconds) + " s budget";
    }

    std::ostringstream line;
    line << (check.ok ? "[PASS]" : "[FAIL]") << " " << (i + 1) << ". " << criteria[i].name
         << " (" << std::fixed << std::setprecision(2) << elapsed << " s)";
    if (!check.ok) line << " -- " << check.detail;
    std::cout << line.str() << '\n';
    failures += !check.ok;
  }

  if (failures) {
    std::cout << failures << " of " << criteria.size() << " criteria failed\n";
    return 1;
  }
  std::cout << "all " << criteria.size() << " criteria passed\n";
  return 0;
}
