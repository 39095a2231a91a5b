#pragma once

#include <algorithm>
#include <cstddef>
#include <optional>
#include <sstream>
#include <string>
#include <vector>

#include <json.hpp>

#include "pathgf/enumerate.hpp"
#include "pathgf/families.hpp"

namespace pathgf {

/// One sequence as emitted by the CLI. Coefficients are exact decimal
/// strings; nothing here is ever floating point.
struct OutputRecord {
  FamilySpec spec;
  Method method = Method::Recurrence;
  std::size_t order = 0;
  std::vector<std::string> coefficients;
  bool level_colors_ignored = false;
  bool conjectural_semantics = false;
};

inline OutputRecord make_record(const SequenceResult& result) {
  OutputRecord rec;
  rec.spec = result.spec;
  rec.method = result.method;
  rec.order = result.order();
  rec.coefficients.reserve(result.coefficients.size());
  for (const BigInt& c : result.coefficients) rec.coefficients.push_back(c.str());
  rec.level_colors_ignored = result.spec.level_colors_ignored();
  rec.conjectural_semantics = result.spec.conjectural_semantics();
  return rec;
}

inline nlohmann::json to_json(const OutputRecord& rec) {
  return nlohmann::json{
      {"spec",
       {{"family", family_name(rec.spec.family)}, {"m", rec.spec.m}, {"n", rec.spec.n}}},
      {"method", method_name(rec.method)},
      {"order", rec.order},
      {"coefficients", rec.coefficients},
      {"metadata",
       {{"n_ignored", rec.level_colors_ignored},
        {"conjectural_semantics", rec.conjectural_semantics}}}};
}

inline std::string csv_header(std::size_t order) {
  std::ostringstream os;
  os << "family,m,n,method";
  for (std::size_t j = 0; j <= order; ++j) os << ",c" << j;
  return os.str();
}

inline std::string to_csv_row(const OutputRecord& rec) {
  std::ostringstream os;
  os << family_name(rec.spec.family) << ',' << rec.spec.m << ',' << rec.spec.n << ','
     << method_name(rec.method);
  for (const std::string& c : rec.coefficients) os << ',' << c;
  return os.str();
}

inline std::string to_plain(const OutputRecord& rec) {
  std::ostringstream os;
  for (std::size_t j = 0; j < rec.coefficients.size(); ++j) {
    if (j) os << ' ';
    os << rec.coefficients[j];
  }
  return os.str();
}

/// One grid point of the three-way comparison. The closed-form value is
/// absent (not zero) where its preconditions exclude it: m = 0, or small
/// Schroder with n != 1.
struct VerificationCell {
  FamilySpec spec;
  std::size_t size = 0;
  std::optional<BigInt> closed_form;
  BigInt recurrence;
  BigInt oracle;
  bool agree = false;
};

struct VerificationReport {
  std::vector<VerificationCell> cells;
  bool overall = true;

  const VerificationCell* first_disagreement() const {
    for (const VerificationCell& c : cells) {
      if (!c.agree) return &c;
    }
    return nullptr;
  }
};

struct VerifyOptions {
  std::vector<Family> families{kAllFamilies.begin(), kAllFamilies.end()};
  unsigned m_lo = 1, m_hi = 3;
  unsigned n_lo = 1, n_hi = 3;
  std::size_t max_size = 8;
  /// Test-only: adds 1 to one recurrence coefficient (first grid spec, top
  /// size) so the harness can prove it actually detects disagreement.
  bool inject_fault = false;
};

inline bool closed_form_defined(const FamilySpec& spec) {
  if (spec.m == 0) return false;
  if (spec.family == Family::SchroderSmall && spec.n != 1) return false;
  return true;
}

/// Runs closed form (where defined), recurrence, and brute-force oracle over
/// the whole grid and compares them cell by cell. Cells come out sorted by
/// family, m, n, size. One enumeration census per (family, size) serves all
/// colorings of that cell column.
inline VerificationReport run_verification(const VerifyOptions& opts) {
  VerificationReport report;

  // Canonical family order, whatever order the caller gave.
  std::vector<Family> families;
  for (Family f : kAllFamilies) {
    if (std::find(opts.families.begin(), opts.families.end(), f) != opts.families.end()) {
      families.push_back(f);
    }
  }

  bool fault_pending = opts.inject_fault;
  for (Family family : families) {
    std::vector<StepHistogram> census;
    census.reserve(opts.max_size + 1);
    for (std::size_t size = 0; size <= opts.max_size; ++size) {
      census.push_back(step_histogram(family, size));
    }
    for (unsigned m = opts.m_lo; m <= opts.m_hi; ++m) {
      for (unsigned n = opts.n_lo; n <= opts.n_hi; ++n) {
        const FamilySpec spec{family, m, n};
        SequenceResult rec = recurrence_series(spec, opts.max_size);
        if (fault_pending) {
          rec.coefficients[opts.max_size] += 1;
          fault_pending = false;
        }
        std::optional<SequenceResult> closed;
        if (closed_form_defined(spec)) closed = closed_form_series(spec, opts.max_size);

        for (std::size_t size = 0; size <= opts.max_size; ++size) {
          VerificationCell cell;
          cell.spec = spec;
          cell.size = size;
          cell.recurrence = rec.coefficients[size];
          cell.oracle = weighted_count(census[size], m, n);
          if (closed) cell.closed_form = closed->coefficients[size];
          cell.agree = cell.recurrence == cell.oracle &&
                       (!cell.closed_form || *cell.closed_form == cell.recurrence);
          report.overall = report.overall && cell.agree;
          report.cells.push_back(std::move(cell));
        }
      }
    }
  }
  return report;
}

inline std::string describe_cell(const VerificationCell& c) {
  std::ostringstream os;
  os << "family=" << family_name(c.spec.family) << " m=" << c.spec.m << " n=" << c.spec.n
     << " size=" << c.size << ": closed="
     << (c.closed_form ? c.closed_form->str() : std::string("-"))
     << " recurrence=" << c.recurrence.str() << " oracle=" << c.oracle.str();
  return os.str();
}

inline nlohmann::json to_json(const VerificationReport& report) {
  nlohmann::json cells = nlohmann::json::array();
  for (const VerificationCell& c : report.cells) {
    nlohmann::json cell{
        {"spec",
         {{"family", family_name(c.spec.family)}, {"m", c.spec.m}, {"n", c.spec.n}}},
        {"size", c.size},
        {"recurrence", c.recurrence.str()},
        {"oracle", c.oracle.str()},
        {"agree", c.agree}};
    cell["closed_form"] = c.closed_form ? nlohmann::json(c.closed_form->str())
                                        : nlohmann::json(nullptr);
    cells.push_back(std::move(cell));
  }
  return nlohmann::json{{"cells", std::move(cells)}, {"overall", report.overall}};
}

inline std::string to_csv(const VerificationReport& report) {
  std::ostringstream os;
  os << "family,m,n,size,closed_form,recurrence,oracle,agree\n";
  for (const VerificationCell& c : report.cells) {
    os << family_name(c.spec.family) << ',' << c.spec.m << ',' << c.spec.n << ',' << c.size
       << ',' << (c.closed_form ? c.closed_form->str() : std::string()) << ','
       << c.recurrence.str() << ',' << c.oracle.str() << ','
       << (c.agree ? "true" : "false") << '\n';
  }
  return os.str();
}

inline std::string to_plain(const VerificationReport& report) {
  std::ostringstream os;
  for (const VerificationCell& c : report.cells) {
    os << describe_cell(c) << (c.agree ? " agree" : " DISAGREE") << '\n';
  }
  os << "overall: " << (report.overall ? "agree" : "disagree") << '\n';
  return os.str();
}

}  // namespace pathgf
