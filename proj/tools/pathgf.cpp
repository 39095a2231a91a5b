// Command-line front end: sequence generation, path listing, grid tables,
// and the three-way verification harness.
//
// Exit codes: 0 success (and verification agreement), 1 verification
// disagreement, 2 usage or precondition error.

#include <charconv>
#include <cstddef>
#include <fstream>
#include <iostream>
#include <sstream>
#include <stdexcept>
#include <string>
#include <vector>

#include <CLI11.hpp>
#include <json.hpp>

#include "pathgf/enumerate.hpp"
#include "pathgf/families.hpp"
#include "pathgf/report.hpp"

namespace {

using namespace pathgf;

struct Range {
  unsigned lo = 1;
  unsigned hi = 1;
  bool empty() const { return lo > hi; }
};

unsigned parse_unsigned(std::string_view text) {
  unsigned v = 0;
  const auto [ptr, ec] = std::from_chars(text.data(), text.data() + text.size(), v);
  if (ec != std::errc{} || ptr != text.data() + text.size()) {
    throw std::domain_error("invalid nonnegative integer '" + std::string(text) + "'");
  }
  return v;
}

Range parse_range(const std::string& text) {
  const auto sep = text.find("..");
  if (sep == std::string::npos) {
    const unsigned v = parse_unsigned(text);
    return Range{v, v};
  }
  return Range{parse_unsigned(text.substr(0, sep)), parse_unsigned(text.substr(sep + 2))};
}

/// Everything goes to standard output; with --out the same bytes also go to
/// the file.
void emit(const std::string& text, const std::string& out_path) {
  std::cout << text;
  if (!out_path.empty()) {
    std::ofstream file(out_path, std::ios::binary);
    if (!file) throw std::domain_error("cannot open output file '" + out_path + "'");
    file << text;
  }
}

void check_enumeration_cap(Family family, std::size_t size, bool force) {
  const std::size_t cap = default_size_cap(family);
  if (size > cap && !force) {
    throw std::domain_error("size " + std::to_string(size) + " exceeds the enumeration cap " +
                            std::to_string(cap) + " for " + family_name(family) +
                            "; pass --force to override");
  }
}

std::string render_records(const std::vector<OutputRecord>& records, const std::string& format,
                           bool single) {
  std::ostringstream os;
  if (format == "json") {
    if (single) {
      os << to_json(records.front()).dump(2) << '\n';
    } else {
      nlohmann::json arr = nlohmann::json::array();
      for (const OutputRecord& r : records) arr.push_back(to_json(r));
      os << arr.dump(2) << '\n';
    }
  } else if (format == "csv") {
    if (!records.empty()) {
      os << csv_header(records.front().order) << '\n';
      for (const OutputRecord& r : records) os << to_csv_row(r) << '\n';
    }
  } else {
    for (const OutputRecord& r : records) os << to_plain(r) << '\n';
  }
  return os.str();
}

struct SeriesArgs {
  std::string family;
  unsigned m = 1, n = 1;
  std::size_t order = 10;
  std::string method = "recurrence";
  std::string format = "plain";
  std::string out;
};

int run_series(const SeriesArgs& args) {
  const FamilySpec spec{family_from_name(args.family), args.m, args.n};
  const Method method = method_from_name(args.method);
  SequenceResult result{};
  switch (method) {
    case Method::ClosedForm:
      result = closed_form_series(spec, args.order);
      break;
    case Method::Recurrence:
      result = recurrence_series(spec, args.order);
      break;
    case Method::Oracle:
      result = oracle_series(spec, args.order);
      break;
  }
  emit(render_records({make_record(result)}, args.format, /*single=*/true), args.out);
  return 0;
}

struct EnumerateArgs {
  std::string family;
  std::size_t size = 0;
  bool list = false;
  std::string format = "plain";
  std::string out;
  bool force = false;
};

int run_enumerate(const EnumerateArgs& args) {
  const Family family = family_from_name(args.family);
  check_enumeration_cap(family, args.size, args.force);

  std::vector<std::string> paths;
  BigInt count = 0;
  if (args.list) {
    for_each_path(family, args.size, [&](const LatticePath& p) {
      paths.push_back(path_to_string(p));
    });
    count = paths.size();
  } else {
    count = colored_count(family, args.size, 1, 1).count;
  }

  std::ostringstream os;
  if (args.format == "json") {
    nlohmann::json obj{{"family", family_name(family)},
                       {"size", args.size},
                       {"count", count.str()}};
    if (args.list) obj["paths"] = paths;
    os << obj.dump(2) << '\n';
  } else if (args.format == "csv") {
    if (args.list) {
      os << "family,size,path\n";
      for (const std::string& p : paths) {
        os << family_name(family) << ',' << args.size << ',' << p << '\n';
      }
    } else {
      os << "family,size,count\n"
         << family_name(family) << ',' << args.size << ',' << count.str() << '\n';
    }
  } else {
    if (args.list) {
      for (const std::string& p : paths) os << p << '\n';
    } else {
      os << count.str() << '\n';
    }
  }
  emit(os.str(), args.out);
  return 0;
}

struct TableArgs {
  std::string family;
  std::string m_range = "1..3";
  std::string n_range = "1..1";
  std::size_t order = 10;
  std::string method = "recurrence";
  std::string format = "plain";
  std::string out;
};

int run_table(const TableArgs& args) {
  const Family family = family_from_name(args.family);
  const Method method = method_from_name(args.method);
  const Range ms = parse_range(args.m_range);
  const Range ns = parse_range(args.n_range);

  std::vector<OutputRecord> records;
  for (unsigned m = ms.lo; !ms.empty() && m <= ms.hi; ++m) {
    for (unsigned n = ns.lo; !ns.empty() && n <= ns.hi; ++n) {
      const FamilySpec spec{family, m, n};
      SequenceResult result{};
      switch (method) {
        case Method::ClosedForm:
          result = closed_form_series(spec, args.order);
          break;
        case Method::Recurrence:
          result = recurrence_series(spec, args.order);
          break;
        case Method::Oracle:
          result = oracle_series(spec, args.order);
          break;
      }
      records.push_back(make_record(result));
    }
  }
  emit(render_records(records, args.format, /*single=*/false), args.out);
  return 0;
}

struct VerifyArgs {
  std::vector<std::string> families;
  std::string m_range = "1..3";
  std::string n_range = "1..3";
  std::size_t max_size = 8;
  std::string format = "plain";
  std::string out;
  bool force = false;
  bool inject_fault = false;
};

int run_verify(const VerifyArgs& args) {
  VerifyOptions opts;
  if (!args.families.empty()) {
    opts.families.clear();
    for (const std::string& name : args.families) {
      opts.families.push_back(family_from_name(name));
    }
  }
  const Range ms = parse_range(args.m_range);
  const Range ns = parse_range(args.n_range);
  opts.m_lo = ms.lo;
  opts.m_hi = ms.hi;
  opts.n_lo = ns.lo;
  opts.n_hi = ns.hi;
  opts.max_size = args.max_size;
  opts.inject_fault = args.inject_fault;

  for (Family f : opts.families) check_enumeration_cap(f, opts.max_size, args.force);

  const VerificationReport report = run_verification(opts);

  std::string text;
  if (args.format == "json") {
    text = to_json(report).dump(2) + "\n";
  } else if (args.format == "csv") {
    text = to_csv(report);
  } else {
    text = to_plain(report);
  }
  emit(text, args.out);

  if (!report.overall) {
    if (const VerificationCell* cell = report.first_disagreement()) {
      std::cerr << "first disagreement: " << describe_cell(*cell) << '\n';
    }
    return 1;
  }
  return 0;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Colored lattice-path sequences: exact closed forms, first-return "
               "recurrences, and a brute-force enumeration oracle"};
  app.require_subcommand(1);

  const std::string family_help = "catalan, schroder-large, schroder-small, or motzkin";
  const std::string format_help = "output format: json, csv, or plain";

  SeriesArgs series;
  CLI::App* series_cmd = app.add_subcommand("series", "Print one coefficient sequence");
  series_cmd->add_option("--family", series.family, family_help)->required();
  series_cmd->add_option("-m", series.m, "colors on the down step (default 1)");
  series_cmd->add_option("-n", series.n, "colors on the level step (default 1)");
  series_cmd->add_option("--order", series.order, "highest size to compute (default 10)");
  series_cmd->add_option("--method", series.method, "closed, recurrence, or oracle");
  series_cmd->add_option("--format", series.format, format_help);
  series_cmd->add_option("--out", series.out, "also write the output bytes to this file");

  EnumerateArgs enumerate;
  CLI::App* enum_cmd = app.add_subcommand("enumerate", "Count or list the paths of one size");
  enum_cmd->add_option("--family", enumerate.family, family_help)->required();
  enum_cmd->add_option("--size", enumerate.size, "path size")->required();
  enum_cmd->add_flag("--list", enumerate.list,
                     "print one step string per line (lexicographic, U < L < D)");
  enum_cmd->add_option("--format", enumerate.format, format_help);
  enum_cmd->add_option("--out", enumerate.out, "also write the output bytes to this file");
  enum_cmd->add_flag("--force", enumerate.force, "ignore the enumeration size cap");

  TableArgs table;
  CLI::App* table_cmd = app.add_subcommand("table", "Print sequences for a grid of colorings");
  table_cmd->add_option("--family", table.family, family_help)->required();
  table_cmd->add_option("-m", table.m_range, "down-step color range, N or LO..HI (default 1..3)");
  table_cmd->add_option("-n", table.n_range, "level-step color range, N or LO..HI (default 1..1)");
  table_cmd->add_option("--order", table.order, "highest size to compute (default 10)");
  table_cmd->add_option("--method", table.method, "closed, recurrence, or oracle");
  table_cmd->add_option("--format", table.format, format_help);
  table_cmd->add_option("--out", table.out, "also write the output bytes to this file");

  VerifyArgs verify;
  CLI::App* verify_cmd = app.add_subcommand(
      "verify", "Cross-check closed form, recurrence, and oracle over a grid");
  verify_cmd->add_option("--families", verify.families, "families to check (default all)")
      ->delimiter(',');
  verify_cmd->add_option("-m", verify.m_range, "down-step color range (default 1..3)");
  verify_cmd->add_option("-n", verify.n_range, "level-step color range (default 1..3)");
  verify_cmd->add_option("--max-size", verify.max_size, "highest size per cell (default 8)");
  verify_cmd->add_option("--format", verify.format, format_help);
  verify_cmd->add_option("--out", verify.out, "also write the output bytes to this file");
  verify_cmd->add_flag("--force", verify.force, "ignore the enumeration size caps");
  verify_cmd->add_flag("--inject-fault", verify.inject_fault,
                       "test-only: perturb one recurrence coefficient")
      ->group("");  // hidden

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e);
    return code == 0 ? 0 : 2;
  }

  try {
    if (series_cmd->parsed()) return run_series(series);
    if (enum_cmd->parsed()) return run_enumerate(enumerate);
    if (table_cmd->parsed()) return run_table(table);
    if (verify_cmd->parsed()) return run_verify(verify);
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << '\n';
    return 2;
  }
  return 0;
}
