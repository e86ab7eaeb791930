#include <fstream>
#include <iostream>
#include <sstream>
#include <string>

#include <CLI11.hpp>

#include "permcount/comparison.hpp"
#include "permcount/errors.hpp"
#include "permcount/partition_diagram.hpp"
#include "permcount/query.hpp"
#include "permcount/verify.hpp"

namespace {

using permcount::Int;

constexpr int kExitOk = 0;
constexpr int kExitVerifyFail = 1;
constexpr int kExitUsage = 2;
constexpr int kExitRange = 3;

struct CountArgs {
  bool linear = false;
  bool circular = false;
  Int m = 0;
  Int n = -1;
  std::string kinds;
  Int cap = -1;
  std::string groups;
  std::string method = "auto";
  std::string format = "json";
  bool cross_check = false;
};

struct DiagramArgs {
  Int m = 0;
  Int n = 0;
  Int cap = -1;
};

struct VerifyArgs {
  std::string suite;
  Int max_m = -1;
  Int max_n = -1;
  Int max_l = -1;
  Int max_s = -1;
  bool unsafe_large = false;
};

struct CompareArgs {
  Int max_m = 3;
  Int max_total = 5;
  Int max_group_cap = 3;
  std::string out;
  bool unsafe_large = false;
};

std::vector<Int> parse_int_list(const std::string& text, char sep, const char* what) {
  std::vector<Int> out;
  std::stringstream ss(text);
  std::string item;
  while (std::getline(ss, item, sep)) {
    try {
      std::size_t used = 0;
      out.push_back(std::stoll(item, &used));
      if (used != item.size()) throw std::invalid_argument(item);
    } catch (const std::exception&) {
      throw permcount::UsageError(std::string("cannot parse ") + what + " entry '" + item + "'");
    }
  }
  if (out.empty()) throw permcount::UsageError(std::string("empty ") + what + " list");
  return out;
}

permcount::BoxGroupSpec parse_groups(const std::string& text) {
  permcount::BoxGroupSpec spec;
  std::stringstream ss(text);
  std::string item;
  while (std::getline(ss, item, ',')) {
    const auto colon = item.find(':');
    if (colon == std::string::npos)
      throw permcount::UsageError("group entries use boxes:cap, e.g. --groups 1:2,2:3");
    const auto boxes = parse_int_list(item.substr(0, colon), ',', "group");
    const auto caps = parse_int_list(item.substr(colon + 1), ',', "group");
    spec.groups.push_back({boxes.front(), caps.front()});
  }
  if (spec.groups.empty()) throw permcount::UsageError("empty group list");
  return spec;
}

permcount::CountQuery build_query(const CountArgs& args) {
  permcount::CountQuery query;
  if (args.linear && args.circular)
    throw permcount::UsageError("choose one of --linear / --circular");
  query.arrangement =
      args.circular ? permcount::Arrangement::circular : permcount::Arrangement::linear;
  query.m = args.m;
  if (args.n >= 0 && !args.kinds.empty())
    throw permcount::UsageError("give either -n or --kinds, not both");
  if (args.n >= 0)
    query.kinds = {args.n};
  else if (!args.kinds.empty())
    query.kinds = parse_int_list(args.kinds, ',', "kinds");
  else
    throw permcount::UsageError("an object count is required (-n or --kinds)");
  if (args.cap >= 0 && !args.groups.empty())
    throw permcount::UsageError("give either --cap or --groups, not both");
  if (args.cap >= 0)
    query.caps.uniform = args.cap;
  else if (!args.groups.empty())
    query.caps.groups = parse_groups(args.groups);
  else
    throw permcount::UsageError("a cap is required (--cap or --groups)");
  query.method = permcount::parse_method(args.method);
  return query;
}

int run_count(const CountArgs& args) {
  const auto query = build_query(args);
  const auto report = permcount::run_count_query(query);
  if (args.format == "json")
    std::cout << permcount::report_to_json(report);
  else if (args.format == "csv")
    std::cout << permcount::report_to_csv(report);
  else if (args.format == "text") {
    std::cout << permcount::report_to_text(report);
    for (const auto& w : report.warnings) std::cerr << "warning: " << w << "\n";
  } else {
    throw permcount::UsageError("unknown format '" + args.format + "' (json|csv|text)");
  }
  if (args.cross_check) {
    const auto disagreements = permcount::cross_check_query(query);
    if (!disagreements.empty()) {
      for (const auto& d : disagreements) std::cerr << "cross-check mismatch: " << d << "\n";
      return kExitVerifyFail;
    }
    std::cerr << "cross-check: all admissible non-paper methods agree\n";
  }
  return kExitOk;
}

int run_diagram(const DiagramArgs& args) {
  const auto diagram = permcount::generate_diagram(args.m, args.n);
  const auto marker =
      args.cap >= 0 ? permcount::first_row_with_cap(diagram, args.cap) : std::nullopt;
  for (Int i = 1; i <= diagram.row_count(); ++i) {
    const auto& row = diagram.rows[static_cast<std::size_t>(i - 1)];
    if (marker && *marker == i) std::cout << "# i_l(cap=" << args.cap << ") = " << i << "\n";
    std::cout << "i=" << i << ": ";
    for (std::size_t q = 0; q < row.occupancies.size(); ++q) {
      if (q > 0) std::cout << ',';
      std::cout << row.occupancies[q];
    }
    std::cout << " | ";
    const auto mult = permcount::multiplicities(row);
    for (std::size_t j = 0; j < mult.multiplicities.size(); ++j) {
      if (j > 0) std::cout << ',';
      std::cout << mult.multiplicities[j];
    }
    std::cout << " | " << permcount::row_permutations(row) << "\n";
  }
  if (args.cap >= 0 && !marker) std::cout << "# i_l(cap=" << args.cap << ") = none\n";
  return kExitOk;
}

void enforce_suite_bounds(const VerifyArgs& args) {
  if (args.unsafe_large) return;
  const auto defaults = permcount::suite_default_bounds(args.suite);
  auto check = [&](Int requested, Int hard, const char* name) {
    if (requested > hard) {
      std::ostringstream os;
      os << "--" << name << " " << requested << " exceeds the suite default " << hard
         << "; pass --unsafe-large to run anyway";
      throw permcount::UsageError(os.str());
    }
  };
  check(args.max_m, defaults.max_m, "max-m");
  check(args.max_n, defaults.max_n, "max-n");
  check(args.max_l, defaults.max_l, "max-l");
  check(args.max_s, defaults.max_s, "max-s");
}

int run_verify(const VerifyArgs& args) {
  enforce_suite_bounds(args);
  permcount::SuiteBounds bounds;
  bounds.max_m = args.max_m;
  bounds.max_n = args.max_n;
  bounds.max_l = args.max_l;
  bounds.max_s = args.max_s;
  const auto result = permcount::run_suite(args.suite, bounds);
  for (const auto& note : result.notes) std::cout << note << "\n";
  for (const auto& failure : result.failures)
    std::cout << "FAIL " << failure.label << ": " << failure.detail << "\n";
  std::cout << "suite " << result.suite << ": " << result.cases << " cases, "
            << result.failures.size() << " failures -> " << (result.passed() ? "pass" : "fail")
            << "\n";
  return result.passed() ? kExitOk : kExitVerifyFail;
}

int run_compare(const CompareArgs& args) {
  if (!args.unsafe_large && (args.max_m > 4 || args.max_total > 7)) {
    throw permcount::UsageError(
        "grids beyond max-m 4 / max-total 7 need --unsafe-large (enumeration cost)");
  }
  permcount::ComparisonGrid grid;
  grid.max_m = args.max_m;
  grid.max_total = args.max_total;
  grid.max_group_cap = args.max_group_cap;
  const auto report = permcount::build_comparison_report(grid);
  if (args.out.empty()) {
    permcount::write_comparison_report(report, std::cout);
  } else {
    std::ofstream file(args.out);
    if (!file) throw permcount::UsageError("cannot open output path '" + args.out + "'");
    permcount::write_comparison_report(report, file);
    if (!file.good()) throw permcount::UsageError("write failed for '" + args.out + "'");
  }
  if (!report.references_ok()) {
    std::cerr << "internal reference failure: burnside and oracle disagree on "
              << report.ref_mismatches() << " record(s)\n";
    return kExitVerifyFail;
  }
  return kExitOk;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{
      "permcount: exact counts of bounded distributions of identical objects into boxes,\n"
      "for boxes in a row or on a circle, with several independent methods.\n"};
  app.require_subcommand(1);
  app.set_config("--config")->description("read options from an ini file (key=value)");
  app.footer(permcount::admissibility_table() +
             "exit codes: 0 ok, 1 verification failure, 2 usage error, 3 formula range error\n");

  CountArgs count_args;
  auto* count = app.add_subcommand("count", "count distributions for one parameter set");
  count->add_flag("--linear", count_args.linear, "boxes in a row (default)");
  count->add_flag("--circular", count_args.circular, "boxes on a circle, rotations identified");
  count->add_option("-m,--boxes", count_args.m, "number of boxes")->required();
  count->add_option("-n,--objects", count_args.n, "object count (single kind)");
  count->add_option("--kinds", count_args.kinds, "per-kind object counts n1,n2[,n3]");
  count->add_option("--cap", count_args.cap, "uniform per-box occupancy cap");
  count->add_option("--groups", count_args.groups, "per-group caps as boxes:cap[,boxes:cap...]");
  count->add_option("--method", count_args.method, "counting method (default auto)");
  count->add_option("--format", count_args.format, "output format: json|csv|text (default json)");
  count->add_flag("--cross-check", count_args.cross_check,
                  "also run all admissible non-paper methods and compare");

  DiagramArgs diagram_args;
  auto* diagram = app.add_subcommand("diagram", "dump the modified partition diagram");
  diagram->add_option("-m,--boxes", diagram_args.m, "number of boxes")->required();
  diagram->add_option("-n,--objects", diagram_args.n, "object count")->required();
  diagram->add_option("--cap", diagram_args.cap, "mark the first row within this cap");

  VerifyArgs verify_args;
  auto* verify = app.add_subcommand("verify", "run a named identity/agreement suite");
  {
    std::ostringstream names;
    for (auto name : permcount::suite_names()) names << ' ' << name;
    verify->add_option("suite", verify_args.suite, "suite name:" + names.str())->required();
  }
  verify->add_option("--max-m", verify_args.max_m, "grid bound on boxes");
  verify->add_option("--max-n", verify_args.max_n, "grid bound on objects");
  verify->add_option("--max-l", verify_args.max_l, "grid bound on caps");
  verify->add_option("--max-s", verify_args.max_s, "grid bound on the identity's sum length");
  verify->add_flag("--unsafe-large", verify_args.unsafe_large,
                   "allow bounds beyond the suite defaults");

  CompareArgs compare_args;
  auto* compare = app.add_subcommand(
      "compare-circular", "tabulate the circular two-kind formulas against the references");
  compare->add_option("--max-m", compare_args.max_m, "grid bound on boxes (default 3)");
  compare->add_option("--max-total", compare_args.max_total,
                      "grid bound on n1+n2 (default 5)");
  compare->add_option("--max-group-cap", compare_args.max_group_cap,
                      "largest group cap tried (default 3)");
  compare->add_option("--out", compare_args.out, "write the report to this path (default stdout)");
  compare->add_flag("--unsafe-large", compare_args.unsafe_large,
                    "allow grids beyond the built-in limits");

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e);
    return code == 0 ? kExitOk : kExitUsage;
  }

  try {
    if (count->parsed()) return run_count(count_args);
    if (diagram->parsed()) return run_diagram(diagram_args);
    if (verify->parsed()) return run_verify(verify_args);
    if (compare->parsed()) return run_compare(compare_args);
    return kExitUsage;
  } catch (const permcount::FormulaRangeError& e) {
    std::cerr << "range error: " << e.what() << "\n";
    return kExitRange;
  } catch (const permcount::UsageError& e) {
    std::cerr << "usage error: " << e.what() << "\n";
    return kExitUsage;
  } catch (const std::domain_error& e) {
    std::cerr << "usage error: " << e.what() << "\n";
    return kExitUsage;
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kExitVerifyFail;
  }
}
