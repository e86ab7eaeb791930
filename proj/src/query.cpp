#include "permcount/query.hpp"

#include <chrono>
#include <sstream>

#include <nlohmann/json.hpp>

#include "permcount/circular_counts.hpp"
#include "permcount/comparison.hpp"
#include "permcount/errors.hpp"
#include "permcount/partition_diagram.hpp"
#include "permcount/two_kinds.hpp"

namespace permcount {

namespace {

struct MethodNameEntry {
  Method method;
  std::string_view name;
};

constexpr MethodNameEntry kMethodNames[] = {
    {Method::auto_select, "auto"},     {Method::incexc, "incexc"},
    {Method::diagram, "diagram"},      {Method::gf, "gf"},
    {Method::burnside, "burnside"},    {Method::oracle, "oracle"},
    {Method::paper_eq15, "paper-eq15"}, {Method::paper_eq16, "paper-eq16"},
    {Method::paper_eq17, "paper-eq17"}, {Method::paper_eq18, "paper-eq18"},
    {Method::paper_eq25, "paper-eq25"}, {Method::paper_eq26, "paper-eq26"},
    {Method::paper_eq27, "paper-eq27"},
};

bool is_paper_method(Method m) {
  switch (m) {
    case Method::paper_eq15:
    case Method::paper_eq16:
    case Method::paper_eq17:
    case Method::paper_eq18:
    case Method::paper_eq25:
    case Method::paper_eq26:
    case Method::paper_eq27:
      return true;
    default:
      return false;
  }
}

void validate_query(const CountQuery& q) {
  if (q.m < 1) throw UsageError("m must be >= 1");
  if (q.kinds.empty() || q.kinds.size() > 3)
    throw UsageError("between one and three kind counts required");
  for (Int n : q.kinds)
    if (n < 0) throw UsageError("kind counts must be >= 0");
  const bool has_uniform = q.caps.uniform.has_value();
  const bool has_groups = q.caps.groups.has_value();
  if (has_uniform == has_groups)
    throw UsageError("exactly one of a uniform cap or a group cap list is required");
  if (has_uniform && *q.caps.uniform < 0) throw UsageError("cap must be >= 0");
  if (has_groups) {
    q.caps.groups->validate();
    if (q.caps.groups->total_boxes() != q.m) {
      std::ostringstream os;
      os << "group boxes sum to " << q.caps.groups->total_boxes() << " but m = " << q.m;
      throw UsageError(os.str());
    }
  }
}

Method resolve_auto(const CountQuery& q) {
  const bool grouped = q.caps.groups.has_value();
  const std::size_t kinds = q.kinds.size();
  if (q.arrangement == Arrangement::linear) {
    if (grouped) return Method::oracle;         // no general grouped closed form
    if (kinds == 1) return Method::incexc;
    if (kinds == 2) return Method::diagram;     // the general split-count route
    return Method::oracle;
  }
  if (grouped) return Method::oracle;
  if (kinds == 1) return Method::diagram;       // the circular diagram sum
  if (kinds == 2) return Method::burnside;
  return Method::oracle;
}

Int kind(const CountQuery& q, std::size_t i) {
  return i < q.kinds.size() ? q.kinds[i] : 0;
}

std::vector<Int> effective_caps(const CountQuery& q) {
  if (q.caps.uniform) return uniform_caps(q.m, *q.caps.uniform);
  return q.caps.groups->per_box_caps();
}

BigCount dispatch(const CountQuery& q, Method method, std::vector<std::string>& warnings) {
  const bool grouped = q.caps.groups.has_value();
  const std::size_t kinds = q.kinds.size();
  const Int n1 = kind(q, 0), n2 = kind(q, 1), n3 = kind(q, 2);
  const Int cap = q.caps.uniform.value_or(0);

  auto inadmissible = [&]() -> UsageError {
    std::ostringstream os;
    os << "method '" << method_name(method) << "' is not admissible for "
       << (q.arrangement == Arrangement::linear ? "linear" : "circular") << " queries with "
       << kinds << " kind(s) and " << (grouped ? "group" : "uniform") << " caps\n"
       << admissibility_table();
    return UsageError(os.str());
  };

  if (method == Method::oracle) {
    const auto caps = effective_caps(q);
    return q.arrangement == Arrangement::linear ? oracle_linear(caps, n1, n2, n3)
                                                : oracle_circular(caps, n1, n2, n3);
  }

  if (q.arrangement == Arrangement::linear) {
    if (!grouped && kinds == 1) {
      switch (method) {
        case Method::incexc: return count_linear_incexc(q.m, n1, cap);
        case Method::diagram: return count_linear_diagram(q.m, n1, cap);
        case Method::gf: return gf_coefficient(q.m, n1, cap);
        default: throw inadmissible();
      }
    }
    if (!grouped && kinds == 2) {
      switch (method) {
        case Method::diagram: return count_two_kinds_linear(q.m, n1, n2, cap);
        case Method::paper_eq15: return count_two_kinds_restricted(q.m, n1, n2, cap);
        default: throw inadmissible();
      }
    }
    if (!grouped && kinds == 3) {
      if (method == Method::paper_eq18) return count_three_kinds_restricted(q.m, n1, n2, n3, cap);
      throw inadmissible();
    }
    if (grouped && kinds == 1) {
      if (method == Method::paper_eq17) return count_single_kind_groups(*q.caps.groups, n1);
      throw inadmissible();
    }
    if (grouped && kinds == 2) {
      if (method == Method::paper_eq16) return count_two_kinds_groups(*q.caps.groups, n1, n2);
      throw inadmissible();
    }
    throw inadmissible();
  }

  // circular
  if (!grouped && kinds == 1) {
    switch (method) {
      case Method::diagram: return count_circular(q.m, n1, cap);
      case Method::burnside: return count_circular_burnside(q.m, n1, cap);
      default: throw inadmissible();
    }
  }
  if (!grouped && kinds == 2) {
    switch (method) {
      case Method::burnside: return count_two_kinds_circular_burnside(q.m, n1, n2, cap);
      case Method::paper_eq27:
        warnings.push_back(
            "eq27 multiplies each diagram row's split count into the circular row count; it "
            "disagrees with rotation-class enumeration on small cases (e.g. m=2 n1=n2=1 cap=2); "
            "burnside is the reference method, see compare-circular");
        return count_two_kinds_circular_paper(q.m, n1, n2, cap);
      case Method::paper_eq25:
        warnings.push_back(
            "eq25 is a literal evaluation of the restricted-range circular formula; it can "
            "disagree with rotation-class enumeration (see compare-circular)");
        return count_two_kinds_circular_restricted_paper(q.m, n1, n2, cap);
      default: throw inadmissible();
    }
  }
  if (grouped && kinds == 2) {
    if (method == Method::paper_eq26) {
      warnings.push_back(
          "eq26 is a literal evaluation of the grouped circular formula; it can disagree with "
          "rotation-class enumeration (see compare-circular)");
      return count_two_kinds_circular_groups_paper(*q.caps.groups, n1, n2);
    }
    throw inadmissible();
  }
  throw inadmissible();
}

std::string caps_label(const CountQuery& q) {
  if (q.caps.uniform) {
    std::ostringstream os;
    os << "u:" << *q.caps.uniform;
    return os.str();
  }
  return group_spec_label(*q.caps.groups);
}

}  // namespace

std::string_view method_name(Method method) {
  for (const auto& e : kMethodNames)
    if (e.method == method) return e.name;
  return "?";
}

Method parse_method(std::string_view name) {
  for (const auto& e : kMethodNames)
    if (e.name == name) return e.method;
  std::ostringstream os;
  os << "unknown method '" << name << "'; available:";
  for (const auto& e : kMethodNames) os << ' ' << e.name;
  throw UsageError(os.str());
}

std::vector<Method> admissible_methods(const CountQuery& query) {
  const bool grouped = query.caps.groups.has_value();
  const std::size_t kinds = query.kinds.size();
  std::vector<Method> out;
  if (query.arrangement == Arrangement::linear) {
    if (!grouped && kinds == 1) out = {Method::incexc, Method::diagram, Method::gf, Method::oracle};
    if (!grouped && kinds == 2) out = {Method::diagram, Method::oracle, Method::paper_eq15};
    if (!grouped && kinds == 3) out = {Method::oracle, Method::paper_eq18};
    if (grouped && kinds == 1) out = {Method::oracle, Method::paper_eq17};
    if (grouped && kinds == 2) out = {Method::oracle, Method::paper_eq16};
    if (grouped && kinds == 3) out = {Method::oracle};
  } else {
    if (!grouped && kinds == 1) out = {Method::diagram, Method::burnside, Method::oracle};
    if (!grouped && kinds == 2)
      out = {Method::burnside, Method::oracle, Method::paper_eq25, Method::paper_eq27};
    if (!grouped && kinds == 3) out = {Method::oracle};
    if (grouped) out = {Method::oracle};
    if (grouped && kinds == 2) out = {Method::oracle, Method::paper_eq26};
  }
  return out;
}

std::string admissibility_table() {
  return
      "admissible methods by query shape (auto picks the first):\n"
      "  linear,   1 kind,  uniform cap : incexc diagram gf oracle\n"
      "  linear,   2 kinds, uniform cap : diagram oracle paper-eq15\n"
      "  linear,   3 kinds, uniform cap : oracle paper-eq18\n"
      "  linear,   1 kind,  group caps  : oracle paper-eq17\n"
      "  linear,   2 kinds, group caps  : oracle paper-eq16\n"
      "  linear,   3 kinds, group caps  : oracle\n"
      "  circular, 1 kind,  uniform cap : diagram burnside oracle\n"
      "  circular, 2 kinds, uniform cap : burnside oracle paper-eq25 paper-eq27\n"
      "  circular, 3 kinds, uniform cap : oracle\n"
      "  circular, any kinds, group caps: oracle (+ paper-eq26 for 2 kinds)\n"
      "paper-eq* methods are never selected by auto; eq25/eq26/eq27 carry a caveat warning.\n";
}

CountReport run_count_query(const CountQuery& query) {
  validate_query(query);
  CountReport report;
  report.query = query;
  report.resolved = query.method == Method::auto_select ? resolve_auto(query) : query.method;

  const auto start = std::chrono::steady_clock::now();
  report.count = dispatch(query, report.resolved, report.warnings);
  const auto stop = std::chrono::steady_clock::now();
  report.elapsed_ms =
      std::chrono::duration_cast<std::chrono::milliseconds>(stop - start).count();
  return report;
}

std::vector<std::string> cross_check_query(const CountQuery& query) {
  validate_query(query);
  std::vector<std::string> disagreements;
  std::optional<BigCount> reference;
  Method reference_method = Method::auto_select;
  for (Method method : admissible_methods(query)) {
    if (is_paper_method(method)) continue;
    std::vector<std::string> sink;
    BigCount value = dispatch(query, method, sink);
    if (!reference) {
      reference = value;
      reference_method = method;
      continue;
    }
    if (value != *reference) {
      std::ostringstream os;
      os << method_name(method) << " returned " << value << " but "
         << method_name(reference_method) << " returned " << *reference;
      disagreements.push_back(os.str());
    }
  }
  return disagreements;
}

std::string report_to_json(const CountReport& report) {
  nlohmann::json query;
  query["arrangement"] = report.query.arrangement == Arrangement::linear ? "linear" : "circular";
  query["m"] = report.query.m;
  query["kinds"] = report.query.kinds;
  if (report.query.caps.uniform) {
    query["caps"] = {{"uniform", *report.query.caps.uniform}};
  } else {
    nlohmann::json groups = nlohmann::json::array();
    for (const auto& g : report.query.caps.groups->groups)
      groups.push_back({g.boxes, g.cap});
    query["caps"] = {{"groups", groups}};
  }
  query["method"] = std::string(method_name(report.query.method));

  nlohmann::json out;
  out["query"] = query;
  out["method"] = std::string(method_name(report.resolved));
  out["count"] = report.count.str();
  out["warnings"] = report.warnings;
  out["elapsed_ms"] = report.elapsed_ms;
  return out.dump(2) + "\n";
}

std::string report_to_csv(const CountReport& report) {
  std::ostringstream kinds;
  for (std::size_t i = 0; i < report.query.kinds.size(); ++i) {
    if (i > 0) kinds << ';';
    kinds << report.query.kinds[i];
  }
  std::ostringstream warnings;
  for (std::size_t i = 0; i < report.warnings.size(); ++i) {
    if (i > 0) warnings << ';';
    warnings << report.warnings[i];
  }
  std::ostringstream os;
  os << "arrangement,m,kinds,caps,method,count,elapsed_ms,warnings\n"
     << (report.query.arrangement == Arrangement::linear ? "linear" : "circular") << ','
     << report.query.m << ',' << '"' << kinds.str() << '"' << ',' << '"' << caps_label(report.query)
     << '"' << ',' << method_name(report.resolved) << ',' << report.count << ','
     << report.elapsed_ms << ',' << '"' << warnings.str() << '"' << "\n";
  return os.str();
}

std::string report_to_text(const CountReport& report) { return report.count.str() + "\n"; }

}  // namespace permcount
