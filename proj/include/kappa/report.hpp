#pragma once

/**
 * Parameter report for one graph: κ, κ', κ_Q with witnesses, the degree
 * bound ladder, the (n, κ_Q + 1) threshold, and the self-checks run on the
 * result. Serialises to the JSON report (schema in docs/report-schema.md).
 */

#include "kappa/accessibility.hpp"
#include "kappa/graph.hpp"
#include "kappa/solvers.hpp"

#include "json.hpp"

#include <chrono>
#include <iomanip>
#include <map>
#include <optional>
#include <sstream>
#include <string>
#include <vector>

namespace kappa {

inline constexpr const char * report_schema_version = "1.0";

enum class ParamSelection { all, kappa, kappa_prime, kappa_q };

inline auto selection_from_name(const std::string & s) -> ParamSelection {
  if (s == "all")
    return ParamSelection::all;
  if (s == "kappa")
    return ParamSelection::kappa;
  if (s == "kappa-prime")
    return ParamSelection::kappa_prime;
  if (s == "kappa-q")
    return ParamSelection::kappa_q;
  throw InputError("unknown parameter '" + s + "'");
}

struct OracleCheck
{
  std::optional<int> kappa;
  std::optional<int> kappa_prime;

  friend auto operator==(const OracleCheck &, const OracleCheck &) -> bool = default;
};

struct ParamReport
{
  int n = 0;
  int max_degree = 0;
  int min_degree = 0;
  std::optional<ExtremalResult> kappa;
  std::optional<ExtremalResult> kappa_prime;
  std::optional<int> kappa_q;
  std::optional<int> qss_threshold;
  BoundLadder bounds{};
  std::optional<OracleCheck> oracle;
  // failed self-checks; empty on a healthy report
  std::vector<std::string> violations;

  friend auto operator==(const ParamReport &, const ParamReport &) -> bool = default;
};

using Timings = std::map<std::string, double>;

struct ReportOptions
{
  ParamSelection selection = ParamSelection::all;
  bool oracle = false;
  int oracle_cap = default_oracle_cap;
  SolverOptions solver;
};

namespace detail {

template <typename F>
auto timed(Timings * timings, const std::string & phase, F && f) {
  auto start = std::chrono::steady_clock::now();
  auto result = f();
  if (timings) {
    std::chrono::duration<double, std::milli> ms = std::chrono::steady_clock::now() - start;
    (*timings)[phase] = ms.count();
  }
  return result;
}

} // namespace detail

// Appends to report.violations every self-check the values fail.
inline auto audit_report(const Graph & g, ParamReport & r) -> void {
  if (r.kappa) {
    const auto & k = *r.kappa;
    if (k.value != k.set.count())
      r.violations.push_back("kappa value differs from |B|");
    if (!is_valid_certificate(g, k.set, k.certificate) || k.certificate.kind != WitnessKind::block)
      r.violations.push_back("kappa block witness does not validate");
    if (k.value < r.bounds.delta_lower_for_kappa || k.value > r.bounds.ubound_for_kappa)
      r.violations.push_back("kappa outside [Delta, floor(n*Delta/(Delta+1))]");
  }
  if (r.kappa_prime) {
    const auto & k = *r.kappa_prime;
    if (k.value != k.set.count())
      r.violations.push_back("kappa' value differs from |B|");
    if (!is_valid_certificate(g, k.set, k.certificate) || k.certificate.kind != WitnessKind::access)
      r.violations.push_back("kappa' access witness does not validate");
    if (k.value < r.bounds.lbound_for_kappa_prime || k.value > r.bounds.min_deg_upper_for_kappa_prime)
      r.violations.push_back("kappa' outside [ceil(n/(n-delta)), delta+1]");
  }
  if (r.kappa && r.kappa_prime && r.kappa_q &&
      *r.kappa_q != std::max(r.kappa->value, r.n - r.kappa_prime->value))
    r.violations.push_back("kappa_Q != max(kappa, n - kappa')");
  if (r.oracle) {
    if (r.oracle->kappa && r.kappa && *r.oracle->kappa != r.kappa->value)
      r.violations.push_back("kappa differs from the definition-level oracle");
    if (r.oracle->kappa_prime && r.kappa_prime && *r.oracle->kappa_prime != r.kappa_prime->value)
      r.violations.push_back("kappa' differs from the definition-level oracle");
  }
}

inline auto compute_report(const Graph & g, const ReportOptions & opts = {}, Timings * timings = nullptr)
    -> ParamReport {
  detail::require_solvable(g, opts.solver.max_n, "compute");
  ParamReport r;
  r.n = g.size();
  auto stats = degree_stats(g);
  r.max_degree = stats.max_degree;
  r.min_degree = stats.min_degree;
  r.bounds = bounds_report(g);

  bool want_kappa = opts.selection != ParamSelection::kappa_prime;
  bool want_prime = opts.selection != ParamSelection::kappa;
  if (want_kappa)
    r.kappa = detail::timed(timings, "kappa", [&] { return kappa_exact(g, opts.solver); });
  if (want_prime)
    r.kappa_prime = detail::timed(timings, "kappa_prime", [&] { return kappa_prime_exact(g, opts.solver); });
  if (r.kappa && r.kappa_prime) {
    r.kappa_q = std::max(r.kappa->value, r.n - r.kappa_prime->value);
    r.qss_threshold = *r.kappa_q + 1;
  }
  if (opts.oracle) {
    if (g.size() > opts.oracle_cap)
      throw SizeCapError("oracle cross-check", g.size(), opts.oracle_cap);
    r.oracle = detail::timed(timings, "oracle", [&] {
      OracleCheck o;
      if (want_kappa)
        o.kappa = kappa_oracle(g, opts.oracle_cap);
      if (want_prime)
        o.kappa_prime = kappa_prime_oracle(g, opts.oracle_cap);
      return o;
    });
  }
  audit_report(g, r);
  return r;
}

// ---------------------------------------------------------------- JSON

using nlohmann::json;

inline auto set_to_json(const VertexSet & s) -> json { return s.members(); }

inline auto set_from_json(const json & j, int n) -> VertexSet {
  VertexSet s(n);
  for (int v : j.get<std::vector<int>>()) {
    if (v < 0 || v >= n)
      throw InputError("report: vertex " + std::to_string(v) + " outside 0.." + std::to_string(n - 1));
    s.set(v);
  }
  return s;
}

inline auto extremal_to_json(const ExtremalResult & r) -> json {
  return {{"value", r.value},
          {"set", set_to_json(r.set)},
          {"witness", {{"kind", witness_kind_name(r.certificate.kind)}, {"set", set_to_json(r.certificate.set)}}}};
}

inline auto extremal_from_json(const json & j, int n) -> ExtremalResult {
  auto kind_name = j.at("witness").at("kind").get<std::string>();
  if (kind_name != "access" && kind_name != "block")
    throw InputError("report: unknown witness kind '" + kind_name + "'");
  auto kind = kind_name == "access" ? WitnessKind::access : WitnessKind::block;
  return {j.at("value").get<int>(), set_from_json(j.at("set"), n),
          Certificate{kind, set_from_json(j.at("witness").at("set"), n)}};
}

template <typename T>
auto optional_to_json(const std::optional<T> & v) -> json {
  return v ? json(*v) : json(nullptr);
}

inline auto report_to_json(const ParamReport & r) -> json {
  json j;
  j["n"] = r.n;
  j["max_degree"] = r.max_degree;
  j["min_degree"] = r.min_degree;
  j["kappa"] = r.kappa ? extremal_to_json(*r.kappa) : json(nullptr);
  j["kappa_prime"] = r.kappa_prime ? extremal_to_json(*r.kappa_prime) : json(nullptr);
  j["kappa_q"] = optional_to_json(r.kappa_q);
  j["qss_threshold"] = optional_to_json(r.qss_threshold);
  j["bounds"] = {{"delta_lower_for_kappa", r.bounds.delta_lower_for_kappa},
                 {"ubound_for_kappa", r.bounds.ubound_for_kappa},
                 {"min_deg_upper_for_kappa_prime", r.bounds.min_deg_upper_for_kappa_prime},
                 {"lbound_for_kappa_prime", r.bounds.lbound_for_kappa_prime}};
  j["oracle"] = r.oracle ? json{{"kappa", optional_to_json(r.oracle->kappa)},
                                {"kappa_prime", optional_to_json(r.oracle->kappa_prime)}}
                         : json(nullptr);
  j["violations"] = r.violations;
  return j;
}

template <typename T>
auto optional_from_json(const json & j) -> std::optional<T> {
  if (j.is_null())
    return std::nullopt;
  return j.get<T>();
}

inline auto report_from_json(const json & j) -> ParamReport {
  ParamReport r;
  r.n = j.at("n").get<int>();
  r.max_degree = j.at("max_degree").get<int>();
  r.min_degree = j.at("min_degree").get<int>();
  if (!j.at("kappa").is_null())
    r.kappa = extremal_from_json(j.at("kappa"), r.n);
  if (!j.at("kappa_prime").is_null())
    r.kappa_prime = extremal_from_json(j.at("kappa_prime"), r.n);
  r.kappa_q = optional_from_json<int>(j.at("kappa_q"));
  r.qss_threshold = optional_from_json<int>(j.at("qss_threshold"));
  const auto & b = j.at("bounds");
  r.bounds = {b.at("delta_lower_for_kappa").get<int>(), b.at("ubound_for_kappa").get<int>(),
              b.at("min_deg_upper_for_kappa_prime").get<int>(), b.at("lbound_for_kappa_prime").get<int>()};
  if (!j.at("oracle").is_null())
    r.oracle = OracleCheck{optional_from_json<int>(j.at("oracle").at("kappa")),
                           optional_from_json<int>(j.at("oracle").at("kappa_prime"))};
  r.violations = j.at("violations").get<std::vector<std::string>>();
  return r;
}

struct InputEcho
{
  std::string source;
  std::string format;
  std::string graph6;
};

// Full document. Timings are omitted when `timings` is null so that
// deterministic runs print identical bytes.
inline auto report_document(const InputEcho & input, const ParamReport & r, const Timings * timings) -> json {
  json doc;
  doc["schema_version"] = report_schema_version;
  doc["input"] = {{"source", input.source}, {"format", input.format}, {"graph6", input.graph6}};
  doc["report"] = report_to_json(r);
  if (timings) {
    json t = json::object();
    for (const auto & [phase, ms] : *timings)
      t[phase + "_ms"] = ms;
    doc["timings"] = t;
  }
  return doc;
}

// ---------------------------------------------------------------- text

inline auto report_to_text(const InputEcho & input, const ParamReport & r) -> std::string {
  std::ostringstream out;
  auto row = [&](const std::string & key, const std::string & value) {
    out << std::left << std::setw(24) << key << value << "\n";
  };
  auto opt = [](const std::optional<int> & v) { return v ? std::to_string(*v) : std::string("-"); };
  row("input", input.source + " (" + input.format + ")");
  row("graph6", input.graph6);
  row("n", std::to_string(r.n));
  row("max/min degree", std::to_string(r.max_degree) + " / " + std::to_string(r.min_degree));
  if (r.kappa) {
    row("kappa", std::to_string(r.kappa->value));
    row("  non-accessing B", r.kappa->set.to_string());
    row("  block witness C", r.kappa->certificate.set.to_string());
  }
  if (r.kappa_prime) {
    row("kappa'", std::to_string(r.kappa_prime->value));
    row("  accessing B", r.kappa_prime->set.to_string());
    row("  access witness D", r.kappa_prime->certificate.set.to_string());
  }
  row("kappa_Q", opt(r.kappa_q));
  row("qss threshold", r.qss_threshold ? "(" + std::to_string(r.n) + ", " + std::to_string(*r.qss_threshold) + ")"
                                       : std::string("-"));
  row("bounds kappa", std::to_string(r.bounds.delta_lower_for_kappa) + " <= kappa <= " +
                          std::to_string(r.bounds.ubound_for_kappa));
  row("bounds kappa'", std::to_string(r.bounds.lbound_for_kappa_prime) + " <= kappa' <= " +
                           std::to_string(r.bounds.min_deg_upper_for_kappa_prime));
  if (r.oracle)
    row("oracle", "kappa=" + opt(r.oracle->kappa) + " kappa'=" + opt(r.oracle->kappa_prime));
  row("checks", r.violations.empty() ? std::string("ok") : std::to_string(r.violations.size()) + " FAILED");
  for (const auto & v : r.violations)
    row("  violation", v);
  return out.str();
}

} // namespace kappa
