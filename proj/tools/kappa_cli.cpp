// kappa: compute κ, κ', κ_Q for a graph, generate families, run the property
// suites and build reduction instances.
//
// Exit codes: 0 success, 1 input/parse error, 2 size cap refused,
// 3 failed cross-check or falsified property.

#include "kappa/kappa.hpp"

#include "CLI11.hpp"
#include "json.hpp"

#include <filesystem>
#include <fstream>
#include <iomanip>
#include <iostream>
#include <string>

#ifndef KAPPA_CORPUS_DIR
#define KAPPA_CORPUS_DIR ""
#endif

namespace {

using namespace kappa;
using nlohmann::json;

constexpr int exit_ok = 0;
constexpr int exit_input = 1;
constexpr int exit_cap = 2;
constexpr int exit_check = 3;

struct GraphInput
{
  Graph graph;
  InputEcho echo;
};

// A path, or "g6:<text>" for an inline graph6 string.
auto read_input(const std::string & spec) -> GraphInput {
  if (spec.rfind("g6:", 0) == 0) {
    Graph g = from_graph6(spec.substr(3));
    return {g, {spec, "graph6", to_graph6(g)}};
  }
  auto loaded = load_graph_file(spec);
  return {loaded.graph, {spec, format_name(loaded.format), to_graph6(loaded.graph)}};
}

auto write_text(const std::string & path, const std::string & text) -> void {
  if (path.empty() || path == "-") {
    std::cout << text;
    return;
  }
  std::ofstream out(path, std::ios::binary);
  if (!out)
    throw InputError("cannot write " + path);
  out << text;
}

// ------------------------------------------------------------- compute

struct ComputeArgs
{
  std::string input;
  std::string param = "all";
  std::string format = "json";
  bool oracle = false;
  int max_n = 0;
  bool deterministic = false;
  int threads = 1;
};

auto cmd_compute(const ComputeArgs & a) -> int {
  auto in = read_input(a.input);
  ReportOptions opts;
  opts.selection = selection_from_name(a.param);
  opts.oracle = a.oracle;
  opts.solver.max_n = a.max_n > 0 ? a.max_n : cap_from_environment(default_solver_cap);
  opts.oracle_cap = cap_from_environment(default_oracle_cap);
  opts.solver.threads = a.deterministic ? 1 : std::max(1, a.threads);

  Timings timings;
  auto report = compute_report(in.graph, opts, &timings);
  if (a.format == "text")
    std::cout << report_to_text(in.echo, report);
  else
    std::cout << report_document(in.echo, report, a.deterministic ? nullptr : &timings).dump(2) << "\n";

  if (!report.violations.empty()) {
    for (const auto & v : report.violations)
      std::cerr << "kappa: cross-check failed: " << v << "\n";
    return exit_check;
  }
  return exit_ok;
}

// -------------------------------------------------------------- family

struct FamilyArgs
{
  std::string kind;
  int p = 0;
  int q = 0;
  int n = -1;
  int r = 0;
  std::string base;
  std::string output;
  std::string format = "g6";
  bool expect = false;
};

auto cmd_family(const FamilyArgs & a) -> int {
  std::shared_ptr<const Graph> base;
  if (!a.base.empty())
    base = std::make_shared<const Graph>(read_input(a.base).graph);

  FamilySpec spec;
  if (a.kind == "multipartite")
    spec = Multipartite{a.p, a.q};
  else if (a.kind == "copies")
    spec = Copies{base, a.r};
  else if (a.kind == "cycle")
    spec = Cycle{a.n};
  else if (a.kind == "complete")
    spec = Complete{a.n};
  else if (a.kind == "empty")
    spec = Empty{a.n};
  else if (a.kind == "complement")
    spec = ComplementOf{base};
  else
    throw InputError("unknown family '" + a.kind + "'");

  Graph g = build_family(spec);
  write_text(a.output, a.format == "el" ? to_edge_list(g) : to_graph6(g) + "\n");

  if (!a.expect)
    return exit_ok;

  ClosedForm expected{};
  if (std::holds_alternative<Multipartite>(spec)) {
    expected = multipartite_closed_form(a.p, a.q);
  }
  else if (std::holds_alternative<Copies>(spec)) {
    expected = {a.r * kappa_exact(*base).value, kappa_prime_exact(*base).value};
  }
  else {
    throw InputError("--expect has no closed form for family '" + a.kind + "'");
  }
  int k = kappa_exact(g).value;
  int kp = kappa_prime_exact(g).value;
  bool ok = k == expected.kappa && kp == expected.kappa_prime;
  std::cerr << describe_family(spec) << ": kappa=" << k << " (expected " << expected.kappa << "), kappa'=" << kp
            << " (expected " << expected.kappa_prime << ") " << (ok ? "OK" : "MISMATCH") << "\n";
  return ok ? exit_ok : exit_check;
}

// -------------------------------------------------------------- verify

struct VerifyArgs
{
  std::string suite;
  int nmax = 5;
  int samples = 0;
  std::uint64_t seed = 1;
  int threads = 1;
  std::string corpus = KAPPA_CORPUS_DIR;
};

auto cmd_verify(const VerifyArgs & a) -> int {
  if (a.nmax < 1)
    throw InputError("--nmax must be >= 1");
  if (a.nmax > max_exhaustive_order)
    throw SizeCapError("verify --nmax", a.nmax, max_exhaustive_order);

  SuiteConfig cfg{a.nmax, a.samples, a.seed, std::max(1, a.threads), a.corpus};
  std::vector<std::string> names = a.suite == "all" ? suite_names() : std::vector<std::string>{a.suite};

  bool all_ok = true;
  std::cout << std::left << std::setw(16) << "suite" << std::setw(14) << "instances" << "result\n";
  for (const auto & name : names) {
    auto res = run_suite(name, cfg);
    all_ok = all_ok && res.passed();
    std::cout << std::left << std::setw(16) << res.name << std::setw(14) << res.instances
              << (res.passed() ? "PASS" : "FAIL (" + std::to_string(res.failures.size()) + ")") << "\n";
    for (const auto & note : res.notes)
      std::cout << "  note: " << note << "\n";
    for (const auto & f : res.failures)
      std::cout << "  falsified on " << f.graph6 << ": " << f.detail << "\n";
  }
  return all_ok ? exit_ok : exit_check;
}

// -------------------------------------------------------------- reduce

struct ReduceArgs
{
  std::string kind;
  std::string input;
  int k = 0;
  bool check = false;
  std::string output;
};

auto cmd_reduce(const ReduceArgs & a) -> int {
  auto in = read_input(a.input);
  DecisionInstance inst;
  if (a.kind == "pc-to-kappa-ge")
    inst = reduce_pc_to_kappa_ge(in.graph);
  else if (a.kind == "pc-to-kappa-prime-le")
    inst = reduce_pc_to_kappa_prime_le(in.graph);
  else if (a.kind == "to-qkappa")
    inst = reduce_to_qkappa(in.graph, a.k);
  else
    throw InputError("unknown reduction '" + a.kind + "'");

  json sidecar = {{"schema_version", report_schema_version},
                  {"problem", problem_name(inst.problem)},
                  {"k", inst.k},
                  {"n", inst.graph.size()},
                  {"graph6", to_graph6(inst.graph)},
                  {"source_graph6", in.echo.graph6},
                  {"provenance", inst.provenance},
                  {"copies", inst.copies},
                  {"gadget", inst.gadget}};

  int code = exit_ok;
  if (a.check) {
    auto res = verify_reduction(inst, in.graph, {cap_from_environment(default_solver_cap), 1});
    sidecar["check"] = {{"source_side", res.source_side},
                        {"target_side", res.target_side},
                        {"agree", res.agree()},
                        {"evidence", res.evidence}};
    std::cerr << problem_name(inst.problem) << " check: " << (res.agree() ? "agree" : "FALSIFIED") << " ("
              << res.evidence << ")\n";
    if (!res.agree())
      code = exit_check;
  }

  if (a.output.empty()) {
    std::cout << sidecar.dump(2) << "\n";
  }
  else {
    write_text(a.output + ".g6", to_graph6(inst.graph) + "\n");
    write_text(a.output + ".json", sidecar.dump(2) + "\n");
  }
  return code;
}

template <typename F>
auto guarded(F && f) -> int {
  try {
    return f();
  }
  catch (const SizeCapError & e) {
    std::cerr << "kappa: refused: " << e.what() << "\n";
    return exit_cap;
  }
  catch (const InputError & e) {
    std::cerr << "kappa: " << e.what() << "\n";
    return exit_input;
  }
  catch (const ContractViolation & e) {
    std::cerr << "kappa: internal error: " << e.what() << "\n";
    return exit_check;
  }
}

} // namespace

int main(int argc, char ** argv) {
  CLI::App app{"Exact accessing / non-accessing set parameters of graphs"};
  app.require_subcommand(1);

  ComputeArgs compute;
  auto * c = app.add_subcommand("compute", "compute kappa, kappa', kappa_Q with witnesses and bounds");
  c->add_option("input", compute.input, "graph file (.g6 / .el) or g6:<string>")->required();
  c->add_option("--param", compute.param, "all | kappa | kappa-prime | kappa-q")
      ->check(CLI::IsMember({"all", "kappa", "kappa-prime", "kappa-q"}));
  c->add_option("--format", compute.format, "json | text")->check(CLI::IsMember({"json", "text"}));
  c->add_flag("--oracle", compute.oracle, "cross-check against the definition-level brute force");
  c->add_option("--max-n", compute.max_n, "solver size cap (default 30, or KAPPA_MAX_N)");
  c->add_flag("--deterministic-witness", compute.deterministic,
              "single worker, no timings: identical runs print identical bytes");
  c->add_option("--threads", compute.threads, "search workers (value is exact either way)");

  FamilyArgs family;
  auto * f = app.add_subcommand("family", "write a family member as graph6");
  f->add_option("kind", family.kind, "multipartite | copies | cycle | complete | empty | complement")->required();
  f->add_option("-p", family.p, "part size (multipartite)");
  f->add_option("-q", family.q, "part count (multipartite)");
  f->add_option("-n", family.n, "order (cycle, complete, empty)");
  f->add_option("-r", family.r, "copy count (copies)");
  f->add_option("--base", family.base, "base graph (copies, complement)");
  f->add_option("-o,--output", family.output, "output path (default stdout)");
  f->add_option("--format", family.format, "g6 | el")->check(CLI::IsMember({"g6", "el"}));
  f->add_flag("--expect", family.expect, "check kappa / kappa' against the closed form");

  VerifyArgs verify;
  auto * v = app.add_subcommand("verify", "run property suites");
  std::vector<std::string> suites = suite_names();
  suites.push_back("all");
  v->add_option("suite", verify.suite, "duality | bounds | copies | dichotomy | perfect-code | families | "
                                       "reductions | all")
      ->required()
      ->check(CLI::IsMember(suites));
  v->add_option("--nmax", verify.nmax, "largest order enumerated exhaustively");
  v->add_option("--samples", verify.samples, "random graphs per order above nmax");
  v->add_option("--seed", verify.seed, "random seed");
  v->add_option("--threads", verify.threads, "workers");
  v->add_option("--corpus", verify.corpus, "directory of cubic_NN.g6 files");

  ReduceArgs reduce;
  auto * r = app.add_subcommand("reduce", "build a reduction instance");
  r->add_option("kind", reduce.kind, "pc-to-kappa-ge | pc-to-kappa-prime-le | to-qkappa")
      ->required()
      ->check(CLI::IsMember({"pc-to-kappa-ge", "pc-to-kappa-prime-le", "to-qkappa"}));
  r->add_option("input", reduce.input, "source graph file or g6:<string>")->required();
  r->add_option("-k", reduce.k, "copy count (to-qkappa)");
  r->add_flag("--check", reduce.check, "decide both sides exactly");
  r->add_option("-o,--output", reduce.output, "write <prefix>.g6 and <prefix>.json");

  try {
    app.parse(argc, argv);
  }
  catch (const CLI::ParseError & e) {
    int code = app.exit(e);
    return code == 0 ? exit_ok : exit_input;
  }

  if (c->parsed())
    return guarded([&] { return cmd_compute(compute); });
  if (f->parsed())
    return guarded([&] { return cmd_family(family); });
  if (v->parsed())
    return guarded([&] { return cmd_verify(verify); });
  return guarded([&] { return cmd_reduce(reduce); });
}
