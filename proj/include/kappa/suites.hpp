#pragma once

/**
 * Property suites run by `kappa verify`. Each suite walks a graph source
 * (every labelled graph up to some order, seeded random graphs, named
 * families, the cubic corpus), checks one family of identities exactly and
 * records every falsifying instance with enough context to reproduce it.
 */

#include "kappa/accessibility.hpp"
#include "kappa/enumerate.hpp"
#include "kappa/families.hpp"
#include "kappa/graph.hpp"
#include "kappa/io.hpp"
#include "kappa/perfect_code.hpp"
#include "kappa/reductions.hpp"
#include "kappa/solvers.hpp"

#include <algorithm>
#include <cstdio>
#include <filesystem>
#include <functional>
#include <mutex>
#include <optional>
#include <random>
#include <string>
#include <vector>

namespace kappa {

struct SuiteConfig
{
  int nmax = 5;
  // random graphs drawn at each order nmax+1 .. nmax+3
  int samples = 0;
  std::uint64_t seed = 1;
  int threads = 1;
  // directory holding cubic_NN.g6 files; empty skips corpus checks
  std::filesystem::path corpus;
};

struct Falsification
{
  std::string graph6;
  std::string detail;
};

struct SuiteResult
{
  std::string name;
  long long instances = 0;
  std::vector<Falsification> failures;
  std::vector<std::string> notes;

  auto passed() const -> bool { return failures.empty(); }
};

namespace detail {

// Collects failures from concurrent workers; sorted by instance id at the end
// so output does not depend on scheduling.
class SuiteRecorder
{
public:
  explicit SuiteRecorder(std::string name) { _result.name = std::move(name); }

  auto fail(long long id, const Graph & g, std::string detail) -> void {
    std::lock_guard<std::mutex> guard(_lock);
    _failures.push_back({id, {to_graph6(g), std::move(detail)}});
  }

  auto count(long long k = 1) -> void {
    std::lock_guard<std::mutex> guard(_lock);
    _result.instances += k;
  }

  auto note(std::string text) -> void { _result.notes.push_back(std::move(text)); }

  auto finish() -> SuiteResult {
    std::sort(_failures.begin(), _failures.end(),
              [](const auto & a, const auto & b) { return a.first < b.first; });
    for (auto & f : _failures)
      _result.failures.push_back(std::move(f.second));
    return std::move(_result);
  }

private:
  std::mutex _lock;
  SuiteResult _result;
  std::vector<std::pair<long long, Falsification>> _failures;
};

// Every labelled graph with 1 <= n <= min(nmax, exhaustive cap), then
// `samples` seeded random graphs at each of the next three orders. The
// callback gets a stable instance id.
inline auto for_each_suite_graph(const SuiteConfig & cfg, int exhaustive_cap,
                                 const std::function<void(long long, const Graph &)> & f) -> void {
  long long base = 0;
  int top = std::min(cfg.nmax, exhaustive_cap);
  for (int n = 1; n <= top; ++n) {
    auto total = static_cast<long long>(labelled_graph_count(n));
    // chunked so that the thread pool sees enough tasks
    int chunks = static_cast<int>(std::min<long long>(total, 256));
    run_tasks(chunks, cfg.threads, [&](int c) {
      for (long long i = c; i < total; i += chunks)
        f(base + i, graph_from_pair_mask(n, static_cast<std::uint64_t>(i)));
    });
    base += total;
  }
  if (cfg.samples <= 0)
    return;
  std::mt19937_64 rng(cfg.seed);
  std::vector<Graph> sampled;
  for (int n = top + 1; n <= top + 3; ++n)
    for (int s = 0; s < cfg.samples; ++s)
      sampled.push_back(random_graph(n, rng));
  run_tasks(static_cast<int>(sampled.size()), cfg.threads,
            [&](int i) { f(base + i, sampled[i]); });
}

inline auto corpus_file(const SuiteConfig & cfg, int n) -> std::optional<std::filesystem::path> {
  if (cfg.corpus.empty())
    return std::nullopt;
  char name[32];
  std::snprintf(name, sizeof name, "cubic_%02d.g6", n);
  auto path = cfg.corpus / name;
  if (!std::filesystem::exists(path))
    return std::nullopt;
  return path;
}

} // namespace detail

// κ'(G) + κ(Ḡ) ≥ n, and the κ' witness D of G blocks V∖B in Ḡ.
inline auto suite_duality(const SuiteConfig & cfg) -> SuiteResult {
  detail::SuiteRecorder rec("duality");
  detail::for_each_suite_graph(cfg, max_exhaustive_order, [&](long long id, const Graph & g) {
    Graph gc = complement(g);
    auto kp = kappa_prime_exact(g);
    auto kc = kappa_exact(gc);
    rec.count();
    if (kp.value + kc.value < g.size())
      rec.fail(id, g, "kappa'(G)=" + std::to_string(kp.value) + " + kappa(co-G)=" +
                          std::to_string(kc.value) + " < n=" + std::to_string(g.size()));
    VertexSet rest = kp.set.complement();
    if (!is_valid_block_witness(gc, rest, kp.certificate.set))
      rec.fail(id, g, "access witness D=" + kp.certificate.set.to_string() + " for B=" +
                          kp.set.to_string() + " does not block V\\B in the complement");
  });
  return rec.finish();
}

// Δ ≤ κ ≤ ⌊nΔ/(Δ+1)⌋ and ⌈n/(n−δ)⌉ ≤ κ' ≤ δ+1.
inline auto suite_bounds(const SuiteConfig & cfg) -> SuiteResult {
  detail::SuiteRecorder rec("bounds");
  detail::for_each_suite_graph(cfg, max_exhaustive_order, [&](long long id, const Graph & g) {
    auto b = bounds_report(g);
    int k = kappa_exact(g).value;
    int kp = kappa_prime_exact(g).value;
    rec.count();
    if (!bounds_hold(b, k, kp))
      rec.fail(id, g, "kappa=" + std::to_string(k) + " kappa'=" + std::to_string(kp) + " vs bounds [" +
                          std::to_string(b.delta_lower_for_kappa) + "," + std::to_string(b.ubound_for_kappa) +
                          "] / [" + std::to_string(b.lbound_for_kappa_prime) + "," +
                          std::to_string(b.min_deg_upper_for_kappa_prime) + "]");
  });
  return rec.finish();
}

// κ(G^r) = r·κ(G), κ'(G^r) = κ'(G) for r = 1..3.
inline auto suite_copies(const SuiteConfig & cfg) -> SuiteResult {
  detail::SuiteRecorder rec("copies");
  SuiteConfig small = cfg;
  small.samples = 0;
  detail::for_each_suite_graph(small, 5, [&](long long id, const Graph & g) {
    int k = kappa_exact(g).value;
    int kp = kappa_prime_exact(g).value;
    for (int r = 1; r <= 3; ++r) {
      Graph copies = disjoint_copies(g, r);
      int kr = kappa_exact(copies).value;
      int kpr = kappa_prime_exact(copies).value;
      rec.count();
      if (kr != r * k || kpr != kp)
        rec.fail(id, g, "r=" + std::to_string(r) + ": kappa(G^r)=" + std::to_string(kr) + " vs r*kappa=" +
                            std::to_string(r * k) + ", kappa'(G^r)=" + std::to_string(kpr) +
                            " vs kappa'=" + std::to_string(kp));
    }
  });
  return rec.finish();
}

// For every B exactly one of the two witnesses exists, and it validates.
inline auto suite_dichotomy(const SuiteConfig & cfg) -> SuiteResult {
  detail::SuiteRecorder rec("dichotomy");
  SuiteConfig small = cfg;
  small.samples = 0;
  detail::for_each_suite_graph(small, 5, [&](long long id, const Graph & g) {
    int n = g.size();
    for (std::uint64_t m = 0; m < (std::uint64_t{1} << n); ++m) {
      VertexSet b = VertexSet::from_mask(n, m);
      auto d = accessing_witness(g, b);
      auto c = non_accessing_witness(g, b);
      rec.count();
      if (d.has_value() == c.has_value())
        rec.fail(id, g, "B=" + b.to_string() + ": access witness " + (d ? d->set.to_string() : "none") +
                            ", block witness " + (c ? c->set.to_string() : "none"));
      else if (d && !is_valid_access_witness(g, b, d->set))
        rec.fail(id, g, "B=" + b.to_string() + ": invalid access witness " + d->set.to_string());
      else if (c && !is_valid_block_witness(g, b, c->set))
        rec.fail(id, g, "B=" + b.to_string() + ": invalid block witness " + c->set.to_string());
    }
  });
  return rec.finish();
}

// G_{p,q}, pq ≤ 12: closed forms, and κ_Q(G_{s,s}) = s² − s.
inline auto suite_families(const SuiteConfig & cfg) -> SuiteResult {
  detail::SuiteRecorder rec("families");
  std::vector<std::pair<int, int>> params;
  for (int p = 1; p <= 12; ++p)
    for (int q = 1; p * q <= 12; ++q)
      params.emplace_back(p, q);
  detail::run_tasks(static_cast<int>(params.size()), cfg.threads, [&](int i) {
    auto [p, q] = params[i];
    Graph g = complete_multipartite(p, q);
    auto expect = multipartite_closed_form(p, q);
    int k = kappa_exact(g).value;
    int kp = kappa_prime_exact(g).value;
    rec.count();
    if (k != expect.kappa || kp != expect.kappa_prime)
      rec.fail(i, g, "G_{" + std::to_string(p) + "," + std::to_string(q) + "}: kappa=" + std::to_string(k) +
                         " (closed form " + std::to_string(expect.kappa) + "), kappa'=" + std::to_string(kp) +
                         " (closed form " + std::to_string(expect.kappa_prime) + ")");
    if (p == q && std::max(k, p * q - kp) != p * q - p)
      rec.fail(i, g, "kappa_Q(G_{s,s}) != n - sqrt(n)");
  });
  return rec.finish();
}

// Cycle characterisation, κ-equality on regular graphs, κ'-equality where
// applicable, over exhaustive regular graphs and the cubic corpus.
inline auto suite_perfect_code(const SuiteConfig & cfg) -> SuiteResult {
  detail::SuiteRecorder rec("perfect-code");
  for (int n = 3; n <= 12; ++n) {
    Graph c = cycle_graph(n);
    auto eq = check_kappa_equality(c);
    bool code = find_perfect_code(c).has_value();
    rec.count();
    if (code != (n % 3 == 0) || eq.kappa_hits_bound != code || !eq.consistent() || eq.kappa != 2 * (n / 3))
      rec.fail(n, c, "C_" + std::to_string(n) + ": kappa=" + std::to_string(eq.kappa) + ", code " +
                         (code ? "found" : "absent"));
  }

  auto check_regular = [&](long long id, const Graph & g) {
    if (!is_regular(g))
      return;
    rec.count();
    if (auto code = find_perfect_code(g); code && !is_perfect_code(g, *code))
      rec.fail(id, g, "returned code " + code->to_string() + " fails the definition");
    auto eq = check_kappa_equality(g);
    if (!eq.consistent())
      rec.fail(id, g, "kappa=" + std::to_string(eq.kappa) + (eq.kappa_hits_bound ? " hits" : " misses") +
                          " n*Delta/(Delta+1) but a perfect code is " + (eq.has_qualifying_code ? "present" : "absent"));
    auto pe = check_kappa_prime_equality(g);
    if (!pe.consistent())
      rec.fail(id, g, "kappa'=" + std::to_string(pe.kappa_prime) + (pe.kappa_prime_hits_bound ? " hits" : " misses") +
                          " n/(n-delta) but the complement's perfect code is " +
                          (pe.complement_has_code ? "present" : "absent"));
  };

  SuiteConfig small = cfg;
  small.samples = 0;
  detail::for_each_suite_graph(small, 6, check_regular);

  long long id = 1LL << 40;
  for (int n = 4; n <= 10; n += 2)
    if (auto path = detail::corpus_file(cfg, n)) {
      auto graphs = load_graph6_corpus(*path);
      for (const auto & g : graphs) {
        check_regular(id++, g);
        check_regular(id++, complement(g));
      }
      rec.note("cubic corpus n=" + std::to_string(n) + ": " + std::to_string(graphs.size()) + " graphs");
    }
  return rec.finish();
}

// Both perfect-code reductions on the cubic corpus (n = 4, 8) plus seeded
// random cubic graphs at n = 12; QKappa on every graph with n ≤ min(nmax, 4).
inline auto suite_reductions(const SuiteConfig & cfg) -> SuiteResult {
  detail::SuiteRecorder rec("reductions");
  auto check_pc = [&](long long id, const Graph & g) {
    for (auto reduce : {reduce_pc_to_kappa_ge, reduce_pc_to_kappa_prime_le}) {
      auto inst = reduce(g);
      auto res = verify_reduction(inst, g);
      rec.count();
      if (!res.agree())
        rec.fail(id, g, problem_name(inst.problem) + ": " + res.evidence);
    }
  };
  long long id = 0;
  for (int n : {4, 8})
    if (auto path = detail::corpus_file(cfg, n)) {
      auto graphs = load_graph6_corpus(*path);
      for (const auto & g : graphs)
        check_pc(id++, g);
      rec.note("cubic corpus n=" + std::to_string(n) + ": " + std::to_string(graphs.size()) + " graphs");
    }
  std::mt19937_64 rng(cfg.seed);
  for (int s = 0; s < cfg.samples; ++s)
    check_pc(id++, random_cubic_graph(12, rng));

  SuiteConfig small = cfg;
  small.nmax = std::min(cfg.nmax, 4);
  small.samples = 0;
  detail::for_each_suite_graph(small, 4, [&](long long gid, const Graph & g) {
    for (int k = 1; k <= 3; ++k) {
      auto inst = reduce_to_qkappa(g, k);
      auto res = verify_reduction(inst, g);
      rec.count();
      if (!res.agree())
        rec.fail((1LL << 40) + gid, g, "QKappa k=" + std::to_string(k) + ": " + res.evidence);
    }
  });
  return rec.finish();
}

inline auto suite_names() -> std::vector<std::string> {
  return {"duality", "bounds", "copies", "dichotomy", "perfect-code", "families", "reductions"};
}

inline auto run_suite(const std::string & name, const SuiteConfig & cfg) -> SuiteResult {
  if (name == "duality")
    return suite_duality(cfg);
  if (name == "bounds")
    return suite_bounds(cfg);
  if (name == "copies")
    return suite_copies(cfg);
  if (name == "dichotomy")
    return suite_dichotomy(cfg);
  if (name == "perfect-code")
    return suite_perfect_code(cfg);
  if (name == "families")
    return suite_families(cfg);
  if (name == "reductions")
    return suite_reductions(cfg);
  throw InputError("unknown suite '" + name + "'");
}

} // namespace kappa
