#pragma once

/**
 * Exact κ, κ' and κ_Q.
 *
 * κ(G)  = max |B| over non-accessing B. Since B is non-accessing iff
 *         B ⊆ Odd(C)∖C for some C, the search runs over C and maximises
 *         |Odd(C)∖C|.
 * κ'(G) = min |B| over accessing B. The smallest accessing set holding a
 *         witness D is D ∪ Odd(D), so the search runs over odd-sized D and
 *         minimises |D ∪ Odd(D)|.
 * κ_Q   = max(κ, n − κ').
 *
 * Both searches use 64-bit masks and branch and bound; see the comments on
 * each for the bound used. The *_oracle functions are the literal
 * definitions (enumerate B, ask the GF(2) test) and exist to cross-check.
 */

#include "kappa/accessibility.hpp"
#include "kappa/bitset.hpp"
#include "kappa/error.hpp"
#include "kappa/graph.hpp"

#include <algorithm>
#include <atomic>
#include <bit>
#include <cstdint>
#include <cstdlib>
#include <optional>
#include <string>
#include <thread>
#include <vector>

namespace kappa {

constexpr int default_solver_cap = 30;
constexpr int default_oracle_cap = 12;

struct SolverOptions
{
  int max_n = default_solver_cap;
  // 1 keeps the witness reproducible; more workers only guarantee the value.
  int threads = 1;
};

// Reads KAPPA_MAX_N when set; otherwise returns `fallback`.
inline auto cap_from_environment(int fallback) -> int {
  if (const char * env = std::getenv("KAPPA_MAX_N")) {
    char * end = nullptr;
    long v = std::strtol(env, &end, 10);
    if (end != env && *end == '\0' && v > 0 && v <= 64)
      return static_cast<int>(v);
  }
  return fallback;
}

struct BoundLadder
{
  int delta_lower_for_kappa;         // Δ ≤ κ
  int ubound_for_kappa;              // κ ≤ ⌊nΔ/(Δ+1)⌋
  int min_deg_upper_for_kappa_prime; // κ' ≤ δ+1
  int lbound_for_kappa_prime;        // κ' ≥ ⌈n/(n−δ)⌉

  friend auto operator==(const BoundLadder &, const BoundLadder &) -> bool = default;
};

inline auto bounds_report(const Graph & g) -> BoundLadder {
  auto [max_deg, min_deg] = degree_stats(g);
  int n = g.size();
  return {max_deg, n * max_deg / (max_deg + 1), min_deg + 1, (n + (n - min_deg) - 1) / (n - min_deg)};
}

inline auto bounds_hold(const BoundLadder & b, int kappa, int kappa_prime) -> bool {
  return b.delta_lower_for_kappa <= kappa && kappa <= b.ubound_for_kappa &&
         b.lbound_for_kappa_prime <= kappa_prime && kappa_prime <= b.min_deg_upper_for_kappa_prime;
}

// Extremal set plus the certificate that proves its status.
struct ExtremalResult
{
  int value;
  VertexSet set;
  Certificate certificate;

  friend auto operator==(const ExtremalResult &, const ExtremalResult &) -> bool = default;
};

namespace detail {

inline auto require_solvable(const Graph & g, int cap, const char * what) -> void {
  if (g.size() == 0)
    throw InputError(std::string(what) + ": graph has no vertices");
  int hard = std::min(cap, 64);
  if (g.size() > hard)
    throw SizeCapError(what, g.size(), hard);
}

using Mask = std::uint64_t;

inline auto low_bits(int n) -> Mask { return n >= 64 ? ~Mask{0} : (Mask{1} << n) - 1; }

// pending[i]: vertices with at least one neighbour among i..n-1, i.e. whose
// odd-neighbourhood membership can still change once 0..i-1 are decided.
inline auto pending_masks(const std::vector<Mask> & adj) -> std::vector<Mask> {
  int n = static_cast<int>(adj.size());
  std::vector<Mask> pending(n + 1, 0);
  for (int i = n - 1; i >= 0; --i)
    pending[i] = pending[i + 1] | adj[i];
  return pending;
}

inline auto to_vertex_set(int n, Mask m) -> VertexSet { return VertexSet::from_mask(n, m); }

// Best value seen by any worker; witnesses stay worker-local.
struct Incumbent
{
  std::atomic<int> value;
};

// Maximise |Odd(C)∖C|. Vertices are decided in index order. After deciding
// 0..i-1, a vertex can still end in Odd(C)∖C only if it is outside C and
// either undecided, adjacent to an undecided vertex, or already odd with its
// parity fixed; the count of such vertices bounds every completion.
class KappaSearch
{
public:
  KappaSearch(const std::vector<Mask> & adj, Incumbent & shared)
      : _adj(adj), _n(static_cast<int>(adj.size())), _all(low_bits(_n)),
        _pending(pending_masks(adj)), _shared(shared) {}

  auto run(int depth, Mask chosen, Mask odd, int ceiling) -> void {
    _ceiling = ceiling;
    descend(depth, chosen, odd);
  }

  int best = -1;
  Mask best_c = 0;

private:
  auto descend(int i, Mask chosen, Mask odd) -> void {
    if (_shared.value.load(std::memory_order_relaxed) >= _ceiling)
      return;
    Mask undecided = _all & ~low_bits(i);
    Mask live = _all & ~chosen & (undecided | _pending[i] | odd);
    int bound = std::popcount(live);
    if (bound <= _shared.value.load(std::memory_order_relaxed))
      return;
    if (i == _n) {
      int value = std::popcount(odd & ~chosen);
      if (value > best) {
        best = value;
        best_c = chosen;
      }
      int cur = _shared.value.load(std::memory_order_relaxed);
      while (value > cur && !_shared.value.compare_exchange_weak(cur, value)) {
      }
      return;
    }
    // exclude before include: smaller C explored first
    descend(i + 1, chosen, odd);
    descend(i + 1, chosen | (Mask{1} << i), odd ^ _adj[i]);
  }

  const std::vector<Mask> & _adj;
  int _n;
  Mask _all;
  std::vector<Mask> _pending;
  Incumbent & _shared;
  int _ceiling = 0;
};

// Minimise |D ∪ Odd(D)| over odd |D|, by increasing |D|. Inside one size the
// combination DFS bounds a completion from below by D plus the vertices whose
// odd parity is already fixed.
class KappaPrimeSearch
{
public:
  KappaPrimeSearch(const std::vector<Mask> & adj, Incumbent & shared)
      : _adj(adj), _n(static_cast<int>(adj.size())), _pending(pending_masks(adj)), _shared(shared) {}

  // D of exactly `size` members whose smallest member is `first`.
  auto run(int size, int first, int floor) -> void {
    _floor = floor;
    _size = size;
    pick(first + 1, 1, Mask{1} << first, _adj[first]);
  }

  int best = 1 << 30;
  Mask best_d = 0;

private:
  auto pick(int next, int taken, Mask d, Mask odd) -> void {
    if (_shared.value.load(std::memory_order_relaxed) <= _floor)
      return;
    int lower = std::popcount(d | (odd & ~_pending[next]));
    if (lower >= _shared.value.load(std::memory_order_relaxed))
      return;
    if (taken == _size) {
      int value = std::popcount(d | odd);
      if (value < best) {
        best = value;
        best_d = d;
      }
      int cur = _shared.value.load(std::memory_order_relaxed);
      while (value < cur && !_shared.value.compare_exchange_weak(cur, value)) {
      }
      return;
    }
    for (int v = next; v <= _n - (_size - taken); ++v)
      pick(v + 1, taken + 1, d | (Mask{1} << v), odd ^ _adj[v]);
  }

  const std::vector<Mask> & _adj;
  int _n;
  std::vector<Mask> _pending;
  Incumbent & _shared;
  int _floor = 0;
  int _size = 0;
};

template <typename Task>
auto run_tasks(int task_count, int threads, Task && task) -> void {
  threads = std::max(1, std::min(threads, task_count));
  if (threads == 1) {
    for (int t = 0; t < task_count; ++t)
      task(t);
    return;
  }
  std::atomic<int> next{0};
  std::vector<std::thread> workers;
  for (int w = 0; w < threads; ++w)
    workers.emplace_back([&] {
      for (int t = next++; t < task_count; t = next++)
        task(t);
    });
  for (auto & w : workers)
    w.join();
}

} // namespace detail

inline auto kappa_exact(const Graph & g, const SolverOptions & opts = {}) -> ExtremalResult {
  detail::require_solvable(g, opts.max_n, "kappa_exact");
  using detail::Mask;
  int n = g.size();
  auto adj = g.masks();
  auto ladder = bounds_report(g);

  // seed: C = {v} for a max-degree v gives B = N(v) of size Δ
  int seed_v = 0;
  for (int v = 0; v < n; ++v)
    if (g.degree(v) == ladder.delta_lower_for_kappa) {
      seed_v = v;
      break;
    }
  detail::Incumbent shared;
  shared.value = ladder.delta_lower_for_kappa;
  int best = ladder.delta_lower_for_kappa;
  Mask best_c = Mask{1} << seed_v;
  if (ladder.delta_lower_for_kappa == 0)
    best_c = 0; // edgeless: C = ∅, B = ∅

  if (best < ladder.ubound_for_kappa) {
    // fan out over the first few decisions
    int prefix_bits = std::min(n, opts.threads > 1 ? 6 : 0);
    int tasks = 1 << prefix_bits;
    std::vector<int> task_best(tasks, -1);
    std::vector<Mask> task_c(tasks, 0);
    detail::run_tasks(tasks, opts.threads, [&](int t) {
      Mask chosen = static_cast<Mask>(t);
      Mask odd = 0;
      for (int v = 0; v < prefix_bits; ++v)
        if ((chosen >> v) & 1U)
          odd ^= adj[v];
      detail::KappaSearch search(adj, shared);
      search.run(prefix_bits, chosen, odd, ladder.ubound_for_kappa);
      task_best[t] = search.best;
      task_c[t] = search.best_c;
    });
    for (int t = 0; t < tasks; ++t)
      if (task_best[t] > best) {
        best = task_best[t];
        best_c = task_c[t];
      }
  }

  VertexSet c = detail::to_vertex_set(n, best_c);
  VertexSet b = odd_neighborhood(g, c) - c;
  return {b.count(), b, Certificate{WitnessKind::block, c}};
}

inline auto kappa_prime_exact(const Graph & g, const SolverOptions & opts = {}) -> ExtremalResult {
  detail::require_solvable(g, opts.max_n, "kappa_prime_exact");
  using detail::Mask;
  int n = g.size();
  auto adj = g.masks();
  auto ladder = bounds_report(g);

  // seed: D = {v} for a min-degree v gives B = N[v] of size δ+1
  int seed_v = 0;
  for (int v = 0; v < n; ++v)
    if (g.degree(v) + 1 == ladder.min_deg_upper_for_kappa_prime) {
      seed_v = v;
      break;
    }
  detail::Incumbent shared;
  int best = ladder.min_deg_upper_for_kappa_prime;
  Mask best_d = Mask{1} << seed_v;
  shared.value = best;

  for (int size = 1; size <= n && size < shared.value.load(); size += 2) {
    if (shared.value.load() <= ladder.lbound_for_kappa_prime)
      break;
    int tasks = n - size + 1;
    std::vector<int> task_best(tasks, 1 << 30);
    std::vector<Mask> task_d(tasks, 0);
    detail::run_tasks(tasks, opts.threads, [&](int first) {
      detail::KappaPrimeSearch search(adj, shared);
      search.run(size, first, ladder.lbound_for_kappa_prime);
      task_best[first] = search.best;
      task_d[first] = search.best_d;
    });
    for (int t = 0; t < tasks; ++t)
      if (task_best[t] < best) {
        best = task_best[t];
        best_d = task_d[t];
      }
  }

  VertexSet d = detail::to_vertex_set(n, best_d);
  VertexSet b = d | odd_neighborhood(g, d);
  return {b.count(), b, Certificate{WitnessKind::access, d}};
}

inline auto kappa_q(const Graph & g, const SolverOptions & opts = {}) -> int {
  return std::max(kappa_exact(g, opts).value, g.size() - kappa_prime_exact(g, opts).value);
}

// Literal definition: every B, GF(2) test.
inline auto kappa_oracle(const Graph & g, int cap = default_oracle_cap) -> int {
  if (g.size() == 0)
    throw InputError("kappa_oracle: graph has no vertices");
  if (g.size() > cap)
    throw SizeCapError("kappa_oracle", g.size(), cap);
  int n = g.size();
  int best = 0;
  for (std::uint64_t m = 0; m < (std::uint64_t{1} << n); ++m) {
    int size = std::popcount(m);
    if (size <= best)
      continue;
    if (!is_accessing(g, VertexSet::from_mask(n, m)))
      best = size;
  }
  return best;
}

// Literal definition: B by increasing size, first accessing one wins.
inline auto kappa_prime_oracle(const Graph & g, int cap = default_oracle_cap) -> int {
  if (g.size() == 0)
    throw InputError("kappa_prime_oracle: graph has no vertices");
  if (g.size() > cap)
    throw SizeCapError("kappa_prime_oracle", g.size(), cap);
  int n = g.size();
  for (int size = 1; size <= n; ++size)
    for (std::uint64_t m = 0; m < (std::uint64_t{1} << n); ++m)
      if (std::popcount(m) == size && is_accessing(g, VertexSet::from_mask(n, m)))
        return size;
  throw ContractViolation("kappa_prime_oracle: V itself is not accessing");
}

} // namespace kappa
