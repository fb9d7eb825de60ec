#pragma once

/**
 * Perfect codes: independent C with every vertex outside C having exactly
 * one neighbour in C. Equivalently the closed neighbourhoods N[v], v ∈ C,
 * partition V, so the search is an exact cover over closed neighbourhoods.
 *
 * An isolated vertex can only be covered by itself, so it belongs to every
 * perfect code; the edgeless graph's only code is V.
 */

#include "kappa/bitset.hpp"
#include "kappa/error.hpp"
#include "kappa/graph.hpp"
#include "kappa/solvers.hpp"

#include <bit>
#include <cstdint>
#include <optional>
#include <vector>

namespace kappa {

inline auto is_perfect_code(const Graph & g, const VertexSet & code) -> bool {
  if (code.size() != g.size())
    throw ContractViolation("is_perfect_code: universe mismatch");
  for (int v = 0; v < g.size(); ++v) {
    int hits = (g.neighbours(v) & code).count();
    if (code.test(v) ? hits != 0 : hits != 1)
      return false;
  }
  return true;
}

namespace detail {

// Branch on the lowest-index uncovered vertex x over the allowed v ∈ N[x]
// whose N[v] avoids everything covered so far. A branch dies as soon as some
// uncovered vertex has no usable candidate left.
class ExactCoverSearch
{
public:
  ExactCoverSearch(const Graph & g, Mask allowed) : _n(g.size()), _allowed(allowed) {
    for (int v = 0; v < _n; ++v)
      _closed.push_back(g.neighbours(v).to_mask() | (Mask{1} << v));
  }

  auto run() -> std::optional<Mask> {
    Mask code = 0;
    if (search(0, code))
      return code;
    return std::nullopt;
  }

private:
  auto usable(int v, Mask covered) const -> bool {
    return ((_allowed >> v) & 1U) && (_closed[v] & covered) == 0;
  }

  auto search(Mask covered, Mask & code) -> bool {
    Mask all = low_bits(_n);
    if (covered == all)
      return true;
    Mask uncovered = all & ~covered;

    for (Mask rest = uncovered; rest; rest &= rest - 1) {
      int u = std::countr_zero(rest);
      bool any = false;
      for (Mask cand = _closed[u]; cand; cand &= cand - 1)
        if (usable(std::countr_zero(cand), covered)) {
          any = true;
          break;
        }
      if (!any)
        return false;
    }

    int x = std::countr_zero(uncovered);
    for (Mask cand = _closed[x]; cand; cand &= cand - 1) {
      int v = std::countr_zero(cand);
      if (!usable(v, covered))
        continue;
      code |= Mask{1} << v;
      if (search(covered | _closed[v], code))
        return true;
      code &= ~(Mask{1} << v);
    }
    return false;
  }

  int _n;
  Mask _allowed;
  std::vector<Mask> _closed;
};

} // namespace detail

// First code found with lowest-index branching; only vertices in `allowed`
// may enter the code.
inline auto find_perfect_code(const Graph & g, const VertexSet & allowed, int cap = default_solver_cap)
    -> std::optional<VertexSet> {
  if (g.size() == 0)
    throw InputError("find_perfect_code: graph has no vertices");
  if (g.size() > std::min(cap, 64))
    throw SizeCapError("find_perfect_code", g.size(), std::min(cap, 64));
  if (allowed.size() != g.size())
    throw ContractViolation("find_perfect_code: allowed-set universe mismatch");
  auto found = detail::ExactCoverSearch(g, allowed.to_mask()).run();
  if (!found)
    return std::nullopt;
  return VertexSet::from_mask(g.size(), *found);
}

inline auto find_perfect_code(const Graph & g, int cap = default_solver_cap) -> std::optional<VertexSet> {
  return find_perfect_code(g, g.all_vertices(), cap);
}

struct KappaEquality
{
  bool kappa_hits_bound;    // κ = nΔ/(Δ+1) exactly
  bool has_qualifying_code; // perfect code using only degree-Δ vertices
  int kappa;

  auto consistent() const -> bool { return kappa_hits_bound == has_qualifying_code; }
};

inline auto check_kappa_equality(const Graph & g, const SolverOptions & opts = {}) -> KappaEquality {
  auto kappa = kappa_exact(g, opts).value;
  auto [max_deg, min_deg] = degree_stats(g);
  VertexSet max_degree_vertices(g.size());
  for (int v = 0; v < g.size(); ++v)
    if (g.degree(v) == max_deg)
      max_degree_vertices.set(v);
  bool hits = kappa * (max_deg + 1) == g.size() * max_deg;
  bool code = find_perfect_code(g, max_degree_vertices, opts.max_n).has_value();
  return {hits, code, kappa};
}

struct KappaPrimeEquality
{
  bool applicable; // δ-regular, (n−δ) | n and n/(n−δ) odd
  bool kappa_prime_hits_bound;
  bool complement_has_code;
  int kappa_prime;

  auto consistent() const -> bool {
    return !applicable || kappa_prime_hits_bound == complement_has_code;
  }
};

inline auto check_kappa_prime_equality(const Graph & g, const SolverOptions & opts = {})
    -> KappaPrimeEquality {
  auto kappa_prime = kappa_prime_exact(g, opts).value;
  int n = g.size();
  auto [max_deg, min_deg] = degree_stats(g);
  int gap = n - min_deg;
  bool applicable = max_deg == min_deg && n % gap == 0 && (n / gap) % 2 == 1;
  bool hits = kappa_prime * gap == n;
  bool code = find_perfect_code(complement(g), opts.max_n).has_value();
  return {applicable, hits, code, kappa_prime};
}

} // namespace kappa
