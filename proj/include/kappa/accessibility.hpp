#pragma once

/**
 * Accessing and non-accessing vertex sets.
 *
 * B is accessing when some D ⊆ B with |D| odd has Odd(D) ⊆ B. B is
 * non-accessing exactly when some C ⊆ V∖B has B ⊆ Odd(C). Both conditions
 * are linear over GF(2) once the candidate variables are fixed, so each
 * direction is decided by one elimination:
 *
 *   access system (variables x_u, u ∈ B):
 *     for each v ∉ B:  Σ_{u ∈ N(v)∩B} x_u = 0
 *                      Σ_{u ∈ B}      x_u = 1
 *
 *   block system (variables y_u, u ∈ V∖B):
 *     for each v ∈ B:  Σ_{u ∈ N(v)∖B} y_u = 1
 *
 * The two systems are solved independently; exactly one of them is
 * consistent for every B, which the test suites check rather than assume.
 */

#include "kappa/bitset.hpp"
#include "kappa/error.hpp"
#include "kappa/gf2.hpp"
#include "kappa/graph.hpp"

#include <optional>
#include <string>
#include <vector>

namespace kappa {

enum class WitnessKind { access, block };

inline auto witness_kind_name(WitnessKind k) -> std::string {
  return k == WitnessKind::access ? "access" : "block";
}

// D for an accessing B, or C for a non-accessing B.
struct Certificate
{
  WitnessKind kind;
  VertexSet set;

  friend auto operator==(const Certificate &, const Certificate &) -> bool = default;
};

namespace detail {

inline auto check_universe(const Graph & g, const VertexSet & b, const char * op) -> void {
  if (b.size() != g.size())
    throw ContractViolation(std::string(op) + ": set universe " + std::to_string(b.size()) +
                            " does not match graph order " + std::to_string(g.size()));
}

// Linear system over the members of `vars`, with the vertex behind each
// column kept alongside so solutions can be lifted back to vertex sets.
struct IndexedSystem
{
  Gf2Matrix matrix;
  BitVector rhs;
  std::vector<int> column_vertex;

  auto lift(const BitVector & x) const -> VertexSet {
    VertexSet out(static_cast<int>(universe));
    x.for_each([&](int c) { out.set(column_vertex[c]); });
    return out;
  }

  int universe;
};

inline auto access_system(const Graph & g, const VertexSet & b) -> IndexedSystem {
  auto vars = b.members();
  int cols = static_cast<int>(vars.size());
  VertexSet outside = b.complement();
  std::vector<BitVector> rows;
  outside.for_each([&](int v) {
    BitVector row(cols);
    for (int c = 0; c < cols; ++c)
      if (g.adjacent(v, vars[c]))
        row.set(c);
    rows.push_back(std::move(row));
  });
  rows.push_back(BitVector::full(cols));
  int parity_row = static_cast<int>(rows.size()) - 1;
  BitVector rhs(static_cast<int>(rows.size()));
  rhs.set(parity_row);
  return {Gf2Matrix::from_rows(cols, std::move(rows)), std::move(rhs), std::move(vars), g.size()};
}

inline auto block_system(const Graph & g, const VertexSet & b) -> IndexedSystem {
  auto vars = b.complement().members();
  int cols = static_cast<int>(vars.size());
  std::vector<BitVector> rows;
  b.for_each([&](int v) {
    BitVector row(cols);
    for (int c = 0; c < cols; ++c)
      if (g.adjacent(v, vars[c]))
        row.set(c);
    rows.push_back(std::move(row));
  });
  BitVector rhs = BitVector::full(static_cast<int>(rows.size()));
  return {Gf2Matrix::from_rows(cols, std::move(rows)), std::move(rhs), std::move(vars), g.size()};
}

} // namespace detail

// D ⊆ B, |D| odd, Odd(D) ⊆ B
inline auto is_valid_access_witness(const Graph & g, const VertexSet & b, const VertexSet & d) -> bool {
  detail::check_universe(g, b, "is_valid_access_witness");
  detail::check_universe(g, d, "is_valid_access_witness");
  return d.is_subset_of(b) && d.count() % 2 == 1 && odd_neighborhood(g, d).is_subset_of(b);
}

// C ⊆ V∖B, B ⊆ Odd(C)
inline auto is_valid_block_witness(const Graph & g, const VertexSet & b, const VertexSet & c) -> bool {
  detail::check_universe(g, b, "is_valid_block_witness");
  detail::check_universe(g, c, "is_valid_block_witness");
  return !c.intersects(b) && b.is_subset_of(odd_neighborhood(g, c));
}

inline auto is_valid_certificate(const Graph & g, const VertexSet & b, const Certificate & cert) -> bool {
  return cert.kind == WitnessKind::access ? is_valid_access_witness(g, b, cert.set)
                                          : is_valid_block_witness(g, b, cert.set);
}

inline auto is_accessing(const Graph & g, const VertexSet & b) -> bool {
  detail::check_universe(g, b, "is_accessing");
  if (b.empty())
    return false;
  auto sys = detail::access_system(g, b);
  return solve(sys.matrix, sys.rhs).has_value();
}

inline auto accessing_witness(const Graph & g, const VertexSet & b) -> std::optional<Certificate> {
  detail::check_universe(g, b, "accessing_witness");
  if (b.empty())
    return std::nullopt;
  auto sys = detail::access_system(g, b);
  auto sol = solve(sys.matrix, sys.rhs);
  if (!sol)
    return std::nullopt;
  return Certificate{WitnessKind::access, sys.lift(sol->particular)};
}

inline auto non_accessing_witness(const Graph & g, const VertexSet & b) -> std::optional<Certificate> {
  detail::check_universe(g, b, "non_accessing_witness");
  auto sys = detail::block_system(g, b);
  auto sol = solve(sys.matrix, sys.rhs);
  if (!sol)
    return std::nullopt;
  return Certificate{WitnessKind::block, sys.lift(sol->particular)};
}

// Every witness of the requested kind, as particular + span(kernel) lifted to
// vertex sets. Returns an empty space (no particular) when none exists.
struct WitnessSpace
{
  std::optional<VertexSet> particular;
  std::vector<VertexSet> kernel;

  auto solution_count_log2() const -> int { return particular ? static_cast<int>(kernel.size()) : -1; }

  // Calls f on each of the 2^|kernel| witnesses. Only sensible for small kernels.
  template <typename F>
  auto for_each(F && f) const -> void {
    if (!particular)
      return;
    if (kernel.size() >= 31)
      throw SizeCapError("witness enumeration", static_cast<int>(kernel.size()), 30);
    std::uint64_t total = std::uint64_t{1} << kernel.size();
    for (std::uint64_t m = 0; m < total; ++m) {
      VertexSet w = *particular;
      for (std::size_t i = 0; i < kernel.size(); ++i)
        if ((m >> i) & 1U)
          w ^= kernel[i];
      f(w);
    }
  }
};

inline auto witness_space(const Graph & g, const VertexSet & b, WitnessKind kind) -> WitnessSpace {
  detail::check_universe(g, b, "witness_space");
  if (kind == WitnessKind::access && b.empty())
    return {};
  auto sys = kind == WitnessKind::access ? detail::access_system(g, b) : detail::block_system(g, b);
  auto sol = solve(sys.matrix, sys.rhs);
  if (!sol)
    return {};
  WitnessSpace space{sys.lift(sol->particular), {}};
  for (const auto & k : sol->kernel_basis)
    space.kernel.push_back(sys.lift(k));
  return space;
}

} // namespace kappa
