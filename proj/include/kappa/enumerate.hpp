#pragma once

// Graph sources for the property suites: every edge set on n labelled
// vertices, and seeded random graphs. Randomness uses raw mt19937_64 output
// (whose sequence the standard fixes) so a seed means the same graphs on
// every platform.

#include "kappa/error.hpp"
#include "kappa/graph.hpp"

#include <cstdint>
#include <numeric>
#include <random>
#include <utility>
#include <vector>

namespace kappa {

constexpr int max_exhaustive_order = 7;

inline auto vertex_pairs(int n) -> std::vector<Edge> {
  std::vector<Edge> pairs;
  for (int u = 0; u < n; ++u)
    for (int v = u + 1; v < n; ++v)
      pairs.emplace_back(u, v);
  return pairs;
}

// Graph whose edges are the pairs selected by `bits` (bit i = pair i in
// vertex_pairs order).
inline auto graph_from_pair_mask(int n, std::uint64_t bits) -> Graph {
  auto pairs = vertex_pairs(n);
  std::vector<Edge> edges;
  for (std::size_t i = 0; i < pairs.size(); ++i)
    if ((bits >> i) & 1U)
      edges.push_back(pairs[i]);
  return Graph::from_edge_list(n, edges);
}

inline auto labelled_graph_count(int n) -> std::uint64_t {
  return std::uint64_t{1} << (n * (n - 1) / 2);
}

// All 2^(n choose 2) edge sets; labelled, not up to isomorphism.
template <typename F>
auto for_each_graph(int n, F && f) -> void {
  if (n < 0 || n > max_exhaustive_order)
    throw SizeCapError("for_each_graph", n, max_exhaustive_order);
  for (std::uint64_t bits = 0; bits < labelled_graph_count(n); ++bits)
    f(graph_from_pair_mask(n, bits));
}

// G(n, 1/2)
inline auto random_graph(int n, std::mt19937_64 & rng) -> Graph {
  std::vector<Edge> edges;
  for (auto e : vertex_pairs(n))
    if (rng() >> 63)
      edges.push_back(e);
  return Graph::from_edge_list(n, edges);
}

// Uniform over the labelled cubic graphs via the pairing model with
// rejection of loops and multi-edges. n must be even and >= 4.
inline auto random_cubic_graph(int n, std::mt19937_64 & rng) -> Graph {
  if (n < 4 || n % 2 != 0)
    throw InputError("cubic graphs need an even order >= 4");
  std::vector<int> points(3 * n);
  while (true) {
    for (int i = 0; i < 3 * n; ++i)
      points[i] = i / 3;
    for (int i = 3 * n - 1; i > 0; --i) {
      int j = static_cast<int>(rng() % static_cast<std::uint64_t>(i + 1));
      std::swap(points[i], points[j]);
    }
    std::vector<VertexSet> rows(n, VertexSet(n));
    bool simple = true;
    for (int i = 0; i < 3 * n && simple; i += 2) {
      int u = points[i];
      int v = points[i + 1];
      if (u == v || rows[u].test(v))
        simple = false;
      else {
        rows[u].set(v);
        rows[v].set(u);
      }
    }
    if (simple)
      return Graph::from_rows(std::move(rows));
  }
}

} // namespace kappa
