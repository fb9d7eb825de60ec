#pragma once

/**
 * Simple undirected graph over dense vertex indices 0..n-1, stored as one
 * neighbour bitset per vertex. Immutable once built; every constructor
 * validates symmetry and irreflexivity.
 */

#include "kappa/bitset.hpp"
#include "kappa/error.hpp"

#include <algorithm>
#include <cstdint>
#include <string>
#include <utility>
#include <vector>

namespace kappa {

using Edge = std::pair<int, int>;

struct DegreeStats
{
  int max_degree;
  int min_degree;
};

class Graph
{
public:
  Graph() = default;

  static auto from_edge_list(int n, const std::vector<Edge> & edges) -> Graph {
    if (n < 0)
      throw InputError("negative vertex count");
    std::vector<VertexSet> rows(n, VertexSet(n));
    for (auto [u, v] : edges) {
      if (u < 0 || v < 0 || u >= n || v >= n)
        throw InputError("edge (" + std::to_string(u) + "," + std::to_string(v) +
                         ") has an endpoint outside 0.." + std::to_string(n - 1));
      if (u == v)
        throw InputError("loop edge at vertex " + std::to_string(u));
      rows[u].set(v);
      rows[v].set(u);
    }
    return Graph(std::move(rows));
  }

  // Rows must already be symmetric and loop-free; checked.
  static auto from_rows(std::vector<VertexSet> rows) -> Graph {
    int n = static_cast<int>(rows.size());
    for (int u = 0; u < n; ++u) {
      if (rows[u].size() != n)
        throw InputError("adjacency row " + std::to_string(u) + " has wrong width");
      if (rows[u].test(u))
        throw InputError("loop at vertex " + std::to_string(u));
      for (int v = rows[u].find_first(); v < n; v = rows[u].find_next(v + 1))
        if (!rows[v].test(u))
          throw InputError("asymmetric adjacency between " + std::to_string(u) + " and " +
                           std::to_string(v));
    }
    return Graph(std::move(rows));
  }

  auto size() const -> int { return static_cast<int>(_adj.size()); }

  auto adjacent(int u, int v) const -> bool { return _adj.at(u).test(v); }

  auto neighbours(int v) const -> const VertexSet & { return _adj.at(v); }

  auto degree(int v) const -> int { return _adj.at(v).count(); }

  auto edge_count() const -> int {
    int twice = 0;
    for (const auto & row : _adj)
      twice += row.count();
    return twice / 2;
  }

  auto edges() const -> std::vector<Edge> {
    std::vector<Edge> out;
    for (int u = 0; u < size(); ++u)
      for (int v = _adj[u].find_next(u + 1); v < size(); v = _adj[u].find_next(v + 1))
        out.emplace_back(u, v);
    return out;
  }

  auto empty_set() const -> VertexSet { return VertexSet(size()); }
  auto all_vertices() const -> VertexSet { return VertexSet::full(size()); }

  // One 64-bit neighbour mask per vertex, for the exponential solvers.
  auto masks() const -> std::vector<std::uint64_t> {
    if (size() > 64)
      throw ContractViolation("mask view needs n <= 64");
    std::vector<std::uint64_t> out;
    out.reserve(size());
    for (const auto & row : _adj)
      out.push_back(row.to_mask());
    return out;
  }

  friend auto operator==(const Graph & a, const Graph & b) -> bool { return a._adj == b._adj; }

private:
  explicit Graph(std::vector<VertexSet> rows) : _adj(std::move(rows)) {}

  std::vector<VertexSet> _adj;
};

// {v : |N(v) ∩ s| odd}
inline auto odd_neighborhood(const Graph & g, const VertexSet & s) -> VertexSet {
  if (s.size() != g.size())
    throw ContractViolation("odd_neighborhood: set universe " + std::to_string(s.size()) +
                            " does not match graph order " + std::to_string(g.size()));
  VertexSet out(g.size());
  for (int v = 0; v < g.size(); ++v)
    if (g.neighbours(v).dot(s))
      out.set(v);
  return out;
}

inline auto complement(const Graph & g) -> Graph {
  std::vector<VertexSet> rows;
  rows.reserve(g.size());
  for (int v = 0; v < g.size(); ++v)
    rows.push_back(g.neighbours(v).complement().reset(v));
  return Graph::from_rows(std::move(rows));
}

// Copy i occupies indices [i*n, (i+1)*n).
inline auto disjoint_copies(const Graph & g, int r) -> Graph {
  if (r < 1)
    throw InputError("disjoint_copies needs r >= 1, got " + std::to_string(r));
  int n = g.size();
  std::vector<Edge> edges;
  auto base = g.edges();
  for (int i = 0; i < r; ++i)
    for (auto [u, v] : base)
      edges.emplace_back(i * n + u, i * n + v);
  return Graph::from_edge_list(r * n, edges);
}

inline auto disjoint_union(const Graph & a, const Graph & b) -> Graph {
  std::vector<Edge> edges = a.edges();
  for (auto [u, v] : b.edges())
    edges.emplace_back(a.size() + u, a.size() + v);
  return Graph::from_edge_list(a.size() + b.size(), edges);
}

// q parts of size p; part i = indices [i*p, (i+1)*p).
inline auto complete_multipartite(int p, int q) -> Graph {
  if (p < 1 || q < 1)
    throw InputError("complete_multipartite needs p >= 1 and q >= 1, got p=" +
                     std::to_string(p) + " q=" + std::to_string(q));
  int n = p * q;
  std::vector<Edge> edges;
  for (int u = 0; u < n; ++u)
    for (int v = u + 1; v < n; ++v)
      if (u / p != v / p)
        edges.emplace_back(u, v);
  return Graph::from_edge_list(n, edges);
}

inline auto complete_graph(int n) -> Graph {
  return n == 0 ? Graph::from_edge_list(0, {}) : complete_multipartite(1, n);
}

inline auto empty_graph(int n) -> Graph { return Graph::from_edge_list(n, {}); }

// i ~ i+1 (mod n); n >= 3.
inline auto cycle_graph(int n) -> Graph {
  if (n < 3)
    throw InputError("cycle needs n >= 3, got " + std::to_string(n));
  std::vector<Edge> edges;
  for (int i = 0; i < n; ++i)
    edges.emplace_back(i, (i + 1) % n);
  return Graph::from_edge_list(n, edges);
}

inline auto degree_stats(const Graph & g) -> DegreeStats {
  if (g.size() == 0)
    throw InputError("degree_stats on the empty graph (n = 0)");
  DegreeStats s{g.degree(0), g.degree(0)};
  for (int v = 1; v < g.size(); ++v) {
    int d = g.degree(v);
    s.max_degree = std::max(s.max_degree, d);
    s.min_degree = std::min(s.min_degree, d);
  }
  return s;
}

inline auto is_regular(const Graph & g) -> bool {
  if (g.size() == 0)
    return true;
  auto s = degree_stats(g);
  return s.max_degree == s.min_degree;
}

inline auto component_count(const Graph & g) -> int {
  VertexSet unseen = g.all_vertices();
  int components = 0;
  while (unseen.any()) {
    ++components;
    VertexSet frontier(g.size());
    frontier.set(unseen.find_first());
    while (frontier.any()) {
      unseen -= frontier;
      VertexSet next(g.size());
      frontier.for_each([&](int v) { next |= g.neighbours(v); });
      frontier = next & unseen;
    }
  }
  return components;
}

} // namespace kappa
