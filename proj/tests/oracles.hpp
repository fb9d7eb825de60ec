#pragma once

// Test-only brute force. Everything here works from the definitions with
// plain loops over adjacency, never through the library's solvers, so it can
// serve as an independent reference.

#include "kappa/graph.hpp"

#include <cstdint>
#include <vector>

namespace oracle {

using Mask = std::uint64_t;

inline auto popcount(Mask m) -> int {
  int c = 0;
  for (; m; m &= m - 1)
    ++c;
  return c;
}

// {v : |N(v) ∩ s| odd} by counting neighbours one at a time
inline auto odd(const kappa::Graph & g, Mask s) -> Mask {
  Mask out = 0;
  for (int v = 0; v < g.size(); ++v) {
    int count = 0;
    for (int u = 0; u < g.size(); ++u)
      if (((s >> u) & 1U) && g.adjacent(u, v))
        ++count;
    if (count % 2 == 1)
      out |= Mask{1} << v;
  }
  return out;
}

// ∃ D ⊆ B, |D| odd, Odd(D) ⊆ B, by enumerating every D
inline auto accessing(const kappa::Graph & g, Mask b) -> bool {
  for (Mask d = b;; d = (d - 1) & b) {
    if (popcount(d) % 2 == 1 && (odd(g, d) & ~b) == 0)
      return true;
    if (d == 0)
      return false;
  }
}

// ∃ C ⊆ V∖B, B ⊆ Odd(C), by enumerating every C
inline auto blocked(const kappa::Graph & g, Mask b) -> bool {
  Mask all = (Mask{1} << g.size()) - 1;
  Mask rest = all & ~b;
  for (Mask c = rest;; c = (c - 1) & rest) {
    if ((b & ~odd(g, c)) == 0)
      return true;
    if (c == 0)
      return false;
  }
}

// max |B| over non-accessing B
inline auto kappa(const kappa::Graph & g) -> int {
  int best = 0;
  for (Mask b = 0; b < (Mask{1} << g.size()); ++b)
    if (popcount(b) > best && !accessing(g, b))
      best = popcount(b);
  return best;
}

// min |B| over accessing B
inline auto kappa_prime(const kappa::Graph & g) -> int {
  int best = g.size() + 1;
  for (Mask b = 1; b < (Mask{1} << g.size()); ++b)
    if (popcount(b) < best && accessing(g, b))
      best = popcount(b);
  return best;
}

inline auto perfect_code(const kappa::Graph & g, Mask c) -> bool {
  for (int v = 0; v < g.size(); ++v) {
    int hits = 0;
    for (int u = 0; u < g.size(); ++u)
      if (((c >> u) & 1U) && g.adjacent(u, v))
        ++hits;
    if (((c >> v) & 1U) ? hits != 0 : hits != 1)
      return false;
  }
  return true;
}

inline auto has_perfect_code(const kappa::Graph & g) -> bool {
  for (Mask c = 0; c < (Mask{1} << g.size()); ++c)
    if (perfect_code(g, c))
      return true;
  return false;
}

inline auto mask_of(const kappa::VertexSet & s) -> Mask { return s.to_mask(); }

} // namespace oracle
