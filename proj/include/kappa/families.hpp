#pragma once

// Named graph families and their labelling conventions:
//   multipartite(p, q)  q parts of size p, part i = [i*p, (i+1)*p)
//   copies(base, r)     copy i = [i*n, (i+1)*n)
//   cycle(n)            i ~ i+1 mod n
//   complete(n), empty(n), complement(base)

#include "kappa/error.hpp"
#include "kappa/graph.hpp"

#include <algorithm>
#include <memory>
#include <string>
#include <variant>

namespace kappa {

struct Multipartite
{
  int p;
  int q;
};

struct Copies
{
  std::shared_ptr<const Graph> base;
  int r;
};

struct Cycle
{
  int n;
};

struct Complete
{
  int n;
};

struct Empty
{
  int n;
};

struct ComplementOf
{
  std::shared_ptr<const Graph> base;
};

using FamilySpec = std::variant<Multipartite, Copies, Cycle, Complete, Empty, ComplementOf>;

namespace detail {

template <typename... F>
struct overloaded : F...
{
  using F::operator()...;
};
template <typename... F>
overloaded(F...) -> overloaded<F...>;

inline auto require_base(const std::shared_ptr<const Graph> & base) -> const Graph & {
  if (!base)
    throw InputError("family needs a base graph");
  return *base;
}

} // namespace detail

inline auto build_family(const FamilySpec & spec) -> Graph {
  return std::visit(
      detail::overloaded{
          [](const Multipartite & m) { return complete_multipartite(m.p, m.q); },
          [](const Copies & c) { return disjoint_copies(detail::require_base(c.base), c.r); },
          [](const Cycle & c) { return cycle_graph(c.n); },
          [](const Complete & c) {
            if (c.n < 0)
              throw InputError("complete graph needs n >= 0");
            return complete_graph(c.n);
          },
          [](const Empty & e) {
            if (e.n < 0)
              throw InputError("empty graph needs n >= 0");
            return empty_graph(e.n);
          },
          [](const ComplementOf & c) { return complement(detail::require_base(c.base)); },
      },
      spec);
}

inline auto describe_family(const FamilySpec & spec) -> std::string {
  return std::visit(
      detail::overloaded{
          [](const Multipartite & m) {
            return "multipartite(p=" + std::to_string(m.p) + ", q=" + std::to_string(m.q) + ")";
          },
          [](const Copies & c) { return "copies(r=" + std::to_string(c.r) + ")"; },
          [](const Cycle & c) { return "cycle(" + std::to_string(c.n) + ")"; },
          [](const Complete & c) { return "complete(" + std::to_string(c.n) + ")"; },
          [](const Empty & e) { return "empty(" + std::to_string(e.n) + ")"; },
          [](const ComplementOf &) { return std::string("complement"); },
      },
      spec);
}

struct ClosedForm
{
  int kappa;
  int kappa_prime;
};

// Values for G_{p,q}. For even q the κ' value is p+q-1, confirmed by the
// oracle on every pq <= 12 (p+q+1 would break κ' <= δ+1 already on C4).
inline auto multipartite_closed_form(int p, int q) -> ClosedForm {
  if (p < 1 || q < 1)
    throw InputError("multipartite closed form needs p, q >= 1");
  int n = p * q;
  if (q % 2 == 1)
    return {n - p, q};
  return {std::max(n - p, n - q), p + q - 1};
}

} // namespace kappa
