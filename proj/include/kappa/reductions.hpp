#pragma once

/**
 * Instance constructions behind the hardness results, plus an exact checker
 * for each "source property iff target decision" claim.
 *
 *  pc-to-kappa-ge:        cubic G, 4 | n      ->  (G, 3n/4)
 *      G has a perfect code  <=>  κ(G) ≥ 3n/4
 *  pc-to-kappa-prime-le:  cubic G, 4 | n      ->  (complement(G'), n'/4)
 *      G' = G if n/4 is odd, else G ∪ K4 (makes n'/4 odd)
 *      G has a perfect code  <=>  κ'(complement(G')) = n'/4
 *  to-qkappa:             G, k ≥ 1            ->  (G^k, kn − k)
 *      κ'(G) ≥ k  <=>  κ_Q(G^k) ≤ kn − k
 */

#include "kappa/error.hpp"
#include "kappa/graph.hpp"
#include "kappa/io.hpp"
#include "kappa/perfect_code.hpp"
#include "kappa/solvers.hpp"

#include <string>

namespace kappa {

enum class DecisionProblem { kappa_ge, kappa_prime_le, qkappa };

inline auto problem_name(DecisionProblem p) -> std::string {
  switch (p) {
  case DecisionProblem::kappa_ge:
    return "KappaGE";
  case DecisionProblem::kappa_prime_le:
    return "KappaPrimeLE";
  case DecisionProblem::qkappa:
    return "QKappa";
  }
  return "?";
}

inline auto problem_from_name(const std::string & s) -> DecisionProblem {
  if (s == "KappaGE")
    return DecisionProblem::kappa_ge;
  if (s == "KappaPrimeLE")
    return DecisionProblem::kappa_prime_le;
  if (s == "QKappa")
    return DecisionProblem::qkappa;
  throw InputError("unknown decision problem '" + s + "'");
}

struct DecisionInstance
{
  DecisionProblem problem;
  Graph graph;
  int k;
  std::string provenance;
  // copies taken for QKappa, 0 otherwise
  int copies = 0;
  // K4 appended before complementing (KappaPrimeLE only)
  bool gadget = false;
};

namespace detail {

inline auto require_cubic_multiple_of_four(const Graph & g, const char * what) -> void {
  if (g.size() == 0)
    throw InputError(std::string(what) + ": graph has no vertices");
  auto s = degree_stats(g);
  if (s.max_degree != 3 || s.min_degree != 3)
    throw InputError(std::string(what) + ": input is not 3-regular (degrees " +
                     std::to_string(s.min_degree) + ".." + std::to_string(s.max_degree) + ")");
  if (g.size() % 4 != 0)
    throw InputError(std::string(what) + ": n=" + std::to_string(g.size()) +
                     " is not a multiple of 4, so 3n/4 is not an integer");
}

} // namespace detail

inline auto reduce_pc_to_kappa_ge(const Graph & g) -> DecisionInstance {
  detail::require_cubic_multiple_of_four(g, "pc-to-kappa-ge");
  int k = 3 * g.size() / 4;
  return {DecisionProblem::kappa_ge, g, k,
          "perfect code on cubic graph " + to_graph6(g) + " (n=" + std::to_string(g.size()) +
              "); decide kappa >= 3n/4 = " + std::to_string(k)};
}

inline auto reduce_pc_to_kappa_prime_le(const Graph & g) -> DecisionInstance {
  detail::require_cubic_multiple_of_four(g, "pc-to-kappa-prime-le");
  bool gadget = (g.size() / 4) % 2 == 0;
  Graph padded = gadget ? disjoint_union(g, complete_graph(4)) : g;
  int k = padded.size() / 4;
  std::string how = gadget ? "n/4 even: appended K4 as vertices " + std::to_string(g.size()) + ".." +
                                 std::to_string(g.size() + 3) + ", then complemented"
                           : "n/4 odd: complemented directly";
  return {DecisionProblem::kappa_prime_le, complement(padded), k,
          "perfect code on cubic graph " + to_graph6(g) + " (n=" + std::to_string(g.size()) +
              "); " + how + "; decide kappa' <= n'/4 = " + std::to_string(k),
          0, gadget};
}

inline auto reduce_to_qkappa(const Graph & g, int k) -> DecisionInstance {
  if (k < 1)
    throw InputError("to-qkappa: k must be >= 1, got " + std::to_string(k));
  if (g.size() == 0)
    throw InputError("to-qkappa: graph has no vertices");
  int threshold = k * g.size() - k;
  return {DecisionProblem::qkappa, disjoint_copies(g, k), threshold,
          "kappa'(G) >= " + std::to_string(k) + " for G = " + to_graph6(g) + " (n=" +
              std::to_string(g.size()) + "); " + std::to_string(k) +
              " disjoint copies; decide kappa_Q <= kn - k = " + std::to_string(threshold),
          k, false};
}

struct ReductionCheck
{
  bool source_side;
  bool target_side;
  std::string evidence;

  auto agree() const -> bool { return source_side == target_side; }
};

// Decides both sides exactly. A disagreement would falsify the construction;
// `evidence` names the values and witnesses either way.
inline auto verify_reduction(const DecisionInstance & inst, const Graph & source,
                             const SolverOptions & opts = {}) -> ReductionCheck {
  switch (inst.problem) {
  case DecisionProblem::kappa_ge: {
    auto code = find_perfect_code(source, opts.max_n);
    auto kappa = kappa_exact(inst.graph, opts);
    return {code.has_value(), kappa.value >= inst.k,
            "perfect code: " + (code ? code->to_string() : std::string("none")) +
                "; kappa=" + std::to_string(kappa.value) + " via B=" + kappa.set.to_string() +
                " C=" + kappa.certificate.set.to_string() + "; k=" + std::to_string(inst.k)};
  }
  case DecisionProblem::kappa_prime_le: {
    auto code = find_perfect_code(source, opts.max_n);
    auto kp = kappa_prime_exact(inst.graph, opts);
    return {code.has_value(), kp.value == inst.k,
            "perfect code: " + (code ? code->to_string() : std::string("none")) +
                "; kappa'=" + std::to_string(kp.value) + " via B=" + kp.set.to_string() +
                " D=" + kp.certificate.set.to_string() + "; k=" + std::to_string(inst.k)};
  }
  case DecisionProblem::qkappa: {
    if (inst.copies < 1 || inst.graph.size() != inst.copies * source.size())
      throw InputError("QKappa instance does not match its source graph");
    auto source_kp = kappa_prime_exact(source, opts);
    auto kappa = kappa_exact(inst.graph, opts);
    auto kp = kappa_prime_exact(inst.graph, opts);
    int kq = std::max(kappa.value, inst.graph.size() - kp.value);
    return {source_kp.value >= inst.copies, kq <= inst.k,
            "kappa'(source)=" + std::to_string(source_kp.value) + " vs k=" +
                std::to_string(inst.copies) + "; target kappa=" + std::to_string(kappa.value) +
                " kappa'=" + std::to_string(kp.value) + " kappa_Q=" + std::to_string(kq) +
                " vs " + std::to_string(inst.k)};
  }
  }
  throw ContractViolation("unknown decision problem");
}

} // namespace kappa
