#include "kappa/enumerate.hpp"
#include "kappa/io.hpp"
#include "kappa/reductions.hpp"

#include <gtest/gtest.h>

#include <random>

using namespace kappa;

namespace {

auto cube() -> Graph { return from_graph6("Gr`HOk"); }

} // namespace

TEST(ProblemNames, RoundTrip)
{
  for (auto p : {DecisionProblem::kappa_ge, DecisionProblem::kappa_prime_le, DecisionProblem::qkappa})
    EXPECT_EQ(problem_from_name(problem_name(p)), p);
  EXPECT_EQ(problem_name(DecisionProblem::kappa_prime_le), "KappaPrimeLE");
  EXPECT_THROW(problem_from_name("Kappa"), InputError);
}

TEST(KappaGe, BuildsFromCubicGraphs)
{
  auto k4 = reduce_pc_to_kappa_ge(complete_graph(4));
  EXPECT_EQ(k4.problem, DecisionProblem::kappa_ge);
  EXPECT_EQ(k4.k, 3);
  EXPECT_EQ(k4.graph, complete_graph(4));

  auto q3 = reduce_pc_to_kappa_ge(cube());
  EXPECT_EQ(q3.k, 6);
  EXPECT_EQ(q3.graph.size(), 8);
}

TEST(KappaGe, RejectsBadInputs)
{
  EXPECT_THROW(reduce_pc_to_kappa_ge(complete_multipartite(2, 3)), InputError);
  EXPECT_THROW(reduce_pc_to_kappa_ge(cycle_graph(8)), InputError);
  EXPECT_THROW(reduce_pc_to_kappa_prime_le(cycle_graph(4)), InputError);
}

TEST(KappaPrimeLe, Complements)
{
  auto k4 = reduce_pc_to_kappa_prime_le(complete_graph(4));
  EXPECT_EQ(k4.graph, empty_graph(4));
  EXPECT_EQ(k4.k, 1);
  EXPECT_FALSE(k4.gadget);

  auto q3 = reduce_pc_to_kappa_prime_le(cube());
  EXPECT_TRUE(q3.gadget);
  EXPECT_EQ(q3.graph.size(), 12);
  EXPECT_EQ(q3.k, 3);
  EXPECT_EQ(q3.graph, complement(disjoint_union(cube(), complete_graph(4))));
}

TEST(QKappa, BuildsCopies)
{
  auto k3 = reduce_to_qkappa(complete_graph(3), 3);
  EXPECT_EQ(k3.graph.size(), 9);
  EXPECT_EQ(k3.k, 6);
  EXPECT_EQ(k3.copies, 3);

  auto c5 = reduce_to_qkappa(cycle_graph(5), 2);
  EXPECT_EQ(c5.graph.size(), 10);
  EXPECT_EQ(c5.k, 8);
  EXPECT_THROW(reduce_to_qkappa(cycle_graph(5), 0), InputError);
}

TEST(Verify, SidesAgreeOnCubicGraphs)
{
  for (const auto & g : {complete_graph(4), cube()}) {
    auto ge = verify_reduction(reduce_pc_to_kappa_ge(g), g);
    EXPECT_TRUE(ge.agree()) << ge.evidence;
    EXPECT_TRUE(ge.source_side);
    auto le = verify_reduction(reduce_pc_to_kappa_prime_le(g), g);
    EXPECT_TRUE(le.agree()) << le.evidence;
  }
  std::mt19937_64 rng(83);
  for (int trial = 0; trial < 5; ++trial) {
    auto g = random_cubic_graph(12, rng);
    auto ge = verify_reduction(reduce_pc_to_kappa_ge(g), g);
    EXPECT_TRUE(ge.agree()) << to_graph6(g) << ": " << ge.evidence;
    auto le = verify_reduction(reduce_pc_to_kappa_prime_le(g), g);
    EXPECT_TRUE(le.agree()) << to_graph6(g) << ": " << le.evidence;
  }
}

TEST(Verify, QKappaSidesAgree)
{
  for (int n = 1; n <= 4; ++n)
    for_each_graph(n, [&](const Graph & g) {
      for (int k = 1; k <= 3; ++k) {
        auto check = verify_reduction(reduce_to_qkappa(g, k), g);
        ASSERT_TRUE(check.agree()) << to_graph6(g) << " k=" << k << ": " << check.evidence;
      }
    });
}
