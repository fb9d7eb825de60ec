#include "kappa/gf2.hpp"

#include <gtest/gtest.h>

#include <random>

using namespace kappa;

namespace {

auto matrix(std::vector<std::vector<int>> rows) -> Gf2Matrix {
  int cols = rows.empty() ? 0 : static_cast<int>(rows[0].size());
  Gf2Matrix m(static_cast<int>(rows.size()), cols);
  for (int r = 0; r < m.rows(); ++r)
    for (int c = 0; c < cols; ++c)
      m.set(r, c, rows[r][c] != 0);
  return m;
}

auto vec(std::vector<int> bits) -> BitVector {
  BitVector v(static_cast<int>(bits.size()));
  for (std::size_t i = 0; i < bits.size(); ++i)
    v.set(static_cast<int>(i), bits[i] != 0);
  return v;
}

auto random_matrix(std::mt19937_64 & rng, int rows, int cols) -> Gf2Matrix {
  Gf2Matrix m(rows, cols);
  for (int r = 0; r < rows; ++r)
    for (int c = 0; c < cols; ++c)
      m.set(r, c, rng() >> 63);
  return m;
}

} // namespace

TEST(Solve, IdentitySystem)
{
  auto s = solve(Gf2Matrix::identity(3), vec({1, 0, 1}));
  ASSERT_TRUE(s);
  EXPECT_EQ(s->particular, vec({1, 0, 1}));
  EXPECT_TRUE(s->kernel_basis.empty());
}

TEST(Solve, ZeroRowWithNonzeroRhsIsInfeasible)
{
  EXPECT_FALSE(solve(Gf2Matrix(2, 2), vec({1, 0})));
}

TEST(Solve, RankDeficientSystemHasTwoSolutions)
{
  // enumerating all four vectors: only 00 and 11 satisfy x0 + x1 = 0 twice
  auto s = solve(matrix({{1, 1}, {1, 1}}), vec({0, 0}));
  ASSERT_TRUE(s);
  ASSERT_EQ(s->kernel_basis.size(), 1U);
  EXPECT_EQ(s->kernel_basis[0], vec({1, 1}));
  EXPECT_EQ(s->particular, vec({0, 0}));
}

TEST(Solve, DimensionMismatchIsAContractViolation)
{
  EXPECT_THROW(solve(Gf2Matrix(2, 3), BitVector(3)), ContractViolation);
}

TEST(Rank, Examples)
{
  EXPECT_EQ(rank(Gf2Matrix::identity(4)), 4);
  EXPECT_EQ(rank(Gf2Matrix(3, 5)), 0);
  EXPECT_EQ(rank(matrix({{1, 1, 0}, {0, 1, 1}, {1, 0, 1}})), 2);
}

TEST(Solve, SolutionsSubstituteBack)
{
  std::mt19937_64 rng(13);
  for (int trial = 0; trial < 500; ++trial) {
    int rows = 1 + static_cast<int>(rng() % 12);
    int cols = 1 + static_cast<int>(rng() % 12);
    auto m = random_matrix(rng, rows, cols);
    BitVector b(rows);
    for (int r = 0; r < rows; ++r)
      b.set(r, rng() >> 63);
    auto s = solve(m, b);
    if (!s)
      continue;
    EXPECT_EQ(m.multiply(s->particular), b);
    for (const auto & k : s->kernel_basis)
      EXPECT_TRUE(m.multiply(k).empty());
  }
}

TEST(Solve, FeasibilityAgreesWithEnumeration)
{
  std::mt19937_64 rng(17);
  for (int trial = 0; trial < 1000; ++trial) {
    int rows = 1 + static_cast<int>(rng() % 8);
    int cols = 1 + static_cast<int>(rng() % 8);
    auto m = random_matrix(rng, rows, cols);
    BitVector b(rows);
    for (int r = 0; r < rows; ++r)
      b.set(r, rng() >> 63);

    int solutions = 0;
    for (std::uint64_t x = 0; x < (1ULL << cols); ++x) {
      BitVector xv(cols);
      for (int c = 0; c < cols; ++c)
        xv.set(c, (x >> c) & 1U);
      if (m.multiply(xv) == b)
        ++solutions;
    }
    auto s = solve(m, b);
    ASSERT_EQ(s.has_value(), solutions > 0);
    if (s) {
      EXPECT_EQ(solutions, 1 << s->kernel_basis.size());
    }
  }
}

TEST(Rank, RankNullity)
{
  std::mt19937_64 rng(19);
  for (int trial = 0; trial < 300; ++trial) {
    int rows = 1 + static_cast<int>(rng() % 10);
    int cols = 1 + static_cast<int>(rng() % 10);
    auto m = random_matrix(rng, rows, cols);
    auto kernel = kernel_basis(m);
    EXPECT_EQ(rank(m) + static_cast<int>(kernel.size()), cols);
    EXPECT_LE(rank(m), std::min(rows, cols));
    // independence: the kernel basis itself has full rank
    if (!kernel.empty()) {
      EXPECT_EQ(rank(Gf2Matrix::from_rows(cols, kernel)), static_cast<int>(kernel.size()));
    }
  }
}
