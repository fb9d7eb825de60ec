#include "kappa/io.hpp"

#include <gtest/gtest.h>

#include <algorithm>
#include <filesystem>

using namespace kappa;

namespace {

auto corpus(int n) -> std::vector<Graph> {
  char name[32];
  std::snprintf(name, sizeof name, "cubic_%02d.g6", n);
  return load_graph6_corpus(std::filesystem::path(KAPPA_CORPUS_DIR) / name);
}

// Backtracking over vertex images, checking adjacency to every vertex
// already placed.
auto extend(const Graph & a, const Graph & b, std::vector<int> & image, std::vector<bool> & used) -> bool {
  int v = 0;
  while (v < a.size() && image[v] >= 0)
    ++v;
  if (v == a.size())
    return true;
  for (int w = 0; w < b.size(); ++w) {
    if (used[w] || a.degree(v) != b.degree(w))
      continue;
    bool fits = true;
    for (int u = 0; u < v && fits; ++u)
      fits = a.adjacent(u, v) == b.adjacent(image[u], w);
    if (!fits)
      continue;
    image[v] = w;
    used[w] = true;
    if (extend(a, b, image, used))
      return true;
    image[v] = -1;
    used[w] = false;
  }
  return false;
}

auto isomorphic(const Graph & a, const Graph & b) -> bool {
  if (a.size() != b.size() || a.edge_count() != b.edge_count())
    return false;
  std::vector<int> image(a.size(), -1);
  std::vector<bool> used(b.size(), false);
  return extend(a, b, image, used);
}

} // namespace

TEST(Isomorphism, RelabelledCycleMatches)
{
  auto c = cycle_graph(6);
  auto relabelled = Graph::from_edge_list(6, {{0, 2}, {2, 4}, {4, 1}, {1, 3}, {3, 5}, {5, 0}});
  EXPECT_TRUE(isomorphic(c, relabelled));
  EXPECT_FALSE(isomorphic(c, disjoint_copies(complete_graph(3), 2)));
}

class CubicCorpus : public ::testing::TestWithParam<std::pair<int, int>>
{};

TEST_P(CubicCorpus, CountsAndDegrees)
{
  auto [n, expected] = GetParam();
  auto graphs = corpus(n);
  ASSERT_EQ(static_cast<int>(graphs.size()), expected);
  for (const auto & g : graphs) {
    EXPECT_EQ(g.size(), n);
    EXPECT_TRUE(is_regular(g));
    EXPECT_EQ(degree_stats(g).max_degree, 3);
  }
}

TEST_P(CubicCorpus, PairwiseDistinct)
{
  auto graphs = corpus(GetParam().first);
  for (std::size_t i = 0; i < graphs.size(); ++i)
    for (std::size_t j = i + 1; j < graphs.size(); ++j)
      EXPECT_FALSE(isomorphic(graphs[i], graphs[j])) << i << " ~ " << j;
}

INSTANTIATE_TEST_SUITE_P(Orders, CubicCorpus,
                         ::testing::Values(std::pair{4, 1}, std::pair{6, 2}, std::pair{8, 6}, std::pair{10, 21}));
