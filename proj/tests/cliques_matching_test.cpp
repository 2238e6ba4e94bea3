#include <gtest/gtest.h>

#include <algorithm>

#include "support.hpp"
#include "turan/cliques.hpp"
#include "turan/constructors.hpp"
#include "turan/errors.hpp"
#include "turan/matching.hpp"

namespace turan {
namespace {

TEST(CountCliques, SmallCases) {
  EXPECT_EQ(count_cliques(complete_graph(4), 2), 6U);
  EXPECT_EQ(count_cliques(complete_graph(4), 5), 0U);
  EXPECT_EQ(count_cliques(build_H({8, 7, 3}), 3), 16U);
  EXPECT_EQ(count_cliques(cycle_graph(5), 1), 5U);
  EXPECT_THROW(count_cliques(cycle_graph(5), 0), PreconditionError);
}

TEST(CountCliques, AgreesWithSubsetScan) {
  std::mt19937 rng(3);
  for (int trial = 0; trial < 120; ++trial) {
    const int n = 3 + trial % 9;
    const Graph g = testing::random_graph(rng, n, 0.2 + 0.6 * (trial % 4) / 3.0);
    const auto profile = clique_profile(g, n);
    std::uint64_t total = 0;
    for (int r = 1; r <= n; ++r) {
      const auto want = testing::brute_cliques(g, r);
      EXPECT_EQ(count_cliques(g, r), want);
      EXPECT_EQ(profile[static_cast<std::size_t>(r)], want);
      total += want;
    }
    EXPECT_EQ(profile[1], static_cast<std::uint64_t>(n));
    EXPECT_EQ(profile[2], g.size());
    std::uint64_t sum = 0;
    for (int r = 1; r <= n; ++r) sum += count_cliques(g, r);
    EXPECT_EQ(sum, total);
  }
}

TEST(CountCliques, PerVertexCountsSumToRTimesTotal) {
  std::mt19937 rng(5);
  for (int trial = 0; trial < 30; ++trial) {
    const Graph g = testing::random_graph(rng, 10, 0.5);
    for (int r = 2; r <= 4; ++r) {
      std::uint64_t sum = 0;
      for (int v = 0; v < 10; ++v) sum += cliques_at(g, v, r);
      EXPECT_EQ(sum, static_cast<std::uint64_t>(r) * count_cliques(g, r));
    }
  }
}

TEST(MaxMatching, Examples) {
  EXPECT_EQ(max_matching(cycle_graph(5)), 2);
  EXPECT_EQ(max_matching(star_graph(9)), 1);
  EXPECT_EQ(max_matching(Graph(0)), 0);
  for (int k = 4; k <= 10; ++k)
    for (int a = 2; 2 * a <= k; ++a) EXPECT_EQ(max_matching(build_H({k + 5, k, a})), k / 2);
  EXPECT_EQ(max_matching(build_H({12, 7, 3})), 3);
}

TEST(MaxMatching, AgreesWithExhaustiveSearch) {
  std::mt19937 rng(17);
  for (int trial = 0; trial < 400; ++trial) {
    const int n = 1 + trial % 12;
    const Graph g = testing::random_graph(rng, n, 0.1 + 0.05 * (trial % 8));
    const Matching m = maximum_matching(g);
    ASSERT_EQ(m.size, testing::brute_matching(g)) << trial;
    const auto edges = m.edges();
    ASSERT_EQ(static_cast<int>(edges.size()), m.size);
    std::vector<int> seen(static_cast<std::size_t>(n), 0);
    for (const auto& e : edges) {
      ASSERT_TRUE(g.adjacent(e.u, e.v));
      ++seen[static_cast<std::size_t>(e.u)];
      ++seen[static_cast<std::size_t>(e.v)];
    }
    EXPECT_TRUE(std::all_of(seen.begin(), seen.end(), [](int c) { return c <= 1; }));
  }
}

TEST(MaxMatching, BlossomHeavyGraphs) {
  // Odd cycles chained by bridges force blossom contraction.
  Graph g(15);
  for (int c = 0; c < 3; ++c)
    for (int i = 0; i < 5; ++i) g.add_edge(5 * c + i, 5 * c + (i + 1) % 5);
  g.add_edge(0, 5);
  g.add_edge(7, 10);
  EXPECT_EQ(max_matching(g), 7);
  std::mt19937 rng(23);
  for (int trial = 0; trial < 40; ++trial) {
    const Graph h = testing::random_connected_graph(rng, 12, 0.05);
    EXPECT_EQ(max_matching(h), testing::brute_matching(h));
  }
}

TEST(Certificate, Examples) {
  for (int k = 1; k <= 4; ++k) {
    const auto cert = berge_tutte_certificate(complete_graph(2 * k + 1), k);
    ASSERT_TRUE(cert.has_value());
    EXPECT_TRUE(cert->x.empty());
    EXPECT_EQ(cert->slack, 0);
  }
  for (int s = 0; s <= 4; ++s) EXPECT_FALSE(berge_tutte_certificate(perfect_matching_graph(s + 1), s).has_value());

  const auto cert = berge_tutte_certificate(build_H({12, 5, 2}), 2);
  ASSERT_TRUE(cert.has_value());
  EXPECT_EQ(cert->x, (std::vector<Vertex>{0, 1}));
  EXPECT_EQ(cert->component_sizes(), std::vector<int>(10, 1));
  EXPECT_EQ(cert->slack, 0);
  EXPECT_EQ(cert->isolated().size(), 10U);
  EXPECT_TRUE(cert->nontrivial().empty());
  EXPECT_TRUE(validate_certificate(build_H({12, 5, 2}), *cert));
}

TEST(Certificate, SizeLimit) {
  EXPECT_THROW(berge_tutte_certificate(Graph(kCertificateSubsetLimit + 1), 3), SizeLimitError);
  const Graph big = build_H({40, 9, 4});
  const auto cert = gallai_edmonds_certificate(big, 4);
  ASSERT_TRUE(cert.has_value());
  EXPECT_TRUE(validate_certificate(big, *cert));
  EXPECT_EQ(cert->bound(), 4);
  EXPECT_FALSE(gallai_edmonds_certificate(big, 3).has_value());
}

TEST(Certificate, ExistsIffMatchingNumberAtMostS) {
  // Every labeled graph on up to 6 vertices, and a sample at 7 and 8.
  auto check = [](const Graph& g) {
    const int nu = testing::brute_matching(g);
    for (int s = 0; s <= 4; ++s) {
      const auto cert = berge_tutte_certificate(g, s);
      ASSERT_EQ(cert.has_value(), nu <= s);
      const auto ge = gallai_edmonds_certificate(g, s);
      ASSERT_EQ(ge.has_value(), nu <= s);
      if (!cert) continue;
      ASSERT_TRUE(validate_certificate(g, *cert));
      ASSERT_GE(cert->slack, 0);
      auto sizes = cert->component_sizes();
      std::sort(sizes.begin(), sizes.end());
      ASSERT_EQ(sizes, testing::brute_component_sizes(g, cert->x));
      long long big = static_cast<long long>(cert->x.size());
      for (auto j : cert->nontrivial()) big += static_cast<long long>(cert->components[j].size());
      ASSERT_LE(big, 3LL * s);
      ASSERT_GE(static_cast<long long>(cert->isolated().size()), g.order() - 3LL * s);
    }
  };
  for (int n = 1; n <= 6; ++n)
    for (std::uint64_t mask = 0; mask < (std::uint64_t{1} << (n * (n - 1) / 2)); ++mask)
      check(testing::graph_from_mask(n, mask));
  std::mt19937 rng(29);
  for (int trial = 0; trial < 300; ++trial) check(testing::random_graph(rng, 7 + trial % 2, 0.15 + 0.1 * (trial % 5)));
}

}  // namespace
}  // namespace turan
