#include <gtest/gtest.h>

#include <cmath>
#include <random>

#include "oracles.hpp"
#include "treetropy/enumeration.hpp"
#include "treetropy/error.hpp"
#include "treetropy/io.hpp"
#include "treetropy/path_entropy.hpp"

namespace treetropy {
namespace {

Pattern P(std::string_view text) { return parse_pattern_text(text); }

const Pattern kP2 = P("4: 0 2 | 0 1 | 1 3");
const Pattern kBranchedSix = P("6: 0 1 | 4 5 | 1 2 3 4");

TEST(PathMatrix, P2Edges) {
  const PathMatrix m = path_matrix(kP2);
  ASSERT_EQ(m.size(), 3u);
  const int a = m.index_of({0, 1});
  const int b = m.index_of({0, 2});
  const int c = m.index_of({1, 3});
  EXPECT_TRUE(m.edge(a, a));
  EXPECT_TRUE(m.edge(b, c));
  EXPECT_TRUE(m.edge(c, b));
  EXPECT_EQ(m.index_of({2, 3}), -1);
}

TEST(PathMatrix, BranchedSixWitness) {
  const PathMatrix m = path_matrix(kBranchedSix);
  const int loop = m.index_of({4, 5});
  ASSERT_GE(loop, 0);
  EXPECT_TRUE(m.edge(loop, loop));
  bool found = false;
  for (const auto& block : strongly_connected_components(m.adjacency)) {
    if (std::find(block.begin(), block.end(), loop) == block.end()) continue;
    found = true;
    EXPECT_GT(block.size(), 1u);
    int inside = 0;
    for (int w : block) inside += m.adjacency[loop][w];
    EXPECT_GE(inside, 2);
  }
  EXPECT_TRUE(found);
  EXPECT_TRUE(growth_witness(m).has_value());
}

TEST(SpectralRadius, Examples) {
  EXPECT_NEAR(spectral_radius(std::vector<std::vector<std::uint8_t>>{{1}}), 1.0, 1e-9);
  EXPECT_NEAR(spectral_radius(path_matrix(kP2)), 1.0, 1e-9);
  EXPECT_GT(spectral_radius(path_matrix(kBranchedSix)), 1.0 + 1e-3);
  EXPECT_NEAR(spectral_radius(std::vector<std::vector<std::uint8_t>>{{1, 1}, {1, 0}}), (1 + std::sqrt(5.0)) / 2, 1e-9);
}

TEST(SpectralRadius, NonConvergenceCap) {
  std::vector<std::vector<std::uint8_t>> m{{1, 1, 0}, {0, 1, 1}, {1, 0, 1}};
  m[0][2] = 1;
  EXPECT_THROW(spectral_radius(m, {1e-15, 2}), Error);
}

TEST(SpectralRadius, WalkGrowthOracle) {
  const PathMatrix m = path_matrix(kBranchedSix);
  const double w40 = testing::walk_count(m.adjacency, 40);
  const double w80 = testing::walk_count(m.adjacency, 80);
  EXPECT_GT(w80 / w40, std::pow(1.5, 40));
  EXPECT_NEAR(std::log(w80 / w40) / 40, std::log(spectral_radius(m)), 0.02);
}

TEST(Entropy, Examples) {
  EXPECT_EQ(entropy(kP2), 0.0);
  EXPECT_EQ(entropy(P("5: 0 1 2 3 4")), 0.0);
  EXPECT_GT(entropy(kBranchedSix), 0.0);
}

TEST(ZeroTest, Examples) {
  EXPECT_TRUE(is_zero_entropy_spectral(kP2));
  EXPECT_FALSE(is_zero_entropy_spectral(kBranchedSix));
  EXPECT_TRUE(is_zero_entropy_spectral(P("6: 0 1 2 3 4 5")));
}

TEST(Opening, Examples) {
  EXPECT_EQ(opening(kBranchedSix, {0, 1}, {1, 2, 3, 4}), P("6: 0 1 2 3 4 | 4 5"));
  EXPECT_EQ(opening(kP2, {0, 2}, {0, 1}), P("4: 0 1 2 | 1 3"));
  try {
    opening(kP2, {0, 2}, {1, 3});
    FAIL();
  } catch (const Error& e) {
    EXPECT_EQ(e.kind(), ErrorKind::NotAdjacent);
  }
}

TEST(Exports, DotAndCsv) {
  const PathMatrix m = path_matrix(kP2);
  EXPECT_NE(to_dot(m).find("\"0-1\" -> \"0-1\""), std::string::npos);
  EXPECT_EQ(to_csv(m).substr(0, to_csv(m).find('\n')), "path,0-1,0-2,1-3");
}

TEST(Properties, ExactTestMatchesFloatingPointUpToSeven) {
  for (int n = 1; n <= 7; ++n) {
    for (const Pattern& p : enumerate_patterns(n)) {
      EXPECT_EQ(is_zero_entropy_spectral(p), entropy(p) <= 1e-6) << format_pattern_text(p);
    }
  }
}

TEST(Properties, RandomPatterns) {
  std::mt19937_64 rng(testing::kDefaultSeed);
  for (int trial = 0; trial < 150; ++trial) {
    const int n = 3 + trial % 8;
    const Pattern p = testing::random_pattern(n, rng);
    const PathMatrix m = path_matrix(p);

    // Rotation relabels paths without changing edges.
    const int s = 1 + static_cast<int>(rng() % (n - 1));
    const PathMatrix r = path_matrix(rotate(p, s));
    ASSERT_EQ(r.size(), m.size());
    for (std::size_t i = 0; i < m.size(); ++i) {
      const BasicPath a{(m.paths[i].first + s) % n, (m.paths[i].second + s) % n};
      for (std::size_t j = 0; j < m.size(); ++j) {
        const BasicPath b{(m.paths[j].first + s) % n, (m.paths[j].second + s) % n};
        EXPECT_EQ(m.edge(i, j), r.edge(r.index_of(a), r.index_of(b)));
      }
    }
    EXPECT_NEAR(entropy(rotate(p, s)), entropy(p), 1e-9);

    // A path covers the basic path joining its shifted endpoints.
    for (std::size_t i = 0; i < m.size(); ++i) {
      const BasicPath image{(m.paths[i].first + 1) % n, (m.paths[i].second + 1) % n};
      if (const int j = m.index_of(image); j >= 0) EXPECT_TRUE(m.edge(i, j));
    }

    // Growth rate agrees with walk counting.
    const double rho = spectral_radius(m);
    if (rho > 1.0 + 1e-6) {
      const double w = testing::walk_count(m.adjacency, 150);
      const double w2 = testing::walk_count(m.adjacency, 300);
      EXPECT_NEAR(std::log(w2 / w) / 150, std::log(rho), 0.05) << format_pattern_text(p);
    }
  }
}

}  // namespace
}  // namespace treetropy
