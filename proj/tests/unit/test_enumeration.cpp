#include <gtest/gtest.h>

#include <cstdlib>
#include <set>

#include "oracles.hpp"
#include "treetropy/collapse.hpp"
#include "treetropy/enumeration.hpp"
#include "treetropy/error.hpp"
#include "treetropy/io.hpp"
#include "treetropy/star.hpp"

namespace treetropy {
namespace {

Pattern P(std::string_view text) { return parse_pattern_text(text); }

std::uint64_t factorial(int n) { return n <= 1 ? 1 : n * factorial(n - 1); }
std::uint64_t binomial(int n, int k) { return factorial(n) / (factorial(k) * factorial(n - k)); }

TEST(Enumerate, SmallPeriods) {
  EXPECT_EQ(enumerate_patterns(1).size(), 1u);
  const auto three = enumerate_patterns(3);
  ASSERT_EQ(three.size(), 2u);
  EXPECT_EQ(three[0], P("3: 0 1 | 0 2"));
  EXPECT_EQ(three[1], P("3: 0 1 2"));
}

TEST(Enumerate, LabeledCountsMatchNaiveOracle) {
  const std::vector<std::uint64_t> expected{1, 1, 4, 29, 311};
  for (int n = 1; n <= 5; ++n) {
    EXPECT_EQ(count_labeled_patterns(n), expected[n - 1]);
    EXPECT_EQ(testing::naive_labeled_patterns(n).size(), expected[n - 1]);
  }
}

TEST(Enumerate, ClassSetMatchesNaiveOracle) {
  for (int n = 1; n <= 5; ++n) {
    std::set<Pattern> oracle;
    for (const Pattern& p : testing::naive_labeled_patterns(n)) oracle.insert(canonical_form(p));
    const auto classes = enumerate_patterns(n);
    EXPECT_EQ(std::set<Pattern>(classes.begin(), classes.end()), oracle);
  }
}

TEST(Enumerate, StreamsAreCanonicalAndDuplicateFree) {
  for (int n = 1; n <= 8; ++n) {
    const auto classes = enumerate_patterns(n);
    std::set<Pattern> seen;
    for (const Pattern& p : classes) {
      EXPECT_TRUE(is_canonical(p));
      EXPECT_EQ(canonical_form(p), p);
      EXPECT_TRUE(seen.insert(p).second) << format_pattern_text(p);
    }
    std::uint64_t labeled = 0;
    for_each_pattern(n, false, [&](const Pattern&) {
      ++labeled;
      return true;
    });
    EXPECT_EQ(labeled, count_labeled_patterns(n));
  }
}

TEST(Enumerate, CapIsEnforced) {
  try {
    enumerate_patterns(kHardMaxPeriod + 1);
    FAIL();
  } catch (const Error& e) {
    EXPECT_EQ(e.kind(), ErrorKind::CapExceeded);
  }
  ::unsetenv("TREETROPY_MAX_PERIOD");
  EXPECT_EQ(enumeration_cap(), kDefaultMaxPeriod);
  ::setenv("TREETROPY_MAX_PERIOD", "10", 1);
  EXPECT_EQ(enumeration_cap(), 10);
  ::setenv("TREETROPY_MAX_PERIOD", "99", 1);
  EXPECT_EQ(enumeration_cap(), kHardMaxPeriod);
  ::unsetenv("TREETROPY_MAX_PERIOD");
}

TEST(StarEnumeration, LahCounts) {
  EXPECT_EQ(lah_number(6, 4), binomial(5, 3) * factorial(6) / factorial(4));
  EXPECT_EQ(lah_number(6, 4), 300u);
  StarSearch ns;
  ns.simplicial = false;
  ns.canonical_only = false;
  EXPECT_EQ(for_each_star_pattern(6, 4, ns, [](const Pattern&) { return true; }), 300u);
  StarSearch s;
  s.non_simplicial = false;
  s.canonical_only = false;
  EXPECT_EQ(for_each_star_pattern(6, 4, s, [](const Pattern&) { return true; }), 6 * lah_number(5, 4));
}

TEST(StarEnumeration, OutputsAreStarsOfTheRequestedKind) {
  for (int k = 3; k <= 4; ++k) {
    for (int n = k; n <= 8; ++n) {
      std::set<Pattern> seen;
      for (const Pattern& p : enumerate_star_patterns(n, k)) {
        const StarClass star = star_class(p);
        EXPECT_EQ(star.k, k);
        EXPECT_TRUE(star.kind == StarKind::SimplicialStar || star.kind == StarKind::NonSimplicialStar ||
                    star.kind == StarKind::TrivialStar);
        EXPECT_TRUE(seen.insert(p).second);
      }
      // Same classes as filtering the general enumeration.
      std::set<Pattern> filtered;
      for (const Pattern& p : enumerate_patterns(n)) {
        if (star_class(p).k == k && star_class(p).kind != StarKind::NotStar) filtered.insert(p);
      }
      EXPECT_EQ(seen, filtered) << n << "," << k;
    }
  }
}

TEST(StarEnumeration, ConstructorOutputsAppear) {
  for (auto [n, k] : {std::pair{6, 3}, {8, 3}, {8, 4}, {5, 5}, {10, 5}}) {
    const Pattern target = canonical_form(star_zero_pattern(n, k));
    bool found = false;
    for_each_star_pattern(n, k, {}, [&](const Pattern& p) {
      found = found || p == target;
      return !found;
    });
    EXPECT_TRUE(found) << n << "," << k;
  }
}

TEST(StarEnumeration, EightFiveHasNoStarZero) {
  const auto all = enumerate_star_patterns(8, 5);
  ASSERT_FALSE(all.empty());
  for (const Pattern& p : all) EXPECT_FALSE(zero_entropy_star_map(p).zero) << format_pattern_text(p);
}

TEST(CrossValidate, Reports) {
  for (int n = 1; n <= 7; ++n) EXPECT_TRUE(cross_validate(n).disagreements.empty());
  const auto five = cross_validate(5);
  EXPECT_EQ(five.zero_classes, 1u);
  bool p2 = false;
  for (const Pattern& p : enumerate_patterns(4)) p2 = p2 || equivalent(p, P("4: 0 2 | 0 1 | 1 3"));
  EXPECT_TRUE(p2);
  const auto stars = cross_validate_stars(7, 3);
  EXPECT_TRUE(stars.disagreements.empty());
  EXPECT_EQ(stars.zero_classes, 0u);
}

TEST(ZeroStarSearch, Rows) {
  for (auto [n, k] : {std::pair{6, 4}, {7, 3}, {8, 5}}) {
    const ZeroStarRow row = search_zero_star(n, k);
    EXPECT_EQ(row.mode, SearchMode::Exhaustive);
    EXPECT_FALSE(row.found);
    EXPECT_TRUE(row.consistent());
  }
  const ZeroStarRow eight = search_zero_star(8, 4);
  EXPECT_TRUE(eight.found);
  ASSERT_TRUE(eight.witness);
  EXPECT_TRUE(zero_entropy_star_map(*eight.witness).zero);
  EXPECT_TRUE(search_zero_star(6, 4).pattern_zero);
  EXPECT_EQ(search_zero_star(11, 3).mode, SearchMode::OddPeriod);
}

}  // namespace
}  // namespace treetropy
