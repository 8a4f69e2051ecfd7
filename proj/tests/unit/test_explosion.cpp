#include <gtest/gtest.h>

#include "oracles.hpp"
#include "treetropy/collapse.hpp"
#include "treetropy/enumeration.hpp"
#include "treetropy/error.hpp"
#include "treetropy/explosion.hpp"
#include "treetropy/io.hpp"
#include "treetropy/path_entropy.hpp"
#include "treetropy/star.hpp"

namespace treetropy {
namespace {

Pattern P(std::string_view text) { return parse_pattern_text(text); }

const Pattern kP2 = P("4: 0 2 | 0 1 | 1 3");
const Pattern kP3 = P("8: 0 4 | 1 5 | 2 6 | 3 7 | 0 2 | 0 1 | 3 5");

ErrorKind kind_of(const std::function<void()>& f) {
  try {
    f();
  } catch (const Error& e) {
    return e.kind();
  }
  ADD_FAILURE() << "no error raised";
  return ErrorKind::ParseError;
}

TEST(Double, NonExpandingOnTrivial) {
  EXPECT_EQ(double_pattern(P("3: 0 1 2"), NonExpanding{}), P("6: 0 1 2 | 0 3 | 1 4 | 2 5"));
}

TEST(Double, ExpandingOnP2) {
  const Pattern p3 = double_pattern(kP2, ExpandingAt{0});
  EXPECT_EQ(p3, kP3);
  EXPECT_EQ(valence(p3, 4), 1);
}

TEST(Double, NonExpandingOnP3) {
  const Pattern q = double_pattern(kP3, NonExpanding{});
  EXPECT_EQ(q, P("16: 0 8 | 1 9 | 2 10 | 3 11 | 4 12 | 5 13 | 6 14 | 7 15 | 4 8 | 5 9 | 6 10 | 7 11 | 0 2 | 0 1 | 3 13"));
  EXPECT_EQ(endpoints(q), (std::vector<Point>{12, 14, 15}));
  EXPECT_EQ(combinatorial_collapse(q, *maximal_trivial_structure(q)), kP3);
}

TEST(Double, PolicyErrors) {
  EXPECT_EQ(kind_of([] { double_pattern(P("3: 0 1 2"), ExpandingAt{0}); }), ErrorKind::PolicyMismatch);
  EXPECT_EQ(kind_of([] { double_pattern(P("6: 0 1 | 4 5 | 1 2 3 4"), ExpandingAt{1}); }), ErrorKind::PolicyMismatch);
  EXPECT_EQ(kind_of([] { double_pattern(kP3, ExpandingAt{3}); }), ErrorKind::PolicyMismatch);
  EXPECT_EQ(kind_of([] { double_pattern(kP2, ExpandingAt{7}); }), ErrorKind::PolicyMismatch);
  EXPECT_EQ(kind_of([] { double_pattern(base_pattern(1), NonExpanding{}); }), ErrorKind::PolicyMismatch);
}

TEST(Double, CustomLift) {
  const CustomLift lift{{{false, true}}};
  EXPECT_EQ(apply_lift(P("2: 0 1"), lift), P("4: 0 2 | 1 3 | 0 3"));
  EXPECT_TRUE(equivalent(double_pattern(P("2: 0 1"), lift), kP2));
}

TEST(BasePattern, Examples) {
  EXPECT_EQ(base_pattern(3), P("3: 0 1 2"));
  EXPECT_EQ(base_pattern(1).components(), (std::vector<Component>{{0}}));
  EXPECT_EQ(star_class(base_pattern(5)), (StarClass{StarKind::TrivialStar, 5}));
  EXPECT_EQ(kind_of([] { base_pattern(0); }), ErrorKind::BadRange);
}

TEST(ExplodeSequence, Examples) {
  EXPECT_EQ(explode_sequence(3, {NonExpanding{}}), P("6: 0 1 2 | 0 3 | 1 4 | 2 5"));
  EXPECT_EQ(explode_sequence(4, {}), base_pattern(4));
  EXPECT_TRUE(equivalent(explode_sequence(2, {NonExpanding{}}), kP2));
}

TEST(AllDoublings, IntervalIsUniqueUpToRotation) {
  const auto all = all_doublings(P("2: 0 1"));
  ASSERT_FALSE(all.empty());
  for (const Pattern& p : all) EXPECT_TRUE(equivalent(p, kP2)) << format_pattern_text(p);
}

TEST(Script, Parse) {
  const auto script = parse_explosion_script("base=3 ne ne ee2@0");
  EXPECT_EQ(script.base, 3);
  ASSERT_EQ(script.steps.size(), 3u);
  EXPECT_EQ(to_string(script.steps[2]), "ee2@0");
  EXPECT_EQ(kind_of([] { parse_explosion_script("base=3 sideways"); }), ErrorKind::ParseError);
}

TEST(Properties, RoundtripAndEndpointAccounting) {
  std::vector<Pattern> corpus;
  for (int n = 2; n <= 8; ++n) {
    for (const Pattern& p : enumerate_patterns(n)) {
      if (is_strongly_collapsible(p)) corpus.push_back(p);
    }
  }
  for (int k = 3; k <= 4; ++k) corpus.push_back(ee2_chain(k));
  ASSERT_GT(corpus.size(), 10u);

  for (const Pattern& p : corpus) {
    const Pattern ne = double_pattern(p, NonExpanding{});
    EXPECT_EQ(combinatorial_collapse(ne, *maximal_trivial_structure(ne)), p) << format_pattern_text(p);
    EXPECT_NEAR(entropy(ne), entropy(p), 1e-6);
    if (p.period() >= 3) EXPECT_EQ(endpoints(ne).size(), endpoints(p).size()) << format_pattern_text(p);

    const StarClass star = star_class(p);
    if (star.kind != StarKind::SimplicialStar && star.kind != StarKind::IntervalPattern) continue;
    const auto v = valences(p);
    const Point pivot = static_cast<Point>(std::max_element(v.begin(), v.end()) - v.begin());
    if (std::count(v.begin(), v.end(), v[pivot]) != 1 && v[pivot] >= 3) continue;
    if (v[pivot] < 2) continue;
    Pattern ex = p;
    try {
      ex = double_pattern(p, ExpandingAt{pivot});
    } catch (const Error& e) {
      ADD_FAILURE() << format_pattern_text(p) << ": " << e.what();
      continue;
    }
    EXPECT_EQ(combinatorial_collapse(ex, *maximal_trivial_structure(ex)), p);
    EXPECT_EQ(endpoints(ex).size(), endpoints(p).size() + 1) << format_pattern_text(p);
    EXPECT_NEAR(entropy(ex), 0.0, 1e-6);
  }
}

}  // namespace
}  // namespace treetropy
