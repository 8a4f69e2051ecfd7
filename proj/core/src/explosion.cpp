#include "treetropy/explosion.hpp"

#include <algorithm>
#include <charconv>
#include <functional>
#include <optional>
#include <set>
#include <sstream>

#include "treetropy/collapse.hpp"
#include "treetropy/error.hpp"

namespace treetropy {

namespace {

constexpr long kMaxLiftSearch = 1L << 20;

template <class... Ts>
struct overloaded : Ts... {
  using Ts::operator()...;
};
template <class... Ts>
overloaded(Ts...) -> overloaded<Ts...>;

CustomLift all_low(const Pattern& pattern) {
  CustomLift lift;
  for (const auto& c : pattern.components()) lift.high.emplace_back(c.size(), false);
  return lift;
}

CustomLift non_expanding_lift(const Pattern& pattern) {
  CustomLift lift = all_low(pattern);
  const auto& comps = pattern.components();
  const auto counts = valences(pattern);
  for (Point x = 0; x < pattern.period(); ++x) {
    if (counts[x] < 2) continue;
    // Components are sorted, so the last one containing x is the largest.
    for (std::size_t c = comps.size(); c-- > 0;) {
      auto it = std::find(comps[c].begin(), comps[c].end(), x);
      if (it != comps[c].end()) {
        lift.high[c][it - comps[c].begin()] = true;
        break;
      }
    }
  }
  return lift;
}

CustomLift expanding_lift(const Pattern& pattern, Point pivot) {
  const auto& comps = pattern.components();
  const int m = pattern.period();
  if (pattern.is_trivial()) throw Error(ErrorKind::PolicyMismatch, "expanding explosion of a trivial pattern");
  if (pivot < 0 || pivot >= m) throw Error(ErrorKind::PolicyMismatch, "pivot outside the pattern");
  if (!std::all_of(comps.begin(), comps.end(), [](const Component& c) { return c.size() == 2; })) {
    throw Error(ErrorKind::PolicyMismatch, "expanding explosion needs a simplicial pattern");
  }
  const auto counts = valences(pattern);
  const int top = *std::max_element(counts.begin(), counts.end());
  if (counts[pivot] != top || top < 2) {
    throw Error(ErrorKind::PolicyMismatch, "pivot " + std::to_string(pivot) + " does not have the maximum valence");
  }
  if (top >= 3 && std::count(counts.begin(), counts.end(), top) != 1) {
    throw Error(ErrorKind::PolicyMismatch, "maximum valence is not attained at a unique point");
  }

  CustomLift lift = all_low(pattern);
  for (Point x = 0; x < m; ++x) {
    if (x == pivot || counts[x] < 2) continue;
    bool first = true;
    for (std::size_t c = 0; c < comps.size(); ++c) {
      auto it = std::find(comps[c].begin(), comps[c].end(), x);
      if (it == comps[c].end()) continue;
      if (!first) lift.high[c][it - comps[c].begin()] = true;
      first = false;
    }
  }
  return lift;
}

bool collapses_back(const Pattern& exploded, const Pattern& original) {
  const auto structure = maximal_trivial_structure(exploded);
  if (!structure || structure->block_count != original.period()) return false;
  try {
    return combinatorial_collapse(exploded, *structure) == original;
  } catch (const Error&) {
    return false;
  }
}

StarClass expected_non_expanding(const StarClass& before) {
  switch (before.kind) {
    case StarKind::TrivialStar:
      return before.k == 2 ? StarClass{StarKind::IntervalPattern, 2} : StarClass{StarKind::NonSimplicialStar, before.k};
    default:
      return before;
  }
}

// Checks the endpoint behaviour promised by a rule-based policy.
using Acceptance = std::function<bool(const Pattern&)>;

Acceptance acceptance_for(const Pattern& pattern, const LiftPolicy& policy) {
  const auto ends = endpoints(pattern).size();
  return std::visit(
      overloaded{
          [&](const NonExpanding&) -> Acceptance {
            const auto before = star_class(pattern);
            return [&pattern, ends, before](const Pattern& q) {
              if (!collapses_back(q, pattern) || endpoints(q).size() != ends) return false;
              return before.kind == StarKind::NotStar || star_class(q) == expected_non_expanding(before);
            };
          },
          [&](const ExpandingAt&) -> Acceptance {
            const auto counts = valences(pattern);
            const int top = *std::max_element(counts.begin(), counts.end());
            return [&pattern, ends, top](const Pattern& q) {
              return collapses_back(q, pattern) && endpoints(q).size() == ends + 1 &&
                     star_class(q) == StarClass{StarKind::SimplicialStar, top + 1};
            };
          },
          [&](const CustomLift&) -> Acceptance {
            return [&pattern](const Pattern& q) { return collapses_back(q, pattern); };
          },
      },
      policy);
}

// Walks lift assignments in binary counting order (low before high, first
// component member most significant) and stops when `visit` returns true.
void for_each_lift(const Pattern& pattern, long limit, const std::function<bool(const CustomLift&)>& visit) {
  CustomLift lift = all_low(pattern);
  std::vector<std::pair<std::size_t, std::size_t>> slots;
  for (std::size_t c = 0; c < lift.high.size(); ++c) {
    for (std::size_t i = 0; i < lift.high[c].size(); ++i) slots.emplace_back(c, i);
  }
  for (long visited = 0; visited < limit; ++visited) {
    if (visit(lift)) return;
    std::size_t s = slots.size();
    while (s > 0) {
      --s;
      auto bit = lift.high[slots[s].first][slots[s].second];
      if (!bit) {
        bit = true;
        break;
      }
      bit = false;
      if (s == 0) return;
    }
    if (slots.empty()) return;
  }
}

}  // namespace

std::string to_string(const LiftPolicy& policy) {
  return std::visit(overloaded{
                        [](const NonExpanding&) { return std::string("ne"); },
                        [](const ExpandingAt& e) { return "ee2@" + std::to_string(e.pivot); },
                        [](const CustomLift&) { return std::string("custom"); },
                    },
                    policy);
}

Pattern apply_lift(const Pattern& pattern, const CustomLift& lift) {
  const int m = pattern.period();
  const auto& comps = pattern.components();
  if (lift.high.size() != comps.size()) throw Error(ErrorKind::PolicyMismatch, "lift table does not match components");
  std::vector<Component> result;
  for (Point j = 0; j < m; ++j) result.push_back({j, j + m});
  for (std::size_t c = 0; c < comps.size(); ++c) {
    if (lift.high[c].size() != comps[c].size()) {
      throw Error(ErrorKind::PolicyMismatch, "lift table does not match components");
    }
    Component lifted;
    for (std::size_t i = 0; i < comps[c].size(); ++i) lifted.push_back(comps[c][i] + (lift.high[c][i] ? m : 0));
    if (lifted.size() >= 2) result.push_back(std::move(lifted));
  }
  return Pattern::validate(2 * m, std::move(result));
}

Pattern double_pattern(const Pattern& pattern, const LiftPolicy& policy) {
  if (pattern.period() < 2) throw Error(ErrorKind::PolicyMismatch, "doubling the one-point pattern gives a trivial pattern");

  const CustomLift rule = std::visit(overloaded{
                                         [&](const NonExpanding&) { return non_expanding_lift(pattern); },
                                         [&](const ExpandingAt& e) { return expanding_lift(pattern, e.pivot); },
                                         [&](const CustomLift& c) { return c; },
                                     },
                                     policy);
  const auto accept = acceptance_for(pattern, policy);
  Pattern candidate = apply_lift(pattern, rule);
  if (accept(candidate)) return candidate;

  if (!std::holds_alternative<CustomLift>(policy)) {
    std::optional<Pattern> found;
    for_each_lift(pattern, kMaxLiftSearch, [&](const CustomLift& lift) {
      Pattern q = apply_lift(pattern, lift);
      if (!accept(q)) return false;
      found = std::move(q);
      return true;
    });
    if (found) return *found;
  }
  throw Error(ErrorKind::VerificationFailed, "no lift satisfies policy " + to_string(policy));
}

std::vector<Pattern> all_doublings(const Pattern& pattern) {
  std::vector<Pattern> result;
  std::set<Pattern> seen;
  if (pattern.period() < 2) return result;
  for_each_lift(pattern, kMaxLiftSearch, [&](const CustomLift& lift) {
    Pattern q = apply_lift(pattern, lift);
    if (collapses_back(q, pattern) && seen.insert(q).second) result.push_back(std::move(q));
    return false;
  });
  return result;
}

Pattern base_pattern(int p0) {
  if (p0 < 1) throw Error(ErrorKind::BadRange, "base period must be positive");
  Component all(p0);
  for (int i = 0; i < p0; ++i) all[i] = i;
  return Pattern::validate(p0, {all});
}

Pattern explode_sequence(int p0, const std::vector<LiftPolicy>& policies) {
  Pattern current = base_pattern(p0);
  for (const auto& policy : policies) current = double_pattern(current, policy);
  return current;
}

ExplosionScript parse_explosion_script(std::string_view script) {
  ExplosionScript result;
  std::istringstream in{std::string(script)};
  std::string token;
  bool have_base = false;
  auto parse_int = [](std::string_view text, const std::string& token) {
    int value = 0;
    auto [ptr, ec] = std::from_chars(text.data(), text.data() + text.size(), value);
    if (ec != std::errc() || ptr != text.data() + text.size()) {
      throw Error(ErrorKind::ParseError, "bad number in token '" + token + "'");
    }
    return value;
  };
  while (in >> token) {
    if (token.rfind("base=", 0) == 0) {
      if (have_base) throw Error(ErrorKind::ParseError, "duplicate token '" + token + "'");
      result.base = parse_int(std::string_view(token).substr(5), token);
      have_base = true;
    } else if (token == "ne") {
      result.steps.emplace_back(NonExpanding{});
    } else if (token.rfind("ee2@", 0) == 0) {
      result.steps.emplace_back(ExpandingAt{parse_int(std::string_view(token).substr(4), token)});
    } else {
      throw Error(ErrorKind::ParseError, "unknown token '" + token + "'");
    }
  }
  if (!have_base) throw Error(ErrorKind::ParseError, "script must set base=<p0>");
  return result;
}

}  // namespace treetropy
