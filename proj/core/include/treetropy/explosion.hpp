#pragma once

#include <string>
#include <string_view>
#include <variant>
#include <vector>

#include "treetropy/pattern.hpp"

namespace treetropy {

// Lift rules for a 2-explosion. Every old point x becomes the block
// {x, x+m}; every old component D is lifted by choosing for each member
// either the low copy x or the high copy x+m.

// Keeps the number of endpoints: at each point of valence >= 2 the
// lexicographically largest component takes the high copy, the rest low.
struct NonExpanding {};

// Adds one endpoint at the pivot of a simplicial pattern: all components at
// the pivot take the low copy, so pivot+m becomes an endpoint.
struct ExpandingAt {
  Point pivot = 0;
};

// Explicit choice per (component, member), aligned with Pattern::components().
struct CustomLift {
  std::vector<std::vector<bool>> high;
};

using LiftPolicy = std::variant<NonExpanding, ExpandingAt, CustomLift>;

std::string to_string(const LiftPolicy& policy);

// Period-2m pattern whose maximal structure of trivial blocks is {j, j+m}
// and whose collapse is the input. The rule-based lift is verified; when
// verification fails a bounded search over custom lifts with the same
// endpoint behaviour is tried before throwing Error(VerificationFailed).
// Error(PolicyMismatch) for a policy that does not apply to the input.
Pattern double_pattern(const Pattern& pattern, const LiftPolicy& policy);

// The lift applied to every component (custom or not), without verification.
Pattern apply_lift(const Pattern& pattern, const CustomLift& lift);

// Every distinct 2-explosion of the pattern (all lift choices whose collapse
// returns the input), in lift order. Intended for small inputs.
std::vector<Pattern> all_doublings(const Pattern& pattern);

// Trivial pattern on {0..p0-1}; {{0}} for p0 = 1.
Pattern base_pattern(int p0);

Pattern explode_sequence(int p0, const std::vector<LiftPolicy>& policies);

// "base=3 ne ne ee2@0" style scripts.
struct ExplosionScript {
  int base = 1;
  std::vector<LiftPolicy> steps;
};

ExplosionScript parse_explosion_script(std::string_view script);

}  // namespace treetropy
