#pragma once

#include <cstdint>
#include <ostream>
#include <random>
#include <vector>

#include "treetropy/io.hpp"
#include "treetropy/pattern.hpp"

namespace treetropy::testing {

inline constexpr std::uint64_t kDefaultSeed = 20240611;

// Random valid pattern of the given period: components are grown one at a
// time, each new one holding a single already placed point.
Pattern random_pattern(int period, std::mt19937_64& rng);

// Brute force over every family of subsets of size >= 2, filtered by
// Pattern::validate. Labeled, so every rotation counts separately.
std::vector<Pattern> naive_labeled_patterns(int period);

// Divisors p whose residue classes each fit inside one component, by direct
// set inclusion.
std::vector<int> naive_trivial_divisors(const Pattern& pattern);

// Collapse by the smallest such divisor, computed from scratch: the blocks met
// by each component, keeping those not strictly inside another.
Pattern naive_collapse(const Pattern& pattern, int p);

// Repeated naive collapses down to a trivial pattern.
bool naive_strongly_collapsible(const Pattern& pattern);

// Number of walks of length `steps` in the covering digraph (as a double).
double walk_count(const std::vector<std::vector<std::uint8_t>>& adjacency, int steps);

}  // namespace treetropy::testing

namespace treetropy {

// Readable test failure messages.
inline void PrintTo(const Pattern& pattern, std::ostream* out) { *out << format_pattern_text(pattern); }

}  // namespace treetropy
