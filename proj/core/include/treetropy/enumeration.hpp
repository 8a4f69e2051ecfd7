#pragma once

#include <cstdint>
#include <functional>
#include <optional>
#include <string>
#include <vector>

#include "treetropy/pattern.hpp"

namespace treetropy {

inline constexpr int kDefaultMaxPeriod = 8;
inline constexpr int kHardMaxPeriod = 12;

// Period cap for full enumeration: TREETROPY_MAX_PERIOD if set (clamped to
// kHardMaxPeriod), kDefaultMaxPeriod otherwise.
int enumeration_cap();

// True when no rotation of the pattern is lexicographically smaller.
bool is_canonical(const Pattern& pattern);

// Visits every valid pattern of period n (labeled, i.e. all rotations) or only
// the canonical representative of each rotation class. Returning false from
// the visitor stops the walk. Throws Error(CapExceeded) above the cap.
void for_each_pattern(int n, bool canonical_only, const std::function<bool(const Pattern&)>& visit);
std::vector<Pattern> enumerate_patterns(int n);
std::uint64_t count_labeled_patterns(int n);

struct StarSearch {
  bool non_simplicial = true;  // one branching component of k roots plus k chains
  bool simplicial = true;      // a centre of valence k plus k chains
  // Keep only patterns whose residue classes mod n/2 lie in single components.
  bool half_blocks = false;
  bool canonical_only = true;
};

// Labeled counts before rotation dedup: Lah number L(n,k) for the
// non-simplicial family and n * L(n-1,k) for the simplicial one.
std::uint64_t lah_number(int n, int k);
std::uint64_t star_labeled_count(int n, int k, const StarSearch& search);

// k-star patterns of period n, n >= k >= 3, n <= kHardMaxPeriod. Returns the
// number of labeled configurations generated (after half-block pruning).
std::uint64_t for_each_star_pattern(int n, int k, const StarSearch& search,
                                    const std::function<bool(const Pattern&)>& visit);
std::vector<Pattern> enumerate_star_patterns(int n, int k, const StarSearch& search = {});

struct EnumerationReport {
  int period = 0;
  std::optional<int> star_k;
  std::uint64_t labeled = 0;
  std::uint64_t classes = 0;
  std::uint64_t zero_classes = 0;
  std::vector<Pattern> disagreements;  // patterns on which the two deciders differ
};

// Runs the collapse decider and the exact spectral decider on every class.
EnumerationReport cross_validate(int n);
EnumerationReport cross_validate_stars(int n, int k);

enum class SearchMode { Exhaustive, HalfBlockFiber, OddPeriod };
std::string to_string(SearchMode mode);

struct ZeroStarRow {
  int n = 0;
  int k = 0;
  bool predicted = false;     // zero_possible(n, k)
  bool found = false;         // some k-star pattern admits a zero-entropy map on the k-star
  bool pattern_zero = false;  // some k-star pattern has zero entropy (any model)
  bool relaxed = false;       // zero_possible_relaxed(n, k)
  SearchMode mode = SearchMode::Exhaustive;
  std::uint64_t examined = 0; // labeled configurations generated
  bool constructor_ok = true; // star_zero_pattern verified (positive rows only)
  bool deciders_agree = true; // collapse and spectral deciders on every candidate
  std::optional<Pattern> witness;

  bool consistent() const noexcept { return predicted == found && constructor_ok && deciders_agree; }
};

// Labeled-configuration budget below which the search is exhaustive.
inline constexpr std::uint64_t kExhaustiveStarBudget = 3'000'000;

ZeroStarRow search_zero_star(int n, int k);
std::vector<ZeroStarRow> verify_zero_star_table(int n_max, int k_max);

}  // namespace treetropy
