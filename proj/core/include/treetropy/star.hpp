#pragma once

#include <optional>
#include <string>

#include "treetropy/pattern.hpp"

namespace treetropy {

enum class StarZeroKind { RotationDoubling, SimplicialChain, CentralSplit };

// How a zero-entropy k-star pattern of period n is built:
//   RotationDoubling  n = k * 2^q      (bit-reversal form, q doublings of a rotation)
//   SimplicialChain   n = 2^q, q >= k  (expanding chain, then non-expanding doublings)
//   CentralSplit      n = 2^(k-1)      (branching component at the pivot)
struct StarZeroCase {
  StarZeroKind kind = StarZeroKind::RotationDoubling;
  int n = 0;
  int k = 0;
  int q = 0;

  friend bool operator==(const StarZeroCase&, const StarZeroCase&) = default;
};

std::string to_string(StarZeroKind kind);

// Zero entropy is attainable by an n-periodic orbit spanning all k branches
// of a k-star iff n = k * 2^q or n = 2^q with q >= k-1.
// Throws Error(BadRange) unless n >= k >= 3.
bool zero_possible(int n, int k);

// Same question when the orbit may miss some branches: n = l * 2^q with
// 1 <= l <= k. Throws Error(BadRange) unless n >= 1 and k >= 3.
bool zero_possible_relaxed(int n, int k);

// Construction used by star_zero_pattern, or nullopt when zero_possible is
// false. CentralSplit is preferred when n = 2^(k-1), then RotationDoubling.
std::optional<StarZeroCase> classify_zero_case(int n, int k);

// Inner component {0..k-1} with one chain per branch, the chain on branch b
// visiting b + k*rev(0), b + k*rev(1), ... with rev the q-bit reversal.
Pattern bitrev_pattern(int k, int q);

// Period 2^k pattern: P_2 = {{0,1},{0,2},{1,3}} followed by k-2 expanding
// doublings at 0. Simplicial k-star for k >= 3.
Pattern ee2_chain(int k);

// Merges the components at 0 of a simplicial pattern whose point 0 has the
// maximum valence into one branching component {0} + neighbours(0).
// Throws Error(PivotNotFound) when 0 is not such a point.
Pattern central_split(const Pattern& pattern);

// A verified zero-entropy k-star pattern of period n. k = 2 yields interval
// patterns (n a power of two). Throws Error(NotRepresentable) when no such
// pattern exists.
Pattern star_zero_pattern(int n, int k);

// A zero-entropy pattern of period n on a k-star whose orbit may miss some
// branches: an l-star pattern with the largest admissible l <= k (an interval
// pattern or the fixed point when no l >= 3 fits). Throws
// Error(NotRepresentable) when zero_possible_relaxed is false.
Pattern relaxed_star_zero_pattern(int n, int k);

// Maps on the k-star itself that carry a star pattern: the central point y
// is sent to a point of P or fixed, and the map is monotone between
// consecutive points of P + {y}. A zero-entropy pattern need not admit a
// zero-entropy map of this kind (its zero-entropy model may live on a tree
// with several branching points). Zero entropy on a k-star with an n-periodic
// orbit meeting every branch means some k-star pattern passes this test.
struct StarMapSearch {
  bool star = false;  // the pattern embeds in a star
  bool zero = false;  // some such map has zero entropy
  // Image of y in the first zero-entropy map found; nullopt when y is fixed
  // or when y is itself a point of the pattern.
  std::optional<Point> centre_image;
};

StarMapSearch zero_entropy_star_map(const Pattern& pattern);

// Class star_zero_pattern(n, k) is expected to have.
StarClass expected_star_class(int n, int k);

}  // namespace treetropy
