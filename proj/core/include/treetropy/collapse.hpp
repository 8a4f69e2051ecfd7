#pragma once

#include <optional>
#include <vector>

#include "treetropy/pattern.hpp"

namespace treetropy {

// A p-block structure. The shift forces the blocks to be the residue classes
// mod p, labelled so that block 0 holds point 0.
struct BlockStructure {
  int period = 0;
  int block_count = 0;  // p
  std::vector<std::vector<Point>> blocks;
  bool trivial = false;
  bool maximal = false;

  int block_size() const noexcept { return block_count ? period / block_count : 0; }
  int block_of(Point x) const noexcept { return x % block_count; }

  friend bool operator==(const BlockStructure&, const BlockStructure&) = default;
};

// The residue-class structure for a divisor p of the period, with the
// trivial flag evaluated and the maximal flag left false.
BlockStructure block_structure(const Pattern& pattern, int p);

// Every divisor 2 <= p < n whose residue classes each sit inside a single
// component, ascending. Empty for trivial patterns.
std::vector<int> trivial_block_divisors(const Pattern& pattern);

// Structure of trivial blocks with the largest blocks (smallest p), if any.
std::optional<BlockStructure> maximal_trivial_structure(const Pattern& pattern);

// Points lying on some tree path between members of the set.
std::vector<Point> hull_points(const Pattern& pattern, const std::vector<Point>& points);

// Shrinks every block of the (trivial, maximal) structure to one point.
// Throws Error(CollapseInvalid) if the result is not a valid pattern or two
// blocks end up sharing a component without a source component meeting both.
Pattern combinatorial_collapse(const Pattern& pattern, const BlockStructure& structure);

// Witness of zero entropy: the chain of collapses P_0 <- ... <- P_r.
struct CollapseCertificate {
  std::vector<Pattern> patterns;  // patterns[0] trivial, patterns.back() the input
  std::vector<int> factors;       // factors[0] = period of P_0, then block sizes
  // Endpoint counts k_i, present when every pattern of the chain is a star pattern.
  std::optional<std::vector<int>> valences;

  int levels() const noexcept { return static_cast<int>(patterns.size()) - 1; }
};

std::optional<CollapseCertificate> is_strongly_collapsible(const Pattern& pattern);

// Independent audit of a certificate: P_0 trivial, all later patterns
// nontrivial, each collapse over its maximal structure reproduces the
// previous pattern, and the factors multiply out to the periods.
bool replay_certificate(const CollapseCertificate& certificate);

}  // namespace treetropy
