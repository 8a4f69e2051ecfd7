#pragma once

#include <compare>
#include <cstddef>
#include <span>
#include <string>
#include <vector>

namespace treetropy {

// Points of an n-periodic pattern are time labels 0..n-1; the dynamics is
// always the shift i -> i+1 mod n.
using Point = int;
using Component = std::vector<Point>;

// A periodic tree pattern: the period together with its discrete components,
// i.e. a hypertree over the points. Instances are immutable and always valid;
// the only way to obtain one is through Pattern::validate (or operations that
// return already validated results).
class Pattern {
 public:
  // Checks every hypertree invariant and normalizes the component list
  // (members sorted, duplicates removed, list sorted lexicographically).
  // Throws treetropy::Error on any violation.
  static Pattern validate(int period, std::vector<Component> components);

  int period() const noexcept { return period_; }
  const std::vector<Component>& components() const noexcept { return components_; }
  std::size_t component_count() const noexcept { return components_.size(); }
  bool is_trivial() const noexcept { return components_.size() == 1; }

  friend bool operator==(const Pattern&, const Pattern&) = default;
  friend auto operator<=>(const Pattern& a, const Pattern& b) {
    if (auto c = a.period_ <=> b.period_; c != 0) return c;
    return a.components_ <=> b.components_;
  }

 private:
  Pattern(int period, std::vector<Component> components)
      : period_(period), components_(std::move(components)) {}

  int period_ = 1;
  std::vector<Component> components_;
};

// Relabels every point x as (x + shift) mod n.
Pattern rotate(const Pattern& pattern, int shift);

// Lexicographically least normalized representation over all n rotations.
Pattern canonical_form(const Pattern& pattern);

// Pattern equality: the two patterns differ by a label rotation.
bool equivalent(const Pattern& a, const Pattern& b);

// Bipartite realization: nodes 0..n-1 are points, node n+c is the hub of
// component c (in the pattern's component order). Rooted at point 0.
class IncidenceTree {
 public:
  explicit IncidenceTree(const Pattern& pattern);

  int point_count() const noexcept { return point_count_; }
  int node_count() const noexcept { return static_cast<int>(adjacency_.size()); }
  int edge_count() const noexcept;
  bool is_hub(int node) const noexcept { return node >= point_count_; }
  const std::vector<int>& neighbors(int node) const { return adjacency_.at(node); }
  int parent(int node) const { return parent_.at(node); }
  int depth(int node) const { return depth_.at(node); }

  // Point nodes along the unique path from a to b, inclusive, hubs elided.
  std::vector<Point> path(Point a, Point b) const;

 private:
  int point_count_ = 0;
  std::vector<std::vector<int>> adjacency_;
  std::vector<int> parent_;
  std::vector<int> depth_;
};

std::vector<Point> tree_path(const Pattern& pattern, Point a, Point b);

// Number of components containing the point.
int valence(const Pattern& pattern, Point point);
std::vector<int> valences(const Pattern& pattern);
std::vector<Point> endpoints(const Pattern& pattern);

enum class StarKind { TrivialStar, IntervalPattern, SimplicialStar, NonSimplicialStar, NotStar };

struct StarClass {
  StarKind kind = StarKind::NotStar;
  // Number of endpoints (equal to the number of star branches); 0 for NotStar.
  int k = 0;

  friend bool operator==(const StarClass&, const StarClass&) = default;
};

StarClass star_class(const Pattern& pattern);
std::string to_string(StarKind kind);
std::string to_string(const StarClass& star);

}  // namespace treetropy
