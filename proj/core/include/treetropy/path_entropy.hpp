#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "treetropy/pattern.hpp"

namespace treetropy {

// Unordered pair of distinct points inside one discrete component, stored
// with first < second.
struct BasicPath {
  Point first = 0;
  Point second = 0;

  BasicPath() = default;
  BasicPath(Point a, Point b) : first(a < b ? a : b), second(a < b ? b : a) {}

  friend bool operator==(const BasicPath&, const BasicPath&) = default;
  friend auto operator<=>(const BasicPath&, const BasicPath&) = default;
};

std::string to_string(const BasicPath& path);

// The covering digraph of a pattern and its 0/1 transition matrix. Row and
// column order follow `paths`, which is sorted.
struct PathMatrix {
  std::vector<BasicPath> paths;
  std::vector<std::vector<std::uint8_t>> adjacency;

  std::size_t size() const noexcept { return paths.size(); }
  bool edge(std::size_t from, std::size_t to) const { return adjacency.at(from).at(to) != 0; }
  // Position of a path in the canonical order, or -1.
  int index_of(const BasicPath& path) const;
};

std::vector<BasicPath> basic_paths(const Pattern& pattern);

// True when `target` lies in the hull of the image of `source` under the shift.
bool covers(const Pattern& pattern, const BasicPath& source, const BasicPath& target);
bool covers(const Pattern& pattern, const IncidenceTree& tree, const BasicPath& source, const BasicPath& target);

PathMatrix path_matrix(const Pattern& pattern);

// Tarjan's algorithm; components are returned in reverse topological order,
// each sorted ascending.
std::vector<std::vector<int>> strongly_connected_components(const std::vector<std::vector<std::uint8_t>>& adjacency);

struct SpectralOptions {
  double tolerance = 1e-9;
  int max_iterations = 100000;
};

// Perron root of the 0/1 matrix. Computed block by block over the strongly
// connected components with power iteration on (block + I) from the all-ones
// vector, stopping once the Collatz-Wielandt bounds are within tolerance.
// Throws Error(NonConvergence) when the iteration cap is reached first.
double spectral_radius(const PathMatrix& matrix, SpectralOptions options = {});
double spectral_radius(const std::vector<std::vector<std::uint8_t>>& adjacency, SpectralOptions options = {});

// Natural-log entropy max(0, ln rho(M_P)).
double entropy(const Pattern& pattern, SpectralOptions options = {});

// A vertex with two or more out-edges inside its own strongly connected
// component. Its existence is equivalent to rho(M) > 1 for a 0/1 matrix.
struct GrowthWitness {
  BasicPath vertex;
  std::vector<BasicPath> successors;  // out-neighbours inside the same component
  std::vector<BasicPath> component;
};

std::optional<GrowthWitness> growth_witness(const PathMatrix& matrix);

// Exact (integer only) decision of rho(M_P) <= 1: every strongly connected
// component of the covering digraph is a single vertex or a simple cycle.
bool is_zero_entropy_spectral(const PathMatrix& matrix);
bool is_zero_entropy_spectral(const Pattern& pattern);

// Joins two components meeting at exactly one point; all other components
// are kept. Throws Error(NotAdjacent) otherwise.
Pattern opening(const Pattern& pattern, const Component& a, const Component& b);

// Graphviz digraph; vertices labelled "a-b".
std::string to_dot(const PathMatrix& matrix);
// Header row of path labels, then one 0/1 row per path in canonical order.
std::string to_csv(const PathMatrix& matrix);

}  // namespace treetropy
