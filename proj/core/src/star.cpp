#include "treetropy/star.hpp"

#include <algorithm>
#include <bit>

#include "treetropy/collapse.hpp"
#include "treetropy/error.hpp"
#include "treetropy/explosion.hpp"
#include "treetropy/path_entropy.hpp"

namespace treetropy {

namespace {

bool is_power_of_two(int n) { return n > 0 && std::has_single_bit(static_cast<unsigned>(n)); }

int log2_exact(int n) { return std::countr_zero(static_cast<unsigned>(n)); }

// q with n = base * 2^q, or -1.
int two_power_ratio(int n, int base) {
  if (base <= 0 || n % base != 0 || !is_power_of_two(n / base)) return -1;
  return log2_exact(n / base);
}

int reverse_bits(int value, int bits) {
  int result = 0;
  for (int b = 0; b < bits; ++b) result |= ((value >> b) & 1) << (bits - 1 - b);
  return result;
}

Pattern verified(Pattern pattern, StarClass expected, const std::string& what) {
  if (star_class(pattern) != expected) {
    throw Error(ErrorKind::VerificationFailed,
                what + " has class " + to_string(star_class(pattern)) + ", expected " + to_string(expected));
  }
  if (!is_strongly_collapsible(pattern)) {
    throw Error(ErrorKind::VerificationFailed, what + " is not strongly collapsible");
  }
  return pattern;
}

// Edges of the star carrying the pattern. Node n is the central point when
// it is not a point of the pattern.
std::vector<std::pair<int, int>> star_edges(const Pattern& pattern) {
  const int n = pattern.period();
  std::vector<std::pair<int, int>> edges;
  for (const auto& c : pattern.components()) {
    if (c.size() == 2) {
      edges.emplace_back(c[0], c[1]);
    } else {
      for (Point x : c) edges.emplace_back(n, x);
    }
  }
  return edges;
}

// Edge indices along the tree path between two nodes.
std::vector<int> edge_path(const std::vector<std::vector<std::pair<int, int>>>& adjacency, int from, int to) {
  std::vector<int> parent_edge(adjacency.size(), -1);
  std::vector<int> parent(adjacency.size(), -1);
  std::vector<int> queue{from};
  parent[from] = from;
  for (std::size_t i = 0; i < queue.size(); ++i) {
    for (const auto& [next, edge] : adjacency[queue[i]]) {
      if (parent[next] != -1) continue;
      parent[next] = queue[i];
      parent_edge[next] = edge;
      queue.push_back(next);
    }
  }
  std::vector<int> path;
  for (int v = to; v != from; v = parent[v]) path.push_back(parent_edge[v]);
  return path;
}

bool zero_growth(const std::vector<std::vector<std::uint8_t>>& adjacency) {
  for (const auto& block : strongly_connected_components(adjacency)) {
    for (int v : block) {
      int inside = 0;
      for (int w : block) inside += adjacency[v][w];
      if (inside >= 2) return false;
    }
  }
  return true;
}

Pattern interval_chain(int n) {
  if (n == 2) return base_pattern(2);
  Pattern current = ee2_chain(2);
  while (current.period() < n) current = double_pattern(current, NonExpanding{});
  return current;
}

}  // namespace

std::string to_string(StarZeroKind kind) {
  switch (kind) {
    case StarZeroKind::RotationDoubling:
      return "RotationDoubling";
    case StarZeroKind::SimplicialChain:
      return "SimplicialChain";
    case StarZeroKind::CentralSplit:
      return "CentralSplit";
  }
  return "?";
}

bool zero_possible(int n, int k) {
  if (k < 3 || n < k) {
    throw Error(ErrorKind::BadRange, "need n >= k >= 3, got n=" + std::to_string(n) + " k=" + std::to_string(k));
  }
  return two_power_ratio(n, k) >= 0 || (is_power_of_two(n) && log2_exact(n) >= k - 1);
}

bool zero_possible_relaxed(int n, int k) {
  if (n < 1 || k < 3) {
    throw Error(ErrorKind::BadRange, "need n >= 1 and k >= 3, got n=" + std::to_string(n) + " k=" + std::to_string(k));
  }
  // Halving only lowers l, so the odd part is the best candidate.
  return (n >> std::countr_zero(static_cast<unsigned>(n))) <= k;
}

std::optional<StarZeroCase> classify_zero_case(int n, int k) {
  if (!zero_possible(n, k)) return std::nullopt;
  if (n == (1 << (k - 1))) return StarZeroCase{StarZeroKind::CentralSplit, n, k, k - 1};
  if (const int q = two_power_ratio(n, k); q >= 0) return StarZeroCase{StarZeroKind::RotationDoubling, n, k, q};
  return StarZeroCase{StarZeroKind::SimplicialChain, n, k, log2_exact(n)};
}

Pattern bitrev_pattern(int k, int q) {
  if (k < 3 || q < 0 || q > 20) throw Error(ErrorKind::BadRange, "bitrev_pattern needs k >= 3 and 0 <= q <= 20");
  const int chain = 1 << q;
  std::vector<Component> comps;
  Component inner(k);
  for (int b = 0; b < k; ++b) inner[b] = b;
  comps.push_back(inner);
  for (int b = 0; b < k; ++b) {
    for (int i = 0; i + 1 < chain; ++i) {
      comps.push_back({b + k * reverse_bits(i, q), b + k * reverse_bits(i + 1, q)});
    }
  }
  const StarClass expected = q == 0 ? StarClass{StarKind::TrivialStar, k} : StarClass{StarKind::NonSimplicialStar, k};
  return verified(Pattern::validate(k * chain, std::move(comps)), expected, "rotation doubling pattern");
}

Pattern ee2_chain(int k) {
  if (k < 2 || k > 20) throw Error(ErrorKind::BadRange, "ee2_chain needs 2 <= k <= 20");
  Pattern current = Pattern::validate(4, {{0, 2}, {0, 1}, {1, 3}});
  for (int i = 2; i < k; ++i) current = double_pattern(current, ExpandingAt{0});
  const StarClass expected = k == 2 ? StarClass{StarKind::IntervalPattern, 2} : StarClass{StarKind::SimplicialStar, k};
  return verified(current, expected, "expanding chain");
}

Pattern central_split(const Pattern& pattern) {
  const auto& comps = pattern.components();
  const auto counts = valences(pattern);
  const bool simplicial =
      std::all_of(comps.begin(), comps.end(), [](const Component& c) { return c.size() == 2; });
  if (!simplicial || pattern.period() < 2 || counts[0] < 2 ||
      counts[0] != *std::max_element(counts.begin(), counts.end())) {
    throw Error(ErrorKind::PivotNotFound, "point 0 is not a maximum-valence point of a simplicial pattern");
  }
  std::vector<Component> result;
  Component merged{0};
  for (const auto& c : comps) {
    if (c[0] == 0) {
      merged.push_back(c[1]);
    } else {
      result.push_back(c);
    }
  }
  result.push_back(std::move(merged));
  Pattern split = Pattern::validate(pattern.period(), std::move(result));
  if (!is_strongly_collapsible(split)) throw Error(ErrorKind::VerificationFailed, "central split has positive entropy");
  return split;
}

StarMapSearch zero_entropy_star_map(const Pattern& pattern) {
  StarMapSearch result;
  const StarClass star = star_class(pattern);
  if (star.kind == StarKind::NotStar) return result;
  result.star = true;

  const int n = pattern.period();
  const bool with_centre =
      star.kind == StarKind::NonSimplicialStar || (star.kind == StarKind::TrivialStar && n >= 3);
  const auto edges = star_edges(pattern);
  const int nodes = n + (with_centre ? 1 : 0);
  std::vector<std::vector<std::pair<int, int>>> adjacency(nodes);
  for (std::size_t e = 0; e < edges.size(); ++e) {
    adjacency[edges[e].first].emplace_back(edges[e].second, static_cast<int>(e));
    adjacency[edges[e].second].emplace_back(edges[e].first, static_cast<int>(e));
  }

  // Candidate images of the centre: itself, then every point.
  std::vector<int> images{n};
  if (with_centre) {
    for (Point x = 0; x < n; ++x) images.push_back(x);
  }
  for (int image : images) {
    auto map = [&](int node) { return node == n ? image : (node + 1) % n; };
    std::vector<std::vector<std::uint8_t>> markov(edges.size(), std::vector<std::uint8_t>(edges.size(), 0));
    for (std::size_t e = 0; e < edges.size(); ++e) {
      const int a = map(edges[e].first);
      const int b = map(edges[e].second);
      if (a == b) continue;
      for (int target : edge_path(adjacency, a, b)) markov[e][target] = 1;
    }
    if (zero_growth(markov)) {
      result.zero = true;
      if (with_centre && image != n) result.centre_image = image;
      return result;
    }
  }
  return result;
}

StarClass expected_star_class(int n, int k) {
  if (k == 2) return n == 2 ? StarClass{StarKind::TrivialStar, 2} : StarClass{StarKind::IntervalPattern, 2};
  const auto c = classify_zero_case(n, k);
  if (!c) return {};
  switch (c->kind) {
    case StarZeroKind::RotationDoubling:
      return c->q == 0 ? StarClass{StarKind::TrivialStar, k} : StarClass{StarKind::NonSimplicialStar, k};
    case StarZeroKind::SimplicialChain:
      return {StarKind::SimplicialStar, k};
    case StarZeroKind::CentralSplit:
      return {StarKind::NonSimplicialStar, k};
  }
  return {};
}

Pattern star_zero_pattern(int n, int k) {
  const auto refuse = [&] {
    return Error(ErrorKind::NotRepresentable, "no zero-entropy " + std::to_string(k) + "-star pattern of period " +
                                                  std::to_string(n));
  };
  if (k == 2) {
    if (!is_power_of_two(n) || n < 2) throw refuse();
    return verified(interval_chain(n), expected_star_class(n, k), "interval pattern");
  }
  const auto c = classify_zero_case(n, k);
  if (!c) throw refuse();
  switch (c->kind) {
    case StarZeroKind::RotationDoubling:
      return bitrev_pattern(k, c->q);
    case StarZeroKind::CentralSplit:
      return verified(central_split(ee2_chain(k - 1)), expected_star_class(n, k), "central split");
    case StarZeroKind::SimplicialChain: {
      Pattern current = ee2_chain(k);
      while (current.period() < n) current = double_pattern(current, NonExpanding{});
      return verified(current, expected_star_class(n, k), "simplicial chain");
    }
  }
  throw refuse();
}

Pattern relaxed_star_zero_pattern(int n, int k) {
  if (!zero_possible_relaxed(n, k)) {
    throw Error(ErrorKind::NotRepresentable, "no zero-entropy pattern of period " + std::to_string(n) +
                                                 " on a " + std::to_string(k) + "-star");
  }
  for (int l = std::min(n, k); l >= 3; --l) {
    if (zero_possible(n, l)) return star_zero_pattern(n, l);
  }
  return n == 1 ? base_pattern(1) : star_zero_pattern(n, 2);
}

}  // namespace treetropy
