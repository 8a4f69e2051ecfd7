#include "treetropy/pattern.hpp"

#include <algorithm>
#include <numeric>
#include <queue>
#include <sstream>

#include "treetropy/error.hpp"

namespace treetropy {

namespace {

class DisjointSets {
 public:
  explicit DisjointSets(int size) : parent_(size) { std::iota(parent_.begin(), parent_.end(), 0); }

  int find(int x) {
    while (parent_[x] != x) {
      parent_[x] = parent_[parent_[x]];
      x = parent_[x];
    }
    return x;
  }

  // Returns false when a and b were already joined.
  bool unite(int a, int b) {
    a = find(a);
    b = find(b);
    if (a == b) return false;
    parent_[b] = a;
    return true;
  }

 private:
  std::vector<int> parent_;
};

std::string describe(const Component& c) {
  std::ostringstream out;
  out << '{';
  for (std::size_t i = 0; i < c.size(); ++i) out << (i ? "," : "") << c[i];
  out << '}';
  return out.str();
}

std::size_t intersection_size(const Component& a, const Component& b) {
  std::size_t count = 0;
  auto i = a.begin();
  auto j = b.begin();
  while (i != a.end() && j != b.end()) {
    if (*i < *j) {
      ++i;
    } else if (*j < *i) {
      ++j;
    } else {
      ++count;
      ++i;
      ++j;
    }
  }
  return count;
}

}  // namespace

Pattern Pattern::validate(int period, std::vector<Component> components) {
  if (period < 1) throw Error(ErrorKind::OutOfRange, "period must be positive, got " + std::to_string(period));

  for (auto& c : components) {
    for (Point x : c) {
      if (x < 0 || x >= period) {
        throw Error(ErrorKind::OutOfRange,
                    "point " + std::to_string(x) + " outside 0.." + std::to_string(period - 1));
      }
    }
    std::sort(c.begin(), c.end());
    c.erase(std::unique(c.begin(), c.end()), c.end());
    if (c.empty()) throw Error(ErrorKind::EmptyComponent, "component has no points");
    if (c.size() == 1 && period >= 2) {
      throw Error(ErrorKind::SingletonComponent, "component " + describe(c) + " has a single point");
    }
  }
  std::sort(components.begin(), components.end());
  components.erase(std::unique(components.begin(), components.end()), components.end());

  for (std::size_t i = 0; i < components.size(); ++i) {
    for (std::size_t j = 0; j < components.size(); ++j) {
      if (i == j) continue;
      const auto& a = components[i];
      const auto& b = components[j];
      if (std::includes(b.begin(), b.end(), a.begin(), a.end())) {
        throw Error(ErrorKind::NonMaximal, describe(a) + " is contained in " + describe(b));
      }
      if (i < j && intersection_size(a, b) >= 2) {
        throw Error(ErrorKind::OverlapTooLarge, describe(a) + " and " + describe(b) + " share two or more points");
      }
    }
  }

  const int m = static_cast<int>(components.size());
  DisjointSets sets(period + m);
  for (int c = 0; c < m; ++c) {
    for (Point x : components[c]) {
      if (!sets.unite(period + c, x)) {
        throw Error(ErrorKind::Cyclic, "components close a cycle at " + describe(components[c]));
      }
    }
  }
  const int root = sets.find(0);
  for (int node = 1; node < period + m; ++node) {
    if (sets.find(node) != root) {
      std::string what = node < period ? "point " + std::to_string(node) : "component " + describe(components[node - period]);
      throw Error(ErrorKind::NotConnected, what + " is not connected to point 0");
    }
  }
  return Pattern(period, std::move(components));
}

Pattern rotate(const Pattern& pattern, int shift) {
  const int n = pattern.period();
  const int s = ((shift % n) + n) % n;
  std::vector<Component> moved = pattern.components();
  for (auto& c : moved) {
    for (auto& x : c) x = (x + s) % n;
  }
  return Pattern::validate(n, std::move(moved));
}

Pattern canonical_form(const Pattern& pattern) {
  Pattern best = pattern;
  for (int s = 1; s < pattern.period(); ++s) {
    Pattern candidate = rotate(pattern, s);
    if (candidate.components() < best.components()) best = std::move(candidate);
  }
  return best;
}

bool equivalent(const Pattern& a, const Pattern& b) {
  if (a.period() != b.period() || a.component_count() != b.component_count()) return false;
  return canonical_form(a) == canonical_form(b);
}

IncidenceTree::IncidenceTree(const Pattern& pattern) : point_count_(pattern.period()) {
  const auto& comps = pattern.components();
  const int nodes = point_count_ + static_cast<int>(comps.size());
  adjacency_.resize(nodes);
  for (std::size_t c = 0; c < comps.size(); ++c) {
    const int hub = point_count_ + static_cast<int>(c);
    for (Point x : comps[c]) {
      adjacency_[hub].push_back(x);
      adjacency_[x].push_back(hub);
    }
  }
  parent_.assign(nodes, -1);
  depth_.assign(nodes, 0);
  std::vector<bool> seen(nodes, false);
  std::queue<int> frontier;
  frontier.push(0);
  seen[0] = true;
  while (!frontier.empty()) {
    const int u = frontier.front();
    frontier.pop();
    for (int v : adjacency_[u]) {
      if (seen[v]) continue;
      seen[v] = true;
      parent_[v] = u;
      depth_[v] = depth_[u] + 1;
      frontier.push(v);
    }
  }
}

int IncidenceTree::edge_count() const noexcept {
  std::size_t degree_sum = 0;
  for (const auto& a : adjacency_) degree_sum += a.size();
  return static_cast<int>(degree_sum / 2);
}

std::vector<Point> IncidenceTree::path(Point a, Point b) const {
  std::vector<int> front;
  std::vector<int> back;
  int u = a;
  int v = b;
  while (depth_[u] > depth_[v]) {
    front.push_back(u);
    u = parent_[u];
  }
  while (depth_[v] > depth_[u]) {
    back.push_back(v);
    v = parent_[v];
  }
  while (u != v) {
    front.push_back(u);
    back.push_back(v);
    u = parent_[u];
    v = parent_[v];
  }
  front.push_back(u);
  front.insert(front.end(), back.rbegin(), back.rend());

  std::vector<Point> points;
  for (int node : front) {
    if (!is_hub(node)) points.push_back(node);
  }
  return points;
}

std::vector<Point> tree_path(const Pattern& pattern, Point a, Point b) {
  const int n = pattern.period();
  if (a < 0 || a >= n || b < 0 || b >= n) throw Error(ErrorKind::OutOfRange, "path endpoint outside the pattern");
  return IncidenceTree(pattern).path(a, b);
}

std::vector<int> valences(const Pattern& pattern) {
  std::vector<int> counts(pattern.period(), 0);
  for (const auto& c : pattern.components()) {
    for (Point x : c) ++counts[x];
  }
  return counts;
}

int valence(const Pattern& pattern, Point point) {
  if (point < 0 || point >= pattern.period()) throw Error(ErrorKind::OutOfRange, "point outside the pattern");
  return valences(pattern)[point];
}

std::vector<Point> endpoints(const Pattern& pattern) {
  const auto counts = valences(pattern);
  std::vector<Point> result;
  for (Point x = 0; x < pattern.period(); ++x) {
    if (counts[x] == 1) result.push_back(x);
  }
  return result;
}

StarClass star_class(const Pattern& pattern) {
  const auto& comps = pattern.components();
  const int ends = static_cast<int>(endpoints(pattern).size());
  if (comps.size() == 1) return {StarKind::TrivialStar, pattern.period()};

  const auto counts = valences(pattern);
  const int max_valence = *std::max_element(counts.begin(), counts.end());
  const auto branching = std::count_if(counts.begin(), counts.end(), [](int v) { return v >= 3; });
  const auto big = std::count_if(comps.begin(), comps.end(), [](const Component& c) { return c.size() > 2; });

  if (big == 0) {
    if (max_valence <= 2) return {StarKind::IntervalPattern, ends};
    if (branching == 1) return {StarKind::SimplicialStar, ends};
    return {StarKind::NotStar, 0};
  }
  if (big == 1 && max_valence <= 2) return {StarKind::NonSimplicialStar, ends};
  return {StarKind::NotStar, 0};
}

std::string to_string(StarKind kind) {
  switch (kind) {
    case StarKind::TrivialStar: return "TrivialStar";
    case StarKind::IntervalPattern: return "IntervalPattern";
    case StarKind::SimplicialStar: return "SimplicialStar";
    case StarKind::NonSimplicialStar: return "NonSimplicialStar";
    case StarKind::NotStar: return "NotStar";
  }
  return "NotStar";
}

std::string to_string(const StarClass& star) {
  switch (star.kind) {
    case StarKind::IntervalPattern:
    case StarKind::NotStar:
      return to_string(star.kind);
    default:
      return to_string(star.kind) + "(" + std::to_string(star.k) + ")";
  }
}

}  // namespace treetropy
