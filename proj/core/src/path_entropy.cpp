#include "treetropy/path_entropy.hpp"

#include <algorithm>
#include <cmath>
#include <sstream>

#include "treetropy/error.hpp"

namespace treetropy {

std::string to_string(const BasicPath& path) {
  return std::to_string(path.first) + "-" + std::to_string(path.second);
}

int PathMatrix::index_of(const BasicPath& path) const {
  auto it = std::lower_bound(paths.begin(), paths.end(), path);
  if (it == paths.end() || *it != path) return -1;
  return static_cast<int>(it - paths.begin());
}

std::vector<BasicPath> basic_paths(const Pattern& pattern) {
  std::vector<BasicPath> result;
  for (const auto& c : pattern.components()) {
    for (std::size_t i = 0; i < c.size(); ++i) {
      for (std::size_t j = i + 1; j < c.size(); ++j) result.emplace_back(c[i], c[j]);
    }
  }
  std::sort(result.begin(), result.end());
  result.erase(std::unique(result.begin(), result.end()), result.end());
  return result;
}

bool covers(const Pattern& pattern, const IncidenceTree& tree, const BasicPath& source, const BasicPath& target) {
  const int n = pattern.period();
  const auto image = tree.path((source.first + 1) % n, (source.second + 1) % n);
  auto on_image = [&](Point x) { return std::find(image.begin(), image.end(), x) != image.end(); };
  return on_image(target.first) && on_image(target.second);
}

bool covers(const Pattern& pattern, const BasicPath& source, const BasicPath& target) {
  return covers(pattern, IncidenceTree(pattern), source, target);
}

PathMatrix path_matrix(const Pattern& pattern) {
  PathMatrix matrix;
  matrix.paths = basic_paths(pattern);
  const std::size_t size = matrix.paths.size();
  matrix.adjacency.assign(size, std::vector<std::uint8_t>(size, 0));

  // Inside a tree the basic paths contained in [u,v] are exactly the pairs of
  // consecutive points along the point sequence of that path.
  const IncidenceTree tree(pattern);
  const int n = pattern.period();
  for (std::size_t i = 0; i < size; ++i) {
    const auto& source = matrix.paths[i];
    const auto image = tree.path((source.first + 1) % n, (source.second + 1) % n);
    for (std::size_t s = 0; s + 1 < image.size(); ++s) {
      const int j = matrix.index_of(BasicPath(image[s], image[s + 1]));
      if (j < 0) throw std::logic_error("covering target is not a basic path");
      matrix.adjacency[i][j] = 1;
    }
  }
  return matrix;
}

std::vector<std::vector<int>> strongly_connected_components(const std::vector<std::vector<std::uint8_t>>& adjacency) {
  const int size = static_cast<int>(adjacency.size());
  std::vector<int> index(size, -1);
  std::vector<int> low(size, 0);
  std::vector<bool> on_stack(size, false);
  std::vector<int> stack;
  std::vector<std::vector<int>> components;
  int counter = 0;

  // Explicit DFS stack of (vertex, next successor to inspect).
  std::vector<std::pair<int, int>> work;
  for (int root = 0; root < size; ++root) {
    if (index[root] != -1) continue;
    work.emplace_back(root, 0);
    index[root] = low[root] = counter++;
    stack.push_back(root);
    on_stack[root] = true;
    while (!work.empty()) {
      auto& [v, next] = work.back();
      if (next < size) {
        const int w = next++;
        if (!adjacency[v][w]) continue;
        if (index[w] == -1) {
          index[w] = low[w] = counter++;
          stack.push_back(w);
          on_stack[w] = true;
          work.emplace_back(w, 0);
        } else if (on_stack[w]) {
          low[v] = std::min(low[v], index[w]);
        }
        continue;
      }
      const int finished = v;
      work.pop_back();
      if (!work.empty()) {
        const int parent = work.back().first;
        low[parent] = std::min(low[parent], low[finished]);
      }
      if (low[finished] == index[finished]) {
        std::vector<int> component;
        int w = -1;
        do {
          w = stack.back();
          stack.pop_back();
          on_stack[w] = false;
          component.push_back(w);
        } while (w != finished);
        std::sort(component.begin(), component.end());
        components.push_back(std::move(component));
      }
    }
  }
  return components;
}

namespace {

double block_radius(const std::vector<std::vector<std::uint8_t>>& adjacency, const std::vector<int>& block,
                    const SpectralOptions& options) {
  const std::size_t size = block.size();
  if (size == 1) return adjacency[block[0]][block[0]] ? 1.0 : 0.0;

  std::vector<double> x(size, 1.0);
  std::vector<double> y(size, 0.0);
  for (int iteration = 0; iteration < options.max_iterations; ++iteration) {
    double lo = INFINITY;
    double hi = 0.0;
    double top = 0.0;
    for (std::size_t i = 0; i < size; ++i) {
      double sum = x[i];
      for (std::size_t j = 0; j < size; ++j) {
        if (adjacency[block[i]][block[j]]) sum += x[j];
      }
      y[i] = sum;
      const double ratio = sum / x[i];
      lo = std::min(lo, ratio);
      hi = std::max(hi, ratio);
      top = std::max(top, sum);
    }
    if (hi - lo <= options.tolerance) return 0.5 * (lo + hi) - 1.0;
    for (std::size_t i = 0; i < size; ++i) x[i] = y[i] / top;
  }
  throw Error(ErrorKind::NonConvergence,
              "power iteration did not reach tolerance within " + std::to_string(options.max_iterations) + " steps");
}

}  // namespace

double spectral_radius(const std::vector<std::vector<std::uint8_t>>& adjacency, SpectralOptions options) {
  if (!(options.tolerance > 0.0)) throw Error(ErrorKind::BadRange, "tolerance must be positive");
  double radius = 0.0;
  for (const auto& block : strongly_connected_components(adjacency)) {
    radius = std::max(radius, block_radius(adjacency, block, options));
  }
  return radius;
}

double spectral_radius(const PathMatrix& matrix, SpectralOptions options) {
  return spectral_radius(matrix.adjacency, options);
}

double entropy(const Pattern& pattern, SpectralOptions options) {
  const double rho = spectral_radius(path_matrix(pattern), options);
  return rho > 1.0 ? std::log(rho) : 0.0;
}

std::optional<GrowthWitness> growth_witness(const PathMatrix& matrix) {
  const auto& adj = matrix.adjacency;
  for (const auto& block : strongly_connected_components(adj)) {
    for (int v : block) {
      std::vector<BasicPath> inside;
      for (int w : block) {
        if (adj[v][w]) inside.push_back(matrix.paths[w]);
      }
      if (inside.size() >= 2) {
        GrowthWitness witness{matrix.paths[v], std::move(inside), {}};
        for (int w : block) witness.component.push_back(matrix.paths[w]);
        return witness;
      }
    }
  }
  return std::nullopt;
}

bool is_zero_entropy_spectral(const PathMatrix& matrix) { return !growth_witness(matrix).has_value(); }

bool is_zero_entropy_spectral(const Pattern& pattern) { return is_zero_entropy_spectral(path_matrix(pattern)); }

Pattern opening(const Pattern& pattern, const Component& a, const Component& b) {
  Component sa = a;
  Component sb = b;
  std::sort(sa.begin(), sa.end());
  std::sort(sb.begin(), sb.end());
  const auto& comps = pattern.components();
  auto ia = std::find(comps.begin(), comps.end(), sa);
  auto ib = std::find(comps.begin(), comps.end(), sb);
  if (ia == comps.end() || ib == comps.end() || ia == ib) {
    throw Error(ErrorKind::NotAdjacent, "opening needs two distinct components of the pattern");
  }
  Component shared;
  std::set_intersection(sa.begin(), sa.end(), sb.begin(), sb.end(), std::back_inserter(shared));
  if (shared.size() != 1) throw Error(ErrorKind::NotAdjacent, "components do not meet at exactly one point");

  std::vector<Component> result;
  for (auto it = comps.begin(); it != comps.end(); ++it) {
    if (it != ia && it != ib) result.push_back(*it);
  }
  Component joined;
  std::set_union(sa.begin(), sa.end(), sb.begin(), sb.end(), std::back_inserter(joined));
  result.push_back(std::move(joined));
  return Pattern::validate(pattern.period(), std::move(result));
}

std::string to_dot(const PathMatrix& matrix) {
  std::ostringstream out;
  out << "digraph paths {\n";
  for (const auto& p : matrix.paths) out << "  \"" << to_string(p) << "\";\n";
  for (std::size_t i = 0; i < matrix.size(); ++i) {
    for (std::size_t j = 0; j < matrix.size(); ++j) {
      if (matrix.edge(i, j)) {
        out << "  \"" << to_string(matrix.paths[i]) << "\" -> \"" << to_string(matrix.paths[j]) << "\";\n";
      }
    }
  }
  out << "}\n";
  return out.str();
}

std::string to_csv(const PathMatrix& matrix) {
  std::ostringstream out;
  out << "path";
  for (const auto& p : matrix.paths) out << ',' << to_string(p);
  out << '\n';
  for (std::size_t i = 0; i < matrix.size(); ++i) {
    out << to_string(matrix.paths[i]);
    for (std::size_t j = 0; j < matrix.size(); ++j) out << ',' << int(matrix.adjacency[i][j]);
    out << '\n';
  }
  return out.str();
}

}  // namespace treetropy
