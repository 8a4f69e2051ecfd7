#include "treetropy/collapse.hpp"

#include <algorithm>
#include <cassert>
#include <set>

#include "treetropy/error.hpp"

namespace treetropy {

namespace {

bool inside_one_component(const Pattern& pattern, const std::vector<Point>& block) {
  return std::any_of(pattern.components().begin(), pattern.components().end(), [&](const Component& c) {
    return std::includes(c.begin(), c.end(), block.begin(), block.end());
  });
}

[[maybe_unused]] bool hulls_separated(const Pattern& pattern, const BlockStructure& structure) {
  for (int i = 0; i < structure.block_count; ++i) {
    for (Point x : hull_points(pattern, structure.blocks[i])) {
      if (structure.block_of(x) != i) return false;
    }
  }
  return true;
}

}  // namespace

BlockStructure block_structure(const Pattern& pattern, int p) {
  const int n = pattern.period();
  if (p < 2 || p >= n || n % p != 0) {
    throw Error(ErrorKind::BadRange, std::to_string(p) + " is not a proper divisor of " + std::to_string(n));
  }
  BlockStructure s;
  s.period = n;
  s.block_count = p;
  s.blocks.resize(p);
  for (Point x = 0; x < n; ++x) s.blocks[x % p].push_back(x);
  s.trivial = std::all_of(s.blocks.begin(), s.blocks.end(),
                          [&](const std::vector<Point>& block) { return inside_one_component(pattern, block); });
  return s;
}

std::vector<int> trivial_block_divisors(const Pattern& pattern) {
  std::vector<int> result;
  if (pattern.is_trivial()) return result;
  const int n = pattern.period();
  for (int p = 2; p < n; ++p) {
    if (n % p != 0) continue;
    const auto s = block_structure(pattern, p);
    if (s.trivial) {
      assert(hulls_separated(pattern, s));
      result.push_back(p);
    }
  }
  return result;
}

std::optional<BlockStructure> maximal_trivial_structure(const Pattern& pattern) {
  if (pattern.is_trivial()) return std::nullopt;
  const int n = pattern.period();
  // Classes mod a multiple of p refine those mod p, so the first hit is the
  // structure with the largest blocks.
  for (int p = 2; p < n; ++p) {
    if (n % p != 0) continue;
    auto s = block_structure(pattern, p);
    if (s.trivial) {
      s.maximal = true;
      return s;
    }
  }
  return std::nullopt;
}

std::vector<Point> hull_points(const Pattern& pattern, const std::vector<Point>& points) {
  if (points.empty()) throw Error(ErrorKind::BadRange, "hull of an empty set");
  const IncidenceTree tree(pattern);
  std::set<Point> hull;
  for (Point x : points) {
    if (x < 0 || x >= pattern.period()) throw Error(ErrorKind::OutOfRange, "point outside the pattern");
    for (Point y : tree.path(points.front(), x)) hull.insert(y);
  }
  return {hull.begin(), hull.end()};
}

Pattern combinatorial_collapse(const Pattern& pattern, const BlockStructure& structure) {
  if (structure.period != pattern.period() || !structure.trivial || !structure.maximal) {
    throw Error(ErrorKind::CollapseInvalid, "collapse needs the maximal structure of trivial blocks of this pattern");
  }
  const int p = structure.block_count;

  std::vector<Component> images;
  for (const auto& d : pattern.components()) {
    Component image;
    for (Point x : d) image.push_back(structure.block_of(x));
    std::sort(image.begin(), image.end());
    image.erase(std::unique(image.begin(), image.end()), image.end());
    if (image.size() >= 2) images.push_back(std::move(image));
  }
  std::sort(images.begin(), images.end());
  images.erase(std::unique(images.begin(), images.end()), images.end());

  std::vector<Component> kept;
  for (std::size_t i = 0; i < images.size(); ++i) {
    const bool covered = std::any_of(images.begin(), images.end(), [&](const Component& other) {
      return &other != &images[i] && other.size() > images[i].size() &&
             std::includes(other.begin(), other.end(), images[i].begin(), images[i].end());
    });
    if (!covered) kept.push_back(images[i]);
  }

  Pattern collapsed = [&] {
    try {
      return Pattern::validate(p, kept);
    } catch (const Error& e) {
      throw Error(ErrorKind::CollapseInvalid, std::string("collapsed components are not a pattern (") + e.what() + ")");
    }
  }();

  // Pairs of blocks sharing an output component must be exactly the pairs
  // met by a common source component.
  std::vector<std::vector<bool>> met(p, std::vector<bool>(p, false));
  for (const auto& image : images) {
    for (Point i : image) {
      for (Point j : image) met[i][j] = true;
    }
  }
  std::vector<std::vector<bool>> joined(p, std::vector<bool>(p, false));
  for (const auto& c : collapsed.components()) {
    for (Point i : c) {
      for (Point j : c) joined[i][j] = true;
    }
  }
  for (int i = 0; i < p; ++i) {
    for (int j = i + 1; j < p; ++j) {
      if (met[i][j] != joined[i][j]) {
        throw Error(ErrorKind::CollapseInvalid,
                    "blocks " + std::to_string(i) + " and " + std::to_string(j) + " break the pairwise rule");
      }
    }
  }
  return collapsed;
}

std::optional<CollapseCertificate> is_strongly_collapsible(const Pattern& pattern) {
  std::vector<Pattern> chain{pattern};
  std::vector<int> factors;
  while (!chain.back().is_trivial()) {
    const auto structure = maximal_trivial_structure(chain.back());
    if (!structure) return std::nullopt;
    factors.push_back(structure->block_size());
    chain.push_back(combinatorial_collapse(chain.back(), *structure));
  }
  factors.push_back(chain.back().period());

  CollapseCertificate cert;
  cert.patterns.assign(chain.rbegin(), chain.rend());
  cert.factors.assign(factors.rbegin(), factors.rend());

  std::vector<int> ks;
  for (const auto& p : cert.patterns) {
    const auto star = star_class(p);
    if (star.kind == StarKind::NotStar) break;
    ks.push_back(star.k);
  }
  if (ks.size() == cert.patterns.size()) cert.valences = std::move(ks);
  return cert;
}

bool replay_certificate(const CollapseCertificate& certificate) {
  const auto& patterns = certificate.patterns;
  const auto& factors = certificate.factors;
  if (patterns.empty() || patterns.size() != factors.size()) return false;
  if (!patterns.front().is_trivial() || patterns.front().period() != factors.front()) return false;
  int period = factors.front();
  for (std::size_t i = 1; i < patterns.size(); ++i) {
    period *= factors[i];
    const auto& current = patterns[i];
    if (current.is_trivial() || current.period() != period) return false;
    const auto structure = maximal_trivial_structure(current);
    if (!structure || structure->block_size() != factors[i] || structure->block_count != patterns[i - 1].period()) {
      return false;
    }
    if (combinatorial_collapse(current, *structure) != patterns[i - 1]) return false;
  }
  return true;
}

}  // namespace treetropy
