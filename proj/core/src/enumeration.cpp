#include "treetropy/enumeration.hpp"

#include <algorithm>
#include <bit>
#include <cstdlib>
#include <string>

#include "treetropy/collapse.hpp"
#include "treetropy/error.hpp"
#include "treetropy/explosion.hpp"
#include "treetropy/path_entropy.hpp"
#include "treetropy/star.hpp"

namespace treetropy {

namespace {

void check_period(int n, int cap) {
  if (n < 1) throw Error(ErrorKind::BadRange, "period must be positive");
  if (n > cap) {
    throw Error(ErrorKind::CapExceeded,
                "period " + std::to_string(n) + " exceeds the enumeration cap " + std::to_string(cap));
  }
}

// Candidate components of period n as bitmasks, in the lexicographic order of
// their sorted member lists.
struct MaskTable {
  int n = 0;
  std::vector<unsigned> order;
  std::vector<int> rank;  // indexed by mask, -1 for masks with < 2 members
  std::vector<int> low;   // smallest member, by position in `order`

  explicit MaskTable(int period) : n(period), rank(1u << period, -1) {
    std::vector<std::pair<Component, unsigned>> items;
    for (unsigned m = 0; m < (1u << n); ++m) {
      if (std::popcount(m) < 2) continue;
      Component members;
      for (int x = 0; x < n; ++x) {
        if (m >> x & 1u) members.push_back(x);
      }
      items.emplace_back(std::move(members), m);
    }
    std::sort(items.begin(), items.end());
    for (const auto& [members, m] : items) {
      rank[m] = static_cast<int>(order.size());
      order.push_back(m);
      low.push_back(members.front());
    }
  }

  unsigned rotate(unsigned m, int s) const {
    const unsigned all = (1u << n) - 1;
    return ((m << s) | (m >> (n - s))) & all;
  }

  bool canonical(const std::vector<int>& chosen) const {
    std::vector<int> rotated(chosen.size());
    for (int s = 1; s < n; ++s) {
      for (std::size_t i = 0; i < chosen.size(); ++i) rotated[i] = rank[rotate(order[chosen[i]], s)];
      std::sort(rotated.begin(), rotated.end());
      if (rotated < chosen) return false;
    }
    return true;
  }

  Pattern build(const std::vector<int>& chosen) const {
    std::vector<Component> comps;
    for (int r : chosen) {
      Component c;
      for (int x = 0; x < n; ++x) {
        if (order[r] >> x & 1u) c.push_back(x);
      }
      comps.push_back(std::move(c));
    }
    return Pattern::validate(n, std::move(comps));
  }
};

int find_root(std::vector<int>& parent, int x) {
  while (parent[x] != x) x = parent[x] = parent[parent[x]];
  return x;
}

// Backtracking over lexicographically increasing component lists. Acyclicity
// is kept with union-find; a list is complete once the sizes account for the
// n-1 tree edges. A point below the smallest member of the next component
// can never be covered later, so it must already be covered.
class HypertreeWalk {
 public:
  HypertreeWalk(const MaskTable& table, const std::function<bool(const std::vector<int>&)>& leaf)
      : table_(table), leaf_(leaf) {}

  void run() {
    std::vector<int> parent(table_.n);
    for (int i = 0; i < table_.n; ++i) parent[i] = i;
    step(0, table_.n - 1, 0u, parent);
  }

 private:
  bool step(int start, int edges_left, unsigned covered, const std::vector<int>& parent) {
    if (edges_left == 0) return leaf_(chosen_);
    const int first_gap = std::countr_one(covered);
    for (int r = start; r < static_cast<int>(table_.order.size()); ++r) {
      if (table_.low[r] > first_gap) break;
      const unsigned m = table_.order[r];
      const int size = std::popcount(m);
      if (size - 1 > edges_left) continue;
      std::vector<int> next = parent;
      int root = -1;
      bool acyclic = true;
      for (int x = 0; x < table_.n && acyclic; ++x) {
        if (!(m >> x & 1u)) continue;
        const int rx = find_root(next, x);
        if (root == -1) {
          root = rx;
        } else if (rx == root) {
          acyclic = false;
        } else {
          next[rx] = root;
        }
      }
      if (!acyclic) continue;
      chosen_.push_back(r);
      const bool more = step(r + 1, edges_left - (size - 1), covered | m, next);
      chosen_.pop_back();
      if (!more) return false;
    }
    return true;
  }

  const MaskTable& table_;
  const std::function<bool(const std::vector<int>&)>& leaf_;
  std::vector<int> chosen_;
};

struct StarWalk {
  int n = 0;
  int k = 0;
  int centre = -1;  // -1 for the non-simplicial family
  bool half_blocks = false;
  bool canonical_only = true;
  const std::function<bool(const Pattern&)>* visit = nullptr;

  std::vector<int> sequence;  // points in placement order
  std::vector<std::vector<int>> chains;
  std::vector<bool> placed;
  std::uint64_t generated = 0;
  bool stopped = false;

  // Chain index and position of a point, or {-1,-1}.
  std::pair<int, int> locate(int x) const {
    for (std::size_t c = 0; c < chains.size(); ++c) {
      auto it = std::find(chains[c].begin(), chains[c].end(), x);
      if (it != chains[c].end()) return {static_cast<int>(c), static_cast<int>(it - chains[c].begin())};
    }
    return {-1, -1};
  }

  // Whether x and y can still end in one component. Failures are permanent:
  // inserting points never makes two points adjacent or a point a root.
  bool pair_ok(int x, int y) const {
    if (y == centre) std::swap(x, y);
    const auto ly = locate(y);
    if (x == centre) return ly.second == 0;
    const auto lx = locate(x);
    if (lx.first == ly.first && std::abs(lx.second - ly.second) == 1) return true;
    return centre == -1 && lx.second == 0 && ly.second == 0;
  }

  bool blocks_ok() const {
    const int h = n / 2;
    for (int x = 0; x < h; ++x) {
      const bool px = x == centre || placed[x];
      const bool py = x + h == centre || placed[x + h];
      if (px && py && !pair_ok(x, x + h)) return false;
    }
    return true;
  }

  void leaf() {
    std::vector<Component> comps;
    if (centre == -1) {
      Component roots;
      for (const auto& chain : chains) roots.push_back(chain.front());
      comps.push_back(std::move(roots));
    } else {
      for (const auto& chain : chains) comps.push_back({centre, chain.front()});
    }
    for (const auto& chain : chains) {
      for (std::size_t i = 0; i + 1 < chain.size(); ++i) comps.push_back({chain[i], chain[i + 1]});
    }
    Pattern pattern = Pattern::validate(n, std::move(comps));
    ++generated;
    if (canonical_only && !is_canonical(pattern)) return;
    if (!(*visit)(pattern)) stopped = true;
  }

  void place(std::size_t index) {
    if (stopped) return;
    const int remaining = static_cast<int>(sequence.size() - index);
    if (remaining < k - static_cast<int>(chains.size())) return;
    if (half_blocks && !blocks_ok()) return;
    if (index == sequence.size()) {
      leaf();
      return;
    }
    const int x = sequence[index];
    placed[x] = true;
    for (std::size_t c = 0; c < chains.size() && !stopped; ++c) {
      for (std::size_t pos = 0; pos <= chains[c].size() && !stopped; ++pos) {
        chains[c].insert(chains[c].begin() + pos, x);
        place(index + 1);
        chains[c].erase(chains[c].begin() + pos);
      }
    }
    if (static_cast<int>(chains.size()) < k && !stopped) {
      chains.push_back({x});
      place(index + 1);
      chains.pop_back();
    }
    placed[x] = false;
  }

  void run() {
    placed.assign(n, false);
    if (centre >= 0) placed[centre] = true;
    // Partners x and x+n/2 are placed back to back so that the half-block
    // condition prunes as early as possible.
    const int h = n / 2;
    std::vector<int> order;
    if (half_blocks) {
      for (int x = 0; x < h; ++x) {
        order.push_back(x);
        order.push_back(x + h);
      }
    } else {
      for (int x = 0; x < n; ++x) order.push_back(x);
    }
    for (int x : order) {
      if (x != centre) sequence.push_back(x);
    }
    place(0);
  }
};

std::uint64_t binomial(int n, int r) {
  if (r < 0 || r > n) return 0;
  std::uint64_t result = 1;
  for (int i = 1; i <= r; ++i) result = result * static_cast<std::uint64_t>(n - r + i) / static_cast<std::uint64_t>(i);
  return result;
}

std::uint64_t falling(int n, int count) {
  std::uint64_t result = 1;
  for (int i = 0; i < count; ++i) result *= static_cast<std::uint64_t>(n - i);
  return result;
}

}  // namespace

int enumeration_cap() {
  if (const char* env = std::getenv("TREETROPY_MAX_PERIOD")) {
    try {
      const int value = std::stoi(env);
      if (value >= 1) return std::min(value, kHardMaxPeriod);
    } catch (const std::exception&) {
    }
  }
  return kDefaultMaxPeriod;
}

bool is_canonical(const Pattern& pattern) {
  const int n = pattern.period();
  const auto& comps = pattern.components();
  std::vector<Component> rotated(comps.size());
  for (int s = 1; s < n; ++s) {
    for (std::size_t i = 0; i < comps.size(); ++i) {
      rotated[i].resize(comps[i].size());
      std::transform(comps[i].begin(), comps[i].end(), rotated[i].begin(), [&](Point x) { return (x + s) % n; });
      std::sort(rotated[i].begin(), rotated[i].end());
    }
    std::sort(rotated.begin(), rotated.end());
    if (rotated < comps) return false;
  }
  return true;
}

void for_each_pattern(int n, bool canonical_only, const std::function<bool(const Pattern&)>& visit) {
  check_period(n, enumeration_cap());
  if (n == 1) {
    visit(base_pattern(1));
    return;
  }
  const MaskTable table(n);
  const std::function<bool(const std::vector<int>&)> leaf = [&](const std::vector<int>& chosen) {
    if (canonical_only && !table.canonical(chosen)) return true;
    return visit(table.build(chosen));
  };
  HypertreeWalk(table, leaf).run();
}

std::vector<Pattern> enumerate_patterns(int n) {
  std::vector<Pattern> result;
  for_each_pattern(n, true, [&](const Pattern& p) {
    result.push_back(p);
    return true;
  });
  return result;
}

std::uint64_t count_labeled_patterns(int n) {
  check_period(n, enumeration_cap());
  if (n == 1) return 1;
  const MaskTable table(n);
  std::uint64_t count = 0;
  const std::function<bool(const std::vector<int>&)> leaf = [&](const std::vector<int>&) {
    ++count;
    return true;
  };
  HypertreeWalk(table, leaf).run();
  return count;
}

std::uint64_t lah_number(int n, int k) {
  if (n == 0 && k == 0) return 1;
  if (k < 1 || k > n) return 0;
  // C(n-1, k-1) * n! / k!
  return binomial(n - 1, k - 1) * falling(n, n - k);
}

std::uint64_t star_labeled_count(int n, int k, const StarSearch& search) {
  std::uint64_t total = 0;
  if (search.non_simplicial) total += lah_number(n, k);
  if (search.simplicial && n >= 1) total += static_cast<std::uint64_t>(n) * lah_number(n - 1, k);
  return total;
}

std::uint64_t for_each_star_pattern(int n, int k, const StarSearch& search,
                                    const std::function<bool(const Pattern&)>& visit) {
  if (k < 3 || n < k) throw Error(ErrorKind::BadRange, "star enumeration needs n >= k >= 3");
  check_period(n, kHardMaxPeriod);
  if (search.half_blocks && n % 2 != 0) return 0;

  std::uint64_t generated = 0;
  auto walk = [&](int centre) {
    StarWalk w;
    w.n = n;
    w.k = k;
    w.centre = centre;
    w.half_blocks = search.half_blocks;
    w.canonical_only = search.canonical_only;
    w.visit = &visit;
    w.run();
    generated += w.generated;
    return !w.stopped;
  };
  if (search.non_simplicial && !walk(-1)) return generated;
  if (search.simplicial) {
    for (int c = 0; c < n; ++c) {
      if (!walk(c)) break;
    }
  }
  return generated;
}

std::vector<Pattern> enumerate_star_patterns(int n, int k, const StarSearch& search) {
  std::vector<Pattern> result;
  for_each_star_pattern(n, k, search, [&](const Pattern& p) {
    result.push_back(p);
    return true;
  });
  return result;
}

EnumerationReport cross_validate(int n) {
  EnumerationReport report;
  report.period = n;
  report.labeled = count_labeled_patterns(n);
  for_each_pattern(n, true, [&](const Pattern& p) {
    ++report.classes;
    const bool collapsible = is_strongly_collapsible(p).has_value();
    if (collapsible) ++report.zero_classes;
    if (collapsible != is_zero_entropy_spectral(p)) report.disagreements.push_back(p);
    return true;
  });
  return report;
}

EnumerationReport cross_validate_stars(int n, int k) {
  EnumerationReport report;
  report.period = n;
  report.star_k = k;
  report.labeled = for_each_star_pattern(n, k, {}, [&](const Pattern& p) {
    ++report.classes;
    const bool collapsible = is_strongly_collapsible(p).has_value();
    if (collapsible) ++report.zero_classes;
    if (collapsible != is_zero_entropy_spectral(p)) report.disagreements.push_back(p);
    return true;
  });
  return report;
}

std::string to_string(SearchMode mode) {
  switch (mode) {
    case SearchMode::Exhaustive:
      return "exhaustive";
    case SearchMode::HalfBlockFiber:
      return "half-block fiber";
    case SearchMode::OddPeriod:
      return "odd period";
  }
  return "?";
}

ZeroStarRow search_zero_star(int n, int k) {
  ZeroStarRow row;
  row.n = n;
  row.k = k;
  row.predicted = zero_possible(n, k);
  row.relaxed = zero_possible_relaxed(n, k);

  StarSearch search;
  if (star_labeled_count(n, k, search) <= kExhaustiveStarBudget) {
    row.mode = SearchMode::Exhaustive;
  } else if (n % 2 != 0) {
    // A nontrivial zero-entropy star pattern collapses over blocks of two
    // points, which needs an even period.
    row.mode = SearchMode::OddPeriod;
  } else {
    row.mode = SearchMode::HalfBlockFiber;
    search.half_blocks = true;
  }

  if (row.mode != SearchMode::OddPeriod) {
    row.examined = for_each_star_pattern(n, k, search, [&](const Pattern& p) {
      const bool collapsible = is_strongly_collapsible(p).has_value();
      if (collapsible != is_zero_entropy_spectral(p)) row.deciders_agree = false;
      if (!collapsible) return true;
      row.pattern_zero = true;
      if (!zero_entropy_star_map(p).zero) return true;
      row.found = true;
      row.witness = p;
      return false;
    });
  }

  if (row.predicted) {
    try {
      const Pattern built = star_zero_pattern(n, k);
      row.constructor_ok = built.period() == n && star_class(built) == expected_star_class(n, k) &&
                           is_strongly_collapsible(built).has_value() && is_zero_entropy_spectral(built) &&
                           zero_entropy_star_map(built).zero;
    } catch (const Error&) {
      row.constructor_ok = false;
    }
  }
  return row;
}

std::vector<ZeroStarRow> verify_zero_star_table(int n_max, int k_max) {
  std::vector<ZeroStarRow> rows;
  for (int k = 3; k <= k_max; ++k) {
    for (int n = k; n <= n_max; ++n) rows.push_back(search_zero_star(n, k));
  }
  return rows;
}

}  // namespace treetropy
