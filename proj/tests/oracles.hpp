#ifndef HFORGE_TESTS_ORACLES_HPP
#define HFORGE_TESTS_ORACLES_HPP

// Deliberately naive reference implementations used to check the library.

#include <algorithm>
#include <cstdint>
#include <numeric>
#include <set>
#include <vector>

#include <hforge/hforge.hpp>

namespace oracle
{

using Table = std::vector<unsigned>; // 1-based images, index 0 unused

inline Table table_of(hforge::Permutation const &p)
{
  Table t(p.degree() + 1u, 0u);
  for (unsigned x = 1u; x <= p.degree(); ++x)
    t[x] = p(x);
  return t;
}

// x -> b(a(x))
inline Table compose(Table const &a, Table const &b)
{
  Table res(a.size(), 0u);
  for (unsigned x = 1u; x < a.size(); ++x)
    res[x] = b[a[x]];
  return res;
}

inline Table identity(std::size_t degree)
{
  Table res(degree + 1u, 0u);
  std::iota(res.begin() + 1, res.end(), 0u + 1u);
  return res;
}

// Every element of the generated group, by closure under right
// multiplication. Only for tiny degrees.
inline std::set<Table> closure(std::vector<hforge::Permutation> const &gens)
{
  std::size_t d = gens.front().degree();
  std::vector<Table> tables;
  for (auto const &g : gens)
    tables.push_back(table_of(g));

  std::set<Table> seen{identity(d)};
  std::vector<Table> frontier{identity(d)};
  while (!frontier.empty()) {
    auto cur = frontier.back();
    frontier.pop_back();
    for (auto const &g : tables) {
      auto next = compose(cur, g);
      if (seen.insert(next).second)
        frontier.push_back(next);
    }
  }
  return seen;
}

inline std::size_t cycle_count(Table const &t)
{
  std::vector<bool> seen(t.size(), false);
  std::size_t count = 0u;
  for (unsigned x = 1u; x < t.size(); ++x) {
    if (seen[x])
      continue;
    ++count;
    for (unsigned y = x; !seen[y]; y = t[y])
      seen[y] = true;
  }
  return count;
}

inline bool transitive(std::vector<hforge::Permutation> const &gens)
{
  std::size_t d = gens.front().degree();
  std::vector<bool> reached(d + 1u, false);
  std::vector<unsigned> stack{1u};
  reached[1] = true;
  while (!stack.empty()) {
    unsigned x = stack.back();
    stack.pop_back();
    for (auto const &g : gens) {
      unsigned y = g(x);
      if (!reached[y]) {
        reached[y] = true;
        stack.push_back(y);
      }
    }
  }
  return std::all_of(reached.begin() + 1, reached.end(), [](bool b) { return b; });
}

// All set partitions of {1..d} as block labels (restricted growth strings).
inline void for_each_partition(std::size_t d, auto &&visit)
{
  std::vector<unsigned> label(d + 1u, 0u);
  auto rec = [&](auto &&self, unsigned x, unsigned blocks) -> void {
    if (x > d) {
      visit(label, blocks);
      return;
    }
    for (unsigned b = 0u; b <= blocks; ++b) {
      label[x] = b;
      self(self, x + 1u, std::max(blocks, b + 1u));
    }
  };
  rec(rec, 1u, 0u);
}

// Primitive iff transitive and no nontrivial partition is invariant.
inline bool primitive(std::vector<hforge::Permutation> const &gens)
{
  if (!transitive(gens))
    return false;
  std::size_t d = gens.front().degree();
  bool found = false;
  for_each_partition(d, [&](std::vector<unsigned> const &label, unsigned blocks) {
    if (found || blocks == 1u || blocks == d)
      return;
    bool invariant = true;
    for (auto const &g : gens) {
      for (unsigned x = 1u; x <= d && invariant; ++x) {
        for (unsigned y = x + 1u; y <= d && invariant; ++y) {
          if (label[x] == label[y] && label[g(x)] != label[g(y)])
            invariant = false;
        }
      }
    }
    found = invariant;
  });
  return !found;
}

inline std::uint64_t factorial(unsigned n)
{
  std::uint64_t res = 1u;
  for (unsigned i = 2u; i <= n; ++i)
    res *= i;
  return res;
}

// All permutations of degree d, in lexicographic image order.
inline std::vector<hforge::Permutation> symmetric_group(std::size_t d)
{
  std::vector<hforge::Point> images(d);
  std::iota(images.begin(), images.end(), 1u);
  std::vector<hforge::Permutation> res;
  do {
    res.push_back(hforge::Permutation::from_images(images));
  } while (std::next_permutation(images.begin(), images.end()));
  return res;
}

} // namespace oracle

#endif // HFORGE_TESTS_ORACLES_HPP
