#ifndef HFORGE_PERM_GROUP_HPP
#define HFORGE_PERM_GROUP_HPP

#include <cstddef>
#include <cstdint>
#include <functional>
#include <optional>
#include <span>
#include <string>
#include <vector>

#include <boost/multiprecision/cpp_int.hpp>

#include "certificate.hpp"
#include "permutation.hpp"

namespace hforge
{

using BigInt = boost::multiprecision::cpp_int;

BigInt factorial(std::size_t n);

// |A_d|, with A_1 = S_1 trivial.
BigInt alternating_order(std::size_t degree);

// A permutation group stored as a base and strong generating set, built by
// the deterministic Schreier-Sims algorithm. Immutable after construction.
class PermGroup
{
public:
  static constexpr std::size_t max_degree = 64;

  // Generators must be nonempty and share one degree <= max_degree.
  explicit PermGroup(std::vector<Permutation> generators);

  std::size_t degree() const { return _degree; }

  std::span<Permutation const> generators() const { return _generators; }

  // Base points as 1-based labels.
  std::vector<Point> base() const;

  std::vector<Permutation> strong_generators() const;

  // Lengths of the basic orbits along the stabilizer chain.
  std::vector<std::size_t> basic_orbit_lengths() const;

  BigInt const &order() const { return _order; }

  bool contains(Permutation const &perm) const;

  // Visits every group element once; stops early if `visit` returns false.
  void for_each_element(
    std::function<bool(Permutation const &)> const &visit) const;

private:
  struct Level
  {
    std::uint8_t base_point;
    std::vector<Permutation> gens;
    std::vector<std::uint8_t> orbit;
    // transversal[x] maps base_point to x, if x lies in the orbit
    std::vector<std::optional<Permutation>> transversal;
  };

  void schreier_sims();
  void append_base_point(Permutation const &moving);
  void update_orbit(Level &level) const;

  // Sifts `perm` down the chain. Returns the residue and the index of the
  // level at which sifting stopped (levels.size() if it passed all levels).
  std::pair<Permutation, std::size_t> strip(Permutation perm) const;

  bool enumerate(std::size_t level, Permutation const &acc,
                 std::function<bool(Permutation const &)> const &visit) const;

  std::size_t _degree;
  std::vector<Permutation> _generators;
  std::vector<Level> _levels;
  BigInt _order;
};

inline PermGroup group_from_generators(std::vector<Permutation> generators)
{ return PermGroup(std::move(generators)); }

// Orbits of the generators as sorted 1-based point sets, ordered by least point.
std::vector<std::vector<Point>> orbits(std::span<Permutation const> gens);

bool is_transitive(PermGroup const &group);

struct BlockSystem
{
  std::vector<std::vector<Point>> blocks;

  bool trivial() const;
};

// Finest block system in which points a and b share a block.
BlockSystem minimal_block_system(PermGroup const &group, Point a, Point b);

// First nontrivial block system among those seeded with (1, i), i = 2..d.
// Requires a transitive group.
std::optional<BlockSystem> find_block_system(PermGroup const &group);

// Requires a transitive group (throws std::invalid_argument otherwise).
bool is_primitive(PermGroup const &group);

bool is_alternating(PermGroup const &group);
bool is_symmetric(PermGroup const &group);

struct ThreeCycleSearch
{
  std::optional<Permutation> element;
  std::string strategy;
  // True iff every group element was examined, so absence is a proof.
  bool exhaustive = false;
};

struct ThreeCycleOptions
{
  std::uint64_t seed = 0x3c7c1e;
  std::size_t random_words = 1024;
  std::size_t max_word_length = 16;
  std::uint64_t exhaustive_limit = 1000000;
};

ThreeCycleSearch find_3cycle(PermGroup const &group,
                             ThreeCycleOptions const &options = {});

// "A transitive primitive subgroup of A_d containing a 3-cycle is A_d",
// cross-checked against the stabilizer chain order. Groups with odd
// generators are never certified.
Certificate lemma1_certify(PermGroup const &group);

} // namespace hforge

#endif // HFORGE_PERM_GROUP_HPP
