#ifndef HFORGE_HURWITZ_TUPLE_HPP
#define HFORGE_HURWITZ_TUPLE_HPP

#include <cstddef>
#include <optional>
#include <span>
#include <vector>

#include "certificate.hpp"
#include "perm_group.hpp"
#include "permutation.hpp"

namespace hforge
{

// Branch cycle description (sigma_1, ..., sigma_r) of a degree-d cover of
// the projective line. A valid tuple has left-to-right product equal to the
// identity, generates a transitive group and has no identity entry; the
// class itself only enforces a common degree, `validate` reports the rest.
class HurwitzTuple
{
public:
  HurwitzTuple(std::size_t degree, std::vector<Permutation> entries,
               std::optional<std::size_t> infinity_index = std::nullopt);

  std::size_t degree() const { return _degree; }
  std::size_t size() const { return _entries.size(); }

  std::span<Permutation const> entries() const { return _entries; }
  Permutation const &operator[](std::size_t i) const { return _entries[i]; }

  // Zero-based position of the entry over infinity, if designated.
  std::optional<std::size_t> infinity_index() const { return _infinity; }

  Permutation const &infinity_entry() const;

  Permutation product() const;

  // Equality ignores infinity_index.
  friend bool operator==(HurwitzTuple const &lhs, HurwitzTuple const &rhs)
  { return lhs._degree == rhs._degree && lhs._entries == rhs._entries; }

private:
  std::size_t _degree;
  std::vector<Permutation> _entries;
  std::optional<std::size_t> _infinity;
};

// Checks each invariant separately; a valid tuple also reports genus and
// monodromy group order in the evidence.
Certificate validate(HurwitzTuple const &t);

// sum over entries of (d - #cycles); the Riemann-Hurwitz ramification total
std::size_t ramification_total(HurwitzTuple const &t);

// g = 1 + (sum_i (d - c(sigma_i)) - 2d) / 2. Throws GenusError on an odd
// total or a negative result.
std::size_t genus(HurwitzTuple const &t);

PermGroup monodromy_group(HurwitzTuple const &t);

// Every entry has only odd cycles, i.e. odd ramification covering data.
bool is_even_tuple(HurwitzTuple const &t);

// (.., s_i, s_{i+1}, ..) -> (.., s_{i+1}, s_{i+1}^{-1} s_i s_{i+1}, ..),
// zero-based i with i + 1 < size(). The entry over infinity follows its
// permutation's new position.
HurwitzTuple braid_move(HurwitzTuple const &t, std::size_t i);

// Inverse of braid_move at the same position.
HurwitzTuple braid_move_inverse(HurwitzTuple const &t, std::size_t i);

// Simultaneous conjugation by c: every entry becomes c^{-1} s c.
HurwitzTuple conjugate(HurwitzTuple const &t, Permutation const &by);

struct NormalForm
{
  HurwitzTuple tuple;
  // True iff `tuple` is the lexicographically least simultaneous conjugate.
  bool exact;
};

inline constexpr std::size_t exhaustive_normalize_max_degree = 9;

// Exhaustive over S_d for d <= 9. Beyond that a canonical relabelling
// (least breadth-first relabelling over all start points) which is a
// conjugacy invariant but not necessarily the least conjugate.
NormalForm normalize(HurwitzTuple const &t);

// Conjugating permutation c with conjugate(lhs, c) == rhs, if any.
std::optional<Permutation> find_conjugator(HurwitzTuple const &lhs,
                                           HurwitzTuple const &rhs);

// Throws DegreeMismatch on unequal degrees.
bool equivalent(HurwitzTuple const &lhs, HurwitzTuple const &rhs);

} // namespace hforge

#endif // HFORGE_HURWITZ_TUPLE_HPP
