#ifndef HFORGE_PERMUTATION_HPP
#define HFORGE_PERMUTATION_HPP

#include <compare>
#include <cstddef>
#include <cstdint>
#include <initializer_list>
#include <span>
#include <string>
#include <vector>

namespace hforge
{

// Points are 1-based labels 1..d. Composition is left-to-right throughout the
// project: (p * q)(x) = q(p(x)), i.e. "apply p first, then q".
using Point = unsigned;

using Cycle = std::vector<Point>;

class Permutation
{
public:
  static constexpr std::size_t max_degree = 255;

  // Identity of the given degree.
  explicit Permutation(std::size_t degree = 1);

  // `images[i]` is the image of point i + 1 (1-based labels).
  static Permutation from_images(std::vector<Point> const &images);

  // Disjoint cycles in 1-based labels; fixed points implied.
  static Permutation from_cycles(std::size_t degree,
                                 std::vector<Cycle> const &cycles);

  static Permutation from_cycles(std::size_t degree,
                                 std::initializer_list<Cycle> cycles)
  { return from_cycles(degree, std::vector<Cycle>(cycles)); }

  static Permutation identity(std::size_t degree)
  { return Permutation(degree); }

  std::size_t degree() const { return _table.size(); }

  // Image of a 1-based point.
  Point operator()(Point x) const { return _table[x - 1u] + 1u; }

  // Zero-based image table, for inner loops.
  std::span<std::uint8_t const> table() const { return _table; }

  bool is_identity() const;
  bool is_even() const;

  Permutation inverse() const;
  Permutation pow(std::uint64_t exponent) const;

  // Least common multiple of the cycle lengths.
  std::uint64_t order() const;

  // Nontrivial cycles in normal form: each starts at its least point,
  // cycles sorted by their first point.
  std::vector<Cycle> cycles() const;

  // Cycle notation, "()" for the identity.
  std::string str() const;

  Permutation &operator*=(Permutation const &rhs);

  friend Permutation operator*(Permutation lhs, Permutation const &rhs)
  { return lhs *= rhs; }

  friend bool operator==(Permutation const &, Permutation const &) = default;
  friend std::strong_ordering operator<=>(Permutation const &lhs,
                                          Permutation const &rhs)
  { return lhs._table <=> rhs._table; }

private:
  explicit Permutation(std::vector<std::uint8_t> table)
  : _table(std::move(table))
  {}

  std::vector<std::uint8_t> _table;

  friend Permutation compose(Permutation const &, Permutation const &);
  friend Permutation conjugate(Permutation const &, Permutation const &);
};

// "apply p first, then q".
Permutation compose(Permutation const &p, Permutation const &q);

// by^{-1} * p * by, i.e. p relabelled through `by`.
Permutation conjugate(Permutation const &p, Permutation const &by);

// a^{-1} b^{-1} a b
Permutation commutator(Permutation const &a, Permutation const &b);

// Cycle lengths of a permutation (fixed points included as parts of size 1),
// sorted descending.
struct CycleType
{
  std::vector<unsigned> parts;

  std::size_t degree() const;
  std::size_t cycle_count() const { return parts.size(); }

  // Parts greater than one.
  std::vector<unsigned> nontrivial_parts() const;

  std::string str() const;

  friend bool operator==(CycleType const &, CycleType const &) = default;
};

CycleType cycle_type(Permutation const &p);

// True iff every cycle (fixed points included) has odd length.
bool is_all_odd_cycles(Permutation const &p);

bool is_three_cycle(Permutation const &p);

} // namespace hforge

#endif // HFORGE_PERMUTATION_HPP
