#ifndef HFORGE_WREATH_HPP
#define HFORGE_WREATH_HPP

#include <cstddef>
#include <vector>

#include "hurwitz_tuple.hpp"
#include "perm_group.hpp"

namespace hforge
{

// Inner monodromy of a composite cover f = f_2 . f_1: for every entry j of
// the outer (degree-m) tuple and every outer sheet s, a degree-n permutation
// sheets[j][s - 1] describing how the n points above sheet s move.
struct WreathAssignment
{
  std::size_t inner_degree;
  std::vector<std::vector<Permutation>> sheets;
};

// Point (s, x) of the composite, s in 1..m and x in 1..n, is labelled
// (s - 1) * n + x; entry j maps (s, x) to (outer_j(s), sheets[j][s-1](x)).
// The result preserves the blocks {(s, *)} and is therefore imprimitive when
// m, n > 1. Throws std::invalid_argument if the assembled product is not the
// identity.
HurwitzTuple compose_covers(HurwitzTuple const &outer,
                            WreathAssignment const &inner);

// Overwrites the sheets of entry `forced` so that the composite product is
// the identity; requires the outer product to be the identity.
WreathAssignment complete_wreath_assignment(HurwitzTuple const &outer,
                                            WreathAssignment inner,
                                            std::size_t forced);

// The m blocks of n consecutive points.
BlockSystem wreath_blocks(std::size_t outer_degree, std::size_t inner_degree);

} // namespace hforge

#endif // HFORGE_WREATH_HPP
