#ifndef HFORGE_DEGENERATION_HPP
#define HFORGE_DEGENERATION_HPP

#include <cstddef>
#include <optional>
#include <vector>

#include "hurwitz_tuple.hpp"
#include "permutation.hpp"

namespace hforge
{

// Shared-anchor chain (p1 p2 p3), (p1 p4 p5), ..., (p1 p_{m-1} p_m):
// (m - 1) / 2 three-cycles whose left-to-right product is the m-cycle
// (p1 p2 ... pm). `degree` is the ambient degree of the returned cycles.
// Throws std::invalid_argument for even or undersized m, or repeated points.
std::vector<Permutation> odd_cycle_factorization(std::size_t degree,
                                                 Cycle const &support);

// The factors together with the inverse m-cycle, relabelled onto 1..m,
// form a valid genus-0 tuple (the local cover totally ramified at one point
// with every other ramification point of index 3).
bool factorization_is_genus0(Cycle const &support,
                             std::vector<Permutation> const &factors);

// How one entry is split into 3-cycles.
struct RefinementPlan
{
  std::size_t target_entry;
  // one factor chain per cycle of length >= 3, in normal cycle order
  std::vector<Cycle> cycles;
  std::vector<std::vector<Permutation>> per_cycle_factors;
  // all factors, concatenated cycle by cycle
  std::vector<Permutation> splice_order;
};

// Requires the entry to have only odd cycles and at least one of length
// >= 3; an entry that is already a single 3-cycle is rejected.
RefinementPlan plan_refinement(HurwitzTuple const &t, std::size_t entry);

struct Provenance
{
  std::size_t original_entry;
  // unset for entries copied unchanged
  std::optional<std::size_t> cycle;
  std::optional<std::size_t> factor;
};

struct Refinement
{
  HurwitzTuple tuple;
  // provenance[i] describes entry i of `tuple`
  std::vector<Provenance> provenance;
};

// Replaces entry `idx` by its factor chains. Requires a valid even tuple.
Refinement refine_branch_point(HurwitzTuple const &t, std::size_t idx);

// Splits every entry that is not a single 3-cycle.
Refinement refine_to_simple(HurwitzTuple const &t);

// As refine_to_simple but leaves entry `keep` untouched.
Refinement refine_all_but(HurwitzTuple const &t, std::size_t keep);

// Every entry of `original` lies in the group generated by `refined`.
bool monodromy_containment(HurwitzTuple const &original,
                           HurwitzTuple const &refined);

bool is_simple_tuple(HurwitzTuple const &t);

} // namespace hforge

#endif // HFORGE_DEGENERATION_HPP
