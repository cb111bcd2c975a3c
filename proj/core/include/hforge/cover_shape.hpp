#ifndef HFORGE_COVER_SHAPE_HPP
#define HFORGE_COVER_SHAPE_HPP

#include <cstddef>
#include <cstdint>
#include <string>
#include <vector>

#include <boost/rational.hpp>

#include "certificate.hpp"
#include "hurwitz_tuple.hpp"
#include "permutation.hpp"

namespace hforge
{

using Rational = boost::rational<std::int64_t>;

// Arithmetic data of a polar divisor D = n_1 P_1 + ... + n_k P_k (k <= 3)
// on a genus-g curve: pole orders d_i = 2 n_i - 1 and cover degree
// d = 2 deg(D) - k.
class CoverShape
{
public:
  // Multiplicities are sorted descending; each must be positive, 1 <= k <= 3.
  CoverShape(unsigned genus, std::vector<unsigned> multiplicities);

  unsigned genus() const { return _genus; }
  unsigned k() const { return static_cast<unsigned>(_mult.size()); }

  std::vector<unsigned> const &multiplicities() const { return _mult; }
  std::vector<unsigned> pole_orders() const;

  unsigned deg_D() const;
  unsigned degree() const { return 2u * deg_D() - k(); }

  std::string str() const;

  friend bool operator==(CoverShape const &, CoverShape const &) = default;

private:
  unsigned _genus;
  std::vector<unsigned> _mult;
};

nlohmann::ordered_json to_json(CoverShape const &shape);

bool is_prime(std::uint64_t n);

// k = 1: d_1 prime; k = 2, 3: gcd of all pole orders is 1.
bool is_indecomposable_triple(CoverShape const &shape);
bool is_indecomposable_triple(std::vector<unsigned> const &pole_orders);

// Feasible iff g > 0 and
//   a) d_i > 3g + k for all i,
//   b) deg(D) > 6g + 2k - 3,
//   c) the pole orders form an indecomposable triple.
// With `allow_genus_zero` the g > 0 requirement is waived (smoke mode).
Certificate check_prop4_hypotheses(CoverShape const &shape,
                                   bool allow_genus_zero = false);

// Shapes with k in {2, 3} (plus k = 1 if requested), 2 deg(D) - k = d,
// passing check_prop4_hypotheses, in descending lexicographic order of the
// multiplicities.
std::vector<CoverShape> enumerate_cover_shapes(unsigned genus, unsigned degree,
                                               bool include_k1 = false);

// deg(D) - 2g - k + 1; requires 2 n_i > 3g + k - 1 and deg(D) > 6g + 2k - 4.
int dim_H(CoverShape const &shape);

// deg(D) - 2g - k + 2; requires check_prop4_hypotheses to pass.
int dim_F_XD(CoverShape const &shape);

// floor((d + 3) / 2) - 2g + 2; requires d >= 12g + 4.
int dim_F_Xd(unsigned genus, unsigned degree);

struct BranchBound
{
  unsigned genus;
  unsigned degree;
  // (2g + 4 + d) / 4: branch points of a cover whose branch points all have
  // ramification order >= 4
  Rational branch_bound;
  std::int64_t max_branch_points;
  // (2g - 4 + d) / 4
  Rational hurwitz_scheme_bound;
  // d / 2 - 2g + 2
  Rational family_dimension;
  bool family_exceeds_scheme;
  // d > 10g - 12
  bool degree_condition;
};

BranchBound hurwitz_branch_bound(unsigned genus, unsigned degree);

nlohmann::ordered_json to_json(BranchBound const &bound);

// Number of 3-cycle entries in a simple odd tuple whose entry over infinity
// has cycle type (d_1, ..., d_k): (d + k + 2g - 2) / 2.
unsigned three_cycle_branch_count(CoverShape const &shape);

// Cycles on consecutive blocks of lengths d_1, ..., d_k, each oriented
// downward, (1 d_1 d_1-1 ... 2)(...); its inverse is the increasing block
// cycle, which the chain factorization splits into (1 2 3)(1 4 5)...
Permutation canonical_infinity_permutation(CoverShape const &shape);

// Contrapositive of the decomposability examples: the ramification indices
// over infinity certify indecomposability when they form an indecomposable
// triple. Cross-checked against primitivity of the monodromy group.
// Requires a valid tuple with an entry over infinity whose cycle type has
// at most 3 parts, all > 1 and all odd when there are 3.
Certificate decomposability_obstruction(HurwitzTuple const &t);

} // namespace hforge

#endif // HFORGE_COVER_SHAPE_HPP
