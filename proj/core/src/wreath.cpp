#include <stdexcept>
#include <string>

#include "hforge/errors.hpp"
#include "hforge/wreath.hpp"

namespace hforge
{

namespace
{

void check_shape(HurwitzTuple const &outer, WreathAssignment const &inner)
{
  if (inner.sheets.size() != outer.size())
    throw std::invalid_argument("wreath assignment has " +
                                std::to_string(inner.sheets.size()) +
                                " entries, outer tuple has " +
                                std::to_string(outer.size()));

  for (auto const &entry : inner.sheets) {
    if (entry.size() != outer.degree())
      throw std::invalid_argument("wreath assignment needs one inner "
                                  "permutation per outer sheet");
    for (auto const &perm : entry) {
      if (perm.degree() != inner.inner_degree)
        throw DegreeMismatch(inner.inner_degree, perm.degree());
    }
  }
}

} // namespace

HurwitzTuple compose_covers(HurwitzTuple const &outer,
                            WreathAssignment const &inner)
{
  check_shape(outer, inner);

  std::size_t m = outer.degree();
  std::size_t n = inner.inner_degree;

  std::vector<Permutation> entries;
  for (std::size_t j = 0u; j < outer.size(); ++j) {
    std::vector<Point> images(m * n);
    for (Point s = 1u; s <= m; ++s) {
      Point t = outer[j](s);
      auto const &rho = inner.sheets[j][s - 1u];
      for (Point x = 1u; x <= n; ++x)
        images[(s - 1u) * n + x - 1u] = (t - 1u) * n + rho(x);
    }
    entries.push_back(Permutation::from_images(images));
  }

  HurwitzTuple res(m * n, std::move(entries), outer.infinity_index());
  if (!res.product().is_identity())
    throw std::invalid_argument(
      "incompatible wreath assignment: composite product is not the identity");
  return res;
}

WreathAssignment complete_wreath_assignment(HurwitzTuple const &outer,
                                            WreathAssignment inner,
                                            std::size_t forced)
{
  check_shape(outer, inner);
  if (forced >= outer.size())
    throw std::out_of_range("forced entry out of range");
  if (!outer.product().is_identity())
    throw std::invalid_argument("outer tuple product is not the identity");

  std::size_t n = inner.inner_degree;
  std::vector<Permutation> forced_sheets(outer.degree(), Permutation(n));

  for (Point s = 1u; s <= outer.degree(); ++s) {
    // Follow sheet s through all entries: prefix * rho_forced * suffix = id.
    Permutation prefix(n), suffix(n);
    Point sheet = s, forced_sheet = 0u;
    for (std::size_t j = 0u; j < outer.size(); ++j) {
      if (j < forced)
        prefix *= inner.sheets[j][sheet - 1u];
      else if (j > forced)
        suffix *= inner.sheets[j][sheet - 1u];
      else
        forced_sheet = sheet;
      sheet = outer[j](sheet);
    }
    forced_sheets[forced_sheet - 1u] = prefix.inverse() * suffix.inverse();
  }

  inner.sheets[forced] = std::move(forced_sheets);
  return inner;
}

BlockSystem wreath_blocks(std::size_t outer_degree, std::size_t inner_degree)
{
  BlockSystem res;
  for (std::size_t s = 0u; s < outer_degree; ++s) {
    std::vector<Point> block;
    for (std::size_t x = 1u; x <= inner_degree; ++x)
      block.push_back(static_cast<Point>(s * inner_degree + x));
    res.blocks.push_back(std::move(block));
  }
  return res;
}

} // namespace hforge
