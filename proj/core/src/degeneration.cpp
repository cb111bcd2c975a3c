#include <algorithm>
#include <stdexcept>
#include <string>

#include "hforge/degeneration.hpp"
#include "hforge/errors.hpp"

namespace hforge
{

std::vector<Permutation> odd_cycle_factorization(std::size_t degree,
                                                 Cycle const &support)
{
  std::size_t m = support.size();
  if (m < 3u || m % 2u == 0u)
    throw std::invalid_argument("odd_cycle_factorization: cycle length " +
                                std::to_string(m) + " must be odd and >= 3");

  auto sorted = support;
  std::sort(sorted.begin(), sorted.end());
  if (std::adjacent_find(sorted.begin(), sorted.end()) != sorted.end())
    throw std::invalid_argument("odd_cycle_factorization: repeated point");

  std::vector<Permutation> res;
  for (std::size_t i = 1u; i + 1u < m; i += 2u)
    res.push_back(Permutation::from_cycles(
      degree, {{support[0], support[i], support[i + 1u]}}));
  return res;
}

bool factorization_is_genus0(Cycle const &support,
                             std::vector<Permutation> const &factors)
{
  std::size_t m = support.size();
  if (factors.empty())
    return false;

  std::size_t d = factors.front().degree();
  std::vector<Point> local(d + 1u, 0u);
  for (std::size_t i = 0u; i < m; ++i)
    local[support[i]] = static_cast<Point>(i + 1u);

  // restrict to the support, which every factor must preserve
  std::vector<Permutation> entries;
  for (auto const &f : factors) {
    std::vector<Point> images(m);
    for (std::size_t i = 0u; i < m; ++i) {
      Point y = local[f(support[i])];
      if (y == 0u)
        return false;
      images[i] = y;
    }
    entries.push_back(Permutation::from_images(images));
  }

  Cycle local_cycle(m);
  for (std::size_t i = 0u; i < m; ++i)
    local_cycle[i] = static_cast<Point>(i + 1u);
  entries.push_back(Permutation::from_cycles(m, {local_cycle}).inverse());

  HurwitzTuple local_tuple(m, std::move(entries));
  if (!validate(local_tuple).positive())
    return false;
  return genus(local_tuple) == 0u;
}

bool is_simple_tuple(HurwitzTuple const &t)
{
  return std::all_of(t.entries().begin(), t.entries().end(),
                     [](Permutation const &p) { return is_three_cycle(p); });
}

RefinementPlan plan_refinement(HurwitzTuple const &t, std::size_t entry)
{
  if (entry >= t.size())
    throw std::out_of_range("refinement target " + std::to_string(entry) +
                            " out of range");

  auto const &perm = t[entry];
  if (!is_all_odd_cycles(perm))
    throw std::invalid_argument("entry " + std::to_string(entry + 1u) +
                                " has an even-length cycle");
  if (is_three_cycle(perm))
    throw std::invalid_argument("entry " + std::to_string(entry + 1u) +
                                " is already a 3-cycle");

  RefinementPlan plan;
  plan.target_entry = entry;
  for (auto const &cycle : perm.cycles()) {
    auto factors = odd_cycle_factorization(t.degree(), cycle);
    plan.cycles.push_back(cycle);
    plan.splice_order.insert(plan.splice_order.end(), factors.begin(),
                             factors.end());
    plan.per_cycle_factors.push_back(std::move(factors));
  }

  if (plan.cycles.empty())
    throw std::invalid_argument("entry " + std::to_string(entry + 1u) +
                                " has no refinable cycle");
  return plan;
}

namespace
{

void require_valid_even(HurwitzTuple const &t)
{
  if (!validate(t).positive())
    throw std::invalid_argument("refinement needs a valid tuple");
  if (!is_even_tuple(t))
    throw std::invalid_argument("refinement needs an even tuple");
}

template<typename Pred>
Refinement refine_where(HurwitzTuple const &t, Pred refine_entry)
{
  std::vector<Permutation> entries;
  std::vector<Provenance> provenance;
  std::optional<std::size_t> infinity;

  for (std::size_t i = 0u; i < t.size(); ++i) {
    if (!refine_entry(i)) {
      if (t.infinity_index() == i)
        infinity = entries.size();
      entries.push_back(t[i]);
      provenance.push_back({i, std::nullopt, std::nullopt});
      continue;
    }

    auto plan = plan_refinement(t, i);
    for (std::size_t c = 0u; c < plan.per_cycle_factors.size(); ++c) {
      auto const &factors = plan.per_cycle_factors[c];
      for (std::size_t f = 0u; f < factors.size(); ++f) {
        entries.push_back(factors[f]);
        provenance.push_back({i, c, f});
      }
    }
  }

  Refinement res{HurwitzTuple(t.degree(), std::move(entries), infinity),
                 std::move(provenance)};

  // Checked on every output rather than assumed.
  if (!validate(res.tuple).positive())
    throw InternalInconsistency("refinement produced an invalid tuple");
  if (genus(res.tuple) != genus(t))
    throw InternalInconsistency("refinement changed the genus");
  if (!monodromy_containment(t, res.tuple))
    throw InternalInconsistency(
      "original monodromy is not contained in the refined monodromy");

  return res;
}

} // namespace

Refinement refine_branch_point(HurwitzTuple const &t, std::size_t idx)
{
  require_valid_even(t);
  if (idx >= t.size())
    throw std::out_of_range("branch point " + std::to_string(idx) +
                            " out of range");
  return refine_where(t, [idx](std::size_t i) { return i == idx; });
}

Refinement refine_to_simple(HurwitzTuple const &t)
{
  require_valid_even(t);
  return refine_where(t, [&t](std::size_t i) { return !is_three_cycle(t[i]); });
}

Refinement refine_all_but(HurwitzTuple const &t, std::size_t keep)
{
  if (keep >= t.size())
    throw std::out_of_range("keep index " + std::to_string(keep) +
                            " out of range for " + std::to_string(t.size()) +
                            " entries");
  require_valid_even(t);
  return refine_where(t, [&t, keep](std::size_t i) {
    return i != keep && !is_three_cycle(t[i]);
  });
}

bool monodromy_containment(HurwitzTuple const &original,
                           HurwitzTuple const &refined)
{
  if (original.degree() != refined.degree())
    throw DegreeMismatch(original.degree(), refined.degree());

  auto group = monodromy_group(refined);
  return std::all_of(original.entries().begin(), original.entries().end(),
                     [&](Permutation const &p) { return group.contains(p); });
}

} // namespace hforge
