#include <algorithm>
#include <numeric>
#include <stdexcept>
#include <string>

#include "hforge/errors.hpp"
#include "hforge/hurwitz_tuple.hpp"

namespace hforge
{

HurwitzTuple::HurwitzTuple(std::size_t degree, std::vector<Permutation> entries,
                           std::optional<std::size_t> infinity_index)
: _degree(degree), _entries(std::move(entries)), _infinity(infinity_index)
{
  for (auto const &entry : _entries) {
    if (entry.degree() != _degree)
      throw DegreeMismatch(_degree, entry.degree());
  }

  if (_infinity && *_infinity >= _entries.size())
    throw std::out_of_range("infinity index " + std::to_string(*_infinity) +
                            " out of range for " +
                            std::to_string(_entries.size()) + " entries");
}

Permutation const &HurwitzTuple::infinity_entry() const
{
  if (!_infinity)
    throw std::logic_error("tuple has no entry designated over infinity");
  return _entries[*_infinity];
}

Permutation HurwitzTuple::product() const
{
  Permutation res(_degree);
  for (auto const &entry : _entries)
    res *= entry;
  return res;
}

std::size_t ramification_total(HurwitzTuple const &t)
{
  std::size_t total = 0u;
  for (auto const &entry : t.entries())
    total += t.degree() - cycle_type(entry).cycle_count();
  return total;
}

std::size_t genus(HurwitzTuple const &t)
{
  std::size_t total = ramification_total(t);
  if (total % 2u != 0u)
    throw GenusError("ramification total " + std::to_string(total) +
                     " is odd; genus would not be integral");

  // 2g - 2 = total - 2d
  if (total + 2u < 2u * t.degree())
    throw GenusError("ramification total " + std::to_string(total) +
                     " gives negative genus for degree " +
                     std::to_string(t.degree()));

  return (total + 2u - 2u * t.degree()) / 2u;
}

PermGroup monodromy_group(HurwitzTuple const &t)
{
  if (t.size() == 0u)
    return PermGroup({Permutation(t.degree())});
  return PermGroup(std::vector<Permutation>(t.entries().begin(),
                                            t.entries().end()));
}

Certificate validate(HurwitzTuple const &t)
{
  Certificate cert;
  cert.rule = "branch_cycle_description";

  std::string identity_positions;
  for (std::size_t i = 0u; i < t.size(); ++i) {
    if (t[i].is_identity())
      identity_positions += (identity_positions.empty() ? "" : ",") +
                            std::to_string(i + 1u);
  }
  bool no_identity = identity_positions.empty();
  cert.add("no_identity_entry", no_identity,
           no_identity ? "" : "identity at position " + identity_positions);

  auto product = t.product();
  bool product_ok = product.is_identity();
  cert.add("product_identity", product_ok,
           product_ok ? "" : "product is " + product.str());

  auto orbs = orbits(t.entries());
  bool transitive = !t.entries().empty() && orbs.size() == 1u;
  if (t.degree() == 1u)
    transitive = true;
  cert.add("transitive", transitive,
           transitive ? "" : std::to_string(orbs.size()) + " orbits");

  cert.evidence["degree"] = t.degree();
  cert.evidence["entries"] = t.size();

  std::size_t total = ramification_total(t);
  cert.evidence["ramification_total"] = total;

  bool valid = no_identity && product_ok && transitive;
  if (valid) {
    // A valid tuple cannot fail these; a failure means corrupted input.
    bool parity = total % 2u == 0u;
    bool nonnegative = total + 2u >= 2u * t.degree();
    cert.add("genus_integral", parity && nonnegative,
             parity ? "" : "odd ramification total");
    valid = parity && nonnegative;

    if (valid) {
      cert.evidence["genus"] = genus(t);
      cert.evidence["monodromy_order"] = monodromy_group(t).order().str();
    }
  }

  cert.verdict = valid ? Verdict::valid : Verdict::invalid;
  return cert;
}

bool is_even_tuple(HurwitzTuple const &t)
{
  return std::all_of(t.entries().begin(), t.entries().end(),
                     [](Permutation const &p) { return is_all_odd_cycles(p); });
}

HurwitzTuple braid_move(HurwitzTuple const &t, std::size_t i)
{
  if (i + 1u >= t.size())
    throw std::out_of_range("braid move position " + std::to_string(i) +
                            " needs 0 <= i < " +
                            std::to_string(t.size() == 0 ? 0 : t.size() - 1u));

  std::vector<Permutation> entries(t.entries().begin(), t.entries().end());
  Permutation next = entries[i + 1u];
  entries[i + 1u] = conjugate(entries[i], next);
  entries[i] = std::move(next);

  auto inf = t.infinity_index();
  if (inf && *inf == i)
    inf = i + 1u;
  else if (inf && *inf == i + 1u)
    inf = i;

  return HurwitzTuple(t.degree(), std::move(entries), inf);
}

HurwitzTuple braid_move_inverse(HurwitzTuple const &t, std::size_t i)
{
  if (i + 1u >= t.size())
    throw std::out_of_range("braid move position " + std::to_string(i) +
                            " needs 0 <= i < " +
                            std::to_string(t.size() == 0 ? 0 : t.size() - 1u));

  // (x, y) -> (x y x^{-1}, x)
  std::vector<Permutation> entries(t.entries().begin(), t.entries().end());
  Permutation first = entries[i];
  entries[i] = conjugate(entries[i + 1u], first.inverse());
  entries[i + 1u] = std::move(first);

  auto inf = t.infinity_index();
  if (inf && *inf == i)
    inf = i + 1u;
  else if (inf && *inf == i + 1u)
    inf = i;

  return HurwitzTuple(t.degree(), std::move(entries), inf);
}

HurwitzTuple conjugate(HurwitzTuple const &t, Permutation const &by)
{
  std::vector<Permutation> entries;
  entries.reserve(t.size());
  for (auto const &entry : t.entries())
    entries.push_back(conjugate(entry, by));
  return HurwitzTuple(t.degree(), std::move(entries), t.infinity_index());
}

namespace
{

// Lexicographic comparison of entry image tables, entry by entry.
bool tuple_less(std::vector<Permutation> const &lhs,
                std::vector<Permutation> const &rhs)
{ return lhs < rhs; }

// Relabelling that numbers points in breadth-first order from `start`,
// following entries in order. Unreached points get the remaining labels in
// increasing order of their original label.
Permutation bfs_relabelling(HurwitzTuple const &t, Point start)
{
  std::size_t d = t.degree();
  std::vector<Point> label(d, 0u);
  std::vector<Point> queue;
  Point next = 1u;

  auto visit = [&](Point x) {
    if (label[x - 1u] == 0u) {
      label[x - 1u] = next++;
      queue.push_back(x);
    }
  };

  visit(start);
  for (std::size_t i = 0u; i < queue.size(); ++i) {
    for (auto const &entry : t.entries())
      visit(entry(queue[i]));
  }
  for (Point x = 1u; x <= d; ++x)
    visit(x);

  return Permutation::from_images(label);
}

} // namespace

NormalForm normalize(HurwitzTuple const &t)
{
  std::size_t d = t.degree();
  std::vector<Permutation> best(t.entries().begin(), t.entries().end());

  if (d <= exhaustive_normalize_max_degree) {
    std::vector<Point> images(d);
    std::iota(images.begin(), images.end(), Point{1});

    std::vector<Permutation> candidate;
    do {
      auto by = Permutation::from_images(images);
      candidate.clear();
      bool worse = false;
      for (std::size_t i = 0u; i < t.size(); ++i) {
        candidate.push_back(conjugate(t[i], by));
        // prune as soon as a prefix is already larger
        auto cmp = candidate.back() <=> best[i];
        if (cmp > 0) {
          worse = true;
          break;
        }
        if (cmp < 0)
          break;
      }
      if (worse)
        continue;
      for (std::size_t i = candidate.size(); i < t.size(); ++i)
        candidate.push_back(conjugate(t[i], by));
      if (tuple_less(candidate, best))
        best = candidate;
    } while (std::next_permutation(images.begin(), images.end()));

    return {HurwitzTuple(d, std::move(best), t.infinity_index()), true};
  }

  bool first = true;
  for (Point start = 1u; start <= d; ++start) {
    auto relabelled = conjugate(t, bfs_relabelling(t, start));
    std::vector<Permutation> candidate(relabelled.entries().begin(),
                                       relabelled.entries().end());
    if (first || tuple_less(candidate, best)) {
      best = std::move(candidate);
      first = false;
    }
  }

  return {HurwitzTuple(d, std::move(best), t.infinity_index()), false};
}

namespace
{

struct ConjugatorSearch
{
  HurwitzTuple const &lhs;
  HurwitzTuple const &rhs;

  // map[x] = c(x) - 1 for assigned x, or -1
  bool extend(std::vector<int> &map, std::vector<bool> &used,
              std::size_t x, std::size_t y) const
  {
    std::vector<std::pair<std::size_t, std::size_t>> queue{{x, y}};
    map[x] = static_cast<int>(y);
    used[y] = true;

    for (std::size_t i = 0u; i < queue.size(); ++i) {
      auto [a, b] = queue[i];
      for (std::size_t e = 0u; e < lhs.size(); ++e) {
        std::size_t a2 = lhs[e].table()[a];
        std::size_t b2 = rhs[e].table()[b];
        if (map[a2] >= 0) {
          if (static_cast<std::size_t>(map[a2]) != b2)
            return false;
        } else {
          if (used[b2])
            return false;
          map[a2] = static_cast<int>(b2);
          used[b2] = true;
          queue.emplace_back(a2, b2);
        }
      }
    }
    return true;
  }

  bool search(std::vector<int> &map, std::vector<bool> &used) const
  {
    auto it = std::find(map.begin(), map.end(), -1);
    if (it == map.end())
      return true;

    std::size_t x = static_cast<std::size_t>(it - map.begin());
    for (std::size_t y = 0u; y < map.size(); ++y) {
      if (used[y])
        continue;

      auto map_next = map;
      auto used_next = used;
      if (extend(map_next, used_next, x, y) && search(map_next, used_next)) {
        map = std::move(map_next);
        used = std::move(used_next);
        return true;
      }
    }
    return false;
  }
};

} // namespace

std::optional<Permutation> find_conjugator(HurwitzTuple const &lhs,
                                           HurwitzTuple const &rhs)
{
  if (lhs.degree() != rhs.degree())
    throw DegreeMismatch(lhs.degree(), rhs.degree());
  if (lhs.size() != rhs.size())
    return std::nullopt;

  // conjugation preserves cycle types entrywise
  for (std::size_t i = 0u; i < lhs.size(); ++i) {
    if (cycle_type(lhs[i]) != cycle_type(rhs[i]))
      return std::nullopt;
  }

  std::size_t d = lhs.degree();
  std::vector<int> map(d, -1);
  std::vector<bool> used(d, false);

  ConjugatorSearch search{lhs, rhs};
  if (!search.search(map, used))
    return std::nullopt;

  std::vector<Point> images(d);
  for (std::size_t x = 0u; x < d; ++x)
    images[x] = static_cast<Point>(map[x] + 1);
  return Permutation::from_images(images);
}

bool equivalent(HurwitzTuple const &lhs, HurwitzTuple const &rhs)
{
  if (lhs.degree() != rhs.degree())
    throw DegreeMismatch(lhs.degree(), rhs.degree());
  if (lhs.size() != rhs.size())
    return false;

  if (lhs.degree() <= exhaustive_normalize_max_degree)
    return normalize(lhs).tuple == normalize(rhs).tuple;

  return find_conjugator(lhs, rhs).has_value();
}

} // namespace hforge
