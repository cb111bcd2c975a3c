#include <algorithm>
#include <functional>
#include <numeric>
#include <sstream>
#include <stdexcept>

#include "hforge/errors.hpp"
#include "hforge/permutation.hpp"

namespace hforge
{

namespace
{

void check_degree(std::size_t degree)
{
  if (degree == 0u || degree > Permutation::max_degree)
    throw std::invalid_argument("permutation degree must lie in 1.." +
                                std::to_string(Permutation::max_degree) +
                                ", got " + std::to_string(degree));
}

} // namespace

Permutation::Permutation(std::size_t degree)
{
  check_degree(degree);
  _table.resize(degree);
  std::iota(_table.begin(), _table.end(), std::uint8_t{0});
}

Permutation Permutation::from_images(std::vector<Point> const &images)
{
  check_degree(images.size());

  std::vector<std::uint8_t> table(images.size());
  std::vector<bool> seen(images.size(), false);

  for (std::size_t i = 0u; i < images.size(); ++i) {
    Point img = images[i];
    if (img < 1u || img > images.size())
      throw std::invalid_argument("image " + std::to_string(img) +
                                  " out of range 1.." +
                                  std::to_string(images.size()));
    if (seen[img - 1u])
      throw std::invalid_argument("image " + std::to_string(img) +
                                  " occurs twice; not a bijection");
    seen[img - 1u] = true;
    table[i] = static_cast<std::uint8_t>(img - 1u);
  }

  return Permutation(std::move(table));
}

Permutation Permutation::from_cycles(std::size_t degree,
                                     std::vector<Cycle> const &cycles)
{
  check_degree(degree);

  Permutation res(degree);
  std::vector<bool> used(degree, false);

  for (auto const &cycle : cycles) {
    for (Point x : cycle) {
      if (x < 1u || x > degree)
        throw std::invalid_argument("point " + std::to_string(x) +
                                    " out of range 1.." +
                                    std::to_string(degree));
      if (used[x - 1u])
        throw std::invalid_argument("point " + std::to_string(x) +
                                    " occurs in more than one place; "
                                    "cycles must be disjoint");
      used[x - 1u] = true;
    }

    for (std::size_t i = 0u; i < cycle.size(); ++i) {
      Point from = cycle[i];
      Point to = cycle[(i + 1u) % cycle.size()];
      res._table[from - 1u] = static_cast<std::uint8_t>(to - 1u);
    }
  }

  return res;
}

bool Permutation::is_identity() const
{
  for (std::size_t i = 0u; i < _table.size(); ++i) {
    if (_table[i] != i)
      return false;
  }
  return true;
}

bool Permutation::is_even() const
{
  // sign = (-1)^(d - #cycles)
  return (degree() - cycle_type(*this).cycle_count()) % 2u == 0u;
}

Permutation Permutation::inverse() const
{
  std::vector<std::uint8_t> inv(_table.size());
  for (std::size_t i = 0u; i < _table.size(); ++i)
    inv[_table[i]] = static_cast<std::uint8_t>(i);
  return Permutation(std::move(inv));
}

Permutation Permutation::pow(std::uint64_t exponent) const
{
  // Walk each cycle once instead of repeated squaring.
  std::vector<std::uint8_t> res(_table.size());
  std::vector<bool> done(_table.size(), false);
  std::vector<std::uint8_t> cycle;

  for (std::size_t start = 0u; start < _table.size(); ++start) {
    if (done[start])
      continue;

    cycle.clear();
    for (std::size_t x = start; !done[x]; x = _table[x]) {
      done[x] = true;
      cycle.push_back(static_cast<std::uint8_t>(x));
    }

    std::size_t shift = exponent % cycle.size();
    for (std::size_t i = 0u; i < cycle.size(); ++i)
      res[cycle[i]] = cycle[(i + shift) % cycle.size()];
  }

  return Permutation(std::move(res));
}

std::uint64_t Permutation::order() const
{
  std::uint64_t res = 1u;
  for (unsigned part : cycle_type(*this).parts)
    res = std::lcm(res, static_cast<std::uint64_t>(part));
  return res;
}

std::vector<Cycle> Permutation::cycles() const
{
  std::vector<Cycle> res;
  std::vector<bool> done(_table.size(), false);

  for (std::size_t start = 0u; start < _table.size(); ++start) {
    if (done[start] || _table[start] == start)
      continue;

    Cycle cycle;
    for (std::size_t x = start; !done[x]; x = _table[x]) {
      done[x] = true;
      cycle.push_back(static_cast<Point>(x + 1u));
    }
    res.push_back(std::move(cycle));
  }

  return res;
}

std::string Permutation::str() const
{
  auto cs = cycles();
  if (cs.empty())
    return "()";

  std::ostringstream ss;
  for (auto const &cycle : cs) {
    ss << '(';
    for (std::size_t i = 0u; i < cycle.size(); ++i)
      ss << (i ? " " : "") << cycle[i];
    ss << ')';
  }
  return ss.str();
}

Permutation &Permutation::operator*=(Permutation const &rhs)
{
  if (degree() != rhs.degree())
    throw DegreeMismatch(degree(), rhs.degree());

  for (auto &img : _table)
    img = rhs._table[img];
  return *this;
}

Permutation compose(Permutation const &p, Permutation const &q)
{ return p * q; }

Permutation conjugate(Permutation const &p, Permutation const &by)
{
  if (p.degree() != by.degree())
    throw DegreeMismatch(p.degree(), by.degree());

  // by^{-1} p by sends by(x) to by(p(x)).
  std::vector<std::uint8_t> res(p.degree());
  for (std::size_t x = 0u; x < p.degree(); ++x)
    res[by._table[x]] = by._table[p._table[x]];
  return Permutation(std::move(res));
}

Permutation commutator(Permutation const &a, Permutation const &b)
{ return a.inverse() * b.inverse() * a * b; }

std::size_t CycleType::degree() const
{ return std::accumulate(parts.begin(), parts.end(), std::size_t{0}); }

std::vector<unsigned> CycleType::nontrivial_parts() const
{
  std::vector<unsigned> res;
  std::copy_if(parts.begin(), parts.end(), std::back_inserter(res),
               [](unsigned part) { return part > 1u; });
  return res;
}

std::string CycleType::str() const
{
  std::ostringstream ss;
  ss << '(';
  for (std::size_t i = 0u; i < parts.size(); ++i)
    ss << (i ? "," : "") << parts[i];
  ss << ')';
  return ss.str();
}

CycleType cycle_type(Permutation const &p)
{
  auto table = p.table();

  CycleType res;
  std::vector<bool> done(table.size(), false);

  for (std::size_t start = 0u; start < table.size(); ++start) {
    if (done[start])
      continue;

    unsigned len = 0u;
    for (std::size_t x = start; !done[x]; x = table[x]) {
      done[x] = true;
      ++len;
    }
    res.parts.push_back(len);
  }

  std::sort(res.parts.begin(), res.parts.end(), std::greater<>());
  return res;
}

bool is_all_odd_cycles(Permutation const &p)
{
  auto ct = cycle_type(p);
  return std::all_of(ct.parts.begin(), ct.parts.end(),
                     [](unsigned part) { return part % 2u == 1u; });
}

bool is_three_cycle(Permutation const &p)
{
  unsigned moved = 0u;
  auto table = p.table();
  for (std::size_t x = 0u; x < table.size(); ++x) {
    if (table[x] != x && ++moved > 3u)
      return false;
  }

  // a permutation moving exactly three points is a 3-cycle
  return moved == 3u;
}

} // namespace hforge
