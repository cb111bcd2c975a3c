#include <algorithm>
#include <functional>
#include <numeric>
#include <sstream>
#include <stdexcept>

#include "hforge/cover_shape.hpp"
#include "hforge/errors.hpp"

namespace hforge
{

CoverShape::CoverShape(unsigned genus, std::vector<unsigned> multiplicities)
: _genus(genus), _mult(std::move(multiplicities))
{
  if (_mult.empty() || _mult.size() > 3u)
    throw std::invalid_argument("a cover shape has 1 to 3 poles, got " +
                                std::to_string(_mult.size()));
  if (std::find(_mult.begin(), _mult.end(), 0u) != _mult.end())
    throw std::invalid_argument("pole multiplicities must be positive");

  std::sort(_mult.begin(), _mult.end(), std::greater<>());
}

std::vector<unsigned> CoverShape::pole_orders() const
{
  std::vector<unsigned> res;
  for (unsigned n : _mult)
    res.push_back(2u * n - 1u);
  return res;
}

unsigned CoverShape::deg_D() const
{ return std::accumulate(_mult.begin(), _mult.end(), 0u); }

std::string CoverShape::str() const
{
  std::ostringstream ss;
  ss << "g=" << _genus << " k=" << k() << " n=(";
  for (std::size_t i = 0u; i < _mult.size(); ++i)
    ss << (i ? "," : "") << _mult[i];
  ss << ") d_i=(";
  auto orders = pole_orders();
  for (std::size_t i = 0u; i < orders.size(); ++i)
    ss << (i ? "," : "") << orders[i];
  ss << ") d=" << degree();
  return ss.str();
}

nlohmann::ordered_json to_json(CoverShape const &shape)
{
  nlohmann::ordered_json res;
  res["genus"] = shape.genus();
  res["k"] = shape.k();
  res["multiplicities"] = shape.multiplicities();
  res["pole_orders"] = shape.pole_orders();
  res["deg_D"] = shape.deg_D();
  res["degree"] = shape.degree();
  return res;
}

bool is_prime(std::uint64_t n)
{
  if (n < 2u)
    return false;
  for (std::uint64_t p = 2u; p * p <= n; ++p) {
    if (n % p == 0u)
      return false;
  }
  return true;
}

bool is_indecomposable_triple(std::vector<unsigned> const &pole_orders)
{
  if (pole_orders.empty() || pole_orders.size() > 3u)
    return false;
  if (pole_orders.size() == 1u)
    return is_prime(pole_orders.front());

  unsigned g = 0u;
  for (unsigned d : pole_orders)
    g = std::gcd(g, d);
  return g == 1u;
}

bool is_indecomposable_triple(CoverShape const &shape)
{ return is_indecomposable_triple(shape.pole_orders()); }

namespace
{

std::string join(std::vector<unsigned> const &xs)
{
  std::string res;
  for (std::size_t i = 0u; i < xs.size(); ++i)
    res += (i ? "," : "") + std::to_string(xs[i]);
  return res;
}

} // namespace

Certificate check_prop4_hypotheses(CoverShape const &shape,
                                   bool allow_genus_zero)
{
  Certificate cert;
  cert.rule = "prop4";

  int g = static_cast<int>(shape.genus());
  int k = static_cast<int>(shape.k());
  int deg_D = static_cast<int>(shape.deg_D());
  auto orders = shape.pole_orders();

  bool genus_ok = g > 0 || allow_genus_zero;
  cert.add("genus_positive", genus_ok,
           g > 0 ? "g=" + std::to_string(g)
                 : (allow_genus_zero ? "g=0 admitted in smoke mode"
                                     : "requires genus g > 0"));

  int bound_a = 3 * g + k;
  bool a = std::all_of(orders.begin(), orders.end(),
                       [&](unsigned d) { return static_cast<int>(d) > bound_a; });
  cert.add("a_pole_orders", a,
           "d_i=(" + join(orders) + ") > 3g+k=" + std::to_string(bound_a));

  int bound_b = 6 * g + 2 * k - 3;
  bool b = deg_D > bound_b;
  cert.add("b_degree", b,
           "deg(D)=" + std::to_string(deg_D) + " > 6g+2k-3=" +
             std::to_string(bound_b));

  bool c = is_indecomposable_triple(orders);
  unsigned gcd_all = 0u;
  for (unsigned d : orders)
    gcd_all = std::gcd(gcd_all, d);
  cert.add("c_indecomposable_triple", c,
           orders.size() == 1u
             ? "d_1=" + std::to_string(orders.front()) +
                 (c ? " is prime" : " is not prime")
             : "gcd(" + join(orders) + ")=" + std::to_string(gcd_all));

  int d = static_cast<int>(shape.degree());
  cert.evidence["shape"] = to_json(shape);
  cert.evidence["gcd"] = gcd_all;
  cert.evidence["derived_bound"] = {
    {"statement", "d > 12g + 3k - 6"},
    {"rhs", 12 * g + 3 * k - 6},
    {"holds", d > 12 * g + 3 * k - 6},
  };

  bool feasible = genus_ok && a && b && c;
  if (feasible) {
    cert.evidence["conclusions"] = {
      {"degree", d},
      {"maximal_pole_orders", orders},
      {"dim_F_XD", deg_D - 2 * g - k + 2},
    };
  }

  cert.verdict = feasible ? Verdict::feasible : Verdict::infeasible;
  return cert;
}

std::vector<CoverShape> enumerate_cover_shapes(unsigned genus, unsigned degree,
                                               bool include_k1)
{
  std::vector<CoverShape> res;

  for (unsigned k = include_k1 ? 1u : 2u; k <= 3u; ++k) {
    if ((degree + k) % 2u != 0u)
      continue;
    unsigned deg_D = (degree + k) / 2u;

    // n_1 >= ... >= n_k >= 1 summing to deg_D
    std::vector<unsigned> parts(k, 0u);
    std::function<void(unsigned, unsigned, unsigned)> rec =
      [&](unsigned i, unsigned remaining, unsigned max_part) {
        if (i == k) {
          if (remaining == 0u) {
            CoverShape shape(genus, parts);
            if (check_prop4_hypotheses(shape).positive())
              res.push_back(shape);
          }
          return;
        }
        unsigned slots = k - i;
        for (unsigned n = std::min(max_part, remaining); n >= 1u; --n) {
          if (n * slots < remaining)
            break;
          parts[i] = n;
          rec(i + 1u, remaining - n, n);
        }
      };
    rec(0u, deg_D, deg_D);
  }

  std::sort(res.begin(), res.end(),
            [](CoverShape const &lhs, CoverShape const &rhs) {
              return lhs.multiplicities() > rhs.multiplicities();
            });
  return res;
}

int dim_H(CoverShape const &shape)
{
  int g = static_cast<int>(shape.genus());
  int k = static_cast<int>(shape.k());
  int deg_D = static_cast<int>(shape.deg_D());

  for (unsigned n : shape.multiplicities()) {
    if (!(2 * static_cast<int>(n) > 3 * g + k - 1))
      throw std::domain_error("dim_H: requires 2n_i > 3g+k-1, violated by n=" +
                              std::to_string(n));
  }
  if (!(deg_D > 6 * g + 2 * k - 4))
    throw std::domain_error("dim_H: requires deg(D) > 6g+2k-4");

  return deg_D - 2 * g - k + 1;
}

int dim_F_XD(CoverShape const &shape)
{
  auto cert = check_prop4_hypotheses(shape);
  if (!cert.positive())
    throw std::domain_error("dim_F_XD: shape " + shape.str() +
                            " violates the feasibility hypotheses");

  int g = static_cast<int>(shape.genus());
  int k = static_cast<int>(shape.k());
  return static_cast<int>(shape.deg_D()) - 2 * g - k + 2;
}

int dim_F_Xd(unsigned genus, unsigned degree)
{
  if (degree < 12u * genus + 4u)
    throw std::domain_error("dim_F_Xd: requires d >= 12g+4, got d=" +
                            std::to_string(degree) + " g=" +
                            std::to_string(genus));

  int g = static_cast<int>(genus);
  return static_cast<int>((degree + 3u) / 2u) - 2 * g + 2;
}

namespace
{

std::int64_t floor_of(Rational const &q)
{
  auto n = q.numerator();
  auto d = q.denominator(); // always positive
  return n >= 0 ? n / d : -((-n + d - 1) / d);
}

} // namespace

BranchBound hurwitz_branch_bound(unsigned genus, unsigned degree)
{
  auto g = static_cast<std::int64_t>(genus);
  auto d = static_cast<std::int64_t>(degree);

  BranchBound res;
  res.genus = genus;
  res.degree = degree;
  res.branch_bound = Rational(2 * g + 4 + d, 4);
  res.max_branch_points = floor_of(res.branch_bound);
  res.hurwitz_scheme_bound = Rational(2 * g - 4 + d, 4);
  res.family_dimension = Rational(d, 2) - 2 * g + 2;
  res.family_exceeds_scheme = res.family_dimension > res.hurwitz_scheme_bound;
  res.degree_condition = d > 10 * g - 12;
  return res;
}

namespace
{

nlohmann::ordered_json rational_json(Rational const &q)
{
  nlohmann::ordered_json res;
  res["num"] = q.numerator();
  res["den"] = q.denominator();
  res["str"] = std::to_string(q.numerator()) +
               (q.denominator() == 1 ? "" : "/" + std::to_string(q.denominator()));
  return res;
}

} // namespace

nlohmann::ordered_json to_json(BranchBound const &bound)
{
  nlohmann::ordered_json res;
  res["genus"] = bound.genus;
  res["degree"] = bound.degree;
  res["branch_bound"] = rational_json(bound.branch_bound);
  res["branch_bound_quarters"] =
    std::to_string(2 * static_cast<std::int64_t>(bound.genus) + 4 + bound.degree) + "/4";
  res["max_branch_points"] = bound.max_branch_points;
  res["hurwitz_scheme_bound"] = rational_json(bound.hurwitz_scheme_bound);
  res["hurwitz_scheme_bound_quarters"] =
    std::to_string(2 * static_cast<std::int64_t>(bound.genus) - 4 + bound.degree) + "/4";
  res["family_dimension"] = rational_json(bound.family_dimension);
  res["family_exceeds_scheme"] = bound.family_exceeds_scheme;
  res["degree_condition"] = bound.degree_condition;
  return res;
}

unsigned three_cycle_branch_count(CoverShape const &shape)
{
  // d = k (mod 2), so the numerator is even
  return (shape.degree() + shape.k() + 2u * shape.genus() - 2u) / 2u;
}

Permutation canonical_infinity_permutation(CoverShape const &shape)
{
  std::vector<Cycle> cycles;
  Point start = 1u;
  for (unsigned len : shape.pole_orders()) {
    Cycle cycle{start};
    for (Point x = start + len - 1u; x > start; --x)
      cycle.push_back(x);
    cycles.push_back(std::move(cycle));
    start += len;
  }
  return Permutation::from_cycles(shape.degree(), cycles);
}

Certificate decomposability_obstruction(HurwitzTuple const &t)
{
  if (!t.infinity_index())
    throw std::invalid_argument(
      "decomposability_obstruction: tuple has no entry over infinity");
  if (!validate(t).positive())
    throw std::invalid_argument(
      "decomposability_obstruction: tuple is not a valid branch cycle "
      "description");

  auto parts = cycle_type(t.infinity_entry()).parts;
  if (parts.size() > 3u)
    throw std::invalid_argument(
      "decomposability_obstruction: more than 3 points over infinity");
  if (std::any_of(parts.begin(), parts.end(),
                  [](unsigned p) { return p < 2u; }))
    throw std::invalid_argument(
      "decomposability_obstruction: unramified point over infinity");
  if (parts.size() == 3u &&
      std::any_of(parts.begin(), parts.end(),
                  [](unsigned p) { return p % 2u == 0u; }))
    throw std::invalid_argument(
      "decomposability_obstruction: three points over infinity need odd "
      "ramification indices");

  Certificate cert;
  cert.rule = parts.size() == 1u ? "prime_degree" : "coprime_indices";

  unsigned gcd_all = 0u;
  for (unsigned p : parts)
    gcd_all = std::gcd(gcd_all, p);

  bool indecomposable = is_indecomposable_triple(parts);
  cert.add("indecomposable_triple", indecomposable,
           parts.size() == 1u
             ? std::to_string(parts.front()) +
                 (indecomposable ? " is prime: no factorization d = d1*d2"
                                 : " is not prime")
             : "gcd(" + join(parts) + ")=" + std::to_string(gcd_all));

  auto group = monodromy_group(t);
  bool primitive = is_primitive(group);
  cert.add("primitive", primitive, "cross-check via block systems");

  cert.evidence["infinity_cycle_type"] = parts;
  cert.evidence["gcd"] = gcd_all;
  cert.evidence["primitive"] = primitive;

  if (indecomposable && !primitive)
    throw InternalInconsistency(
      "indices over infinity certify indecomposability but the monodromy "
      "group is imprimitive");

  cert.verdict = indecomposable ? Verdict::indecomposable
                                : Verdict::inconclusive;
  return cert;
}

} // namespace hforge
