#include <numeric>
#include <stdexcept>

#include "hforge_tools/experiments.hpp"

namespace hforge::tools
{

namespace
{

// Random permutation with the given cycle lengths (summing to <= degree).
Permutation random_with_cycle_type(Rng &rng, std::size_t degree,
                                   std::vector<std::size_t> const &lengths)
{
  auto shuffle = rng.permutation(degree);
  std::vector<Cycle> cycles;
  Point next = 1u;
  for (auto len : lengths) {
    Cycle c;
    for (std::size_t i = 0u; i < len; ++i)
      c.push_back(shuffle(next++));
    cycles.push_back(std::move(c));
  }
  return Permutation::from_cycles(degree, cycles);
}

Permutation random_cycle(Rng &rng, std::size_t degree, std::size_t length)
{ return random_with_cycle_type(rng, degree, {length}); }

// Odd parts, at most three of them, summing to n.
std::vector<std::size_t> random_odd_partition(Rng &rng, std::size_t n)
{
  for (;;) {
    std::size_t parts = n % 2u == 1u ? (rng.below(2u) == 0u ? 1u : 3u) : 2u;
    if (parts > n)
      parts = n % 2u == 1u ? 1u : 2u;

    std::vector<std::size_t> res;
    std::size_t left = n;
    for (std::size_t i = 0u; i + 1u < parts; ++i) {
      std::size_t part = 2u * rng.below((left - (parts - i - 1u) + 1u) / 2u) + 1u;
      res.push_back(part);
      left -= part;
    }
    if (left % 2u == 1u) {
      res.push_back(left);
      return res;
    }
  }
}

} // namespace

HurwitzTuple random_valid_tuple(Rng &rng, std::size_t min_degree,
                                std::size_t max_degree,
                                std::size_t max_entries)
{
  if (min_degree < 2u || max_degree < min_degree || max_entries < 2u)
    throw std::invalid_argument("random_valid_tuple: bad parameters");

  for (;;) {
    std::size_t d = min_degree + rng.below(max_degree - min_degree + 1u);
    std::size_t r = 2u + rng.below(max_entries - 1u);

    std::vector<Permutation> entries;
    Permutation prod(d);
    for (std::size_t i = 0u; i + 1u < r; ++i) {
      auto p = rng.below(2u) == 0u
                 ? rng.permutation(d)
                 : random_cycle(rng, d, 2u + rng.below(d - 1u));
      prod *= p;
      entries.push_back(std::move(p));
    }
    entries.push_back(prod.inverse());

    HurwitzTuple t(d, std::move(entries));
    if (validate(t).positive())
      return t;
  }
}

std::vector<Permutation> random_stress_generators(Rng &rng, std::size_t degree)
{
  std::vector<Permutation> gens;
  switch (rng.below(4u)) {
  case 0u:
    gens = {rng.even_permutation(degree), rng.even_permutation(degree)};
    break;
  case 1u:
    gens = {rng.three_cycle(degree), rng.even_permutation(degree)};
    break;
  case 2u: {
    std::size_t count = 2u + rng.below(2u);
    for (std::size_t i = 0u; i < count; ++i) {
      std::size_t len = 3u + 2u * rng.below((degree - 1u) / 2u);
      gens.push_back(random_cycle(rng, degree, len));
    }
    break;
  }
  default:
    gens = {rng.permutation(degree), rng.permutation(degree)};
    break;
  }
  return gens;
}

bool Lemma1StressReport::ok() const
{
  return std::all_of(rows.begin(), rows.end(), [this](Lemma1StressRow const &r) {
    return r.accepted >= trials && r.exceptions == 0u;
  });
}

Lemma1StressReport lemma1_stress(std::size_t min_degree, std::size_t max_degree,
                                 std::uint64_t trials, std::uint64_t seed)
{
  if (min_degree < 5u || max_degree < min_degree || max_degree > 64u)
    throw std::invalid_argument("degree range must lie within 5..64");

  Lemma1StressReport report;
  report.seed = seed;
  report.trials = trials;

  for (std::size_t d = min_degree; d <= max_degree; ++d) {
    Rng rng(derive_seed(seed, d));
    Lemma1StressRow row;
    row.degree = d;
    BigInt expected = alternating_order(d);

    // a hard cap so a pathological generator mix cannot loop forever
    std::uint64_t cap = 100u * trials + 1000u;
    while (row.accepted < trials && row.candidates < cap) {
      ++row.candidates;
      PermGroup group(random_stress_generators(rng, d));

      Certificate cert;
      try {
        cert = lemma1_certify(group);
      } catch (InternalInconsistency const &) {
        ++row.accepted;
        ++row.exceptions;
        continue;
      }

      if (cert.verdict == Verdict::monodromy_is_Ad) {
        ++row.accepted;
        if (group.order() != expected)
          ++row.exceptions;
      } else if (!cert.passed("generators_even")) {
        ++row.rejected_odd;
      } else if (!cert.passed("transitive")) {
        ++row.rejected_intransitive;
      } else if (!cert.passed("primitive")) {
        ++row.rejected_imprimitive;
      } else {
        ++row.rejected_no_3cycle;
      }
    }
    report.rows.push_back(row);
  }
  return report;
}

nlohmann::ordered_json to_json(Lemma1StressReport const &report)
{
  nlohmann::ordered_json res;
  res["trials_per_degree"] = report.trials;
  res["ok"] = report.ok();
  auto rows = nlohmann::ordered_json::array();
  for (auto const &r : report.rows) {
    nlohmann::ordered_json row;
    row["degree"] = r.degree;
    row["candidates"] = r.candidates;
    row["accepted"] = r.accepted;
    row["exceptions"] = r.exceptions;
    row["rejected"] = {{"odd_generator", r.rejected_odd},
                       {"intransitive", r.rejected_intransitive},
                       {"imprimitive", r.rejected_imprimitive},
                       {"no_3cycle", r.rejected_no_3cycle}};
    rows.push_back(std::move(row));
  }
  res["degrees"] = std::move(rows);
  return res;
}

WreathSample random_wreath_tuple(Rng &rng)
{
  for (;;) {
    std::size_t m = 3u + 2u * rng.below(2u);
    std::size_t n = 2u + rng.below(4u);
    std::size_t r = 3u + rng.below(2u);

    // outer tuple: tau_1 .. tau_{r-2} random, tau_{r-1} forced, tau_r an
    // m-cycle over infinity
    auto tau_inf = random_cycle(rng, m, m);
    std::vector<Permutation> outer_entries;
    Permutation prod(m);
    for (std::size_t i = 0u; i + 2u < r; ++i) {
      outer_entries.push_back(rng.permutation(m));
      prod *= outer_entries.back();
    }
    outer_entries.push_back((tau_inf * prod).inverse());
    outer_entries.push_back(tau_inf);

    HurwitzTuple outer(m, outer_entries, r - 1u);
    if (!validate(outer).positive())
      continue;

    WreathAssignment inner{n, {}};
    for (std::size_t j = 0u; j < r; ++j) {
      std::vector<Permutation> sheets;
      for (std::size_t s = 0u; s < m; ++s)
        sheets.push_back(j + 1u == r ? Permutation(n) : rng.permutation(n));
      inner.sheets.push_back(std::move(sheets));
    }
    // over infinity the return map is conjugate to this single sheet
    inner.sheets[r - 1u][rng.below(m)] =
      random_with_cycle_type(rng, n, random_odd_partition(rng, n));

    auto completed = complete_wreath_assignment(outer, std::move(inner), r - 2u);
    auto composite = compose_covers(outer, completed);
    if (!validate(composite).positive())
      continue;
    return {std::move(composite), m, n};
  }
}

bool WreathCheck::ok() const
{ return valid && gcd > 1u && !primitive && obstruction_consistent; }

WreathCheck check_wreath_sample(WreathSample const &sample)
{
  WreathCheck res;
  res.outer_degree = sample.outer_degree;
  res.inner_degree = sample.inner_degree;

  auto const &t = sample.tuple;
  res.valid = validate(t).positive();
  auto type = cycle_type(t.infinity_entry());
  res.infinity_cycle_type = type.str();
  for (auto part : type.parts)
    res.gcd = std::gcd(res.gcd, static_cast<std::uint64_t>(part));

  res.primitive = is_primitive(monodromy_group(t));

  try {
    auto cert = decomposability_obstruction(t);
    res.obstruction_consistent = cert.verdict != Verdict::indecomposable;
  } catch (std::exception const &) {
    res.obstruction_consistent = false;
  }
  return res;
}

bool DecompReport::ok() const
{
  return wreath_failures.empty() && wreath_passed == trials &&
         std::all_of(witnesses.begin(), witnesses.end(),
                     [](WitnessCheck const &w) { return w.ok(); });
}

std::vector<CoverShape> decomp_witness_shapes()
{
  std::vector<CoverShape> res;
  for (unsigned d = 16u; d <= 20u; ++d) {
    auto shapes = enumerate_cover_shapes(1u, d);
    if (!shapes.empty())
      res.push_back(shapes.front());
  }
  res.push_back(enumerate_cover_shapes(2u, 28u).front());
  return res;
}

DecompReport decomp_test(std::uint64_t trials, std::uint64_t seed,
                         bool with_witnesses)
{
  DecompReport report;
  report.seed = seed;
  report.trials = trials;

  Rng rng(derive_seed(seed, 0u));
  for (std::uint64_t i = 0u; i < trials; ++i) {
    auto check = check_wreath_sample(random_wreath_tuple(rng));
    if (check.ok())
      ++report.wreath_passed;
    else
      report.wreath_failures.push_back(std::move(check));
  }

  if (!with_witnesses)
    return report;

  auto shapes = decomp_witness_shapes();
  for (std::size_t i = 0u; i < shapes.size(); ++i) {
    SearchOptions options;
    options.seed = derive_seed(seed, i + 1u);
    options.budget = search_chunk_size;

    auto result = search_simple_odd_tuple(shapes[i], options);
    WitnessCheck w{shapes[i], false, false, false, {}};
    w.method = result.stats.method;
    w.found = result.tuple.has_value();
    w.coprime = is_indecomposable_triple(shapes[i]);
    w.primitive = w.found && is_primitive(monodromy_group(*result.tuple));
    report.witnesses.push_back(std::move(w));
  }
  return report;
}

nlohmann::ordered_json to_json(DecompReport const &report)
{
  nlohmann::ordered_json res;
  res["trials"] = report.trials;
  res["ok"] = report.ok();
  res["wreath_passed"] = report.wreath_passed;

  auto failures = nlohmann::ordered_json::array();
  for (auto const &f : report.wreath_failures) {
    nlohmann::ordered_json row;
    row["outer_degree"] = f.outer_degree;
    row["inner_degree"] = f.inner_degree;
    row["infinity_cycle_type"] = f.infinity_cycle_type;
    row["gcd"] = f.gcd;
    row["valid"] = f.valid;
    row["primitive"] = f.primitive;
    row["obstruction_consistent"] = f.obstruction_consistent;
    failures.push_back(std::move(row));
  }
  res["wreath_failures"] = std::move(failures);

  auto witnesses = nlohmann::ordered_json::array();
  for (auto const &w : report.witnesses) {
    nlohmann::ordered_json row;
    row["shape"] = to_json(w.shape);
    row["method"] = w.method;
    row["found"] = w.found;
    row["coprime"] = w.coprime;
    row["primitive"] = w.primitive;
    witnesses.push_back(std::move(row));
  }
  res["witnesses"] = std::move(witnesses);
  return res;
}

} // namespace hforge::tools
