#ifndef HFORGE_TOOLS_EXPERIMENTS_HPP
#define HFORGE_TOOLS_EXPERIMENTS_HPP

#include <cstddef>
#include <cstdint>
#include <string>
#include <vector>

#include <nlohmann/json.hpp>

#include <hforge/hforge.hpp>

namespace hforge::tools
{

// A valid tuple of degree in [min_degree, max_degree] with 2..max_entries
// entries; the last entry is forced so that the product is the identity.
HurwitzTuple random_valid_tuple(Rng &rng, std::size_t min_degree,
                                std::size_t max_degree,
                                std::size_t max_entries);

// Generators for one recognition stress candidate; a mix of dense, sparse and
// possibly odd generating sets so every hypothesis gets exercised.
std::vector<Permutation> random_stress_generators(Rng &rng, std::size_t degree);

struct Lemma1StressRow
{
  std::size_t degree = 0u;
  std::uint64_t candidates = 0u;
  std::uint64_t accepted = 0u;
  std::uint64_t exceptions = 0u;
  std::uint64_t rejected_odd = 0u;
  std::uint64_t rejected_intransitive = 0u;
  std::uint64_t rejected_imprimitive = 0u;
  std::uint64_t rejected_no_3cycle = 0u;
};

struct Lemma1StressReport
{
  std::uint64_t seed = 0u;
  std::uint64_t trials = 0u;
  std::vector<Lemma1StressRow> rows;

  // every degree reached `trials` accepted groups with no exception
  bool ok() const;
};

// For each degree, draws candidates from derive_seed(seed, degree) until
// `trials` of them satisfy all recognition hypotheses (even, transitive, primitive, contains a 3-cycle), and compares the order
// of each with d!/2.
Lemma1StressReport lemma1_stress(std::size_t min_degree, std::size_t max_degree,
                                 std::uint64_t trials, std::uint64_t seed);

nlohmann::ordered_json to_json(Lemma1StressReport const &report);

// Composite tuple f_2 . f_1 with an outer m-cycle over infinity (m odd) and
// an inner return map with at most 3 odd cycles, so the entry over infinity
// has at most 3 odd cycles, each of length divisible by m.
struct WreathSample
{
  HurwitzTuple tuple;
  std::size_t outer_degree;
  std::size_t inner_degree;
};

WreathSample random_wreath_tuple(Rng &rng);

struct WreathCheck
{
  std::size_t outer_degree = 0u;
  std::size_t inner_degree = 0u;
  std::string infinity_cycle_type;
  std::uint64_t gcd = 0u;
  bool valid = false;
  bool primitive = true;
  bool obstruction_consistent = false;

  bool ok() const;
};

WreathCheck check_wreath_sample(WreathSample const &sample);

struct WitnessCheck
{
  CoverShape shape;
  bool found = false;
  bool coprime = false;
  bool primitive = false;
  std::string method;

  bool ok() const { return found && coprime && primitive; }
};

struct DecompReport
{
  std::uint64_t seed = 0u;
  std::uint64_t trials = 0u;
  std::uint64_t wreath_passed = 0u;
  std::vector<WreathCheck> wreath_failures;
  std::vector<WitnessCheck> witnesses;

  bool ok() const;
};

// Shapes used for the converse check: the first enumerated shape for
// g = 1, d = 16..20 and g = 2, d = 28.
std::vector<CoverShape> decomp_witness_shapes();

DecompReport decomp_test(std::uint64_t trials, std::uint64_t seed,
                         bool with_witnesses = true);

nlohmann::ordered_json to_json(DecompReport const &report);

} // namespace hforge::tools

#endif // HFORGE_TOOLS_EXPERIMENTS_HPP
