#ifndef HFORGE_SEARCH_HPP
#define HFORGE_SEARCH_HPP

#include <cstddef>
#include <cstdint>
#include <optional>
#include <string>

#include "certificate.hpp"
#include "cover_shape.hpp"
#include "hurwitz_tuple.hpp"

namespace hforge
{

struct SearchOptions
{
  std::uint64_t seed = 0u;
  // Total rejection-sampling trials.
  std::uint64_t budget = 1000000u;
  // Worker threads; the result does not depend on this.
  unsigned threads = 1u;
  // Admit g = 0 shapes (smoke mode).
  bool allow_genus_zero = false;
  // Attempts of the skeleton construction once rejection sampling fails.
  std::uint64_t skeleton_attempts = 256u;
  // Random braid moves applied to a skeleton witness.
  std::uint64_t braid_scramble = 64u;
};

// Rejection trials are split into fixed-size chunks; chunk i draws from
// derive_seed(seed, i) and the lowest-index successful chunk wins.
inline constexpr std::uint64_t search_chunk_size = 1u << 14;

struct SearchStats
{
  std::uint64_t trials = 0u;
  std::uint64_t chunks = 0u;
  std::uint64_t skeleton_attempts = 0u;
  // "rejection", "skeleton" or "none"
  std::string method = "none";
  std::optional<std::uint64_t> winning_chunk;
};

struct SearchResult
{
  std::optional<HurwitzTuple> tuple;
  Certificate certificate;
  SearchStats stats;
};

// Looks for a simple odd tuple realizing `shape`: b_3 three-cycles followed
// by the canonical entry over infinity, genus g, monodromy A_d.
//
// Rejection sampling draws b_3 - 1 random 3-cycles and forces the last one;
// if the budget runs out, a chain skeleton (factor chains of the inverse of
// the entry over infinity, joined by linking 3-cycles) is built from a
// derived seed and scrambled by braid moves. Deterministic in (seed, budget).
//
// Throws std::invalid_argument if the shape fails check_prop4_hypotheses.
SearchResult search_simple_odd_tuple(CoverShape const &shape,
                                     SearchOptions const &options = {});

// Every property a search witness must have, checked from scratch.
Certificate certify_simple_odd_witness(CoverShape const &shape,
                                       HurwitzTuple const &t);

// Deterministic skeleton construction alone, for the given seed.
std::optional<HurwitzTuple> build_skeleton_witness(CoverShape const &shape,
                                                   std::uint64_t seed,
                                                   std::uint64_t attempts = 256u,
                                                   std::uint64_t scramble = 0u);

} // namespace hforge

#endif // HFORGE_SEARCH_HPP
