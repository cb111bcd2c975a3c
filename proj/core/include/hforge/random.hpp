#ifndef HFORGE_RANDOM_HPP
#define HFORGE_RANDOM_HPP

#include <cstddef>
#include <cstdint>
#include <random>

#include "permutation.hpp"

namespace hforge
{

// Seeded generator with platform-independent sampling. The standard
// distributions are implementation-defined, so bounded draws are done here
// to keep certificates byte-reproducible across standard libraries.
class Rng
{
public:
  explicit Rng(std::uint64_t seed) : _engine(seed) {}

  std::uint64_t next() { return _engine(); }

  // Uniform in [0, bound), bound > 0.
  std::uint64_t below(std::uint64_t bound);

  Permutation permutation(std::size_t degree);
  Permutation even_permutation(std::size_t degree);
  Permutation three_cycle(std::size_t degree);

private:
  std::mt19937_64 _engine;
};

// SplitMix64 finalizer over (seed, index); independent streams per worker.
std::uint64_t derive_seed(std::uint64_t seed, std::uint64_t index);

} // namespace hforge

#endif // HFORGE_RANDOM_HPP
