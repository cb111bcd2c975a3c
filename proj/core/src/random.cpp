#include <numeric>
#include <stdexcept>
#include <utility>
#include <vector>

#include "hforge/random.hpp"

namespace hforge
{

std::uint64_t Rng::below(std::uint64_t bound)
{
  if (bound == 0u)
    throw std::invalid_argument("Rng::below: bound must be positive");

  // Reject the top partial block so every residue is equally likely.
  std::uint64_t limit = UINT64_MAX - UINT64_MAX % bound;
  for (;;) {
    std::uint64_t x = _engine();
    if (x < limit)
      return x % bound;
  }
}

Permutation Rng::permutation(std::size_t degree)
{
  std::vector<Point> images(degree);
  std::iota(images.begin(), images.end(), Point{1});

  for (std::size_t i = degree; i > 1u; --i)
    std::swap(images[i - 1u], images[below(i)]);

  return Permutation::from_images(images);
}

Permutation Rng::even_permutation(std::size_t degree)
{
  auto res = permutation(degree);
  if (!res.is_even())
    res *= Permutation::from_cycles(degree, {{1u, 2u}});
  return res;
}

Permutation Rng::three_cycle(std::size_t degree)
{
  if (degree < 3u)
    throw std::invalid_argument("three_cycle: degree must be at least 3");

  Point a = static_cast<Point>(below(degree)) + 1u;
  Point b, c;
  do {
    b = static_cast<Point>(below(degree)) + 1u;
  } while (b == a);
  do {
    c = static_cast<Point>(below(degree)) + 1u;
  } while (c == a || c == b);

  return Permutation::from_cycles(degree, {{a, b, c}});
}

std::uint64_t derive_seed(std::uint64_t seed, std::uint64_t index)
{
  std::uint64_t z = seed + 0x9e3779b97f4a7c15ull * (index + 1u);
  z = (z ^ (z >> 30)) * 0xbf58476d1ce4e5b9ull;
  z = (z ^ (z >> 27)) * 0x94d049bb133111ebull;
  return z ^ (z >> 31);
}

} // namespace hforge
