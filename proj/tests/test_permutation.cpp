#include <gtest/gtest.h>

#include <hforge/errors.hpp>
#include <hforge/permutation.hpp>
#include <hforge/random.hpp>

#include "oracles.hpp"

using namespace hforge;

namespace
{

unsigned inversions(Permutation const &p)
{
  unsigned res = 0u;
  for (unsigned x = 1u; x <= p.degree(); ++x)
    for (unsigned y = x + 1u; y <= p.degree(); ++y)
      res += p(x) > p(y) ? 1u : 0u;
  return res;
}

} // namespace

TEST(PermutationTest, ComposesLeftToRight)
{
  auto p = Permutation::from_cycles(5, {{1, 2, 3}});
  auto q = Permutation::from_cycles(5, {{1, 4, 5}});

  EXPECT_EQ(p * q, Permutation::from_cycles(5, {{1, 2, 3, 4, 5}}));
  EXPECT_EQ((p * q).str(), "(1 2 3 4 5)");
  EXPECT_EQ(oracle::table_of(p * q),
            oracle::compose(oracle::table_of(p), oracle::table_of(q)));
}

TEST(PermutationTest, CompositionMatchesImageTables)
{
  Rng rng(11);
  for (int i = 0; i < 200; ++i) {
    std::size_t d = 1u + rng.below(12u);
    auto a = rng.permutation(d), b = rng.permutation(d);
    EXPECT_EQ(oracle::table_of(a * b),
              oracle::compose(oracle::table_of(a), oracle::table_of(b)));
  }
}

TEST(PermutationTest, IdentityAndInverse)
{
  Rng rng(3);
  for (int i = 0; i < 100; ++i) {
    auto p = rng.permutation(1u + rng.below(20u));
    EXPECT_TRUE((p * p.inverse()).is_identity());
    EXPECT_TRUE((p.inverse() * p).is_identity());
    EXPECT_EQ(p.inverse().inverse(), p);
  }
  EXPECT_EQ(Permutation(4).str(), "()");
  EXPECT_TRUE(Permutation::identity(7).is_identity());
}

TEST(PermutationTest, OrderMatchesRepeatedComposition)
{
  Rng rng(5);
  for (int i = 0; i < 100; ++i) {
    auto p = rng.permutation(1u + rng.below(10u));
    std::uint64_t order = 1u;
    for (auto q = p; !q.is_identity(); q *= p)
      ++order;
    EXPECT_EQ(p.order(), order);
    EXPECT_TRUE(p.pow(order).is_identity());
  }
}

TEST(PermutationTest, PowersAgreeWithProducts)
{
  auto p = Permutation::from_cycles(7, {{1, 2, 3, 4}, {5, 6}});
  EXPECT_EQ(p.pow(0), Permutation(7));
  EXPECT_EQ(p.pow(2), p * p);
  EXPECT_EQ(p.pow(5), p);
  EXPECT_EQ(p.pow(3), p.inverse());
  EXPECT_EQ(p.order(), 4u);
}

TEST(PermutationTest, CyclesAreInNormalForm)
{
  auto p = Permutation::from_cycles(8, {{5, 4}, {3, 1, 2}});
  auto cycles = p.cycles();
  ASSERT_EQ(cycles.size(), 2u);
  EXPECT_EQ(cycles[0], (Cycle{1, 2, 3}));
  EXPECT_EQ(cycles[1], (Cycle{4, 5}));
  EXPECT_EQ(p.str(), "(1 2 3)(4 5)");
  EXPECT_EQ(Permutation::from_cycles(8, cycles), p);
}

TEST(PermutationTest, ParityMatchesInversionCount)
{
  Rng rng(17);
  for (int i = 0; i < 200; ++i) {
    auto p = rng.permutation(1u + rng.below(12u));
    EXPECT_EQ(p.is_even(), inversions(p) % 2u == 0u);
  }
  for (int i = 0; i < 50; ++i)
    EXPECT_TRUE(rng.even_permutation(2u + rng.below(10u)).is_even());
}

TEST(PermutationTest, CycleTypeQueries)
{
  auto p = Permutation::from_cycles(10, {{1, 2, 3}, {4, 5, 6, 7, 8}});
  auto type = cycle_type(p);
  EXPECT_EQ(type.parts, (std::vector<unsigned>{5, 3, 1, 1}));
  EXPECT_EQ(type.str(), "(5,3,1,1)");
  EXPECT_EQ(type.cycle_count(), 4u);
  EXPECT_TRUE(is_all_odd_cycles(p));
  EXPECT_FALSE(is_three_cycle(p));

  EXPECT_TRUE(is_three_cycle(Permutation::from_cycles(6, {{2, 6, 4}})));
  EXPECT_FALSE(is_three_cycle(Permutation::from_cycles(6, {{1, 2}, {3, 4, 5}})));
  EXPECT_FALSE(is_all_odd_cycles(Permutation::from_cycles(6, {{1, 2}})));
  EXPECT_TRUE(is_all_odd_cycles(Permutation(6)));

  Rng rng(23);
  for (int i = 0; i < 50; ++i) {
    auto q = rng.permutation(2u + rng.below(10u));
    EXPECT_EQ(cycle_type(q).cycle_count(), oracle::cycle_count(oracle::table_of(q)));
    EXPECT_EQ(cycle_type(q).degree(), q.degree());
  }
}

TEST(PermutationTest, ConjugationRelabelsCycles)
{
  Rng rng(29);
  for (int i = 0; i < 100; ++i) {
    std::size_t d = 2u + rng.below(10u);
    auto p = rng.permutation(d), c = rng.permutation(d);
    auto q = conjugate(p, c);
    EXPECT_EQ(q, c.inverse() * p * c);
    // x -> p(x) becomes c(x) -> c(p(x))
    for (unsigned x = 1u; x <= d; ++x)
      EXPECT_EQ(q(c(x)), c(p(x)));
    EXPECT_EQ(cycle_type(q).parts, cycle_type(p).parts);
  }
}

TEST(PermutationTest, CommutatorDefinition)
{
  auto a = Permutation::from_cycles(5, {{1, 2, 3}});
  auto b = Permutation::from_cycles(5, {{3, 4, 5}});
  EXPECT_EQ(commutator(a, b), a.inverse() * b.inverse() * a * b);
  EXPECT_TRUE(commutator(a, a).is_identity());
}

TEST(PermutationTest, RejectsMalformedInput)
{
  EXPECT_THROW(Permutation::from_images({1, 1, 2}), std::invalid_argument);
  EXPECT_THROW(Permutation::from_images({1, 4, 2}), std::invalid_argument);
  EXPECT_THROW(Permutation::from_cycles(4, {{1, 2}, {2, 3}}), std::invalid_argument);
  EXPECT_THROW(Permutation::from_cycles(4, {{1, 5}}), std::invalid_argument);
  EXPECT_THROW(Permutation(0), std::invalid_argument);
  EXPECT_THROW(Permutation(3) * Permutation(4), DegreeMismatch);
}

TEST(RngTest, IsReproducible)
{
  Rng a(99), b(99);
  for (int i = 0; i < 20; ++i)
    EXPECT_EQ(a.permutation(9), b.permutation(9));
  EXPECT_NE(derive_seed(1, 0), derive_seed(1, 1));
  EXPECT_EQ(derive_seed(5, 3), derive_seed(5, 3));
}

TEST(RngTest, BelowStaysInRange)
{
  Rng rng(1);
  std::vector<int> hits(7, 0);
  for (int i = 0; i < 7000; ++i)
    ++hits[rng.below(7)];
  for (int h : hits)
    EXPECT_GT(h, 800);
  EXPECT_THROW(rng.below(0), std::invalid_argument);
  EXPECT_TRUE(is_three_cycle(rng.three_cycle(5)));
}
