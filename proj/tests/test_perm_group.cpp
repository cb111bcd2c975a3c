#include <gtest/gtest.h>

#include <hforge/errors.hpp>
#include <hforge/perm_group.hpp>
#include <hforge/random.hpp>

#include "oracles.hpp"

using namespace hforge;

namespace
{

Permutation cyc(std::size_t d, std::initializer_list<Cycle> cycles)
{ return Permutation::from_cycles(d, cycles); }

std::vector<Permutation> random_gens(Rng &rng, std::size_t d)
{
  std::vector<Permutation> gens;
  std::size_t count = 1u + rng.below(3u);
  for (std::size_t i = 0u; i < count; ++i) {
    if (rng.below(2u) == 0u) {
      gens.push_back(rng.permutation(d));
    } else {
      // sparse generators give small and intransitive groups too
      auto s = rng.permutation(d);
      std::size_t len = 2u + rng.below(d - 1u);
      Cycle c;
      for (unsigned x = 1u; x <= len; ++x)
        c.push_back(s(x));
      gens.push_back(Permutation::from_cycles(d, {c}));
    }
  }
  return gens;
}

} // namespace

TEST(PermGroupTest, SmallOrders)
{
  EXPECT_EQ(PermGroup({cyc(2, {{1, 2}})}).order(), 2);
  EXPECT_EQ(PermGroup({cyc(5, {{1, 2, 3, 4, 5}})}).order(), 5);
  EXPECT_EQ(PermGroup({cyc(5, {{1, 2, 3, 4, 5}}), cyc(5, {{1, 2, 3}})}).order(), 60);
  EXPECT_EQ(PermGroup({Permutation(4)}).order(), 1);
}

TEST(PermGroupTest, OrderMatchesClosure)
{
  Rng rng(41);
  for (int i = 0; i < 150; ++i) {
    std::size_t d = 2u + rng.below(6u);
    auto gens = random_gens(rng, d);
    PermGroup g(gens);
    auto elements = oracle::closure(gens);
    ASSERT_EQ(g.order(), elements.size()) << "degree " << d;

    std::size_t visited = 0u;
    g.for_each_element([&](Permutation const &p) {
      EXPECT_TRUE(elements.count(oracle::table_of(p)));
      ++visited;
      return true;
    });
    EXPECT_EQ(visited, elements.size());
  }
}

TEST(PermGroupTest, MembershipMatchesClosure)
{
  Rng rng(43);
  for (int i = 0; i < 60; ++i) {
    std::size_t d = 3u + rng.below(4u);
    auto gens = random_gens(rng, d);
    PermGroup g(gens);
    auto elements = oracle::closure(gens);
    for (auto const &p : oracle::symmetric_group(d))
      EXPECT_EQ(g.contains(p), elements.count(oracle::table_of(p)) == 1u);
  }
}

TEST(PermGroupTest, StrongGeneratorsAndBase)
{
  PermGroup g({cyc(6, {{1, 2, 3, 4, 5, 6}}), cyc(6, {{1, 2}})});
  EXPECT_EQ(g.order(), 720);

  BigInt product = 1;
  for (auto len : g.basic_orbit_lengths())
    product *= len;
  EXPECT_EQ(product, g.order());
  EXPECT_EQ(g.base().size(), g.basic_orbit_lengths().size());

  // strong generators generate the same group
  PermGroup h(g.strong_generators());
  EXPECT_EQ(h.order(), g.order());
}

TEST(PermGroupTest, LargeAlternatingGroups)
{
  for (std::size_t d : {10u, 16u, 30u, 64u}) {
    SCOPED_TRACE(d);
    // an odd-length cycle on the last d or d - 1 points, so it stays even
    Cycle big;
    for (unsigned x = d % 2u == 0u ? 2u : 1u; x <= d; ++x)
      big.push_back(x);
    PermGroup g({Permutation::from_cycles(d, {big}), cyc(d, {{1, 2, 3}})});
    EXPECT_EQ(g.order(), alternating_order(d));
    EXPECT_TRUE(is_alternating(g));
    EXPECT_FALSE(is_symmetric(g));
  }
  EXPECT_EQ(factorial(20), BigInt("2432902008176640000"));
}

TEST(PermGroupTest, RejectsBadGenerators)
{
  EXPECT_THROW(PermGroup({}), std::invalid_argument);
  EXPECT_THROW(PermGroup({Permutation(3), Permutation(4)}), DegreeMismatch);
  EXPECT_THROW(PermGroup({Permutation(65)}), std::invalid_argument);
  PermGroup g({cyc(4, {{1, 2}})});
  EXPECT_THROW(g.contains(Permutation(5)), DegreeMismatch);
}

TEST(PermGroupTest, Transitivity)
{
  EXPECT_TRUE(is_transitive(PermGroup({cyc(5, {{1, 2, 3, 4, 5}})})));
  EXPECT_FALSE(is_transitive(PermGroup({cyc(3, {{1, 2}})})));
  EXPECT_FALSE(is_transitive(PermGroup({cyc(4, {{1, 2}}), cyc(4, {{3, 4}})})));

  Rng rng(47);
  for (int i = 0; i < 100; ++i) {
    std::size_t d = 2u + rng.below(10u);
    auto gens = random_gens(rng, d);
    EXPECT_EQ(is_transitive(PermGroup(gens)), oracle::transitive(gens));
  }
}

TEST(PermGroupTest, PrimitivitySpecCases)
{
  EXPECT_TRUE(is_primitive(PermGroup({cyc(5, {{1, 2, 3, 4, 5}})})));

  PermGroup c4({cyc(4, {{1, 2, 3, 4}})});
  EXPECT_FALSE(is_primitive(c4));
  auto blocks = find_block_system(c4);
  ASSERT_TRUE(blocks.has_value());
  EXPECT_EQ(blocks->blocks, (std::vector<std::vector<Point>>{{1, 3}, {2, 4}}));

  EXPECT_TRUE(is_primitive(PermGroup({cyc(4, {{1, 2}}), cyc(4, {{1, 2, 3, 4}})})));
  EXPECT_THROW(find_block_system(PermGroup({cyc(4, {{1, 2}})})), std::invalid_argument);
}

TEST(PermGroupTest, PrimitivityMatchesPartitionEnumeration)
{
  Rng rng(53);
  int transitive = 0;
  for (int i = 0; i < 300; ++i) {
    std::size_t d = 2u + rng.below(7u);
    auto gens = random_gens(rng, d);
    PermGroup g(gens);
    if (!is_transitive(g))
      continue;
    ++transitive;
    EXPECT_EQ(is_primitive(g), oracle::primitive(gens)) << "degree " << d;
  }
  EXPECT_GT(transitive, 50);
}

TEST(PermGroupTest, ImprimitiveBlockSystemsAreInvariant)
{
  // D_6 on 6 points preserves {1,4},{2,5},{3,6} and {1,3,5},{2,4,6}
  PermGroup g({cyc(6, {{1, 2, 3, 4, 5, 6}}), cyc(6, {{2, 6}, {3, 5}})});
  auto blocks = find_block_system(g);
  ASSERT_TRUE(blocks.has_value());
  EXPECT_FALSE(blocks->trivial());

  std::vector<std::size_t> label(7);
  for (std::size_t b = 0u; b < blocks->blocks.size(); ++b)
    for (auto x : blocks->blocks[b])
      label[x] = b;
  for (auto const &gen : g.generators())
    for (unsigned x = 1u; x <= 6u; ++x)
      for (unsigned y = 1u; y <= 6u; ++y)
        if (label[x] == label[y])
          EXPECT_EQ(label[gen(x)], label[gen(y)]);
}

TEST(PermGroupTest, AlternatingAndSymmetric)
{
  EXPECT_TRUE(is_alternating(PermGroup({cyc(5, {{1, 2, 3, 4, 5}}), cyc(5, {{1, 2, 3}})})));
  EXPECT_TRUE(is_symmetric(PermGroup({cyc(4, {{1, 2}}), cyc(4, {{1, 2, 3, 4}})})));
  EXPECT_TRUE(is_alternating(PermGroup({cyc(3, {{1, 2, 3}})})));
  EXPECT_FALSE(is_alternating(PermGroup({cyc(4, {{1, 2}}), cyc(4, {{1, 2, 3, 4}})})));
}

TEST(PermGroupTest, FindThreeCycle)
{
  auto gen = find_3cycle(PermGroup({cyc(5, {{1, 2, 3, 4, 5}}), cyc(5, {{1, 2, 3}})}));
  ASSERT_TRUE(gen.element.has_value());
  EXPECT_EQ(*gen.element, cyc(5, {{1, 2, 3}}));
  EXPECT_EQ(gen.strategy, "generator");

  auto none = find_3cycle(PermGroup({cyc(6, {{1, 2, 3, 4, 5, 6}})}));
  EXPECT_FALSE(none.element.has_value());
  EXPECT_TRUE(none.exhaustive);

  // A_5 generated without a 3-cycle among the generators
  auto hidden = find_3cycle(PermGroup({cyc(5, {{1, 2, 3, 4, 5}}), cyc(5, {{1, 2}, {3, 4}})}));
  ASSERT_TRUE(hidden.element.has_value());
  EXPECT_TRUE(is_three_cycle(*hidden.element));
}

TEST(PermGroupTest, FindThreeCycleAgreesWithClosure)
{
  Rng rng(59);
  for (int i = 0; i < 100; ++i) {
    std::size_t d = 3u + rng.below(4u);
    auto gens = random_gens(rng, d);
    PermGroup g(gens);
    bool has = false;
    for (auto const &t : oracle::closure(gens)) {
      auto p = Permutation::from_images(std::vector<Point>(t.begin() + 1, t.end()));
      has = has || is_three_cycle(p);
    }
    auto found = find_3cycle(g);
    EXPECT_EQ(found.element.has_value(), has);
    if (found.element)
      EXPECT_TRUE(g.contains(*found.element));
  }
}

TEST(PermGroupTest, AlternatingCertificates)
{
  auto a5 = lemma1_certify(PermGroup({cyc(5, {{1, 2, 3, 4, 5}}), cyc(5, {{1, 2, 3}})}));
  EXPECT_EQ(a5.verdict, Verdict::monodromy_is_Ad);
  EXPECT_TRUE(a5.passed("generators_even"));
  EXPECT_TRUE(a5.passed("transitive"));
  EXPECT_TRUE(a5.passed("primitive"));
  EXPECT_TRUE(a5.passed("contains_3cycle"));
  EXPECT_EQ(a5.evidence["order"], "60");

  EXPECT_EQ(lemma1_certify(PermGroup({cyc(3, {{1, 2, 3}})})).verdict,
            Verdict::monodromy_is_Ad);

  auto c4 = lemma1_certify(PermGroup({cyc(4, {{1, 2, 3, 4}})}));
  EXPECT_EQ(c4.verdict, Verdict::inconclusive);
  EXPECT_FALSE(c4.passed("generators_even"));
  EXPECT_FALSE(c4.passed("primitive"));

  // even, transitive, imprimitive: blocks {1,2,3},{4,5,6}
  auto wr = lemma1_certify(PermGroup({cyc(6, {{1, 2, 3}, {4, 5, 6}}),
                                      cyc(6, {{1, 4, 2, 5}, {3, 6}})}));
  EXPECT_NE(wr.verdict, Verdict::monodromy_is_Ad);
}
