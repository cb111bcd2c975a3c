#include <gtest/gtest.h>

#include <hforge/cover_shape.hpp>
#include <hforge/degeneration.hpp>
#include <hforge/search.hpp>

using namespace hforge;

namespace
{

SearchOptions smoke(std::uint64_t seed)
{
  SearchOptions o;
  o.seed = seed;
  o.allow_genus_zero = true;
  return o;
}

void expect_witness(CoverShape const &shape, HurwitzTuple const &t)
{
  SCOPED_TRACE(shape.str());
  EXPECT_EQ(t.degree(), shape.degree());
  EXPECT_TRUE(validate(t).positive());
  EXPECT_TRUE(is_even_tuple(t));
  EXPECT_EQ(genus(t), shape.genus());
  EXPECT_EQ(t.size(), three_cycle_branch_count(shape) + 1u);
  ASSERT_TRUE(t.infinity_index().has_value());
  EXPECT_EQ(*t.infinity_index(), t.size() - 1u);
  EXPECT_EQ(t.infinity_entry(), canonical_infinity_permutation(shape));
  for (std::size_t i = 0u; i + 1u < t.size(); ++i)
    EXPECT_TRUE(is_three_cycle(t[i]));

  auto group = monodromy_group(t);
  EXPECT_EQ(group.order(), alternating_order(t.degree()));
  EXPECT_EQ(lemma1_certify(group).verdict, Verdict::monodromy_is_Ad);
  EXPECT_EQ(decomposability_obstruction(t).verdict, Verdict::indecomposable);
}

} // namespace

TEST(SearchTest, DegreeFiveWitness)
{
  CoverShape shape(0, {3});
  auto res = search_simple_odd_tuple(shape, smoke(1));
  ASSERT_TRUE(res.tuple.has_value());
  EXPECT_EQ(res.certificate.verdict, Verdict::monodromy_is_Ad);
  EXPECT_EQ(res.stats.method, "rejection");
  EXPECT_EQ(monodromy_group(*res.tuple).order(), 60);
  expect_witness(shape, *res.tuple);

  HurwitzTuple reference(5, {Permutation::from_cycles(5, {{1, 2, 3}}),
                             Permutation::from_cycles(5, {{1, 4, 5}}),
                             Permutation::from_cycles(5, {{1, 5, 4, 3, 2}})},
                         2);
  EXPECT_TRUE(certify_simple_odd_witness(shape, reference).positive());
}

TEST(SearchTest, GenusZeroNeedsSmokeMode)
{
  EXPECT_THROW(search_simple_odd_tuple(CoverShape(0, {3})), std::invalid_argument);
  EXPECT_THROW(search_simple_odd_tuple(CoverShape(1, {4, 4})), std::invalid_argument);
}

TEST(SearchTest, DegreeSixteenWitness)
{
  CoverShape shape(1, {5, 4});
  SearchOptions options;
  options.seed = 7;
  options.budget = 4u * search_chunk_size;
  auto res = search_simple_odd_tuple(shape, options);
  ASSERT_TRUE(res.tuple.has_value());
  EXPECT_EQ(res.certificate.verdict, Verdict::monodromy_is_Ad);
  EXPECT_EQ(cycle_type(res.tuple->infinity_entry()).parts, (std::vector<unsigned>{9, 7}));
  EXPECT_EQ(res.tuple->size(), 10u);
  expect_witness(shape, *res.tuple);
}

TEST(SearchTest, DeterministicAndThreadIndependent)
{
  CoverShape shape(1, {5, 4});
  SearchOptions a;
  a.seed = 3;
  a.budget = 3u * search_chunk_size;
  auto b = a;
  b.threads = 3;

  auto ra = search_simple_odd_tuple(shape, a);
  auto rb = search_simple_odd_tuple(shape, a);
  auto rc = search_simple_odd_tuple(shape, b);
  ASSERT_TRUE(ra.tuple && rb.tuple && rc.tuple);
  EXPECT_EQ(*ra.tuple, *rb.tuple);
  EXPECT_EQ(*ra.tuple, *rc.tuple);
  EXPECT_EQ(to_json(ra.certificate).dump(), to_json(rc.certificate).dump());
  EXPECT_EQ(ra.stats.trials, rc.stats.trials);

  for (std::uint64_t seed = 0u; seed < 20u; ++seed) {
    auto s1 = smoke(seed), s4 = smoke(seed);
    s4.threads = 4;
    auto x = search_simple_odd_tuple(CoverShape(0, {3}), s1);
    auto y = search_simple_odd_tuple(CoverShape(0, {3}), s4);
    ASSERT_TRUE(x.tuple && y.tuple);
    EXPECT_EQ(*x.tuple, *y.tuple);
    EXPECT_EQ(x.stats.trials, y.stats.trials);
  }
}

TEST(SearchTest, ExhaustedBudgetReportsStatistics)
{
  SearchOptions o;
  o.seed = 1;
  o.budget = 10;
  o.skeleton_attempts = 0;
  auto res = search_simple_odd_tuple(CoverShape(1, {5, 4}), o);
  EXPECT_FALSE(res.tuple.has_value());
  EXPECT_EQ(res.stats.method, "none");
  EXPECT_EQ(res.stats.trials, 10u);
  EXPECT_FALSE(res.certificate.positive());
}

TEST(SearchTest, WitnessesAcrossShapes)
{
  for (unsigned g : {1u, 2u}) {
    for (unsigned d = 12u * g + 4u; d <= 12u * g + 8u; ++d) {
      for (auto const &shape : enumerate_cover_shapes(g, d)) {
        SearchOptions o;
        o.seed = d;
        o.budget = search_chunk_size;
        auto res = search_simple_odd_tuple(shape, o);
        ASSERT_TRUE(res.tuple.has_value()) << shape.str();
        expect_witness(shape, *res.tuple);
      }
    }
  }
}

TEST(SearchTest, SkeletonWitnessIsReproducible)
{
  CoverShape shape(2, {9, 6});
  auto a = build_skeleton_witness(shape, 11, 256, 32);
  auto b = build_skeleton_witness(shape, 11, 256, 32);
  ASSERT_TRUE(a && b);
  EXPECT_EQ(*a, *b);
  expect_witness(shape, *a);
}

TEST(SearchTest, CertifierRejectsWrongShapes)
{
  CoverShape shape(0, {3});
  auto c5 = Permutation::from_cycles(5, {{1, 2, 3, 4, 5}});
  // right group and genus but not simple
  HurwitzTuple coarse(5, {c5, c5.inverse()}, 1);
  EXPECT_FALSE(certify_simple_odd_witness(shape, coarse).positive());

  // simple but with a relabelled entry over infinity
  HurwitzTuple swapped(5, {c5.inverse(), c5}, 1);
  auto refined = refine_all_but(swapped, 1).tuple;
  EXPECT_FALSE(certify_simple_odd_witness(shape, refined).passed("canonical_infinity"));
}
