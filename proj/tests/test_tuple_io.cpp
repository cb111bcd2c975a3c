#include <gtest/gtest.h>

#include <hforge/errors.hpp>
#include <hforge/random.hpp>
#include <hforge/tuple_io.hpp>

using namespace hforge;
using nlohmann::ordered_json;

TEST(TupleIoTest, EmitsCanonicalLayout)
{
  HurwitzTuple t(5, {Permutation::from_cycles(5, {{1, 2, 3}}),
                     Permutation::from_cycles(5, {{1, 4, 5}}),
                     Permutation::from_cycles(5, {{1, 5, 4, 3, 2}})},
                 2);
  ordered_json meta;
  meta["seed"] = 1;
  EXPECT_EQ(emit_tuple(t, meta),
            "{\n"
            "  \"degree\": 5,\n"
            "  \"entries\": [\n"
            "    [[1,2,3]],\n"
            "    [[1,4,5]],\n"
            "    [[1,5,4,3,2]]\n"
            "  ],\n"
            "  \"infinity_index\": 3,\n"
            "  \"meta\": {\n"
            "    \"seed\": 1\n"
            "  }\n"
            "}\n");
}

TEST(TupleIoTest, RoundTripIsIdentity)
{
  Rng rng(103);
  for (int i = 0; i < 100; ++i) {
    std::size_t d = 1u + rng.below(20u);
    std::size_t r = rng.below(5u);
    std::vector<Permutation> entries;
    for (std::size_t j = 0u; j < r; ++j)
      entries.push_back(rng.permutation(d));
    std::optional<std::size_t> inf;
    if (r > 0u && rng.below(2u) == 0u)
      inf = rng.below(r);
    HurwitzTuple t(d, entries, inf);

    ordered_json meta;
    meta["trial"] = i;
    meta["nested"] = {{"z", 1}, {"a", {1, 2, 3}}};

    auto text = emit_tuple(t, meta);
    auto doc = parse_tuple(text);
    EXPECT_EQ(doc.tuple, t);
    EXPECT_EQ(doc.tuple.infinity_index(), inf);
    EXPECT_EQ(doc.meta, meta);
    EXPECT_EQ(emit_tuple(doc.tuple, doc.meta), text);
  }
}

TEST(TupleIoTest, PermutationWireForm)
{
  auto p = Permutation::from_cycles(6, {{4, 5}, {1, 2, 3}});
  auto json = permutation_to_json(p);
  EXPECT_EQ(json.dump(), R"({"degree":6,"cycles":[[1,2,3],[4,5]]})");
  EXPECT_EQ(permutation_from_json(json), p);
  EXPECT_THROW(permutation_from_json(ordered_json::parse(R"({"degree":2,"cycles":[[1,3]]})")),
               SchemaError);
  EXPECT_THROW(permutation_from_json(ordered_json::parse("[1]")), SchemaError);
}

TEST(TupleIoTest, ParseErrorsCarryPosition)
{
  std::string text = "{\n  \"degree\": 3,\n  \"entries\": [ [[1,2,3]] ,, ]\n}\n";
  try {
    parse_tuple(text);
    FAIL() << "expected ParseError";
  } catch (ParseError const &e) {
    EXPECT_EQ(e.line(), 3u);
    EXPECT_EQ(e.column(), 27u);
  }
}

TEST(TupleIoTest, SchemaViolationsAreItemized)
{
  std::string text = R"({"degree": 3, "entries": [[[1,2,4]], [[1,1,2]], 5],
                         "infinity_index": 9, "colour": "red"})";
  try {
    parse_tuple(text);
    FAIL() << "expected SchemaError";
  } catch (SchemaError const &e) {
    auto const &issues = e.issues();
    EXPECT_EQ(issues.size(), 5u);
    auto mentions = [&](std::string const &s) {
      return std::any_of(issues.begin(), issues.end(),
                         [&](std::string const &i) { return i.find(s) != std::string::npos; });
    };
    EXPECT_TRUE(mentions("unknown field \"colour\""));
    EXPECT_TRUE(mentions("entries[0][0]"));
    EXPECT_TRUE(mentions("repeated"));
    EXPECT_TRUE(mentions("entries[2]"));
    EXPECT_TRUE(mentions("infinity_index"));
  }

  EXPECT_THROW(parse_tuple(R"({"entries": []})"), SchemaError);
  EXPECT_THROW(parse_tuple(R"({"degree": 0, "entries": []})"), SchemaError);
  EXPECT_THROW(parse_tuple(R"({"degree": 2, "entries": [], "meta": 3})"), SchemaError);
  EXPECT_THROW(parse_tuple("[]"), SchemaError);
}

TEST(TupleIoTest, OptionalFields)
{
  auto doc = parse_tuple(R"({"degree": 2, "entries": [[[1,2]], [[2,1]]]})");
  EXPECT_EQ(doc.tuple.size(), 2u);
  EXPECT_FALSE(doc.tuple.infinity_index().has_value());
  EXPECT_TRUE(doc.meta.is_object());
  EXPECT_TRUE(doc.meta.empty());
  EXPECT_EQ(doc.tuple[1], Permutation::from_cycles(2, {{1, 2}}));
}

TEST(TupleIoTest, ReadsFixtureFiles)
{
  auto doc = read_tuple_file(HFORGE_FIXTURE_DIR "/a5_witness.json");
  EXPECT_EQ(doc.tuple.degree(), 5u);
  EXPECT_EQ(doc.tuple.infinity_index(), 2u);
  EXPECT_EQ(doc.meta["note"], "genus 0 cover with monodromy A_5");
  EXPECT_THROW(read_tuple_file(HFORGE_FIXTURE_DIR "/missing.json"), std::runtime_error);
}
