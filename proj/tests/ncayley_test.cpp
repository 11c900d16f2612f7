#include <random>
#include <set>
#include <utility>
#include <vector>

#include <gtest/gtest.h>

#include "pdr/group_zoo.hpp"
#include "pdr/ncayley.hpp"
#include "pdr/recipes.hpp"

namespace pdr {
namespace {

ConnectionFamily random_family(const Group& g, std::size_t n, double p, bool partite, std::mt19937_64& rng) {
  std::bernoulli_distribution coin(p);
  ConnectionFamily f(g.order(), n);
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = 0; j < n; ++j)
      for (Element t = 0; t < g.order(); ++t) {
        if (i == j && (partite || t == Group::identity())) continue;
        if (coin(rng)) f.at(i, j).insert(t);
      }
  return f;
}

// Arc set straight from the definition, with products taken from the raw table.
std::set<std::pair<Vertex, Vertex>> arcs_by_formula(const Group& g, const ConnectionFamily& f) {
  const auto table = g.table();
  std::set<std::pair<Vertex, Vertex>> arcs;
  for (std::size_t i = 0; i < f.n(); ++i)
    for (std::size_t j = 0; j < f.n(); ++j)
      for (Element t : f.at(i, j))
        for (Element x = 0; x < g.order(); ++x)
          arcs.emplace(static_cast<Vertex>(i * g.order() + x), static_cast<Vertex>(j * g.order() + table[t][x]));
  return arcs;
}

TEST(BuildNCayley, Z2ThreeParts) {
  const Group g = parse_group("Z2");
  const NCayleyDigraph x = build_ncayley(g, recipe_small_cyclic(g, 3).family);
  const Element a = 1;
  auto v = [&](Element e, std::size_t i) { return x.vertex(e, i); };
  EXPECT_EQ(x.digraph.vertex_count(), 6u);
  EXPECT_EQ(x.digraph.arc_count(), 12u);
  for (auto [p, q] : {std::pair{v(0, 0), v(0, 1)}, {v(a, 0), v(a, 1)}, {v(0, 0), v(0, 2)}, {v(a, 0), v(a, 2)}}) {
    EXPECT_TRUE(x.digraph.has_arc(p, q));
    EXPECT_TRUE(x.digraph.has_arc(q, p));
  }
  const std::vector<Vertex> cycle{v(0, 1), v(0, 2), v(a, 1), v(a, 2)};
  for (std::size_t k = 0; k < 4; ++k) {
    EXPECT_TRUE(x.digraph.has_arc(cycle[k], cycle[(k + 1) % 4]));
    EXPECT_FALSE(x.digraph.has_arc(cycle[(k + 1) % 4], cycle[k]));
  }
}

TEST(BuildNCayley, EmptyFamilyAndLoops) {
  const Group g = parse_group("S3");
  const ConnectionFamily f(6, 3);
  const Digraph d = ncayley_digraph(g, f);
  EXPECT_EQ(d.vertex_count(), 18u);
  EXPECT_EQ(d.arc_count(), 0u);

  ConnectionFamily loops(6, 2);
  loops.at(1, 1).insert(Group::identity());
  EXPECT_THROW(ncayley_digraph(g, loops), LoopError);
}

TEST(BuildNCayley, MatchesDefinitionAndArcCount) {
  std::mt19937_64 rng(21);
  for (const char* spec : {"Z5", "S3", "Q8", "Z3^2"}) {
    const Group g = parse_group(spec);
    for (int trial = 0; trial < 10; ++trial) {
      const ConnectionFamily f = random_family(g, 3, 0.3, false, rng);
      const Digraph d = ncayley_digraph(g, f);
      const auto expected = arcs_by_formula(g, f);
      std::size_t total = 0;
      for (std::size_t i = 0; i < 3; ++i)
        for (std::size_t j = 0; j < 3; ++j) total += f.at(i, j).size();
      EXPECT_EQ(d.arc_count(), g.order() * total);
      const auto arcs = d.arcs();
      const std::set<std::pair<Vertex, Vertex>> actual(arcs.begin(), arcs.end());
      EXPECT_EQ(actual, expected);
    }
  }
}

TEST(BuildNCayley, DistinctFamiliesGiveDistinctDigraphs) {
  std::mt19937_64 rng(8);
  const Group g = parse_group("D4");
  for (int trial = 0; trial < 50; ++trial) {
    const ConnectionFamily f = random_family(g, 2, 0.3, false, rng);
    ConnectionFamily h = f;
    const Element t = static_cast<Element>(rng() % (g.order() - 1) + 1);
    if (h.at(0, 1).contains(t))
      h.at(0, 1).erase(t);
    else
      h.at(0, 1).insert(t);
    EXPECT_NE(ncayley_digraph(g, f), ncayley_digraph(g, h));
  }
}

TEST(RightTranslation, IdentityAndActionLaw) {
  const Group g = parse_group("S3");
  EXPECT_TRUE(right_translation(g, 3, Group::identity()).is_identity());
  std::mt19937_64 rng(4);
  for (int trial = 0; trial < 30; ++trial) {
    const Element x = static_cast<Element>(rng() % 6), y = static_cast<Element>(rng() % 6);
    // (p * q) applies p first, so R(x) * R(y) sends v_i to (v x y)_i.
    EXPECT_EQ(right_translation(g, 3, x) * right_translation(g, 3, y), right_translation(g, 3, g.mul(x, y)));
  }
}

TEST(RightTranslation, PreservesRandomFamiliesOverZ3Squared) {
  const Group g = parse_group("Z3^2");
  std::mt19937_64 rng(100);
  for (int trial = 0; trial < 100; ++trial) {
    const NCayleyDigraph x = build_ncayley(g, random_family(g, 3, 0.25, false, rng));
    for (Element h = 0; h < g.order(); ++h) {
      const Permutation p = right_translation(x, h);
      for (const auto& [u, v] : x.digraph.arcs()) ASSERT_TRUE(x.digraph.has_arc(p(u), p(v)));
    }
  }
}

TEST(RightTranslation, GroupIsSemiregularWithPartsAsOrbits) {
  for (const char* spec : {"Z1", "Z4", "S3", "Q8", "Z2^3"}) {
    const Group g = parse_group(spec);
    for (std::size_t n : {1u, 2u, 4u}) {
      const PermGroup r = right_translation_group(g, n);
      EXPECT_EQ(r.order(), g.order());
      EXPECT_TRUE(r.is_semiregular());
      EXPECT_EQ(r.orbits(), ncayley_parts(g.order(), n));
    }
  }
}

TEST(ValencyProfile, Examples) {
  const Group z3 = parse_group("Z3");
  const ValencyProfile p = valency_profile(recipe_small_cyclic(z3, 4).family);
  EXPECT_EQ(p.row_sums, (std::vector<std::size_t>{2, 2, 2, 2}));
  EXPECT_EQ(p.column_sums, (std::vector<std::size_t>{2, 2, 2, 2}));
  EXPECT_TRUE(p.is_constant());

  const ValencyProfile e = valency_profile(ConnectionFamily(5, 3));
  EXPECT_EQ(e.row_sums, (std::vector<std::size_t>{0, 0, 0}));
  EXPECT_TRUE(e.is_constant());
}

TEST(ValencyProfile, AgreesWithIsRegular) {
  std::mt19937_64 rng(77);
  std::size_t regular_seen = 0;
  for (const char* spec : {"Z3^2", "Z2", "S3"}) {
    const Group g = parse_group(spec);
    for (int trial = 0; trial < 100; ++trial) {
      // Sparse families hit the regular case often enough to test both sides.
      const ConnectionFamily f = random_family(g, 3, trial % 2 ? 0.5 : 0.1, false, rng);
      const Digraph d = ncayley_digraph(g, f);
      const ValencyProfile p = valency_profile(f);
      EXPECT_EQ(is_regular(d).has_value(), p.is_constant());
      if (p.is_constant()) {
        EXPECT_EQ(*is_regular(d), p.row_sums[0]);
        ++regular_seen;
      }
    }
  }
  EXPECT_GT(regular_seen, 0u);
}

TEST(FamilyIo, JsonRoundTrip) {
  const Group g = parse_group("Q8");
  std::mt19937_64 rng(2);
  const ConnectionFamily f = random_family(g, 3, 0.3, true, rng);
  const Json j = family_to_json(g, f);
  EXPECT_EQ(j["group"], "Q8");
  const auto [h, back] = family_from_json(j);
  EXPECT_EQ(h, g);
  EXPECT_EQ(back, f);
  EXPECT_THROW(family_from_json(Json::parse(R"({"group":"Q8","n":2,"sets":{"0;1":[1]}})")), ParseError);
  EXPECT_THROW(family_from_json(Json::parse(R"({"group":"Q8","n":2,"sets":{"0,1":[9]}})")), ParseError);
}

TEST(FamilyFromDigraph, RecoversFamily) {
  const Group g = parse_group("D4");
  std::mt19937_64 rng(6);
  for (int trial = 0; trial < 10; ++trial) {
    const ConnectionFamily f = random_family(g, 3, 0.3, false, rng);
    EXPECT_EQ(family_from_digraph(g, 3, ncayley_digraph(g, f)), f);
  }
}

}  // namespace
}  // namespace pdr
