#include <random>
#include <sstream>
#include <vector>

#include <gtest/gtest.h>

#include "pdr/digraph.hpp"
#include "pdr/digraph_io.hpp"
#include "pdr/group_zoo.hpp"
#include "pdr/ncayley.hpp"
#include "pdr/recipes.hpp"

namespace pdr {
namespace {

Digraph directed_cycle(std::size_t k) {
  Digraph d(k);
  for (std::size_t i = 0; i < k; ++i) d.add_arc(static_cast<Vertex>(i), static_cast<Vertex>((i + 1) % k));
  return d;
}

Digraph random_digraph(std::size_t n, double p, std::mt19937_64& rng) {
  std::bernoulli_distribution coin(p);
  Digraph d(n);
  for (Vertex u = 0; u < n; ++u)
    for (Vertex v = 0; v < n; ++v)
      if (u != v && coin(rng)) d.add_arc(u, v);
  return d;
}

std::vector<Vertex> all_vertices(const Digraph& d) {
  std::vector<Vertex> vs(d.vertex_count());
  for (Vertex v = 0; v < d.vertex_count(); ++v) vs[v] = v;
  return vs;
}

std::vector<Vertex> join(const std::vector<Vertex>& a, const std::vector<Vertex>& b) {
  std::vector<Vertex> out = a;
  out.insert(out.end(), b.begin(), b.end());
  return out;
}

// Every vertex has out- and in-degree 1 inside d and the arcs form one cycle.
bool is_single_directed_cycle(const Digraph& d) {
  if (is_regular(d) != std::optional<std::size_t>(1)) return false;
  Vertex v = 0;
  for (std::size_t step = 1; step <= d.vertex_count(); ++step) {
    v = d.out_neighbors(v).front();
    if (v == 0) return step == d.vertex_count();
  }
  return false;
}

TEST(DigraphTest, RejectsLoopsAndBadVertices) {
  Digraph d(3);
  EXPECT_THROW(d.add_arc(1, 1), LoopError);
  EXPECT_THROW(d.add_arc(0, 3), IndexError);
  d.add_arc(0, 1);
  d.add_arc(0, 1);
  EXPECT_EQ(d.arc_count(), 1u);
  EXPECT_TRUE(d.has_arc(0, 1));
  EXPECT_FALSE(d.has_arc(1, 0));
}

TEST(IsRegular, Examples) {
  EXPECT_EQ(is_regular(Digraph(5)), std::optional<std::size_t>(0));
  EXPECT_EQ(is_regular(directed_cycle(3)), std::optional<std::size_t>(1));
  Digraph path(3);
  path.add_arc(0, 1);
  path.add_arc(1, 2);
  EXPECT_FALSE(is_regular(path).has_value());

  const Group z2 = parse_group("Z2");
  const Digraph fig1 = ncayley_digraph(z2, recipe_small_cyclic(z2, 3).family);
  EXPECT_EQ(fig1.vertex_count(), 6u);
  EXPECT_EQ(is_regular(fig1), std::optional<std::size_t>(2));
}

TEST(Induced, EmptyAndWhole) {
  std::mt19937_64 rng(11);
  const Digraph d = random_digraph(7, 0.4, rng);
  EXPECT_EQ(induced(d, std::vector<Vertex>{}).vertex_count(), 0u);
  EXPECT_EQ(induced(d, all_vertices(d)), d);
  EXPECT_THROW(induced(d, std::vector<Vertex>{9}), IndexError);
}

TEST(Induced, RelabelsInAscendingOrder) {
  Digraph d(5);
  d.add_arc(4, 1);
  d.add_arc(1, 3);
  const auto sub = induced_with_map(d, std::vector<Vertex>{4, 1});
  EXPECT_EQ(sub.original, (std::vector<Vertex>{1, 4}));
  EXPECT_TRUE(sub.digraph.has_arc(1, 0));
  EXPECT_EQ(sub.digraph.arc_count(), 1u);
}

TEST(Induced, KleinPartsGiveTwoDirectedFourCycles) {
  const Group g = parse_group("Z2^2");
  const NCayleyDigraph x = build_ncayley(g, recipe_klein(g, 3).family);
  for (auto [i, j] : {std::pair{0, 1}, std::pair{1, 2}}) {
    const Digraph sub = induced(x.digraph, join(x.part(i), x.part(j)));
    ASSERT_EQ(is_regular(sub), std::optional<std::size_t>(1));
    EXPECT_EQ(sub.arc_count(), 8u);
    // Two components, each a directed 4-cycle: following 4 arcs returns home.
    for (Vertex v = 0; v < sub.vertex_count(); ++v) {
      Vertex w = v;
      for (int step = 0; step < 4; ++step) {
        w = sub.out_neighbors(w).front();
        if (step < 3) {
          EXPECT_NE(w, v);
        }
      }
      EXPECT_EQ(w, v);
    }
  }
}

TEST(Induced, Z3FirstAndSecondPartsFormDirectedSixCycle) {
  const Group g = parse_group("Z3");
  for (std::size_t n : {3u, 5u}) {
    const NCayleyDigraph x = build_ncayley(g, recipe_small_cyclic(g, n).family);
    EXPECT_TRUE(is_single_directed_cycle(induced(x.digraph, join(x.part(1), x.part(2)))));
  }
}

TEST(UndirectedDegree, Examples) {
  const Digraph c = directed_cycle(5);
  for (Vertex v = 0; v < 5; ++v) EXPECT_EQ(undirected_degree(c, v), 0u);
  Digraph d(3);
  d.add_arc(0, 1);
  d.add_arc(1, 0);
  d.add_arc(0, 2);
  EXPECT_EQ(undirected_degree(d, 0), 1u);
  EXPECT_EQ(undirected_degree(d, 1), 1u);
  EXPECT_EQ(undirected_degree(d, 2), 0u);
}

TEST(UndirectedDegree, CountsDigonPartners) {
  std::mt19937_64 rng(5);
  for (int trial = 0; trial < 20; ++trial) {
    const Digraph d = random_digraph(9, 0.5, rng);
    std::size_t total = 0;
    for (Vertex v = 0; v < 9; ++v) {
      std::size_t partners = 0;
      for (Vertex u = 0; u < 9; ++u) partners += d.has_arc(u, v) && d.has_arc(v, u);
      EXPECT_EQ(undirected_degree(d, v), partners);
      total += partners;
    }
    EXPECT_EQ(total % 2, 0u);
  }
}

TEST(PerfectMatching, SmallCyclicParts) {
  const Group g = parse_group("Z2");
  const NCayleyDigraph x4 = build_ncayley(g, recipe_small_cyclic(g, 4).family);
  EXPECT_TRUE(is_perfect_matching_between(x4.digraph, x4.part(2), x4.part(3)));
  const NCayleyDigraph x3 = build_ncayley(g, recipe_small_cyclic(g, 3).family);
  EXPECT_FALSE(is_perfect_matching_between(x3.digraph, x3.part(1), x3.part(2)));
}

TEST(PerfectMatching, NoArcsBetween) {
  const Digraph d(4);
  EXPECT_FALSE(is_perfect_matching_between(d, std::vector<Vertex>{0, 1}, std::vector<Vertex>{2, 3}));
  EXPECT_TRUE(is_perfect_matching_between(d, std::vector<Vertex>{}, std::vector<Vertex>{}));
}

TEST(DigraphInvariants, DegreeSumsEqualArcCount) {
  std::mt19937_64 rng(3);
  for (int trial = 0; trial < 20; ++trial) {
    const Digraph d = random_digraph(10, 0.3, rng);
    std::size_t out = 0, in = 0;
    for (Vertex v = 0; v < 10; ++v) {
      out += d.out_degree(v);
      in += d.in_degree(v);
    }
    EXPECT_EQ(out, d.arc_count());
    EXPECT_EQ(in, d.arc_count());
  }
}

TEST(IsEmptyOn, Examples) {
  Digraph d(4);
  d.add_arc(0, 1);
  EXPECT_FALSE(is_empty_on(d, std::vector<Vertex>{0, 1}));
  EXPECT_TRUE(is_empty_on(d, std::vector<Vertex>{0, 2, 3}));
}

TEST(DigraphIo, JsonRoundTrip) {
  std::mt19937_64 rng(9);
  const Digraph d = random_digraph(8, 0.3, rng);
  const Json j = digraph_to_json(d);
  EXPECT_EQ(j["version"], 1);
  EXPECT_EQ(digraph_from_json(j), d);
  // arcs sorted lexicographically
  const auto arcs = j["arcs"].get<std::vector<std::vector<Vertex>>>();
  EXPECT_TRUE(std::is_sorted(arcs.begin(), arcs.end()));
}

TEST(DigraphIo, JsonErrors) {
  EXPECT_THROW(digraph_from_json(Json::parse(R"({"version":2,"vertex_count":1,"arcs":[]})")), ParseError);
  EXPECT_THROW(digraph_from_json(Json::parse(R"({"version":1,"vertex_count":2,"arcs":[[0,5]]})")), ParseError);
  EXPECT_THROW(digraph_from_json(Json::parse(R"({"version":1})")), ParseError);
}

TEST(DigraphIo, EdgeListRoundTripKeepsIsolatedVertices) {
  Digraph d(6);
  d.add_arc(0, 2);
  d.add_arc(2, 0);
  std::istringstream in(digraph_to_edges(d));
  EXPECT_EQ(digraph_from_edges(in), d);
  std::istringstream bad("0 x\n");
  EXPECT_THROW(digraph_from_edges(bad), ParseError);
}

TEST(DigraphIo, DotDrawsDigonsOnce) {
  Digraph d(3);
  d.add_arc(0, 1);
  d.add_arc(1, 0);
  d.add_arc(1, 2);
  const std::string dot = digraph_to_dot(d);
  EXPECT_NE(dot.find("0 -> 1 [dir=both];"), std::string::npos);
  EXPECT_EQ(dot.find("1 -> 0"), std::string::npos);
  EXPECT_NE(dot.find("1 -> 2;"), std::string::npos);
}

}  // namespace
}  // namespace pdr
