#include <algorithm>
#include <numeric>
#include <random>
#include <vector>

#include <gtest/gtest.h>

#include "pdr/automorphisms.hpp"
#include "pdr/group_zoo.hpp"

namespace pdr {
namespace {

Digraph directed_cycle(std::size_t k) {
  Digraph d(k);
  for (std::size_t i = 0; i < k; ++i) d.add_arc(static_cast<Vertex>(i), static_cast<Vertex>((i + 1) % k));
  return d;
}

// Loop-free digraph on n vertices whose arcs are the set bits of `mask`, in
// row-major order over ordered pairs (u, v) with u != v.
Digraph digraph_from_mask(std::size_t n, std::uint64_t mask) {
  Digraph d(n);
  std::size_t bit = 0;
  for (Vertex u = 0; u < n; ++u)
    for (Vertex v = 0; v < n; ++v) {
      if (u == v) continue;
      if ((mask >> bit) & 1u) d.add_arc(u, v);
      ++bit;
    }
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

Digraph relabel(const Digraph& d, const Permutation& p) {
  Digraph out(d.vertex_count());
  for (const auto& [u, v] : d.arcs()) out.add_arc(p(u), p(v));
  return out;
}

TEST(Refine, DirectedTriangleUnitPartitionIsStable) {
  const auto p = refine(directed_cycle(3), OrderedPartition::unit(3));
  EXPECT_EQ(p.cell_count(), 1u);
}

TEST(Refine, PathSplitsIntoSingletons) {
  Digraph d(3);
  d.add_arc(0, 1);
  d.add_arc(1, 2);
  const auto p = refine(d, OrderedPartition::unit(3));
  ASSERT_TRUE(p.is_discrete());
  // Fragments ordered by invariant: vertex 2 (out 0) < vertex 1 (out 1, in 1)
  // < vertex 0 (out 1, in 0) under (out, in, digon) ordering.
  EXPECT_EQ(p.cell(0), std::vector<Vertex>{2});
  EXPECT_EQ(p.cell(1), std::vector<Vertex>{0});
  EXPECT_EQ(p.cell(2), std::vector<Vertex>{1});
}

TEST(Refine, IsIdempotent) {
  std::mt19937_64 rng(11);
  for (int trial = 0; trial < 100; ++trial) {
    const auto d = random_digraph(9, 0.3, rng);
    const auto once = refine(d, OrderedPartition::unit(9));
    EXPECT_EQ(refine(d, once), once);
  }
}

TEST(Automorphisms, EmptyDigraphIsSymmetricGroup) {
  for (std::size_t k = 0; k <= 12; ++k) {
    GroupOrder factorial = 1;
    for (std::size_t i = 2; i <= k; ++i) factorial *= i;
    EXPECT_EQ(automorphisms(Digraph(k)).order(), factorial) << k;
  }
  GroupOrder f30 = 1;
  for (int i = 2; i <= 30; ++i) f30 *= i;
  EXPECT_EQ(automorphisms(Digraph(30)).order(), f30);
}

TEST(Automorphisms, SmallExamples) {
  EXPECT_EQ(automorphisms(directed_cycle(4)).order(), 4);
  EXPECT_EQ(brute_force_automorphisms(directed_cycle(4)).order(), 4);
  EXPECT_EQ(brute_force_automorphisms(Digraph(1)).order(), 1);
  EXPECT_EQ(automorphisms(Digraph(1)).order(), 1);
}

TEST(Automorphisms, BruteForceRejectsLargeInputs) {
  EXPECT_THROW(brute_force_automorphisms(Digraph(9)), PreconditionError);
}

TEST(Automorphisms, CayleyDigraphOfQuaternionMatchesBruteForce) {
  const Group q8 = make_quaternion();
  const Element a = q8.find("a"), b = q8.find("b");
  Digraph d(8);
  for (Element g = 0; g < 8; ++g)
    for (Element s : {a, b}) d.add_arc(g, q8.mul(s, g));
  const auto fast = automorphisms(d);
  const auto slow = brute_force_automorphisms(d);
  EXPECT_EQ(fast.order(), slow.order());
  EXPECT_EQ(fast.order() % 8, 0);
}

TEST(Automorphisms, ColouredSearchRespectsCells) {
  // Empty digraph on 5 vertices with colour classes {0,1} and {2,3,4}.
  const OrderedPartition colours({{0, 1}, {2, 3, 4}}, 5);
  EXPECT_EQ(automorphisms(Digraph(5), colours).order(), 12);
  EXPECT_EQ(brute_force_automorphisms(Digraph(5), colours).order(), 12);
}

TEST(OracleEquivalence, AllDigraphsUpToFourVertices) {
  for (std::size_t n = 0; n <= 4; ++n) {
    const std::uint64_t count = std::uint64_t{1} << (n * (n - (n ? 1 : 0)));
    for (std::uint64_t mask = 0; mask < count; ++mask) {
      const Digraph d = digraph_from_mask(n, mask);
      ASSERT_EQ(automorphisms(d).order(), brute_force_automorphisms(d).order()) << n << " " << mask;
    }
  }
}

TEST(OracleEquivalence, RandomDigraphsFiveToEightVertices) {
  std::mt19937_64 rng(2024);
  std::uniform_int_distribution<std::size_t> size(5, 8);
  std::uniform_real_distribution<double> density(0.1, 0.6);
  for (int trial = 0; trial < 200; ++trial) {
    const Digraph d = random_digraph(size(rng), density(rng), rng);
    const auto fast = automorphisms(d);
    ASSERT_EQ(fast.order(), brute_force_automorphisms(d).order()) << trial;
    for (const auto& g : fast.generators()) ASSERT_TRUE(preserves_arcs(d, g));
  }
}

TEST(Automorphisms, InvariantUnderRelabelling) {
  std::mt19937_64 rng(7);
  for (int trial = 0; trial < 50; ++trial) {
    const std::size_t n = 6 + trial % 20;
    const Digraph d = random_digraph(n, trial % 2 ? 0.2 : 0.5, rng);
    std::vector<Vertex> image(n);
    std::iota(image.begin(), image.end(), Vertex{0});
    std::shuffle(image.begin(), image.end(), rng);
    const Permutation p(image);
    EXPECT_EQ(automorphisms(d).order(), automorphisms(relabel(d, p)).order());
  }
}

TEST(Automorphisms, GeneratorsPreserveArcsOnSymmetricInputs) {
  // Disjoint union of directed cycles: lots of symmetry, several orbits.
  Digraph d(12);
  for (Vertex base : {0u, 4u, 8u})
    for (Vertex i = 0; i < 4; ++i) d.add_arc(base + i, base + (i + 1) % 4);
  const auto group = automorphisms(d);
  EXPECT_EQ(group.order(), 4 * 4 * 4 * 6);
  for (const auto& g : group.generators()) EXPECT_TRUE(preserves_arcs(d, g));
}

TEST(PermGroup, OrbitsAndSemiregularity) {
  const PermGroup trivial(5, {});
  EXPECT_EQ(trivial.orbits().size(), 5u);
  EXPECT_TRUE(trivial.is_semiregular());

  const PermGroup sym(4, {Permutation({1, 0, 2, 3}), Permutation({1, 2, 3, 0})});
  EXPECT_EQ(sym.order(), 24);
  EXPECT_EQ(sym.orbits().size(), 1u);
  EXPECT_FALSE(sym.is_semiregular());
  EXPECT_EQ(sym.point_stabilizer_order(2), 6);

  const PermGroup rotation(4, {Permutation({1, 2, 3, 0})});
  EXPECT_TRUE(rotation.is_semiregular());
  EXPECT_TRUE(rotation.contains(Permutation({2, 3, 0, 1})));
  EXPECT_FALSE(rotation.contains(Permutation({1, 0, 2, 3})));
}

TEST(PermGroup, SchreierSimsMatchesKnownOrders) {
  // AGL(1,7): x -> x+1 and x -> 3x.
  const PermGroup agl(7, {Permutation({1, 2, 3, 4, 5, 6, 0}), Permutation({0, 3, 6, 2, 5, 1, 4})});
  EXPECT_EQ(agl.order(), 42);
  const PermGroup s8(8, {Permutation({1, 0, 2, 3, 4, 5, 6, 7}), Permutation({1, 2, 3, 4, 5, 6, 7, 0})});
  EXPECT_EQ(s8.order(), 40320);
  const PermGroup a5(5, {Permutation({1, 2, 0, 3, 4}), Permutation({0, 1, 3, 4, 2}),
                         Permutation({1, 2, 3, 4, 0})});
  EXPECT_EQ(a5.order(), 60);
}

}  // namespace
}  // namespace pdr
