#pragma once

#include <algorithm>
#include <cstddef>
#include <initializer_list>
#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "pdr/errors.hpp"
#include "pdr/group.hpp"
#include "pdr/ncayley.hpp"
#include "pdr/pdr_check.hpp"

namespace pdr {

/// A connection family produced by one of the explicit constructions, with
/// the ingredients that went into it.
struct RecipeOutput {
  ConnectionFamily family;
  std::string provenance;
  std::vector<std::pair<std::string, ElementSet>> sets;
  std::vector<std::pair<std::string, Element>> elements;

  const ElementSet& set(const std::string& name) const {
    for (const auto& [k, v] : sets)
      if (k == name) return v;
    throw PreconditionError("recipe has no set named '" + name + "'");
  }
  Element element(const std::string& name) const {
    for (const auto& [k, v] : elements)
      if (k == name) return v;
    throw PreconditionError("recipe has no element named '" + name + "'");
  }
};

namespace detail {

inline ElementSet singleton(const Group& g, Element x) { return ElementSet(g.order(), {x}); }

inline ElementSet with_identity(const ElementSet& s) {
  ElementSet out = s;
  out.insert(Group::identity());
  return out;
}

/// `count` elements of the given order, each outside the subgroup generated
/// by the previous ones. Elements labelled a, b, c, ... are used when they
/// qualify; otherwise the lowest qualifying indices are taken.
inline std::vector<Element> independent_generators(const Group& g, std::size_t count,
                                                   std::size_t order) {
  auto qualifies = [&](const std::vector<Element>& chosen, Element x) {
    if (g.element_order(x) != order) return false;
    return !generated_subgroup(g, ElementSet(g.order(), chosen)).contains(x);
  };
  std::vector<Element> chosen;
  bool labelled = true;
  for (std::size_t i = 0; i < count && labelled; ++i) {
    const std::string name(1, static_cast<char>('a' + i));
    const auto& labels = g.labels();
    const auto it = std::find(labels.begin(), labels.end(), name);
    if (it == labels.end() || !qualifies(chosen, static_cast<Element>(it - labels.begin()))) {
      labelled = false;
      break;
    }
    chosen.push_back(static_cast<Element>(it - labels.begin()));
  }
  if (labelled) return chosen;
  chosen.clear();
  for (Element x = 1; x < g.order() && chosen.size() < count; ++x)
    if (qualifies(chosen, x)) chosen.push_back(x);
  if (chosen.size() < count) throw PreconditionError("group lacks the required generators");
  return chosen;
}

inline void require(bool ok, const std::string& what) {
  if (!ok) throw PreconditionError(what);
}

/// Digon matchings T[i][i+1] = T[i+1][i] = {1} for every i in Z_n except the
/// listed ones.
inline void add_matchings(ConnectionFamily& f, const Group& g, std::vector<std::size_t> skip) {
  const std::size_t n = f.n();
  for (std::size_t i = 0; i < n; ++i) {
    if (std::find(skip.begin(), skip.end(), i) != skip.end()) continue;
    f.set(i, (i + 1) % n, singleton(g, Group::identity()));
    f.set((i + 1) % n, i, singleton(g, Group::identity()));
  }
}

}  // namespace detail

/// Which family to emit. The directed-cycle variant (T[1][2] = {1},
/// T[2][1] = {a}) joins G_1 and G_2 by a directed cycle of length 2|G| on
/// which each x_1 is followed by x_2. The digon variant (T[1][2] = T[2][1] = {a}) gives
/// digons for Z2 (Aut order 12 at n = 3) and, for Z3, a 6-cycle on which x_1
/// and x_2 are antipodal (Aut order 6). It is kept for regression tests.
enum class SmallCyclicVariant { kDirectedCycle, kDigons };

/// n-PDR of Z2 or Z3 for n >= 3: digon matchings between consecutive parts
/// except G_1/G_2, which are joined by a directed cycle of length 2|G|.
inline RecipeOutput recipe_small_cyclic(const Group& g, std::size_t n,
                                        SmallCyclicVariant variant = SmallCyclicVariant::kDirectedCycle) {
  detail::require(g.order() == 2 || g.order() == 3, "small-cyclic recipe needs a group of order 2 or 3");
  detail::require(n >= 3, "small-cyclic recipe needs n >= 3");
  const Element a = 1;
  ConnectionFamily f(g.order(), n);
  detail::add_matchings(f, g, {1});
  const bool digons = variant == SmallCyclicVariant::kDigons;
  f.set(1, 2, detail::singleton(g, digons ? a : Group::identity()));
  f.set(2, 1, detail::singleton(g, a));
  return RecipeOutput{std::move(f), digons ? "small-cyclic-digons" : "small-cyclic", {}, {{"a", a}}};
}

/// n-PDR of Z2^2 = <a> x <b> for n >= 3.
inline RecipeOutput recipe_klein(const Group& g, std::size_t n) {
  detail::require(g.order() == 4 && is_elementary_abelian_2(g), "klein recipe needs Z2^2");
  detail::require(n >= 3, "klein recipe needs n >= 3");
  const auto gens = detail::independent_generators(g, 2, 2);
  const Element a = gens[0], b = gens[1];
  ConnectionFamily f(g.order(), n);
  detail::add_matchings(f, g, {0, 1});
  f.set(0, 1, detail::singleton(g, Group::identity()));
  f.set(1, 0, detail::singleton(g, a));
  f.set(1, 2, detail::singleton(g, b));
  f.set(2, 1, detail::singleton(g, a));
  return RecipeOutput{std::move(f), "klein", {}, {{"a", a}, {"b", b}}};
}

/// n-PDR of Z2^3 = <a> x <b> x <c> for n >= 3. Every 2-regular choice
/// (singleton T[0][1], T[1][0], T[1][2], T[2][1] with digon matchings
/// elsewhere) keeps an extra symmetry, so the digraph is 3-regular:
/// T[0][1] = T[1][2] = {1, a}, T[1][0] = {1}, T[2][1] = {b}, and
/// T[i][i+1] = {1, c}, T[i+1][i] = {1} for i not in {0, 1}.
inline RecipeOutput recipe_z2_cubed(const Group& g, std::size_t n) {
  detail::require(g.order() == 8 && is_elementary_abelian_2(g), "z2-cubed recipe needs Z2^3");
  detail::require(n >= 3, "z2-cubed recipe needs n >= 3");
  const auto gens = detail::independent_generators(g, 3, 2);
  const Element a = gens[0], b = gens[1], c = gens[2];
  ConnectionFamily f(g.order(), n);
  for (std::size_t i = 2; i < n; ++i) {
    f.set(i, (i + 1) % n, ElementSet(g.order(), {Group::identity(), c}));
    f.set((i + 1) % n, i, detail::singleton(g, Group::identity()));
  }
  f.set(0, 1, ElementSet(g.order(), {Group::identity(), a}));
  f.set(1, 0, detail::singleton(g, Group::identity()));
  f.set(1, 2, ElementSet(g.order(), {Group::identity(), a}));
  f.set(2, 1, detail::singleton(g, b));
  return RecipeOutput{std::move(f), "z2-cubed", {}, {{"a", a}, {"b", b}, {"c", c}}};
}

/// The singleton family T[0][1] = {a}, T[1][0] = {b}, T[1][2] = {a},
/// T[2][1] = {c}. Its automorphism group has order 32: x_i -> phi(x) h_i with
/// phi(v) = v + f(v) k, f(a) = f(b) = f(c) = 1 and k in {1, ab, ac, bc}.
/// Kept for regression tests.
inline RecipeOutput recipe_z2_cubed_singletons(const Group& g, std::size_t n) {
  detail::require(g.order() == 8 && is_elementary_abelian_2(g), "z2-cubed recipe needs Z2^3");
  detail::require(n >= 3, "z2-cubed recipe needs n >= 3");
  const auto gens = detail::independent_generators(g, 3, 2);
  const Element a = gens[0], b = gens[1], c = gens[2];
  ConnectionFamily f(g.order(), n);
  detail::add_matchings(f, g, {0, 1});
  f.set(0, 1, detail::singleton(g, a));
  f.set(1, 0, detail::singleton(g, b));
  f.set(1, 2, detail::singleton(g, a));
  f.set(2, 1, detail::singleton(g, c));
  return RecipeOutput{std::move(f), "z2-cubed-singletons", {}, {{"a", a}, {"b", b}, {"c", c}}};
}

namespace detail {

/// Shared preconditions of the DRR-based recipes: Cay(G, R) is a DRR with
/// 1 not in R and |R| < bound, and L is a valid companion for R.
inline void require_drr_ingredients(const Group& g, const ElementSet& r, const ElementSet& l,
                                    bool strict_bound) {
  require(r.universe() == g.order() && l.universe() == g.order(), "R and L must be subsets of G");
  require(!r.contains(Group::identity()), "R must not contain the identity");
  // 2|R| < |G| - 1, or 2|R| < |G| for the Haar companion bound.
  const std::size_t limit = strict_bound ? g.order() - 1 : g.order();
  require(2 * r.size() < limit, strict_bound ? "|R| must be below (|G|-1)/2" : "|R| must be below |G|/2");
  require(l.size() == r.size(), "|L| must equal |R|");
  const ElementSet forbidden = with_identity(set_inverse(g, r));
  require(set_intersection(l, forbidden).empty(), "L must avoid R^-1 and the identity");
  require(is_drr(g, r), "Cay(G, R) must be a DRR");
}

}  // namespace detail

/// Haar 2-PDR Cay(G, R u {1}, L u {1}) from a DRR connection set R and a
/// companion L.
inline RecipeOutput recipe_hdr2(const Group& g, const ElementSet& r, const ElementSet& l) {
  detail::require_drr_ingredients(g, r, l, false);
  ConnectionFamily f(g.order(), 2);
  f.set(0, 1, detail::with_identity(r));
  f.set(1, 0, detail::with_identity(l));
  return RecipeOutput{std::move(f), "haar", {{"R", r}, {"L", l}}, {}};
}

/// n-PDR of an elementary abelian 2-group with a DRR, n >= 3.
inline RecipeOutput recipe_case11(const Group& g, std::size_t n, const ElementSet& r, const ElementSet& l,
                                  std::optional<Element> b = std::nullopt) {
  detail::require(n >= 3, "recipe needs n >= 3");
  detail::require(is_elementary_abelian_2(g), "G must be an elementary abelian 2-group");
  detail::require(g.order() >= 32, "elementary abelian 2-groups below order 32 have no DRR");
  detail::require_drr_ingredients(g, r, l, true);
  detail::require(is_haar_pdr(g, detail::with_identity(r), detail::with_identity(l)),
                  "Cay(G, R u {1}, L u {1}) must be a 2-PDR");
  if (!b) {
    for (Element x = 1; x < g.order() && !b; ++x)
      if (!r.contains(x)) b = x;
  }
  detail::require(*b != Group::identity() && !r.contains(*b), "b must be a non-identity element outside R");

  const ElementSet r1 = detail::with_identity(r);
  ElementSet rb = r;
  rb.insert(*b);
  ConnectionFamily f(g.order(), n);
  for (std::size_t i = 0; i < n; ++i) f.set(i, (i + 1) % n, r1);
  f.set(1, 0, detail::with_identity(l));
  for (std::size_t i = 1; i < n; ++i) f.set((i + 1) % n, i, rb);
  return RecipeOutput{std::move(f), "elementary-abelian-drr", {{"R", r}, {"L", l}}, {{"b", *b}}};
}

/// n-PDR of a group with a DRR that is not an elementary abelian 2-group,
/// n >= 3. S and W are chosen greedily in element order.
inline RecipeOutput recipe_case12(const Group& g, std::size_t n, const ElementSet& r, const ElementSet& l,
                                  std::optional<Element> a = std::nullopt) {
  detail::require(n >= 3, "recipe needs n >= 3");
  detail::require(!is_elementary_abelian_2(g), "G must not be an elementary abelian 2-group");
  detail::require_drr_ingredients(g, r, l, true);
  detail::require(is_haar_pdr(g, detail::with_identity(r), detail::with_identity(l)),
                  "Cay(G, R u {1}, L u {1}) must be a 2-PDR");
  if (!a) {
    for (Element x = 1; x < g.order() && !a; ++x)
      if (g.element_order(x) >= 3) a = x;
  }
  detail::require(a && *a < g.order() && g.element_order(*a) >= 3, "a must have order at least 3");

  const std::size_t extra = r.size() - 1;
  ElementSet s(g.order(), {Group::identity(), *a});
  for (Element x = 0; x < g.order() && s.size() < r.size() + 1; ++x) s.insert(x);
  const ElementSet s_inv = set_inverse(g, s);
  ElementSet w(g.order());
  for (Element x = 0; x < g.order() && w.size() < extra; ++x)
    if (!s_inv.contains(x)) w.insert(x);
  if (w.size() != extra) throw VerificationError("not enough room for W outside S^-1");
  ElementSet k = w;
  k.insert(Group::identity());
  k.insert(g.inv(*a));

  if (s.size() != r.size() + 1 || k.size() != r.size() + 1 ||
      set_intersection(s_inv, k) != ElementSet(g.order(), {Group::identity(), g.inv(*a)}))
    throw VerificationError("derived S, K violate |S| = |K| = |R|+1 or S^-1 n K = {1, a^-1}");

  ConnectionFamily f(g.order(), n);
  f.set(0, 1, detail::with_identity(r));
  f.set(1, 0, detail::with_identity(l));
  for (std::size_t i = 1; i < n; ++i) {
    f.set(i, (i + 1) % n, s);
    f.set((i + 1) % n, i, k);
  }
  return RecipeOutput{std::move(f),
                      "drr-extension",
                      {{"R", r}, {"L", l}, {"S", s}, {"W", w}, {"K", k}},
                      {{"a", *a}, {"o", static_cast<Element>(g.element_order(*a))}}};
}

/// Which of the three DRR-less groups admitting a 2-PDR this is, if any.
enum class ExceptionalGroup { kNone, kZ2to4, kQ8, kZ3squared };

inline ExceptionalGroup exceptional_kind(const Group& g) {
  if (g.order() == 16 && is_elementary_abelian_2(g)) return ExceptionalGroup::kZ2to4;
  if (g.order() == 8 && !g.is_abelian() && g.involution_count() == 1) return ExceptionalGroup::kQ8;
  if (g.order() == 9 && g.exponent() == 3) return ExceptionalGroup::kZ3squared;
  return ExceptionalGroup::kNone;
}

/// Hardcoded R, L, K for Z2^4, Q8 and Z3^2: Cay(G, R, L) is a 2-PDR,
/// |R n L^-1| = 1, |R| = |L| = |K| >= 3 and |R n K^-1| = |R| - 1.
struct ExceptionalSets {
  ElementSet r, l, k;
  std::vector<std::pair<std::string, Element>> generators;
};

inline ExceptionalSets exceptional_sets(const Group& g) {
  const auto kind = exceptional_kind(g);
  detail::require(kind != ExceptionalGroup::kNone, "group is not Z2^4, Q8 or Z3^2");
  ExceptionalSets out;
  const std::size_t order = g.order();
  auto m = [&](std::initializer_list<Element> xs) {
    Element p = Group::identity();
    for (Element x : xs) p = g.mul(p, x);
    return p;
  };
  if (kind == ExceptionalGroup::kZ2to4) {
    const auto gens = detail::independent_generators(g, 4, 2);
    const Element a = gens[0], b = gens[1], c = gens[2], d = gens[3];
    out.r = ElementSet(order, {Group::identity(), a, b, c, d, m({a, d})});
    out.l = ElementSet(order, {Group::identity(), m({a, c}), m({b, c}), m({a, b, c}), m({a, b, d}), m({b, c, d})});
    out.generators = {{"a", a}, {"b", b}, {"c", c}, {"d", d}};
  } else {
    const std::size_t gen_order = kind == ExceptionalGroup::kQ8 ? 4 : 3;
    const auto gens = detail::independent_generators(g, 2, gen_order);
    const Element a = gens[0], b = gens[1];
    out.r = ElementSet(order, {Group::identity(), a, b});
    if (kind == ExceptionalGroup::kQ8)
      out.l = ElementSet(order, {m({a, a}), g.inv(b), m({a, b})});
    else
      out.l = ElementSet(order, {a, g.inv(b), m({a, b})});
    out.generators = {{"a", a}, {"b", b}};
  }
  const Element ab = m({out.generators[0].second, out.generators[1].second});
  ElementSet r_inv = set_inverse(g, out.r);
  r_inv.erase(Group::identity());
  out.k = r_inv;
  out.k.insert(ab);
  return out;
}

/// n-PDR (n >= 3) of Z2^4, Q8 or Z3^2 from the hardcoded sets:
/// T[0][1] = R, T[1][0] = L, T[i][i+1] = R and T[i+1][i] = K for i != 0.
/// For n = 2 the Haar digraph Cay(G, R, L) is returned.
inline RecipeOutput recipe_exceptional(const Group& g, std::size_t n) {
  detail::require(n >= 2, "exceptional recipe needs n >= 2");
  const ExceptionalSets e = exceptional_sets(g);
  const ElementSet rk = set_intersection(e.r, set_inverse(g, e.k));
  if (!is_haar_pdr(g, e.r, e.l) || set_intersection(e.r, set_inverse(g, e.l)).size() != 1 ||
      e.r.size() != e.l.size() || e.k.size() != e.r.size() || e.r.size() < 3 ||
      rk.size() != e.r.size() - 1)
    throw VerificationError("hardcoded R, L, K fail their defining conditions for " + g.spec());

  ConnectionFamily f(g.order(), n);
  f.set(0, 1, e.r);
  f.set(1, 0, e.l);
  if (n >= 3) {
    for (std::size_t i = 1; i < n; ++i) {
      f.set(i, (i + 1) % n, e.r);
      f.set((i + 1) % n, i, e.k);
    }
  }
  return RecipeOutput{std::move(f), n == 2 ? "exceptional-haar" : "exceptional",
                      {{"R", e.r}, {"L", e.l}, {"K", e.k}}, e.generators};
}

}  // namespace pdr
