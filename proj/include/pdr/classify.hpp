#pragma once

#include <cstddef>
#include <cstdint>
#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "pdr/digraph.hpp"
#include "pdr/errors.hpp"
#include "pdr/group.hpp"
#include "pdr/json.hpp"
#include "pdr/ncayley.hpp"
#include "pdr/pdr_check.hpp"
#include "pdr/perm_group.hpp"
#include "pdr/recipes.hpp"
#include "pdr/search.hpp"

namespace pdr {

inline constexpr const char* kVersion = "0.1.0";

/// Groups named by the nonexistence clauses. Small orders pin the
/// isomorphism type: every group of order 1, 2 or 3 is cyclic, and Z2^k is
/// the only group of order 2^k with exponent 2.
enum class SmallGroup { kOther, kTrivial, kZ2, kZ3, kZ2squared, kZ2cubed };

inline SmallGroup small_group_kind(const Group& g) {
  switch (g.order()) {
    case 1: return SmallGroup::kTrivial;
    case 2: return SmallGroup::kZ2;
    case 3: return SmallGroup::kZ3;
    case 4: return is_elementary_abelian_2(g) ? SmallGroup::kZ2squared : SmallGroup::kOther;
    case 8: return is_elementary_abelian_2(g) ? SmallGroup::kZ2cubed : SmallGroup::kOther;
    default: return SmallGroup::kOther;
  }
}

/// Why (G, n) has no n-PDR, or nothing if it has one.
struct Verdict {
  bool admits = true;
  int clause = 0;  // 1, 2 or 3 for the negative cases
  std::string reason;
};

inline Verdict classify(const Group& g, std::size_t n) {
  if (n == 0) throw PreconditionError("n must be positive");
  const auto kind = small_group_kind(g);
  if (n == 1 && g.order() >= 3)
    return {false, 1, "n = 1 and |G| >= 3: a 1-PDR is an empty digraph, whose automorphism group is Sym(|G|)"};
  if (n == 2 && kind != SmallGroup::kOther)
    return {false, 2, "n = 2 and G is one of Z1, Z2, Z3, Z2^2, Z2^3"};
  if (n >= 3 && n <= 5 && kind == SmallGroup::kTrivial) return {false, 3, "3 <= n <= 5 and G is trivial"};
  return {true, 0, n == 1 ? "n = 1 and |G| <= 2" : "no exclusion applies"};
}

inline bool admits_npdr(const Group& g, std::size_t n) { return classify(g, n).admits; }

/// Machine-checkable record of an n-PDR, or of its nonexistence.
struct Certificate {
  std::string group;
  std::size_t n = 0;
  bool exists = false;
  std::string method;
  Verdict verdict;
  std::optional<NCayleyDigraph> instance;
  std::optional<std::size_t> valency;
  GroupOrder aut_order = 0;
  std::vector<Permutation> aut_generators;
  PdrChecks checks;
  std::optional<NonExistenceCertificate> nonexistence;
  std::uint64_t candidates = 0;
  std::uint64_t seed = 0;
  std::string version = kVersion;
};

inline Json checks_to_json(const PdrChecks& c) {
  return Json{{"regular", c.regular},
              {"contains_rn_action", c.contains_rn_action},
              {"aut_order_equals_group_order", c.aut_order_equals_group_order},
              {"parts_are_orbits", c.parts_are_orbits},
              {"parts_independent", c.parts_independent}};
}

inline Json certificate_to_json(const Certificate& c) {
  Json j{{"version", c.version}, {"group", c.group}, {"n", c.n}, {"outcome", c.exists ? "exists" : "not-exists"}};
  j["method"] = c.method;
  if (!c.verdict.admits) j["clause"] = c.verdict.clause;
  j["reason"] = c.verdict.reason;
  if (c.instance) {
    j["family"] = family_to_json(c.instance->group, c.instance->family)["sets"];
    Json stats{{"vertices", c.instance->digraph.vertex_count()}, {"arcs", c.instance->digraph.arc_count()}};
    stats["valency"] = c.valency ? Json(*c.valency) : Json(nullptr);
    j["digraph"] = stats;
    j["aut_order"] = order_to_json(c.aut_order);
    Json gens = Json::array();
    for (const auto& p : c.aut_generators) gens.push_back(p.images());
    j["aut_generators"] = gens;
    j["checks"] = checks_to_json(c.checks);
  }
  if (c.nonexistence) j["nonexistence"] = certificate_to_json(*c.nonexistence);
  j["candidates"] = c.candidates;
  j["seed"] = c.seed;
  return j;
}

/// Evaluates the five n-PDR conditions on an n-Cayley digraph.
inline Certificate verify_npdr(const Group& g, const NCayleyDigraph& x) {
  if (x.group != g) throw PreconditionError("digraph was built over a different group");
  Certificate c;
  c.group = g.spec();
  c.n = x.n();
  c.method = "verify";
  c.verdict = classify(g, x.n());
  c.checks = check_npdr(x);
  c.valency = c.checks.valency;
  c.aut_order = c.checks.aut->order();
  c.aut_generators = c.checks.aut->generators();
  c.exists = c.checks.all();
  c.instance = x;
  return c;
}

/// Checks a raw digraph on n|G| vertices (g_i numbered i|G| + g). The
/// connection family is read off the digraph; a digraph that is not an
/// n-Cayley digraph of G fails the R_n action check.
inline Certificate verify_digraph(const Group& g, std::size_t n, const Digraph& d) {
  NCayleyDigraph x{g, family_from_digraph(g, n, d), d};
  return verify_npdr(g, x);
}

namespace detail {

/// Converts an asymmetric regular digraph on n vertices into a connection
/// family over the trivial group: T[i][j] = {1} iff (i, j) is an arc.
inline ConnectionFamily trivial_group_family(const Digraph& d) {
  ConnectionFamily f(1, d.vertex_count());
  for (const auto& [u, v] : d.arcs()) f.at(u, v).insert(Group::identity());
  return f;
}

inline Certificate negative_certificate(const Group& g, std::size_t n, const Verdict& v, std::size_t threads) {
  Certificate c;
  c.group = g.spec();
  c.n = n;
  c.verdict = v;
  NonExistenceCertificate proof;
  try {
    proof = prove_nonexistence(g, n, threads);
  } catch (const TooLargeError&) {
    proof = NonExistenceCertificate{g.spec(), n, 0, true, "classification-cited", v.reason, std::nullopt};
  }
  if (!proof.confirmed)
    throw VerificationError("exhaustive search found an n-PDR of " + g.spec() + " where none should exist");
  c.method = proof.method;
  c.candidates = proof.candidates_enumerated;
  c.nonexistence = std::move(proof);
  return c;
}

/// R, L for the DRR-based constructions.
inline std::pair<ElementSet, ElementSet> drr_ingredients(const Group& g, const SearchBudget& budget,
                                                         std::uint64_t& candidates) {
  const auto r = find_drr(g, budget);
  if (!r) throw BudgetExhausted("no DRR of " + g.spec() + " found within budget");
  auto l = find_hdr_companion(g, r->value, budget);
  candidates = r->candidates + l.candidates;
  return {r->value, std::move(l.value)};
}

}  // namespace detail

/// Builds and verifies an n-PDR of G, or certifies that none exists.
/// Throws BudgetExhausted when an ingredient search runs out and
/// VerificationError when a construction fails its own check.
inline Certificate build_npdr(const Group& g, std::size_t n, const SearchBudget& budget = {}) {
  const Verdict v = classify(g, n);
  if (!v.admits) {
    Certificate c = detail::negative_certificate(g, n, v, budget.threads);
    c.seed = budget.seed;
    return c;
  }

  std::optional<ConnectionFamily> family;
  std::string method;
  std::uint64_t candidates = 0;
  const auto kind = small_group_kind(g);

  if (n == 1) {
    family = ConnectionFamily(g.order(), 1);
    method = "empty";
  } else if (kind == SmallGroup::kTrivial) {
    auto found = find_trivial_group_npdr(n, budget);
    family = detail::trivial_group_family(found.value);
    candidates = found.candidates;
    method = "asymmetric-search";
  } else if (kind == SmallGroup::kZ2 || kind == SmallGroup::kZ3) {
    auto r = recipe_small_cyclic(g, n);
    family = std::move(r.family);
    method = r.provenance;
  } else if (kind == SmallGroup::kZ2squared) {
    auto r = recipe_klein(g, n);
    family = std::move(r.family);
    method = r.provenance;
  } else if (kind == SmallGroup::kZ2cubed) {
    auto r = recipe_z2_cubed(g, n);
    family = std::move(r.family);
    method = r.provenance;
  } else if (exceptional_kind(g) != ExceptionalGroup::kNone) {
    auto r = recipe_exceptional(g, n);
    family = std::move(r.family);
    method = r.provenance;
  } else {
    const auto [r, l] = detail::drr_ingredients(g, budget, candidates);
    RecipeOutput out = n == 2                        ? recipe_hdr2(g, r, l)
                       : is_elementary_abelian_2(g) ? recipe_case11(g, n, r, l)
                                                    : recipe_case12(g, n, r, l);
    family = std::move(out.family);
    method = out.provenance;
  }

  Certificate c = verify_npdr(g, build_ncayley(g, *family));
  if (!c.exists)
    throw VerificationError(method + " construction for " + g.spec() + " with n=" + std::to_string(n) +
                            " is not an n-PDR (aut order " + c.aut_order.str() + ")");
  c.method = method;
  c.candidates = candidates;
  c.seed = budget.seed;
  return c;
}

}  // namespace pdr
