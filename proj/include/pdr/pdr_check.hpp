#pragma once

#include <algorithm>
#include <cstddef>
#include <optional>
#include <vector>

#include "pdr/automorphisms.hpp"
#include "pdr/digraph.hpp"
#include "pdr/group.hpp"
#include "pdr/ncayley.hpp"
#include "pdr/perm_group.hpp"

namespace pdr {

/// Outcome of checking a digraph on G x Z_n against the n-PDR conditions.
struct PdrChecks {
  bool regular = false;
  bool contains_rn_action = false;
  bool aut_order_equals_group_order = false;
  bool parts_are_orbits = false;
  bool parts_independent = false;
  std::optional<std::size_t> valency;
  std::optional<PermGroup> aut;

  bool all() const {
    return regular && contains_rn_action && aut_order_equals_group_order && parts_are_orbits &&
           parts_independent;
  }
};

/// Evaluates every n-PDR condition for a digraph whose vertex g_i is
/// numbered i * |G| + g.
inline PdrChecks check_npdr(const Group& g, std::size_t n, const Digraph& d) {
  if (d.vertex_count() != g.order() * n) throw PreconditionError("digraph size is not n * |G|");
  PdrChecks c;
  c.valency = is_regular(d);
  c.regular = c.valency.has_value();

  c.contains_rn_action = true;
  for (Element h = 1; h < g.order() && c.contains_rn_action; ++h)
    c.contains_rn_action = preserves_arcs(d, right_translation(g, n, h));

  const auto parts = ncayley_parts(g.order(), n);
  c.parts_independent = std::all_of(parts.begin(), parts.end(),
                                    [&](const auto& p) { return is_empty_on(d, p); });

  c.aut = automorphisms(d);
  c.aut_order_equals_group_order = c.aut->order() == g.order();
  c.parts_are_orbits = c.aut->orbits() == parts;
  return c;
}

inline PdrChecks check_npdr(const NCayleyDigraph& x) { return check_npdr(x.group, x.n(), x.digraph); }

/// Cheaper predicate for search loops: true iff the n-Cayley digraph of f is
/// an n-PDR of g. Non-partite and irregular families are rejected before
/// any automorphism search.
inline bool is_npdr(const Group& g, const ConnectionFamily& f) {
  if (!f.is_partite() || !valency_profile(f).is_constant()) return false;
  const Digraph d = ncayley_digraph(g, f);
  const PermGroup aut = automorphisms(d);
  if (aut.order() != g.order()) return false;
  // Aut contains R_n(G), so equal orders make Aut = R_n(G), whose orbits are
  // the parts.
  return true;
}

/// Cay(G, R) is a digraphical regular representation.
inline bool is_drr(const Group& g, const ElementSet& r) {
  if (r.contains(Group::identity())) return false;
  ConnectionFamily f(g.order(), 1);
  f.set(0, 0, r);
  return automorphisms(ncayley_digraph(g, f)).order() == g.order();
}

/// The Haar digraph Cay(G, T01, T10) is a 2-PDR.
inline bool is_haar_pdr(const Group& g, const ElementSet& t01, const ElementSet& t10) {
  ConnectionFamily f(g.order(), 2);
  f.set(0, 1, t01);
  f.set(1, 0, t10);
  return is_npdr(g, f);
}

}  // namespace pdr
