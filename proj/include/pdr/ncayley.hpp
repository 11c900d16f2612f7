#pragma once

#include <cstddef>
#include <string>
#include <utility>
#include <vector>

#include "pdr/digraph.hpp"
#include "pdr/errors.hpp"
#include "pdr/group.hpp"
#include "pdr/group_zoo.hpp"
#include "pdr/json.hpp"
#include "pdr/perm_group.hpp"
#include "pdr/permutation.hpp"

namespace pdr {

/// The n x n matrix of connection sets T[i][j] over a group of fixed order.
class ConnectionFamily {
 public:
  ConnectionFamily() = default;
  ConnectionFamily(std::size_t group_order, std::size_t n)
      : order_(group_order), n_(n), sets_(n * n, ElementSet(group_order)) {
    if (n == 0) throw PreconditionError("a connection family needs at least one part");
  }

  std::size_t group_order() const { return order_; }
  std::size_t n() const { return n_; }

  const ElementSet& at(std::size_t i, std::size_t j) const { return sets_[index(i, j)]; }
  ElementSet& at(std::size_t i, std::size_t j) { return sets_[index(i, j)]; }

  void set(std::size_t i, std::size_t j, ElementSet s) {
    if (s.universe() != order_) throw PreconditionError("connection set over the wrong group");
    sets_[index(i, j)] = std::move(s);
  }

  /// All diagonal sets are empty.
  bool is_partite() const {
    for (std::size_t i = 0; i < n_; ++i)
      if (!at(i, i).empty()) return false;
    return true;
  }

  friend bool operator==(const ConnectionFamily&, const ConnectionFamily&) = default;

 private:
  std::size_t index(std::size_t i, std::size_t j) const {
    if (i >= n_ || j >= n_) throw IndexError("part index out of range");
    return i * n_ + j;
  }

  std::size_t order_ = 0;
  std::size_t n_ = 0;
  std::vector<ElementSet> sets_;
};

/// Vertex g_i is numbered i * |G| + g.
inline Vertex ncayley_vertex(std::size_t group_order, Element g, std::size_t part) {
  return static_cast<Vertex>(part * group_order + g);
}

/// The vertex sets G_0, ..., G_{n-1}.
inline std::vector<std::vector<Vertex>> ncayley_parts(std::size_t group_order, std::size_t n) {
  std::vector<std::vector<Vertex>> parts(n);
  for (std::size_t i = 0; i < n; ++i)
    for (Element g = 0; g < group_order; ++g) parts[i].push_back(ncayley_vertex(group_order, g, i));
  return parts;
}

/// Digraph with arcs (g_i, (t g)_j) for t in T[i][j].
inline Digraph ncayley_digraph(const Group& g, const ConnectionFamily& f) {
  if (f.group_order() != g.order()) throw PreconditionError("family and group orders differ");
  const std::size_t order = g.order();
  for (std::size_t i = 0; i < f.n(); ++i)
    if (f.at(i, i).contains(Group::identity()))
      throw LoopError("identity in diagonal set T[" + std::to_string(i) + "][" + std::to_string(i) +
                      "] would create loops");
  Digraph d(order * f.n());
  for (std::size_t i = 0; i < f.n(); ++i)
    for (std::size_t j = 0; j < f.n(); ++j)
      for (Element t : f.at(i, j))
        for (Element x = 0; x < order; ++x)
          d.add_arc(ncayley_vertex(order, x, i), ncayley_vertex(order, g.mul_unchecked(t, x), j));
  return d;
}

/// n-Cayley digraph together with the data it was built from.
struct NCayleyDigraph {
  Group group;
  ConnectionFamily family;
  Digraph digraph;

  std::size_t n() const { return family.n(); }
  std::vector<std::vector<Vertex>> parts() const { return ncayley_parts(group.order(), n()); }
  std::vector<Vertex> part(std::size_t i) const { return ncayley_parts(group.order(), n()).at(i); }
  Vertex vertex(Element g, std::size_t i) const { return ncayley_vertex(group.order(), g, i); }
};

inline NCayleyDigraph build_ncayley(const Group& g, const ConnectionFamily& f) {
  return NCayleyDigraph{g, f, ncayley_digraph(g, f)};
}

/// R_n(h): x_i -> (x h)_i.
inline Permutation right_translation(const Group& g, std::size_t n, Element h) {
  const std::size_t order = g.order();
  std::vector<Vertex> image(order * n);
  for (std::size_t i = 0; i < n; ++i)
    for (Element x = 0; x < order; ++x)
      image[ncayley_vertex(order, x, i)] = ncayley_vertex(order, g.mul(x, h), i);
  return Permutation(std::move(image));
}

inline Permutation right_translation(const NCayleyDigraph& x, Element h) {
  return right_translation(x.group, x.n(), h);
}

/// The subgroup {R_n(h) : h in G} of Sym(G x Z_n).
inline PermGroup right_translation_group(const Group& g, std::size_t n) {
  std::vector<Permutation> gens;
  for (Element h = 1; h < g.order(); ++h) gens.push_back(right_translation(g, n, h));
  return PermGroup(g.order() * n, std::move(gens));
}

/// Out-valency of every vertex of G_i is row_sums[i]; in-valency of every
/// vertex of G_j is column_sums[j].
struct ValencyProfile {
  std::vector<std::size_t> row_sums;
  std::vector<std::size_t> column_sums;

  bool is_constant() const {
    if (row_sums.empty()) return true;
    const std::size_t d = row_sums.front();
    for (std::size_t x : row_sums)
      if (x != d) return false;
    for (std::size_t x : column_sums)
      if (x != d) return false;
    return true;
  }
};

inline ValencyProfile valency_profile(const ConnectionFamily& f) {
  ValencyProfile p{std::vector<std::size_t>(f.n(), 0), std::vector<std::size_t>(f.n(), 0)};
  for (std::size_t i = 0; i < f.n(); ++i)
    for (std::size_t j = 0; j < f.n(); ++j) {
      p.row_sums[i] += f.at(i, j).size();
      p.column_sums[j] += f.at(i, j).size();
    }
  return p;
}

/// Reads T[i][j] off the out-neighbourhood of 1_i. The result reproduces d
/// exactly iff d is invariant under every right translation.
inline ConnectionFamily family_from_digraph(const Group& g, std::size_t n, const Digraph& d) {
  const std::size_t order = g.order();
  if (d.vertex_count() != order * n) throw PreconditionError("digraph size is not n * |G|");
  ConnectionFamily f(order, n);
  for (std::size_t i = 0; i < n; ++i)
    d.out_row(ncayley_vertex(order, Group::identity(), i)).for_each([&](std::size_t v) {
      f.at(i, v / order).insert(static_cast<Element>(v % order));
    });
  return f;
}

inline Json family_to_json(const Group& g, const ConnectionFamily& f) {
  Json sets = Json::object();
  for (std::size_t i = 0; i < f.n(); ++i)
    for (std::size_t j = 0; j < f.n(); ++j)
      if (!f.at(i, j).empty())
        sets[std::to_string(i) + "," + std::to_string(j)] = f.at(i, j).elements();
  return Json{{"group", g.spec()}, {"n", f.n()}, {"sets", std::move(sets)}};
}

/// Parses a family file. The group is resolved from the embedded descriptor.
inline std::pair<Group, ConnectionFamily> family_from_json(const Json& j) {
  try {
    Group g = parse_group(j.at("group").get<std::string>());
    const auto n = j.at("n").get<std::size_t>();
    ConnectionFamily f(g.order(), n);
    if (j.contains("sets")) {
      for (const auto& [key, value] : j.at("sets").items()) {
        const auto comma = key.find(',');
        if (comma == std::string::npos) throw ParseError("bad set key '" + key + "'");
        const auto i = std::stoul(key.substr(0, comma));
        const auto k = std::stoul(key.substr(comma + 1));
        f.set(i, k, ElementSet(g.order(), value.get<std::vector<Element>>()));
      }
    }
    return {std::move(g), std::move(f)};
  } catch (const Json::exception& e) {
    throw ParseError(std::string("bad family JSON: ") + e.what());
  } catch (const std::logic_error& e) {
    throw ParseError(std::string("bad family JSON: ") + e.what());
  }
}

}  // namespace pdr
