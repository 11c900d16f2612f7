#pragma once

#include <algorithm>
#include <cstddef>
#include <cstdint>
#include <numeric>
#include <optional>
#include <string>
#include <utility>
#include <vector>

#include <boost/multiprecision/cpp_int.hpp>

#include "pdr/json.hpp"
#include "pdr/permutation.hpp"

namespace pdr {

/// Exact group order. Automorphism groups of empty digraphs are symmetric
/// groups, so orders routinely exceed 64 bits.
using GroupOrder = boost::multiprecision::cpp_int;

/// Permutation group given by generators, with a base and strong generating
/// set kept as a stabilizer chain of Schreier vectors.
class PermGroup {
 public:
  /// Builds the stabilizer chain with deterministic Schreier-Sims.
  PermGroup(std::size_t degree, std::vector<Permutation> generators) : degree_(degree) {
    for (auto& g : generators) {
      if (g.degree() != degree) throw PreconditionError("generator degree mismatch");
      if (!g.is_identity() &&
          std::find(generators_.begin(), generators_.end(), g) == generators_.end())
        generators_.push_back(std::move(g));
    }
    schreier_sims();
  }

  /// Trusts that `strong_generators` is a strong generating set relative to
  /// `base`: for every i, the generators fixing base[0..i) generate the
  /// pointwise stabilizer of those points.
  static PermGroup from_base_and_strong_generators(std::size_t degree, std::vector<Vertex> base,
                                                   std::vector<Permutation> strong_generators) {
    PermGroup g;
    g.degree_ = degree;
    g.generators_ = std::move(strong_generators);
    for (Vertex b : base) g.levels_.push_back(Level{b, {}, {}, {}});
    g.rebuild_levels(0);
    return g;
  }

  std::size_t degree() const { return degree_; }
  const std::vector<Permutation>& generators() const { return generators_; }

  std::vector<Vertex> base() const {
    std::vector<Vertex> b;
    for (const auto& l : levels_) b.push_back(l.point);
    return b;
  }

  /// Lengths of the fundamental orbits along the chain.
  std::vector<std::size_t> fundamental_orbit_lengths() const {
    std::vector<std::size_t> out;
    for (const auto& l : levels_) out.push_back(l.orbit.size());
    return out;
  }

  GroupOrder order() const {
    GroupOrder o = 1;
    for (const auto& l : levels_) o *= l.orbit.size();
    return o;
  }

  /// Membership test by sifting through the chain.
  bool contains(const Permutation& p) const {
    if (p.degree() != degree_) return false;
    const auto [residue, level] = strip(p, 0);
    return level == levels_.size() && residue.is_identity();
  }

  /// Orbit partition of the vertex set, each orbit ascending, orbits ordered
  /// by least element.
  std::vector<std::vector<Vertex>> orbits() const {
    std::vector<Vertex> parent(degree_);
    std::iota(parent.begin(), parent.end(), Vertex{0});
    auto find = [&](Vertex x) {
      while (parent[x] != x) x = parent[x] = parent[parent[x]];
      return x;
    };
    for (const auto& g : generators_)
      for (Vertex v = 0; v < degree_; ++v) {
        const Vertex a = find(v), b = find(g(v));
        if (a != b) parent[std::max(a, b)] = std::min(a, b);
      }
    std::vector<std::vector<Vertex>> out;
    std::vector<std::size_t> slot(degree_, SIZE_MAX);
    for (Vertex v = 0; v < degree_; ++v) {
      const Vertex r = find(v);
      if (slot[r] == SIZE_MAX) {
        slot[r] = out.size();
        out.emplace_back();
      }
      out[slot[r]].push_back(v);
    }
    return out;
  }

  std::vector<Vertex> orbit_of(Vertex v) const {
    for (auto& o : orbits())
      if (std::binary_search(o.begin(), o.end(), v)) return o;
    return {v};
  }

  /// Every orbit has length equal to the group order.
  bool is_semiregular() const {
    const GroupOrder o = order();
    for (const auto& orb : orbits())
      if (GroupOrder(orb.size()) != o) return false;
    return true;
  }

  GroupOrder point_stabilizer_order(Vertex v) const {
    if (v >= degree_) throw IndexError("vertex out of range");
    return order() / orbit_of(v).size();
  }

 private:
  static constexpr std::int32_t kNone = -1;
  static constexpr std::int32_t kRoot = -2;

  struct Level {
    Vertex point;
    std::vector<std::size_t> gens;       // indices into generators_
    std::vector<Vertex> orbit;           // BFS order from point
    std::vector<std::int32_t> schreier;  // per vertex: index into gens, kRoot or kNone
  };

  PermGroup() = default;

  bool in_orbit(const Level& l, Vertex v) const { return l.schreier[v] != kNone; }

  void build_level(std::size_t i) {
    Level& l = levels_[i];
    l.gens.clear();
    for (std::size_t g = 0; g < generators_.size(); ++g) {
      bool fixes = true;
      for (std::size_t j = 0; j < i && fixes; ++j)
        fixes = generators_[g](levels_[j].point) == levels_[j].point;
      if (fixes) l.gens.push_back(g);
    }
    l.schreier.assign(degree_, kNone);
    l.orbit.assign(1, l.point);
    l.schreier[l.point] = kRoot;
    for (std::size_t k = 0; k < l.orbit.size(); ++k) {
      const Vertex x = l.orbit[k];
      for (std::size_t s = 0; s < l.gens.size(); ++s) {
        const Vertex y = generators_[l.gens[s]](x);
        if (l.schreier[y] == kNone) {
          l.schreier[y] = static_cast<std::int32_t>(s);
          l.orbit.push_back(y);
        }
      }
    }
  }

  void rebuild_levels(std::size_t from) {
    inverses_.resize(generators_.size());
    for (std::size_t g = 0; g < generators_.size(); ++g)
      if (inverses_[g].degree() != degree_) inverses_[g] = generators_[g].inverse();
    for (std::size_t i = from; i < levels_.size(); ++i) build_level(i);
  }

  /// Transversal element u with point(u) = v, as a product of generators.
  Permutation transversal(const Level& l, Vertex v) const {
    std::vector<std::size_t> word;
    while (l.schreier[v] != kRoot) {
      const std::size_t g = l.gens[static_cast<std::size_t>(l.schreier[v])];
      word.push_back(g);
      v = inverses_[g](v);
    }
    Permutation u = Permutation::identity(degree_);
    for (auto it = word.rbegin(); it != word.rend(); ++it) u = u * generators_[*it];
    return u;
  }

  /// Sifts p from chain level `from`. Returns the residue and the level where
  /// sifting stopped (levels_.size() if it passed every level).
  std::pair<Permutation, std::size_t> strip(Permutation p, std::size_t from) const {
    for (std::size_t i = from; i < levels_.size(); ++i) {
      const Level& l = levels_[i];
      Vertex beta = p(l.point);
      if (!in_orbit(l, beta)) return {std::move(p), i};
      while (l.schreier[beta] != kRoot) {
        const std::size_t g = l.gens[static_cast<std::size_t>(l.schreier[beta])];
        p = p * inverses_[g];
        beta = inverses_[g](beta);
      }
    }
    return {std::move(p), levels_.size()};
  }

  static std::optional<Vertex> moved_point(const Permutation& p) {
    for (Vertex v = 0; v < p.degree(); ++v)
      if (p(v) != v) return v;
    return std::nullopt;
  }

  void schreier_sims() {
    levels_.clear();
    // Initial base: each generator must move some base point.
    for (const auto& g : generators_) {
      bool fixes_base = true;
      for (const auto& l : levels_) fixes_base = fixes_base && g(l.point) == l.point;
      if (fixes_base) levels_.push_back(Level{*moved_point(g), {}, {}, {}});
    }
    rebuild_levels(0);

    std::size_t i = levels_.size();
    while (i > 0) {
      const std::size_t level = i - 1;
      bool restarted = false;
      for (std::size_t k = 0; k < levels_[level].orbit.size() && !restarted; ++k) {
        const Vertex beta = levels_[level].orbit[k];
        const Permutation u_beta = transversal(levels_[level], beta);
        for (std::size_t s = 0; s < levels_[level].gens.size() && !restarted; ++s) {
          const Permutation& gen = generators_[levels_[level].gens[s]];
          const Permutation h =
              u_beta * gen * transversal(levels_[level], gen(beta)).inverse();
          if (h.is_identity()) continue;
          auto [residue, stop] = strip(h, level + 1);
          if (stop == levels_.size() && residue.is_identity()) continue;
          // The residue fixes every base point before `stop`.
          if (stop == levels_.size()) levels_.push_back(Level{*moved_point(residue), {}, {}, {}});
          generators_.push_back(std::move(residue));
          rebuild_levels(level + 1);
          i = stop + 1;
          restarted = true;
        }
      }
      if (!restarted) --i;
    }
  }

  std::size_t degree_ = 0;
  std::vector<Permutation> generators_;
  std::vector<Permutation> inverses_;
  std::vector<Level> levels_;
};

inline Json order_to_json(const GroupOrder& o) {
  if (o <= GroupOrder(UINT64_MAX)) return static_cast<std::uint64_t>(o);
  return o.str();
}

inline Json perm_group_to_json(const PermGroup& g) {
  Json gens = Json::array();
  for (const auto& p : g.generators()) gens.push_back(p.images());
  return Json{{"order", order_to_json(g.order())}, {"generators", std::move(gens)}};
}

}  // namespace pdr
