#pragma once

#include <algorithm>
#include <cstddef>
#include <numeric>
#include <optional>
#include <vector>

#include "pdr/digraph.hpp"
#include "pdr/errors.hpp"
#include "pdr/partition.hpp"
#include "pdr/perm_group.hpp"
#include "pdr/permutation.hpp"

namespace pdr {

namespace detail {

/// Individualization-refinement search for the full group of automorphisms
/// preserving every cell of an initial colouring.
///
/// The first path of the search tree fixes a base b_0, b_1, ... (lowest
/// vertex of the first smallest non-singleton cell at each node). Levels are
/// processed bottom-up: at level i, every vertex w of b_i's cell that is not
/// yet in the orbit of b_i under the generators found so far is tested for an
/// automorphism fixing b_0..b_{i-1} and sending b_i to w. The generators
/// found form a strong generating set relative to the base.
class AutomorphismSearch {
 public:
  AutomorphismSearch(const Digraph& d, const OrderedPartition& colours)
      : d_(d), refiner_(d), colour_(colours.cell_index()) {}

  PermGroup run(const OrderedPartition& colours) {
    const std::size_t n = d_.vertex_count();
    path_.push_back(refiner_.refine(colours));
    while (!path_.back().is_discrete()) {
      const std::size_t t = target_cell(path_.back());
      const Vertex b = path_.back().cell(t).front();
      target_.push_back(t);
      base_.push_back(b);
      path_.push_back(refiner_.individualize(path_.back(), t, b));
    }

    for (std::size_t level = base_.size(); level-- > 0;) {
      const auto& cell = path_[level].cell(target_[level]);
      std::vector<bool> in_orbit = orbit_mask(base_[level]);
      for (Vertex w : cell) {
        if (in_orbit[w]) continue;
        if (auto sigma = search_from(level, w)) {
          generators_.push_back(std::move(*sigma));
          in_orbit = orbit_mask(base_[level]);
        }
      }
    }
    return PermGroup::from_base_and_strong_generators(n, base_, generators_);
  }

 private:
  static std::size_t target_cell(const OrderedPartition& p) {
    std::size_t best = p.cell_count(), best_size = SIZE_MAX;
    for (std::size_t i = 0; i < p.cell_count(); ++i) {
      const std::size_t s = p.cell(i).size();
      if (s > 1 && s < best_size) {
        best = i;
        best_size = s;
      }
    }
    return best;
  }

  static bool compatible(const OrderedPartition& a, const OrderedPartition& b) {
    if (a.cell_count() != b.cell_count()) return false;
    for (std::size_t i = 0; i < a.cell_count(); ++i)
      if (a.cell(i).size() != b.cell(i).size()) return false;
    return true;
  }

  std::vector<bool> orbit_mask(Vertex v) const {
    std::vector<bool> seen(d_.vertex_count(), false);
    std::vector<Vertex> stack{v};
    seen[v] = true;
    while (!stack.empty()) {
      const Vertex x = stack.back();
      stack.pop_back();
      for (const auto& g : generators_) {
        const Vertex y = g(x);
        if (!seen[y]) {
          seen[y] = true;
          stack.push_back(y);
        }
      }
    }
    return seen;
  }

  std::optional<Permutation> search_from(std::size_t level, Vertex w) {
    OrderedPartition q = refiner_.individualize(path_[level], target_[level], w);
    if (!compatible(q, path_[level + 1])) return std::nullopt;
    return descend(level + 1, q);
  }

  std::optional<Permutation> descend(std::size_t level, const OrderedPartition& q) {
    if (level == base_.size()) return leaf(q);
    const std::size_t t = target_[level];
    for (Vertex u : q.cell(t)) {
      OrderedPartition next = refiner_.individualize(q, t, u);
      if (!compatible(next, path_[level + 1])) continue;
      if (auto sigma = descend(level + 1, next)) return sigma;
    }
    return std::nullopt;
  }

  std::optional<Permutation> leaf(const OrderedPartition& q) const {
    const OrderedPartition& left = path_.back();
    std::vector<Vertex> image(d_.vertex_count());
    for (std::size_t i = 0; i < left.cell_count(); ++i) image[left.cell(i).front()] = q.cell(i).front();
    Permutation sigma(std::move(image));
    for (Vertex v = 0; v < d_.vertex_count(); ++v)
      if (colour_[v] != colour_[sigma(v)]) return std::nullopt;
    if (!preserves_arcs(d_, sigma)) return std::nullopt;
    return sigma;
  }

  const Digraph& d_;
  Refiner refiner_;
  std::vector<std::size_t> colour_;
  std::vector<OrderedPartition> path_;
  std::vector<std::size_t> target_;
  std::vector<Vertex> base_;
  std::vector<Permutation> generators_;
};

}  // namespace detail

/// Full group of automorphisms of d that map every cell of `colours` to
/// itself, as a base and strong generating set with exact order.
inline PermGroup automorphisms(const Digraph& d, const OrderedPartition& colours) {
  if (colours.vertex_count() != d.vertex_count())
    throw PreconditionError("partition and digraph sizes differ");
  return detail::AutomorphismSearch(d, colours).run(colours);
}

inline PermGroup automorphisms(const Digraph& d) {
  return automorphisms(d, OrderedPartition::unit(d.vertex_count()));
}

inline constexpr std::size_t kBruteForceVertexLimit = 8;

/// Reference implementation: tries all |V|! permutations.
inline PermGroup brute_force_automorphisms(const Digraph& d, const OrderedPartition& colours) {
  const std::size_t n = d.vertex_count();
  if (n > kBruteForceVertexLimit) throw PreconditionError("brute force is limited to 8 vertices");
  if (colours.vertex_count() != n) throw PreconditionError("partition and digraph sizes differ");
  const auto colour = colours.cell_index();
  std::vector<Vertex> image(n);
  std::iota(image.begin(), image.end(), Vertex{0});
  std::vector<Permutation> gens;
  PermGroup group(n, {});
  std::size_t count = 0;
  do {
    bool ok = true;
    for (Vertex v = 0; v < n && ok; ++v) ok = colour[v] == colour[image[v]];
    if (!ok) continue;
    Permutation p(image);
    if (!preserves_arcs(d, p)) continue;
    ++count;
    if (!group.contains(p)) {
      gens.push_back(std::move(p));
      group = PermGroup(n, gens);
    }
  } while (std::next_permutation(image.begin(), image.end()));
  if (group.order() != count) throw VerificationError("stabilizer chain order disagrees with enumeration");
  return group;
}

inline PermGroup brute_force_automorphisms(const Digraph& d) {
  return brute_force_automorphisms(d, OrderedPartition::unit(d.vertex_count()));
}

}  // namespace pdr
