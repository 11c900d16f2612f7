#pragma once

#include <algorithm>
#include <cstddef>
#include <cstdint>
#include <optional>
#include <span>
#include <string>
#include <utility>
#include <vector>

#include "pdr/bitset.hpp"
#include "pdr/errors.hpp"

namespace pdr {

using Vertex = std::uint32_t;
using Arc = std::pair<Vertex, Vertex>;

/// Loop-free digraph on vertices 0..n-1 with dense out- and in-adjacency rows.
class Digraph {
 public:
  Digraph() = default;
  explicit Digraph(std::size_t vertex_count)
      : n_(vertex_count), out_(vertex_count, Bitset(vertex_count)),
        in_(vertex_count, Bitset(vertex_count)) {}

  Digraph(std::size_t vertex_count, std::span<const Arc> arcs) : Digraph(vertex_count) {
    for (const auto& [u, v] : arcs) add_arc(u, v);
  }

  std::size_t vertex_count() const { return n_; }
  std::size_t arc_count() const { return arc_count_; }

  void add_arc(Vertex u, Vertex v) {
    check(u);
    check(v);
    if (u == v) throw LoopError("loop at vertex " + std::to_string(u));
    if (out_[u].test(v)) return;
    out_[u].set(v);
    in_[v].set(u);
    ++arc_count_;
  }

  bool has_arc(Vertex u, Vertex v) const {
    check(u);
    check(v);
    return out_[u].test(v);
  }

  const Bitset& out_row(Vertex v) const { return out_[v]; }
  const Bitset& in_row(Vertex v) const { return in_[v]; }

  std::size_t out_degree(Vertex v) const {
    check(v);
    return out_[v].count();
  }
  std::size_t in_degree(Vertex v) const {
    check(v);
    return in_[v].count();
  }

  std::vector<Vertex> out_neighbors(Vertex v) const {
    check(v);
    return to_list(out_[v]);
  }
  std::vector<Vertex> in_neighbors(Vertex v) const {
    check(v);
    return to_list(in_[v]);
  }

  /// All arcs in lexicographic order.
  std::vector<Arc> arcs() const {
    std::vector<Arc> out;
    out.reserve(arc_count_);
    for (Vertex u = 0; u < n_; ++u)
      out_[u].for_each([&](std::size_t v) { out.emplace_back(u, static_cast<Vertex>(v)); });
    return out;
  }

  friend bool operator==(const Digraph& a, const Digraph& b) {
    return a.n_ == b.n_ && a.out_ == b.out_;
  }

 private:
  void check(Vertex v) const {
    if (v >= n_)
      throw IndexError("vertex " + std::to_string(v) + " out of range for digraph on " +
                       std::to_string(n_) + " vertices");
  }

  static std::vector<Vertex> to_list(const Bitset& row) {
    std::vector<Vertex> out;
    row.for_each([&](std::size_t v) { out.push_back(static_cast<Vertex>(v)); });
    return out;
  }

  std::size_t n_ = 0;
  std::size_t arc_count_ = 0;
  std::vector<Bitset> out_;
  std::vector<Bitset> in_;
};

/// Common out- and in-valency if the digraph is regular.
inline std::optional<std::size_t> is_regular(const Digraph& d) {
  if (d.vertex_count() == 0) return 0;
  const std::size_t deg = d.out_row(0).count();
  for (Vertex v = 0; v < d.vertex_count(); ++v)
    if (d.out_row(v).count() != deg || d.in_row(v).count() != deg) return std::nullopt;
  return deg;
}

/// Induced subdigraph together with the ascending list of original vertices.
struct InducedDigraph {
  Digraph digraph;
  std::vector<Vertex> original;  // new index -> original vertex
};

inline InducedDigraph induced_with_map(const Digraph& d, std::span<const Vertex> xs) {
  std::vector<Vertex> sorted(xs.begin(), xs.end());
  std::sort(sorted.begin(), sorted.end());
  sorted.erase(std::unique(sorted.begin(), sorted.end()), sorted.end());
  for (Vertex v : sorted)
    if (v >= d.vertex_count()) throw IndexError("vertex " + std::to_string(v) + " out of range");
  Digraph sub(sorted.size());
  for (std::size_t i = 0; i < sorted.size(); ++i)
    for (std::size_t j = 0; j < sorted.size(); ++j)
      if (i != j && d.out_row(sorted[i]).test(sorted[j]))
        sub.add_arc(static_cast<Vertex>(i), static_cast<Vertex>(j));
  return {std::move(sub), std::move(sorted)};
}

inline Digraph induced(const Digraph& d, std::span<const Vertex> xs) {
  return induced_with_map(d, xs).digraph;
}

/// Number of digon partners of v.
inline std::size_t undirected_degree(const Digraph& d, Vertex v) {
  if (v >= d.vertex_count()) throw IndexError("vertex " + std::to_string(v) + " out of range");
  return d.out_row(v).count_and(d.in_row(v));
}

/// True iff no arc has both ends in xs.
inline bool is_empty_on(const Digraph& d, std::span<const Vertex> xs) {
  Bitset mask(d.vertex_count());
  for (Vertex v : xs) {
    if (v >= d.vertex_count()) throw IndexError("vertex " + std::to_string(v) + " out of range");
    mask.set(v);
  }
  for (Vertex v : xs)
    if (d.out_row(v).count_and(mask) != 0) return false;
  return true;
}

/// True iff the subdigraph induced on xs ∪ ys consists exactly of digons
/// pairing every vertex of xs with one vertex of ys and vice versa.
inline bool is_perfect_matching_between(const Digraph& d, std::span<const Vertex> xs,
                                        std::span<const Vertex> ys) {
  if (xs.empty() && ys.empty()) return true;
  if (xs.size() != ys.size()) return false;
  Bitset xm(d.vertex_count()), ym(d.vertex_count());
  for (Vertex v : xs) xm.set(v);
  for (Vertex v : ys) ym.set(v);
  auto side_ok = [&](std::span<const Vertex> side, const Bitset& own, const Bitset& other) {
    for (Vertex v : side) {
      if (d.out_row(v).count_and(own) != 0 || d.in_row(v).count_and(own) != 0) return false;
      if (d.out_row(v).count_and(other) != 1 || d.in_row(v).count_and(other) != 1) return false;
      if (d.out_row(v).count_and(d.in_row(v), other) != 1) return false;
    }
    return true;
  };
  return side_ok(xs, xm, ym) && side_ok(ys, ym, xm);
}

}  // namespace pdr
