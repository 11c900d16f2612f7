#pragma once

#include <algorithm>
#include <cstddef>
#include <cstdint>
#include <utility>
#include <vector>

#include "pdr/bitset.hpp"
#include "pdr/digraph.hpp"
#include "pdr/errors.hpp"

namespace pdr {

/// Ordered list of disjoint, non-empty vertex cells covering 0..n-1.
/// Vertices inside a cell are kept ascending; cell order is significant.
class OrderedPartition {
 public:
  OrderedPartition() = default;

  explicit OrderedPartition(std::vector<std::vector<Vertex>> cells, std::size_t vertex_count)
      : cells_(std::move(cells)), n_(vertex_count) {
    std::vector<bool> seen(n_, false);
    std::size_t total = 0;
    for (auto& c : cells_) {
      if (c.empty()) throw PreconditionError("partition cell is empty");
      std::sort(c.begin(), c.end());
      for (Vertex v : c) {
        if (v >= n_ || seen[v]) throw PreconditionError("cells are not a partition of the vertex set");
        seen[v] = true;
      }
      total += c.size();
    }
    if (total != n_) throw PreconditionError("cells do not cover the vertex set");
  }

  static OrderedPartition unit(std::size_t vertex_count) {
    std::vector<std::vector<Vertex>> cells;
    if (vertex_count > 0) {
      cells.emplace_back(vertex_count);
      for (std::size_t v = 0; v < vertex_count; ++v) cells[0][v] = static_cast<Vertex>(v);
    }
    return OrderedPartition(std::move(cells), vertex_count);
  }

  std::size_t vertex_count() const { return n_; }
  std::size_t cell_count() const { return cells_.size(); }
  const std::vector<std::vector<Vertex>>& cells() const { return cells_; }
  const std::vector<Vertex>& cell(std::size_t i) const { return cells_[i]; }
  bool is_discrete() const { return cells_.size() == n_; }

  /// Per-vertex index of the containing cell.
  std::vector<std::size_t> cell_index() const {
    std::vector<std::size_t> out(n_);
    for (std::size_t i = 0; i < cells_.size(); ++i)
      for (Vertex v : cells_[i]) out[v] = i;
    return out;
  }

  friend bool operator==(const OrderedPartition&, const OrderedPartition&) = default;

 private:
  friend class Refiner;
  std::vector<std::vector<Vertex>> cells_;
  std::size_t n_ = 0;
};

/// Colour refinement for digraphs. A vertex's invariant against a splitter
/// cell is the triple (out-neighbours, in-neighbours, digon partners) inside
/// that cell. Every decision depends only on cell positions and counts, so
/// the procedure commutes with vertex relabelling.
class Refiner {
 public:
  explicit Refiner(const Digraph& d) : d_(d) {
    digon_.reserve(d.vertex_count());
    for (Vertex v = 0; v < d.vertex_count(); ++v) digon_.push_back(d.out_row(v) & d.in_row(v));
  }

  /// Coarsest equitable refinement of p. Split cells keep their position;
  /// fragments are ordered by increasing invariant.
  OrderedPartition refine(OrderedPartition p) const {
    std::vector<bool> pending(p.cells_.size(), true);
    run(p, pending);
    return p;
  }

  /// Splits cell `cell` into {v} followed by the rest, then refines. The
  /// input must already be equitable.
  OrderedPartition individualize(OrderedPartition p, std::size_t cell, Vertex v) const {
    auto& c = p.cells_[cell];
    auto it = std::find(c.begin(), c.end(), v);
    if (it == c.end()) throw PreconditionError("vertex not in the chosen cell");
    std::vector<bool> pending(p.cells_.size(), false);
    if (c.size() > 1) {
      c.erase(it);
      p.cells_.insert(p.cells_.begin() + static_cast<std::ptrdiff_t>(cell), std::vector<Vertex>{v});
      pending.insert(pending.begin() + static_cast<std::ptrdiff_t>(cell), true);
    }
    run(p, pending);
    return p;
  }

 private:
  static std::uint64_t key(std::size_t out, std::size_t in, std::size_t both) {
    return (static_cast<std::uint64_t>(out) << 42) | (static_cast<std::uint64_t>(in) << 21) |
           static_cast<std::uint64_t>(both);
  }

  void run(OrderedPartition& p, std::vector<bool>& pending) const {
    auto& cells = p.cells_;
    std::vector<std::pair<std::uint64_t, Vertex>> keyed;
    while (true) {
      const auto next = std::find(pending.begin(), pending.end(), true);
      if (next == pending.end()) break;
      const auto s = static_cast<std::size_t>(next - pending.begin());
      pending[s] = false;
      Bitset splitter(d_.vertex_count());
      for (Vertex v : cells[s]) splitter.set(v);

      for (std::size_t c = 0; c < cells.size(); ++c) {
        if (cells[c].size() == 1) continue;
        keyed.clear();
        bool uniform = true;
        for (Vertex v : cells[c]) {
          const auto k = key(d_.out_row(v).count_and(splitter), d_.in_row(v).count_and(splitter),
                             digon_[v].count_and(splitter));
          if (!keyed.empty() && keyed.front().first != k) uniform = false;
          keyed.emplace_back(k, v);
        }
        if (uniform) continue;
        std::sort(keyed.begin(), keyed.end());
        std::vector<std::vector<Vertex>> fragments;
        for (std::size_t i = 0; i < keyed.size(); ++i) {
          if (i == 0 || keyed[i].first != keyed[i - 1].first) fragments.emplace_back();
          fragments.back().push_back(keyed[i].second);
        }
        const std::size_t m = fragments.size();
        cells[c] = std::move(fragments[0]);
        cells.insert(cells.begin() + static_cast<std::ptrdiff_t>(c + 1),
                     std::make_move_iterator(fragments.begin() + 1),
                     std::make_move_iterator(fragments.end()));
        pending[c] = true;
        pending.insert(pending.begin() + static_cast<std::ptrdiff_t>(c + 1), m - 1, true);
        c += m - 1;
      }
    }
  }

  const Digraph& d_;
  std::vector<Bitset> digon_;
};

inline OrderedPartition refine(const Digraph& d, const OrderedPartition& p) {
  if (p.vertex_count() != d.vertex_count()) throw PreconditionError("partition and digraph sizes differ");
  return Refiner(d).refine(p);
}

}  // namespace pdr
