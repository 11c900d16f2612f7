#pragma once

#include <cstddef>
#include <numeric>
#include <string>
#include <vector>

#include "pdr/digraph.hpp"
#include "pdr/errors.hpp"

namespace pdr {

/// Permutation of 0..n-1 stored as its image array. Products act on the
/// right: (p * q)(x) = q(p(x)).
class Permutation {
 public:
  Permutation() = default;
  explicit Permutation(std::vector<Vertex> image) : image_(std::move(image)) {
    std::vector<bool> seen(image_.size(), false);
    for (Vertex v : image_) {
      if (v >= image_.size() || seen[v]) throw PreconditionError("image array is not a bijection");
      seen[v] = true;
    }
  }

  static Permutation identity(std::size_t n) {
    Permutation p;
    p.image_.resize(n);
    std::iota(p.image_.begin(), p.image_.end(), Vertex{0});
    return p;
  }

  std::size_t degree() const { return image_.size(); }
  Vertex operator()(Vertex v) const { return image_[v]; }
  Vertex operator[](Vertex v) const { return image_[v]; }
  const std::vector<Vertex>& images() const { return image_; }

  bool is_identity() const {
    for (std::size_t i = 0; i < image_.size(); ++i)
      if (image_[i] != i) return false;
    return true;
  }

  Permutation inverse() const {
    Permutation p;
    p.image_.resize(image_.size());
    for (std::size_t i = 0; i < image_.size(); ++i) p.image_[image_[i]] = static_cast<Vertex>(i);
    return p;
  }

  friend Permutation operator*(const Permutation& p, const Permutation& q) {
    Permutation r;
    r.image_.resize(p.image_.size());
    for (std::size_t i = 0; i < p.image_.size(); ++i) r.image_[i] = q.image_[p.image_[i]];
    return r;
  }

  friend bool operator==(const Permutation&, const Permutation&) = default;
  friend auto operator<=>(const Permutation&, const Permutation&) = default;

 private:
  std::vector<Vertex> image_;
};

/// True iff p maps arcs to arcs. Since p is a bijection and arc counts are
/// finite, this also maps non-arcs to non-arcs.
inline bool preserves_arcs(const Digraph& d, const Permutation& p) {
  if (p.degree() != d.vertex_count()) return false;
  for (Vertex u = 0; u < d.vertex_count(); ++u) {
    const Bitset& src = d.out_row(u);
    const Bitset& dst = d.out_row(p(u));
    if (src.count() != dst.count()) return false;
    bool ok = true;
    src.for_each([&](std::size_t v) {
      if (ok && !dst.test(p(static_cast<Vertex>(v)))) ok = false;
    });
    if (!ok) return false;
  }
  return true;
}

}  // namespace pdr
