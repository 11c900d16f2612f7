#pragma once

#include <algorithm>
#include <cstddef>
#include <cstdint>
#include <initializer_list>
#include <numeric>
#include <random>
#include <span>
#include <string>
#include <utility>
#include <vector>

#include "pdr/bitset.hpp"
#include "pdr/errors.hpp"

namespace pdr {

/// Index of a group element. The identity is always 0.
using Element = std::uint32_t;

/// A finite group stored as a full multiplication table.
///
/// Tables are validated on construction: closure, identity at index 0,
/// two-sided inverses, and associativity (exhaustive up to order 64, 10^4
/// seeded random triples above). Immutable afterwards.
class Group {
 public:
  static constexpr std::size_t kExhaustiveAssociativityLimit = 64;
  static constexpr std::size_t kSampledTriples = 10000;

  Group(std::vector<std::vector<Element>> mul, std::vector<std::string> labels,
        std::string spec)
      : order_(mul.size()), labels_(std::move(labels)), spec_(std::move(spec)) {
    if (order_ == 0) throw TableError("group table is empty");
    table_.reserve(order_ * order_);
    for (const auto& row : mul) {
      if (row.size() != order_)
        throw TableError("multiplication table is not square");
      for (Element e : row) {
        if (e >= order_) throw TableError("table entry out of range");
        table_.push_back(e);
      }
    }
    if (labels_.empty()) {
      labels_.reserve(order_);
      labels_.push_back("1");
      for (std::size_t i = 1; i < order_; ++i)
        labels_.push_back("g" + std::to_string(i));
    }
    if (labels_.size() != order_)
      throw TableError("label count does not match group order");
    validate();
  }

  std::size_t order() const { return order_; }
  static constexpr Element identity() { return 0; }
  const std::string& spec() const { return spec_; }
  const std::string& label(Element x) const {
    check(x);
    return labels_[x];
  }
  const std::vector<std::string>& labels() const { return labels_; }

  Element mul(Element x, Element y) const {
    check(x);
    check(y);
    return table_[x * order_ + y];
  }
  Element inv(Element x) const {
    check(x);
    return inv_[x];
  }

  /// Unchecked product for inner loops.
  Element mul_unchecked(Element x, Element y) const {
    return table_[x * order_ + y];
  }

  /// Least k >= 1 with x^k = 1.
  std::size_t element_order(Element x) const {
    check(x);
    std::size_t k = 1;
    for (Element p = x; p != identity(); p = mul_unchecked(p, x)) ++k;
    return k;
  }

  bool is_abelian() const {
    for (Element x = 0; x < order_; ++x)
      for (Element y = x + 1; y < order_; ++y)
        if (mul_unchecked(x, y) != mul_unchecked(y, x)) return false;
    return true;
  }

  std::size_t exponent() const {
    std::size_t e = 1;
    for (Element x = 0; x < order_; ++x) e = std::lcm(e, element_order(x));
    return e;
  }

  std::size_t involution_count() const {
    std::size_t c = 0;
    for (Element x = 1; x < order_; ++x)
      if (inv_[x] == x) ++c;
    return c;
  }

  std::vector<std::vector<Element>> table() const {
    std::vector<std::vector<Element>> rows(order_);
    for (std::size_t x = 0; x < order_; ++x)
      rows[x].assign(table_.begin() + static_cast<std::ptrdiff_t>(x * order_),
                     table_.begin() + static_cast<std::ptrdiff_t>((x + 1) * order_));
    return rows;
  }

  /// Index of the element with the given label.
  Element find(const std::string& label) const {
    auto it = std::find(labels_.begin(), labels_.end(), label);
    if (it == labels_.end()) throw ParseError("no element labelled '" + label + "'");
    return static_cast<Element>(it - labels_.begin());
  }

  friend bool operator==(const Group& a, const Group& b) {
    return a.table_ == b.table_ && a.labels_ == b.labels_;
  }

 private:
  void check(Element x) const {
    if (x >= order_)
      throw IndexError("element " + std::to_string(x) + " out of range for group of order " +
                       std::to_string(order_));
  }

  void validate() {
    for (Element x = 0; x < order_; ++x)
      if (mul_unchecked(0, x) != x || mul_unchecked(x, 0) != x)
        throw TableError("index 0 is not a two-sided identity");

    inv_.assign(order_, 0);
    for (Element x = 0; x < order_; ++x) {
      bool found = false;
      for (Element y = 0; y < order_; ++y) {
        if (mul_unchecked(x, y) == 0) {
          if (mul_unchecked(y, x) != 0)
            throw TableError("element " + std::to_string(x) + " has no two-sided inverse");
          inv_[x] = y;
          found = true;
          break;
        }
      }
      if (!found) throw TableError("element " + std::to_string(x) + " has no inverse");
    }

    auto assoc = [this](Element x, Element y, Element z) {
      return mul_unchecked(mul_unchecked(x, y), z) == mul_unchecked(x, mul_unchecked(y, z));
    };
    if (order_ <= kExhaustiveAssociativityLimit) {
      for (Element x = 0; x < order_; ++x)
        for (Element y = 0; y < order_; ++y)
          for (Element z = 0; z < order_; ++z)
            if (!assoc(x, y, z)) throw TableError("multiplication is not associative");
    } else {
      std::mt19937_64 rng(0x5eed);
      std::uniform_int_distribution<Element> pick(0, static_cast<Element>(order_ - 1));
      for (std::size_t i = 0; i < kSampledTriples; ++i)
        if (!assoc(pick(rng), pick(rng), pick(rng)))
          throw TableError("multiplication is not associative");
    }
  }

  std::size_t order_;
  std::vector<Element> table_;
  std::vector<Element> inv_;
  std::vector<std::string> labels_;
  std::string spec_;
};

inline Element mul(const Group& g, Element x, Element y) { return g.mul(x, y); }
inline std::size_t element_order(const Group& g, Element x) { return g.element_order(x); }

/// True iff every non-identity element has order 2 (vacuously true for Z1).
inline bool is_elementary_abelian_2(const Group& g) {
  for (Element x = 1; x < g.order(); ++x)
    if (g.inv(x) != x) return false;
  return true;
}

/// Sorted, duplicate-free set of elements of a group of fixed order, with a
/// membership mask kept in sync.
class ElementSet {
 public:
  ElementSet() = default;
  explicit ElementSet(std::size_t order) : mask_(order) {}
  ElementSet(std::size_t order, std::span<const Element> elems) : mask_(order) {
    for (Element e : elems) insert(e);
  }
  ElementSet(std::size_t order, std::initializer_list<Element> elems)
      : ElementSet(order, std::span<const Element>(elems.begin(), elems.size())) {}

  std::size_t universe() const { return mask_.size(); }
  std::size_t size() const { return elems_.size(); }
  bool empty() const { return elems_.empty(); }
  bool contains(Element e) const { return e < mask_.size() && mask_.test(e); }
  const std::vector<Element>& elements() const { return elems_; }
  const Bitset& mask() const { return mask_; }

  auto begin() const { return elems_.begin(); }
  auto end() const { return elems_.end(); }

  void insert(Element e) {
    if (e >= mask_.size())
      throw IndexError("element " + std::to_string(e) + " outside group of order " +
                       std::to_string(mask_.size()));
    if (mask_.test(e)) return;
    mask_.set(e);
    elems_.insert(std::lower_bound(elems_.begin(), elems_.end(), e), e);
  }

  void erase(Element e) {
    if (!contains(e)) return;
    mask_.reset(e);
    elems_.erase(std::lower_bound(elems_.begin(), elems_.end(), e));
  }

  friend bool operator==(const ElementSet& a, const ElementSet& b) {
    return a.elems_ == b.elems_ && a.universe() == b.universe();
  }

 private:
  Bitset mask_;
  std::vector<Element> elems_;
};

inline ElementSet set_inverse(const Group& g, const ElementSet& s) {
  ElementSet out(g.order());
  for (Element e : s) out.insert(g.inv(e));
  return out;
}

inline ElementSet set_union(const ElementSet& a, const ElementSet& b) {
  ElementSet out = a;
  for (Element e : b) out.insert(e);
  return out;
}

inline ElementSet set_intersection(const ElementSet& a, const ElementSet& b) {
  ElementSet out(a.universe());
  for (Element e : a)
    if (b.contains(e)) out.insert(e);
  return out;
}

inline ElementSet set_difference(const ElementSet& a, const ElementSet& b) {
  ElementSet out(a.universe());
  for (Element e : a)
    if (!b.contains(e)) out.insert(e);
  return out;
}

inline ElementSet set_complement(const ElementSet& a) {
  ElementSet out(a.universe());
  for (Element e = 0; e < a.universe(); ++e)
    if (!a.contains(e)) out.insert(e);
  return out;
}

/// Smallest subgroup containing s, as an element set.
inline ElementSet generated_subgroup(const Group& g, const ElementSet& s) {
  ElementSet out(g.order(), {Group::identity()});
  std::vector<Element> frontier{Group::identity()};
  while (!frontier.empty()) {
    const Element x = frontier.back();
    frontier.pop_back();
    for (Element t : s) {
      const Element y = g.mul_unchecked(x, t);
      if (!out.contains(y)) {
        out.insert(y);
        frontier.push_back(y);
      }
    }
  }
  return out;
}

}  // namespace pdr
