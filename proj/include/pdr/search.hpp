#pragma once

#include <algorithm>
#include <bit>
#include <cstddef>
#include <cstdint>
#include <cstdlib>
#include <numeric>
#include <optional>
#include <random>
#include <string>
#include <vector>

#include "pdr/automorphisms.hpp"
#include "pdr/enumeration.hpp"
#include "pdr/errors.hpp"
#include "pdr/group.hpp"
#include "pdr/json.hpp"
#include "pdr/ncayley.hpp"
#include "pdr/pdr_check.hpp"
#include "pdr/recipes.hpp"

namespace pdr {

/// kAuto enumerates when the whole candidate space fits in the budget and
/// samples otherwise.
enum class SearchMode { kExhaustive, kRandomized, kAuto };

struct SearchBudget {
  std::uint64_t max_candidates = 1'000'000;
  std::uint64_t seed = 0;
  SearchMode mode = SearchMode::kAuto;
  std::size_t threads = 1;

  bool exhaustive_for(std::uint64_t space) const {
    return mode == SearchMode::kExhaustive || (mode == SearchMode::kAuto && space <= max_candidates);
  }
};

/// A verified search result and how many candidates were examined to get it.
template <typename T>
struct Found {
  T value;
  std::uint64_t candidates = 0;
  GroupOrder aut_order = 0;
};

/// The five groups without a DRR: Q8, Z2^2, Z2^3, Z2^4, Z3^2.
inline bool lacks_drr(const Group& g) {
  if (is_elementary_abelian_2(g) && (g.order() == 4 || g.order() == 8 || g.order() == 16)) return true;
  return exceptional_kind(g) != ExceptionalGroup::kNone;
}

namespace detail {

inline ElementSet subset_of_pool(std::size_t order, const std::vector<Element>& pool,
                                 const std::vector<std::size_t>& picks) {
  ElementSet s(order);
  for (std::size_t p : picks) s.insert(pool[p]);
  return s;
}

inline std::vector<std::size_t> random_picks(std::size_t pool, std::size_t k, std::mt19937_64& rng) {
  std::vector<std::size_t> idx(pool);
  std::iota(idx.begin(), idx.end(), std::size_t{0});
  for (std::size_t i = 0; i < k; ++i) {
    std::uniform_int_distribution<std::size_t> pick(i, pool - 1);
    std::swap(idx[i], idx[pick(rng)]);
  }
  idx.resize(k);
  std::sort(idx.begin(), idx.end());
  return idx;
}

/// Subsets of `pool` with sizes in [min_size, max_size], by increasing size
/// and then lexicographically, addressed by a single global index.
class SizedSubsets {
 public:
  SizedSubsets(std::size_t pool, std::size_t min_size, std::size_t max_size) : pool_(pool) {
    for (std::size_t k = min_size; k <= max_size && k <= pool; ++k) {
      sizes_.push_back(k);
      counts_.push_back(binomial(pool, k));
      total_ = saturating_add(total_, counts_.back());
    }
  }
  std::uint64_t total() const { return total_; }
  std::vector<std::size_t> at(std::uint64_t index) const {
    for (std::size_t i = 0; i < sizes_.size(); ++i) {
      if (index < counts_[i]) return unrank_combination(pool_, sizes_[i], index);
      index -= counts_[i];
    }
    return {};
  }

 private:
  std::size_t pool_;
  std::vector<std::size_t> sizes_;
  std::vector<std::uint64_t> counts_;
  std::uint64_t total_ = 0;
};

}  // namespace detail

/// Subset sizes for randomized DRR sampling: every size from 1 to max_size,
/// nearest to |G|/4 first. Sampling cycles through this list, so no size is
/// starved; some groups only have DRRs of large valency (Z2^5 needs |R| >= 12).
inline std::vector<std::size_t> drr_size_schedule(std::size_t order, std::size_t max_size) {
  std::vector<std::size_t> sizes;
  for (std::size_t k = 1; k <= max_size; ++k) sizes.push_back(k);
  const auto target = static_cast<long>(order / 4);
  std::stable_sort(sizes.begin(), sizes.end(), [&](std::size_t x, std::size_t y) {
    return std::labs(static_cast<long>(x) - target) < std::labs(static_cast<long>(y) - target);
  });
  return sizes;
}

/// Connection set R with 1 not in R, |R| < (|G|-1)/2 and Cay(G, R) a DRR.
/// Exhaustive mode walks subsets by increasing size; randomized mode samples
/// sizes from drr_size_schedule in turn. Returns nothing when the budget runs
/// out.
inline std::optional<Found<ElementSet>> find_drr(const Group& g, const SearchBudget& budget) {
  if (g.order() < 4) throw PreconditionError("DRR search needs |G| >= 4");
  if (lacks_drr(g)) throw PreconditionError(g.spec() + " has no DRR; this call indicates a classification bug");
  std::vector<Element> pool;
  for (Element x = 1; x < g.order(); ++x) pool.push_back(x);
  // 2|R| < |G| - 1.
  const std::size_t max_size = (g.order() - 2) / 2;
  const ElementSet whole = set_complement(ElementSet(g.order()));

  auto accept = [&](const ElementSet& r) {
    // Disconnected Cayley digraphs on >= 3 vertices are never DRRs.
    if (generated_subgroup(g, r) != whole) return false;
    return is_drr(g, r);
  };

  const detail::SizedSubsets space(pool.size(), 1, max_size);
  if (budget.exhaustive_for(space.total())) {
    const std::uint64_t limit = std::min(space.total(), budget.max_candidates);
    const auto hit = first_match(limit, budget.threads, [&](std::uint64_t i) {
      return accept(detail::subset_of_pool(g.order(), pool, space.at(i)));
    });
    if (!hit) return std::nullopt;
    return Found<ElementSet>{detail::subset_of_pool(g.order(), pool, space.at(*hit)), *hit + 1, g.order()};
  }

  // Draws are made serially so the sample sequence depends only on the seed.
  std::mt19937_64 rng(budget.seed);
  const auto sizes = drr_size_schedule(g.order(), max_size);
  for (std::uint64_t t = 0; t < budget.max_candidates; ++t) {
    const std::size_t k = sizes[t % sizes.size()];
    const ElementSet r = detail::subset_of_pool(g.order(), pool, detail::random_picks(pool.size(), k, rng));
    if (accept(r)) return Found<ElementSet>{r, t + 1, g.order()};
  }
  return std::nullopt;
}

/// Companion L for a DRR connection set R: L avoids R^-1 and 1, |L| = |R|,
/// and Cay(G, R u {1}, L u {1}) is a 2-PDR.
inline Found<ElementSet> find_hdr_companion(const Group& g, const ElementSet& r, const SearchBudget& budget) {
  if (r.contains(Group::identity()) || 2 * r.size() >= g.order())
    throw PreconditionError("R must avoid the identity and satisfy |R| < |G|/2");
  if (!is_drr(g, r)) throw PreconditionError("Cay(G, R) is not a DRR");
  const ElementSet forbidden = detail::with_identity(set_inverse(g, r));
  std::vector<Element> pool;
  for (Element x = 0; x < g.order(); ++x)
    if (!forbidden.contains(x)) pool.push_back(x);
  const ElementSet r1 = detail::with_identity(r);
  auto accept = [&](const ElementSet& l) { return is_haar_pdr(g, r1, detail::with_identity(l)); };

  const detail::SizedSubsets space(pool.size(), r.size(), r.size());
  if (budget.exhaustive_for(space.total())) {
    const std::uint64_t limit = std::min(space.total(), budget.max_candidates);
    const auto hit = first_match(limit, budget.threads, [&](std::uint64_t i) {
      return accept(detail::subset_of_pool(g.order(), pool, space.at(i)));
    });
    if (!hit) throw BudgetExhausted("no HDR companion found within " + std::to_string(limit) + " candidates");
    return {detail::subset_of_pool(g.order(), pool, space.at(*hit)), *hit + 1, g.order()};
  }

  std::mt19937_64 rng(budget.seed);
  for (std::uint64_t t = 0; t < budget.max_candidates; ++t) {
    const ElementSet l = detail::subset_of_pool(g.order(), pool, detail::random_picks(pool.size(), r.size(), rng));
    if (accept(l)) return {l, t + 1, g.order()};
  }
  throw BudgetExhausted("no HDR companion found within " + std::to_string(budget.max_candidates) + " candidates");
}

namespace detail {

/// Backtracking over d-regular loop-free digraphs on n vertices: each
/// vertex picks a d-subset of the others as out-neighbours, in-degrees are
/// capped at d along the way.
class RegularDigraphWalker {
 public:
  RegularDigraphWalker(std::size_t n, std::size_t d, std::mt19937_64* rng) : n_(n), d_(d), rng_(rng) {
    for (Vertex v = 0; v < n; ++v) {
      std::vector<std::vector<Vertex>> options;
      for (std::uint64_t rank = 0; rank < binomial(n - 1, d); ++rank) {
        std::vector<Vertex> opt;
        for (std::size_t p : unrank_combination(n - 1, d, rank))
          opt.push_back(static_cast<Vertex>(p < v ? p : p + 1));
        options.push_back(std::move(opt));
      }
      if (rng_) std::shuffle(options.begin(), options.end(), *rng_);
      options_.push_back(std::move(options));
    }
  }

  /// Calls visit(arcs) for each complete regular digraph until it returns
  /// true or `limit` digraphs have been visited. Returns visited count.
  template <typename Visit>
  std::uint64_t walk(std::uint64_t limit, Visit&& visit) {
    indeg_.assign(n_, 0);
    chosen_.assign(n_, nullptr);
    visited_ = 0;
    done_ = false;
    recurse(0, limit, visit);
    return visited_;
  }

  bool found() const { return done_; }

 private:
  template <typename Visit>
  void recurse(Vertex v, std::uint64_t limit, Visit& visit) {
    if (done_ || visited_ >= limit) return;
    if (v == n_) {
      ++visited_;
      Digraph dg(n_);
      for (Vertex u = 0; u < n_; ++u)
        for (Vertex w : *chosen_[u]) dg.add_arc(u, w);
      if (visit(dg)) done_ = true;
      return;
    }
    for (const auto& opt : options_[v]) {
      bool ok = true;
      for (Vertex w : opt) ok = ok && indeg_[w] < d_;
      if (!ok) continue;
      // Vertices already past must have full in-degree once nobody else can
      // point at them; checked at the leaf via is_regular instead.
      for (Vertex w : opt) ++indeg_[w];
      chosen_[v] = &opt;
      recurse(v + 1, limit, visit);
      for (Vertex w : opt) --indeg_[w];
      if (done_ || visited_ >= limit) return;
    }
  }

  std::size_t n_, d_;
  std::mt19937_64* rng_;
  std::vector<std::vector<std::vector<Vertex>>> options_;
  std::vector<std::size_t> indeg_;
  std::vector<const std::vector<Vertex>*> chosen_;
  std::uint64_t visited_ = 0;
  bool done_ = false;
};

}  // namespace detail

/// Regular digraph on n >= 6 vertices with trivial automorphism group, i.e.
/// an n-PDR of the trivial group. Valencies are tried from 2 upwards.
inline Found<Digraph> find_trivial_group_npdr(std::size_t n, const SearchBudget& budget) {
  if (n < 6) throw PreconditionError("asymmetric regular digraphs need n >= 6");
  std::mt19937_64 rng(budget.seed);
  std::uint64_t used = 0;
  for (std::size_t d = 2; d + 2 <= n && used < budget.max_candidates; ++d) {
    detail::RegularDigraphWalker walker(n, d, budget.mode == SearchMode::kExhaustive ? nullptr : &rng);
    std::optional<Digraph> hit;
    used += walker.walk(budget.max_candidates - used, [&](const Digraph& dg) {
      if (!is_regular(dg)) return false;
      if (automorphisms(dg).order() != 1) return false;
      hit = dg;
      return true;
    });
    if (hit) return {*hit, used, 1};
  }
  throw BudgetExhausted("no asymmetric regular digraph on " + std::to_string(n) + " vertices within " +
                        std::to_string(budget.max_candidates) + " candidates");
}

/// Record of an exhaustive (or analytic) nonexistence argument.
struct NonExistenceCertificate {
  std::string group;
  std::size_t n = 0;  // 0 marks a DRR claim
  std::uint64_t candidates_enumerated = 0;
  bool confirmed = false;
  std::string method;  // "exhaustive" | "analytic" | "classification-cited"
  std::string reason;
  std::optional<std::uint64_t> witness_index;

  std::string claim() const {
    if (!confirmed) return "counterexample found";
    return n == 0 ? "no DRR exists" : "no n-PDR exists";
  }
};

inline Json certificate_to_json(const NonExistenceCertificate& c) {
  Json j{{"group", c.group}};
  if (c.n == 0)
    j["n"] = nullptr;
  else
    j["n"] = c.n;
  j["candidates_enumerated"] = c.candidates_enumerated;
  j["claim"] = c.claim();
  j["method"] = c.method;
  if (!c.reason.empty()) j["reason"] = c.reason;
  if (c.witness_index) j["witness_index"] = *c.witness_index;
  return j;
}

/// Size of the exhaustive candidate space for (G, n), if it is small enough
/// to enumerate: size-matched pairs (T01, T10) for n = 2, every partite
/// family otherwise.
inline std::optional<std::uint64_t> exhaustive_space(std::size_t order, std::size_t n) {
  if (n == 2) {
    if (order > 12) return std::nullopt;
    return binomial(2 * order, order);
  }
  const std::size_t bits = order * n * (n - 1);
  if (n < 2 || bits > 20) return std::nullopt;
  return std::uint64_t{1} << bits;
}

namespace detail {

/// The index-th candidate family for exhaustive n-PDR enumeration.
/// n = 2: pairs of equal size k, ordered by k, then lexicographically by
/// (rank of T01, rank of T10). n >= 3: bit b of the index puts element
/// b % |G| into the b / |G|-th off-diagonal set (row-major).
class FamilySpace {
 public:
  FamilySpace(std::size_t order, std::size_t n) : order_(order), n_(n) {
    if (n == 2)
      for (std::size_t k = 0; k <= order; ++k) {
        const std::uint64_t c = binomial(order, k);
        pair_counts_.push_back(c * c);
      }
  }

  /// Quick valency check straight from the index.
  bool regular(std::uint64_t index) const {
    if (n_ == 2) return true;
    std::vector<std::size_t> rows(n_, 0), cols(n_, 0);
    std::size_t b = 0;
    for (std::size_t i = 0; i < n_; ++i)
      for (std::size_t j = 0; j < n_; ++j) {
        if (i == j) continue;
        const auto set = (index >> b) & ((std::uint64_t{1} << order_) - 1);
        const auto c = static_cast<std::size_t>(std::popcount(set));
        rows[i] += c;
        cols[j] += c;
        b += order_;
      }
    for (std::size_t i = 0; i < n_; ++i)
      if (rows[i] != rows[0] || cols[i] != rows[0]) return false;
    return true;
  }

  ConnectionFamily at(std::uint64_t index) const {
    ConnectionFamily f(order_, n_);
    if (n_ == 2) {
      std::size_t k = 0;
      while (index >= pair_counts_[k]) index -= pair_counts_[k++];
      const std::uint64_t c = binomial(order_, k);
      for (std::size_t x : unrank_combination(order_, k, index / c)) f.at(0, 1).insert(static_cast<Element>(x));
      for (std::size_t x : unrank_combination(order_, k, index % c)) f.at(1, 0).insert(static_cast<Element>(x));
      return f;
    }
    std::size_t b = 0;
    for (std::size_t i = 0; i < n_; ++i)
      for (std::size_t j = 0; j < n_; ++j) {
        if (i == j) continue;
        for (std::size_t x = 0; x < order_; ++x, ++b)
          if ((index >> b) & 1u) f.at(i, j).insert(static_cast<Element>(x));
      }
    return f;
  }

 private:
  std::size_t order_, n_;
  std::vector<std::uint64_t> pair_counts_;
};

}  // namespace detail

/// Enumerates every candidate n-partite Cayley digraph of G and confirms
/// that none is an n-PDR. For n = 1 and |G| >= 3 the argument is analytic.
inline NonExistenceCertificate prove_nonexistence(const Group& g, std::size_t n, std::size_t threads = 1) {
  if (n == 0) throw PreconditionError("n must be positive");
  NonExistenceCertificate cert{g.spec(), n, 0, false, "exhaustive", "", std::nullopt};
  if (n == 1) {
    // The only partite 1-Cayley digraph is the empty digraph on G, whose
    // automorphism group is Sym(|G|).
    cert.candidates_enumerated = 1;
    cert.method = "analytic";
    cert.confirmed = g.order() >= 3;
    cert.reason = "the empty digraph on |G| vertices has automorphism group of order |G|!";
    if (!cert.confirmed) cert.witness_index = 0;
    return cert;
  }
  const auto space = exhaustive_space(g.order(), n);
  if (!space)
    throw TooLargeError("candidate space for " + g.spec() + " at n=" + std::to_string(n) +
                        " is too large to enumerate");
  const detail::FamilySpace families(g.order(), n);
  const auto hit = first_match(*space, threads, [&](std::uint64_t i) {
    if (!families.regular(i)) return false;
    return is_npdr(g, families.at(i));
  });
  cert.candidates_enumerated = hit ? *hit + 1 : *space;
  cert.confirmed = !hit;
  cert.witness_index = hit;
  return cert;
}

/// Enumerates all 2^(|G|-1) connection sets and confirms none gives a DRR.
inline NonExistenceCertificate prove_no_drr(const Group& g, std::size_t threads = 1) {
  if (g.order() > 21) throw TooLargeError("DRR enumeration limited to |G| <= 21");
  const std::uint64_t space = std::uint64_t{1} << (g.order() - 1);
  const auto hit = first_match(space, threads, [&](std::uint64_t mask) {
    ElementSet r(g.order());
    for (Element x = 1; x < g.order(); ++x)
      if ((mask >> (x - 1)) & 1u) r.insert(x);
    return is_drr(g, r);
  });
  NonExistenceCertificate cert{g.spec(), 0, hit ? *hit + 1 : space, !hit, "exhaustive", "", hit};
  return cert;
}

}  // namespace pdr
