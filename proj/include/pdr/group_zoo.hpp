#pragma once

#include <algorithm>
#include <cctype>
#include <cstddef>
#include <fstream>
#include <numeric>
#include <sstream>
#include <string>
#include <string_view>
#include <vector>

#include "pdr/json.hpp"
#include "pdr/errors.hpp"
#include "pdr/group.hpp"

namespace pdr {

/// Descriptors naming larger groups are rejected.
inline constexpr std::size_t kMaxGroupOrder = 512;

namespace detail {

inline std::string letter_word(const std::vector<std::size_t>& exponents) {
  std::string out;
  for (std::size_t i = 0; i < exponents.size(); ++i) {
    if (exponents[i] == 0) continue;
    out += static_cast<char>('a' + i);
    if (exponents[i] > 1) out += "^" + std::to_string(exponents[i]);
  }
  return out.empty() ? "1" : out;
}

// "a^i b^j" with the given letters; identity is "1".
inline std::string power_word(std::size_t i, std::size_t j, char x, char y) {
  std::string out;
  if (i > 0) out += std::string(1, x) + (i > 1 ? "^" + std::to_string(i) : "");
  if (j > 0) out += std::string(1, y) + (j > 1 ? "^" + std::to_string(j) : "");
  return out.empty() ? "1" : out;
}

}  // namespace detail

/// Z_k with elements 1, a, a^2, ...
inline Group make_cyclic(std::size_t k) {
  if (k == 0) throw ParseError("cyclic group order must be positive");
  std::vector<std::vector<Element>> mul(k, std::vector<Element>(k));
  std::vector<std::string> labels(k);
  for (std::size_t i = 0; i < k; ++i) {
    labels[i] = detail::power_word(i, 0, 'a', 'b');
    for (std::size_t j = 0; j < k; ++j) mul[i][j] = static_cast<Element>((i + j) % k);
  }
  return Group(std::move(mul), std::move(labels), "Z" + std::to_string(k));
}

/// Z_m^k enumerated lexicographically by exponent vector (first generator
/// most significant). Generators are named a, b, c, ...
inline Group make_homocyclic(std::size_t m, std::size_t k) {
  if (m == 0 || k == 0 || k > 26) throw ParseError("bad homocyclic parameters");
  std::size_t order = 1;
  for (std::size_t i = 0; i < k; ++i) order *= m;
  auto digits = [&](std::size_t x) {
    std::vector<std::size_t> d(k);
    for (std::size_t i = k; i-- > 0;) {
      d[i] = x % m;
      x /= m;
    }
    return d;
  };
  std::vector<std::vector<Element>> mul(order, std::vector<Element>(order));
  std::vector<std::string> labels(order);
  for (std::size_t x = 0; x < order; ++x) {
    const auto dx = digits(x);
    labels[x] = detail::letter_word(dx);
    for (std::size_t y = 0; y < order; ++y) {
      const auto dy = digits(y);
      std::size_t z = 0;
      for (std::size_t i = 0; i < k; ++i) z = z * m + (dx[i] + dy[i]) % m;
      mul[x][y] = static_cast<Element>(z);
    }
  }
  std::string spec = "Z" + std::to_string(m) + (k > 1 ? "^" + std::to_string(k) : "");
  return Group(std::move(mul), std::move(labels), std::move(spec));
}

/// Q8 = <a, b | a^4 = 1, b^2 = a^2, b^-1 a b = a^-1>, enumerated as
/// 1, a, a^2, a^3, b, ab, a^2b, a^3b.
inline Group make_quaternion() {
  // a^i b^j * a^k b^l = a^(i + (-1)^j k) b^(j + l), with b^2 = a^2.
  std::vector<std::vector<Element>> mul(8, std::vector<Element>(8));
  std::vector<std::string> labels(8);
  for (std::size_t x = 0; x < 8; ++x) {
    const std::size_t i = x % 4, j = x / 4;
    labels[x] = detail::power_word(i, j, 'a', 'b');
    for (std::size_t y = 0; y < 8; ++y) {
      const std::size_t k = y % 4, l = y / 4;
      std::size_t p = (j == 0 ? i + k : i + 4 - k) % 4;
      std::size_t q = j + l;
      if (q == 2) {
        p = (p + 2) % 4;
        q = 0;
      }
      mul[x][y] = static_cast<Element>(p + 4 * q);
    }
  }
  return Group(std::move(mul), std::move(labels), "Q8");
}

/// Dihedral group of order 2k: rotation a of order k, reflection b,
/// enumerated as 1, a, ..., a^(k-1), b, ab, ..., a^(k-1)b.
inline Group make_dihedral(std::size_t k) {
  if (k < 2) throw ParseError("dihedral parameter must be at least 2");
  const std::size_t order = 2 * k;
  std::vector<std::vector<Element>> mul(order, std::vector<Element>(order));
  std::vector<std::string> labels(order);
  for (std::size_t x = 0; x < order; ++x) {
    const std::size_t i = x % k, j = x / k;
    labels[x] = detail::power_word(i, j, 'a', 'b');
    for (std::size_t y = 0; y < order; ++y) {
      const std::size_t m = y % k, l = y / k;
      const std::size_t p = (j == 0 ? i + m : i + k - m) % k;
      mul[x][y] = static_cast<Element>(p + k * ((j + l) % 2));
    }
  }
  return Group(std::move(mul), std::move(labels), "D" + std::to_string(k));
}

/// Symmetric group on k points, permutations in lexicographic order of their
/// one-line images (identity first). Product x*y applies x first, then y.
inline Group make_symmetric(std::size_t k) {
  if (k == 0 || k > 5) throw ParseError("symmetric group degree must be in 1..5");
  std::vector<std::vector<std::size_t>> perms;
  std::vector<std::size_t> p(k);
  std::iota(p.begin(), p.end(), 0);
  do perms.push_back(p);
  while (std::next_permutation(p.begin(), p.end()));
  const std::size_t order = perms.size();
  auto index_of = [&](const std::vector<std::size_t>& q) {
    return static_cast<Element>(std::lower_bound(perms.begin(), perms.end(), q) - perms.begin());
  };
  std::vector<std::vector<Element>> mul(order, std::vector<Element>(order));
  std::vector<std::string> labels(order);
  for (std::size_t x = 0; x < order; ++x) {
    std::string cycles;
    std::vector<bool> seen(k, false);
    for (std::size_t s = 0; s < k; ++s) {
      if (seen[s] || perms[x][s] == s) continue;
      cycles += "(";
      for (std::size_t t = s; !seen[t]; t = perms[x][t]) {
        seen[t] = true;
        cycles += std::to_string(t + 1);
        if (!seen[perms[x][t]]) cycles += " ";
      }
      cycles += ")";
    }
    labels[x] = cycles.empty() ? "1" : cycles;
    for (std::size_t y = 0; y < order; ++y) {
      std::vector<std::size_t> q(k);
      for (std::size_t s = 0; s < k; ++s) q[s] = perms[y][perms[x][s]];
      mul[x][y] = index_of(q);
    }
  }
  return Group(std::move(mul), std::move(labels), "S" + std::to_string(k));
}

/// Direct product of the given factors, enumerated lexicographically by
/// component tuple (first factor most significant).
inline Group make_direct_product(const std::vector<Group>& factors) {
  if (factors.empty()) throw ParseError("empty direct product");
  if (factors.size() == 1) return factors.front();
  std::size_t order = 1;
  for (const auto& f : factors) order *= f.order();
  if (order > kMaxGroupOrder) throw ParseError("direct product too large");
  auto components = [&](std::size_t x) {
    std::vector<Element> c(factors.size());
    for (std::size_t i = factors.size(); i-- > 0;) {
      c[i] = static_cast<Element>(x % factors[i].order());
      x /= factors[i].order();
    }
    return c;
  };
  std::vector<std::vector<Element>> mul(order, std::vector<Element>(order));
  std::vector<std::string> labels(order);
  std::string spec;
  for (std::size_t i = 0; i < factors.size(); ++i)
    spec += (i ? "x" : "") + factors[i].spec();
  for (std::size_t x = 0; x < order; ++x) {
    const auto cx = components(x);
    if (x == 0) {
      labels[x] = "1";
    } else {
      labels[x] = "(";
      for (std::size_t i = 0; i < cx.size(); ++i)
        labels[x] += (i ? "," : "") + factors[i].label(cx[i]);
      labels[x] += ")";
    }
    for (std::size_t y = 0; y < order; ++y) {
      const auto cy = components(y);
      std::size_t z = 0;
      for (std::size_t i = 0; i < factors.size(); ++i)
        z = z * factors[i].order() + factors[i].mul_unchecked(cx[i], cy[i]);
      mul[x][y] = static_cast<Element>(z);
    }
  }
  return Group(std::move(mul), std::move(labels), std::move(spec));
}

inline Group make_direct_product(const Group& g, const Group& h) {
  return make_direct_product(std::vector<Group>{g, h});
}

/// Builds a group from the table-file JSON object
/// {"order":k,"mul":[[...]],"labels":[...]}.
inline Group group_from_json(const Json& j, std::string spec) {
  try {
    const auto order = j.at("order").get<std::size_t>();
    auto mul = j.at("mul").get<std::vector<std::vector<Element>>>();
    std::vector<std::string> labels;
    if (j.contains("labels")) labels = j.at("labels").get<std::vector<std::string>>();
    if (mul.size() != order) throw TableError("'order' does not match table size");
    if (order > kMaxGroupOrder) throw TableError("group table too large");
    return Group(std::move(mul), std::move(labels), std::move(spec));
  } catch (const Json::exception& e) {
    throw ParseError(std::string("bad group table: ") + e.what());
  }
}

inline Group group_from_table(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw ParseError("cannot open group table '" + path + "'");
  Json j;
  try {
    in >> j;
  } catch (const Json::exception& e) {
    throw ParseError("group table '" + path + "' is not valid JSON: " + e.what());
  }
  return group_from_json(j, "table:" + path);
}

inline Json group_to_json(const Group& g) {
  return Json{{"order", g.order()}, {"mul", g.table()}, {"labels", g.labels()}};
}

namespace detail {

inline std::size_t parse_count(std::string_view s, std::string_view whole) {
  if (s.empty() || s.size() > 6 ||
      !std::all_of(s.begin(), s.end(), [](char c) { return std::isdigit(static_cast<unsigned char>(c)); }))
    throw ParseError("bad group descriptor '" + std::string(whole) + "'");
  return static_cast<std::size_t>(std::stoul(std::string(s)));
}

inline Group parse_factor(std::string_view f, std::string_view whole) {
  if (f == "Q8") return make_quaternion();
  if (f.size() < 2) throw ParseError("bad group descriptor '" + std::string(whole) + "'");
  const char kind = f.front();
  const std::string_view rest = f.substr(1);
  if (kind == 'Z') {
    const auto caret = rest.find('^');
    if (caret == std::string_view::npos) {
      const auto k = parse_count(rest, whole);
      if (k > kMaxGroupOrder) throw ParseError("group too large: '" + std::string(f) + "'");
      return make_cyclic(k);
    }
    const auto m = parse_count(rest.substr(0, caret), whole);
    const auto k = parse_count(rest.substr(caret + 1), whole);
    std::size_t order = 1;
    for (std::size_t i = 0; i < k && order <= kMaxGroupOrder; ++i) order *= m;
    if (order > kMaxGroupOrder) throw ParseError("group too large: '" + std::string(f) + "'");
    return k == 1 ? make_cyclic(m) : make_homocyclic(m, k);
  }
  if (kind == 'S') return make_symmetric(parse_count(rest, whole));
  if (kind == 'D') {
    const auto k = parse_count(rest, whole);
    if (2 * k > kMaxGroupOrder) throw ParseError("group too large: '" + std::string(f) + "'");
    return make_dihedral(k);
  }
  throw ParseError("unknown group '" + std::string(f) + "' in '" + std::string(whole) + "'");
}

}  // namespace detail

/// Parses a group descriptor:
///   Zk | Zm^k | Q8 | Sk | Dk (dihedral of order 2k) | A x B x ... | table:<path>
inline Group parse_group(const std::string& spec) {
  constexpr std::string_view kTable = "table:";
  if (spec.rfind(kTable, 0) == 0) return group_from_table(spec.substr(kTable.size()));
  std::vector<Group> factors;
  std::string_view rest = spec;
  while (true) {
    const auto x = rest.find('x');
    factors.push_back(detail::parse_factor(rest.substr(0, x), spec));
    if (x == std::string_view::npos) break;
    rest = rest.substr(x + 1);
  }
  if (factors.size() == 1) return std::move(factors.front());
  Group g = make_direct_product(factors);
  return Group(g.table(), g.labels(), spec);
}

}  // namespace pdr
