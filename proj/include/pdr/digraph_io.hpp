#pragma once

#include <algorithm>
#include <cstddef>
#include <istream>
#include <sstream>
#include <string>
#include <vector>

#include "pdr/json.hpp"
#include "pdr/digraph.hpp"
#include "pdr/errors.hpp"

namespace pdr {

inline Json digraph_to_json(const Digraph& d) {
  Json arcs = Json::array();
  for (const auto& [u, v] : d.arcs()) arcs.push_back({u, v});
  return Json{{"version", 1}, {"vertex_count", d.vertex_count()}, {"arcs", std::move(arcs)}};
}

inline Digraph digraph_from_json(const Json& j) {
  try {
    if (j.at("version").get<int>() != 1) throw ParseError("unsupported digraph version");
    Digraph d(j.at("vertex_count").get<std::size_t>());
    for (const auto& a : j.at("arcs")) {
      if (!a.is_array() || a.size() != 2) throw ParseError("arc must be a [u, v] pair");
      d.add_arc(a[0].get<Vertex>(), a[1].get<Vertex>());
    }
    return d;
  } catch (const Json::exception& e) {
    throw ParseError(std::string("bad digraph JSON: ") + e.what());
  } catch (const IndexError& e) {
    throw ParseError(std::string("bad digraph JSON: ") + e.what());
  }
}

/// One "u v" line per arc, preceded by a "# vertices N" header so isolated
/// vertices survive a round trip.
inline std::string digraph_to_edges(const Digraph& d) {
  std::ostringstream out;
  out << "# vertices " << d.vertex_count() << "\n";
  for (const auto& [u, v] : d.arcs()) out << u << " " << v << "\n";
  return out.str();
}

inline Digraph digraph_from_edges(std::istream& in) {
  std::vector<Arc> arcs;
  std::size_t declared = 0;
  bool has_header = false;
  std::size_t max_vertex_plus_one = 0;
  std::string line;
  while (std::getline(in, line)) {
    std::istringstream ls(line);
    std::string first;
    if (!(ls >> first)) continue;
    if (first == "#") {
      std::string key;
      if (ls >> key && key == "vertices") {
        if (!(ls >> declared)) throw ParseError("bad vertex-count header");
        has_header = true;
      }
      continue;
    }
    long long u = 0, v = 0;
    try {
      u = std::stoll(first);
    } catch (const std::exception&) {
      throw ParseError("bad edge line '" + line + "'");
    }
    if (!(ls >> v) || u < 0 || v < 0) throw ParseError("bad edge line '" + line + "'");
    arcs.emplace_back(static_cast<Vertex>(u), static_cast<Vertex>(v));
    max_vertex_plus_one = std::max<std::size_t>(max_vertex_plus_one, static_cast<std::size_t>(std::max(u, v)) + 1);
  }
  const std::size_t n = has_header ? declared : max_vertex_plus_one;
  if (max_vertex_plus_one > n) throw ParseError("edge endpoint exceeds declared vertex count");
  return Digraph(n, arcs);
}

/// Graphviz export. Digons are drawn once with dir=both.
inline std::string digraph_to_dot(const Digraph& d, const std::vector<std::string>& names = {}) {
  std::ostringstream out;
  auto name = [&](Vertex v) {
    return names.size() == d.vertex_count() ? "\"" + names[v] + "\"" : std::to_string(v);
  };
  out << "digraph G {\n";
  for (Vertex v = 0; v < d.vertex_count(); ++v) out << "  " << name(v) << ";\n";
  for (const auto& [u, v] : d.arcs()) {
    const bool digon = d.has_arc(v, u);
    if (digon && v < u) continue;
    out << "  " << name(u) << " -> " << name(v) << (digon ? " [dir=both]" : "") << ";\n";
  }
  out << "}\n";
  return out.str();
}

}  // namespace pdr
