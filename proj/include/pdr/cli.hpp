#pragma once

#include <CLI11.hpp>

#include <cstdlib>
#include <fstream>
#include <iostream>
#include <map>
#include <optional>
#include <sstream>
#include <string>
#include <vector>

#include "pdr/classify.hpp"
#include "pdr/digraph_io.hpp"
#include "pdr/errors.hpp"
#include "pdr/group_zoo.hpp"
#include "pdr/json.hpp"
#include "pdr/search.hpp"

namespace pdr::cli {

enum ExitCode : int { kOk = 0, kNegative = 1, kUsage = 2, kBudget = 3, kInternal = 4 };

enum class Format { kJson, kDot, kEdges };

struct Config {
  std::string command;
  std::string group;
  std::size_t n = 0;
  Format format = Format::kJson;
  std::string out;
  std::uint64_t seed = 0;
  std::uint64_t budget = SearchBudget{}.max_candidates;
  bool randomized = false;
  bool exhaustive = false;
  std::string digraph;
  std::string search_kind;
  std::vector<Element> set;
  bool drr = false;
};

inline std::size_t threads_from_env() {
  const char* v = std::getenv("PDR_THREADS");
  if (!v || !*v) return 1;
  try {
    const unsigned long t = std::stoul(v);
    return t == 0 ? 1 : t;
  } catch (const std::exception&) {
    throw ParseError(std::string("PDR_THREADS must be a positive integer, got '") + v + "'");
  }
}

inline SearchBudget budget_of(const Config& c) {
  SearchBudget b;
  b.max_candidates = c.budget;
  b.seed = c.seed;
  b.mode = c.randomized ? SearchMode::kRandomized : c.exhaustive ? SearchMode::kExhaustive : SearchMode::kAuto;
  b.threads = threads_from_env();
  return b;
}

inline std::vector<std::string> vertex_names(const Group& g, std::size_t n) {
  std::vector<std::string> names;
  for (std::size_t i = 0; i < n; ++i)
    for (Element x = 0; x < g.order(); ++x) names.push_back(g.label(x) + "_" + std::to_string(i));
  return names;
}

inline std::string read_file(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw ParseError("cannot open '" + path + "'");
  std::stringstream ss;
  ss << in.rdbuf();
  return ss.str();
}

/// Digraph JSON, a build output (digraph under "digraph"), or an edge list.
inline Digraph load_digraph(const std::string& path) {
  const std::string text = read_file(path);
  const auto first = text.find_first_not_of(" \t\r\n");
  if (first != std::string::npos && text[first] == '{') {
    Json j;
    try {
      j = Json::parse(text);
    } catch (const Json::exception& e) {
      throw ParseError("bad JSON in '" + path + "': " + e.what());
    }
    if (j.contains("digraph") && j["digraph"].contains("arcs")) return digraph_from_json(j["digraph"]);
    return digraph_from_json(j);
  }
  std::istringstream in(text);
  return digraph_from_edges(in);
}

/// Writes to --out when given, else to the standard stream.
inline void emit(const Config& c, const std::string& text, std::ostream& out) {
  if (c.out.empty()) {
    out << text;
    return;
  }
  std::ofstream file(c.out);
  if (!file) throw ParseError("cannot write '" + c.out + "'");
  file << text;
}

inline std::string dump(const Json& j) { return j.dump(2) + "\n"; }

inline int do_classify(const Config& c, std::ostream& out, std::ostream& err) {
  const Group g = parse_group(c.group);
  const Verdict v = classify(g, c.n);
  Json j{{"group", g.spec()}, {"n", c.n}, {"admits", v.admits}};
  if (!v.admits) j["clause"] = v.clause;
  j["reason"] = v.reason;
  out << dump(j);
  if (v.admits)
    err << g.spec() << " admits a " << c.n << "-PDR\n";
  else
    err << g.spec() << " admits no " << c.n << "-PDR (clause " << v.clause << ": " << v.reason << ")\n";
  return v.admits ? kOk : kNegative;
}

inline int do_build(const Config& c, std::ostream& out, std::ostream& err) {
  const Group g = parse_group(c.group);
  const Certificate cert = build_npdr(g, c.n, budget_of(c));
  if (!cert.exists) {
    out << dump(certificate_to_json(cert));
    err << g.spec() << " admits no " << c.n << "-PDR (" << cert.method << ", " << cert.candidates
        << " candidates)\n";
    return kNegative;
  }
  const Digraph& d = cert.instance->digraph;
  switch (c.format) {
    case Format::kJson:
      emit(c, dump(Json{{"certificate", certificate_to_json(cert)}, {"digraph", digraph_to_json(d)}}), out);
      break;
    case Format::kDot:
      emit(c, digraph_to_dot(d, vertex_names(g, c.n)), out);
      break;
    case Format::kEdges:
      emit(c, digraph_to_edges(d), out);
      break;
  }
  if (!c.out.empty() && c.format != Format::kJson) out << dump(certificate_to_json(cert));
  err << "built " << c.n << "-PDR of " << g.spec() << " via " << cert.method << ": " << d.vertex_count()
      << " vertices, " << d.arc_count() << " arcs, aut order " << cert.aut_order << "\n";
  return kOk;
}

inline int do_verify(const Config& c, std::ostream& out, std::ostream& err) {
  const Group g = parse_group(c.group);
  const Digraph d = load_digraph(c.digraph);
  if (d.vertex_count() == 0 || d.vertex_count() % g.order() != 0)
    throw PreconditionError("digraph has " + std::to_string(d.vertex_count()) + " vertices, not a multiple of |G| = " +
                            std::to_string(g.order()));
  const std::size_t n = d.vertex_count() / g.order();
  const Certificate cert = verify_digraph(g, n, d);
  out << dump(certificate_to_json(cert));
  err << (cert.exists ? "verified: " : "not an n-PDR: ") << g.spec() << ", n=" << n << ", aut order "
      << cert.aut_order << "\n";
  return cert.exists ? kOk : kNegative;
}

inline Json set_json(const Group& g, const ElementSet& s) {
  Json labels = Json::array();
  for (Element x : s) labels.push_back(g.label(x));
  return Json{{"elements", s.elements()}, {"labels", labels}};
}

inline int do_search(const Config& c, std::ostream& out, std::ostream& err) {
  const SearchBudget budget = budget_of(c);
  if (c.search_kind == "trivial-npdr") {
    const auto found = find_trivial_group_npdr(c.n, budget);
    out << dump(Json{{"n", c.n},
                     {"candidates", found.candidates},
                     {"seed", c.seed},
                     {"digraph", digraph_to_json(found.value)}});
    err << "asymmetric regular digraph on " << c.n << " vertices after " << found.candidates << " candidates\n";
    return kOk;
  }
  const Group g = parse_group(c.group);
  if (c.search_kind == "drr") {
    const auto found = find_drr(g, budget);
    if (!found) {
      err << "no DRR of " << g.spec() << " within " << c.budget << " candidates\n";
      return kBudget;
    }
    out << dump(Json{{"group", g.spec()},
                     {"R", set_json(g, found->value)},
                     {"candidates", found->candidates},
                     {"seed", c.seed}});
    return kOk;
  }
  // hdr: companion for the given R, or for the first DRR found.
  ElementSet r(g.order());
  std::uint64_t used = 0;
  if (c.set.empty()) {
    const auto found = find_drr(g, budget);
    if (!found) {
      err << "no DRR of " << g.spec() << " within " << c.budget << " candidates\n";
      return kBudget;
    }
    r = found->value;
    used = found->candidates;
  } else {
    for (Element x : c.set) r.insert(x);
  }
  const auto l = find_hdr_companion(g, r, budget);
  out << dump(Json{{"group", g.spec()},
                   {"R", set_json(g, r)},
                   {"L", set_json(g, l.value)},
                   {"candidates", used + l.candidates},
                   {"seed", c.seed}});
  return kOk;
}

inline int do_nonexist(const Config& c, std::ostream& out, std::ostream& err) {
  const Group g = parse_group(c.group);
  const std::size_t threads = threads_from_env();
  const NonExistenceCertificate cert = c.drr ? prove_no_drr(g, threads) : prove_nonexistence(g, c.n, threads);
  out << dump(certificate_to_json(cert));
  err << cert.claim() << " for " << g.spec() << (c.drr ? "" : ", n=" + std::to_string(c.n)) << " ("
      << cert.candidates_enumerated << " candidates)\n";
  return cert.confirmed ? kNegative : kOk;
}

inline int run(int argc, const char* const* argv, std::ostream& out, std::ostream& err) {
  Config c;
  CLI::App app{"Construct, classify and verify n-partite digraphical representations of finite groups", "pdr"};
  app.require_subcommand(1);
  const std::map<std::string, Format> formats{{"json", Format::kJson}, {"dot", Format::kDot}, {"edges", Format::kEdges}};
  const auto* group_help = "group descriptor: Zk, Zm^k, Q8, Sk, Dk, AxB or table:<path>";

  auto* classify_cmd = app.add_subcommand("classify", "decide whether G admits an n-PDR");
  classify_cmd->add_option("--group", c.group, group_help)->required();
  classify_cmd->add_option("--n", c.n, "number of parts")->required()->check(CLI::PositiveNumber);

  auto* build_cmd = app.add_subcommand("build", "build and verify an n-PDR, or certify that none exists");
  build_cmd->add_option("--group", c.group, group_help)->required();
  build_cmd->add_option("--n", c.n, "number of parts")->required()->check(CLI::PositiveNumber);
  build_cmd->add_option("--format", c.format, "json, dot or edges")->transform(CLI::CheckedTransformer(formats));
  build_cmd->add_option("--out", c.out, "write the digraph here instead of the standard stream");

  auto* verify_cmd = app.add_subcommand("verify", "check a stored digraph against the n-PDR conditions");
  verify_cmd->add_option("--group", c.group, group_help)->required();
  verify_cmd->add_option("--digraph", c.digraph, "digraph JSON, build output or edge list")->required();

  auto* search_cmd = app.add_subcommand("search", "run an ingredient search");
  search_cmd->add_option("kind", c.search_kind, "drr, hdr or trivial-npdr")
      ->required()
      ->check(CLI::IsMember({"drr", "hdr", "trivial-npdr"}));
  search_cmd->add_option("--group", c.group, group_help);
  search_cmd->add_option("--n", c.n, "vertex count for trivial-npdr");
  search_cmd->add_option("--set", c.set, "R as element indices, for hdr")->delimiter(',');

  auto* nonexist_cmd = app.add_subcommand("nonexist", "exhaustively confirm that no n-PDR (or DRR) exists");
  nonexist_cmd->add_option("--group", c.group, group_help)->required();
  nonexist_cmd->add_option("--n", c.n, "number of parts");
  nonexist_cmd->add_flag("--drr", c.drr, "enumerate Cayley digraphs instead of n-partite families");

  for (auto* cmd : {build_cmd, search_cmd}) {
    cmd->add_option("--seed", c.seed, "random seed (default 0)");
    cmd->add_option("--budget", c.budget, "maximum number of candidates")->check(CLI::PositiveNumber);
    auto* r = cmd->add_flag("--randomized", c.randomized, "always sample candidates");
    auto* e = cmd->add_flag("--exhaustive", c.exhaustive, "always enumerate candidates in order");
    r->excludes(e);
    // Default: enumerate when the space fits in the budget, sample otherwise.
  }

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e, out, err);
    return code == 0 ? kOk : kUsage;
  }

  try {
    if (*classify_cmd) return do_classify(c, out, err);
    if (*build_cmd) return do_build(c, out, err);
    if (*verify_cmd) return do_verify(c, out, err);
    if (*search_cmd) {
      if (c.search_kind == "trivial-npdr" ? c.n == 0 : c.group.empty())
        throw PreconditionError(c.search_kind == "trivial-npdr" ? "--n is required" : "--group is required");
      return do_search(c, out, err);
    }
    if (!c.drr && c.n == 0) throw PreconditionError("--n is required unless --drr is given");
    return do_nonexist(c, out, err);
  } catch (const BudgetExhausted& e) {
    err << "budget exhausted: " << e.what() << "\n";
    return kBudget;
  } catch (const VerificationError& e) {
    err << "internal error: " << e.what() << "\n";
    return kInternal;
  } catch (const std::exception& e) {
    err << "error: " << e.what() << "\n";
    return kUsage;
  }
}

}  // namespace pdr::cli
