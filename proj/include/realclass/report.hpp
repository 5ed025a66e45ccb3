#pragma once

// Per-group reports and their JSON form.  Keys are sorted (nlohmann::json
// objects are ordered maps), arrays keep the documented orders, and integers
// beyond 2^53 - 1 are written as decimal strings.

#include <cstdint>
#include <fstream>
#include <optional>
#include <string>
#include <vector>

#include "json.hpp"

#include "realclass/corpus.hpp"
#include "realclass/families.hpp"
#include "realclass/parallel.hpp"
#include "realclass/prime_graph.hpp"
#include "realclass/verify.hpp"

namespace realclass {

using nlohmann::json;

struct Invariants {
  std::uint64_t order = 0;
  std::uint64_t center_order = 0;
  bool solvable = false;
  bool two_closed = false;
  bool two_nilpotent = false;
  std::uint64_t o_upper2_order = 0;  // |O^{2'}(G)|
  std::uint64_t o_lower2_order = 0;  // |O_{2'}(G)|
  std::uint64_t o2_order = 0;        // |O_2(G)|
};

struct Report {
  GroupSpec spec;
  std::optional<std::string> error;  // set when the group could not be built
  Invariants invariants;
  std::vector<std::uint64_t> real_sizes;  // ascending, with repeats
  PrimeGraph graph;
  std::vector<Verdict> verdicts;

  std::size_t failures() const {
    std::size_t n = 0;
    for (const auto& v : verdicts) n += v.applicable && !v.passed;
    return n;
  }
};

inline Report make_report(const GroupSpec& spec, const std::vector<std::string>& selection,
                          std::size_t cap = default_cap()) {
  Report r;
  r.spec = spec;
  std::optional<Group> g;
  try {
    g = spec.build(cap);
  } catch (const ClosureExceedsCap& e) {
    r.error = e.what();
    return r;
  }
  GroupContext ctx(*g);
  auto& inv = r.invariants;
  inv.order = g->order();
  inv.center_order = ctx.center().order();
  inv.solvable = ctx.solvable();
  inv.two_closed = ctx.two_closed();
  inv.two_nilpotent = ctx.two_nilpotent();
  inv.o_upper2_order = ctx.o_upper2().order();
  inv.o_lower2_order = ctx.o_lower2().order();
  inv.o2_order = o_p(*g, 2).order();
  r.real_sizes = ctx.real_data().sizes;
  r.graph = ctx.graph();
  r.verdicts = run_suite(ctx, selection);
  return r;
}

// Reports for a whole corpus, in corpus order whatever the worker count.
inline std::vector<Report> sweep(const std::vector<GroupSpec>& corpus,
                                 const std::vector<std::string>& selection, std::size_t jobs = 1,
                                 std::size_t cap = default_cap()) {
  require_known_statements(selection);
  return parallel_map<Report>(corpus.size(), jobs,
                              [&](std::size_t i) { return make_report(corpus[i], selection, cap); });
}

// ---------------------------------------------------------------------------
// JSON

inline json json_integer(std::uint64_t n) {
  constexpr std::uint64_t kMaxSafe = (std::uint64_t{1} << 53) - 1;
  if (n > kMaxSafe) return std::to_string(n);
  return n;
}

inline json json_integers(const std::vector<std::uint64_t>& values) {
  json out = json::array();
  for (auto v : values) out.push_back(json_integer(v));
  return out;
}

inline json to_json(const GroupSpec& spec) {
  return {{"name", spec.name},
          {"degree", json_integer(spec.degree)},
          {"generators", spec.generators},
          {"source", spec.source}};
}

inline json to_json(const PrimeGraph& g) {
  json edges = json::array();
  for (const auto& [p, q] : g.edges) edges.push_back({json_integer(p), json_integer(q)});
  json components = json::array();
  for (const auto& c : g.components) components.push_back(json_integers(c));
  return {{"vertices", json_integers(g.vertices)},
          {"edges", edges},
          {"components", components},
          {"connected", g.is_connected()}};
}

inline std::string outcome(const Verdict& v) {
  if (!v.applicable) return "inapplicable";
  return v.passed ? "pass" : "fail";
}

inline json to_json(const Verdict& v) {
  json hypotheses = json::array();
  for (const auto& [name, holds] : v.hypotheses) hypotheses.push_back({{"name", name}, {"holds", holds}});
  return {{"statement", v.statement},
          {"outcome", outcome(v)},
          {"sampled", v.sampled},
          {"hypotheses", hypotheses},
          {"witness", v.witness ? json(*v.witness) : json(nullptr)}};
}

inline json to_json(const Invariants& inv) {
  return {{"order", json_integer(inv.order)},
          {"center_order", json_integer(inv.center_order)},
          {"solvable", inv.solvable},
          {"two_closed", inv.two_closed},
          {"two_nilpotent", inv.two_nilpotent},
          {"o_upper_2prime_order", json_integer(inv.o_upper2_order)},
          {"o_lower_2prime_order", json_integer(inv.o_lower2_order)},
          {"o_2_order", json_integer(inv.o2_order)}};
}

inline json to_json(const Report& r) {
  json group = to_json(r.spec);
  if (r.error) {
    group["order"] = nullptr;
    return {{"group", group}, {"error", *r.error}};
  }
  group["order"] = json_integer(r.invariants.order);
  json verdicts = json::array();
  for (const auto& v : r.verdicts) verdicts.push_back(to_json(v));
  return {{"group", group},
          {"invariants", to_json(r.invariants)},
          {"real_sizes", json_integers(r.real_sizes)},
          {"graph", to_json(r.graph)},
          {"verdicts", verdicts}};
}

struct SweepSummary {
  std::size_t groups = 0;
  std::size_t skipped = 0;
  std::size_t verdicts = 0;
  std::size_t passed = 0;
  std::size_t failed = 0;
  std::size_t inapplicable = 0;
};

inline SweepSummary summarize(const std::vector<Report>& reports) {
  SweepSummary s;
  for (const auto& r : reports) {
    ++s.groups;
    if (r.error) {
      ++s.skipped;
      continue;
    }
    for (const auto& v : r.verdicts) {
      ++s.verdicts;
      if (!v.applicable)
        ++s.inapplicable;
      else if (v.passed)
        ++s.passed;
      else
        ++s.failed;
    }
  }
  return s;
}

inline json to_json(const SweepSummary& s) {
  return {{"groups", s.groups},   {"skipped", s.skipped}, {"verdicts", s.verdicts},
          {"passed", s.passed},   {"failed", s.failed},   {"inapplicable", s.inapplicable}};
}

inline json to_json(const HuntResult& h) {
  json findings = json::array();
  for (const auto& f : h.findings)
    findings.push_back({{"group", to_json(f.spec)}, {"order", json_integer(f.order)}, {"graph", to_json(f.graph)}});
  return {{"findings", findings},
          {"scanned", h.scanned},
          {"two_closed", h.two_closed},
          {"skipped", h.skipped}};
}

inline json to_json(const Example48Check& c) {
  return {{"order_48", c.order_48},
          {"real_sizes_1_3_8", c.real_sizes_1_3_8},
          {"equals_o_upper_2prime", c.perfect_odd},
          {"o_2_order_8", c.o2_order_8},
          {"quotient_by_o_2_fingerprint_matches_sym3", c.mod_o2_like_sym3},
          {"quotient_by_center_fingerprint_matches_sym4", c.mod_center_like_sym4},
          {"not_2_closed", c.not_2_closed},
          {"not_2_nilpotent", c.not_2_nilpotent}};
}

inline json to_json(const Example48Result& r) {
  json out = {{"found", r.match.has_value()}, {"matches", r.matches}, {"scanned", r.scanned}};
  if (r.match) {
    out["group"] = to_json(*r.match);
    out["properties"] = to_json(check_example48(r.match->build()));
    out["isomorphism_claims"] = "fingerprint-consistent";
  } else {
    out["group"] = nullptr;
  }
  return out;
}

// Two-space indentation and a trailing newline; byte-identical for identical input.
inline std::string render(const json& j) { return j.dump(2) + "\n"; }

inline void emit_report(const Report& report, const std::string& path) {
  std::ofstream out(path);
  if (!out) throw std::runtime_error("cannot write " + path);
  out << render(to_json(report));
}

}  // namespace realclass
