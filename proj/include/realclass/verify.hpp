#pragma once

// Statement predicates over a single group.  Each check evaluates its
// hypotheses separately (recorded on the Verdict) and, when they hold,
// evaluates the conclusion exhaustively.  A failing verdict carries a
// witness naming the offending elements or subgroups.
//
// Statements that quantify over normal subgroups range over the lattice
// produced by normal_subgroups(); when that scan hits its cap the verdict is
// marked sampled.

#include <algorithm>
#include <cstdint>
#include <functional>
#include <numeric>
#include <optional>
#include <set>
#include <sstream>
#include <stdexcept>
#include <string>
#include <utility>
#include <vector>

#include "realclass/group.hpp"
#include "realclass/number_theory.hpp"
#include "realclass/prime_graph.hpp"
#include "realclass/real_classes.hpp"
#include "realclass/structure.hpp"

namespace realclass {

struct Verdict {
  std::string statement;
  bool applicable = true;
  bool passed = true;
  bool sampled = false;
  std::vector<std::pair<std::string, bool>> hypotheses;
  std::optional<std::string> witness;

  void fail(std::string why) {
    if (!passed) return;  // keep the first witness
    passed = false;
    witness = std::move(why);
  }
};

// Lazily computed invariants of one group, shared by all checks in a suite
// run.  Not thread-safe; one context per worker.
class GroupContext {
 public:
  explicit GroupContext(Group g) : g_(std::move(g)) {}

  const Group& group() const { return g_; }

  const RealClassData& real_data() {
    if (!real_data_) real_data_ = real_class_data(g_);
    return *real_data_;
  }
  const PrimeGraph& graph() {
    if (!graph_) graph_ = prime_graph_from_sizes(real_data().sizes);
    return *graph_;
  }
  const Subgroup& center() {
    if (!center_) center_ = realclass::center(g_);
    return *center_;
  }
  const Subgroup& sylow2() {
    if (!sylow2_) sylow2_ = sylow_subgroup(g_, 2);
    return *sylow2_;
  }
  const Group& sylow2_group() {
    if (!sylow2_group_) sylow2_group_ = sylow2().to_group();
    return *sylow2_group_;
  }
  bool two_closed() {
    if (!two_closed_) two_closed_ = is_normal(g_, sylow2());
    return *two_closed_;
  }
  bool real_sylow2_central() {
    if (!real_sylow2_central_) real_sylow2_central_ = real_in_center(sylow2_group());
    return *real_sylow2_central_;
  }
  bool solvable() {
    if (!solvable_) solvable_ = is_solvable(g_);
    return *solvable_;
  }
  const Subgroup& o_upper2() {
    if (!o_upper2_) o_upper2_ = normal_closure(g_, sylow2().generators());
    return *o_upper2_;
  }
  const Group& o_upper2_group() {
    if (!o_upper2_group_) o_upper2_group_ = o_upper2().to_group();
    return *o_upper2_group_;
  }
  bool perfect_odd() { return o_upper2().is_whole(); }  // G = O^{2'}(G)
  const Subgroup& o_lower2() {
    if (!o_lower2_) o_lower2_ = o_lower(g_, 2);
    return *o_lower2_;
  }
  bool two_nilpotent() { return o_lower2().order() == g_.order() / p_part(g_.order(), 2); }
  const std::vector<CompositionFactorFingerprint>& factors() {
    if (!factors_) factors_ = composition_factors(g_);
    return *factors_;
  }
  const std::set<std::uint64_t>& two_parts() {
    if (!two_parts_) two_parts_ = noncentral_real_2parts(g_);
    return *two_parts_;
  }

  const NormalSubgroupScan& normals() {
    if (!normals_) {
      normals_ = normal_subgroups(g_);
      normal_groups_.resize(normals_->subgroups.size());
      quotients_.resize(normals_->subgroups.size());
      quotient_graphs_.resize(normals_->subgroups.size());
      cosets_.resize(normals_->subgroups.size());
    }
    return *normals_;
  }
  const Subgroup& normal(std::size_t i) { return normals().subgroups[i]; }
  const Group& normal_group(std::size_t i) {
    normals();
    if (!normal_groups_[i]) normal_groups_[i] = normal(i).to_group();
    return *normal_groups_[i];
  }
  const Quotient& normal_quotient(std::size_t i) {
    normals();
    if (!quotients_[i]) quotients_[i] = quotient(g_, normal(i));
    return *quotients_[i];
  }
  const PrimeGraph& quotient_graph(std::size_t i) {
    normals();
    if (!quotient_graphs_[i]) quotient_graphs_[i] = delta_star(normal_quotient(i).group);
    return *quotient_graphs_[i];
  }
  // Elements of G grouped by their image in G/N_i.
  const std::vector<std::vector<ElementId>>& cosets(std::size_t i) {
    normals();
    if (!cosets_[i]) {
      const auto& q = normal_quotient(i);
      std::vector<std::vector<ElementId>> by_image(q.group.order());
      for (ElementId x = 0; x < g_.order(); ++x) by_image[q.projection[x]].push_back(x);
      cosets_[i] = std::move(by_image);
    }
    return *cosets_[i];
  }

  std::string show(ElementId x) const { return g_.element(x).to_cycles(); }

 private:
  Group g_;
  std::optional<RealClassData> real_data_;
  std::optional<PrimeGraph> graph_;
  std::optional<Subgroup> center_, sylow2_, o_upper2_, o_lower2_;
  std::optional<Group> sylow2_group_, o_upper2_group_;
  std::optional<bool> two_closed_, real_sylow2_central_, solvable_;
  std::optional<std::vector<CompositionFactorFingerprint>> factors_;
  std::optional<std::set<std::uint64_t>> two_parts_;
  std::optional<NormalSubgroupScan> normals_;
  std::vector<std::optional<Group>> normal_groups_;
  std::vector<std::optional<Quotient>> quotients_;
  std::vector<std::optional<PrimeGraph>> quotient_graphs_;
  std::vector<std::optional<std::vector<std::vector<ElementId>>>> cosets_;
};

namespace detail {

inline std::string join_primes(const std::vector<Prime>& primes) {
  std::string out = "{";
  for (std::size_t i = 0; i < primes.size(); ++i)
    out += (i ? "," : "") + std::to_string(primes[i]);
  return out + "}";
}

inline std::set<Prime> prime_set(std::uint64_t n) {
  const auto v = prime_divisors(n);
  return {v.begin(), v.end()};
}

inline bool all_hold(const Verdict& v) {
  return std::all_of(v.hypotheses.begin(), v.hypotheses.end(),
                     [](const auto& h) { return h.second; });
}

inline Verdict start(std::string id, std::vector<std::pair<std::string, bool>> hypotheses = {}) {
  Verdict v;
  v.statement = std::move(id);
  v.hypotheses = std::move(hypotheses);
  v.applicable = all_hold(v);
  return v;
}

inline std::vector<Prime> odd_prime_divisors(std::uint64_t n) {
  std::vector<Prime> out;
  for (Prime p : prime_divisors(n))
    if (p != 2) out.push_back(p);
  return out;
}

// Common 2-part 2^a >= 2 over non-central real classes (vacuous when none).
inline bool uniform_even_two_part(const std::set<std::uint64_t>& parts) {
  return parts.size() <= 1 && !parts.count(1);
}

}  // namespace detail

// ---------------------------------------------------------------------------
// Real elements

// Every power of a real element is real.
inline Verdict check_real_powers(GroupContext& ctx) {
  auto v = detail::start("real-powers");
  const Group& g = ctx.group();
  for (const auto* c : ctx.real_data().classes) {
    const ElementId x = c->representative;
    for (std::uint64_t k = 2; k < g.element_order(x); ++k)
      if (!is_real(g, g.pow(x, static_cast<std::int64_t>(k))))
        v.fail("x=" + ctx.show(x) + " k=" + std::to_string(k));
  }
  return v;
}

// A real element is inverted by some 2-element.
inline Verdict check_real_2element_inverter(GroupContext& ctx) {
  auto v = detail::start("real-2-element-inverter");
  const Group& g = ctx.group();
  for (const auto* c : ctx.real_data().classes) {
    const ElementId x = c->representative;
    const ElementId t = real_witness_2element(g, x);
    if (is_p_power(g.element_order(t), 2) && g.conj(x, t) == g.inv(x)) continue;
    bool found = false;
    for (ElementId y = 0; y < g.order() && !found; ++y)
      found = is_p_power(g.element_order(y), 2) && g.conj(x, y) == g.inv(x);
    if (!found) v.fail("x=" + ctx.show(x));
  }
  return v;
}

// A real element with odd class size squares to the identity.
inline Verdict check_real_odd_class_involution(GroupContext& ctx) {
  auto v = detail::start("real-odd-class-involution");
  const Group& g = ctx.group();
  for (const auto* c : ctx.real_data().classes) {
    const ElementId x = c->representative;
    if (c->size() % 2 == 1 && g.mul(x, x) != Group::identity()) v.fail("x=" + ctx.show(x));
  }
  return v;
}

// Commuting real x, y with coprime class sizes: xy is real, and with coprime
// orders the primes of both class sizes divide |(xy)^G|.
inline Verdict check_real_commuting_product(GroupContext& ctx) {
  auto v = detail::start("real-commuting-product");
  const Group& g = ctx.group();
  for (const auto* c : ctx.real_data().classes) {
    const ElementId x = c->representative;
    const std::uint64_t sx = c->size();
    for (ElementId y = 0; y < g.order(); ++y) {
      if (!is_real(g, y) || !g.commute(x, y)) continue;
      const std::uint64_t sy = g.class_of(y).size();
      if (std::gcd(sx, sy) != 1) continue;
      const ElementId xy = g.mul(x, y);
      const std::string where = "x=" + ctx.show(x) + " y=" + ctx.show(y);
      if (!is_real(g, xy)) {
        v.fail(where + ": xy not real");
        continue;
      }
      if (std::gcd(g.element_order(x), g.element_order(y)) != 1) continue;
      const auto target = detail::prime_set(g.class_of(xy).size());
      for (Prime p : prime_divisors(sx * sy))
        if (!target.count(p)) v.fail(where + ": prime " + std::to_string(p) + " missing");
    }
  }
  return v;
}

// Normal M of odd index has the same real elements as G.
inline Verdict check_real_odd_index_normal(GroupContext& ctx) {
  auto v = detail::start("real-odd-index-normal");
  const Group& g = ctx.group();
  const auto real_g = real_elements(g);
  const auto& scan = ctx.normals();
  v.sampled = !scan.complete;
  for (std::size_t i = 0; i < scan.subgroups.size(); ++i) {
    const Subgroup& m = scan.subgroups[i];
    if ((g.order() / m.order()) % 2 == 0) continue;
    const Group& mg = ctx.normal_group(i);
    std::vector<ElementId> real_m;
    for (auto local : real_elements(mg)) real_m.push_back(m.members()[local]);
    if (real_m != real_g) v.fail("|M|=" + std::to_string(m.order()) + " normal subgroup #" +
                                 std::to_string(i));
  }
  return v;
}

// A real coset Nx with |N| or o(Nx) odd contains a real element (of odd
// order when o(Nx) is odd).
inline Verdict check_real_coset_lift(GroupContext& ctx) {
  auto v = detail::start("real-coset-lift");
  const Group& g = ctx.group();
  const auto& scan = ctx.normals();
  v.sampled = !scan.complete;
  for (std::size_t i = 0; i < scan.subgroups.size(); ++i) {
    const bool odd_kernel = scan.subgroups[i].order() % 2 == 1;
    const Quotient& q = ctx.normal_quotient(i);
    for (const auto& c : q.group.classes()) {
      if (!c.is_real) continue;
      const bool odd_image = q.group.element_order(c.representative) % 2 == 1;
      if (!odd_kernel && !odd_image) continue;
      bool lifted = false;
      for (auto y : ctx.cosets(i)[c.representative]) {
        if (is_real(g, y) && (!odd_image || g.element_order(y) % 2 == 1)) {
          lifted = true;
          break;
        }
      }
      if (!lifted)
        v.fail("normal subgroup #" + std::to_string(i) + " coset of " +
               ctx.show(ctx.cosets(i)[c.representative].front()));
    }
  }
  return v;
}

// |x^N| and |(Nx)^{G/N}| divide |x^G|.
inline Verdict check_class_size_divisibility(GroupContext& ctx) {
  auto v = detail::start("class-size-divisibility");
  const Group& g = ctx.group();
  const auto& scan = ctx.normals();
  v.sampled = !scan.complete;
  for (std::size_t i = 0; i < scan.subgroups.size(); ++i) {
    const Subgroup& n = scan.subgroups[i];
    const Group& ng = ctx.normal_group(i);
    const Quotient& q = ctx.normal_quotient(i);
    for (const auto& c : g.classes()) {
      const ElementId x = c.representative;
      if (n.contains(x)) {
        const auto local = static_cast<ElementId>(
            std::lower_bound(n.members().begin(), n.members().end(), x) - n.members().begin());
        if (c.size() % ng.class_of(local).size() != 0)
          v.fail("x=" + ctx.show(x) + " in normal subgroup #" + std::to_string(i));
      }
      if (c.size() % q.group.class_of(q.projection[x]).size() != 0)
        v.fail("x=" + ctx.show(x) + " modulo normal subgroup #" + std::to_string(i));
    }
  }
  return v;
}

// Equivalent: nontrivial real elements have even order; real elements are
// 2-elements; G is 2-closed.
inline Verdict check_odd_real_iff_2_closed(GroupContext& ctx) {
  auto v = detail::start("odd-real-iff-2-closed");
  const Group& g = ctx.group();
  bool even_orders = true;
  bool two_elements = true;
  for (const auto* c : ctx.real_data().classes) {
    const std::uint64_t o = g.element_order(c->representative);
    if (o > 1 && o % 2 == 1) even_orders = false;
    if (!is_p_power(o, 2)) two_elements = false;
  }
  const bool closed = ctx.two_closed();
  if (even_orders != two_elements || two_elements != closed)
    v.fail("even-orders=" + std::to_string(even_orders) + " 2-elements=" +
           std::to_string(two_elements) + " 2-closed=" + std::to_string(closed));
  return v;
}

// ---------------------------------------------------------------------------
// Prime graph structure

inline Verdict check_components_at_most_two(GroupContext& ctx) {
  auto v = detail::start("components-at-most-two");
  if (ctx.graph().components.size() > 2)
    v.fail(std::to_string(ctx.graph().components.size()) + " components");
  return v;
}

// G = O^{2'}(G), p odd dividing |G|, G p-solvable: G has a real element of order p.
inline Verdict check_real_element_of_order_p(GroupContext& ctx) {
  const Group& g = ctx.group();
  auto v = detail::start("real-element-of-order-p", {{"G=O^{2'}(G)", ctx.perfect_odd()}});
  bool any = false;
  for (Prime p : detail::odd_prime_divisors(g.order())) {
    const bool solvable_p = is_p_solvable(ctx.factors(), p);
    v.hypotheses.emplace_back(std::to_string(p) + "-solvable", solvable_p);
    if (!ctx.perfect_odd() || !solvable_p) continue;
    any = true;
    bool found = false;
    for (const auto* c : ctx.real_data().classes)
      if (g.element_order(c->representative) == p) found = true;
    if (!found) v.fail("no real element of order " + std::to_string(p));
  }
  v.applicable = any;
  return v;
}

// All real classes odd  <=>  Sylow 2 normal with Real(S) <= Z(S).
inline Verdict check_odd_real_sizes_iff(GroupContext& ctx) {
  auto v = detail::start("odd-real-sizes-iff");
  const auto& sizes = ctx.real_data().sizes;
  const bool all_odd =
      std::all_of(sizes.begin(), sizes.end(), [](auto s) { return s % 2 == 1; });
  const bool structural = ctx.two_closed() && ctx.real_sylow2_central();
  if (all_odd != structural)
    v.fail("odd-sizes=" + std::to_string(all_odd) + " structure=" + std::to_string(structural));
  return v;
}

// An odd prime p dividing no real class size (and, for p = 3, no SL_3(2)
// factor): G is p-solvable, O^{p'}(G) is solvable, O^{2'}(G) has a normal
// Sylow p-subgroup P with P' <= Z(O^{2'}(G)).
inline Verdict check_p_free_real_sizes(GroupContext& ctx) {
  const Group& g = ctx.group();
  auto v = detail::start("p-free-real-sizes");
  const bool sl32 = has_sl32_factor(ctx.factors());
  bool any = false;
  for (Prime p : detail::odd_prime_divisors(g.order())) {
    const bool free = !ctx.graph().has_vertex(p);
    const bool guard = p != 3 || !sl32;
    v.hypotheses.emplace_back(std::to_string(p) + " divides no real class size", free);
    if (p == 3) v.hypotheses.emplace_back("no SL_3(2) composition factor", guard);
    if (!free || !guard) continue;
    any = true;
    const std::string tag = "p=" + std::to_string(p) + ": ";
    if (!is_p_solvable(ctx.factors(), p)) v.fail(tag + "not p-solvable");
    if (!is_solvable(o_upper(g, p).to_group())) v.fail(tag + "O^{p'}(G) not solvable");
    const Group& k = ctx.o_upper2_group();
    const Subgroup pk = sylow_subgroup(k, p);
    if (!is_normal(k, pk)) {
      v.fail(tag + "Sylow p-subgroup of O^{2'}(G) not normal");
      continue;
    }
    const Group pg = pk.to_group();
    const Subgroup derived = derived_subgroup(pg);
    const Subgroup zk = center(k);
    for (auto d : derived.members())
      if (!zk.contains(k.index_of(pg.element(d))))
        v.fail(tag + "commutator " + pg.element(d).to_cycles() + " not central");
  }
  v.applicable = any;
  return v;
}

// ---------------------------------------------------------------------------
// Disconnected graphs

inline Verdict check_involution_pi2_class(GroupContext& ctx) {
  const auto& graph = ctx.graph();
  auto v = detail::start("involution-pi2-class", {{"disconnected", graph.is_disconnected()}});
  if (!v.applicable) return v;
  const Group& g = ctx.group();
  const auto split = components_vertex_sets(graph);
  const std::set<Prime> pi2(split.pi2->begin(), split.pi2->end());
  for (const auto& c : g.classes()) {
    const ElementId i = c.representative;
    if (g.element_order(i) != 2 || c.size() == 1 || !is_pi_number(c.size(), pi2)) continue;
    if (is_p_closed(centralizer(g, i).to_group(), 2)) return v;
  }
  v.fail("no involution with pi2-number class size and 2-closed centralizer, pi2=" +
         detail::join_primes(*split.pi2));
  return v;
}

// |N| odd: Delta*(G/N) is a subgraph of Delta*(G).
inline Verdict check_odd_quotient_subgraph(GroupContext& ctx) {
  auto v = detail::start("odd-quotient-subgraph");
  const auto& scan = ctx.normals();
  v.sampled = !scan.complete;
  for (std::size_t i = 0; i < scan.subgroups.size(); ++i) {
    if (scan.subgroups[i].order() % 2 == 0) continue;
    if (!is_subgraph(ctx.quotient_graph(i), ctx.graph()))
      v.fail("normal subgroup #" + std::to_string(i));
  }
  return v;
}

// Disconnected, not 2-closed: every normal M of odd index has Delta*(M) disconnected.
inline Verdict check_disconnected_odd_index_normal(GroupContext& ctx) {
  auto v = detail::start("disconnected-odd-index-normal",
                         {{"disconnected", ctx.graph().is_disconnected()},
                          {"not 2-closed", !ctx.two_closed()}});
  if (!v.applicable) return v;
  const Group& g = ctx.group();
  const auto& scan = ctx.normals();
  v.sampled = !scan.complete;
  for (std::size_t i = 0; i < scan.subgroups.size(); ++i) {
    if ((g.order() / scan.subgroups[i].order()) % 2 == 0) continue;
    if (!delta_star(ctx.normal_group(i)).is_disconnected())
      v.fail("normal subgroup #" + std::to_string(i));
  }
  return v;
}

// Disconnected, G = O^{2'}(G) not 2-nilpotent: Delta*(G/N) disconnected for |N| odd.
inline Verdict check_disconnected_odd_quotient(GroupContext& ctx) {
  auto v = detail::start("disconnected-odd-quotient",
                         {{"disconnected", ctx.graph().is_disconnected()},
                          {"G=O^{2'}(G)", ctx.perfect_odd()},
                          {"not 2-nilpotent", !ctx.two_nilpotent()}});
  if (!v.applicable) return v;
  const auto& scan = ctx.normals();
  v.sampled = !scan.complete;
  for (std::size_t i = 0; i < scan.subgroups.size(); ++i) {
    if (scan.subgroups[i].order() % 2 == 0) continue;
    if (!ctx.quotient_graph(i).is_disconnected()) v.fail("normal subgroup #" + std::to_string(i));
  }
  return v;
}

inline Verdict check_disconnected_solvable(GroupContext& ctx) {
  auto v = detail::start("disconnected-solvable", {{"disconnected", ctx.graph().is_disconnected()}});
  if (v.applicable && !ctx.solvable()) v.fail("not solvable");
  return v;
}

// G = O^{2'}(G) disconnected: pi1 = {2} and pi2 = pi(|i^G|) for a non-central involution i.
inline Verdict check_components_2_and_involution(GroupContext& ctx) {
  const auto& graph = ctx.graph();
  auto v = detail::start("components-2-and-involution",
                         {{"G=O^{2'}(G)", ctx.perfect_odd()},
                          {"disconnected", graph.is_disconnected()}});
  if (!v.applicable) return v;
  const Group& g = ctx.group();
  const auto split = components_vertex_sets(graph);
  if (split.pi1 != std::vector<Prime>{2}) v.fail("pi1=" + detail::join_primes(split.pi1));
  bool found = false;
  for (const auto& c : g.classes())
    if (g.element_order(c.representative) == 2 && c.size() > 1 &&
        prime_divisors(c.size()) == *split.pi2)
      found = true;
  if (!found) v.fail("no non-central involution with pi(|i^G|)=" + detail::join_primes(*split.pi2));
  return v;
}

// Normal Sylow 2 with Real(S) <= Z(S): Delta*(G) connected.
inline Verdict check_central_real_sylow2_connected(GroupContext& ctx) {
  auto v = detail::start("central-real-sylow2-connected",
                         {{"2-closed", ctx.two_closed()},
                          {"Real(S)<=Z(S)", ctx.two_closed() && ctx.real_sylow2_central()}});
  if (v.applicable && !ctx.graph().is_connected())
    v.fail(std::to_string(ctx.graph().components.size()) + " components");
  return v;
}

// Disconnected: 2 divides a real class size and either G is 2-closed or
// Delta*(O^{2'}(G)) is disconnected with real class sizes odd or 2-powers.
inline Verdict check_disconnected_structure(GroupContext& ctx) {
  auto v = detail::start("disconnected-structure", {{"disconnected", ctx.graph().is_disconnected()}});
  if (!v.applicable) return v;
  if (!ctx.graph().has_vertex(2)) v.fail("2 is not a vertex");
  if (ctx.two_closed()) return v;
  const Group& k = ctx.o_upper2_group();
  const auto data = real_class_data(k);
  if (!prime_graph_from_sizes(data.sizes).is_disconnected())
    v.fail("Delta*(O^{2'}(G)) connected");
  for (auto s : data.sizes)
    if (s % 2 == 0 && !is_p_power(s, 2))
      v.fail("real class size " + std::to_string(s) + " of O^{2'}(G)");
  return v;
}

// ---------------------------------------------------------------------------
// Uniform 2-parts

// Real(S) <= Z(S) and common 2-part 2^a >= 2: nontrivial real 2-elements
// are central involutions.
inline Verdict check_real_2_elements_central(GroupContext& ctx) {
  auto v = detail::start("real-2-elements-central",
                         {{"Real(S)<=Z(S)", ctx.real_sylow2_central()},
                          {"common 2-part >= 2", detail::uniform_even_two_part(ctx.two_parts())}});
  if (!v.applicable) return v;
  const Group& g = ctx.group();
  for (const auto* c : ctx.real_data().classes) {
    const ElementId y = c->representative;
    const auto o = g.element_order(y);
    if (o == 1 || !is_p_power(o, 2)) continue;
    if (o != 2 || c->size() != 1) v.fail("y=" + ctx.show(y));
  }
  return v;
}

// Common 2-part 2^a >= 2: every normal K of odd index has the same 2-part
// on its non-central real classes.
inline Verdict check_odd_index_2_part(GroupContext& ctx) {
  const auto& parts = ctx.two_parts();
  auto v = detail::start("odd-index-2-part",
                         {{"common 2-part >= 2", detail::uniform_even_two_part(parts)}});
  if (!v.applicable) return v;
  const Group& g = ctx.group();
  const auto& scan = ctx.normals();
  v.sampled = !scan.complete;
  for (std::size_t i = 0; i < scan.subgroups.size(); ++i) {
    if ((g.order() / scan.subgroups[i].order()) % 2 == 0) continue;
    for (auto part : noncentral_real_2parts(ctx.normal_group(i)))
      if (!parts.count(part))
        v.fail("normal subgroup #" + std::to_string(i) + " has 2-part " + std::to_string(part));
  }
  return v;
}

// Same hypotheses as real-2-elements-central: in G/O_{2'}(G) every
// nontrivial real 2-element is central.
inline Verdict check_central_2_elements_mod_odd_core(GroupContext& ctx) {
  auto v = detail::start("central-2-elements-mod-odd-core",
                         {{"Real(S)<=Z(S)", ctx.real_sylow2_central()},
                          {"common 2-part >= 2", detail::uniform_even_two_part(ctx.two_parts())}});
  if (!v.applicable) return v;
  const Quotient q = quotient(ctx.group(), ctx.o_lower2());
  for (const auto& c : q.group.classes()) {
    const auto o = q.group.element_order(c.representative);
    if (!c.is_real || o == 1 || !is_p_power(o, 2)) continue;
    if (c.size() != 1) v.fail("coset image " + q.group.element(c.representative).to_cycles());
  }
  return v;
}

namespace detail {
inline std::vector<std::pair<std::string, bool>> equal_two_part_hypotheses(GroupContext& ctx) {
  return {{"common 2-part", ctx.two_parts().size() <= 1},
          {"Real(S)<=Z(S)", ctx.real_sylow2_central()}};
}
}  // namespace detail

inline Verdict check_equal_2_part_solvable(GroupContext& ctx) {
  auto v = detail::start("equal-2-part-solvable", detail::equal_two_part_hypotheses(ctx));
  if (v.applicable && !ctx.solvable()) v.fail("not solvable");
  return v;
}

inline Verdict check_equal_2_part_2_nilpotent(GroupContext& ctx) {
  auto v = detail::start("equal-2-part-2-nilpotent", detail::equal_two_part_hypotheses(ctx));
  if (v.applicable && !is_p_nilpotent(ctx.o_upper2_group(), 2))
    v.fail("O^{2'}(G) not 2-nilpotent");
  return v;
}

inline Verdict check_equal_2_part_structure(GroupContext& ctx) {
  auto v = detail::start("equal-2-part-structure", detail::equal_two_part_hypotheses(ctx));
  if (!v.applicable) return v;
  if (!ctx.solvable()) v.fail("not solvable");
  if (!is_p_nilpotent(ctx.o_upper2_group(), 2)) v.fail("O^{2'}(G) not 2-nilpotent");
  return v;
}

// ---------------------------------------------------------------------------
// Auxiliary facts

// C*_G(x) is a subgroup over C_G(x) of index 2 exactly when x^2 != 1, and a
// nontrivial real element of odd order has even class size.
inline Verdict check_extended_centralizer(GroupContext& ctx) {
  auto v = detail::start("extended-centralizer");
  const Group& g = ctx.group();
  for (const auto* c : ctx.real_data().classes) {
    const ElementId x = c->representative;
    if (x == Group::identity()) continue;
    const Subgroup plain = centralizer(g, x);
    std::optional<Subgroup> extended;
    try {
      extended = extended_centralizer(g, x);
    } catch (const std::logic_error&) {
      v.fail("x=" + ctx.show(x) + ": C* not closed");
      continue;
    }
    const std::size_t expected = g.mul(x, x) == Group::identity() ? 1 : 2;
    if (!plain.is_subset_of(*extended) || extended->order() != expected * plain.order())
      v.fail("x=" + ctx.show(x) + ": index " +
             std::to_string(extended->order() / plain.order()));
    if (g.element_order(x) % 2 == 1 && c->size() % 2 == 1)
      v.fail("x=" + ctx.show(x) + ": odd order with odd class size");
  }
  return v;
}

// Real(S) <= Z(S) agrees with the square criterion on S.
inline Verdict check_sylow2_square_criterion(GroupContext& ctx) {
  auto v = detail::start("sylow2-square-criterion");
  const bool square = sylow2_square_condition(ctx.sylow2_group());
  if (square != ctx.real_sylow2_central())
    v.fail("square-criterion=" + std::to_string(square));
  return v;
}

// ---------------------------------------------------------------------------
// Suite

struct Statement {
  const char* id;
  Verdict (*check)(GroupContext&);
};

inline const std::vector<Statement>& statements() {
  static const std::vector<Statement> all = {
      {"real-powers", check_real_powers},
      {"real-2-element-inverter", check_real_2element_inverter},
      {"real-odd-class-involution", check_real_odd_class_involution},
      {"real-commuting-product", check_real_commuting_product},
      {"real-odd-index-normal", check_real_odd_index_normal},
      {"real-coset-lift", check_real_coset_lift},
      {"extended-centralizer", check_extended_centralizer},
      {"class-size-divisibility", check_class_size_divisibility},
      {"odd-real-iff-2-closed", check_odd_real_iff_2_closed},
      {"components-at-most-two", check_components_at_most_two},
      {"real-element-of-order-p", check_real_element_of_order_p},
      {"odd-real-sizes-iff", check_odd_real_sizes_iff},
      {"p-free-real-sizes", check_p_free_real_sizes},
      {"sylow2-square-criterion", check_sylow2_square_criterion},
      {"involution-pi2-class", check_involution_pi2_class},
      {"odd-quotient-subgraph", check_odd_quotient_subgraph},
      {"disconnected-odd-index-normal", check_disconnected_odd_index_normal},
      {"disconnected-odd-quotient", check_disconnected_odd_quotient},
      {"disconnected-solvable", check_disconnected_solvable},
      {"components-2-and-involution", check_components_2_and_involution},
      {"central-real-sylow2-connected", check_central_real_sylow2_connected},
      {"disconnected-structure", check_disconnected_structure},
      {"real-2-elements-central", check_real_2_elements_central},
      {"odd-index-2-part", check_odd_index_2_part},
      {"central-2-elements-mod-odd-core", check_central_2_elements_mod_odd_core},
      {"equal-2-part-solvable", check_equal_2_part_solvable},
      {"equal-2-part-2-nilpotent", check_equal_2_part_2_nilpotent},
      {"equal-2-part-structure", check_equal_2_part_structure},
  };
  return all;
}

inline std::vector<std::string> all_statement_ids() {
  std::vector<std::string> ids;
  for (const auto& s : statements()) ids.emplace_back(s.id);
  return ids;
}

inline Verdict check(const std::string& id, GroupContext& ctx) {
  for (const auto& s : statements())
    if (id == s.id) return s.check(ctx);
  throw std::invalid_argument("unknown statement id: " + id);
}

inline Verdict check(const std::string& id, const Group& g) {
  GroupContext ctx(g);
  return check(id, ctx);
}

// Replays a failing verdict: true iff rerunning its statement on g fails
// again with the same witness.
inline bool reproduces(const Verdict& v, const Group& g) {
  if (v.passed) return false;
  const Verdict again = check(v.statement, g);
  return !again.passed && again.witness == v.witness;
}

inline void require_known_statements(const std::vector<std::string>& selection) {
  for (const auto& id : selection) {
    const bool known = std::any_of(statements().begin(), statements().end(),
                                   [&](const Statement& s) { return id == s.id; });
    if (!known) throw std::invalid_argument("unknown statement id: " + id);
  }
}

// Runs the selected statements in canonical order.  Unknown ids throw
// before anything runs.
inline std::vector<Verdict> run_suite(GroupContext& ctx, const std::vector<std::string>& selection) {
  require_known_statements(selection);
  const std::set<std::string> wanted(selection.begin(), selection.end());
  std::vector<Verdict> out;
  for (const auto& s : statements())
    if (wanted.count(s.id)) out.push_back(s.check(ctx));
  return out;
}

inline std::vector<Verdict> run_suite(const Group& g, const std::vector<std::string>& selection) {
  require_known_statements(selection);
  GroupContext ctx(g);
  return run_suite(ctx, selection);
}

inline std::vector<Verdict> run_suite(const Group& g) { return run_suite(g, all_statement_ids()); }

}  // namespace realclass
