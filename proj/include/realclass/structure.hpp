#pragma once

// Subgroup machinery on materialized groups: centralizers, normal closures,
// derived series, Sylow subgroups, the O-operators, coset-action quotients
// and composition factors.  Every routine is an exhaustive search over ids.

#include <algorithm>
#include <cstdint>
#include <map>
#include <numeric>
#include <set>
#include <stdexcept>
#include <utility>
#include <vector>

#include "realclass/group.hpp"
#include "realclass/number_theory.hpp"

namespace realclass {

class NotNormal : public std::invalid_argument {
 public:
  NotNormal() : std::invalid_argument("subgroup is not normal") {}
};

inline ElementId require_member(const Group& g, const Permutation& x) { return g.index_of(x); }

// ---------------------------------------------------------------------------
// Centralizers and classes

inline Subgroup centralizer(const Group& g, ElementId x) {
  std::vector<ElementId> members;
  for (ElementId y = 0; y < g.order(); ++y)
    if (g.commute(x, y)) members.push_back(y);
  return generate_subgroup(g, members);
}

inline Subgroup centralizer(const Group& g, const Permutation& x) {
  return centralizer(g, require_member(g, x));
}

inline bool is_central(const Group& g, ElementId x) {
  for (auto s : g.generator_ids())
    if (!g.commute(x, s)) return false;
  return true;
}

inline Subgroup center(const Group& g) {
  std::vector<ElementId> members;
  for (ElementId x = 0; x < g.order(); ++x)
    if (is_central(g, x)) members.push_back(x);
  return generate_subgroup(g, members);
}

inline const std::vector<ConjugacyClass>& conjugacy_classes(const Group& g) { return g.classes(); }

inline std::vector<std::uint64_t> class_sizes(const Group& g) {
  std::vector<std::uint64_t> out;
  for (const auto& c : g.classes()) out.push_back(c.size());
  return out;
}

// ---------------------------------------------------------------------------
// Normality and closures

inline bool is_normal(const Group& g, const Subgroup& h) {
  for (auto x : h.generators())
    for (auto s : g.generator_ids())
      if (!h.contains(g.conj(x, s))) return false;
  return true;
}

// Smallest normal subgroup of g containing seed.
inline Subgroup normal_closure(const Group& g, std::span<const ElementId> seed) {
  std::vector<ElementId> candidates;
  std::vector<bool> taken(g.classes().size(), false);
  for (auto x : seed) {
    const auto c = g.class_index(x);
    if (taken[c]) continue;
    taken[c] = true;
    const auto& members = g.classes()[c].members;
    candidates.insert(candidates.end(), members.begin(), members.end());
  }
  return generate_subgroup(g, candidates);
}

inline Subgroup normal_closure(const Group& g, std::span<const Permutation> seed) {
  std::vector<ElementId> ids;
  for (const auto& p : seed) ids.push_back(require_member(g, p));
  return normal_closure(g, ids);
}

// Smallest subgroup containing seed that is normalized by the elements of
// `by`.  Used for closures inside a subgroup of g.
inline Subgroup normal_closure_under(const Group& g, std::span<const ElementId> by,
                                     std::vector<ElementId> seed) {
  Subgroup k = generate_subgroup(g, seed);
  for (bool grown = true; grown;) {
    grown = false;
    std::vector<ElementId> gens(k.generators().begin(), k.generators().end());
    for (auto x : k.generators()) {
      for (auto h : by) {
        const ElementId y = g.conj(x, h);
        if (!k.contains(y)) {
          gens.push_back(y);
          grown = true;
        }
      }
    }
    if (grown) k = generate_subgroup(g, gens);
  }
  return k;
}

inline Subgroup join(const Subgroup& a, const Subgroup& b) {
  std::vector<ElementId> gens(a.generators().begin(), a.generators().end());
  gens.insert(gens.end(), b.generators().begin(), b.generators().end());
  return generate_subgroup(a.parent(), gens);
}

inline Subgroup intersect(const Subgroup& a, const Subgroup& b) {
  std::vector<ElementId> members;
  for (auto x : a.members())
    if (b.contains(x)) members.push_back(x);
  return generate_subgroup(a.parent(), members);
}

// ---------------------------------------------------------------------------
// Derived series and solvability

// [H, H] for a subgroup H of g: the normal closure in H of the commutators
// of H's generators.
inline Subgroup derived_subgroup(const Subgroup& h) {
  const Group& g = h.parent();
  std::vector<ElementId> commutators;
  for (auto a : h.generators())
    for (auto b : h.generators()) commutators.push_back(g.commutator(a, b));
  return normal_closure_under(g, h.generators(), std::move(commutators));
}

// G, G', G'', ... up to and including the first repeated term.
inline std::vector<Subgroup> derived_series(const Group& g) {
  std::vector<Subgroup> series{whole_group(g)};
  for (;;) {
    Subgroup next = derived_subgroup(series.back());
    if (next.order() == series.back().order()) break;
    series.push_back(std::move(next));
  }
  return series;
}

inline bool is_solvable(const Group& g) { return derived_series(g).back().is_trivial(); }

inline Subgroup derived_subgroup(const Group& g) { return derived_subgroup(whole_group(g)); }

// ---------------------------------------------------------------------------
// Sylow theory

inline Subgroup normalizer(const Group& g, const Subgroup& h) {
  std::vector<ElementId> members;
  for (ElementId x = 0; x < g.order(); ++x) {
    bool normalizes = true;
    for (auto y : h.generators()) {
      if (!h.contains(g.conj(y, x))) {
        normalizes = false;
        break;
      }
    }
    if (normalizes) members.push_back(x);
  }
  return generate_subgroup(g, members);
}

// Normalizer climbing: extend a p-subgroup P by an element of N_G(P) \ P
// whose p-th power lies in P until |P| = |G|_p.
inline Subgroup sylow_subgroup(const Group& g, Prime p) {
  if (!is_prime(p)) throw std::invalid_argument("sylow_subgroup needs a prime");
  const std::uint64_t target = p_part(g.order(), p);
  Subgroup current = trivial_subgroup(g);
  while (current.order() < target) {
    const Subgroup n = normalizer(g, current);
    bool extended = false;
    for (auto x : n.members()) {
      if (current.contains(x) || !current.contains(g.pow(x, static_cast<std::int64_t>(p))))
        continue;
      std::vector<ElementId> gens(current.generators().begin(), current.generators().end());
      gens.push_back(x);
      current = generate_subgroup(g, gens);
      extended = true;
      break;
    }
    if (!extended) throw std::logic_error("normalizer climbing stalled");
  }
  return current;
}

inline bool is_p_group(const Group& g, Prime p) { return is_p_power(g.order(), p); }

// O_{p'}(G): join of the normal closures <x>^G that are p'-groups.
inline Subgroup o_lower(const Group& g, Prime p) {
  Subgroup result = trivial_subgroup(g);
  for (const auto& c : g.classes()) {
    const ElementId x = c.representative;
    if (x == Group::identity() || g.element_order(x) % p == 0 || result.contains(x)) continue;
    const ElementId seed[] = {x};
    Subgroup closure = normal_closure(g, seed);
    if (closure.order() % p == 0) continue;
    result = join(result, closure);
  }
  return result;
}

// O_p(G): intersection of the conjugates of a Sylow p-subgroup.
inline Subgroup o_p(const Group& g, Prime p) {
  const Subgroup sylow = sylow_subgroup(g, p);
  std::vector<ElementId> members;
  for (auto h : sylow.members()) {
    bool everywhere = true;
    for (ElementId x = 0; x < g.order() && everywhere; ++x)
      everywhere = sylow.contains(g.conj(h, x));
    if (everywhere) members.push_back(h);
  }
  return generate_subgroup(g, members);
}

// O^{p'}(G), defined as the normal closure of a Sylow p-subgroup.
inline Subgroup o_upper(const Group& g, Prime p) {
  const Subgroup sylow = sylow_subgroup(g, p);
  return normal_closure(g, sylow.generators());
}

inline bool is_p_closed(const Group& g, Prime p) { return is_normal(g, sylow_subgroup(g, p)); }

inline bool is_p_nilpotent(const Group& g, Prime p) {
  return o_lower(g, p).order() == g.order() / p_part(g.order(), p);
}

// ---------------------------------------------------------------------------
// Quotients

struct Quotient {
  Group group;                         // permutation group on the right cosets
  std::vector<ElementId> projection;   // projection[g] is the image of g
};

// G/N realized by the right-multiplication action on right cosets Ng.
// Coset 0 is N itself, so the identity of the quotient is id 0.
inline Quotient quotient(const Group& g, const Subgroup& n) {
  if (!is_normal(g, n)) throw NotNormal();
  constexpr auto kUnset = static_cast<ElementId>(-1);
  std::vector<ElementId> coset(g.order(), kUnset);
  std::vector<ElementId> reps;
  for (ElementId x = 0; x < g.order(); ++x) {
    if (coset[x] != kUnset) continue;
    const auto id = static_cast<ElementId>(reps.size());
    reps.push_back(x);
    for (auto m : n.members()) coset[g.mul(m, x)] = id;
  }
  const std::size_t k = reps.size();
  std::vector<Permutation> elements;
  elements.reserve(k);
  for (std::size_t c = 0; c < k; ++c) {
    std::vector<Permutation::Point> images(k);
    for (std::size_t d = 0; d < k; ++d) images[d] = coset[g.mul(reps[d], reps[c])];
    elements.push_back(Permutation::from_images(std::move(images)));
  }
  std::vector<ElementId> table;
  if (k <= kTableLimit) {
    table.resize(k * k);
    for (std::size_t a = 0; a < k; ++a)
      for (std::size_t b = 0; b < k; ++b) table[a * k + b] = coset[g.mul(reps[a], reps[b])];
  }
  std::vector<Permutation> gens;
  std::set<ElementId> seen;
  for (auto s : g.generator_ids()) {
    const ElementId c = coset[s];
    if (c != 0 && seen.insert(c).second) gens.push_back(elements[c]);
  }
  Group q = Group::from_closed_set(k, std::move(gens), std::move(elements), std::move(table));
  return Quotient{std::move(q), std::move(coset)};
}

// Lemma-style divisibility pair: (|x^N| divides |x^G|, |(Nx)^{G/N}| divides |x^G|).
// The first entry is vacuously true when x lies outside N.
inline std::pair<bool, bool> class_size_divides(const Group& g, const Subgroup& n, ElementId x) {
  if (!is_normal(g, n)) throw NotNormal();
  const std::uint64_t in_g = g.class_of(x).size();
  bool first = true;
  if (n.contains(x)) {
    const Group ng = n.to_group();
    const std::uint64_t in_n = ng.class_of(ng.index_of(g.element(x))).size();
    first = in_g % in_n == 0;
  }
  const Quotient q = quotient(g, n);
  const std::uint64_t in_q = q.group.class_of(q.projection[x]).size();
  return {first, in_g % in_q == 0};
}

// ---------------------------------------------------------------------------
// Normal subgroups

// Distinct normal closures of the class representatives, ascending by order.
inline std::vector<Subgroup> class_normal_closures(const Group& g) {
  std::vector<Subgroup> out;
  std::set<std::vector<ElementId>> seen;
  for (const auto& c : g.classes()) {
    if (c.representative == Group::identity()) continue;
    const ElementId seed[] = {c.representative};
    Subgroup s = normal_closure(g, seed);
    std::vector<ElementId> key(s.members().begin(), s.members().end());
    if (seen.insert(std::move(key)).second) out.push_back(std::move(s));
  }
  std::stable_sort(out.begin(), out.end(),
                   [](const Subgroup& a, const Subgroup& b) { return a.order() < b.order(); });
  return out;
}

struct NormalSubgroupScan {
  std::vector<Subgroup> subgroups;  // ascending by (order, members)
  bool complete = true;             // false when the cap truncated the scan
};

inline constexpr std::size_t kNormalSubgroupCap = 512;

// Normal subgroups as joins of class-representative normal closures.  When
// the cap is not reached this is the full normal-subgroup lattice.
inline NormalSubgroupScan normal_subgroups(const Group& g,
                                           std::size_t cap = kNormalSubgroupCap) {
  const auto closures = class_normal_closures(g);
  NormalSubgroupScan scan;
  std::set<std::vector<ElementId>> seen{{Group::identity()}};
  scan.subgroups.push_back(trivial_subgroup(g));
  for (std::size_t head = 0; head < scan.subgroups.size() && scan.complete; ++head) {
    for (const auto& c : closures) {
      if (c.is_subset_of(scan.subgroups[head])) continue;
      Subgroup j = join(scan.subgroups[head], c);
      std::vector<ElementId> key(j.members().begin(), j.members().end());
      if (!seen.insert(std::move(key)).second) continue;
      if (scan.subgroups.size() >= cap) {
        scan.complete = false;
        break;
      }
      scan.subgroups.push_back(std::move(j));
    }
  }
  std::sort(scan.subgroups.begin(), scan.subgroups.end(),
            [](const Subgroup& a, const Subgroup& b) {
              if (a.order() != b.order()) return a.order() < b.order();
              return std::lexicographical_compare(a.members().begin(), a.members().end(),
                                                  b.members().begin(), b.members().end());
            });
  return scan;
}

// ---------------------------------------------------------------------------
// Fingerprints and composition factors

struct GroupFingerprint {
  std::uint64_t order = 1;
  std::vector<std::uint64_t> class_sizes;  // ascending
  std::uint64_t abelianization_order = 1;

  friend bool operator==(const GroupFingerprint&, const GroupFingerprint&) = default;
};

inline GroupFingerprint fingerprint(const Group& g) {
  return GroupFingerprint{g.order(), class_sizes(g), g.order() / derived_subgroup(g).order()};
}

struct CompositionFactorFingerprint {
  std::uint64_t order = 1;
  bool abelian = true;
  std::vector<std::uint64_t> class_size_multiset;

  friend bool operator==(const CompositionFactorFingerprint&,
                         const CompositionFactorFingerprint&) = default;
};

// A maximal normal subgroup found by greedy growth: repeatedly join the
// class-representative closure giving the largest proper normal subgroup
// (ties to the lexicographically smallest member list) until none remains.
inline Subgroup maximal_normal_subgroup(const Group& g) {
  const auto closures = class_normal_closures(g);
  Subgroup current = trivial_subgroup(g);
  for (;;) {
    std::optional<Subgroup> best;
    for (const auto& c : closures) {
      if (c.is_subset_of(current)) continue;
      Subgroup j = join(current, c);
      if (j.is_whole()) continue;
      if (!best || j.order() > best->order() ||
          (j.order() == best->order() &&
           std::lexicographical_compare(j.members().begin(), j.members().end(),
                                        best->members().begin(), best->members().end())))
        best = std::move(j);
    }
    if (!best) return current;
    current = std::move(*best);
  }
}

inline std::vector<CompositionFactorFingerprint> composition_factors(const Group& g) {
  std::vector<CompositionFactorFingerprint> out;
  Group current = g;
  while (current.order() > 1) {
    const Subgroup m = maximal_normal_subgroup(current);
    const Group factor = m.is_trivial() ? current : quotient(current, m).group;
    out.push_back({factor.order(), factor.is_abelian(), class_sizes(factor)});
    current = m.to_group();
  }
  return out;
}

// SL_3(2) has order 168 and is the only simple group of that order.
inline bool has_sl32_factor(const std::vector<CompositionFactorFingerprint>& factors) {
  return std::any_of(factors.begin(), factors.end(),
                     [](const auto& f) { return !f.abelian && f.order == 168; });
}

inline bool has_sl32_factor(const Group& g) { return has_sl32_factor(composition_factors(g)); }

// Every composition factor is a p-group or a p'-group.
inline bool is_p_solvable(const std::vector<CompositionFactorFingerprint>& factors, Prime p) {
  return std::all_of(factors.begin(), factors.end(), [p](const auto& f) {
    return is_p_power(f.order, p) || f.order % p != 0;
  });
}

inline bool is_p_solvable(const Group& g, Prime p) {
  return is_p_solvable(composition_factors(g), p);
}

}  // namespace realclass
