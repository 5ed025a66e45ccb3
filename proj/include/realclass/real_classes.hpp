#pragma once

// Real elements and real conjugacy classes.  Reality is always relative to
// the group passed in: for a subgroup S, build S.to_group() first.

#include <algorithm>
#include <cstdint>
#include <map>
#include <set>
#include <stdexcept>
#include <vector>

#include "realclass/group.hpp"
#include "realclass/number_theory.hpp"
#include "realclass/structure.hpp"

namespace realclass {

class NotReal : public std::invalid_argument {
 public:
  NotReal() : std::invalid_argument("element is not real") {}
};

inline bool is_real(const Group& g, ElementId x) { return g.class_of(x).is_real; }

inline bool is_real(const Group& g, const Permutation& x) {
  return is_real(g, require_member(g, x));
}

// Union of the real classes, ascending ids.
inline std::vector<ElementId> real_elements(const Group& g) {
  std::vector<ElementId> out;
  for (const auto& c : g.classes())
    if (c.is_real) out.insert(out.end(), c.members.begin(), c.members.end());
  std::sort(out.begin(), out.end());
  return out;
}

struct RealClassData {
  std::vector<const ConjugacyClass*> classes;  // into g.classes(), by (size, representative)
  std::vector<std::uint64_t> sizes;             // ascending, with repeats
  std::vector<std::uint64_t> noncentral_sizes;  // sizes > 1
  std::vector<Prime> rho_star;                  // ascending
};

inline RealClassData real_class_data(const Group& g) {
  RealClassData data;
  std::set<Prime> primes;
  for (const auto& c : g.classes()) {
    if (!c.is_real) continue;
    data.classes.push_back(&c);
    data.sizes.push_back(c.size());
    if (c.size() > 1) data.noncentral_sizes.push_back(c.size());
    for (Prime p : prime_divisors(c.size())) primes.insert(p);
  }
  data.rho_star.assign(primes.begin(), primes.end());
  return data;
}

// C*_G(x) = { g : x^g in {x, x^-1} }.
inline Subgroup extended_centralizer(const Group& g, ElementId x) {
  const ElementId xi = g.inv(x);
  std::vector<ElementId> members;
  for (ElementId y = 0; y < g.order(); ++y) {
    const ElementId c = g.conj(x, y);
    if (c == x || c == xi) members.push_back(y);
  }
  return subgroup_from_members(g, std::move(members));
}

// A 2-element t with x^t = x^-1: take any inverting g with o(g) = 2^a m,
// m odd, and return g^m.
inline ElementId real_witness_2element(const Group& g, ElementId x) {
  const ElementId xi = g.inv(x);
  for (ElementId y = 0; y < g.order(); ++y) {
    if (g.conj(x, y) != xi) continue;
    const std::uint64_t o = g.element_order(y);
    return g.pow(y, static_cast<std::int64_t>(o / p_part(o, 2)));
  }
  throw NotReal();
}

// x^2 = y^2 implies xZ(S) = yZ(S), evaluated over all pairs.
inline bool sylow2_square_condition(const Group& s) {
  if (!is_p_group(s, 2)) throw std::invalid_argument("square condition needs a 2-group");
  const Subgroup z = center(s);
  std::map<ElementId, ElementId> first_with_square;
  for (ElementId x = 0; x < s.order(); ++x) {
    const auto [it, fresh] = first_with_square.emplace(s.mul(x, x), x);
    if (!fresh && !z.contains(s.mul(s.inv(it->second), x))) return false;
  }
  return true;
}

// Real(S) within S is contained in Z(S).
inline bool real_in_center(const Group& s) {
  const Subgroup z = center(s);
  for (const auto& c : s.classes())
    if (c.is_real && !z.contains(c.representative)) return false;
  return true;
}

// Real(S) <= Z(S) for a Sylow 2-subgroup S of g.
inline bool sylow2_real_central(const Group& g) {
  return real_in_center(sylow_subgroup(g, 2).to_group());
}

// { |x^G|_2 : x real, x not central }.
inline std::set<std::uint64_t> noncentral_real_2parts(const Group& g) {
  std::set<std::uint64_t> out;
  for (const auto& c : g.classes())
    if (c.is_real && c.size() > 1) out.insert(p_part(c.size(), 2));
  return out;
}

}  // namespace realclass
