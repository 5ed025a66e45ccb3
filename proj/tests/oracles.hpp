#pragma once

// Brute-force reference computations.  They use only Permutation arithmetic
// and recompute everything from scratch, sharing no code path with Group,
// Subgroup or the class machinery.

#include <algorithm>
#include <bit>
#include <cstdint>
#include <map>
#include <set>
#include <stdexcept>
#include <vector>

#include "realclass/permutation.hpp"

namespace oracle {

using realclass::compose;
using realclass::inverse;
using realclass::Permutation;

// Closure by squaring the set until it stops growing.
inline std::vector<Permutation> closure(const std::vector<Permutation>& gens, std::size_t degree) {
  std::set<Permutation> set{Permutation::identity(degree)};
  set.insert(gens.begin(), gens.end());
  for (bool grew = true; grew;) {
    grew = false;
    const std::vector<Permutation> current(set.begin(), set.end());
    for (const auto& a : current)
      for (const auto& b : current)
        if (set.insert(compose(a, b)).second) grew = true;
  }
  return {set.begin(), set.end()};
}

inline Permutation conj(const Permutation& x, const Permutation& g) {
  return compose(compose(inverse(g), x), g);
}

struct Class {
  std::set<Permutation> members;
  bool real = false;
};

// Full conjugation orbits; reality by scanning every g for each member.
inline std::vector<Class> classes(const std::vector<Permutation>& elements) {
  std::vector<Class> out;
  std::set<Permutation> seen;
  for (const auto& x : elements) {
    if (seen.count(x)) continue;
    Class c;
    for (const auto& g : elements) c.members.insert(conj(x, g));
    seen.insert(c.members.begin(), c.members.end());
    c.real = true;
    for (const auto& y : c.members) {
      const Permutation y_inv = inverse(y);
      bool inverted = false;
      for (const auto& g : elements)
        if (conj(y, g) == y_inv) {
          inverted = true;
          break;
        }
      if (!inverted) c.real = false;
    }
    out.push_back(std::move(c));
  }
  return out;
}

inline std::vector<std::uint64_t> real_sizes(const std::vector<Class>& cs) {
  std::vector<std::uint64_t> out;
  for (const auto& c : cs)
    if (c.real) out.push_back(c.members.size());
  std::sort(out.begin(), out.end());
  return out;
}

inline std::set<Permutation> center(const std::vector<Permutation>& elements) {
  std::set<Permutation> out;
  for (const auto& z : elements) {
    bool central = true;
    for (const auto& g : elements)
      if (compose(z, g) != compose(g, z)) {
        central = false;
        break;
      }
    if (central) out.insert(z);
  }
  return out;
}

inline std::set<Permutation> centralizer(const std::vector<Permutation>& elements, const Permutation& x) {
  std::set<Permutation> out;
  for (const auto& g : elements)
    if (compose(x, g) == compose(g, x)) out.insert(g);
  return out;
}

// <[a, b] : a, b in H>
inline std::vector<Permutation> derived(const std::vector<Permutation>& h, std::size_t degree) {
  std::set<Permutation> commutators;
  for (const auto& a : h)
    for (const auto& b : h) commutators.insert(realclass::commutator(a, b));
  return closure({commutators.begin(), commutators.end()}, degree);
}

// Every subgroup of a group of order at most 64, as bitmasks over the
// sorted element list.
class Lattice {
 public:
  explicit Lattice(std::vector<Permutation> elements) : elements_(std::move(elements)) {
    std::sort(elements_.begin(), elements_.end());
    const std::size_t n = elements_.size();
    if (n > 64) throw std::invalid_argument("lattice oracle is limited to order 64");
    std::map<Permutation, std::size_t> index;
    for (std::size_t i = 0; i < n; ++i) index[elements_[i]] = i;
    table_.assign(n, std::vector<std::size_t>(n));
    for (std::size_t i = 0; i < n; ++i)
      for (std::size_t j = 0; j < n; ++j) table_[i][j] = index.at(compose(elements_[i], elements_[j]));
    identity_ = index.at(Permutation::identity(elements_[0].degree()));

    // Breadth-first over the lattice: each subgroup carries a generating
    // list, and <H, g> is closed by multiplying out from the identity.
    std::set<std::uint64_t> found{bit(identity_)};
    std::vector<std::pair<std::uint64_t, std::vector<std::size_t>>> frontier{{bit(identity_), {}}};
    while (!frontier.empty()) {
      std::vector<std::pair<std::uint64_t, std::vector<std::size_t>>> next;
      for (const auto& [h, gens] : frontier)
        for (std::size_t g = 0; g < n; ++g) {
          if (h & bit(g)) continue;
          auto more = gens;
          more.push_back(g);
          const auto k = close(more);
          if (found.insert(k).second) next.emplace_back(k, std::move(more));
        }
      frontier = std::move(next);
    }
    subgroups_.assign(found.begin(), found.end());
  }

  const std::vector<std::uint64_t>& subgroups() const { return subgroups_; }
  const std::vector<Permutation>& elements() const { return elements_; }

  bool is_normal(std::uint64_t h) const {
    for (std::size_t x = 0; x < elements_.size(); ++x) {
      if (!(h & bit(x))) continue;
      for (std::size_t g = 0; g < elements_.size(); ++g) {
        const Permutation c = conj(elements_[x], elements_[g]);
        const auto pos = std::lower_bound(elements_.begin(), elements_.end(), c) - elements_.begin();
        if (!(h & bit(pos))) return false;
      }
    }
    return true;
  }

  std::set<Permutation> members(std::uint64_t h) const {
    std::set<Permutation> out;
    for (std::size_t i = 0; i < elements_.size(); ++i)
      if (h & bit(i)) out.insert(elements_[i]);
    return out;
  }

  // The largest normal subgroup of odd order, found as the unique maximal
  // element among all normal odd-order subgroups.
  std::set<Permutation> largest_normal_odd() const {
    std::vector<std::uint64_t> candidates;
    for (auto h : subgroups_)
      if (std::popcount(h) % 2 == 1 && is_normal(h)) candidates.push_back(h);
    std::vector<std::uint64_t> maximal;
    for (auto h : candidates) {
      bool below = false;
      for (auto k : candidates)
        if (k != h && (h & k) == h) below = true;
      if (!below) maximal.push_back(h);
    }
    if (maximal.size() != 1) throw std::logic_error("no unique maximal normal odd-order subgroup");
    return members(maximal[0]);
  }

 private:
  static std::uint64_t bit(std::size_t i) { return std::uint64_t{1} << i; }

  std::uint64_t close(const std::vector<std::size_t>& gens) const {
    std::uint64_t s = bit(identity_);
    std::vector<std::size_t> queue{identity_};
    for (std::size_t head = 0; head < queue.size(); ++head)
      for (auto g : gens) {
        const auto y = table_[queue[head]][g];
        if (s & bit(y)) continue;
        s |= bit(y);
        queue.push_back(y);
      }
    return s;
  }

  std::vector<Permutation> elements_;
  std::vector<std::vector<std::size_t>> table_;
  std::size_t identity_ = 0;
  std::vector<std::uint64_t> subgroups_;
};

}  // namespace oracle
