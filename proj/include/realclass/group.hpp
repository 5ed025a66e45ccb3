#pragma once

// Finite permutation groups with an exhaustively materialized element set.
//
// Elements are addressed by dense ids (ElementId); id 0 is always the
// identity.  Groups up to kTableLimit elements carry a full multiplication
// table, so every structural computation above this layer runs on ids.
// A Group is an immutable value sharing its data; copies are cheap and safe
// to read from several threads.

#include <algorithm>
#include <cstdint>
#include <cstdlib>
#include <memory>
#include <mutex>
#include <optional>
#include <span>
#include <stdexcept>
#include <string>
#include <unordered_map>
#include <utility>
#include <vector>

#include "realclass/permutation.hpp"

namespace realclass {

using ElementId = std::uint32_t;

inline constexpr std::size_t kDefaultCap = 1'000'000;
inline constexpr std::size_t kTableLimit = 4096;

class ClosureExceedsCap : public std::runtime_error {
 public:
  explicit ClosureExceedsCap(std::size_t cap)
      : std::runtime_error("group closure exceeds element cap of " + std::to_string(cap)),
        cap_(cap) {}
  std::size_t cap() const noexcept { return cap_; }

 private:
  std::size_t cap_;
};

class NotAMember : public std::invalid_argument {
 public:
  explicit NotAMember(const Permutation& p)
      : std::invalid_argument("element " + p.to_cycles() + " is not in the group") {}
};

// REALCLASS_CAP overrides the default element cap.
inline std::size_t default_cap() {
  if (const char* env = std::getenv("REALCLASS_CAP")) {
    try {
      const auto v = std::stoull(env);
      if (v > 0) return static_cast<std::size_t>(v);
    } catch (const std::exception&) {
    }
  }
  return kDefaultCap;
}

struct ConjugacyClass {
  ElementId representative;
  std::vector<ElementId> members;  // sorted ascending
  bool is_real;

  std::size_t size() const noexcept { return members.size(); }
};

namespace detail {

struct GroupData {
  std::size_t degree = 1;
  std::vector<Permutation> generators;
  std::vector<ElementId> generator_ids;
  std::vector<Permutation> elements;
  std::unordered_map<Permutation, ElementId, PermutationHash> index;
  std::vector<ElementId> table;  // row-major, empty above kTableLimit
  std::vector<ElementId> inverses;
  std::vector<std::uint64_t> orders;

  mutable std::once_flag classes_once;
  mutable std::vector<ConjugacyClass> classes;
  mutable std::vector<std::uint32_t> class_of;
};

}  // namespace detail

class Group {
 public:
  // Breadth-first closure of the generators under right multiplication.
  static Group generate(std::span<const Permutation> generators, std::size_t degree,
                        std::size_t cap = default_cap()) {
    if (generators.empty()) throw std::invalid_argument("generator list is empty");
    if (cap == 0) throw std::invalid_argument("element cap must be positive");
    for (const auto& g : generators)
      if (g.degree() != degree) throw DegreeMismatch(g.degree(), degree);

    std::vector<Permutation> elements{Permutation::identity(degree)};
    std::unordered_map<Permutation, ElementId, PermutationHash> index{{elements[0], 0}};
    if (elements.size() > cap) throw ClosureExceedsCap(cap);
    for (std::size_t head = 0; head < elements.size(); ++head) {
      for (const auto& s : generators) {
        Permutation next = compose(elements[head], s);
        if (index.count(next)) continue;
        if (elements.size() + 1 > cap) throw ClosureExceedsCap(cap);
        index.emplace(next, static_cast<ElementId>(elements.size()));
        elements.push_back(std::move(next));
      }
    }
    return from_closed_set(degree, {generators.begin(), generators.end()}, std::move(elements),
                           {}, std::move(index));
  }

  // Builds a group from an element list already known to be closed.
  // elements[0] must be the identity.  A supplied table must be consistent
  // with compose() on the elements.
  static Group from_closed_set(
      std::size_t degree, std::vector<Permutation> generators, std::vector<Permutation> elements,
      std::vector<ElementId> table = {},
      std::unordered_map<Permutation, ElementId, PermutationHash> index = {}) {
    auto data = std::make_shared<detail::GroupData>();
    data->degree = degree;
    if (generators.empty()) generators.push_back(Permutation::identity(degree));
    data->generators = std::move(generators);
    data->elements = std::move(elements);
    const std::size_t n = data->elements.size();
    if (index.size() != n) {
      index.clear();
      index.reserve(n);
      for (std::size_t i = 0; i < n; ++i)
        index.emplace(data->elements[i], static_cast<ElementId>(i));
    }
    data->index = std::move(index);

    if (n <= kTableLimit) {
      if (table.size() == n * n) {
        data->table = std::move(table);
      } else {
        data->table.resize(n * n);
        for (std::size_t i = 0; i < n; ++i)
          for (std::size_t j = 0; j < n; ++j)
            data->table[i * n + j] =
                data->index.at(compose(data->elements[i], data->elements[j]));
      }
    }
    data->inverses.resize(n);
    data->orders.resize(n);
    for (std::size_t i = 0; i < n; ++i) {
      data->inverses[i] = data->index.at(inverse(data->elements[i]));
      data->orders[i] = realclass::element_order(data->elements[i]);
    }
    for (const auto& g : data->generators) data->generator_ids.push_back(data->index.at(g));

    Group g;
    g.data_ = std::move(data);
    return g;
  }

  std::size_t degree() const noexcept { return data_->degree; }
  std::size_t order() const noexcept { return data_->elements.size(); }
  std::span<const Permutation> generators() const noexcept { return data_->generators; }
  std::span<const ElementId> generator_ids() const noexcept { return data_->generator_ids; }
  std::span<const Permutation> elements() const noexcept { return data_->elements; }
  const Permutation& element(ElementId id) const { return data_->elements[id]; }

  static constexpr ElementId identity() noexcept { return 0; }

  std::optional<ElementId> find(const Permutation& p) const {
    if (p.degree() != degree()) throw DegreeMismatch(p.degree(), degree());
    auto it = data_->index.find(p);
    if (it == data_->index.end()) return std::nullopt;
    return it->second;
  }

  ElementId index_of(const Permutation& p) const {
    if (auto id = find(p)) return *id;
    throw NotAMember(p);
  }

  bool contains(const Permutation& p) const { return find(p).has_value(); }

  // a first, then b.
  ElementId mul(ElementId a, ElementId b) const {
    if (!data_->table.empty()) return data_->table[std::size_t{a} * order() + b];
    return data_->index.at(compose(data_->elements[a], data_->elements[b]));
  }

  ElementId inv(ElementId a) const { return data_->inverses[a]; }

  // g^-1 x g
  ElementId conj(ElementId x, ElementId g) const { return mul(mul(inv(g), x), g); }

  ElementId commutator(ElementId a, ElementId b) const {
    return mul(mul(inv(a), inv(b)), mul(a, b));
  }

  ElementId pow(ElementId x, std::int64_t k) const {
    const auto n = static_cast<std::int64_t>(element_order(x));
    k %= n;
    if (k < 0) k += n;
    ElementId result = identity();
    ElementId base = x;
    for (auto e = static_cast<std::uint64_t>(k); e != 0; e >>= 1) {
      if (e & 1) result = mul(result, base);
      base = mul(base, base);
    }
    return result;
  }

  std::uint64_t element_order(ElementId x) const { return data_->orders[x]; }

  bool commute(ElementId a, ElementId b) const { return mul(a, b) == mul(b, a); }

  // Conjugacy classes ordered by (size, representative), where the
  // representative is the lexicographically least permutation in the class.
  const std::vector<ConjugacyClass>& classes() const {
    std::call_once(data_->classes_once, [this] { compute_classes(); });
    return data_->classes;
  }

  // Position in classes() of the class containing x.
  std::size_t class_index(ElementId x) const {
    classes();
    return data_->class_of[x];
  }

  const ConjugacyClass& class_of(ElementId x) const { return classes()[class_index(x)]; }

  bool is_abelian() const {
    for (auto a : generator_ids())
      for (auto b : generator_ids())
        if (!commute(a, b)) return false;
    return true;
  }

  bool same_as(const Group& other) const noexcept { return data_ == other.data_; }

 private:
  std::shared_ptr<const detail::GroupData> data_;

  void compute_classes() const {
    const std::size_t n = order();
    constexpr auto kUnset = static_cast<std::uint32_t>(-1);
    std::vector<std::uint32_t> raw(n, kUnset);
    std::vector<ConjugacyClass> found;
    for (ElementId start = 0; start < n; ++start) {
      if (raw[start] != kUnset) continue;
      const auto id = static_cast<std::uint32_t>(found.size());
      std::vector<ElementId> orbit{start};
      raw[start] = id;
      for (std::size_t head = 0; head < orbit.size(); ++head) {
        for (auto s : generator_ids()) {
          const ElementId y = conj(orbit[head], s);
          if (raw[y] != kUnset) continue;
          raw[y] = id;
          orbit.push_back(y);
        }
      }
      std::sort(orbit.begin(), orbit.end());
      ElementId rep = orbit.front();
      for (auto y : orbit)
        if (element(y) < element(rep)) rep = y;
      const bool real = raw[inv(rep)] == id;
      found.push_back(ConjugacyClass{rep, std::move(orbit), real});
    }
    std::vector<std::uint32_t> perm(found.size());
    for (std::uint32_t i = 0; i < perm.size(); ++i) perm[i] = i;
    std::sort(perm.begin(), perm.end(), [&](auto a, auto b) {
      if (found[a].size() != found[b].size()) return found[a].size() < found[b].size();
      return element(found[a].representative) < element(found[b].representative);
    });
    std::vector<std::uint32_t> position(found.size());
    auto& out = data_->classes;
    out.reserve(found.size());
    for (std::uint32_t i = 0; i < perm.size(); ++i) {
      position[perm[i]] = i;
      out.push_back(std::move(found[perm[i]]));
    }
    data_->class_of.resize(n);
    for (std::size_t x = 0; x < n; ++x) data_->class_of[x] = position[raw[x]];
  }
};

inline bool is_member(const Group& g, const Permutation& p) { return g.contains(p); }

// A subgroup of a materialized parent, held as a sorted set of parent ids.
class Subgroup {
 public:
  Subgroup(Group parent, std::vector<ElementId> members, std::vector<ElementId> generators)
      : parent_(std::move(parent)),
        members_(std::move(members)),
        generators_(std::move(generators)),
        mask_(parent_.order(), false) {
    std::sort(members_.begin(), members_.end());
    for (auto m : members_) mask_[m] = true;
  }

  const Group& parent() const noexcept { return parent_; }
  std::span<const ElementId> members() const noexcept { return members_; }
  std::span<const ElementId> generators() const noexcept { return generators_; }
  std::size_t order() const noexcept { return members_.size(); }
  bool contains(ElementId x) const { return mask_[x]; }
  bool contains(const Permutation& p) const {
    auto id = parent_.find(p);
    return id && mask_[*id];
  }
  bool is_trivial() const noexcept { return members_.size() == 1; }
  bool is_whole() const noexcept { return members_.size() == parent_.order(); }

  bool is_subset_of(const Subgroup& other) const {
    for (auto m : members_)
      if (!other.contains(m)) return false;
    return true;
  }

  // Standalone group on the same points; element i is members()[i].
  Group to_group() const {
    const std::size_t n = members_.size();
    std::vector<Permutation> elements;
    elements.reserve(n);
    for (auto m : members_) elements.push_back(parent_.element(m));
    std::vector<Permutation> gens;
    for (auto g : generators_)
      if (g != Group::identity()) gens.push_back(parent_.element(g));
    std::vector<ElementId> table;
    if (n <= kTableLimit) {
      std::vector<ElementId> local(parent_.order(), 0);
      for (std::size_t i = 0; i < n; ++i) local[members_[i]] = static_cast<ElementId>(i);
      table.resize(n * n);
      for (std::size_t i = 0; i < n; ++i)
        for (std::size_t j = 0; j < n; ++j)
          table[i * n + j] = local[parent_.mul(members_[i], members_[j])];
    }
    return Group::from_closed_set(parent_.degree(), std::move(gens), std::move(elements),
                                  std::move(table));
  }

  friend bool operator==(const Subgroup& a, const Subgroup& b) {
    return a.members_ == b.members_;
  }

 private:
  Group parent_;
  std::vector<ElementId> members_;
  std::vector<ElementId> generators_;
  std::vector<bool> mask_;
};

// <candidates> inside g.  Only candidates outside the running closure become
// generators, so the result carries a short generating set.
inline Subgroup generate_subgroup(const Group& g, std::span<const ElementId> candidates) {
  std::vector<bool> in(g.order(), false);
  std::vector<ElementId> elems{Group::identity()};
  in[Group::identity()] = true;
  std::vector<ElementId> gens;
  for (auto c : candidates) {
    if (in[c]) continue;
    gens.push_back(c);
    for (std::size_t head = 0; head < elems.size(); ++head) {
      for (auto s : gens) {
        const ElementId y = g.mul(elems[head], s);
        if (in[y]) continue;
        in[y] = true;
        elems.push_back(y);
      }
    }
  }
  return Subgroup(g, std::move(elems), std::move(gens));
}

inline Subgroup whole_group(const Group& g) {
  std::vector<ElementId> all(g.order());
  for (std::size_t i = 0; i < all.size(); ++i) all[i] = static_cast<ElementId>(i);
  std::vector<ElementId> gens(g.generator_ids().begin(), g.generator_ids().end());
  return Subgroup(g, std::move(all), std::move(gens));
}

inline Subgroup trivial_subgroup(const Group& g) { return Subgroup(g, {Group::identity()}, {}); }

// Subgroup whose members are given; the set must already be closed.
inline Subgroup subgroup_from_members(const Group& g, std::vector<ElementId> members) {
  Subgroup closed = generate_subgroup(g, members);
  if (closed.order() != members.size())
    throw std::logic_error("element set is not closed under multiplication");
  return closed;
}

}  // namespace realclass
