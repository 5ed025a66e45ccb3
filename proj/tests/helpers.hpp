#pragma once

#include <string>
#include <vector>

#include "realclass/realclass.hpp"

namespace testing_support {

using namespace realclass;

inline Permutation perm(const std::string& cycles, std::size_t degree) { return parse_cycles(cycles, degree); }

inline Group make_group(std::size_t degree, const std::vector<std::string>& gens) {
  std::vector<Permutation> ps;
  for (const auto& g : gens) ps.push_back(perm(g, degree));
  return Group::generate(ps, degree);
}

inline Group sym(std::size_t n) { return symmetric(n).build(); }
inline Group alt(std::size_t n) { return alternating(n).build(); }
inline Group cyc(std::size_t n) { return cyclic(n).build(); }
inline Group quaternion() { return dicyclic(8).build(); }

inline std::vector<std::uint64_t> sorted(std::vector<std::uint64_t> v) {
  std::sort(v.begin(), v.end());
  return v;
}

inline std::vector<Permutation> members_of(const Subgroup& h) {
  std::vector<Permutation> out;
  for (auto m : h.members()) out.push_back(h.parent().element(m));
  std::sort(out.begin(), out.end());
  return out;
}

inline std::vector<Permutation> elements_of(const Group& g) {
  std::vector<Permutation> out(g.elements().begin(), g.elements().end());
  std::sort(out.begin(), out.end());
  return out;
}

// The order-48 example group from the shipped candidate file.
inline Group example48_group() {
  for (const auto& [file, text] : builtin_data::group_files) {
    if (file != "order48.groups") continue;
    const auto result = find_example48(parse_group_text(std::string(text), "order48.groups"));
    if (!result.match) throw std::runtime_error("order-48 example missing from candidate file");
    return result.match->build();
  }
  throw std::runtime_error("order48.groups not embedded");
}

}  // namespace testing_support
