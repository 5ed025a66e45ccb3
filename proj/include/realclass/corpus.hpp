#pragma once

// Corpora of groups: the manifest format, the built-in corpus, directory
// corpora, the search for the order-48 Alt4:C4 example, and the hunt for
// 2-closed groups with a disconnected real-class prime graph.
//
// Manifest lines:
//   max_order N            order bound applied to range lines
//   file NAME              a group file, resolved against the manifest location
//   <family expression>    parameters may be ranges "lo..hi"
//
// A line with ranges expands to the cartesian product of its parameters,
// keeping the combinations that are valid and within max_order.  A line
// without ranges must be valid and is kept regardless of order.

#include <algorithm>
#include <array>
#include <cstdint>
#include <functional>
#include <filesystem>
#include <fstream>
#include <map>
#include <optional>
#include <set>
#include <sstream>
#include <string>
#include <vector>

#include "realclass/families.hpp"
#include "realclass/group_file.hpp"
#include "realclass/parallel.hpp"
#include "realclass/prime_graph.hpp"
#include "realclass/real_classes.hpp"
#include "realclass/structure.hpp"

#if __has_include("realclass/builtin_data.hpp")
#include "realclass/builtin_data.hpp"
#define REALCLASS_HAS_BUILTIN_DATA 1
#endif

namespace realclass {

class ManifestError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

// Resolves "file NAME" entries to group-file text.
using FileResolver = std::function<std::string(const std::string&)>;

namespace detail {

inline std::vector<std::string> split_words(const std::string& line) {
  std::istringstream in(line);
  std::vector<std::string> out;
  for (std::string w; in >> w;) out.push_back(w);
  return out;
}

struct ParamRange {
  std::uint64_t lo, hi;
};

inline std::optional<ParamRange> parse_range(const std::string& token) {
  const auto dots = token.find("..");
  if (dots == std::string::npos) return std::nullopt;
  const auto lo = parse_parameter(token.substr(0, dots));
  const auto hi = parse_parameter(token.substr(dots + 2));
  if (lo > hi) throw ManifestError("empty range '" + token + "'");
  return ParamRange{lo, hi};
}

}  // namespace detail

inline std::vector<GroupSpec> parse_manifest(const std::string& text, const std::string& source,
                                             const FileResolver& resolve) {
  std::vector<GroupSpec> out;
  std::uint64_t max_order = UINT64_MAX;
  std::istringstream in(text);
  std::string line;
  for (std::size_t number = 1; std::getline(in, line); ++number) {
    if (const auto hash = line.find('#'); hash != std::string::npos) line.resize(hash);
    const auto words = detail::split_words(line);
    if (words.empty()) continue;
    const std::string where = source + ":" + std::to_string(number) + ": ";
    try {
      if (words[0] == "max_order" && words.size() == 2) {
        max_order = detail::parse_parameter(words[1]);
        continue;
      }
      if (words[0] == "file" && words.size() == 2) {
        auto specs = parse_group_text(resolve(words[1]), words[1]);
        out.insert(out.end(), specs.begin(), specs.end());
        continue;
      }
      std::vector<std::size_t> range_slots;
      std::vector<detail::ParamRange> ranges;
      for (std::size_t i = 0; i < words.size(); ++i) {
        if (auto r = detail::parse_range(words[i])) {
          range_slots.push_back(i);
          ranges.push_back(*r);
        }
      }
      if (ranges.empty()) {
        out.push_back(family(words));
        continue;
      }
      std::vector<std::uint64_t> cursor;
      for (const auto& r : ranges) cursor.push_back(r.lo);
      for (bool done = false; !done;) {
        auto tokens = words;
        for (std::size_t i = 0; i < ranges.size(); ++i)
          tokens[range_slots[i]] = std::to_string(cursor[i]);
        try {
          if (advertised_order(tokens) <= max_order) out.push_back(family(tokens));
        } catch (const ParameterError&) {
        }
        for (std::size_t k = ranges.size();;) {
          if (k == 0) {
            done = true;
            break;
          }
          --k;
          if (cursor[k] < ranges[k].hi) {
            ++cursor[k];
            break;
          }
          cursor[k] = ranges[k].lo;
        }
      }
    } catch (const std::exception& e) {
      throw ManifestError(where + e.what());
    }
  }
  std::set<std::string> names;
  for (const auto& s : out)
    if (!names.insert(s.name).second) throw ManifestError(source + ": duplicate group name '" + s.name + "'");
  return out;
}

inline std::vector<GroupSpec> builtin_corpus() {
#ifdef REALCLASS_HAS_BUILTIN_DATA
  const FileResolver resolve = [](const std::string& name) -> std::string {
    for (const auto& [file, text] : builtin_data::group_files)
      if (name == file) return std::string(text);
    throw ManifestError("no built-in group file '" + name + "'");
  };
  return parse_manifest(std::string(builtin_data::manifest), "builtin.manifest", resolve);
#else
  throw ManifestError("built-in corpus data was not compiled in");
#endif
}

// A directory corpus: every *.manifest and *.groups file, by file name.
// Group files referenced from a manifest are not loaded a second time.
inline std::vector<GroupSpec> load_corpus_directory(const std::filesystem::path& dir) {
  namespace fs = std::filesystem;
  if (!fs::is_directory(dir)) throw ManifestError("not a directory: " + dir.string());
  std::vector<fs::path> files;
  for (const auto& entry : fs::directory_iterator(dir))
    if (entry.is_regular_file()) files.push_back(entry.path());
  std::sort(files.begin(), files.end());

  auto read = [](const fs::path& p) {
    std::ifstream in(p);
    std::ostringstream buffer;
    buffer << in.rdbuf();
    return buffer.str();
  };
  std::set<std::string> referenced;
  const FileResolver resolve = [&](const std::string& name) {
    referenced.insert(name);
    const fs::path p = dir / name;
    if (!fs::exists(p)) throw ManifestError("missing group file " + p.string());
    return read(p);
  };
  std::vector<GroupSpec> out;
  for (const auto& f : files) {
    if (f.extension() != ".manifest") continue;
    auto specs = parse_manifest(read(f), f.string(), resolve);
    out.insert(out.end(), specs.begin(), specs.end());
  }
  for (const auto& f : files) {
    if (f.extension() != ".groups" || referenced.count(f.filename().string())) continue;
    auto specs = ingest(f.string());
    out.insert(out.end(), specs.begin(), specs.end());
  }
  return out;
}

// "builtin", a directory, or a single group file.
inline std::vector<GroupSpec> load_corpus(const std::string& where) {
  if (where == "builtin") return builtin_corpus();
  if (std::filesystem::is_directory(where)) return load_corpus_directory(where);
  if (std::filesystem::path(where).extension() == ".manifest") {
    const auto dir = std::filesystem::path(where).parent_path();
    std::ifstream in(where);
    std::ostringstream buffer;
    buffer << in.rdbuf();
    return parse_manifest(buffer.str(), where, [&](const std::string& name) {
      std::ifstream f(dir / name);
      if (!f) throw ManifestError("missing group file " + (dir / name).string());
      std::ostringstream b;
      b << f.rdbuf();
      return b.str();
    });
  }
  return ingest(where);
}

// ---------------------------------------------------------------------------
// The order-48 example

// Alt4 x|_phi C4 for every phi: C4 -> Sym4 = Aut(Alt4), realized in the
// regular representation, one representative per distinct invariant profile.
// The generator c of C4 acts by a -> sigma^-1 a sigma, so elements a c^i
// multiply as (a c^i)(b c^j) = (a b^{sigma^-i}) c^{i+j}.
inline std::vector<GroupSpec> alt4_c4_candidates() {
  const Group alt4 = alternating(4).build();
  const Group sym4 = symmetric(4).build();
  std::vector<Permutation> sigmas;
  for (const auto& s : sym4.elements())
    if (4 % element_order(s) == 0) sigmas.push_back(s);
  std::sort(sigmas.begin(), sigmas.end());

  std::vector<GroupSpec> out;
  std::set<std::vector<std::uint64_t>> profiles;
  for (const auto& sigma : sigmas) {
    // twisted[i][b] = id of b^{sigma^-i}
    std::vector<std::vector<ElementId>> twisted(4, std::vector<ElementId>(12));
    for (std::int64_t i = 0; i < 4; ++i) {
      const Permutation t = power(sigma, -i);
      for (ElementId b = 0; b < 12; ++b) twisted[i][b] = alt4.index_of(conjugate(alt4.element(b), t));
    }
    auto mul = [&](std::size_t e, std::size_t f) -> std::size_t {
      const std::size_t a = e % 12, i = e / 12, b = f % 12, j = f / 12;
      return alt4.mul(static_cast<ElementId>(a), twisted[i][b]) + 12 * ((i + j) % 4);
    };
    std::vector<std::size_t> gens(alt4.generator_ids().begin(), alt4.generator_ids().end());
    gens.push_back(12);
    GroupSpec spec = detail::make_spec("alt4:c4 phi=" + sigma.to_cycles(), 48,
                                       detail::regular_generators(48, gens, mul));
    spec.source = "alt4_c4_search";

    const Group g = spec.build();
    std::vector<std::uint64_t> profile = class_sizes(g);
    profile.push_back(0);
    for (auto s : real_class_data(g).sizes) profile.push_back(s);
    profile.push_back(0);
    profile.push_back(center(g).order());
    profile.push_back(derived_subgroup(g).order());
    if (profiles.insert(profile).second) out.push_back(std::move(spec));
  }
  return out;
}

// GL(2,3) acting on the eight nonzero vectors of F_3^2.
inline GroupSpec gl2_3() {
  std::vector<std::pair<int, int>> vectors;
  for (int a = 0; a < 3; ++a)
    for (int b = 0; b < 3; ++b)
      if (a || b) vectors.emplace_back(a, b);
  auto index = [&](int a, int b) {
    return static_cast<Permutation::Point>(
        std::find(vectors.begin(), vectors.end(), std::make_pair(a % 3, b % 3)) - vectors.begin());
  };
  std::vector<std::string> gens;
  for (const auto& m : {std::array<int, 4>{1, 1, 0, 1}, std::array<int, 4>{2, 0, 0, 1},
                        std::array<int, 4>{0, 1, 1, 0}}) {
    std::vector<Permutation::Point> images;
    for (const auto& [a, b] : vectors) images.push_back(index(m[0] * a + m[1] * b, m[2] * a + m[3] * b));
    gens.push_back(detail::images_string(images));
  }
  GroupSpec spec = detail::make_spec("gl2_3", 8, gens);
  spec.source = "alt4_c4_search";
  return spec;
}

// Candidate file contents: every distinct Alt4:C4 plus two order-48 decoys.
inline std::vector<GroupSpec> order48_candidates() {
  auto out = alt4_c4_candidates();
  GroupSpec decoy = direct_product(symmetric(4), cyclic(2));
  decoy.source = "alt4_c4_search";
  out.push_back(decoy);
  out.push_back(gl2_3());
  return out;
}

struct Example48Check {
  bool order_48 = false;
  bool real_sizes_1_3_8 = false;
  bool perfect_odd = false;           // G = O^{2'}(G)
  bool o2_order_8 = false;
  bool mod_o2_like_sym3 = false;      // fingerprint match
  bool mod_center_like_sym4 = false;  // fingerprint match
  bool not_2_closed = false;
  bool not_2_nilpotent = false;

  bool all() const {
    return order_48 && real_sizes_1_3_8 && perfect_odd && o2_order_8 && mod_o2_like_sym3 &&
           mod_center_like_sym4 && not_2_closed && not_2_nilpotent;
  }
};

inline Example48Check check_example48(const Group& g) {
  Example48Check c;
  c.order_48 = g.order() == 48;
  if (!c.order_48) return c;
  const auto sizes = real_class_data(g).sizes;
  c.real_sizes_1_3_8 = std::set<std::uint64_t>(sizes.begin(), sizes.end()) ==
                       std::set<std::uint64_t>{1, 3, 8};
  c.perfect_odd = o_upper(g, 2).is_whole();
  const Subgroup o2 = o_p(g, 2);
  c.o2_order_8 = o2.order() == 8;
  c.mod_o2_like_sym3 = fingerprint(quotient(g, o2).group) == fingerprint(symmetric(3).build());
  c.mod_center_like_sym4 =
      fingerprint(quotient(g, center(g)).group) == fingerprint(symmetric(4).build());
  c.not_2_closed = !is_p_closed(g, 2);
  c.not_2_nilpotent = !is_p_nilpotent(g, 2);
  return c;
}

struct Example48Result {
  std::optional<GroupSpec> match;  // first match in corpus order
  std::size_t matches = 0;
  std::size_t scanned = 0;         // order-48 groups examined
};

inline Example48Result find_example48(const std::vector<GroupSpec>& corpus,
                                      std::size_t cap = default_cap()) {
  Example48Result result;
  for (const auto& spec : corpus) {
    std::optional<Group> g;
    try {
      g = spec.build(cap);
    } catch (const ClosureExceedsCap&) {
      continue;
    }
    if (g->order() != 48) continue;
    ++result.scanned;
    if (!check_example48(*g).all()) continue;
    if (!result.match) result.match = spec;
    ++result.matches;
  }
  return result;
}

// ---------------------------------------------------------------------------
// Conjecture hunt

struct HuntFinding {
  GroupSpec spec;
  std::uint64_t order = 0;
  PrimeGraph graph;
};

struct HuntResult {
  std::vector<HuntFinding> findings;
  std::size_t scanned = 0;     // groups built
  std::size_t two_closed = 0;  // of which 2-closed
  std::size_t skipped = 0;     // beyond the element cap
};

// Every 2-closed group whose Delta* is disconnected.  Reported, never asserted.
inline HuntResult hunt_conjecture(const std::vector<GroupSpec>& corpus, std::size_t jobs = 1,
                                  std::size_t cap = default_cap()) {
  struct One {
    bool built = false;
    bool closed = false;
    std::optional<HuntFinding> finding;
  };
  auto results = parallel_map<One>(corpus.size(), jobs, [&](std::size_t i) {
    One r;
    std::optional<Group> g;
    try {
      g = corpus[i].build(cap);
    } catch (const ClosureExceedsCap&) {
      return r;
    }
    r.built = true;
    if (!is_p_closed(*g, 2)) return r;
    r.closed = true;
    PrimeGraph graph = delta_star(*g);
    if (graph.is_disconnected()) r.finding = HuntFinding{corpus[i], g->order(), std::move(graph)};
    return r;
  });
  HuntResult out;
  for (auto& r : results) {
    if (!r.built) {
      ++out.skipped;
      continue;
    }
    ++out.scanned;
    if (r.closed) ++out.two_closed;
    if (r.finding) out.findings.push_back(std::move(*r.finding));
  }
  return out;
}

}  // namespace realclass
