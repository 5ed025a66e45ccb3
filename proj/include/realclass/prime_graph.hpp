#pragma once

// The prime graph on real class sizes: vertices are the primes dividing some
// real class size, and p -- q is an edge iff pq divides some real class size.

#include <algorithm>
#include <cstdint>
#include <optional>
#include <set>
#include <utility>
#include <vector>

#include "realclass/disjoint_set.hpp"
#include "realclass/number_theory.hpp"
#include "realclass/real_classes.hpp"

namespace realclass {

struct PrimeGraph {
  std::vector<Prime> vertices;                 // ascending
  std::vector<std::pair<Prime, Prime>> edges;  // p < q, lexicographic
  // Component containing 2 first, then by smallest prime; each ascending.
  std::vector<std::vector<Prime>> components;

  bool has_vertex(Prime p) const {
    return std::binary_search(vertices.begin(), vertices.end(), p);
  }
  bool has_edge(Prime p, Prime q) const {
    if (p > q) std::swap(p, q);
    return std::binary_search(edges.begin(), edges.end(), std::make_pair(p, q));
  }
  // The empty graph and a single vertex count as connected.
  bool is_connected() const { return components.size() <= 1; }
  bool is_disconnected() const { return components.size() >= 2; }

  friend bool operator==(const PrimeGraph&, const PrimeGraph&) = default;
};

// Edges come from the size multiset alone.
inline PrimeGraph prime_graph_from_sizes(const std::vector<std::uint64_t>& sizes) {
  std::set<Prime> vertices;
  std::set<std::pair<Prime, Prime>> edges;
  for (auto n : sizes) {
    const auto primes = prime_divisors(n);
    vertices.insert(primes.begin(), primes.end());
    for (std::size_t i = 0; i < primes.size(); ++i)
      for (std::size_t j = i + 1; j < primes.size(); ++j) edges.emplace(primes[i], primes[j]);
  }
  PrimeGraph graph;
  graph.vertices.assign(vertices.begin(), vertices.end());
  graph.edges.assign(edges.begin(), edges.end());

  auto position = [&](Prime p) {
    return static_cast<std::size_t>(
        std::lower_bound(graph.vertices.begin(), graph.vertices.end(), p) -
        graph.vertices.begin());
  };
  DisjointSet components(graph.vertices.size());
  for (const auto& [p, q] : graph.edges) components.unite(position(p), position(q));

  std::vector<std::vector<Prime>> grouped(graph.vertices.size());
  for (std::size_t i = 0; i < graph.vertices.size(); ++i)
    grouped[components.find(i)].push_back(graph.vertices[i]);
  for (auto& c : grouped)
    if (!c.empty()) graph.components.push_back(std::move(c));
  std::sort(graph.components.begin(), graph.components.end(), [](const auto& a, const auto& b) {
    const bool a2 = a.front() == 2;
    const bool b2 = b.front() == 2;
    if (a2 != b2) return a2;
    return a.front() < b.front();
  });
  return graph;
}

inline PrimeGraph delta_star(const Group& g) { return prime_graph_from_sizes(real_class_data(g).sizes); }

struct ComponentSplit {
  std::vector<Prime> pi1;                 // holds 2 whenever 2 is a vertex
  std::optional<std::vector<Prime>> pi2;  // absent for a connected graph
  std::size_t component_count = 0;        // above 2 means the split is not faithful
};

inline ComponentSplit components_vertex_sets(const PrimeGraph& graph) {
  ComponentSplit split;
  split.component_count = graph.components.size();
  if (!graph.components.empty()) split.pi1 = graph.components[0];
  if (graph.components.size() >= 2) split.pi2 = graph.components[1];
  return split;
}

inline bool is_subgraph(const PrimeGraph& a, const PrimeGraph& b) {
  return std::includes(b.vertices.begin(), b.vertices.end(), a.vertices.begin(),
                       a.vertices.end()) &&
         std::includes(b.edges.begin(), b.edges.end(), a.edges.begin(), a.edges.end());
}

// Every pair of distinct primes in vertex_set is joined by an edge.
inline bool is_complete(const std::vector<Prime>& vertex_set, const PrimeGraph& graph) {
  for (std::size_t i = 0; i < vertex_set.size(); ++i)
    for (std::size_t j = i + 1; j < vertex_set.size(); ++j)
      if (!graph.has_edge(vertex_set[i], vertex_set[j])) return false;
  return true;
}

}  // namespace realclass
