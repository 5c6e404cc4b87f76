#pragma once

#include <cstddef>
#include <cstdint>
#include <iosfwd>
#include <string>
#include <utility>
#include <vector>

#include <boost/dynamic_bitset.hpp>

#include "strongpow/group.hpp"

namespace strongpow {

using Vertex = std::size_t;
using VertexSet = boost::dynamic_bitset<std::uint64_t>;
using Edge = std::pair<Vertex, Vertex>;

// Pairs (u, v) with u < v, sorted lexicographically, no duplicates.
using EdgeList = std::vector<Edge>;

// Simple undirected graph on vertices [0, n) with one adjacency bitset per
// vertex. Symmetric and loop-free by construction.
class Graph {
 public:
  Graph() = default;
  explicit Graph(std::size_t n) : adj_(n, VertexSet(n)) {}

  static Graph from_edges(std::size_t n, const EdgeList& edges);

  std::size_t order() const noexcept { return adj_.size(); }
  std::size_t edge_count() const;

  // Throws std::out_of_range for vertices >= n and std::invalid_argument for
  // loops.
  void add_edge(Vertex u, Vertex v);
  bool adjacent(Vertex u, Vertex v) const { return adj_[u].test(v); }
  const VertexSet& neighbors(Vertex v) const { return adj_[v]; }
  std::size_t degree(Vertex v) const { return adj_[v].count(); }

  friend bool operator==(const Graph& a, const Graph& b) { return a.adj_ == b.adj_; }

 private:
  std::vector<VertexSet> adj_;
};

EdgeList edge_list(const Graph& g);

// {x^m : 1 <= m <= n-1} as a bitset over the group's elements.
VertexSet power_closure(const FiniteGroup& g, Element x);

// Vertex i is group element i; distinct a, b are adjacent iff
// a^m1 = b^m2 for some 1 <= m1, m2 < n, i.e. iff their power closures meet.
Graph strong_power_graph(const FiniteGroup& g);

Graph complete_graph(std::size_t n);
Graph empty_graph(std::size_t n);
// K_{1,n}: n + 1 vertices, vertex 0 is the centre.
Graph star_graph(std::size_t n);
Graph path_graph(std::size_t n);
Graph cycle_graph(std::size_t n);
// Vertices of b are shifted by a.order().
Graph disjoint_union(const Graph& a, const Graph& b);

// Degrees in vertex order.
std::vector<std::size_t> degree_sequence(const Graph& g);
bool is_regular(const Graph& g);
bool is_complete(const Graph& g);
// Components in order of their smallest vertex, each sorted ascending.
std::vector<std::vector<Vertex>> connected_components(const Graph& g);
bool is_connected(const Graph& g);

// Subgraph induced by `subset`, relabelled in ascending vertex order.
Graph induced_subgraph(const Graph& g, const std::vector<Vertex>& subset);

inline constexpr std::size_t kConnectivityLimit = 14;
inline constexpr std::size_t kChromaticLimit = 14;
inline constexpr std::size_t kIsomorphismLimit = 12;

// Smallest k such that deleting some k vertices disconnects the graph or
// leaves at most one vertex.
std::size_t vertex_connectivity_bruteforce(const Graph& g);

// Exact chromatic number. Complete graphs and graphs that become complete
// after deleting one vertex are answered directly at any size; everything
// else goes through chromatic_number_search.
std::size_t chromatic_number_exact(const Graph& g);

// Backtracking k-colourability for increasing k; no shape shortcuts.
std::size_t chromatic_number_search(const Graph& g);

bool graph_isomorphic(const Graph& a, const Graph& b);

// Graph JSON: {"n": int, "edges": [[u, v], ...]} with u < v, sorted.
std::string to_json(const Graph& g);
Graph graph_from_json(const std::string& text);
void write_dot(std::ostream& out, const Graph& g);

}  // namespace strongpow
