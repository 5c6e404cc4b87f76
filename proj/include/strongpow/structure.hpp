#pragma once

#include <array>
#include <cstddef>
#include <optional>
#include <stdexcept>
#include <vector>

#include "strongpow/graph.hpp"
#include "strongpow/group.hpp"

namespace strongpow {

// The nine minimal forbidden induced subgraphs of line graphs, smallest
// first; pattern 0 is the claw K_{1,3}.
using ForbiddenPatternSet = std::array<Graph, 9>;

const ForbiddenPatternSet& beineke_patterns();

inline constexpr std::size_t kPatternLimit = 6;
inline constexpr std::size_t kLineGraphHostLimit = 40;
inline constexpr std::size_t kRootSearchTargetLimit = 10;
inline constexpr std::size_t kRootSearchVertexLimit = 12;

// True iff some vertex subset of host induces a copy of pattern.
bool contains_induced(const Graph& host, const Graph& pattern);

// Forbidden-subgraph test against all nine patterns.
bool is_line_graph(const Graph& g);

// Vertex i is the i-th edge of g in EdgeList order; two vertices are
// adjacent iff their edges share an endpoint.
Graph line_graph_construct(const Graph& g);

// Exhaustive search for H on at most max_root_vertices vertices with
// line_graph_construct(H) isomorphic to g. Vertices of g are assigned to
// edges of H one at a time with adjacency checked incrementally; labels of
// H are introduced in first-use order so each root is tried once up to
// relabelling. Isolated vertices of H are not reported.
std::optional<Graph> root_graph_search(const Graph& g, std::size_t max_root_vertices);

// n = 4, 9 or prime.
bool cyclic_line_graph_classification(std::size_t n);

enum class ConnectionSetErrc { contains_identity, not_inverse_closed, bad_element };

class ConnectionSetError : public std::invalid_argument {
 public:
  ConnectionSetError(ConnectionSetErrc code, const std::string& message)
      : std::invalid_argument(message), code_(code) {}
  ConnectionSetErrc code() const noexcept { return code_; }

 private:
  ConnectionSetErrc code_;
};

// Identity-free, inverse-closed element subset of a group.
class ConnectionSet {
 public:
  ConnectionSet(const FiniteGroup& g, std::vector<Element> elements);
  const std::vector<Element>& elements() const noexcept { return elements_; }

 private:
  std::vector<Element> elements_;
};

// G minus its identity.
ConnectionSet all_but_identity(const FiniteGroup& g);

// Distinct g, h adjacent iff g h^-1 is in s.
Graph cayley_graph(const FiniteGroup& g, const ConnectionSet& s);

// True iff the strong power graph of g is a Cayley graph, i.e. iff g is
// noncyclic.
bool cayley_classification(const FiniteGroup& g);

// cyclic: n - phi(n) - 1; noncyclic: n - 1; n = 1: 0.
std::size_t kappa_formula(std::size_t n, bool cyclic);
// cyclic: n - 1; noncyclic: n; n = 1: 1.
std::size_t chi_formula(std::size_t n, bool cyclic);

}  // namespace strongpow
