#pragma once

#include <cstddef>
#include <cstdint>

#include "strongpow/graph.hpp"
#include "strongpow/numeric.hpp"
#include "strongpow/spectral.hpp"

namespace strongpow {

inline constexpr std::size_t kRyserLimit = 24;
inline constexpr std::size_t kExpansionLimit = 10;

// Ryser inclusion-exclusion, visiting column subsets in Gray-code order so
// each step adds or removes one column from the running row sums.
BigInt permanent_ryser(const IntMatrix& m);

// Expansion along the first row without sign alternation.
BigInt permanent_expansion(const IntMatrix& m);

// A graph on unattached + attached + 1 vertices: the first
// unattached + attached vertices form a clique and the last vertex is
// adjacent to exactly the `attached` clique vertices with the highest
// indices. The strong power graph of a cyclic group of order N has this
// shape with unattached = phi(N) generators and attached = N - phi(N) - 1.
struct CliqueParams {
  std::int64_t unattached = 0;
  std::int64_t attached = 0;

  std::int64_t clique_size() const noexcept { return unattached + attached; }
  std::int64_t d() const noexcept { return unattached + attached - 1; }
};

CliqueParams clique_params_for_cyclic(std::size_t group_order);
Graph clique_plus_vertex_graph(const CliqueParams& p);

// n * sum_{r=1}^{m+n} (-1)^(r-1) (m+n-r)! [C(m+n-1, r-1) + (n-1) C(m+n-2, r-1)]
// with m = unattached, n = attached.
BigInt clique_plus_vertex_adjacency_permanent(const CliqueParams& p);

// The same sum written directly in the group order N (cyclic groups).
BigInt adjacency_permanent_formula(std::size_t group_order);

// Laplacian permanent of the clique-plus-vertex graph in the derived form
//   sum_r (-1)^(m+n-r) (m+n-r)! F_r(d)
//     + (d-m+1) sum_{i+j=m+n} C(m,i) C(n,j) (d+2)^j (d+1)^i
// where F_r(d) = sum_{i+j=r-1} C(m,i) (d+2)^j (d+1)^i
//   [n C(n-1,j) + n(n-1) C(n-2,j) - (d-m+1)(m+n-r+1) C(n,j)].
BigInt clique_plus_vertex_laplacian_permanent(const CliqueParams& p);

// The headline form: sum_r (m+n-r)! F_r(d) with the sign
// (-1)^(m+n-r+1) attached to the last bracket term and no trailing sum.
BigInt clique_plus_vertex_laplacian_permanent_headline(const CliqueParams& p);

// Laplacian permanent formula for cyclic groups, written in N and phi(N).
BigInt laplacian_permanent_formula(std::size_t group_order);

// (-1)^n n! sum_{k=0}^{n} (-1)^k n^k / k!, evaluated over the common
// denominator.
BigInt complete_graph_laplacian_permanent(std::size_t n);

}  // namespace strongpow
