#include "strongpow/structure.hpp"

#include <algorithm>
#include <deque>
#include <string>

#include "strongpow/errors.hpp"
#include "strongpow/numeric.hpp"

namespace strongpow {

namespace {

// Pattern vertices in BFS order so each one after the first in its
// component already has a mapped neighbour.
std::vector<Vertex> bfs_order(const Graph& g) {
  std::vector<Vertex> order;
  std::vector<bool> seen(g.order(), false);
  for (Vertex s = 0; s < g.order(); ++s) {
    if (seen[s]) continue;
    std::deque<Vertex> queue{s};
    seen[s] = true;
    while (!queue.empty()) {
      const Vertex v = queue.front();
      queue.pop_front();
      order.push_back(v);
      for (Vertex w = 0; w < g.order(); ++w) {
        if (g.adjacent(v, w) && !seen[w]) {
          seen[w] = true;
          queue.push_back(w);
        }
      }
    }
  }
  return order;
}

bool embed(const Graph& host, const Graph& pattern, const std::vector<Vertex>& order,
           std::vector<Vertex>& image, VertexSet& used, std::size_t depth) {
  if (depth == order.size()) return true;
  const Vertex p = order[depth];
  VertexSet candidates = ~used;
  for (std::size_t k = 0; k < depth; ++k) {
    const Vertex q = order[k];
    if (pattern.adjacent(p, q)) candidates &= host.neighbors(image[q]);
    else candidates -= host.neighbors(image[q]);
  }
  for (auto h = candidates.find_first(); h != VertexSet::npos; h = candidates.find_next(h)) {
    image[p] = h;
    used.set(h);
    if (embed(host, pattern, order, image, used, depth + 1)) return true;
    used.reset(h);
  }
  return false;
}

Graph pattern(std::size_t n, EdgeList edges) { return Graph::from_edges(n, edges); }

bool edges_meet(const Edge& a, const Edge& b) {
  return a.first == b.first || a.first == b.second || a.second == b.first ||
         a.second == b.second;
}

struct RootSearch {
  const Graph& g;
  std::vector<Vertex> order;
  std::size_t max_labels;
  std::vector<Edge> assigned;  // indexed by position in order

  bool run(std::size_t depth, std::size_t labels_used) {
    if (depth == order.size()) return true;
    const Vertex v = order[depth];
    // Endpoints reuse existing labels or open the next unused one(s).
    for (std::size_t a = 0; a <= labels_used && a < max_labels; ++a) {
      const std::size_t b_hi = (a == labels_used) ? labels_used + 1 : labels_used;
      for (std::size_t b = a + 1; b <= b_hi && b < max_labels; ++b) {
        const Edge e{a, b};
        if (!consistent(depth, v, e)) continue;
        assigned[depth] = e;
        if (run(depth + 1, std::max(labels_used, b + 1))) return true;
      }
    }
    return false;
  }

  bool consistent(std::size_t depth, Vertex v, const Edge& e) const {
    for (std::size_t k = 0; k < depth; ++k) {
      if (assigned[k] == e) return false;
      if (edges_meet(assigned[k], e) != g.adjacent(order[k], v)) return false;
    }
    return true;
  }
};

}  // namespace

const ForbiddenPatternSet& beineke_patterns() {
  static const ForbiddenPatternSet patterns = {
      pattern(4, {{0, 1}, {0, 2}, {0, 3}}),
      pattern(5, {{0, 2}, {0, 3}, {0, 4}, {1, 2}, {1, 3}, {1, 4}, {2, 3}}),
      pattern(5, {{0, 1}, {0, 2}, {0, 3}, {0, 4}, {1, 2}, {1, 3}, {1, 4}, {2, 3}, {2, 4}}),
      pattern(6, {{0, 2}, {0, 3}, {0, 5}, {1, 2}, {1, 3}, {1, 4}, {2, 3}}),
      pattern(6, {{0, 1}, {0, 2}, {0, 5}, {1, 2}, {1, 3}, {1, 4}, {2, 3}, {2, 4}, {3, 4}}),
      pattern(6, {{0, 1}, {0, 2}, {0, 3}, {0, 5}, {1, 2}, {1, 5}, {2, 3}, {2, 4}, {3, 4}}),
      pattern(6, {{0, 3}, {0, 4}, {0, 5}, {1, 2}, {1, 5}, {2, 3}, {2, 4}, {3, 4}}),
      pattern(6, {{0, 1}, {0, 2}, {0, 3}, {0, 4}, {0, 5}, {1, 2}, {1, 3}, {1, 4}, {1, 5}, {2, 5}, {3, 4}}),
      pattern(6, {{0, 1}, {0, 2}, {0, 3}, {0, 4}, {0, 5}, {1, 4}, {1, 5}, {2, 3}, {2, 5}, {3, 4}}),
  };
  return patterns;
}

bool contains_induced(const Graph& host, const Graph& pattern) {
  check_size_guard("contains_induced", pattern.order(), kPatternLimit);
  if (pattern.order() > host.order()) return false;
  const auto order = bfs_order(pattern);
  std::vector<Vertex> image(pattern.order());
  VertexSet used(host.order());
  return embed(host, pattern, order, image, used, 0);
}

bool is_line_graph(const Graph& g) {
  check_size_guard("is_line_graph", g.order(), kLineGraphHostLimit);
  return std::none_of(beineke_patterns().begin(), beineke_patterns().end(),
                      [&](const Graph& p) { return contains_induced(g, p); });
}

Graph line_graph_construct(const Graph& g) {
  const EdgeList edges = edge_list(g);
  Graph out(edges.size());
  for (std::size_t i = 0; i < edges.size(); ++i)
    for (std::size_t j = i + 1; j < edges.size(); ++j)
      if (edges_meet(edges[i], edges[j])) out.add_edge(i, j);
  return out;
}

std::optional<Graph> root_graph_search(const Graph& g, std::size_t max_root_vertices) {
  check_size_guard("root_graph_search", g.order(), kRootSearchTargetLimit);
  check_size_guard("root_graph_search", max_root_vertices, kRootSearchVertexLimit);
  RootSearch search{g, bfs_order(g), max_root_vertices, std::vector<Edge>(g.order())};
  if (!search.run(0, 0)) return std::nullopt;
  std::size_t labels = 0;
  for (const auto& e : search.assigned) labels = std::max(labels, e.second + 1);
  Graph root(labels);
  for (const auto& e : search.assigned) root.add_edge(e.first, e.second);
  return root;
}

bool cyclic_line_graph_classification(std::size_t n) {
  return n == 4 || n == 9 || is_prime(n);
}

ConnectionSet::ConnectionSet(const FiniteGroup& g, std::vector<Element> elements) {
  std::sort(elements.begin(), elements.end());
  elements.erase(std::unique(elements.begin(), elements.end()), elements.end());
  for (Element x : elements) {
    if (x >= g.order()) {
      throw ConnectionSetError(ConnectionSetErrc::bad_element,
                               "element " + std::to_string(x) + " is not in the group");
    }
    if (x == g.identity()) {
      throw ConnectionSetError(ConnectionSetErrc::contains_identity,
                               "connection set contains the identity");
    }
  }
  for (Element x : elements) {
    if (!std::binary_search(elements.begin(), elements.end(), g.inverse(x))) {
      throw ConnectionSetError(ConnectionSetErrc::not_inverse_closed,
                               "inverse of " + std::to_string(x) + " is missing");
    }
  }
  elements_ = std::move(elements);
}

ConnectionSet all_but_identity(const FiniteGroup& g) {
  std::vector<Element> s;
  for (Element x = 0; x < g.order(); ++x)
    if (x != g.identity()) s.push_back(x);
  return ConnectionSet(g, std::move(s));
}

Graph cayley_graph(const FiniteGroup& g, const ConnectionSet& s) {
  const std::size_t n = g.order();
  VertexSet in_s(n);
  for (Element x : s.elements()) {
    if (x >= n) throw ConnectionSetError(ConnectionSetErrc::bad_element, "connection set is for another group");
    in_s.set(x);
  }
  Graph out(n);
  for (Element a = 0; a < n; ++a) {
    for (Element b = a + 1; b < n; ++b) {
      if (in_s.test(g.op(a, g.inverse(b)))) out.add_edge(a, b);
    }
  }
  return out;
}

bool cayley_classification(const FiniteGroup& g) { return !is_cyclic(g); }

std::size_t kappa_formula(std::size_t n, bool cyclic) {
  if (n == 0) throw std::invalid_argument("group order must be >= 1");
  if (n == 1) return 0;
  return cyclic ? n - euler_phi(n) - 1 : n - 1;
}

std::size_t chi_formula(std::size_t n, bool cyclic) {
  if (n == 0) throw std::invalid_argument("group order must be >= 1");
  if (n == 1) return 1;
  return cyclic ? n - 1 : n;
}

}  // namespace strongpow
