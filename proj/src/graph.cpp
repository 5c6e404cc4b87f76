#include "strongpow/graph.hpp"

#include <algorithm>
#include <bit>
#include <numeric>
#include <ostream>
#include <queue>
#include <stdexcept>

#include "json.hpp"

#include "strongpow/errors.hpp"

namespace strongpow {

Graph Graph::from_edges(std::size_t n, const EdgeList& edges) {
  Graph g(n);
  for (const auto& [u, v] : edges) g.add_edge(u, v);
  return g;
}

std::size_t Graph::edge_count() const {
  std::size_t twice = 0;
  for (const auto& row : adj_) twice += row.count();
  return twice / 2;
}

void Graph::add_edge(Vertex u, Vertex v) {
  if (u >= order() || v >= order()) {
    throw std::out_of_range("edge (" + std::to_string(u) + ", " +
                            std::to_string(v) + ") outside [0, " +
                            std::to_string(order()) + ")");
  }
  if (u == v) throw std::invalid_argument("self-loop at " + std::to_string(u));
  adj_[u].set(v);
  adj_[v].set(u);
}

EdgeList edge_list(const Graph& g) {
  EdgeList out;
  for (Vertex u = 0; u < g.order(); ++u) {
    const VertexSet& row = g.neighbors(u);
    for (auto v = row.find_next(u); v != VertexSet::npos; v = row.find_next(v)) {
      out.emplace_back(u, v);
    }
  }
  return out;
}

VertexSet power_closure(const FiniteGroup& g, Element x) {
  const std::size_t n = g.order();
  VertexSet closure(n);
  // Powers of x cycle with period ord(x), so m beyond ord(x) adds nothing.
  const std::uint64_t last = std::min<std::uint64_t>(n - 1, element_order(g, x));
  Element y = x;
  for (std::uint64_t m = 1; m <= last; ++m) {
    closure.set(y);
    y = g.op(y, x);
  }
  return closure;
}

Graph strong_power_graph(const FiniteGroup& g) {
  const std::size_t n = g.order();
  std::vector<VertexSet> closures;
  closures.reserve(n);
  for (Element x = 0; x < n; ++x) closures.push_back(power_closure(g, x));
  Graph out(n);
  for (Vertex a = 0; a < n; ++a) {
    for (Vertex b = a + 1; b < n; ++b) {
      if (closures[a].intersects(closures[b])) out.add_edge(a, b);
    }
  }
  return out;
}

Graph complete_graph(std::size_t n) {
  Graph g(n);
  for (Vertex u = 0; u < n; ++u)
    for (Vertex v = u + 1; v < n; ++v) g.add_edge(u, v);
  return g;
}

Graph empty_graph(std::size_t n) { return Graph(n); }

Graph star_graph(std::size_t n) {
  Graph g(n + 1);
  for (Vertex v = 1; v <= n; ++v) g.add_edge(0, v);
  return g;
}

Graph path_graph(std::size_t n) {
  Graph g(n);
  for (Vertex v = 1; v < n; ++v) g.add_edge(v - 1, v);
  return g;
}

Graph cycle_graph(std::size_t n) {
  if (n < 3) throw std::invalid_argument("cycle_graph needs n >= 3");
  Graph g = path_graph(n);
  g.add_edge(n - 1, 0);
  return g;
}

Graph disjoint_union(const Graph& a, const Graph& b) {
  const std::size_t shift = a.order();
  Graph g(shift + b.order());
  for (const auto& [u, v] : edge_list(a)) g.add_edge(u, v);
  for (const auto& [u, v] : edge_list(b)) g.add_edge(u + shift, v + shift);
  return g;
}

std::vector<std::size_t> degree_sequence(const Graph& g) {
  std::vector<std::size_t> out(g.order());
  for (Vertex v = 0; v < g.order(); ++v) out[v] = g.degree(v);
  return out;
}

bool is_regular(const Graph& g) {
  const auto degrees = degree_sequence(g);
  return std::adjacent_find(degrees.begin(), degrees.end(),
                            std::not_equal_to<>()) == degrees.end();
}

bool is_complete(const Graph& g) {
  for (Vertex v = 0; v < g.order(); ++v) {
    if (g.degree(v) + 1 != g.order()) return false;
  }
  return true;
}

std::vector<std::vector<Vertex>> connected_components(const Graph& g) {
  const std::size_t n = g.order();
  std::vector<bool> seen(n, false);
  std::vector<std::vector<Vertex>> components;
  for (Vertex start = 0; start < n; ++start) {
    if (seen[start]) continue;
    std::vector<Vertex> component;
    std::queue<Vertex> frontier;
    frontier.push(start);
    seen[start] = true;
    while (!frontier.empty()) {
      const Vertex u = frontier.front();
      frontier.pop();
      component.push_back(u);
      const VertexSet& row = g.neighbors(u);
      for (auto v = row.find_first(); v != VertexSet::npos; v = row.find_next(v)) {
        if (!seen[v]) {
          seen[v] = true;
          frontier.push(v);
        }
      }
    }
    std::sort(component.begin(), component.end());
    components.push_back(std::move(component));
  }
  return components;
}

bool is_connected(const Graph& g) { return connected_components(g).size() <= 1; }

Graph induced_subgraph(const Graph& g, const std::vector<Vertex>& subset) {
  std::vector<Vertex> sorted = subset;
  std::sort(sorted.begin(), sorted.end());
  if (std::adjacent_find(sorted.begin(), sorted.end()) != sorted.end()) {
    throw std::invalid_argument("induced_subgraph: repeated vertex");
  }
  if (!sorted.empty() && sorted.back() >= g.order()) {
    throw std::out_of_range("induced_subgraph: vertex " +
                            std::to_string(sorted.back()) + " not in [0, " +
                            std::to_string(g.order()) + ")");
  }
  Graph out(sorted.size());
  for (std::size_t i = 0; i < sorted.size(); ++i)
    for (std::size_t j = i + 1; j < sorted.size(); ++j)
      if (g.adjacent(sorted[i], sorted[j])) out.add_edge(i, j);
  return out;
}

namespace {

using Mask = std::uint32_t;

std::vector<Mask> adjacency_masks(const Graph& g) {
  std::vector<Mask> masks(g.order(), 0);
  for (const auto& [u, v] : edge_list(g)) {
    masks[u] |= Mask{1} << v;
    masks[v] |= Mask{1} << u;
  }
  return masks;
}

bool mask_connected(const std::vector<Mask>& adj, Mask alive) {
  if (alive == 0) return true;
  Mask reached = alive & (~alive + 1);
  Mask frontier = reached;
  while (frontier) {
    Mask next = 0;
    for (Mask f = frontier; f; f &= f - 1) next |= adj[std::countr_zero(f)];
    next &= alive & ~reached;
    reached |= next;
    frontier = next;
  }
  return reached == alive;
}

class ColoringSearch {
 public:
  ColoringSearch(const Graph& g, std::size_t colours)
      : adj_(adjacency_masks(g)), colours_(colours), colour_of_(g.order(), -1) {
    order_.resize(g.order());
    std::iota(order_.begin(), order_.end(), Vertex{0});
    std::stable_sort(order_.begin(), order_.end(), [&](Vertex a, Vertex b) {
      return g.degree(a) > g.degree(b);
    });
  }

  bool run() { return assign(0, 0); }

 private:
  bool assign(std::size_t depth, std::size_t used) {
    if (depth == order_.size()) return true;
    const Vertex v = order_[depth];
    // Colours beyond used + 1 are interchangeable with colour `used`.
    const std::size_t limit = std::min(colours_, used + 1);
    for (std::size_t c = 0; c < limit; ++c) {
      bool clash = false;
      for (Mask m = adj_[v]; m && !clash; m &= m - 1) {
        clash = colour_of_[std::countr_zero(m)] == static_cast<int>(c);
      }
      if (clash) continue;
      colour_of_[v] = static_cast<int>(c);
      if (assign(depth + 1, std::max(used, c + 1))) return true;
      colour_of_[v] = -1;
    }
    return false;
  }

  std::vector<Mask> adj_;
  std::size_t colours_;
  std::vector<int> colour_of_;
  std::vector<Vertex> order_;
};

class IsomorphismSearch {
 public:
  IsomorphismSearch(const Graph& a, const Graph& b)
      : a_(a), b_(b), image_(a.order()), used_(b.order(), false) {
    // Visit a's vertices so each one after the first in its component has an
    // already-mapped neighbour.
    for (const auto& component : connected_components(a)) {
      std::vector<bool> placed(a.order(), false);
      std::queue<Vertex> q;
      q.push(component.front());
      placed[component.front()] = true;
      while (!q.empty()) {
        const Vertex u = q.front();
        q.pop();
        order_.push_back(u);
        for (Vertex v : component) {
          if (!placed[v] && a.adjacent(u, v)) {
            placed[v] = true;
            q.push(v);
          }
        }
      }
    }
  }

  bool run() { return extend(0); }

 private:
  bool extend(std::size_t depth) {
    if (depth == order_.size()) return true;
    const Vertex u = order_[depth];
    for (Vertex w = 0; w < b_.order(); ++w) {
      if (used_[w] || a_.degree(u) != b_.degree(w)) continue;
      bool consistent = true;
      for (std::size_t k = 0; k < depth && consistent; ++k) {
        const Vertex p = order_[k];
        consistent = a_.adjacent(u, p) == b_.adjacent(w, image_[p]);
      }
      if (!consistent) continue;
      image_[u] = w;
      used_[w] = true;
      if (extend(depth + 1)) return true;
      used_[w] = false;
    }
    return false;
  }

  const Graph& a_;
  const Graph& b_;
  std::vector<Vertex> order_;
  std::vector<Vertex> image_;
  std::vector<bool> used_;
};

}  // namespace

std::size_t vertex_connectivity_bruteforce(const Graph& g) {
  const std::size_t n = g.order();
  check_size_guard("vertex_connectivity_bruteforce", n, kConnectivityLimit);
  if (n <= 1) return 0;
  const auto adj = adjacency_masks(g);
  const Mask all = (Mask{1} << n) - 1;
  for (std::size_t k = 0; k + 1 < n; ++k) {
    if (k == 0) {
      if (!mask_connected(adj, all)) return 0;
      continue;
    }
    // Gosper's hack over k-subsets of [0, n).
    for (Mask s = (Mask{1} << k) - 1; s <= all; ) {
      if (!mask_connected(adj, all & ~s)) return k;
      const Mask c = s & (~s + 1);
      const Mask r = s + c;
      s = (((r ^ s) >> 2) / c) | r;
    }
  }
  return n - 1;
}

std::size_t chromatic_number_search(const Graph& g) {
  check_size_guard("chromatic_number_search", g.order(), kChromaticLimit);
  if (g.order() == 0) return 0;
  for (std::size_t k = 1;; ++k) {
    if (ColoringSearch(g, k).run()) return k;
  }
}

std::size_t chromatic_number_exact(const Graph& g) {
  const std::size_t n = g.order();
  if (n == 0) return 0;
  if (is_complete(g)) return n;
  // Clique on all vertices but v, and v misses at least one of them: v can
  // reuse that vertex's colour.
  for (Vertex v = 0; v < n; ++v) {
    bool rest_complete = true;
    for (Vertex u = 0; u < n && rest_complete; ++u) {
      if (u == v) continue;
      rest_complete = g.degree(u) - (g.adjacent(u, v) ? 1 : 0) == n - 2;
    }
    if (rest_complete) return n - 1;
  }
  return chromatic_number_search(g);
}

bool graph_isomorphic(const Graph& a, const Graph& b) {
  check_size_guard("graph_isomorphic", std::max(a.order(), b.order()),
                   kIsomorphismLimit);
  if (a.order() != b.order() || a.edge_count() != b.edge_count()) return false;
  auto da = degree_sequence(a), db = degree_sequence(b);
  std::sort(da.begin(), da.end());
  std::sort(db.begin(), db.end());
  if (da != db) return false;
  return IsomorphismSearch(a, b).run();
}

std::string to_json(const Graph& g) {
  nlohmann::ordered_json doc;
  doc["n"] = g.order();
  auto edges = nlohmann::ordered_json::array();
  for (const auto& [u, v] : edge_list(g)) edges.push_back({u, v});
  doc["edges"] = std::move(edges);
  return doc.dump();
}

Graph graph_from_json(const std::string& text) {
  const auto doc = nlohmann::json::parse(text);
  if (!doc.is_object() || !doc.contains("n") || !doc.contains("edges")) {
    throw std::invalid_argument("graph JSON needs keys \"n\" and \"edges\"");
  }
  const auto n = doc.at("n").get<std::size_t>();
  Graph g(n);
  for (const auto& e : doc.at("edges")) {
    if (!e.is_array() || e.size() != 2) {
      throw std::invalid_argument("graph JSON edge must be a pair");
    }
    g.add_edge(e[0].get<std::size_t>(), e[1].get<std::size_t>());
  }
  return g;
}

void write_dot(std::ostream& out, const Graph& g) {
  out << "graph strong_power_graph {\n";
  for (Vertex v = 0; v < g.order(); ++v) out << "  " << v << ";\n";
  for (const auto& [u, v] : edge_list(g)) out << "  " << u << " -- " << v << ";\n";
  out << "}\n";
}

}  // namespace strongpow
