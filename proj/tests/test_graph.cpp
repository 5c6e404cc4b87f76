#include "doctest.h"

#include <algorithm>
#include <sstream>

#include "generators.hpp"
#include "oracles.hpp"
#include "strongpow/errors.hpp"
#include "strongpow/graph.hpp"
#include "strongpow/verify.hpp"

using namespace strongpow;

namespace {

std::vector<Vertex> members(const VertexSet& s) {
  std::vector<Vertex> out;
  for (auto i = s.find_first(); i != VertexSet::npos; i = s.find_next(i)) out.push_back(i);
  return out;
}

std::vector<std::size_t> sorted(std::vector<std::size_t> v) {
  std::sort(v.begin(), v.end());
  return v;
}

}  // namespace

TEST_CASE("power closure") {
  CHECK(members(power_closure(make_cyclic(6), 2)) == std::vector<Vertex>{0, 2, 4});
  CHECK(members(power_closure(make_cyclic(4), 1)) == std::vector<Vertex>{1, 2, 3});
  CHECK(members(power_closure(make_klein(), 0)) == std::vector<Vertex>{0});
  CHECK(members(power_closure(make_cyclic(6), 0)) == std::vector<Vertex>{0});
  // With n = 1 there is no admissible exponent.
  CHECK(power_closure(make_cyclic(1), 0).none());
}

TEST_CASE("strong power graph examples") {
  const auto z4 = strong_power_graph(make_cyclic(4));
  CHECK(edge_list(z4) == EdgeList{{0, 2}, {1, 2}, {1, 3}, {2, 3}});
  CHECK(edge_list(z4) == edge_list(oracle::strong_power_graph(make_cyclic(4))));

  CHECK(strong_power_graph(make_klein()) == complete_graph(4));

  const auto z5 = strong_power_graph(make_cyclic(5));
  CHECK(z5.degree(0) == 0);
  CHECK(induced_subgraph(z5, {1, 2, 3, 4}) == complete_graph(4));

  CHECK(sorted(degree_sequence(strong_power_graph(make_cyclic(6)))) ==
        std::vector<std::size_t>{3, 4, 4, 5, 5, 5});
  CHECK_FALSE(is_regular(strong_power_graph(make_cyclic(12))));
  CHECK(connected_components(strong_power_graph(make_cyclic(7))).size() == 2);

  CHECK(strong_power_graph(make_cyclic(1)).order() == 1);
  CHECK(strong_power_graph(make_cyclic(2)).edge_count() == 0);
}

TEST_CASE("basic constructions") {
  CHECK(complete_graph(3).edge_count() == 3);
  CHECK(degree_sequence(star_graph(4)) == std::vector<std::size_t>{4, 1, 1, 1, 1});
  const auto two = disjoint_union(complete_graph(2), complete_graph(2));
  CHECK(two.order() == 4);
  CHECK(two.edge_count() == 2);
  CHECK(connected_components(two).size() == 2);
  CHECK(complete_graph(0).order() == 0);
  CHECK(is_regular(cycle_graph(5)));
  CHECK(path_graph(4).edge_count() == 3);

  Graph g(3);
  CHECK_THROWS_AS(g.add_edge(0, 3), std::out_of_range);
  CHECK_THROWS_AS(g.add_edge(1, 1), std::invalid_argument);
}

TEST_CASE("induced subgraph") {
  CHECK(induced_subgraph(complete_graph(5), {0, 2, 4}) == complete_graph(3));
  const auto z6 = strong_power_graph(make_cyclic(6));
  CHECK(edge_list(induced_subgraph(z6, {0, 1, 5})) == EdgeList{{1, 2}});
  CHECK(induced_subgraph(z6, {}).order() == 0);
  CHECK_THROWS_AS(induced_subgraph(z6, {0, 6}), std::out_of_range);
}

TEST_CASE("vertex connectivity oracle") {
  CHECK(vertex_connectivity_bruteforce(complete_graph(4)) == 3);
  CHECK(vertex_connectivity_bruteforce(strong_power_graph(make_cyclic(6))) == 3);
  CHECK(vertex_connectivity_bruteforce(strong_power_graph(make_cyclic(5))) == 0);
  CHECK(vertex_connectivity_bruteforce(cycle_graph(6)) == 2);
  CHECK(vertex_connectivity_bruteforce(path_graph(5)) == 1);
  CHECK(vertex_connectivity_bruteforce(Graph(1)) == 0);
  CHECK_THROWS_AS(vertex_connectivity_bruteforce(complete_graph(15)), SizeGuardError);
}

TEST_CASE("chromatic number") {
  CHECK(chromatic_number_exact(strong_power_graph(make_cyclic(6))) == 5);
  CHECK(chromatic_number_exact(complete_graph(4)) == 4);
  CHECK(chromatic_number_exact(Graph(5)) == 1);
  CHECK(chromatic_number_exact(cycle_graph(5)) == 3);
  CHECK(chromatic_number_exact(cycle_graph(6)) == 2);
  // Shape shortcut works past the search guard.
  CHECK(chromatic_number_exact(strong_power_graph(make_cyclic(40))) == 39);
  CHECK(chromatic_number_exact(complete_graph(30)) == 30);
  CHECK_THROWS_AS(chromatic_number_search(cycle_graph(15)), SizeGuardError);
}

TEST_CASE("isomorphism") {
  CHECK(graph_isomorphic(complete_graph(3), cycle_graph(3)));
  CHECK_FALSE(graph_isomorphic(star_graph(3), path_graph(4)));
  CHECK(graph_isomorphic(strong_power_graph(make_klein()), complete_graph(4)));
  // Same degree sequence, different graphs: C_6 vs two triangles.
  CHECK_FALSE(graph_isomorphic(cycle_graph(6),
                               disjoint_union(complete_graph(3), complete_graph(3))));
  CHECK_THROWS_AS(graph_isomorphic(Graph(13), Graph(13)), SizeGuardError);
}

TEST_CASE("serialization") {
  const auto g = strong_power_graph(make_cyclic(6));
  const auto text = to_json(g);
  CHECK(text.rfind(R"({"n":6,"edges":[[0,2],[0,3],[0,4],[1,2])", 0) == 0);
  CHECK(graph_from_json(text) == g);
  CHECK(to_json(graph_from_json(text)) == text);

  std::ostringstream dot;
  write_dot(dot, complete_graph(2));
  CHECK(dot.str() == "graph strong_power_graph {\n  0;\n  1;\n  0 -- 1;\n}\n");

  CHECK_THROWS(graph_from_json(R"({"n":2})"));
  CHECK_THROWS(graph_from_json(R"({"n":2,"edges":[[0,2]]})"));
}

TEST_CASE("property: bitset construction equals the definition on the corpus") {
  for (const auto& [spec, g] : corpus_groups()) {
    CAPTURE(spec);
    CHECK(edge_list(strong_power_graph(g)) == edge_list(oracle::strong_power_graph(g)));
  }
}

TEST_CASE("property: noncyclic corpus groups give complete graphs") {
  for (const auto& [spec, g] : corpus_groups()) {
    CAPTURE(spec);
    if (!is_cyclic(g)) CHECK(is_complete(strong_power_graph(g)));
  }
}

TEST_CASE("property: degrees and edge count for cyclic groups") {
  for (std::size_t n = 2; n <= 64; ++n) {
    CAPTURE(n);
    const auto g = make_cyclic(n);
    const auto graph = strong_power_graph(g);
    const auto phi = euler_phi(n);
    CHECK(graph.degree(0) == n - phi - 1);
    for (Element x = 1; x < n; ++x) {
      const bool generator = element_order(g, x) == n;
      CHECK(graph.degree(x) == (generator ? n - 2 : n - 1));
    }
    CHECK(2 * graph.edge_count() == n * n - n - 2 * phi);
    // Connected iff n is composite.
    CHECK(is_connected(graph) == !is_prime(n));
  }
}

TEST_CASE("property: graph oracles on random graphs") {
  auto r = gen::rng(1);
  for (int trial = 0; trial < 150; ++trial) {
    const auto g = gen::random_graph(r, 7);
    CAPTURE(to_json(g));
    const auto h = gen::shuffle(r, g);
    CHECK(graph_isomorphic(g, h));
    CHECK(vertex_connectivity_bruteforce(g) == vertex_connectivity_bruteforce(h));
    CHECK(chromatic_number_search(g) == oracle::chromatic_number(g));
    CHECK(chromatic_number_exact(g) == chromatic_number_search(g));
    CHECK(graph_from_json(to_json(g)) == g);

    // Adjacency symmetric, no loops.
    for (Vertex u = 0; u < g.order(); ++u) {
      CHECK_FALSE(g.adjacent(u, u));
      for (Vertex v = 0; v < g.order(); ++v) CHECK(g.adjacent(u, v) == g.adjacent(v, u));
    }
    // Connectivity is at most the minimum degree.
    if (g.order() >= 2) {
      const auto d = degree_sequence(g);
      CHECK(vertex_connectivity_bruteforce(g) <= *std::min_element(d.begin(), d.end()));
    }
  }
}

TEST_CASE("property: adding an edge never preserves isomorphism") {
  auto r = gen::rng(2);
  for (int trial = 0; trial < 100; ++trial) {
    const auto g = gen::random_graph(r, 9);
    if (g.order() < 2 || is_complete(g)) continue;
    Graph h = g;
    for (Vertex u = 0; u < g.order(); ++u) {
      bool added = false;
      for (Vertex v = u + 1; v < g.order() && !added; ++v) {
        if (!g.adjacent(u, v)) {
          h.add_edge(u, v);
          added = true;
        }
      }
      if (added) break;
    }
    CHECK_FALSE(graph_isomorphic(g, gen::shuffle(r, h)));
  }
}
