#include "doctest.h"

#include "generators.hpp"
#include "oracles.hpp"
#include "strongpow/errors.hpp"
#include "strongpow/permanent.hpp"
#include "strongpow/verify.hpp"

using namespace strongpow;

TEST_CASE("Ryser and expansion on small matrices") {
  CHECK(permanent_ryser(identity_matrix(3)) == 1);
  CHECK(permanent_ryser(constant_matrix(4, 1)) == 24);
  const auto z4 = strong_power_graph(make_cyclic(4));
  CHECK(permanent_ryser(adjacency(z4)) == 1);
  CHECK(permanent_expansion(laplacian(z4)) == 22);
  CHECK(permanent_ryser(laplacian(z4)) == 22);
  CHECK(permanent_expansion(laplacian(complete_graph(2))) == 2);
  CHECK(permanent_expansion(IntMatrix(2)) == 0);
  CHECK(permanent_ryser(IntMatrix(0)) == 1);

  CHECK_THROWS_AS(permanent_ryser(IntMatrix(kRyserLimit + 1)), SizeGuardError);
  CHECK_THROWS_AS(permanent_expansion(IntMatrix(kExpansionLimit + 1)), SizeGuardError);
}

TEST_CASE("Ryser falls back to big integers") {
  // Entries too large for the int64 fast path.
  IntMatrix m(3);
  const BigInt big = BigInt(1) << 80;
  for (std::size_t i = 0; i < 3; ++i)
    for (std::size_t j = 0; j < 3; ++j) m(i, j) = big + i + j;
  CHECK(permanent_ryser(m) == oracle::permanent(m));

  // Products overflow 128 bits even though entries fit in int64.
  const auto wide = constant_matrix(20, BigInt(1) << 20);
  CHECK(permanent_ryser(wide) == factorial(20) * power(BigInt(1) << 20, 20));
}

TEST_CASE("clique plus vertex graphs") {
  const auto g = clique_plus_vertex_graph({2, 1});
  CHECK(graph_isomorphic(g, strong_power_graph(make_cyclic(4))));
  for (std::size_t n = 2; n <= 12; ++n) {
    CAPTURE(n);
    CHECK(graph_isomorphic(clique_plus_vertex_graph(clique_params_for_cyclic(n)),
                           strong_power_graph(make_cyclic(n))));
  }
  CHECK_THROWS(clique_plus_vertex_graph({-1, 2}));
}

TEST_CASE("adjacency permanent formulas") {
  CHECK(clique_plus_vertex_adjacency_permanent({2, 1}) == 1);
  CHECK(clique_plus_vertex_adjacency_permanent({6, 0}) == 0);
  CHECK(clique_plus_vertex_adjacency_permanent({0, 2}) == 2);
  CHECK(adjacency_permanent_formula(4) == 1);
  for (std::size_t p : {2, 3, 5, 7, 11, 13}) CHECK(adjacency_permanent_formula(p) == 0);
  CHECK(adjacency_permanent_formula(6) ==
        permanent_ryser(adjacency(strong_power_graph(make_cyclic(6)))));
  CHECK_THROWS(clique_plus_vertex_adjacency_permanent({0, 0}));
  CHECK_THROWS(adjacency_permanent_formula(1));
}

TEST_CASE("Laplacian permanent formulas") {
  CHECK(clique_plus_vertex_laplacian_permanent({2, 1}) == 22);
  CHECK(clique_plus_vertex_laplacian_permanent({1, 0}) == 0);
  CHECK(clique_plus_vertex_laplacian_permanent({0, 0}) == 0);
  CHECK(laplacian_permanent_formula(2) == 0);
  CHECK(laplacian_permanent_formula(4) == 22);
  CHECK(laplacian_permanent_formula(6) ==
        permanent_ryser(laplacian(strong_power_graph(make_cyclic(6)))));
  // The headline arrangement of signs does not reproduce the oracle.
  CHECK(clique_plus_vertex_laplacian_permanent_headline({2, 1}) == -2);

  CHECK(complete_graph_laplacian_permanent(1) == 0);
  CHECK(complete_graph_laplacian_permanent(2) == 2);
  CHECK(complete_graph_laplacian_permanent(4) == 120);
  CHECK_THROWS(complete_graph_laplacian_permanent(0));
}

TEST_CASE("binomial convention") {
  CHECK(binomial(3, 5) == 0);
  CHECK(binomial(-1, 0) == 0);
  CHECK(binomial(4, -1) == 0);
  CHECK(binomial(0, 0) == 1);
  CHECK(binomial(10, 3) == 120);
}

TEST_CASE("property: both oracles agree with the permutation sum") {
  auto r = gen::rng(5);
  for (int trial = 0; trial < 80; ++trial) {
    const std::size_t n = trial % 9;
    const auto m = gen::random_matrix(r, n, -4, 4);
    CAPTURE(n);
    const auto ryser = permanent_ryser(m);
    CHECK(ryser == permanent_expansion(m));
    if (n <= 7) CHECK(ryser == oracle::permanent(m));
  }
}

TEST_CASE("property: permanent invariants") {
  auto r = gen::rng(6);
  for (int trial = 0; trial < 40; ++trial) {
    const std::size_t n = 1 + trial % 8;
    auto m = gen::random_matrix(r, n, -3, 3);
    const auto base = permanent_ryser(m);
    // Transpose and row swaps leave the permanent unchanged.
    IntMatrix t(n), swapped = m;
    for (std::size_t i = 0; i < n; ++i)
      for (std::size_t j = 0; j < n; ++j) t(i, j) = m(j, i);
    CHECK(permanent_ryser(t) == base);
    if (n >= 2) {
      for (std::size_t j = 0; j < n; ++j) std::swap(swapped(0, j), swapped(1, j));
      CHECK(permanent_ryser(swapped) == base);
    }
    // A zero row annihilates it.
    for (std::size_t j = 0; j < n; ++j) m(n - 1, j) = 0;
    CHECK(permanent_ryser(m) == 0);
  }
}

TEST_CASE("property: clique-plus-vertex formulas against Ryser") {
  for (std::int64_t total = 1; total <= 10; ++total) {
    for (std::int64_t m = 0; m <= total - 1; ++m) {
      const CliqueParams p{m, total - 1 - m};
      CAPTURE(p.unattached);
      CAPTURE(p.attached);
      const auto g = clique_plus_vertex_graph(p);
      REQUIRE(g.order() == static_cast<std::size_t>(total));
      const auto per_l = permanent_ryser(laplacian(g));
      CHECK(clique_plus_vertex_laplacian_permanent(p) == per_l);
      if (p.clique_size() >= 1) {
        CHECK(clique_plus_vertex_adjacency_permanent(p) == permanent_ryser(adjacency(g)));
      }
    }
  }
}

TEST_CASE("property: prime orders give a zero row") {
  for (std::size_t p : {2, 3, 5, 7, 11, 13}) {
    const auto g = strong_power_graph(make_cyclic(p));
    CHECK(permanent_ryser(adjacency(g)) == 0);
    CHECK(permanent_ryser(laplacian(g)) == 0);
    CHECK(laplacian_permanent_formula(p) == 0);
  }
}
