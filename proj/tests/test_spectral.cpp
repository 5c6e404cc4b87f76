#include "doctest.h"

#include <cmath>
#include <sstream>

#include "generators.hpp"
#include "oracles.hpp"
#include "strongpow/errors.hpp"
#include "strongpow/graph.hpp"
#include "strongpow/spectral.hpp"
#include "strongpow/verify.hpp"

using namespace strongpow;

namespace {

std::vector<BigInt> coeffs(std::initializer_list<long> c) {
  std::vector<BigInt> out;
  for (long x : c) out.emplace_back(x);
  return out;
}

IntMatrix shifted(const IntMatrix& m, long t) {
  IntMatrix out(m.order());
  for (std::size_t i = 0; i < m.order(); ++i)
    for (std::size_t j = 0; j < m.order(); ++j) out(i, j) = (i == j ? BigInt(t) : BigInt(0)) - m(i, j);
  return out;
}

// p(t) = det(tI - m) at n + 1 points pins down a monic degree-n polynomial.
void check_char_poly_by_interpolation(const IntMatrix& m) {
  const CharPoly p = char_poly_exact(m);
  REQUIRE(p.degree() == m.order());
  for (long t = 0; t <= static_cast<long>(m.order()); ++t) {
    CHECK(Rational(p.evaluate(t)) == oracle::determinant(shifted(m, t)));
  }
}

ExactSpectrum spec(std::initializer_list<SpectrumEntry> e) { return ExactSpectrum(e); }

}  // namespace

TEST_CASE("Laplacian and adjacency assembly") {
  const auto l2 = laplacian(complete_graph(2));
  CHECK(l2(0, 0) == 1);
  CHECK(l2(0, 1) == -1);
  CHECK(l2(1, 0) == -1);
  CHECK(l2(1, 1) == 1);

  const auto l4 = laplacian(strong_power_graph(make_cyclic(4)));
  for (std::size_t i = 0; i < 4; ++i) CHECK(l4(i, i) == std::vector<int>{1, 2, 3, 2}[i]);

  const auto a = adjacency(Graph(3));
  CHECK(a == IntMatrix(3));
  for (std::size_t i = 0; i < 3; ++i)
    for (std::size_t j = 0; j < 3; ++j) CHECK(a(i, j) == 0);
}

TEST_CASE("characteristic polynomial") {
  CHECK(char_poly_exact(laplacian(complete_graph(2))).coefficients() == coeffs({0, -2, 1}));
  const auto z4 = char_poly_exact(laplacian(strong_power_graph(make_cyclic(4))));
  CHECK(z4.coefficients() == coeffs({0, -12, 19, -8, 1}));
  CHECK(to_string(z4) == "x^4 - 8x^3 + 19x^2 - 12x");
  CHECK(char_poly_exact(IntMatrix(3)).coefficients() == coeffs({0, 0, 0, 1}));
  CHECK(char_poly_exact(IntMatrix(0)).degree() == 0);

  CHECK(closed_form_char_poly(4).coefficients() == coeffs({0, -12, 19, -8, 1}));
  CHECK(closed_form_char_poly(2).coefficients() == coeffs({0, 0, 1}));
  CHECK(closed_form_char_poly(3).coefficients() == coeffs({0, 0, -2, 1}));
  CHECK_THROWS(closed_form_char_poly(1));

  CHECK_THROWS_AS(char_poly_exact(IntMatrix(kCharPolyLimit + 1)), SizeGuardError);
}

TEST_CASE("closed-form spectra") {
  CHECK(closed_form_spectrum(4, true) == spec({{4, 1}, {3, 1}, {1, 1}, {0, 1}}));
  CHECK(closed_form_spectrum(4, false) == spec({{4, 3}, {0, 1}}));
  CHECK(closed_form_spectrum(5, true) == spec({{4, 3}, {0, 2}}));
  CHECK(closed_form_spectrum(1, true) == spec({{0, 1}}));
  CHECK(closed_form_spectrum(2, true) == spec({{0, 2}}));
  CHECK(to_string(closed_form_spectrum(4, true)) == "4^1 3^1 1^1 0^1");
  CHECK(spectrum_to_json(closed_form_spectrum(4, false)) == "[[4,3],[0,1]]");

  const ExactSpectrum merged({{2, 1}, {0, 1}, {2, 2}, {5, 0}});
  CHECK(merged.entries() == std::vector<SpectrumEntry>{{2, 3}, {0, 1}});
  CHECK(merged.size() == 4);
  CHECK(merged.trace() == 6);
  CHECK(merged.ascending() == std::vector<std::int64_t>{0, 2, 2, 2});
}

TEST_CASE("numeric eigenvalues") {
  auto near = [](const std::vector<double>& got, const std::vector<double>& want) {
    REQUIRE(got.size() == want.size());
    for (std::size_t i = 0; i < got.size(); ++i) CHECK(got[i] == doctest::Approx(want[i]).epsilon(1e-9));
  };
  near(eigenvalues_numeric(laplacian(complete_graph(3))), {0, 3, 3});
  near(eigenvalues_numeric(laplacian(strong_power_graph(make_cyclic(4)))), {0, 1, 3, 4});
  near(eigenvalues_numeric(IntMatrix(4)), {0, 0, 0, 0});

  IntMatrix skew(2);
  skew(0, 1) = 1;
  CHECK_THROWS_AS(eigenvalues_numeric(skew), std::invalid_argument);
}

TEST_CASE("algebraic connectivity") {
  CHECK(algebraic_connectivity(*exact_spectrum(laplacian(strong_power_graph(make_cyclic(6))))) == 3);
  CHECK(algebraic_connectivity(*exact_spectrum(laplacian(complete_graph(4)))) == 4);
  CHECK(algebraic_connectivity(*exact_spectrum(laplacian(strong_power_graph(make_cyclic(5))))) == 0);
  CHECK(algebraic_connectivity(spec({{0, 1}})) == 0);
  CHECK_THROWS(algebraic_connectivity(ExactSpectrum()));
}

TEST_CASE("spanning trees") {
  CHECK(spanning_tree_count_kirchhoff(strong_power_graph(make_cyclic(4))) == 3);
  CHECK(oracle::spanning_trees(strong_power_graph(make_cyclic(4))) == 3);
  CHECK(spanning_tree_count_formula(4, false) == 16);
  CHECK(spanning_tree_count_formula(5, true) == 0);
  CHECK(spanning_tree_count_formula(4, true) == 3);
  CHECK(spanning_tree_count_kirchhoff(complete_graph(4)) == 16);
  CHECK(spanning_tree_count_kirchhoff(Graph(3)) == 0);
  CHECK(spanning_tree_count_kirchhoff(Graph(0)) == 0);
  CHECK(spanning_tree_count_kirchhoff(Graph(1)) == 1);
  CHECK(spanning_tree_count_from_spectrum(closed_form_spectrum(4, true)) == 3);
  CHECK(spanning_tree_count_from_spectrum(closed_form_spectrum(7, true)) == 0);
  CHECK_THROWS_AS(spanning_tree_count_kirchhoff(complete_graph(kKirchhoffLimit + 1)), SizeGuardError);
}

TEST_CASE("Laplacian energy") {
  const auto z4 = closed_form_spectrum(4, true);
  CHECK(laplacian_energy_from_spectrum(z4, 4, 4) == 6);
  CHECK(laplacian_energy_closed_form(4, true) == 4);
  CHECK(laplacian_energy_from_spectrum(closed_form_spectrum(4, false), 6, 4) == 6);
  CHECK(laplacian_energy_closed_form(4, false) == 6);
  CHECK(laplacian_energy_closed_form(2, true) == 0);
  CHECK(to_string(laplacian_energy_closed_form(3, true)) == "4/3");
  CHECK(laplacian_energy_from_spectrum(closed_form_spectrum(3, true), 1, 3) == Rational(8, 3));
  CHECK_THROWS(laplacian_energy_from_spectrum(z4, 4, 5));
  CHECK(laplacian_energy_numeric({0, 1, 3, 4}, 4) == doctest::Approx(6.0));
}

TEST_CASE("matrix market export") {
  std::ostringstream out;
  write_matrix_market(out, laplacian(complete_graph(2)));
  CHECK(out.str() ==
        "%%MatrixMarket matrix coordinate integer symmetric\n2 2 3\n1 1 1\n2 1 -1\n2 2 1\n");

  IntMatrix m(2);
  m(0, 1) = 5;
  std::ostringstream general;
  write_matrix_market(general, m);
  CHECK(general.str() == "%%MatrixMarket matrix coordinate integer general\n2 2 1\n1 2 5\n");
}

TEST_CASE("integer spectrum recovery") {
  CHECK(exact_spectrum(laplacian(path_graph(3))) == spec({{3, 1}, {1, 1}, {0, 1}}));
  // P_4 has eigenvalues 2 +- sqrt 2.
  CHECK_FALSE(exact_spectrum(laplacian(path_graph(4))).has_value());
  CHECK(exact_spectrum(IntMatrix(0)) == ExactSpectrum());
}

TEST_CASE("property: characteristic polynomial and determinant on random matrices") {
  auto r = gen::rng(3);
  for (int trial = 0; trial < 60; ++trial) {
    const std::size_t n = 1 + trial % 7;
    const auto m = gen::random_matrix(r, n, -5, 5);
    CAPTURE(n);
    CHECK(Rational(determinant(m)) == oracle::determinant(m));
    check_char_poly_by_interpolation(m);
  }
}

TEST_CASE("property: spectra of random graphs") {
  auto r = gen::rng(4);
  for (int trial = 0; trial < 80; ++trial) {
    const auto g = gen::random_graph(r, 9);
    CAPTURE(to_json(g));
    const auto l = laplacian(g);
    for (std::size_t i = 0; i < g.order(); ++i) {
      BigInt row = 0;
      for (std::size_t j = 0; j < g.order(); ++j) row += l(i, j);
      CHECK(row == 0);
      CHECK(l(i, i) == g.degree(i));
    }
    check_char_poly_by_interpolation(l);
    const auto p = char_poly_exact(l);
    if (g.order() > 0) CHECK(p.coefficients()[0] == 0);

    const auto numeric = eigenvalues_numeric(l);
    if (const auto s = exact_spectrum(l)) {
      CHECK(s->size() == g.order());
      CHECK(s->trace() == 2 * g.edge_count());
      CHECK(char_poly_from_spectrum(*s) == p);
      const auto exact = s->ascending();
      for (std::size_t i = 0; i < exact.size(); ++i) {
        CHECK(numeric[i] == doctest::Approx(static_cast<double>(exact[i])).epsilon(1e-9));
      }
      if (g.order() > 0) {
        CHECK(s->entries().back().eigenvalue == 0);
        CHECK(s->multiplicity(0) == connected_components(g).size());
        const double le = laplacian_energy_numeric(numeric, g.edge_count());
        CHECK(std::abs(le - laplacian_energy_from_spectrum(*s, g.edge_count(), g.order())
                                .convert_to<double>()) < 1e-7);
      }
    }
    // The null graph counts as having no spanning trees.
    if (g.order() > 0 && g.edge_count() <= 20) {
      CHECK(spanning_tree_count_kirchhoff(g) == oracle::spanning_trees(g));
    }
  }
}

TEST_CASE("property: strong power graph spectra match the closed forms") {
  for (const auto& [spec_text, g] : corpus_groups()) {
    CAPTURE(spec_text);
    const auto graph = strong_power_graph(g);
    const auto s = exact_spectrum(laplacian(graph));
    REQUIRE(s.has_value());
    CHECK(*s == closed_form_spectrum(g.order(), is_cyclic(g)));
    CHECK(s->trace() == 2 * graph.edge_count());
    if (g.order() <= 16) {
      CHECK(spanning_tree_count_kirchhoff(graph) ==
            spanning_tree_count_formula(g.order(), is_cyclic(g)));
    }
  }
}
