#pragma once

#include <cstddef>
#include <cstdint>
#include <iosfwd>
#include <optional>
#include <string>
#include <vector>

#include "strongpow/graph.hpp"
#include "strongpow/numeric.hpp"

namespace strongpow {

// Dense square matrix of arbitrary-precision integers, row-major.
class IntMatrix {
 public:
  IntMatrix() = default;
  explicit IntMatrix(std::size_t n) : n_(n), entries_(n * n) {}

  std::size_t order() const noexcept { return n_; }
  BigInt& operator()(std::size_t i, std::size_t j) { return entries_[i * n_ + j]; }
  const BigInt& operator()(std::size_t i, std::size_t j) const {
    return entries_[i * n_ + j];
  }

  bool is_symmetric() const;
  // Deletes row and column k.
  IntMatrix minor(std::size_t k) const;

  friend bool operator==(const IntMatrix&, const IntMatrix&) = default;

 private:
  std::size_t n_ = 0;
  std::vector<BigInt> entries_;
};

IntMatrix identity_matrix(std::size_t n);
IntMatrix constant_matrix(std::size_t n, const BigInt& value);

IntMatrix adjacency(const Graph& g);
// Degree diagonal minus adjacency.
IntMatrix laplacian(const Graph& g);

struct SpectrumEntry {
  std::int64_t eigenvalue;
  std::size_t multiplicity;
  friend bool operator==(const SpectrumEntry&, const SpectrumEntry&) = default;
};

// Integer eigenvalues with multiplicities, strictly decreasing, no zero
// multiplicities.
class ExactSpectrum {
 public:
  ExactSpectrum() = default;
  // Sorts, merges equal eigenvalues and drops zero multiplicities.
  explicit ExactSpectrum(std::vector<SpectrumEntry> entries);

  const std::vector<SpectrumEntry>& entries() const noexcept { return entries_; }
  // Sum of multiplicities.
  std::size_t size() const;
  std::size_t multiplicity(std::int64_t eigenvalue) const;
  // Sum of eigenvalue * multiplicity.
  BigInt trace() const;
  // Eigenvalues repeated by multiplicity, ascending.
  std::vector<std::int64_t> ascending() const;

  friend bool operator==(const ExactSpectrum&, const ExactSpectrum&) = default;

 private:
  std::vector<SpectrumEntry> entries_;
};

std::string to_string(const ExactSpectrum& s);

// Monic polynomial; coefficients()[k] multiplies x^k.
class CharPoly {
 public:
  CharPoly() : coeffs_{BigInt(1)} {}
  explicit CharPoly(std::vector<BigInt> ascending_coeffs);

  std::size_t degree() const noexcept { return coeffs_.size() - 1; }
  const std::vector<BigInt>& coefficients() const noexcept { return coeffs_; }
  BigInt evaluate(const BigInt& x) const;

  // Multiplies by (x - root)^times in place.
  void multiply_linear(const BigInt& root, std::size_t times = 1);

  friend bool operator==(const CharPoly&, const CharPoly&) = default;

 private:
  std::vector<BigInt> coeffs_;
};

std::string to_string(const CharPoly& p);

inline constexpr std::size_t kCharPolyLimit = 128;
inline constexpr std::size_t kKirchhoffLimit = 64;

// det(xI - m) by the division-free Samuelson-Berkowitz recurrence.
CharPoly char_poly_exact(const IntMatrix& m);

// Fraction-free (Bareiss) elimination; every division is exact.
BigInt determinant(const IntMatrix& m);

// Product of (x - lambda)^mult.
CharPoly char_poly_from_spectrum(const ExactSpectrum& s);

// Integer roots of a characteristic polynomial with |root| <= bound. Returns
// nullopt unless the polynomial splits completely over the integers.
std::optional<ExactSpectrum> integer_spectrum(const CharPoly& p, std::int64_t bound);

// Exact spectrum of an integer matrix whose eigenvalues are all integers;
// nullopt otherwise. Bound comes from the row-sum norm.
std::optional<ExactSpectrum> exact_spectrum(const IntMatrix& m);

// Laplacian spectrum of the strong power graph of an order-n group:
// cyclic:    0^1, n^(n-phi-1), (n-phi-1)^1, (n-1)^(phi-1)
// noncyclic: 0^1, n^(n-1)
// Coinciding eigenvalues are merged; n = 1 gives {0^1}.
ExactSpectrum closed_form_spectrum(std::size_t n, bool cyclic);

// x (x-n)^(n-phi-1) (x-n+phi+1) (x-n+1)^(phi-1), expanded. Requires n >= 2.
CharPoly closed_form_char_poly(std::size_t n);

// All eigenvalues of a real symmetric matrix, ascending. Each eigenpair's
// residual is checked against tol * max(1, ||m||_inf).
std::vector<double> eigenvalues_numeric(const IntMatrix& m, double tol = 1e-9);

// Second-smallest eigenvalue counting multiplicity; 0 for a one-vertex
// spectrum.
std::int64_t algebraic_connectivity(const ExactSpectrum& s);

// Closed forms: cyclic n^(n-phi-2) (n-phi-1) (n-1)^(phi-1),
// noncyclic n^(n-2). n = 1 gives 1.
BigInt spanning_tree_count_formula(std::size_t n, bool cyclic);
// Determinant of a Laplacian minor.
BigInt spanning_tree_count_kirchhoff(const Graph& g);
// Product of the nonzero Laplacian eigenvalues over n; 0 if disconnected.
BigInt spanning_tree_count_from_spectrum(const ExactSpectrum& s);

// sum_i |lambda_i - 2m/n| in exact arithmetic.
Rational laplacian_energy_from_spectrum(const ExactSpectrum& s,
                                        std::size_t edge_count, std::size_t n);
double laplacian_energy_numeric(const std::vector<double>& eigenvalues,
                                std::size_t edge_count);
// Reference closed forms, evaluated as written: cyclic 2(n-1) - 4 phi(n)/n,
// noncyclic 2(n-1). These do not always match the definition; see README.
Rational laplacian_energy_closed_form(std::size_t n, bool cyclic);

std::string to_string(const Rational& q);

// Matrix Market coordinate format: symmetric storage (lower triangle) when
// the matrix is symmetric, general storage otherwise.
void write_matrix_market(std::ostream& out, const IntMatrix& m);
// [[eigenvalue, multiplicity], ...] in decreasing eigenvalue order.
std::string spectrum_to_json(const ExactSpectrum& s);

}  // namespace strongpow
