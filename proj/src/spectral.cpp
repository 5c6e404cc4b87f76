#include "strongpow/spectral.hpp"

#include <algorithm>
#include <cmath>
#include <map>
#include <ostream>
#include <sstream>
#include <stdexcept>

#include <Eigen/Dense>

#include "json.hpp"

#include "strongpow/errors.hpp"

namespace strongpow {

bool IntMatrix::is_symmetric() const {
  for (std::size_t i = 0; i < n_; ++i)
    for (std::size_t j = i + 1; j < n_; ++j)
      if ((*this)(i, j) != (*this)(j, i)) return false;
  return true;
}

IntMatrix IntMatrix::minor(std::size_t k) const {
  if (k >= n_) throw std::out_of_range("minor index out of range");
  IntMatrix out(n_ - 1);
  for (std::size_t i = 0, oi = 0; i < n_; ++i) {
    if (i == k) continue;
    for (std::size_t j = 0, oj = 0; j < n_; ++j) {
      if (j == k) continue;
      out(oi, oj++) = (*this)(i, j);
    }
    ++oi;
  }
  return out;
}

IntMatrix identity_matrix(std::size_t n) {
  IntMatrix m(n);
  for (std::size_t i = 0; i < n; ++i) m(i, i) = 1;
  return m;
}

IntMatrix constant_matrix(std::size_t n, const BigInt& value) {
  IntMatrix m(n);
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = 0; j < n; ++j) m(i, j) = value;
  return m;
}

IntMatrix adjacency(const Graph& g) {
  IntMatrix m(g.order());
  for (const auto& [u, v] : edge_list(g)) {
    m(u, v) = 1;
    m(v, u) = 1;
  }
  return m;
}

IntMatrix laplacian(const Graph& g) {
  IntMatrix m(g.order());
  for (const auto& [u, v] : edge_list(g)) {
    m(u, v) = -1;
    m(v, u) = -1;
  }
  for (Vertex v = 0; v < g.order(); ++v) m(v, v) = g.degree(v);
  return m;
}

ExactSpectrum::ExactSpectrum(std::vector<SpectrumEntry> entries) {
  std::map<std::int64_t, std::size_t, std::greater<>> merged;
  for (const auto& e : entries) merged[e.eigenvalue] += e.multiplicity;
  for (const auto& [value, mult] : merged) {
    if (mult > 0) entries_.push_back({value, mult});
  }
}

std::size_t ExactSpectrum::size() const {
  std::size_t total = 0;
  for (const auto& e : entries_) total += e.multiplicity;
  return total;
}

std::size_t ExactSpectrum::multiplicity(std::int64_t eigenvalue) const {
  for (const auto& e : entries_) {
    if (e.eigenvalue == eigenvalue) return e.multiplicity;
  }
  return 0;
}

BigInt ExactSpectrum::trace() const {
  BigInt total = 0;
  for (const auto& e : entries_) total += BigInt(e.eigenvalue) * e.multiplicity;
  return total;
}

std::vector<std::int64_t> ExactSpectrum::ascending() const {
  std::vector<std::int64_t> out;
  for (auto it = entries_.rbegin(); it != entries_.rend(); ++it) {
    out.insert(out.end(), it->multiplicity, it->eigenvalue);
  }
  return out;
}

std::string to_string(const ExactSpectrum& s) {
  std::ostringstream out;
  bool first = true;
  for (const auto& e : s.entries()) {
    if (!first) out << ' ';
    first = false;
    out << e.eigenvalue << '^' << e.multiplicity;
  }
  return out.str();
}

CharPoly::CharPoly(std::vector<BigInt> ascending_coeffs)
    : coeffs_(std::move(ascending_coeffs)) {
  if (coeffs_.empty() || coeffs_.back() != 1) {
    throw std::invalid_argument("characteristic polynomial must be monic");
  }
}

BigInt CharPoly::evaluate(const BigInt& x) const {
  BigInt acc = 0;
  for (auto it = coeffs_.rbegin(); it != coeffs_.rend(); ++it) acc = acc * x + *it;
  return acc;
}

void CharPoly::multiply_linear(const BigInt& root, std::size_t times) {
  for (std::size_t t = 0; t < times; ++t) {
    coeffs_.insert(coeffs_.begin(), BigInt(0));
    for (std::size_t k = 0; k + 1 < coeffs_.size(); ++k) {
      coeffs_[k] -= root * coeffs_[k + 1];
    }
  }
}

std::string to_string(const CharPoly& p) {
  std::ostringstream out;
  const auto& c = p.coefficients();
  bool first = true;
  for (std::size_t k = c.size(); k-- > 0;) {
    if (c[k] == 0) continue;
    const BigInt mag = abs(c[k]);
    if (first) {
      if (c[k] < 0) out << '-';
    } else {
      out << (c[k] < 0 ? " - " : " + ");
    }
    first = false;
    if (mag != 1 || k == 0) out << mag;
    if (k >= 1) out << 'x';
    if (k >= 2) out << '^' << k;
  }
  if (first) out << '0';
  return out.str();
}

CharPoly char_poly_exact(const IntMatrix& m) {
  const std::size_t n = m.order();
  check_size_guard("char_poly_exact", n, kCharPolyLimit);
  if (n == 0) return CharPoly();

  // Descending coefficients of the trailing principal submatrix, grown one
  // row/column at a time: p_new = T * p_old with T lower-triangular Toeplitz
  // on (1, -a, -R C, -R A C, -R A^2 C, ...).
  std::vector<BigInt> p{BigInt(1), BigInt(-m(n - 1, n - 1))};
  for (std::size_t k = n - 1; k-- > 0;) {
    const std::size_t s = n - 1 - k;
    const std::size_t base = k + 1;
    std::vector<BigInt> t(s + 2);
    t[0] = 1;
    t[1] = -m(k, k);
    std::vector<BigInt> v(s), next(s);
    for (std::size_t i = 0; i < s; ++i) v[i] = m(base + i, k);
    for (std::size_t j = 0; j < s; ++j) {
      BigInt dot = 0;
      for (std::size_t i = 0; i < s; ++i) {
        if (m(k, base + i) != 0 && v[i] != 0) dot += m(k, base + i) * v[i];
      }
      t[j + 2] = -dot;
      if (j + 1 == s) break;
      for (std::size_t r = 0; r < s; ++r) {
        BigInt acc = 0;
        for (std::size_t c = 0; c < s; ++c) {
          const BigInt& a = m(base + r, base + c);
          if (a != 0 && v[c] != 0) acc += a * v[c];
        }
        next[r] = std::move(acc);
      }
      std::swap(v, next);
    }
    std::vector<BigInt> grown(s + 2);
    for (std::size_t i = 0; i < s + 2; ++i) {
      BigInt acc = 0;
      for (std::size_t j = 0; j <= std::min(i, s); ++j) {
        if (t[i - j] != 0 && p[j] != 0) acc += t[i - j] * p[j];
      }
      grown[i] = std::move(acc);
    }
    p = std::move(grown);
  }
  std::reverse(p.begin(), p.end());
  return CharPoly(std::move(p));
}

BigInt determinant(const IntMatrix& input) {
  const std::size_t n = input.order();
  if (n == 0) return 1;
  IntMatrix a = input;
  BigInt sign = 1;
  BigInt previous = 1;
  for (std::size_t k = 0; k + 1 < n; ++k) {
    if (a(k, k) == 0) {
      std::size_t swap_row = k + 1;
      while (swap_row < n && a(swap_row, k) == 0) ++swap_row;
      if (swap_row == n) return 0;
      for (std::size_t j = 0; j < n; ++j) std::swap(a(k, j), a(swap_row, j));
      sign = -sign;
    }
    for (std::size_t i = k + 1; i < n; ++i) {
      for (std::size_t j = k + 1; j < n; ++j) {
        a(i, j) = (a(i, j) * a(k, k) - a(i, k) * a(k, j)) / previous;
      }
      a(i, k) = 0;
    }
    previous = a(k, k);
  }
  return sign * a(n - 1, n - 1);
}

CharPoly char_poly_from_spectrum(const ExactSpectrum& s) {
  CharPoly p;
  for (const auto& e : s.entries()) p.multiply_linear(e.eigenvalue, e.multiplicity);
  return p;
}

std::optional<ExactSpectrum> integer_spectrum(const CharPoly& p, std::int64_t bound) {
  std::vector<BigInt> q = p.coefficients();
  std::vector<SpectrumEntry> found;

  std::size_t zeros = 0;
  while (q.size() > 1 && q.front() == 0) {
    q.erase(q.begin());
    ++zeros;
  }
  if (zeros) found.push_back({0, zeros});

  // Synthetic division of q (ascending) by (x - r); returns remainder.
  auto divide = [](const std::vector<BigInt>& poly, const BigInt& r,
                   std::vector<BigInt>& quotient) {
    const std::size_t d = poly.size() - 1;
    quotient.assign(d, BigInt(0));
    BigInt carry = poly[d];
    for (std::size_t k = d; k-- > 0;) {
      quotient[k] = carry;
      carry = poly[k] + carry * r;
    }
    return carry;
  };

  std::vector<BigInt> quotient;
  for (std::int64_t r = -bound; r <= bound && q.size() > 1; ++r) {
    if (r == 0) continue;
    // Integer roots of a monic integer polynomial divide the constant term.
    if (q.front() % r != 0) continue;
    std::size_t mult = 0;
    while (q.size() > 1 && divide(q, r, quotient) == 0) {
      q = quotient;
      ++mult;
    }
    if (mult) found.push_back({r, mult});
  }
  if (q.size() > 1) return std::nullopt;
  return ExactSpectrum(std::move(found));
}

std::optional<ExactSpectrum> exact_spectrum(const IntMatrix& m) {
  BigInt norm = 0;
  for (std::size_t i = 0; i < m.order(); ++i) {
    BigInt row = 0;
    for (std::size_t j = 0; j < m.order(); ++j) row += abs(m(i, j));
    norm = std::max(norm, row);
  }
  return integer_spectrum(char_poly_exact(m), norm.convert_to<std::int64_t>());
}

ExactSpectrum closed_form_spectrum(std::size_t n, bool cyclic) {
  if (n == 0) throw std::invalid_argument("closed_form_spectrum needs n >= 1");
  if (n == 1) return ExactSpectrum({{0, 1}});
  const auto order = static_cast<std::int64_t>(n);
  if (!cyclic) return ExactSpectrum({{0, 1}, {order, n - 1}});
  const auto phi = static_cast<std::int64_t>(euler_phi(n));
  const std::int64_t non_generators = order - phi - 1;
  return ExactSpectrum({{0, 1},
                        {order, static_cast<std::size_t>(non_generators)},
                        {non_generators, 1},
                        {order - 1, static_cast<std::size_t>(phi - 1)}});
}

CharPoly closed_form_char_poly(std::size_t n) {
  if (n < 2) throw std::invalid_argument("closed_form_char_poly needs n >= 2");
  const auto order = static_cast<std::int64_t>(n);
  const auto phi = static_cast<std::int64_t>(euler_phi(n));
  CharPoly p;
  p.multiply_linear(0);
  p.multiply_linear(order, static_cast<std::size_t>(order - phi - 1));
  p.multiply_linear(order - phi - 1);
  p.multiply_linear(order - 1, static_cast<std::size_t>(phi - 1));
  return p;
}

std::vector<double> eigenvalues_numeric(const IntMatrix& m, double tol) {
  if (!m.is_symmetric()) {
    throw std::invalid_argument("eigenvalues_numeric needs a symmetric matrix");
  }
  const auto n = static_cast<Eigen::Index>(m.order());
  if (n == 0) return {};
  Eigen::MatrixXd a(n, n);
  double norm = 0.0;
  for (Eigen::Index i = 0; i < n; ++i) {
    double row = 0.0;
    for (Eigen::Index j = 0; j < n; ++j) {
      a(i, j) = m(static_cast<std::size_t>(i), static_cast<std::size_t>(j))
                    .convert_to<double>();
      row += std::abs(a(i, j));
    }
    norm = std::max(norm, row);
  }
  Eigen::SelfAdjointEigenSolver<Eigen::MatrixXd> solver(a);
  if (solver.info() != Eigen::Success) {
    throw std::runtime_error("symmetric eigensolver did not converge");
  }
  const Eigen::MatrixXd residual =
      a * solver.eigenvectors() -
      solver.eigenvectors() * solver.eigenvalues().asDiagonal();
  const double limit = tol * std::max(1.0, norm);
  for (Eigen::Index k = 0; k < n; ++k) {
    if (residual.col(k).norm() > limit) {
      throw std::runtime_error("eigenpair residual exceeds tolerance");
    }
  }
  std::vector<double> out(solver.eigenvalues().data(),
                          solver.eigenvalues().data() + n);
  std::sort(out.begin(), out.end());
  return out;
}

std::int64_t algebraic_connectivity(const ExactSpectrum& s) {
  const auto values = s.ascending();
  if (values.empty()) throw std::invalid_argument("empty spectrum");
  if (values.size() == 1) return 0;
  return values[1];
}

BigInt spanning_tree_count_formula(std::size_t n, bool cyclic) {
  if (n == 0) throw std::invalid_argument("spanning_tree_count_formula needs n >= 1");
  if (n == 1) return 1;
  const auto order = static_cast<std::int64_t>(n);
  if (!cyclic) return power(order, order - 2);
  const auto phi = static_cast<std::int64_t>(euler_phi(n));
  const std::int64_t non_generators = order - phi - 1;
  // Prime orders: the identity is isolated and n^(n-phi-2) would be n^-1.
  if (non_generators == 0) return 0;
  return power(order, order - phi - 2) * non_generators * power(order - 1, phi - 1);
}

BigInt spanning_tree_count_kirchhoff(const Graph& g) {
  check_size_guard("spanning_tree_count_kirchhoff", g.order(), kKirchhoffLimit);
  if (g.order() == 0) return 0;
  return determinant(laplacian(g).minor(g.order() - 1));
}

BigInt spanning_tree_count_from_spectrum(const ExactSpectrum& s) {
  const std::size_t n = s.size();
  if (n == 0) throw std::invalid_argument("empty spectrum");
  if (s.multiplicity(0) == 0) {
    throw std::invalid_argument("not a Laplacian spectrum: 0 is not an eigenvalue");
  }
  if (s.multiplicity(0) > 1) return 0;
  BigInt product = 1;
  for (const auto& e : s.entries()) {
    if (e.eigenvalue != 0) product *= power(e.eigenvalue, static_cast<std::int64_t>(e.multiplicity));
  }
  if (product % n != 0) {
    throw std::logic_error("eigenvalue product not divisible by n");
  }
  return product / n;
}

Rational laplacian_energy_from_spectrum(const ExactSpectrum& s,
                                        std::size_t edge_count, std::size_t n) {
  if (n == 0 || s.size() != n) {
    throw std::invalid_argument("spectrum has " + std::to_string(s.size()) +
                                " eigenvalues, expected " + std::to_string(n));
  }
  const Rational mean(BigInt(2 * edge_count), BigInt(n));
  Rational total = 0;
  for (const auto& e : s.entries()) {
    total += abs(Rational(e.eigenvalue) - mean) * e.multiplicity;
  }
  return total;
}

double laplacian_energy_numeric(const std::vector<double>& eigenvalues,
                                std::size_t edge_count) {
  if (eigenvalues.empty()) throw std::invalid_argument("empty eigenvalue list");
  const double mean = 2.0 * static_cast<double>(edge_count) /
                      static_cast<double>(eigenvalues.size());
  double total = 0.0;
  for (double value : eigenvalues) total += std::abs(value - mean);
  return total;
}

Rational laplacian_energy_closed_form(std::size_t n, bool cyclic) {
  if (n == 0) throw std::invalid_argument("laplacian_energy_closed_form needs n >= 1");
  const Rational base = Rational(2 * (static_cast<std::int64_t>(n) - 1));
  if (!cyclic) return base;
  return base - Rational(BigInt(4 * euler_phi(n)), BigInt(n));
}

std::string to_string(const Rational& q) {
  if (denominator(q) == 1) return numerator(q).str();
  return numerator(q).str() + "/" + denominator(q).str();
}

void write_matrix_market(std::ostream& out, const IntMatrix& m) {
  const bool symmetric = m.is_symmetric();
  std::size_t nonzeros = 0;
  for (std::size_t i = 0; i < m.order(); ++i)
    for (std::size_t j = 0; j < m.order(); ++j)
      if (m(i, j) != 0 && (!symmetric || j <= i)) ++nonzeros;
  out << "%%MatrixMarket matrix coordinate integer "
      << (symmetric ? "symmetric" : "general") << '\n';
  out << m.order() << ' ' << m.order() << ' ' << nonzeros << '\n';
  // Column-major, as the format expects.
  for (std::size_t j = 0; j < m.order(); ++j)
    for (std::size_t i = symmetric ? j : 0; i < m.order(); ++i)
      if (m(i, j) != 0) out << i + 1 << ' ' << j + 1 << ' ' << m(i, j) << '\n';
}

std::string spectrum_to_json(const ExactSpectrum& s) {
  auto doc = nlohmann::json::array();
  for (const auto& e : s.entries()) doc.push_back({e.eigenvalue, e.multiplicity});
  return doc.dump();
}

}  // namespace strongpow
