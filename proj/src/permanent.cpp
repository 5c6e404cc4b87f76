#include "strongpow/permanent.hpp"

#include <bit>
#include <limits>
#include <optional>
#include <stdexcept>
#include <vector>

#include "strongpow/errors.hpp"
#include "strongpow/group.hpp"

namespace strongpow {

namespace {

using Wide = __int128;

std::optional<std::vector<std::int64_t>> narrow_entries(const IntMatrix& m) {
  // Row sums must stay within int64 for the fast path.
  const std::size_t n = m.order();
  const BigInt limit = BigInt(std::numeric_limits<std::int64_t>::max()) /
                       static_cast<std::int64_t>(std::max<std::size_t>(n, 1));
  std::vector<std::int64_t> out(n * n);
  for (std::size_t i = 0; i < n; ++i) {
    for (std::size_t j = 0; j < n; ++j) {
      if (abs(m(i, j)) > limit) return std::nullopt;
      out[i * n + j] = m(i, j).convert_to<std::int64_t>();
    }
  }
  return out;
}

BigInt to_big(Wide v) {
  const bool negative = v < 0;
  unsigned __int128 mag = negative ? -static_cast<unsigned __int128>(v)
                                   : static_cast<unsigned __int128>(v);
  BigInt out = static_cast<std::uint64_t>(mag >> 64);
  out <<= 64;
  out += static_cast<std::uint64_t>(mag);
  return negative ? BigInt(-out) : out;
}

BigInt ryser_narrow(const std::vector<std::int64_t>& a, std::size_t n) {
  std::vector<std::int64_t> row_sums(n, 0);
  BigInt total = 0;
  Wide partial = 0;
  const std::uint64_t subsets = std::uint64_t{1} << n;
  for (std::uint64_t k = 1; k < subsets; ++k) {
    const auto col = static_cast<std::size_t>(std::countr_zero(k));
    const std::uint64_t gray = k ^ (k >> 1);
    const bool added = (gray >> col) & 1U;
    for (std::size_t i = 0; i < n; ++i) {
      row_sums[i] += added ? a[i * n + col] : -a[i * n + col];
    }

    Wide product = 1;
    bool overflow = false;
    for (std::size_t i = 0; i < n && product != 0; ++i) {
      if (__builtin_mul_overflow(product, static_cast<Wide>(row_sums[i]), &product)) {
        overflow = true;
        break;
      }
    }
    const bool odd = std::popcount(gray) & 1;
    if (overflow) {
      BigInt big = 1;
      for (std::size_t i = 0; i < n; ++i) big *= row_sums[i];
      total += odd ? BigInt(-big) : big;
      continue;
    }
    if (product == 0) continue;
    if (odd) product = -product;
    Wide next;
    if (__builtin_add_overflow(partial, product, &next)) {
      total += to_big(partial);
      partial = product;
    } else {
      partial = next;
    }
  }
  total += to_big(partial);
  return (n % 2 == 1) ? BigInt(-total) : total;
}

BigInt ryser_big(const IntMatrix& m) {
  const std::size_t n = m.order();
  std::vector<BigInt> row_sums(n, BigInt(0));
  BigInt total = 0;
  const std::uint64_t subsets = std::uint64_t{1} << n;
  for (std::uint64_t k = 1; k < subsets; ++k) {
    const auto col = static_cast<std::size_t>(std::countr_zero(k));
    const std::uint64_t gray = k ^ (k >> 1);
    const bool added = (gray >> col) & 1U;
    for (std::size_t i = 0; i < n; ++i) {
      if (added) row_sums[i] += m(i, col);
      else row_sums[i] -= m(i, col);
    }
    BigInt product = 1;
    for (std::size_t i = 0; i < n && product != 0; ++i) product *= row_sums[i];
    if (std::popcount(gray) & 1) total -= product;
    else total += product;
  }
  return (n % 2 == 1) ? BigInt(-total) : total;
}

BigInt expand(const IntMatrix& m, std::size_t row, std::uint32_t used) {
  if (row == m.order()) return 1;
  BigInt total = 0;
  for (std::size_t col = 0; col < m.order(); ++col) {
    if ((used >> col) & 1U) continue;
    if (m(row, col) == 0) continue;
    total += m(row, col) * expand(m, row + 1, used | (std::uint32_t{1} << col));
  }
  return total;
}

}  // namespace

BigInt permanent_ryser(const IntMatrix& m) {
  const std::size_t n = m.order();
  check_size_guard("permanent_ryser", n, kRyserLimit);
  if (n == 0) return 1;
  if (auto narrow = narrow_entries(m)) return ryser_narrow(*narrow, n);
  return ryser_big(m);
}

BigInt permanent_expansion(const IntMatrix& m) {
  check_size_guard("permanent_expansion", m.order(), kExpansionLimit);
  return expand(m, 0, 0);
}

CliqueParams clique_params_for_cyclic(std::size_t group_order) {
  if (group_order < 1) throw std::invalid_argument("group order must be >= 1");
  const auto phi = static_cast<std::int64_t>(euler_phi(group_order));
  return {phi, static_cast<std::int64_t>(group_order) - phi - 1};
}

Graph clique_plus_vertex_graph(const CliqueParams& p) {
  if (p.unattached < 0 || p.attached < 0) {
    throw std::invalid_argument("clique parameters must be nonnegative");
  }
  const auto clique = static_cast<std::size_t>(p.clique_size());
  Graph out(clique + 1);
  for (Vertex u = 0; u < clique; ++u)
    for (Vertex v = u + 1; v < clique; ++v) out.add_edge(u, v);
  for (Vertex v = static_cast<std::size_t>(p.unattached); v < clique; ++v) {
    out.add_edge(v, clique);
  }
  return out;
}

BigInt clique_plus_vertex_adjacency_permanent(const CliqueParams& p) {
  const std::int64_t m = p.unattached, n = p.attached;
  if (m + n < 1) throw std::invalid_argument("clique must have at least one vertex");
  CombinatoricsCache cc;
  BigInt sum = 0;
  for (std::int64_t r = 1; r <= m + n; ++r) {
    BigInt term = cc.factorial(m + n - r) *
                  (cc.binomial(m + n - 1, r - 1) + (n - 1) * cc.binomial(m + n - 2, r - 1));
    if ((r - 1) % 2) sum -= term;
    else sum += term;
  }
  return n * sum;
}

BigInt adjacency_permanent_formula(std::size_t group_order) {
  if (group_order < 2) throw std::invalid_argument("adjacency_permanent_formula needs N >= 2");
  const auto N = static_cast<std::int64_t>(group_order);
  const auto phi = static_cast<std::int64_t>(euler_phi(group_order));
  CombinatoricsCache cc;
  BigInt sum = 0;
  for (std::int64_t r = 1; r <= N - 1; ++r) {
    BigInt term = cc.factorial(N - 1 - r) *
                  (cc.binomial(N - 2, r - 1) + (N - 2 - phi) * cc.binomial(N - 3, r - 1));
    if ((r - 1) % 2) sum -= term;
    else sum += term;
  }
  return (N - phi - 1) * sum;
}

BigInt clique_plus_vertex_laplacian_permanent(const CliqueParams& p) {
  const std::int64_t m = p.unattached, n = p.attached, d = p.d();
  if (m < 0 || n < 0) throw std::invalid_argument("clique parameters must be nonnegative");
  CombinatoricsCache cc;
  PowerCache pow_a(d + 2), pow_b(d + 1);

  BigInt first = 0;
  for (std::int64_t r = 1; r <= m + n; ++r) {
    BigInt f = 0;
    for (std::int64_t i = 0; i <= r - 1; ++i) {
      const std::int64_t j = r - 1 - i;
      const BigInt bracket = n * cc.binomial(n - 1, j) +
                             n * (n - 1) * cc.binomial(n - 2, j) -
                             (d - m + 1) * (m + n - r + 1) * cc.binomial(n, j);
      f += cc.binomial(m, i) * pow_a(j) * pow_b(i) * bracket;
    }
    BigInt term = cc.factorial(m + n - r) * f;
    if ((m + n - r) % 2) first -= term;
    else first += term;
  }

  BigInt second = 0;
  for (std::int64_t i = 0; i <= m + n; ++i) {
    const std::int64_t j = m + n - i;
    second += cc.binomial(m, i) * cc.binomial(n, j) * pow_a(j) * pow_b(i);
  }
  return first + (d - m + 1) * second;
}

BigInt clique_plus_vertex_laplacian_permanent_headline(const CliqueParams& p) {
  const std::int64_t m = p.unattached, n = p.attached, d = p.d();
  if (m < 0 || n < 0) throw std::invalid_argument("clique parameters must be nonnegative");
  CombinatoricsCache cc;
  PowerCache pow_a(d + 2), pow_b(d + 1);

  BigInt total = 0;
  for (std::int64_t r = 1; r <= m + n; ++r) {
    const std::int64_t sign = ((m + n - r + 1) % 2) ? -1 : 1;
    BigInt f = 0;
    for (std::int64_t i = 0; i <= r - 1; ++i) {
      const std::int64_t j = r - 1 - i;
      const BigInt bracket = n * cc.binomial(n - 1, j) +
                             n * (n - 1) * cc.binomial(n - 2, j) +
                             sign * (d - m + 1) * (m + n - r + 1) * cc.binomial(n, j);
      f += cc.binomial(m, i) * pow_a(j) * pow_b(i) * bracket;
    }
    total += cc.factorial(m + n - r) * f;
  }
  return total;
}

BigInt laplacian_permanent_formula(std::size_t group_order) {
  if (group_order < 2) throw std::invalid_argument("laplacian_permanent_formula needs N >= 2");
  const auto N = static_cast<std::int64_t>(group_order);
  const auto phi = static_cast<std::int64_t>(euler_phi(group_order));
  const std::int64_t k = N - phi - 1;
  CombinatoricsCache cc;
  PowerCache pow_n(N), pow_n1(N - 1);

  BigInt first = 0;
  for (std::int64_t r = 1; r <= N - 1; ++r) {
    BigInt f = 0;
    for (std::int64_t i = 0; i <= r - 1; ++i) {
      const std::int64_t j = r - 1 - i;
      const BigInt bracket = k * cc.binomial(N - phi - 2, j) +
                             k * (N - phi - 2) * cc.binomial(N - phi - 3, j) -
                             k * (N - r) * cc.binomial(k, j);
      f += cc.binomial(phi, i) * pow_n(j) * pow_n1(i) * bracket;
    }
    BigInt term = cc.factorial(N - r - 1) * f;
    if ((N - r - 1) % 2) first -= term;
    else first += term;
  }

  BigInt second = 0;
  for (std::int64_t i = 0; i <= N - 1; ++i) {
    const std::int64_t j = N - 1 - i;
    second += cc.binomial(phi, i) * cc.binomial(k, j) * pow_n(j) * pow_n1(i);
  }
  return first + k * second;
}

BigInt complete_graph_laplacian_permanent(std::size_t n) {
  if (n < 1) throw std::invalid_argument("complete_graph_laplacian_permanent needs n >= 1");
  const auto order = static_cast<std::int64_t>(n);
  CombinatoricsCache cc;
  PowerCache pow_n(order);
  BigInt sum = 0;
  for (std::int64_t k = 0; k <= order; ++k) {
    BigInt term = pow_n(k) * (cc.factorial(order) / cc.factorial(k));
    if (k % 2) sum -= term;
    else sum += term;
  }
  return (order % 2) ? BigInt(-sum) : sum;
}

}  // namespace strongpow
