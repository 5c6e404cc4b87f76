#include "strongpow/group.hpp"

#include <algorithm>
#include <charconv>
#include <fstream>
#include <istream>
#include <limits>
#include <map>
#include <numeric>
#include <ostream>
#include <random>
#include <sstream>

namespace strongpow {

const char* to_string(GroupErrc code) {
  switch (code) {
    case GroupErrc::invalid_order: return "invalid order";
    case GroupErrc::order_too_large: return "order too large";
    case GroupErrc::not_square: return "table not square";
    case GroupErrc::entry_out_of_range: return "table entry out of range";
    case GroupErrc::not_latin_square: return "table is not a Latin square";
    case GroupErrc::no_identity: return "no identity element";
    case GroupErrc::missing_inverse: return "missing two-sided inverse";
    case GroupErrc::not_associative: return "operation is not associative";
    case GroupErrc::bad_element: return "element out of range";
  }
  return "group error";
}

namespace {

void check_element(const FiniteGroup& g, Element x) {
  if (x >= g.order()) {
    throw GroupError(GroupErrc::bad_element,
                     std::to_string(x) + " not in [0, " +
                         std::to_string(g.order()) + ")");
  }
}

bool associative_triple(const std::vector<Element>& t, std::size_t n,
                        std::size_t a, std::size_t b, std::size_t c) {
  const std::size_t ab = t[a * n + b];
  const std::size_t bc = t[b * n + c];
  return t[ab * n + c] == t[a * n + bc];
}

}  // namespace

Element FiniteGroup::inverse(Element x) const {
  check_element(*this, x);
  if (kind_ == GroupKind::cyclic) {
    return x == 0 ? 0 : static_cast<Element>(n_ - x);
  }
  return inverses_[x];
}

Element FiniteGroup::pow(Element x, std::uint64_t k) const {
  check_element(*this, x);
  if (kind_ == GroupKind::cyclic) {
    const unsigned __int128 p = static_cast<unsigned __int128>(x) * k;
    return static_cast<Element>(p % n_);
  }
  Element result = identity_;
  Element base = x;
  while (k > 0) {
    if (k & 1U) result = op(result, base);
    base = op(base, base);
    k >>= 1U;
  }
  return result;
}

FiniteGroup make_cyclic(std::size_t n) {
  if (n == 0) throw GroupError(GroupErrc::invalid_order, "order must be >= 1");
  if (n > std::numeric_limits<Element>::max()) {
    throw GroupError(GroupErrc::order_too_large,
                     "cyclic order exceeds element index range");
  }
  FiniteGroup g;
  g.n_ = n;
  g.kind_ = GroupKind::cyclic;
  g.identity_ = 0;
  return g;
}

FiniteGroup make_from_table(std::vector<Element> table, std::size_t n,
                            bool force_exhaustive) {
  if (n == 0) throw GroupError(GroupErrc::invalid_order, "order must be >= 1");
  if (n > kMaxTableOrder) {
    throw GroupError(GroupErrc::order_too_large,
                     std::to_string(n) + " > " + std::to_string(kMaxTableOrder));
  }
  if (table.size() != n * n) {
    throw GroupError(GroupErrc::not_square,
                     "expected " + std::to_string(n * n) + " entries, got " +
                         std::to_string(table.size()));
  }
  for (std::size_t i = 0; i < table.size(); ++i) {
    if (table[i] >= n) {
      throw GroupError(GroupErrc::entry_out_of_range,
                       "entry (" + std::to_string(i / n) + ", " +
                           std::to_string(i % n) + ") = " +
                           std::to_string(table[i]));
    }
  }

  std::vector<std::uint8_t> seen(n);
  for (std::size_t r = 0; r < n; ++r) {
    std::fill(seen.begin(), seen.end(), 0);
    for (std::size_t c = 0; c < n; ++c) {
      if (seen[table[r * n + c]]++) {
        throw GroupError(GroupErrc::not_latin_square,
                         "row " + std::to_string(r) + " repeats " +
                             std::to_string(table[r * n + c]));
      }
    }
  }
  for (std::size_t c = 0; c < n; ++c) {
    std::fill(seen.begin(), seen.end(), 0);
    for (std::size_t r = 0; r < n; ++r) {
      if (seen[table[r * n + c]]++) {
        throw GroupError(GroupErrc::not_latin_square,
                         "column " + std::to_string(c) + " repeats " +
                             std::to_string(table[r * n + c]));
      }
    }
  }

  std::size_t identity = n;
  for (std::size_t e = 0; e < n && identity == n; ++e) {
    bool ok = true;
    for (std::size_t x = 0; x < n && ok; ++x) {
      ok = table[e * n + x] == x && table[x * n + e] == x;
    }
    if (ok) identity = e;
  }
  if (identity == n) {
    throw GroupError(GroupErrc::no_identity, "no two-sided identity in table");
  }

  std::vector<Element> inverses(n);
  for (std::size_t x = 0; x < n; ++x) {
    const auto row = table.begin() + static_cast<std::ptrdiff_t>(x * n);
    const auto y = static_cast<std::size_t>(
        std::find(row, row + static_cast<std::ptrdiff_t>(n), identity) - row);
    if (table[y * n + x] != identity) {
      throw GroupError(GroupErrc::missing_inverse,
                       "element " + std::to_string(x) +
                           " has no two-sided inverse");
    }
    inverses[x] = static_cast<Element>(y);
  }

  auto fail_assoc = [](std::size_t a, std::size_t b, std::size_t c) {
    throw GroupError(GroupErrc::not_associative,
                     "(" + std::to_string(a) + " " + std::to_string(b) + ") " +
                         std::to_string(c) + " differs from " +
                         std::to_string(a) + " (" + std::to_string(b) + " " +
                         std::to_string(c) + ")");
  };
  if (force_exhaustive || n <= kExhaustiveAssociativityLimit) {
    for (std::size_t a = 0; a < n; ++a)
      for (std::size_t b = 0; b < n; ++b)
        for (std::size_t c = 0; c < n; ++c)
          if (!associative_triple(table, n, a, b, c)) fail_assoc(a, b, c);
  } else {
    std::mt19937_64 rng(0x5eed5eedULL);
    std::uniform_int_distribution<std::size_t> pick(0, n - 1);
    const std::size_t trials = 10 * n * n;
    for (std::size_t t = 0; t < trials; ++t) {
      const std::size_t a = pick(rng), b = pick(rng), c = pick(rng);
      if (!associative_triple(table, n, a, b, c)) fail_assoc(a, b, c);
    }
  }

  FiniteGroup g;
  g.n_ = n;
  g.kind_ = GroupKind::table;
  g.identity_ = static_cast<Element>(identity);
  g.table_ = std::move(table);
  g.inverses_ = std::move(inverses);
  return g;
}

FiniteGroup make_from_table(const std::vector<std::vector<Element>>& rows,
                            bool force_exhaustive) {
  const std::size_t n = rows.size();
  std::vector<Element> flat;
  flat.reserve(n * n);
  for (std::size_t r = 0; r < n; ++r) {
    if (rows[r].size() != n) {
      throw GroupError(GroupErrc::not_square,
                       "row " + std::to_string(r) + " has " +
                           std::to_string(rows[r].size()) + " entries, expected " +
                           std::to_string(n));
    }
    flat.insert(flat.end(), rows[r].begin(), rows[r].end());
  }
  return make_from_table(std::move(flat), n, force_exhaustive);
}

FiniteGroup make_klein() {
  std::vector<Element> t(16);
  for (Element a = 0; a < 4; ++a)
    for (Element b = 0; b < 4; ++b) t[a * 4 + b] = a ^ b;
  return make_from_table(std::move(t), 4);
}

FiniteGroup make_dihedral(std::size_t k) {
  if (k == 0) throw GroupError(GroupErrc::invalid_order, "dihedral:k needs k >= 1");
  if (2 * k > kMaxTableOrder) {
    throw GroupError(GroupErrc::order_too_large,
                     "dihedral order " + std::to_string(2 * k));
  }
  // Index f*k + i stands for s^f r^i. Since r^i s = s r^-i:
  // (s^f1 r^i)(s^f2 r^j) = s^(f1+f2) r^((-1)^f2 i + j).
  const std::size_t n = 2 * k;
  std::vector<Element> t(n * n);
  for (std::size_t x = 0; x < n; ++x) {
    const std::size_t f1 = x / k, i = x % k;
    for (std::size_t y = 0; y < n; ++y) {
      const std::size_t f2 = y / k, j = y % k;
      const std::size_t rot = f2 == 0 ? (i + j) % k : (k - i + j) % k;
      t[x * n + y] = static_cast<Element>(((f1 + f2) % 2) * k + rot);
    }
  }
  return make_from_table(std::move(t), n);
}

FiniteGroup make_symmetric(std::size_t k) {
  if (k == 0 || k > 5) {
    throw GroupError(k == 0 ? GroupErrc::invalid_order : GroupErrc::order_too_large,
                     "sym:k needs k in [1, 5]");
  }
  std::vector<std::vector<int>> perms;
  std::vector<int> p(k);
  std::iota(p.begin(), p.end(), 0);
  do {
    perms.push_back(p);
  } while (std::next_permutation(p.begin(), p.end()));

  std::map<std::vector<int>, Element> index;
  for (std::size_t i = 0; i < perms.size(); ++i) {
    index.emplace(perms[i], static_cast<Element>(i));
  }
  const std::size_t n = perms.size();
  std::vector<Element> t(n * n);
  std::vector<int> composed(k);
  for (std::size_t a = 0; a < n; ++a) {
    for (std::size_t b = 0; b < n; ++b) {
      // (a o b)(x) = a(b(x))
      for (std::size_t x = 0; x < k; ++x) {
        composed[x] = perms[a][static_cast<std::size_t>(perms[b][x])];
      }
      t[a * n + b] = index.at(composed);
    }
  }
  return make_from_table(std::move(t), n);
}

FiniteGroup make_direct_product(const FiniteGroup& a, const FiniteGroup& b) {
  const std::size_t na = a.order(), nb = b.order();
  if (na * nb > kMaxTableOrder) {
    throw GroupError(GroupErrc::order_too_large,
                     "product order " + std::to_string(na * nb) + " > " +
                         std::to_string(kMaxTableOrder));
  }
  const std::size_t n = na * nb;
  std::vector<Element> t(n * n);
  for (std::size_t x = 0; x < n; ++x) {
    for (std::size_t y = 0; y < n; ++y) {
      const Element l = a.op(static_cast<Element>(x / nb), static_cast<Element>(y / nb));
      const Element r = b.op(static_cast<Element>(x % nb), static_cast<Element>(y % nb));
      t[x * n + y] = static_cast<Element>(l * nb + r);
    }
  }
  return make_from_table(std::move(t), n);
}

std::uint64_t element_order(const FiniteGroup& g, Element x) {
  check_element(g, x);
  if (g.kind() == GroupKind::cyclic) {
    return g.order() / std::gcd<std::uint64_t, std::uint64_t>(x, g.order());
  }
  std::uint64_t m = 1;
  for (Element y = x; y != g.identity(); y = g.op(y, x)) ++m;
  return m;
}

bool is_cyclic(const FiniteGroup& g) {
  if (g.kind() == GroupKind::cyclic) return true;
  for (Element x = 0; x < g.order(); ++x) {
    if (element_order(g, x) == g.order()) return true;
  }
  return false;
}

std::vector<Element> generators(const FiniteGroup& g) {
  std::vector<Element> out;
  for (Element x = 0; x < g.order(); ++x) {
    if (element_order(g, x) == g.order()) out.push_back(x);
  }
  return out;
}

std::uint64_t euler_phi(std::uint64_t n) {
  if (n == 0) throw std::domain_error("euler_phi(0) is undefined");
  std::uint64_t result = n;
  for (std::uint64_t p = 2; p * p <= n; ++p) {
    if (n % p != 0) continue;
    while (n % p == 0) n /= p;
    result -= result / p;
  }
  if (n > 1) result -= result / n;
  return result;
}

std::vector<std::vector<Element>> read_cayley_csv(std::istream& in) {
  std::vector<std::vector<Element>> rows;
  std::string line;
  std::size_t line_no = 0;
  while (std::getline(in, line)) {
    ++line_no;
    if (!line.empty() && line.back() == '\r') line.pop_back();
    if (line.find_first_not_of(" \t") == std::string::npos) continue;
    std::vector<Element> row;
    std::stringstream fields(line);
    std::string field;
    while (std::getline(fields, field, ',')) {
      const auto first = field.find_first_not_of(" \t");
      const auto last = field.find_last_not_of(" \t");
      if (first == std::string::npos) {
        throw GroupError(GroupErrc::not_square,
                         "empty field on line " + std::to_string(line_no));
      }
      const std::string_view digits(field.data() + first, last - first + 1);
      Element value = 0;
      const auto [ptr, ec] =
          std::from_chars(digits.data(), digits.data() + digits.size(), value);
      if (ec != std::errc() || ptr != digits.data() + digits.size()) {
        throw GroupError(GroupErrc::entry_out_of_range,
                         "non-integer entry '" + std::string(digits) +
                             "' on line " + std::to_string(line_no));
      }
      row.push_back(value);
    }
    rows.push_back(std::move(row));
  }
  return rows;
}

void write_cayley_csv(std::ostream& out, const FiniteGroup& g) {
  const std::size_t n = g.order();
  for (Element a = 0; a < n; ++a) {
    for (Element b = 0; b < n; ++b) {
      if (b) out << ',';
      out << g.op(a, b);
    }
    out << '\n';
  }
}

namespace {

class SpecParser {
 public:
  explicit SpecParser(std::string_view text) : text_(text) {}

  FiniteGroup parse() {
    FiniteGroup g = parse_spec();
    if (pos_ != text_.size()) fail("unexpected trailing input");
    return g;
  }

 private:
  [[noreturn]] void fail(const std::string& message) const {
    throw SpecParseError(message, pos_);
  }

  bool consume(std::string_view token) {
    if (text_.substr(pos_, token.size()) == token) {
      pos_ += token.size();
      return true;
    }
    return false;
  }

  std::size_t parse_uint() {
    const std::size_t start = pos_;
    std::size_t value = 0;
    const auto [ptr, ec] =
        std::from_chars(text_.data() + pos_, text_.data() + text_.size(), value);
    if (ec == std::errc::result_out_of_range) fail("integer out of range");
    if (ec != std::errc() || ptr == text_.data() + start) fail("expected integer");
    pos_ = static_cast<std::size_t>(ptr - text_.data());
    return value;
  }

  FiniteGroup parse_spec() {
    if (consume("zn:")) return make_cyclic(parse_uint());
    if (consume("klein")) return make_klein();
    if (consume("dihedral:")) return make_dihedral(parse_uint());
    if (consume("sym:")) return make_symmetric(parse_uint());
    if (consume("product:")) {
      FiniteGroup left = parse_spec();
      if (!consume("+")) fail("expected '+' between product factors");
      FiniteGroup right = parse_spec();
      return make_direct_product(left, right);
    }
    if (consume("table:")) {
      const std::size_t end = std::min(text_.find('+', pos_), text_.size());
      const std::string path(text_.substr(pos_, end - pos_));
      if (path.empty()) fail("expected table path");
      std::ifstream in(path);
      if (!in) fail("cannot open table file '" + path + "'");
      pos_ = end;
      return make_from_table(read_cayley_csv(in));
    }
    fail("expected one of zn:, klein, dihedral:, sym:, product:, table:");
  }

  std::string_view text_;
  std::size_t pos_ = 0;
};

}  // namespace

FiniteGroup parse_group_spec(std::string_view text) {
  return SpecParser(text).parse();
}

}  // namespace strongpow
