#pragma once

#include <cstddef>
#include <cstdint>
#include <iosfwd>
#include <stdexcept>
#include <string>
#include <string_view>
#include <vector>

namespace strongpow {

using Element = std::uint32_t;

enum class GroupErrc {
  invalid_order,
  order_too_large,
  not_square,
  entry_out_of_range,
  not_latin_square,
  no_identity,
  missing_inverse,
  not_associative,
  bad_element,
};

const char* to_string(GroupErrc code);

class GroupError : public std::invalid_argument {
 public:
  GroupError(GroupErrc code, const std::string& detail)
      : std::invalid_argument(std::string(to_string(code)) + ": " + detail),
        code_(code) {}
  GroupErrc code() const noexcept { return code_; }

 private:
  GroupErrc code_;
};

// Largest order for which an explicit Cayley table is stored.
inline constexpr std::size_t kMaxTableOrder = 4096;

// Orders at or below this are checked for associativity exhaustively.
inline constexpr std::size_t kExhaustiveAssociativityLimit = 64;

enum class GroupKind { cyclic, table };

// A finite group on the element indices [0, n). Cyclic groups are implicit
// (addition modulo n, identity 0) and have no order limit; every other group
// carries a validated n x n Cayley table. Immutable after construction.
class FiniteGroup {
 public:
  std::size_t order() const noexcept { return n_; }
  GroupKind kind() const noexcept { return kind_; }
  Element identity() const noexcept { return identity_; }

  Element op(Element a, Element b) const {
    if (kind_ == GroupKind::cyclic) {
      const std::uint64_t s = std::uint64_t{a} + b;
      return static_cast<Element>(s >= n_ ? s - n_ : s);
    }
    return table_[std::size_t{a} * n_ + b];
  }

  Element inverse(Element x) const;

  // x^k for k >= 0.
  Element pow(Element x, std::uint64_t k) const;

  // Row-major table; empty for implicit cyclic groups.
  const std::vector<Element>& table() const noexcept { return table_; }

 private:
  friend FiniteGroup make_cyclic(std::size_t n);
  friend FiniteGroup make_from_table(std::vector<Element> table,
                                     std::size_t n, bool force_exhaustive);

  std::size_t n_ = 1;
  GroupKind kind_ = GroupKind::cyclic;
  Element identity_ = 0;
  std::vector<Element> table_;
  std::vector<Element> inverses_;
};

FiniteGroup make_cyclic(std::size_t n);

// Validates a row-major n x n Cayley table. Associativity is checked
// exhaustively up to kExhaustiveAssociativityLimit and on 10 n^2 seeded random
// triples above that, unless force_exhaustive is set.
FiniteGroup make_from_table(std::vector<Element> table, std::size_t n,
                            bool force_exhaustive = false);
FiniteGroup make_from_table(const std::vector<std::vector<Element>>& rows,
                            bool force_exhaustive = false);

FiniteGroup make_klein();
FiniteGroup make_dihedral(std::size_t k);
FiniteGroup make_symmetric(std::size_t k);
FiniteGroup make_direct_product(const FiniteGroup& a, const FiniteGroup& b);

std::uint64_t element_order(const FiniteGroup& g, Element x);
bool is_cyclic(const FiniteGroup& g);
std::vector<Element> generators(const FiniteGroup& g);

std::uint64_t euler_phi(std::uint64_t n);

// Reads a Cayley table from CSV: n lines of n comma-separated indices.
std::vector<std::vector<Element>> read_cayley_csv(std::istream& in);
void write_cayley_csv(std::ostream& out, const FiniteGroup& g);

class SpecParseError : public std::invalid_argument {
 public:
  SpecParseError(const std::string& message, std::size_t position)
      : std::invalid_argument(message + " at position " +
                              std::to_string(position)),
        position_(position) {}
  std::size_t position() const noexcept { return position_; }

 private:
  std::size_t position_;
};

// Group spec grammar, prefix form so products nest without brackets:
//   spec := "zn:" int | "klein" | "dihedral:" int | "sym:" int
//         | "product:" spec "+" spec | "table:" path
// A table path extends to the next '+' or the end of the text.
FiniteGroup parse_group_spec(std::string_view text);

}  // namespace strongpow
