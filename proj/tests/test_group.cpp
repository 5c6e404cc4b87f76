#include "doctest.h"

#include <fstream>
#include <numeric>
#include <sstream>

#include "oracles.hpp"
#include "strongpow/group.hpp"
#include "strongpow/verify.hpp"

using namespace strongpow;

namespace {

GroupErrc table_error(const std::vector<std::vector<Element>>& rows) {
  try {
    make_from_table(rows);
  } catch (const GroupError& e) {
    return e.code();
  }
  FAIL("table was accepted");
  return GroupErrc::bad_element;
}

FiniteGroup quaternion() {
  std::ifstream in(std::string(TEST_DATA_DIR) + "/quaternion.csv");
  REQUIRE(in);
  return make_from_table(read_cayley_csv(in));
}

}  // namespace

TEST_CASE("cyclic groups") {
  const auto z1 = make_cyclic(1);
  CHECK(z1.order() == 1);
  CHECK(z1.identity() == 0);
  CHECK(make_cyclic(4).op(3, 3) == 2);
  CHECK(element_order(make_cyclic(6), 2) == 3);
  CHECK(generators(make_cyclic(6)) == std::vector<Element>{1, 5});
  CHECK(generators(z1) == std::vector<Element>{0});
  CHECK(is_cyclic(z1));
  CHECK_THROWS_AS(make_cyclic(0), GroupError);

  const auto big = make_cyclic(1'000'003);
  CHECK(big.kind() == GroupKind::cyclic);
  CHECK(big.table().empty());
  CHECK(big.inverse(1) == 1'000'002);
}

TEST_CASE("euler phi") {
  CHECK(euler_phi(1) == 1);
  CHECK(euler_phi(12) == 4);
  CHECK(euler_phi(7) == 6);
  CHECK(euler_phi(9) == 6);
  for (std::size_t n = 1; n <= 200; ++n) CHECK(euler_phi(n) == oracle::euler_phi(n));
}

TEST_CASE("table validation names each failure") {
  const auto klein = make_from_table({{0, 1, 2, 3}, {1, 0, 3, 2}, {2, 3, 0, 1}, {3, 2, 1, 0}});
  CHECK(klein.identity() == 0);
  CHECK_FALSE(is_cyclic(klein));
  CHECK(element_order(klein, 1) == 2);

  CHECK(table_error({{0, 1}, {1, 1}}) == GroupErrc::not_latin_square);
  CHECK(table_error({{0, 1}, {1}}) == GroupErrc::not_square);
  CHECK(table_error({{0, 2}, {2, 0}}) == GroupErrc::entry_out_of_range);
  // Latin square without an identity element.
  CHECK(table_error({{1, 0, 2}, {0, 2, 1}, {2, 1, 0}}) == GroupErrc::no_identity);
  // Loop of order 5 with identity and inverses but no associativity.
  CHECK(table_error({{0, 1, 2, 3, 4},
                     {1, 0, 3, 4, 2},
                     {2, 4, 0, 1, 3},
                     {3, 2, 4, 0, 1},
                     {4, 3, 1, 2, 0}}) == GroupErrc::not_associative);
  CHECK_THROWS_AS(make_from_table(std::vector<std::vector<Element>>{}), GroupError);
}

TEST_CASE("named constructors") {
  const auto s3 = make_symmetric(3);
  CHECK(s3.order() == 6);
  CHECK_FALSE(is_cyclic(s3));
  CHECK(make_symmetric(5).order() == 120);
  CHECK_THROWS_AS(make_symmetric(6), GroupError);

  const auto d2 = make_dihedral(2);
  CHECK(d2.order() == 4);
  CHECK_FALSE(is_cyclic(d2));
  for (Element x = 0; x < 4; ++x) CHECK(element_order(d2, x) <= 2);

  CHECK(is_cyclic(make_direct_product(make_cyclic(2), make_cyclic(3))));
  CHECK_THROWS_AS(make_direct_product(make_cyclic(100), make_cyclic(100)), GroupError);

  // S_3 round trips through its own CSV table.
  std::stringstream csv;
  write_cayley_csv(csv, s3);
  const auto again = make_from_table(read_cayley_csv(csv));
  CHECK(again.table() == s3.table());
  CHECK_FALSE(is_cyclic(again));
}

TEST_CASE("quaternion group from CSV") {
  const auto q8 = quaternion();
  CHECK(q8.order() == 8);
  CHECK_FALSE(is_cyclic(q8));
  std::vector<std::uint64_t> orders;
  for (Element x = 0; x < 8; ++x) orders.push_back(element_order(q8, x));
  CHECK(orders == std::vector<std::uint64_t>{1, 2, 4, 4, 4, 4, 4, 4});
}

TEST_CASE("group spec grammar") {
  CHECK(parse_group_spec("zn:12").order() == 12);
  CHECK(parse_group_spec("klein").order() == 4);
  CHECK(parse_group_spec("dihedral:4").order() == 8);
  CHECK(parse_group_spec("sym:4").order() == 24);
  CHECK(parse_group_spec("product:zn:2+product:zn:2+zn:2").order() == 8);
  CHECK(parse_group_spec("table:" + std::string(TEST_DATA_DIR) + "/quaternion.csv").order() == 8);
  CHECK(parse_group_spec("product:table:" + std::string(TEST_DATA_DIR) +
                         "/quaternion.csv+zn:3").order() == 24);

  for (const char* bad : {"", "zn:", "zn:x", "zn:4x", "cyclic:4", "product:zn:2", "klein+"}) {
    CAPTURE(bad);
    CHECK_THROWS_AS(parse_group_spec(bad), SpecParseError);
  }
  try {
    parse_group_spec("product:zn:2*zn:3");
  } catch (const SpecParseError& e) {
    CHECK(e.position() == 12);
  }
  CHECK_THROWS_AS(parse_group_spec("zn:0"), GroupError);
}

TEST_CASE("associativity check above the exhaustive limit") {
  // Z_70 as a table: sampled check accepts it; forcing the exhaustive pass
  // must agree.
  const std::size_t n = 70;
  std::vector<Element> table(n * n);
  for (std::size_t a = 0; a < n; ++a)
    for (std::size_t b = 0; b < n; ++b) table[a * n + b] = static_cast<Element>((a + b) % n);
  CHECK(make_from_table(table, n).order() == n);
  CHECK(make_from_table(table, n, true).order() == n);
}

TEST_CASE("property: element orders and generators across the corpus") {
  for (const auto& [spec, g] : corpus_groups()) {
    CAPTURE(spec);
    const auto n = g.order();
    std::size_t full_order = 0;
    for (Element x = 0; x < n; ++x) {
      const auto ord = element_order(g, x);
      CHECK(ord == oracle::element_order(g, x));
      CHECK(n % ord == 0);
      CHECK(g.op(x, g.inverse(x)) == g.identity());
      full_order += ord == n;
    }
    CHECK(is_cyclic(g) == (full_order > 0));
    if (is_cyclic(g)) CHECK(generators(g).size() == euler_phi(n));
    else CHECK(generators(g).empty());
  }
}

TEST_CASE("property: Z_a x Z_b is cyclic iff gcd(a, b) = 1") {
  for (std::size_t a = 1; a <= 12; ++a) {
    for (std::size_t b = 1; b <= 12; ++b) {
      CAPTURE(a);
      CAPTURE(b);
      const auto g = make_direct_product(make_cyclic(a), make_cyclic(b));
      CHECK(is_cyclic(g) == (std::gcd(a, b) == 1));
    }
  }
}
