#include <catch_amalgamated.hpp>

#include "rookchar/algebra.hpp"
#include "rookchar/enumerate.hpp"

using namespace rookchar;

TEST_CASE("formal sums drop zero coefficients") {
  auto const a = parse_element("(1 2)");
  FormalSum x(a, Rational(1, 2));
  x.add(a, Rational(-1, 2));
  CHECK(x.is_zero());
  CHECK(render(x) == "0");

  FormalSum y(a, 2);
  y += FormalSum(PartialBijection(), 3);
  CHECK(y.coefficient(a) == 2);
  CHECK(y.coefficient(PartialBijection()) == 3);
  CHECK(y.coefficient(parse_element("e{1}")) == 0);
  CHECK((y - y).is_zero());
  CHECK(Rational(2) * y == y + y);
}

TEST_CASE("algebra product is bilinear and follows composition") {
  auto const s = parse_element("(1 2)");
  auto const e = parse_element("e{1}");
  FormalSum const x = FormalSum(s) + FormalSum(e, 2);
  FormalSum const y = FormalSum(e) - FormalSum(PartialBijection());

  FormalSum expected;
  expected.add(s * e, 1);
  expected.add(s, -1);
  expected.add(e * e, 2);
  expected.add(e, -2);
  CHECK(x * y == expected);
  CHECK(FormalSum(s) * FormalSum(s) == FormalSum(PartialBijection()));
}

TEST_CASE("the algebra of R_3 is not commutative") {
  auto const a = FormalSum(parse_element("(1 2)"));
  auto const b = FormalSum(parse_element("(2 3)"));
  CHECK(!(a * b == b * a));
}

TEST_CASE("symmetrizer is a central idempotent of the group part") {
  for (std::size_t n = 1; n <= 4; ++n) {
    auto const p = symmetrizer(n);
    CHECK(p * p == p);
    for_each_sn(n, [&](PartialBijection const& s) {
      CHECK(FormalSum(s) * p == p);
      CHECK(p * FormalSum(s) == p);
    });
  }
}

TEST_CASE("Gelfand pair commutativity for n <= 3") {
  for (std::size_t n = 1; n <= 3; ++n) {
    auto const report = verify_gelfand_pair(n);
    INFO(report.summary());
    CHECK(report.passed());
    auto const m = rook_monoid_size(n);
    CHECK(report.checked == m * (m - 1) / 2);
  }
}
