#include <catch_amalgamated.hpp>

#include <cmath>

#include "rookchar/enumerate.hpp"
#include "rookchar/tensor/spherical.hpp"

using namespace rookchar;

namespace {

  Rational binomial(std::size_t n, std::size_t k) {
    if (k > n) {
      return 0;
    }
    mpz_class b;
    mpz_bin_uiui(b.get_mpz_t(), n, k);
    return Rational(b);
  }

  // #{A : #A = l, B subset of A} / C(n, l)
  Rational containment_ratio(std::size_t n, std::size_t l, std::size_t b) {
    if (b > l) {
      return 0;
    }
    return binomial(n - b, l - b) / binomial(n, l);
  }

  PartialBijection idempotent_from_mask(unsigned mask) {
    std::vector<point_type> killed;
    for (point_type x = 1; mask != 0; ++x, mask >>= 1) {
      if (mask & 1U) {
        killed.push_back(x);
      }
    }
    return PartialBijection::idempotent(killed);
  }

}  // namespace

TEST_CASE("spherical coefficient examples") {
  SphericalModel const m{4, 2, 0};
  CHECK(spherical_coeff(m, parse_element("e{1}")) == Rational(1, 2));
  CHECK(spherical_coeff(m, parse_element("e{1,2}")) == Rational(1, 6));
  CHECK(spherical_coeff(m, parse_element("e{1,2,3}")) == 0);
  CHECK(spherical_coeff(m, PartialBijection()) == 1);
}

TEST_CASE("explicit coefficients match the falling-factorial formula for n <= 6") {
  std::size_t cases = 0;
  for (std::size_t n = 0; n <= 6; ++n) {
    for (std::size_t l = 0; l <= n; ++l) {
      for (unsigned mask = 0; mask < (1U << n); ++mask) {
        auto const r = idempotent_from_mask(mask);
        auto const b = static_cast<std::size_t>(__builtin_popcount(mask));
        Rational const explicit_value = spherical_coeff({n, l, 0}, r);
        REQUIRE(explicit_value == spherical_formula(n, l, b));
        REQUIRE(explicit_value == containment_ratio(n, l, b));
        ++cases;
      }
    }
  }
  CHECK(cases == 1 + 2 * 2 + 3 * 4 + 4 * 8 + 5 * 16 + 6 * 32 + 7 * 64);
}

TEST_CASE("coefficients depend only on the number of undefined points") {
  for (std::size_t l = 0; l <= 4; ++l) {
    for_each_rn(4, [&](PartialBijection const& r) {
      REQUIRE(spherical_coeff({4, l, 0}, r) == spherical_formula(4, l, undefined_count(r)));
    });
  }
}

TEST_CASE("infinite model by slot computation") {
  double const kappa = 0.6;
  auto const [u, w]  = spherical_vectors(kappa);
  CHECK(spherical_infinite_value(u, w, parse_element("e{1}")) == Catch::Approx(kappa * kappa));
  CHECK(spherical_infinite_value(u, w, parse_element("(1 2)e{1}")) == Catch::Approx(kappa * kappa));
  CHECK(spherical_infinite_value(u, w, parse_element("(1 2 3)")) == Catch::Approx(1.0));
  for_each_rn(4, [&](PartialBijection const& r) {
    double const expected = std::pow(kappa, 2.0 * static_cast<double>(undefined_count(r)));
    REQUIRE(spherical_infinite_value(u, w, r) == Catch::Approx(expected).margin(1e-14));
  });
  CHECK_THROWS(spherical_infinite_value({1.0, 1.0}, w, PartialBijection()));
}

TEST_CASE("slot values depend on (u, w) only through |(u, w)|") {
  double const kappa = 0.35;
  double const perp  = std::sqrt(1 - kappa * kappa);
  double const c = std::cos(0.7), s = std::sin(0.7);
  // (u, w) pairs in R^3 with inner product +kappa or -kappa
  std::vector<std::pair<std::vector<double>, std::vector<double>>> variants{
      {{kappa, perp, 0.0}, {1.0, 0.0, 0.0}},
      {{-kappa, -perp, 0.0}, {1.0, 0.0, 0.0}},
      {{kappa, 0.0, perp}, {-1.0, 0.0, 0.0}},
      {{0.0, kappa * c - perp * s, kappa * s + perp * c}, {0.0, c, s}},
  };
  auto const all = enumerate_rn(4);
  for (auto const& r : all) {
    double const base = spherical_infinite_value(variants[0].first, variants[0].second, r);
    for (auto const& [u, w] : variants) {
      REQUIRE(spherical_infinite_value(u, w, r) == Catch::Approx(base).margin(1e-14));
    }
  }
}

TEST_CASE("limit check reports both scalings") {
  auto const report = spherical_limit_check(Rational(1, 2), parse_element("e{1}"), default_limit_sizes());
  CHECK(report.undefined == 1);
  CHECK(report.infinite_exact == Rational(1, 4));
  CHECK(report.infinite_value == Catch::Approx(0.25));
  REQUIRE(report.rows.size() == 5);
  auto const& last = report.rows.back();
  CHECK(last.n == 200);
  CHECK(last.l_kappa == 100);
  CHECK(last.l_kappa2 == 50);
  CHECK(last.value_kappa == Rational(1, 2));
  CHECK(last.value_kappa2 == Rational(1, 4));
  CHECK(last.error_kappa2 < 0.02);
  CHECK(last.error_kappa > 0.2);
  CHECK(report.converging() == "kappa^2");

  auto const two = spherical_limit_check(Rational(2, 3), parse_element("(1 3)e{1,2}"), {50, 200});
  CHECK(two.undefined == 2);
  CHECK(two.rows.back().error_kappa2 < 0.02);
  CHECK(!two.kappa_converges());

  auto const edge = spherical_limit_check(Rational(1), parse_element("e{1}"), {200});
  CHECK(edge.converging() == "both");
}

TEST_CASE("rounding and guards") {
  CHECK(round_scaled(Rational(1, 2), 5) == 3);
  CHECK(round_scaled(Rational(1, 3), 200) == 67);
  CHECK(round_scaled(Rational(0), 7) == 0);
  CHECK_THROWS_AS(spherical_coeff({2, 1, 0}, parse_element("e{3}")), SupportError);
  CHECK_THROWS(spherical_coeff({2, 3, 0}, PartialBijection()));
  CHECK_THROWS(spherical_formula(2, 1, 3));
  CHECK_THROWS(spherical_limit_check(Rational(3, 2), PartialBijection(), {10}));
}
