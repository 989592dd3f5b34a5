#include <catch_amalgamated.hpp>

#include <set>

#include "rookchar/enumerate.hpp"

using namespace rookchar;

namespace {

  // Counts injective partial maps by scanning all (n+1)^n total maps into
  // {0 = undefined, 1..n}.
  std::uint64_t brute_force_count(std::size_t n) {
    std::uint64_t total = 1;
    for (std::size_t i = 0; i < n; ++i) {
      total *= n + 1;
    }
    std::uint64_t count = 0;
    for (std::uint64_t code = 0; code < total; ++code) {
      std::uint64_t c = code;
      std::set<std::uint64_t> used;
      bool ok = true;
      for (std::size_t i = 0; i < n && ok; ++i) {
        std::uint64_t y = c % (n + 1);
        c /= n + 1;
        if (y != 0 && !used.insert(y).second) {
          ok = false;
        }
      }
      count += ok ? 1 : 0;
    }
    return count;
  }

  // a(n) = 2n a(n-1) - (n-1)^2 a(n-2)
  std::uint64_t recurrence(std::size_t n) {
    std::int64_t a = 1, b = 2;
    if (n == 0) {
      return 1;
    }
    for (std::size_t k = 2; k <= n; ++k) {
      std::int64_t const c = 2 * std::int64_t(k) * b - std::int64_t((k - 1) * (k - 1)) * a;
      a = b;
      b = c;
    }
    return static_cast<std::uint64_t>(b);
  }

}  // namespace

TEST_CASE("rook monoid sizes") {
  std::vector<std::uint64_t> const expected{1, 2, 7, 34, 209, 1546, 13327, 130922};
  for (std::size_t n = 0; n <= 7; ++n) {
    CHECK(rook_monoid_size(n) == expected[n]);
    CHECK(recurrence(n) == expected[n]);
  }
  for (std::size_t n = 0; n <= 5; ++n) {
    CHECK(brute_force_count(n) == expected[n]);
    CHECK(enumerate_rn(n).size() == expected[n]);
  }
}

TEST_CASE("enumeration has no duplicates and stays in R_n") {
  for (std::size_t n = 0; n <= 4; ++n) {
    auto const all = enumerate_rn(n);
    std::set<PartialBijection> distinct(all.begin(), all.end());
    CHECK(distinct.size() == all.size());
    for (auto const& r : all) {
      CHECK(r.bound() <= n);
    }
  }
}

TEST_CASE("symmetric group enumeration") {
  std::vector<std::size_t> const fact{1, 1, 2, 6, 24, 120};
  for (std::size_t n = 0; n <= 5; ++n) {
    auto const all = enumerate_sn(n);
    CHECK(all.size() == fact[n]);
    for (auto const& s : all) {
      CHECK(s.is_permutation());
    }
  }
}

TEST_CASE("enumeration order is deterministic") {
  auto const r1 = enumerate_rn(1);
  REQUIRE(r1.size() == 2);
  CHECK(render(r1[0]) == "[_]");
  CHECK(r1[1].is_identity());
}

TEST_CASE("degree guard") {
  CHECK_THROWS_AS(enumerate_rn(8), ResourceGuardError);
  CHECK_THROWS_AS(enumerate_sn(9), ResourceGuardError);
}
