#include <catch_amalgamated.hpp>

#include <map>
#include <optional>

#include "rookchar/enumerate.hpp"
#include "rookchar/partial_bijection.hpp"

using namespace rookchar;

namespace {

  // A partial map on {1..n} as an explicit table, for checking compose and
  // star against their definitions.
  std::map<point_type, point_type> as_table(PartialBijection const& r, point_type n) {
    std::map<point_type, point_type> t;
    for (point_type x = 1; x <= n; ++x) {
      if (r.is_defined_at(x)) {
        t[x] = r(x);
      }
    }
    return t;
  }

}  // namespace

TEST_CASE("parse image lists and canonical trimming") {
  auto r = parse_element("[2,3,_,4,_]");
  CHECK(r.bound() == 5);
  CHECK(r(1) == 2);
  CHECK(r(3) == undefined_point);
  CHECK(!r.is_defined_at(5));
  CHECK(r(9) == 9);
  CHECK(render(r) == "[2,3,_,4,_]");

  CHECK(parse_element("[1,2,3]") == PartialBijection::identity());
  CHECK(render(parse_element("[2,1,3,4]")) == "[2,1]");
  CHECK(render(PartialBijection()) == "[]");
}

TEST_CASE("parse cycle and idempotent products") {
  CHECK(parse_element("(1 2)") == PartialBijection::transposition(1, 2));
  CHECK(parse_element("e{1,3}") == PartialBijection::idempotent({1, 3}));
  CHECK(parse_element("e") == PartialBijection::identity());
  // (1 2 3) e{3}: 1 -> 2, 2 -> 3, 3 undefined
  CHECK(render(parse_element("(1 2 3)e{3}")) == "[2,3,_]");
  CHECK(render(parse_element(" (1 2) ( 3 4 5 ) ")) == "[2,1,4,5,3]");
}

TEST_CASE("parse errors are reported") {
  CHECK_THROWS_AS(parse_element(""), ParseError);
  CHECK_THROWS_AS(parse_element("[2,2]"), ParseError);
  CHECK_THROWS_AS(parse_element("[3,1]"), ParseError);
  CHECK_THROWS_AS(parse_element("(1 1)"), ParseError);
  CHECK_THROWS_AS(parse_element("(1 2"), ParseError);
  CHECK_THROWS_AS(parse_element("[1,x]"), ParseError);
  CHECK_THROWS_AS(parse_element("(0 1)"), ParseError);
  CHECK_THROWS_AS(parse_element("q"), ParseError);
}

TEST_CASE("compose matches the pointwise definition on R_3") {
  auto const all = enumerate_rn(3);
  for (auto const& a : all) {
    for (auto const& b : all) {
      auto ta = as_table(a, 3);
      auto tb = as_table(b, 3);
      std::map<point_type, point_type> expected;
      for (auto const& [x, y] : tb) {
        if (auto it = ta.find(y); it != ta.end()) {
          expected[x] = it->second;
        }
      }
      CHECK(as_table(compose(a, b), 3) == expected);
    }
  }
}

TEST_CASE("semigroup laws on R_3") {
  auto const all = enumerate_rn(3);
  for (auto const& a : all) {
    CHECK(star(star(a)) == a);
    CHECK(a * star(a) * a == a);
    for (auto const& b : all) {
      CHECK(star(a * b) == star(b) * star(a));
      for (auto const& c : all) {
        CHECK((a * b) * c == a * (b * c));
      }
    }
  }
}

TEST_CASE("support and disjointness") {
  auto r = parse_element("[2,3,_,4,_]");
  CHECK(support(r) == std::vector<point_type>{1, 2, 3, 5});
  CHECK(support(parse_element("e{2}")) == std::vector<point_type>{2});
  CHECK(support(PartialBijection()).empty());
  CHECK(supports_disjoint(parse_element("(1 2)"), parse_element("(3 4)e{3}")));
  CHECK(!supports_disjoint(parse_element("(1 2)"), parse_element("e{2}")));
}

TEST_CASE("domain and range complements") {
  auto r = parse_element("[2,3,_,4,_]");
  CHECK(r.domain_complement() == std::vector<point_type>{3, 5});
  CHECK(r.range_complement() == std::vector<point_type>{1, 5});
  CHECK(!r.is_permutation());
  CHECK(parse_element("(1 3)").is_permutation());
}
