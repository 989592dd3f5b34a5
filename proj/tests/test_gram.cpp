#include <catch_amalgamated.hpp>

#include "rookchar/enumerate.hpp"
#include "rookchar/states/gram.hpp"
#include "rookchar/states/state.hpp"
#include "suite_states.hpp"

using namespace rookchar;
using fixtures::q;

TEST_CASE("small Gram matrices") {
  auto const f = make_state({{{q(1, 2), q(1, 3)}, {q(1, 6)}}, Mark{1, q(1, 2)}});
  auto const g = gram_matrix(f, {PartialBijection(), parse_element("e{1}")});
  CHECK(g.matrix == RationalMatrix{{1, q(1, 4)}, {q(1, 4), q(1, 4)}});
  CHECK(g.certificate.is_psd());

  auto const one = gram_matrix(f, {PartialBijection()});
  CHECK(one.matrix == RationalMatrix{{1}});
  CHECK(one.certificate.is_psd());

  CHECK_THROWS_AS(gram_matrix(f, {PartialBijection(), PartialBijection()}), std::invalid_argument);
}

TEST_CASE("ordering conventions") {
  auto const f     = make_state({{{q(1, 2), q(1, 3)}, {q(1, 6)}}, Mark{1, q(1, 2)}});
  auto const elems = std::vector<PartialBijection>{parse_element("[2,_]"), parse_element("e{2}")};
  auto const a     = gram_matrix(f, elems, GramOrdering::star_j_i);
  auto const b     = gram_matrix(f, elems, GramOrdering::i_star_j);
  // entry (0, 1): f(e{2}* [2,_]) vs f([2,_] e{2}*)
  CHECK(a.matrix(0, 1) == f(compose(parse_element("e{2}"), parse_element("[2,_]"))));
  CHECK(b.matrix(0, 1) == f(compose(parse_element("[2,_]"), parse_element("e{2}"))));
  CHECK(parse_gram_ordering("starJI") == GramOrdering::star_j_i);
  CHECK(parse_gram_ordering("iStarJ") == GramOrdering::i_star_j);
  CHECK_THROWS(parse_gram_ordering("other"));
}

TEST_CASE("full R_3 Gram matrices are PSD for every suite state") {
  auto const r3 = enumerate_rn(3);
  for (auto const& [name, spec] : fixtures::suite_states()) {
    INFO(name);
    auto const f = make_state(spec);
    for (auto ordering : {GramOrdering::star_j_i, GramOrdering::i_star_j}) {
      auto const g = gram_matrix(f, r3, ordering);
      REQUIRE(g.matrix.size() == 34);
      CHECK(g.certificate.is_psd());
      CHECK(reconstruct(g.certificate) == permuted(g.matrix, g.certificate.permutation));
    }
  }
}

TEST_CASE("a non-state function is refuted with a witness") {
  // f(e) = 1, f(anything else) = -1 is symmetric but not positive definite
  auto bad = [](PartialBijection const& r) { return r.is_identity() ? Rational(1) : Rational(-1); };
  auto const g = gram_matrix(bad, enumerate_rn(2));
  CHECK(!g.certificate.is_psd());
  CHECK(g.certificate.witness_value < 0);
  CHECK(quadratic_form(g.matrix, g.certificate.witness) == g.certificate.witness_value);
}

TEST_CASE("asymmetric Gram matrix is reported as not PSD") {
  auto skew = [](PartialBijection const& r) { return r(1) == 2 ? Rational(1) : Rational(0); };
  auto const g = gram_matrix(skew, enumerate_rn(2));
  CHECK(!g.certificate.is_psd());
  CHECK(g.note == "matrix is not symmetric");
}
