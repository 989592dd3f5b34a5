#pragma once

// Exhaustive property suites over R_n for any function f: R_n -> Q.
// Each takes the function as a callable so test fixtures can feed in
// deliberately broken evaluators.

#include <cstddef>
#include <string>
#include <vector>

#include "../enumerate.hpp"
#include "../partial_bijection.hpp"
#include "../rational.hpp"
#include "../report.hpp"

namespace rookchar {

  // f(rs) = f(sr) for r in R_n, s in S_n.
  template <typename Function>
  SuiteReport check_centrality(Function&& f, std::size_t n) {
    SuiteReport report;
    report.name    = "centrality";
    auto const rn  = enumerate_rn(n);
    auto const sn  = enumerate_sn(n);
    for (auto const& r : rn) {
      for (auto const& s : sn) {
        Rational lhs = f(compose(r, s));
        Rational rhs = f(compose(s, r));
        report.record_lazy(lhs == rhs, [&] {
          return "f(rs) = " + lhs.get_str() + " != f(sr) = " + rhs.get_str()
                 + " for r = " + render(r) + ", s = " + render(s);
        });
      }
    }
    return report;
  }

  // f(s r s^-1) = f(r) for r in R_n, s in S_n.
  template <typename Function>
  SuiteReport check_conjugation_invariance(Function&& f, std::size_t n) {
    SuiteReport report;
    report.name   = "conjugation";
    auto const rn = enumerate_rn(n);
    auto const sn = enumerate_sn(n);
    for (auto const& r : rn) {
      Rational const base = f(r);
      for (auto const& s : sn) {
        Rational conj = f(compose(compose(s, r), star(s)));
        report.record_lazy(conj == base, [&] {
          return "f(s r s^-1) = " + conj.get_str() + " != f(r) = " + base.get_str()
                 + " for r = " + render(r) + ", s = " + render(s);
        });
      }
    }
    return report;
  }

  // f(r1 r2) = f(r1) f(r2) whenever supp r1 and supp r2 are disjoint.
  template <typename Function>
  SuiteReport check_multiplicativity(Function&& f, std::size_t n) {
    SuiteReport report;
    report.name   = "multiplicativity";
    auto const rn = enumerate_rn(n);
    std::vector<Rational> values;
    values.reserve(rn.size());
    for (auto const& r : rn) {
      values.push_back(f(r));
    }
    for (std::size_t i = 0; i < rn.size(); ++i) {
      for (std::size_t j = 0; j < rn.size(); ++j) {
        if (!supports_disjoint(rn[i], rn[j])) {
          continue;
        }
        Rational lhs = f(compose(rn[i], rn[j]));
        Rational rhs = values[i] * values[j];
        report.record_lazy(lhs == rhs, [&] {
          return "f(r1 r2) = " + lhs.get_str() + " != f(r1) f(r2) = " + rhs.get_str()
                 + " for r1 = " + render(rn[i]) + ", r2 = " + render(rn[j]);
        });
      }
    }
    return report;
  }

  // f(r^*) = f(r).
  template <typename Function>
  SuiteReport check_star_symmetry(Function&& f, std::size_t n) {
    SuiteReport report;
    report.name = "star";
    for_each_rn(n, [&](PartialBijection const& r) {
      Rational a = f(r);
      Rational b = f(star(r));
      report.record_lazy(a == b, [&] {
        return "f(r) = " + a.get_str() + " != f(r*) = " + b.get_str() + " for r = " + render(r);
      });
    });
    return report;
  }

}  // namespace rookchar
