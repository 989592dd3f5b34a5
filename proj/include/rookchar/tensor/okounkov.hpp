#pragma once

// Okounkov operators in the product model. For test vectors x, y the
// matrix elements s_n = psi(T(y)* T((k n)) T(x)) should, once n leaves the
// supports, equal psi(T(y)* A^(k) T(x)) exactly: the limit operator is A
// acting on slot k.

#include <algorithm>
#include <cmath>
#include <cstddef>
#include <string>
#include <vector>

#include "../partial_bijection.hpp"
#include "product_model.hpp"

namespace rookchar {

  struct OkounkovRow {
    std::size_t n         = 0;
    double      value     = 0.0;
    double      deviation = 0.0;
  };

  struct OkounkovReport {
    std::size_t              k = 1;
    PartialBijection         x, y;
    double                   target        = 0.0;
    double                   max_deviation = 0.0;
    std::vector<OkounkovRow> rows;

    bool stable(double tol = 1e-12) const {
      return !rows.empty() && max_deviation <= tol;
    }
  };

  inline OperatorProgram slot_operator(SlotModel const& m, std::size_t k) {
    return {SlotOp::diagonal(k - 1, m.a)};
  }

  // psi(T(y)* B T(x)) with B given as a program
  inline double sandwich(SlotModel const&        m,
                         PartialBijection const& x,
                         OperatorProgram const&  middle,
                         PartialBijection const& y) {
    OperatorProgram prog = program_for(x);
    append(prog, middle);
    append(prog, program_for(star(y)));
    return expectation(m, prog);
  }

  inline OkounkovReport okounkov_check(SlotModel const&        m,
                                       std::size_t             k,
                                       PartialBijection const& x,
                                       PartialBijection const& y) {
    std::size_t const N = m.slots;
    if (k < 1 || k + 1 > N || x.bound() + 1 > N || y.bound() + 1 > N) {
      throw SupportError("okounkov_check needs k and the supports of x, y within 1.."
                         + std::to_string(N - 1));
    }
    OkounkovReport report;
    report.k      = k;
    report.x      = x;
    report.y      = y;
    report.target = sandwich(m, x, slot_operator(m, k), y);

    auto sx = support(x);
    auto sy = support(y);
    for (std::size_t n = 1; n <= N; ++n) {
      auto const pn = static_cast<point_type>(n);
      if (n == k || std::binary_search(sx.begin(), sx.end(), pn)
          || std::binary_search(sy.begin(), sy.end(), pn)) {
        continue;
      }
      auto const   t = PartialBijection::transposition(static_cast<point_type>(k), pn);
      double const s = sandwich(m, x, program_for(t), y);
      double const dev = std::abs(s - report.target);
      report.rows.push_back({n, s, dev});
      report.max_deviation = std::max(report.max_deviation, dev);
    }
    return report;
  }

  inline OkounkovReport okounkov_check(ModelParams const&      p,
                                       std::size_t             k,
                                       PartialBijection const& x,
                                       PartialBijection const& y,
                                       ModelOptions const&     opts = {}) {
    return okounkov_check(build_slot_model(p, opts), k, x, y);
  }

  // Largest |<P^2 x, y> - <P x, y>| over test vectors, P the limit operator
  // on slot k. Zero exactly when A is a projection.
  inline double projection_law_defect(SlotModel const&                     m,
                                      std::size_t                          k,
                                      std::vector<PartialBijection> const& tests) {
    OperatorProgram once  = slot_operator(m, k);
    OperatorProgram twice = once;
    append(twice, once);
    double worst = 0.0;
    for (auto const& x : tests) {
      for (auto const& y : tests) {
        worst = std::max(worst, std::abs(sandwich(m, x, twice, y) - sandwich(m, x, once, y)));
      }
    }
    return worst;
  }

}  // namespace rookchar
