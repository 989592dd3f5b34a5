#pragma once

// Closed-form values of phi_A. On a cycle (1 2 ... k) marked by e_A,
// A = {a_1 < ... < a_j}:
//
//   phi_A = Tr(q A^(a_2 - a_1)) ... Tr(q A^(a_j - a_(j-1)))
//           * Tr(q A^(k - a_j + a_1 - 1) |A|),
//
// and an unmarked k-cycle gives Tr(A^(k-1) |A|). Values on general
// elements multiply over the quasi-cycle decomposition. With v squared
// everything stays rational.

#include <algorithm>
#include <cstddef>
#include <stdexcept>
#include <vector>

#include "../partial_bijection.hpp"
#include "../quasi_cycle.hpp"
#include "../rational.hpp"
#include "model_params.hpp"

namespace rookchar {

  // Tr(q A^m) = <A^m v, v>
  inline Rational trace_q_power(ModelParams const& p, unsigned m) {
    Rational total = 0;
    for (std::size_t c = 0; c < p.d(); ++c) {
      total += p.v[c].square() * pow(p.a_diag[c], m);
    }
    return total;
  }

  // Tr(q A^m |A|)
  inline Rational trace_q_power_abs(ModelParams const& p, unsigned m) {
    Rational total = 0;
    for (std::size_t c = 0; c < p.d(); ++c) {
      total += p.v[c].square() * pow(p.a_diag[c], m) * abs(p.a_diag[c]);
    }
    return total;
  }

  // Tr(A^m |A|)
  inline Rational trace_power_abs(ModelParams const& p, unsigned m) {
    Rational total = 0;
    for (auto const& a : p.a_diag) {
      total += pow(a, m) * abs(a);
    }
    return total;
  }

  // phi_A((1 2 ... k) e_A) for 1-based marked positions A within the cycle.
  // An unmarked 1-cycle is a fixed point and contributes 1.
  inline Rational phi_marked_cycle(ModelParams const& p,
                                   unsigned          k,
                                   std::vector<unsigned> positions) {
    if (k == 0) {
      throw std::invalid_argument("phi_marked_cycle: cycle length must be >= 1");
    }
    std::sort(positions.begin(), positions.end());
    if (positions.empty()) {
      if (k == 1) {
        return 1;
      }
      return trace_power_abs(p, k - 1);
    }
    if (positions.front() < 1 || positions.back() > k
        || std::adjacent_find(positions.begin(), positions.end()) != positions.end()) {
      throw std::invalid_argument("phi_marked_cycle: positions must be distinct in 1..k");
    }
    Rational value = 1;
    for (std::size_t i = 0; i + 1 < positions.size(); ++i) {
      value *= trace_q_power(p, positions[i + 1] - positions[i]);
    }
    value *= trace_q_power_abs(p, k - positions.back() + positions.front() - 1);
    return value;
  }

  inline Rational phi_closed_form(ModelParams const& p, PartialBijection const& r) {
    require_valid(p);
    Rational value = 1;
    for (auto const& part : quasicycle_decompose(r).parts) {
      auto const len = static_cast<unsigned>(part.orbit.size());
      switch (part.kind) {
        case QuasiCycleKind::plain_cycle:
          value *= phi_marked_cycle(p, len, {});
          break;
        case QuasiCycleKind::nontrivial:
          // c = (o_1 ... o_L) with the killed point o_L in position L.
          value *= phi_marked_cycle(p, len, {len});
          break;
        case QuasiCycleKind::trivial:
          value *= phi_marked_cycle(p, 1, {1});
          break;
      }
    }
    return value;
  }

}  // namespace rookchar
