#pragma once

// Parameters of the product-state realization phi_A: a self-adjoint A of
// trace norm <= 1 stored by its eigenvalues, a unit vector v spanning the
// minimal projection q, and the block H_reg of "regular" kernel
// coordinates.

#include <algorithm>
#include <cstddef>
#include <set>
#include <stdexcept>
#include <string>
#include <vector>

#include "../rational.hpp"
#include "../states/state.hpp"

namespace rookchar {

  struct ModelParams {
    std::vector<Rational>     a_diag;   // eigenvalues of A, in [-1, 1]
    std::vector<SqrtRational> v;        // q = |v><v|; all-zero means q = 0
    std::vector<std::size_t>  regular;  // 1-based coordinates of H_reg
    std::size_t               N = 1;    // number of tensor slots

    std::size_t d() const noexcept {
      return a_diag.size();
    }

    Rational trace_abs() const {
      Rational total = 0;
      for (auto const& a : a_diag) {
        total += abs(a);
      }
      return total;
    }

    bool is_regular(std::size_t coordinate) const {
      return std::find(regular.begin(), regular.end(), coordinate + 1) != regular.end();
    }

    bool q_is_zero() const {
      return std::all_of(v.begin(), v.end(), [](auto const& x) { return x.is_zero(); });
    }
  };

  struct ConditionCheck {
    std::string label;
    bool        passed = true;
    std::string message;
  };

  struct ParamsReport {
    std::vector<ConditionCheck> checks;

    bool passed() const {
      return std::all_of(
          checks.begin(), checks.end(), [](auto const& c) { return c.passed; });
    }

    bool passed(std::string const& label) const {
      for (auto const& c : checks) {
        if (c.label == label) {
          return c.passed;
        }
      }
      return true;
    }

    std::string failures() const {
      std::string out;
      for (auto const& c : checks) {
        if (!c.passed) {
          out += (out.empty() ? "" : "; ") + c.label + ": " + c.message;
        }
      }
      return out;
    }
  };

  class InvalidParams : public std::invalid_argument {
   public:
    using std::invalid_argument::invalid_argument;
  };

  // Conditions (a)-(f) on (A, q, H_reg), plus shape checks. Condition (d)
  // asks for an infinite-dimensional H_reg; at finite size it is read as
  // "H_reg is nonempty", the product model supplying one regular basis
  // vector per slot.
  inline ParamsReport validate_params(ModelParams const& p) {
    ParamsReport report;
    auto add = [&](std::string label, bool ok, std::string message) {
      report.checks.push_back({std::move(label), ok, ok ? std::string() : std::move(message)});
    };
    std::size_t const d = p.d();

    bool shape_ok = d > 0 && p.v.size() == d && p.N >= 1;
    std::string shape_msg = "need d >= 1, |v| = d and N >= 1";
    std::set<std::size_t> reg_seen;
    for (auto c : p.regular) {
      if (c < 1 || c > d || !reg_seen.insert(c).second) {
        shape_ok  = false;
        shape_msg = "regular coordinates must be distinct and lie in 1..d";
      }
    }
    add("shape", shape_ok, shape_msg);
    if (!shape_ok) {
      return report;
    }

    bool in_range = std::all_of(p.a_diag.begin(), p.a_diag.end(), [](auto const& a) {
      return a >= -1 && a <= 1;
    });
    add("spectrum", in_range, "eigenvalues must lie in [-1, 1]");

    Rational const tr = p.trace_abs();
    add("a", tr <= 1, "Tr|A| = " + tr.get_str() + " exceeds 1");

    Rational norm2 = 0;
    for (auto const& x : p.v) {
      norm2 += x.square();
    }
    add("b", p.q_is_zero() || norm2 == 1, "Tr(q) = |v|^2 = " + norm2.get_str() + " != 1");

    add("c", tr != 1 || p.regular.empty(), "Tr|A| = 1 but H_reg is nonempty");
    add("d", tr == 1 || !p.regular.empty(), "Tr|A| < 1 but H_reg is empty");

    bool e_ok = true;
    for (std::size_t c = 0; c < d; ++c) {
      if (p.a_diag[c] < 0 && !p.v[c].is_zero()) {
        e_ok = false;
      }
    }
    add("e", e_ok, "v has weight on the negative spectral subspace");

    bool f_ok = true;
    for (auto c : p.regular) {
      if (!p.v[c - 1].is_zero()) {
        f_ok = false;
      }
    }
    add("f", f_ok, "v has weight on H_reg");

    bool reg_kernel = true;
    for (auto c : p.regular) {
      if (p.a_diag[c - 1] != 0) {
        reg_kernel = false;
      }
    }
    add("regular_kernel", reg_kernel, "H_reg must lie in Ker A");
    return report;
  }

  inline void require_valid(ModelParams const& p) {
    auto report = validate_params(p);
    if (!report.passed()) {
      throw InvalidParams("invalid model parameters: " + report.failures());
    }
  }

  // The realization of a state: A = diag(alpha, -beta, 0_z [, 0_reg]) and
  // v = sqrt(t) e_i + sqrt(1 - t) e_z, with z a kernel coordinate outside
  // H_reg. The regular coordinate is present only when sum < 1.
  inline ModelParams params_from_state(StateSpec const& spec, std::size_t slots) {
    ModelParams p;
    for (auto const& a : spec.thoma.alpha) {
      p.a_diag.push_back(a);
    }
    for (auto const& b : spec.thoma.beta) {
      p.a_diag.push_back(-b);
    }
    std::size_t const z = p.a_diag.size();
    p.a_diag.emplace_back(0);
    if (p.trace_abs() < 1) {
      p.a_diag.emplace_back(0);
      p.regular.push_back(p.a_diag.size());
    }
    p.v.assign(p.a_diag.size(), SqrtRational());
    if (spec.mark) {
      p.v[spec.mark->i - 1] = SqrtRational::from_square(spec.mark->t);
      p.v[z]                = SqrtRational::from_square(1 - spec.mark->t);
    }
    p.N = slots;
    return p;
  }

}  // namespace rookchar
