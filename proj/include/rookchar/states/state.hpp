#pragma once

// S_infinity-central indecomposable states on R_infinity.
//
// One record covers every family: Thoma parameters (alpha, beta) fix the
// restriction to S_infinity, and an optional mark (i, t) fixes the value
// t * alpha_i^n on n-quasi-cycles. Without a mark every quasi-cycle
// evaluates to 0 (the finite characters with rho = 0, alpha = {} and the
// sign state alpha = {}, beta = (1)).

#include <cstddef>
#include <optional>
#include <stdexcept>
#include <string>
#include <vector>

#include "../partial_bijection.hpp"
#include "../quasi_cycle.hpp"
#include "../rational.hpp"

namespace rookchar {

  struct ThomaParams {
    std::vector<Rational> alpha;
    std::vector<Rational> beta;
  };

  struct Mark {
    std::size_t i = 1;  // 1-based index into alpha
    Rational    t = 0;
  };

  struct StateSpec {
    ThomaParams         thoma;
    std::optional<Mark> mark;
  };

  class InvalidState : public std::invalid_argument {
   public:
    using std::invalid_argument::invalid_argument;
  };

  // sum_i alpha_i^n + (-1)^(n-1) sum_j beta_j^n, n >= 2.
  inline Rational thoma_character(ThomaParams const& p, std::size_t n) {
    if (n < 2) {
      throw std::invalid_argument("thoma_character: cycle length must be >= 2");
    }
    Rational a = 0, b = 0;
    for (auto const& x : p.alpha) {
      a += pow(x, static_cast<unsigned>(n));
    }
    for (auto const& y : p.beta) {
      b += pow(y, static_cast<unsigned>(n));
    }
    return n % 2 == 1 ? Rational(a + b) : Rational(a - b);
  }

  class State {
   public:
    StateSpec const& spec() const noexcept {
      return spec_;
    }

    // t * alpha_i, or 0 without a mark.
    Rational const& quasi_cycle_base() const noexcept {
      return rho_;
    }

    Rational quasi_cycle_value(std::size_t length) const {
      if (!spec_.mark) {
        return 0;
      }
      return spec_.mark->t
             * pow(spec_.thoma.alpha[spec_.mark->i - 1], static_cast<unsigned>(length));
    }

    Rational cycle_value(std::size_t length) const {
      return thoma_character(spec_.thoma, length);
    }

    Rational operator()(PartialBijection const& r) const {
      return evaluate(r);
    }

    // Multiplicative over the quasi-cycle decomposition; trivial
    // quasi-cycles count as quasi-cycles of length 1.
    Rational evaluate(PartialBijection const& r) const {
      Rational value = 1;
      for (auto const& part : quasicycle_decompose(r).parts) {
        switch (part.kind) {
          case QuasiCycleKind::plain_cycle:
            value *= cycle_value(part.orbit.size());
            break;
          case QuasiCycleKind::nontrivial:
          case QuasiCycleKind::trivial:
            value *= quasi_cycle_value(part.orbit.size());
            break;
        }
        if (value == 0) {
          break;
        }
      }
      return value;
    }

   private:
    friend State make_state(StateSpec spec);

    explicit State(StateSpec spec) : spec_(std::move(spec)) {
      if (spec_.mark) {
        rho_ = spec_.mark->t * spec_.thoma.alpha[spec_.mark->i - 1];
      }
    }

    StateSpec spec_;
    Rational  rho_ = 0;
  };

  inline State make_state(StateSpec spec) {
    auto check_sequence = [](std::vector<Rational> const& xs, char const* name) {
      for (std::size_t k = 0; k < xs.size(); ++k) {
        if (xs[k] <= 0) {
          throw InvalidState(std::string(name) + " entries must be positive");
        }
        if (k > 0 && xs[k] > xs[k - 1]) {
          throw InvalidState(std::string(name) + " must be nonincreasing");
        }
      }
    };
    check_sequence(spec.thoma.alpha, "alpha");
    check_sequence(spec.thoma.beta, "beta");
    Rational total = 0;
    for (auto const& x : spec.thoma.alpha) {
      total += x;
    }
    for (auto const& y : spec.thoma.beta) {
      total += y;
    }
    if (total > 1) {
      throw InvalidState("sum of Thoma parameters exceeds 1 (got " + total.get_str() + ")");
    }
    if (spec.mark) {
      if (spec.mark->i < 1 || spec.mark->i > spec.thoma.alpha.size()) {
        throw InvalidState("mark index " + std::to_string(spec.mark->i)
                           + " out of range for alpha of length "
                           + std::to_string(spec.thoma.alpha.size()));
      }
      if (spec.mark->t < 0 || spec.mark->t > 1) {
        throw InvalidState("mark weight t must lie in [0,1] (got " + spec.mark->t.get_str()
                           + ")");
      }
    }
    return State(std::move(spec));
  }

  inline Rational evaluate(State const& state, PartialBijection const& r) {
    return state.evaluate(r);
  }

  enum class FactorType { type_I_inf, type_II_inf, type_II_1_or_scalar, type_II_1, unclassified };

  struct FactorTypeVerdict {
    FactorType  type;
    std::string note;
  };

  inline char const* to_string(FactorType t) {
    switch (t) {
      case FactorType::type_I_inf:
        return "I_inf";
      case FactorType::type_II_inf:
        return "II_inf";
      case FactorType::type_II_1_or_scalar:
        return "II_1_or_scalar";
      case FactorType::type_II_1:
        return "II_1";
      case FactorType::unclassified:
      default:
        return "unclassified";
    }
  }

  inline FactorTypeVerdict classify_factor_type(State const& state) {
    auto const& spec = state.spec();
    if (spec.thoma.alpha.empty() || !spec.mark) {
      return {FactorType::type_II_1_or_scalar,
              "quasi-cycles vanish: pi_f(e{a}) = 0, so the factor is II_1 or C"};
    }
    Rational const& alpha_i = spec.thoma.alpha[spec.mark->i - 1];
    Rational const& t       = spec.mark->t;
    bool const      t_inner = t > 0 && t < 1;
    if (alpha_i == 1 && t_inner) {
      return {FactorType::type_I_inf, "alpha_1 = 1, t in (0,1): pi_f(s) xi_f = xi_f"};
    }
    if (alpha_i < 1 && t_inner) {
      return {FactorType::type_II_inf, "alpha_i in (0,1), t in (0,1)"};
    }
    if (alpha_i < 1) {
      return {FactorType::type_II_1, "alpha_i in (0,1), t in {0,1}"};
    }
    return {FactorType::unclassified,
            "alpha_i = 1 with t in {0,1} lies outside the classification table"};
  }

}  // namespace rookchar
