#pragma once

// The semigroup algebra Q[R_infinity]: finite formal sums with exact
// rational coefficients.

#include <map>
#include <string>

#include "enumerate.hpp"
#include "partial_bijection.hpp"
#include "rational.hpp"
#include "report.hpp"

namespace rookchar {

  class FormalSum {
   public:
    using map_type = std::map<PartialBijection, Rational>;

    FormalSum() = default;

    explicit FormalSum(PartialBijection const& r, Rational const& c = 1) {
      add(r, c);
    }

    void add(PartialBijection const& r, Rational const& c) {
      if (c == 0) {
        return;
      }
      auto [it, inserted] = terms_.try_emplace(r, c);
      if (!inserted) {
        it->second += c;
        if (it->second == 0) {
          terms_.erase(it);
        }
      }
    }

    map_type const& terms() const noexcept {
      return terms_;
    }

    Rational coefficient(PartialBijection const& r) const {
      auto it = terms_.find(r);
      return it == terms_.end() ? Rational(0) : it->second;
    }

    bool is_zero() const noexcept {
      return terms_.empty();
    }

    FormalSum& operator+=(FormalSum const& other) {
      for (auto const& [r, c] : other.terms_) {
        add(r, c);
      }
      return *this;
    }

    FormalSum& operator-=(FormalSum const& other) {
      for (auto const& [r, c] : other.terms_) {
        add(r, -c);
      }
      return *this;
    }

    FormalSum& operator*=(Rational const& scalar) {
      if (scalar == 0) {
        terms_.clear();
        return *this;
      }
      for (auto& [r, c] : terms_) {
        c *= scalar;
      }
      return *this;
    }

    bool operator==(FormalSum const&) const = default;

   private:
    map_type terms_;
  };

  inline FormalSum operator+(FormalSum a, FormalSum const& b) {
    return a += b;
  }

  inline FormalSum operator-(FormalSum a, FormalSum const& b) {
    return a -= b;
  }

  inline FormalSum operator*(Rational const& scalar, FormalSum a) {
    return a *= scalar;
  }

  // Bilinear extension of compose.
  inline FormalSum algebra_product(FormalSum const& a, FormalSum const& b) {
    FormalSum out;
    for (auto const& [ra, ca] : a.terms()) {
      for (auto const& [rb, cb] : b.terms()) {
        out.add(compose(ra, rb), ca * cb);
      }
    }
    return out;
  }

  inline FormalSum operator*(FormalSum const& a, FormalSum const& b) {
    return algebra_product(a, b);
  }

  // (1/n!) * sum of S_n.
  inline FormalSum symmetrizer(std::size_t n) {
    FormalSum out;
    Rational  count = 0;
    for_each_sn(n, [&](PartialBijection const& s) {
      out.add(s, 1);
      count += 1;
    });
    out *= Rational(1) / count;
    return out;
  }

  inline std::string render(FormalSum const& a) {
    if (a.is_zero()) {
      return "0";
    }
    std::string out;
    for (auto const& [r, c] : a.terms()) {
      if (!out.empty()) {
        out += " + ";
      }
      out += "(" + c.get_str() + ")" + render(r);
    }
    return out;
  }

  // p_n a p_n commute with each other for every a, b in R_n.
  inline SuiteReport verify_gelfand_pair(std::size_t n) {
    SuiteReport report;
    report.name        = "gelfand";
    FormalSum const p  = symmetrizer(n);
    auto const      rn = enumerate_rn(n);
    std::vector<FormalSum> sandwiched;
    sandwiched.reserve(rn.size());
    for (auto const& a : rn) {
      sandwiched.push_back(p * FormalSum(a) * p);
    }
    for (std::size_t i = 0; i < rn.size(); ++i) {
      for (std::size_t j = i + 1; j < rn.size(); ++j) {
        bool ok = sandwiched[i] * sandwiched[j] == sandwiched[j] * sandwiched[i];
        report.record_lazy(ok, [&] {
          return "p a p and p b p do not commute for a = " + render(rn[i])
                 + ", b = " + render(rn[j]);
        });
      }
    }
    return report;
  }

}  // namespace rookchar
