#pragma once

// Exact rationals (GMP) plus the signed square-root values used for model
// vectors whose squares stay rational.

#include <gmpxx.h>

#include <cmath>
#include <stdexcept>
#include <string>
#include <string_view>

namespace rookchar {

  using Rational = mpq_class;

  class ParseError : public std::invalid_argument {
   public:
    using std::invalid_argument::invalid_argument;
  };

  // Accepts "p", "-p", "p/q"; the result is canonicalized.
  inline Rational parse_rational(std::string_view text) {
    std::string s(text);
    auto const first = s.find_first_not_of(" \t");
    auto const last  = s.find_last_not_of(" \t");
    if (first == std::string::npos) {
      throw ParseError("empty rational literal");
    }
    s = s.substr(first, last - first + 1);
    auto slash = s.find('/');
    auto digits_ok = [](std::string const& d, bool allow_sign) {
      std::size_t i = 0;
      if (allow_sign && !d.empty() && (d[0] == '-' || d[0] == '+')) {
        ++i;
      }
      if (i >= d.size()) {
        return false;
      }
      for (; i < d.size(); ++i) {
        if (d[i] < '0' || d[i] > '9') {
          return false;
        }
      }
      return true;
    };
    std::string num = slash == std::string::npos ? s : s.substr(0, slash);
    std::string den = slash == std::string::npos ? "1" : s.substr(slash + 1);
    if (!digits_ok(num, true) || !digits_ok(den, false)) {
      throw ParseError("malformed rational literal \"" + std::string(text)
                       + "\"");
    }
    if (num[0] == '+') {
      num.erase(0, 1);
    }
    mpz_class n(num, 10), d(den, 10);
    if (d == 0) {
      throw ParseError("zero denominator in \"" + std::string(text) + "\"");
    }
    Rational q(n, d);
    q.canonicalize();
    return q;
  }

  inline std::string to_string(Rational const& q) {
    return q.get_str();
  }

  inline double to_double(Rational const& q) {
    return q.get_d();
  }

  inline Rational abs(Rational const& q) {
    return q < 0 ? Rational(-q) : q;
  }

  inline Rational pow(Rational const& base, unsigned exponent) {
    Rational result(1);
    for (unsigned i = 0; i < exponent; ++i) {
      result *= base;
    }
    return result;
  }

  // sign * sqrt(square), square >= 0.
  class SqrtRational {
   public:
    SqrtRational() = default;

    static SqrtRational from_rational(Rational const& value) {
      SqrtRational r;
      r.sign_   = sgn(value);
      r.square_ = value * value;
      return r;
    }

    static SqrtRational from_square(Rational const& square, int sign = 1) {
      if (square < 0) {
        throw std::invalid_argument("square must be nonnegative");
      }
      SqrtRational r;
      r.sign_   = square == 0 ? 0 : (sign < 0 ? -1 : 1);
      r.square_ = square;
      return r;
    }

    // "p/q", "-p/q", "sqrt(p/q)", "-sqrt(p/q)"
    static SqrtRational parse(std::string_view text) {
      std::string s(text);
      int         sign = 1;
      std::size_t i    = 0;
      while (i < s.size() && s[i] == ' ') {
        ++i;
      }
      if (i < s.size() && s[i] == '-' && s.compare(i + 1, 5, "sqrt(") == 0) {
        sign = -1;
        ++i;
      }
      if (s.compare(i, 5, "sqrt(") == 0) {
        auto close = s.rfind(')');
        if (close == std::string::npos || close < i + 5) {
          throw ParseError("unterminated sqrt( in \"" + s + "\"");
        }
        Rational sq = parse_rational(s.substr(i + 5, close - i - 5));
        if (sq < 0) {
          throw ParseError("sqrt of a negative value in \"" + s + "\"");
        }
        return from_square(sq, sign);
      }
      return from_rational(parse_rational(s));
    }

    int sign() const noexcept {
      return sign_;
    }

    Rational const& square() const noexcept {
      return square_;
    }

    bool is_zero() const noexcept {
      return sign_ == 0;
    }

    double value() const {
      return sign_ * std::sqrt(square_.get_d());
    }

    std::string str() const {
      if (sign_ == 0) {
        return "0";
      }
      // Render as a plain rational when the square is a perfect square.
      mpz_class nr, dr;
      mpz_sqrt(nr.get_mpz_t(), square_.get_num_mpz_t());
      mpz_sqrt(dr.get_mpz_t(), square_.get_den_mpz_t());
      if (nr * nr == square_.get_num() && dr * dr == square_.get_den()) {
        Rational q(nr * sign_, dr);
        q.canonicalize();
        return q.get_str();
      }
      return std::string(sign_ < 0 ? "-" : "") + "sqrt(" + square_.get_str()
             + ")";
    }

    bool operator==(SqrtRational const& other) const {
      return sign_ == other.sign_ && square_ == other.square_;
    }

   private:
    int      sign_ = 0;
    Rational square_{0};
  };

}  // namespace rookchar
