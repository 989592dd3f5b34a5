#pragma once

// Exact positive-semidefiniteness certification by pivoted symmetric
// Gaussian elimination over Q.
//
// PSD: P^T M P = L D L^T with L unit lower triangular, D = diag(pivots)
// all >= 0. NotPSD: a rational vector v with v^T M v < 0.

#include <cstddef>
#include <numeric>
#include <optional>
#include <stdexcept>
#include <vector>

#include "../rational.hpp"

namespace rookchar {

  class RationalMatrix {
   public:
    RationalMatrix() = default;

    explicit RationalMatrix(std::size_t n) : n_(n), entries_(n * n, Rational(0)) {}

    RationalMatrix(std::initializer_list<std::initializer_list<Rational>> rows)
        : RationalMatrix(rows.size()) {
      std::size_t i = 0;
      for (auto const& row : rows) {
        if (row.size() != n_) {
          throw std::invalid_argument("RationalMatrix must be square");
        }
        std::size_t j = 0;
        for (auto const& x : row) {
          (*this)(i, j++) = x;
        }
        ++i;
      }
    }

    static RationalMatrix identity(std::size_t n) {
      RationalMatrix m(n);
      for (std::size_t i = 0; i < n; ++i) {
        m(i, i) = 1;
      }
      return m;
    }

    std::size_t size() const noexcept {
      return n_;
    }

    Rational& operator()(std::size_t i, std::size_t j) {
      return entries_[i * n_ + j];
    }

    Rational const& operator()(std::size_t i, std::size_t j) const {
      return entries_[i * n_ + j];
    }

    bool is_symmetric() const {
      for (std::size_t i = 0; i < n_; ++i) {
        for (std::size_t j = i + 1; j < n_; ++j) {
          if ((*this)(i, j) != (*this)(j, i)) {
            return false;
          }
        }
      }
      return true;
    }

    bool operator==(RationalMatrix const&) const = default;

   private:
    std::size_t           n_ = 0;
    std::vector<Rational> entries_;
  };

  inline RationalMatrix operator*(RationalMatrix const& a, RationalMatrix const& b) {
    if (a.size() != b.size()) {
      throw std::invalid_argument("dimension mismatch");
    }
    std::size_t const n = a.size();
    RationalMatrix    c(n);
    for (std::size_t i = 0; i < n; ++i) {
      for (std::size_t k = 0; k < n; ++k) {
        if (a(i, k) == 0) {
          continue;
        }
        for (std::size_t j = 0; j < n; ++j) {
          c(i, j) += a(i, k) * b(k, j);
        }
      }
    }
    return c;
  }

  inline RationalMatrix transpose(RationalMatrix const& a) {
    RationalMatrix t(a.size());
    for (std::size_t i = 0; i < a.size(); ++i) {
      for (std::size_t j = 0; j < a.size(); ++j) {
        t(j, i) = a(i, j);
      }
    }
    return t;
  }

  // v^T M v
  inline Rational quadratic_form(RationalMatrix const& m, std::vector<Rational> const& v) {
    if (v.size() != m.size()) {
      throw std::invalid_argument("dimension mismatch");
    }
    Rational total = 0;
    for (std::size_t i = 0; i < v.size(); ++i) {
      if (v[i] == 0) {
        continue;
      }
      Rational row = 0;
      for (std::size_t j = 0; j < v.size(); ++j) {
        row += m(i, j) * v[j];
      }
      total += v[i] * row;
    }
    return total;
  }

  enum class PsdVerdict { psd, not_psd };

  struct PsdCertificate {
    PsdVerdict verdict = PsdVerdict::psd;
    // PSD case: pivots in elimination order, permutation[k] = original
    // index eliminated at step k, and the unit lower-triangular factor in
    // permuted coordinates.
    std::vector<Rational>    pivots;
    std::vector<std::size_t> permutation;
    RationalMatrix           lower;
    // NotPSD case.
    std::vector<Rational> witness;
    Rational              witness_value = 0;

    bool is_psd() const noexcept {
      return verdict == PsdVerdict::psd;
    }
  };

  // P^T M P rebuilt as L D L^T, for checking a PSD certificate.
  inline RationalMatrix reconstruct(PsdCertificate const& cert) {
    std::size_t const n = cert.pivots.size();
    RationalMatrix    ld(n);
    for (std::size_t i = 0; i < n; ++i) {
      for (std::size_t j = 0; j < n; ++j) {
        ld(i, j) = cert.lower(i, j) * cert.pivots[j];
      }
    }
    return ld * transpose(cert.lower);
  }

  inline RationalMatrix permuted(RationalMatrix const& m, std::vector<std::size_t> const& perm) {
    RationalMatrix out(m.size());
    for (std::size_t i = 0; i < m.size(); ++i) {
      for (std::size_t j = 0; j < m.size(); ++j) {
        out(i, j) = m(perm[i], perm[j]);
      }
    }
    return out;
  }

  inline PsdCertificate psd_certificate(RationalMatrix const& m) {
    if (!m.is_symmetric()) {
      throw std::invalid_argument("psd_certificate: matrix is not symmetric");
    }
    std::size_t const n = m.size();
    // work holds the current Schur complement on the not-yet-eliminated
    // indices (original numbering); factor holds L in original numbering.
    RationalMatrix           work = m;
    RationalMatrix           factor(n);
    std::vector<bool>        done(n, false);
    std::vector<std::size_t> order;
    std::vector<Rational>    pivots;

    // Turns a vector y on the remaining indices into an original-coordinate
    // vector v with v^T M v = y^T S y, S the current Schur complement.
    auto lift = [&](std::vector<Rational> y) {
      // Solve L^T v = (0, y): back-substitute over eliminated indices.
      std::vector<Rational> v = std::move(y);
      for (auto it = order.rbegin(); it != order.rend(); ++it) {
        std::size_t const p   = *it;
        Rational          acc = 0;
        for (std::size_t i = 0; i < n; ++i) {
          if (i != p && factor(i, p) != 0) {
            acc += factor(i, p) * v[i];
          }
        }
        v[p] = -acc;
      }
      return v;
    };
    auto fail = [&](std::vector<Rational> y) {
      PsdCertificate cert;
      cert.verdict       = PsdVerdict::not_psd;
      cert.witness       = lift(std::move(y));
      cert.witness_value = quadratic_form(m, cert.witness);
      return cert;
    };

    for (std::size_t step = 0; step < n; ++step) {
      std::optional<std::size_t> best;
      for (std::size_t i = 0; i < n; ++i) {
        if (done[i]) {
          continue;
        }
        if (work(i, i) < 0) {
          std::vector<Rational> y(n, Rational(0));
          y[i] = 1;
          return fail(std::move(y));
        }
        if (work(i, i) > 0 && (!best || work(i, i) > work(*best, *best))) {
          best = i;
        }
      }
      if (!best) {
        // Remaining diagonal is zero; the remaining block must vanish.
        for (std::size_t i = 0; i < n; ++i) {
          for (std::size_t j = 0; j < n; ++j) {
            if (done[i] || done[j] || i == j || work(i, j) == 0) {
              continue;
            }
            std::vector<Rational> y(n, Rational(0));
            y[i] = 1;
            y[j] = work(i, j) > 0 ? -1 : 1;
            return fail(std::move(y));
          }
        }
        for (std::size_t i = 0; i < n; ++i) {
          if (!done[i]) {
            done[i] = true;
            order.push_back(i);
            factor(i, i) = 1;
            pivots.emplace_back(0);
          }
        }
        break;
      }
      std::size_t const p     = *best;
      Rational const    pivot = work(p, p);
      done[p]                 = true;
      order.push_back(p);
      pivots.push_back(pivot);
      factor(p, p) = 1;
      for (std::size_t i = 0; i < n; ++i) {
        if (!done[i]) {
          factor(i, p) = work(i, p) / pivot;
        }
      }
      for (std::size_t i = 0; i < n; ++i) {
        if (done[i] || factor(i, p) == 0) {
          continue;
        }
        for (std::size_t j = 0; j < n; ++j) {
          if (!done[j]) {
            work(i, j) -= factor(i, p) * work(p, j);
          }
        }
      }
    }

    PsdCertificate cert;
    cert.verdict     = PsdVerdict::psd;
    cert.pivots      = std::move(pivots);
    cert.permutation = order;
    cert.lower       = permuted(factor, order);
    return cert;
  }

}  // namespace rookchar
