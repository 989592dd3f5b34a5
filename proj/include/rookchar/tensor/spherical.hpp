#pragma once

// The spherical representation pi_{u,w} of R_infinity on the tensor power
// of u, and its finite approximations pi^(n,l) on the span of e_{nA}
// (w in the slots of A, w-perp elsewhere, #A = l). e{k} projects slot k
// onto w; permutations move slots.

#include <cmath>
#include <cstddef>
#include <cstdint>
#include <optional>
#include <stdexcept>
#include <string>
#include <unordered_map>
#include <vector>

#include "../enumerate.hpp"
#include "../partial_bijection.hpp"
#include "../rational.hpp"
#include "product_model.hpp"

namespace rookchar {

  struct SphericalModel {
    std::size_t n = 0;
    std::size_t l = 0;
    Rational    kappa{0};  // (u, w)
  };

  inline void validate(SphericalModel const& m) {
    if (m.l > m.n) {
      throw std::invalid_argument("spherical model needs 0 <= l <= n");
    }
    if (m.kappa < 0 || m.kappa > 1) {
      throw std::invalid_argument("spherical model needs kappa in [0, 1]");
    }
  }

  // Points of 1..bound(r) outside the domain of r.
  inline std::size_t undefined_count(PartialBijection const& r) {
    return r.domain_complement().size();
  }

  // l(l-1)...(l-b+1) / n(n-1)...(n-b+1), zero when b > l
  inline Rational spherical_formula(std::size_t n, std::size_t l, std::size_t b) {
    if (b > n) {
      throw std::invalid_argument("spherical_formula: b exceeds n");
    }
    if (b > l) {
      return 0;
    }
    mpz_class num = 1, den = 1;
    for (std::size_t i = 0; i < b; ++i) {
      num *= static_cast<unsigned long>(l - i);
      den *= static_cast<unsigned long>(n - i);
    }
    Rational q(num, den);
    q.canonicalize();
    return q;
  }

  inline Rational spherical_formula(SphericalModel const& m, PartialBijection const& r) {
    validate(m);
    if (r.bound() > m.n) {
      throw SupportError("element " + render(r) + " has support beyond n = " + std::to_string(m.n));
    }
    return spherical_formula(m.n, m.l, undefined_count(r));
  }

  namespace detail {
    inline std::vector<std::uint64_t> subsets_of_size(std::size_t n, std::size_t l) {
      std::vector<std::uint64_t> out;
      if (l == 0) {
        out.push_back(0);
        return out;
      }
      // Gosper's hack over n-bit masks
      std::uint64_t       mask  = (std::uint64_t{1} << l) - 1;
      std::uint64_t const limit = std::uint64_t{1} << n;
      while (mask < limit) {
        out.push_back(mask);
        std::uint64_t const c = mask & (~mask + 1);
        std::uint64_t const r = mask + c;
        mask                  = (((r ^ mask) >> 2) / c) | r;
      }
      return out;
    }

    // pi(r) e_A = e_{s(A)} when the undefined points of r lie in A, else 0,
    // where s is any permutation extending r.
    inline std::optional<std::uint64_t> spherical_action(PartialBijection const& r,
                                                         std::size_t             n,
                                                         std::uint64_t           subset) {
      auto const undefined = r.domain_complement();
      for (auto b : undefined) {
        if (((subset >> (b - 1)) & 1U) == 0) {
          return std::nullopt;
        }
      }
      auto const    missing = r.range_complement();
      std::uint64_t image   = 0;
      std::size_t   next    = 0;
      for (point_type x = 1; x <= n; ++x) {
        if (((subset >> (x - 1)) & 1U) == 0) {
          continue;
        }
        point_type const y = r.is_defined_at(x) ? r(x) : missing[next++];
        image |= std::uint64_t{1} << (y - 1);
      }
      return image;
    }
  }  // namespace detail

  // (pi^(n,l)(r) e_sph, e_sph) from the explicit action on all C(n,l)
  // basis vectors.
  inline Rational spherical_coeff(SphericalModel const& m, PartialBijection const& r) {
    validate(m);
    if (r.bound() > m.n) {
      throw SupportError("element " + render(r) + " has support beyond n = " + std::to_string(m.n));
    }
    if (m.n > 40) {
      throw ResourceGuardError("explicit spherical model is limited to n <= 40");
    }
    std::uint64_t const cap = static_cast<std::uint64_t>(max_dense_dim());
    mpz_class           count;
    mpz_bin_uiui(count.get_mpz_t(), m.n, m.l);
    if (count > mpz_class(std::to_string(cap * cap))) {
      throw ResourceGuardError("C(n, l) = " + count.get_str() + " exceeds the ROOKCHAR_MAX_DIM budget");
    }

    auto const basis = detail::subsets_of_size(m.n, m.l);
    std::unordered_map<std::uint64_t, std::size_t> index;
    for (std::size_t i = 0; i < basis.size(); ++i) {
      index.emplace(basis[i], i);
    }
    // Column i of the matrix has a single 1 in row index[image], or is zero;
    // the coefficient is the sum of all entries over C(n,l).
    std::uint64_t total = 0;
    for (auto subset : basis) {
      if (auto image = detail::spherical_action(r, m.n, subset)) {
        if (index.find(*image) == index.end()) {
          throw std::logic_error("spherical action left the degree-l subspace");
        }
        ++total;
      }
    }
    Rational q(mpz_class(std::to_string(total)), mpz_class(std::to_string(basis.size())));
    q.canonicalize();
    return q;
  }

  inline double dot(std::vector<double> const& a, std::vector<double> const& b) {
    if (a.size() != b.size()) {
      throw DimensionError("dot: lengths differ");
    }
    double s = 0.0;
    for (std::size_t i = 0; i < a.size(); ++i) {
      s += a[i] * b[i];
    }
    return s;
  }

  // <pi_{u,w}(r) xi, xi> with xi = u x u x ..., computed slot by slot:
  // undefined points get p_w u = (u,w) w, then slot j moves to slot s(j).
  inline double spherical_infinite_value(std::vector<double> const& u,
                                         std::vector<double> const& w,
                                         PartialBijection const&    r) {
    if (std::abs(dot(u, u) - 1.0) > 1e-12 || std::abs(dot(w, w) - 1.0) > 1e-12) {
      throw std::invalid_argument("u and w must be unit vectors");
    }
    std::size_t const                n = r.bound();
    std::vector<std::vector<double>> slots(n, u);
    for (auto b : r.domain_complement()) {
      double const c = dot(u, w);
      for (std::size_t i = 0; i < w.size(); ++i) {
        slots[b - 1][i] = c * w[i];
      }
    }
    auto const                       missing = r.range_complement();
    std::size_t                      next    = 0;
    std::vector<std::vector<double>> moved(n);
    for (point_type x = 1; x <= n; ++x) {
      point_type const y = r.is_defined_at(x) ? r(x) : missing[next++];
      moved[y - 1]       = slots[x - 1];
    }
    double value = 1.0;
    for (auto const& s : moved) {
      value *= dot(s, u);
    }
    return value;
  }

  // u = kappa w + sqrt(1 - kappa^2) w-perp in the plane, with w = (1, 0)
  inline std::pair<std::vector<double>, std::vector<double>> spherical_vectors(double kappa) {
    return {{kappa, std::sqrt(std::max(0.0, 1.0 - kappa * kappa))}, {1.0, 0.0}};
  }

  // floor(x * n + 1/2)
  inline std::size_t round_scaled(Rational const& x, std::size_t n) {
    Rational  y = x * static_cast<unsigned long>(n) + Rational(1, 2);
    mpz_class q;
    mpz_fdiv_q(q.get_mpz_t(), y.get_num_mpz_t(), y.get_den_mpz_t());
    return static_cast<std::size_t>(q.get_ui());
  }

  struct SphericalLimitRow {
    std::size_t n        = 0;
    std::size_t l_kappa  = 0;  // l_n = round(kappa n)
    Rational    value_kappa{0};
    double      error_kappa = 0.0;
    std::size_t l_kappa2    = 0;  // l_n = round(kappa^2 n)
    Rational    value_kappa2{0};
    double      error_kappa2 = 0.0;
  };

  struct SphericalLimitReport {
    Rational                       kappa{0};
    PartialBijection               element;
    std::size_t                    undefined = 0;
    double                         infinite_value = 0.0;  // slot computation
    Rational                       infinite_exact{0};     // kappa^(2b)
    std::vector<SphericalLimitRow> rows;
    double                         tolerance = 0.02;

    bool kappa_converges() const {
      return !rows.empty() && rows.back().error_kappa < tolerance;
    }

    bool kappa2_converges() const {
      return !rows.empty() && rows.back().error_kappa2 < tolerance;
    }

    std::string converging() const {
      bool const a = kappa_converges();
      bool const b = kappa2_converges();
      return a && b ? "both" : a ? "kappa" : b ? "kappa^2" : "neither";
    }
  };

  inline std::vector<std::size_t> default_limit_sizes() {
    return {10, 25, 50, 100, 200};
  }

  // Finite coefficients along both candidate scalings l_n/n -> kappa and
  // l_n/n -> kappa^2, each compared with the infinite-model value.
  inline SphericalLimitReport spherical_limit_check(Rational const&                 kappa,
                                                    PartialBijection const&         r,
                                                    std::vector<std::size_t> const& n_list,
                                                    double                          tolerance = 0.02) {
    if (kappa < 0 || kappa > 1) {
      throw std::invalid_argument("kappa must lie in [0, 1]");
    }
    SphericalLimitReport report;
    report.kappa     = kappa;
    report.element   = r;
    report.undefined = undefined_count(r);
    report.tolerance = tolerance;
    auto const [u, w]     = spherical_vectors(to_double(kappa));
    report.infinite_value = spherical_infinite_value(u, w, r);
    report.infinite_exact = pow(kappa, static_cast<unsigned>(2 * report.undefined));

    Rational const kappa2 = kappa * kappa;
    for (auto n : n_list) {
      if (n < r.bound()) {
        throw SupportError("n = " + std::to_string(n) + " is smaller than the support of "
                           + render(r));
      }
      SphericalLimitRow row;
      row.n            = n;
      row.l_kappa      = round_scaled(kappa, n);
      row.value_kappa  = spherical_formula(n, row.l_kappa, report.undefined);
      row.error_kappa  = std::abs(to_double(row.value_kappa) - report.infinite_value);
      row.l_kappa2     = round_scaled(kappa2, n);
      row.value_kappa2 = spherical_formula(n, row.l_kappa2, report.undefined);
      row.error_kappa2 = std::abs(to_double(row.value_kappa2) - report.infinite_value);
      report.rows.push_back(std::move(row));
    }
    return report;
  }

}  // namespace rookchar
