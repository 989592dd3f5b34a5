// One line per acceptance criterion: PASS/FAIL, what was checked, time.

#include <chrono>
#include <cmath>
#include <cstdio>
#include <functional>
#include <map>
#include <set>
#include <string>
#include <vector>

#include "rookchar/rookchar.hpp"
#include "suite_states.hpp"

using namespace rookchar;
using fixtures::q;

namespace {

  struct Outcome {
    bool        ok = true;
    std::string detail;
  };

  int failures = 0;

  void criterion(int id, std::string const& title, double time_limit_s, std::function<Outcome()> const& body) {
    auto const start = std::chrono::steady_clock::now();
    Outcome    out;
    try {
      out = body();
    } catch (std::exception const& e) {
      out = {false, std::string("exception: ") + e.what()};
    }
    double const secs = std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
    if (secs > time_limit_s) {
      out.ok = false;
      out.detail += (out.detail.empty() ? "" : "; ") + std::string("time limit exceeded");
    }
    failures += out.ok ? 0 : 1;
    std::printf("[%s] criterion %2d: %s -- %s (%.2f s, limit %.0f s)\n", out.ok ? "PASS" : "FAIL", id,
                title.c_str(), out.detail.c_str(), secs, time_limit_s);
    std::fflush(stdout);
  }

  std::string num(double x) {
    char buf[32];
    std::snprintf(buf, sizeof buf, "%.3g", x);
    return buf;
  }

  // sum_k C(n,k)^2 k!
  mpz_class rook_count_formula(unsigned n) {
    mpz_class total = 0;
    for (unsigned k = 0; k <= n; ++k) {
      mpz_class b, f;
      mpz_bin_uiui(b.get_mpz_t(), n, k);
      mpz_fac_ui(f.get_mpz_t(), k);
      total += b * b * f;
    }
    return total;
  }

  // a_1 -> ... -> a_m, undefined at a_m
  PartialBijection chain(std::vector<point_type> const& pts) {
    point_type bound = 0;
    for (auto x : pts) {
      bound = std::max(bound, x);
    }
    std::vector<point_type> images(bound);
    for (point_type x = 1; x <= bound; ++x) {
      images[x - 1] = x;
    }
    for (std::size_t i = 0; i + 1 < pts.size(); ++i) {
      images[pts[i] - 1] = pts[i + 1];
    }
    images[pts.back() - 1] = undefined_point;
    return PartialBijection::from_images(images);
  }

  void for_each_chain(point_type n, std::vector<point_type>& prefix, std::vector<bool>& used,
                      std::function<void(std::vector<point_type> const&)> const& visit) {
    if (!prefix.empty()) {
      visit(prefix);
    }
    for (point_type x = 1; x <= n; ++x) {
      if (!used[x]) {
        used[x] = true;
        prefix.push_back(x);
        for_each_chain(n, prefix, used, visit);
        prefix.pop_back();
        used[x] = false;
      }
    }
  }

}  // namespace

int main() {
  auto const states = fixtures::suite_states();

  criterion(1, "|R_n| = 1, 2, 7, 34, 209, 1546 for n = 0..5", 1, [] {
    std::vector<std::uint64_t> const expected{1, 2, 7, 34, 209, 1546};
    for (unsigned n = 0; n <= 5; ++n) {
      auto const count = enumerate_rn(n).size();
      if (count != expected[n] || rook_count_formula(n) != expected[n] || rook_monoid_size(n) != expected[n]) {
        return Outcome{false, "mismatch at n = " + std::to_string(n)};
      }
    }
    return Outcome{true, "enumeration, sum C(n,k)^2 k! and library count agree"};
  });

  criterion(2, "decomposition round trip and disjointness on R_5", 5, [] {
    std::size_t checked = 0, bad = 0;
    for_each_rn(5, [&](PartialBijection const& r) {
      auto const d = quasicycle_decompose(r);
      std::set<point_type> seen;
      bool ok = recompose(d) == r;
      for (auto const& part : d.parts) {
        for (auto x : support(to_element(part))) {
          ok = ok && seen.insert(x).second;
        }
      }
      ++checked;
      bad += ok ? 0 : 1;
    });
    return Outcome{bad == 0 && checked == 1546, std::to_string(checked) + " elements, " + std::to_string(bad) + " failures"};
  });

  criterion(3, "conjugacy invariant = conjugation orbit under S_4 on R_4", 10, [] {
    auto const all   = enumerate_rn(4);
    auto const perms = enumerate_sn(4);
    std::map<PartialBijection, std::set<PartialBijection>> orbit;
    for (auto const& r : all) {
      for (auto const& s : perms) {
        orbit[r].insert(s * r * star(s));
      }
    }
    std::size_t bad = 0, conjugate_pairs = 0;
    for (auto const& a : all) {
      for (auto const& b : all) {
        bool const same = orbit[a].count(b) > 0;
        bool const inv  = conjugacy_invariant(a) == conjugacy_invariant(b);
        auto const s    = find_conjugator(a, b);
        bool ok         = same == inv && s.has_value() == same;
        if (s) {
          ok = ok && s->is_permutation() && *s * b * star(*s) == a;
          ++conjugate_pairs;
        }
        bad += ok ? 0 : 1;
      }
    }
    return Outcome{bad == 0, std::to_string(all.size() * all.size()) + " pairs, " + std::to_string(conjugate_pairs)
                                 + " conjugate, " + std::to_string(bad) + " failures"};
  });

  criterion(4, "p_n C[R_n] p_n is commutative for n <= 3", 30, [] {
    std::size_t checked = 0;
    for (std::size_t n = 1; n <= 3; ++n) {
      auto const rep = verify_gelfand_pair(n);
      checked += rep.checked;
      if (!rep.passed()) {
        return Outcome{false, rep.summary()};
      }
    }
    return Outcome{true, std::to_string(checked) + " commutators vanish exactly"};
  });

  criterion(5, "Popova relations for indices <= 5; word round trip on R_4", 10, [] {
    auto const rel = verify_popova_relations(5);
    if (!rel.passed()) {
      return Outcome{false, rel.violations.front()};
    }
    std::size_t bad = 0;
    for_each_rn(4, [&](PartialBijection const& r) { bad += word_to_element(element_to_word(r)) == r ? 0 : 1; });
    return Outcome{bad == 0, std::to_string(rel.checked) + " relations, 209 round trips, " + std::to_string(bad) + " failures"};
  });

  criterion(6, "Thoma values 1/3, 1/6 and f(q) = t alpha_i^n on every quasi-cycle in R_5", 10, [&] {
    ThomaParams const p{{q(1, 2), q(1, 3)}, {q(1, 6)}};
    if (thoma_character(p, 2) != q(1, 3) || thoma_character(p, 3) != q(1, 6)) {
      return Outcome{false, "spot values differ"};
    }
    std::size_t checked = 0, bad = 0;
    for (auto const& [name, spec] : states) {
      auto const f = make_state(spec);
      std::vector<point_type> prefix;
      std::vector<bool>       used(6, false);
      for_each_chain(5, prefix, used, [&](std::vector<point_type> const& pts) {
        Rational expected = 0;
        if (spec.mark) {
          expected = spec.mark->t * pow(spec.thoma.alpha[spec.mark->i - 1], static_cast<unsigned>(pts.size()));
        }
        bad += f(chain(pts)) == expected ? 0 : 1;
        ++checked;
      });
    }
    return Outcome{bad == 0, std::to_string(checked) + " quasi-cycle evaluations over " + std::to_string(states.size())
                                 + " states, exact"};
  });

  criterion(7, "phi_closed_form vs phi_model on R_4, N = 4, tol 1e-10", 120, [] {
    double      worst = 0.0;
    std::size_t sets  = 0;
    for (auto const& [name, p] : fixtures::suite_params(4)) {
      auto const m = build_slot_model(p);
      for_each_rn(4, [&](PartialBijection const& r) {
        worst = std::max(worst, std::abs(expectation(m, program_for(r)) - to_double(phi_closed_form(p, r))));
      });
      ++sets;
    }
    return Outcome{worst <= 1e-10, std::to_string(sets) + " parameter sets (beta-block, t = 1, no regular block, q = 0); max |diff| = "
                                       + num(worst)};
  });

  criterion(8, "evaluate(state) = phi_closed_form(realizing params) exactly on R_4", 30, [&] {
    std::size_t bad = 0;
    for (auto const& [name, spec] : states) {
      auto const f = make_state(spec);
      auto const p = params_from_state(spec, 4);
      for_each_rn(4, [&](PartialBijection const& r) { bad += phi_closed_form(p, r) == f(r) ? 0 : 1; });
    }
    return Outcome{bad == 0, std::to_string(states.size()) + " states x 209 elements, " + std::to_string(bad) + " mismatches"};
  });

  criterion(9, "exact PSD certificate of the 34x34 Gram matrix over R_3, both orderings", 60, [&] {
    auto const  r3      = enumerate_rn(3);
    std::size_t certified = 0;
    for (auto const& [name, spec] : states) {
      auto const f = make_state(spec);
      for (auto ordering : {GramOrdering::star_j_i, GramOrdering::i_star_j}) {
        auto const g = gram_matrix(f, r3, ordering);
        if (!g.certificate.is_psd() || reconstruct(g.certificate) != permuted(g.matrix, g.certificate.permutation)) {
          return Outcome{false, name + " " + to_string(ordering) + " not certified"};
        }
        ++certified;
      }
    }
    return Outcome{true, std::to_string(certified) + " certificates, L D L^T verified exactly"};
  });

  criterion(10, "centrality, multiplicativity, star symmetry, conjugation invariance at n = 4", 60, [&] {
    std::size_t checked = 0;
    for (auto const& [name, spec] : states) {
      auto const f = make_state(spec);
      for (auto const& rep : {check_centrality(f, 4), check_multiplicativity(f, 4), check_star_symmetry(f, 4),
                              check_conjugation_invariance(f, 4)}) {
        checked += rep.checked;
        if (!rep.passed()) {
          return Outcome{false, name + ": " + rep.summary()};
        }
      }
    }
    return Outcome{true, std::to_string(checked) + " checks over " + std::to_string(states.size()) + " states"};
  });

  criterion(11, "spherical coefficients exact for n <= 6; limit table at n = 200", 30, [] {
    std::size_t cases = 0;
    for (std::size_t n = 0; n <= 6; ++n) {
      for (std::size_t l = 0; l <= n; ++l) {
        for (unsigned mask = 0; mask < (1U << n); ++mask) {
          std::vector<point_type> killed;
          for (point_type x = 1; x <= n; ++x) {
            if (mask & (1U << (x - 1))) {
              killed.push_back(x);
            }
          }
          auto const r = PartialBijection::idempotent(killed);
          mpz_class  num = 1, den = 1;
          for (std::size_t i = 0; i < killed.size(); ++i) {
            num *= static_cast<long>(l) - static_cast<long>(i);
            den *= static_cast<long>(n - i);
          }
          Rational expected = killed.size() > l ? Rational(0) : Rational(num, den);
          expected.canonicalize();
          if (spherical_coeff({n, l, 0}, r) != expected) {
            return Outcome{false, "mismatch at n=" + std::to_string(n) + " l=" + std::to_string(l)};
          }
          ++cases;
        }
      }
    }
    auto const rep  = spherical_limit_check(Rational(1, 2), parse_element("e{1,2}"), default_limit_sizes());
    std::printf("    spherical limit, kappa = 1/2, r = e{1,2}, infinite value %.6f (kappa^4)\n", rep.infinite_value);
    std::printf("    %5s  %8s %12s %10s  %8s %12s %10s\n", "n", "l=kn", "coeff", "error", "l=k^2n", "coeff", "error");
    for (auto const& row : rep.rows) {
      std::printf("    %5zu  %8zu %12.6f %10.2e  %8zu %12.6f %10.2e\n", row.n, row.l_kappa, to_double(row.value_kappa),
                  row.error_kappa, row.l_kappa2, to_double(row.value_kappa2), row.error_kappa2);
    }
    bool const converges = rep.kappa2_converges() || rep.kappa_converges();
    return Outcome{converges, std::to_string(cases) + " exact cases; converging scaling: l_n/n -> " + rep.converging()
                                  + " (error " + num(rep.rows.back().error_kappa2) + " at n = 200), l_n/n -> kappa error "
                                  + num(rep.rows.back().error_kappa)};
  });

  criterion(12, "Okounkov stabilization at d = 4, N = 5 for x, y in R_2; projection law", 60, [] {
    double      worst = 0.0;
    std::size_t reports = 0, rows = 0;
    for (auto const& [name, p] : fixtures::suite_params(5)) {
      if (p.d() != 4) {
        continue;
      }
      auto const m = build_slot_model(p);
      for (std::size_t k = 1; k <= 4; ++k) {
        for (auto const& x : enumerate_rn(2)) {
          for (auto const& y : enumerate_rn(2)) {
            auto const rep = okounkov_check(m, k, x, y);
            if (rep.rows.empty()) {
              return Outcome{false, "no admissible n"};
            }
            worst = std::max(worst, rep.max_deviation);
            rows += rep.rows.size();
            ++reports;
          }
        }
      }
    }
    ModelParams const proj{{q(1), q(0), q(0)}, {fixtures::root(1, 2), {}, fixtures::root(1, 2)}, {}, 5};
    auto const        pm     = build_slot_model(proj);
    double            defect = 0.0;
    for (std::size_t k = 1; k <= 4; ++k) {
      defect = std::max(defect, projection_law_defect(pm, k, enumerate_rn(2)));
    }
    return Outcome{worst <= 1e-12 && defect <= 1e-12,
                   std::to_string(reports) + " reports, " + std::to_string(rows) + " admissible n; max dev "
                       + num(worst) + "; P^2 - P defect " + num(defect)};
  });

  std::printf("%s: %d criteria failed\n", failures == 0 ? "ALL PASS" : "FAILURES", failures);
  return failures == 0 ? 0 : 1;
}
