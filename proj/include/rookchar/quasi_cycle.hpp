#pragma once

// Factorization of an element of R_infinity into pairwise disjoint
// quasi-cycles, usual cycles and trivial quasi-cycles e{a}, and the
// conjugacy invariant (q-partition, c-partition, m) it induces.

#include <algorithm>
#include <cstddef>
#include <functional>
#include <optional>
#include <string>
#include <vector>

#include "partial_bijection.hpp"

namespace rookchar {

  enum class QuasiCycleKind { nontrivial, trivial, plain_cycle };

  struct QuasiCycle {
    QuasiCycleKind kind;
    // nontrivial: a, r(a), ..., r^m(a) with r^m(a) outside the domain.
    // trivial: the single killed point. plain_cycle: the cycle from its
    // least point.
    std::vector<point_type> orbit;

    bool operator==(QuasiCycle const&) const = default;
  };

  struct QuasiCycleDecomposition {
    std::vector<QuasiCycle> parts;
  };

  struct ConjugacyInvariant {
    std::vector<std::size_t> q_partition;  // nonincreasing, parts >= 2
    std::vector<std::size_t> c_partition;  // nonincreasing, parts >= 2
    std::size_t              m = 0;        // number of trivial quasi-cycles

    auto operator<=>(ConjugacyInvariant const&) const = default;
  };

  // Parts are ordered: quasi-cycles by least orbit point, then plain cycles
  // by least point, then trivial quasi-cycles ascending.
  inline QuasiCycleDecomposition quasicycle_decompose(PartialBijection const& r) {
    std::size_t const n = r.bound();
    std::vector<bool> in_range(n + 1, false);
    for (point_type x = 1; x <= n; ++x) {
      if (point_type y = r(x); y != undefined_point) {
        in_range[y] = true;
      }
    }
    std::vector<bool>       visited(n + 1, false);
    std::vector<QuasiCycle> quasi, plain, trivial;

    for (point_type a = 1; a <= n; ++a) {
      if (!r.is_defined_at(a) || in_range[a]) {
        continue;
      }
      // a is in D(r) \ I(r): follow the chain until it leaves the domain.
      QuasiCycle q{QuasiCycleKind::nontrivial, {a}};
      visited[a] = true;
      for (point_type x = r(a); ; x = r(x)) {
        q.orbit.push_back(x);
        visited[x] = true;
        if (!r.is_defined_at(x)) {
          break;
        }
      }
      quasi.push_back(std::move(q));
    }
    for (point_type a = 1; a <= n; ++a) {
      if (visited[a] || !r.is_defined_at(a) || r(a) == a) {
        continue;
      }
      QuasiCycle c{QuasiCycleKind::plain_cycle, {}};
      for (point_type x = a; !visited[x]; x = r(x)) {
        visited[x] = true;
        c.orbit.push_back(x);
      }
      plain.push_back(std::move(c));
    }
    for (point_type a = 1; a <= n; ++a) {
      if (!r.is_defined_at(a) && !in_range[a]) {
        trivial.push_back({QuasiCycleKind::trivial, {a}});
      }
    }
    auto by_min = [](QuasiCycle const& x, QuasiCycle const& y) {
      return *std::min_element(x.orbit.begin(), x.orbit.end())
             < *std::min_element(y.orbit.begin(), y.orbit.end());
    };
    std::sort(quasi.begin(), quasi.end(), by_min);

    QuasiCycleDecomposition d;
    d.parts = std::move(quasi);
    d.parts.insert(d.parts.end(), plain.begin(), plain.end());
    d.parts.insert(d.parts.end(), trivial.begin(), trivial.end());
    return d;
  }

  // The element a single part stands for.
  inline PartialBijection to_element(QuasiCycle const& part) {
    switch (part.kind) {
      case QuasiCycleKind::trivial:
        return PartialBijection::idempotent({part.orbit.front()});
      case QuasiCycleKind::plain_cycle:
        return PartialBijection::cycle(part.orbit);
      case QuasiCycleKind::nontrivial:
      default:
        return compose(PartialBijection::cycle(part.orbit),
                       PartialBijection::idempotent({part.orbit.back()}));
    }
  }

  inline PartialBijection recompose(QuasiCycleDecomposition const& d) {
    PartialBijection r;
    for (auto const& part : d.parts) {
      r = compose(r, to_element(part));
    }
    return r;
  }

  // Product-form rendering, e.g. "(1 2 3)e{3}", "(4 5)", "e{5}".
  inline std::string render(QuasiCycle const& part) {
    auto cycle_text = [&] {
      std::string s = "(";
      for (std::size_t i = 0; i < part.orbit.size(); ++i) {
        s += (i ? " " : "") + std::to_string(part.orbit[i]);
      }
      return s + ")";
    };
    switch (part.kind) {
      case QuasiCycleKind::trivial:
        return "e{" + std::to_string(part.orbit.front()) + "}";
      case QuasiCycleKind::plain_cycle:
        return cycle_text();
      case QuasiCycleKind::nontrivial:
      default:
        return cycle_text() + "e{" + std::to_string(part.orbit.back()) + "}";
    }
  }

  inline ConjugacyInvariant conjugacy_invariant(QuasiCycleDecomposition const& d) {
    ConjugacyInvariant inv;
    for (auto const& part : d.parts) {
      switch (part.kind) {
        case QuasiCycleKind::nontrivial:
          inv.q_partition.push_back(part.orbit.size());
          break;
        case QuasiCycleKind::plain_cycle:
          inv.c_partition.push_back(part.orbit.size());
          break;
        case QuasiCycleKind::trivial:
          ++inv.m;
          break;
      }
    }
    std::sort(inv.q_partition.begin(), inv.q_partition.end(), std::greater<>());
    std::sort(inv.c_partition.begin(), inv.c_partition.end(), std::greater<>());
    return inv;
  }

  inline ConjugacyInvariant conjugacy_invariant(PartialBijection const& r) {
    return conjugacy_invariant(quasicycle_decompose(r));
  }

  // Some finitary permutation s with r1 = s r2 s^{-1}, or nullopt when the
  // invariants differ. Parts of equal kind are matched by decreasing size
  // and relabelled orbit point by orbit point.
  inline std::optional<PartialBijection> find_conjugator(PartialBijection const& r1,
                                                         PartialBijection const& r2) {
    auto const d1 = quasicycle_decompose(r1);
    auto const d2 = quasicycle_decompose(r2);
    if (conjugacy_invariant(d1) != conjugacy_invariant(d2)) {
      return std::nullopt;
    }
    auto sorted_parts = [](QuasiCycleDecomposition const& d, QuasiCycleKind kind) {
      std::vector<QuasiCycle> out;
      for (auto const& p : d.parts) {
        if (p.kind == kind) {
          out.push_back(p);
        }
      }
      std::stable_sort(out.begin(), out.end(), [](auto const& x, auto const& y) {
        return x.orbit.size() > y.orbit.size();
      });
      return out;
    };
    std::size_t const ground = std::max(r1.bound(), r2.bound());
    // s maps points of r2's picture onto r1's.
    std::vector<point_type> image(ground + 1, undefined_point);
    std::vector<bool>       taken(ground + 1, false);
    for (auto kind : {QuasiCycleKind::nontrivial,
                      QuasiCycleKind::plain_cycle,
                      QuasiCycleKind::trivial}) {
      auto p1 = sorted_parts(d1, kind);
      auto p2 = sorted_parts(d2, kind);
      for (std::size_t i = 0; i < p1.size(); ++i) {
        for (std::size_t j = 0; j < p1[i].orbit.size(); ++j) {
          image[p2[i].orbit[j]] = p1[i].orbit[j];
          taken[p1[i].orbit[j]] = true;
        }
      }
    }
    // Points fixed by r2 go, in order, to points fixed by r1.
    point_type next_free = 1;
    for (point_type x = 1; x <= ground; ++x) {
      if (image[x] != undefined_point) {
        continue;
      }
      while (taken[next_free]) {
        ++next_free;
      }
      image[x]          = next_free;
      taken[next_free] = true;
    }
    return PartialBijection::from_images(
        std::vector<point_type>(image.begin() + 1, image.end()));
  }

}  // namespace rookchar
