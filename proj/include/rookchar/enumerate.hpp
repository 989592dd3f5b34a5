#pragma once

// Exhaustive enumeration of the finite rook monoids R_n and symmetric
// groups S_n, used as drivers for the property suites.

#include <cstddef>
#include <cstdint>
#include <functional>
#include <stdexcept>
#include <vector>

#include "partial_bijection.hpp"

namespace rookchar {

  inline constexpr std::size_t max_enumeration_degree = 7;

  class ResourceGuardError : public std::runtime_error {
   public:
    using std::runtime_error::runtime_error;
  };

  // sum_k C(n,k)^2 k!
  inline std::uint64_t rook_monoid_size(std::size_t n) {
    std::uint64_t total = 0;
    for (std::size_t k = 0; k <= n; ++k) {
      std::uint64_t binom = 1;
      for (std::size_t i = 0; i < k; ++i) {
        binom = binom * (n - i) / (i + 1);
      }
      std::uint64_t fact = 1;
      for (std::size_t i = 2; i <= k; ++i) {
        fact *= i;
      }
      total += binom * binom * fact;
    }
    return total;
  }

  namespace detail {
    template <typename Visit>
    void enumerate_rn_rec(std::size_t              n,
                          point_type               x,
                          std::vector<point_type>& images,
                          std::vector<bool>&       used,
                          bool                     permutations_only,
                          Visit&                   visit) {
      if (x > n) {
        visit(PartialBijection::from_images(images));
        return;
      }
      if (!permutations_only) {
        images[x - 1] = undefined_point;
        enumerate_rn_rec(n, x + 1, images, used, permutations_only, visit);
      }
      for (point_type y = 1; y <= n; ++y) {
        if (used[y]) {
          continue;
        }
        used[y]       = true;
        images[x - 1] = y;
        enumerate_rn_rec(n, x + 1, images, used, permutations_only, visit);
        used[y] = false;
      }
    }

    inline void check_degree(std::size_t n) {
      if (n > max_enumeration_degree) {
        throw ResourceGuardError("enumeration degree "
                                 + std::to_string(n) + " exceeds "
                                 + std::to_string(max_enumeration_degree));
      }
    }
  }  // namespace detail

  // Visits every element of R_n once; at each point the order tries
  // "undefined" first, then images 1..n.
  template <typename Visit>
  void for_each_rn(std::size_t n, Visit&& visit) {
    detail::check_degree(n);
    std::vector<point_type> images(n, undefined_point);
    std::vector<bool>       used(n + 1, false);
    detail::enumerate_rn_rec(n, 1, images, used, false, visit);
  }

  template <typename Visit>
  void for_each_sn(std::size_t n, Visit&& visit) {
    detail::check_degree(n);
    std::vector<point_type> images(n, undefined_point);
    std::vector<bool>       used(n + 1, false);
    detail::enumerate_rn_rec(n, 1, images, used, true, visit);
  }

  inline std::vector<PartialBijection> enumerate_rn(std::size_t n) {
    std::vector<PartialBijection> out;
    out.reserve(rook_monoid_size(std::min(n, max_enumeration_degree)));
    for_each_rn(n, [&](PartialBijection const& r) { out.push_back(r); });
    return out;
  }

  inline std::vector<PartialBijection> enumerate_sn(std::size_t n) {
    std::vector<PartialBijection> out;
    for_each_sn(n, [&](PartialBijection const& r) { out.push_back(r); });
    return out;
  }

}  // namespace rookchar
