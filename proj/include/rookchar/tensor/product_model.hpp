#pragma once

// The product-state realization on H^(tensor N). Slot k carries the
// density rho_k = |A| + (1 - Tr|A|) |reg_k><reg_k|; T(s_k) swaps slots k
// and k+1 with a sign -1 when both sit on negative eigenvectors of A;
// T(e{1}) is |v><v| on slot 1. phi_model(r) = Tr(T(r) rho_1 x ... x rho_N).
//
// Two evaluation paths: a sparse one that pushes basis vectors through the
// generator word, and a dense one that materializes every matrix. They
// must agree, and both must agree with phi_closed_form.

#include <algorithm>
#include <cmath>
#include <cstddef>
#include <cstdint>
#include <cstdlib>
#include <limits>
#include <string>
#include <utility>
#include <vector>

#include "../enumerate.hpp"
#include "../linalg/dense.hpp"
#include "../partial_bijection.hpp"
#include "../words.hpp"
#include "model_params.hpp"

namespace rookchar {

  // How slots find their regular coordinate when Tr|A| < 1. With expand,
  // every slot gets a fresh regular basis vector (the declared ones first,
  // then zero-eigenvalue extras), which keeps the product state symmetric.
  // With cycle, slot k reuses regular coordinate (k mod #regular); this is
  // exact only while N <= #regular.
  enum class RegularMode { expand, cycle };

  struct ModelOptions {
    RegularMode regular_mode = RegularMode::expand;
    bool        sign_twist   = true;  // false only for negative-control fixtures
  };

  class SupportError : public std::invalid_argument {
   public:
    using std::invalid_argument::invalid_argument;
  };

  inline constexpr std::size_t default_max_dim = 4096;

  // ROOKCHAR_MAX_DIM bounds D^N for dense matrices; the sparse path may go
  // up to its square since it never stores a matrix.
  inline std::size_t max_dense_dim() {
    char const* env = std::getenv("ROOKCHAR_MAX_DIM");
    if (env == nullptr || *env == '\0') {
      return default_max_dim;
    }
    char*              end   = nullptr;
    unsigned long long value = std::strtoull(env, &end, 10);
    if (*end != '\0' || value == 0) {
      throw std::invalid_argument("ROOKCHAR_MAX_DIM must be a positive integer");
    }
    return static_cast<std::size_t>(value);
  }

  namespace detail {
    // base^exp, saturating at the max of uint64_t
    inline std::uint64_t saturating_power(std::uint64_t base, std::size_t exp) {
      std::uint64_t out = 1;
      for (std::size_t i = 0; i < exp; ++i) {
        if (base != 0 && out > std::numeric_limits<std::uint64_t>::max() / base) {
          return std::numeric_limits<std::uint64_t>::max();
        }
        out *= base;
      }
      return out;
    }
  }  // namespace detail

  // Single-slot data in the local basis used by both evaluation paths.
  struct SlotModel {
    std::size_t                      local_dim = 0;
    std::size_t                      slots     = 0;
    std::vector<double>              a;         // eigenvalue per local coordinate
    std::vector<double>              v;
    std::vector<bool>                negative;  // a < 0
    std::vector<std::vector<double>> rho;       // diagonal of rho_k, per slot
    bool                             sign_twist = true;

    std::uint64_t dimension() const {
      return detail::saturating_power(local_dim, slots);
    }
  };

  inline SlotModel build_slot_model(ModelParams const& p, ModelOptions const& opts = {}) {
    require_valid(p);
    SlotModel m;
    m.slots      = p.N;
    m.sign_twist = opts.sign_twist;

    for (std::size_t c = 0; c < p.d(); ++c) {
      if (!p.is_regular(c)) {
        m.a.push_back(to_double(p.a_diag[c]));
        m.v.push_back(p.v[c].value());
      }
    }
    std::size_t const first_regular = m.a.size();
    std::size_t       n_regular     = p.regular.size();
    if (opts.regular_mode == RegularMode::expand && n_regular > 0) {
      n_regular = std::max(n_regular, p.N);
    }
    // Regular coordinates are kernel vectors orthogonal to v.
    m.a.resize(first_regular + n_regular, 0.0);
    m.v.resize(first_regular + n_regular, 0.0);
    m.local_dim = m.a.size();
    for (double a : m.a) {
      m.negative.push_back(a < 0.0);
    }

    double const leftover = to_double(1 - p.trace_abs());
    for (std::size_t k = 0; k < p.N; ++k) {
      std::vector<double> diag(m.local_dim);
      for (std::size_t c = 0; c < m.local_dim; ++c) {
        diag[c] = std::abs(m.a[c]);
      }
      if (n_regular > 0) {
        diag[first_regular + k % n_regular] += leftover;
      }
      m.rho.push_back(std::move(diag));
    }
    return m;
  }

  inline void check_support(PartialBijection const& r, std::size_t slots) {
    if (r.bound() > slots) {
      throw SupportError("element " + render(r) + " has support beyond N = "
                         + std::to_string(slots));
    }
  }

  // A slot-local operator: an adjacent (twisted) swap of slots (slot,
  // slot+1), the projection |v><v| on slot 0, or a diagonal on one slot.
  struct SlotOp {
    enum class Kind { swap, project, diagonal };

    Kind                kind = Kind::swap;
    std::size_t         slot = 0;  // 0-based
    std::vector<double> values;

    static SlotOp swap(std::size_t slot) {
      return {Kind::swap, slot, {}};
    }

    static SlotOp project() {
      return {Kind::project, 0, {}};
    }

    static SlotOp diagonal(std::size_t slot, std::vector<double> values) {
      return {Kind::diagonal, slot, std::move(values)};
    }
  };

  // Operators in the order they act on a ket (first element acts first).
  using OperatorProgram = std::vector<SlotOp>;

  // T(r) = T(l_1) ... T(l_m), so l_m acts first.
  inline OperatorProgram program_for(PartialBijection const& r) {
    auto const      word = element_to_word(r);
    OperatorProgram prog;
    for (auto it = word.rbegin(); it != word.rend(); ++it) {
      prog.push_back(it->kind == Letter::Kind::s ? SlotOp::swap(it->index - 1)
                                                 : SlotOp::project());
    }
    return prog;
  }

  inline OperatorProgram& append(OperatorProgram& prog, OperatorProgram const& more) {
    prog.insert(prog.end(), more.begin(), more.end());
    return prog;
  }

  namespace detail {
    using SparseKet = std::vector<std::pair<std::uint64_t, double>>;

    struct Radix {
      std::vector<std::uint64_t> place;  // place[k] = D^k, slot 0 least significant
      std::size_t                base = 0;

      Radix(std::size_t base_, std::size_t slots) : base(base_) {
        std::uint64_t p = 1;
        for (std::size_t k = 0; k < slots; ++k) {
          place.push_back(p);
          p *= base_;
        }
      }

      std::size_t digit(std::uint64_t index, std::size_t slot) const {
        return static_cast<std::size_t>((index / place[slot]) % base);
      }
    };

    inline void normalize(SparseKet& ket) {
      std::sort(ket.begin(), ket.end(), [](auto const& x, auto const& y) {
        return x.first < y.first;
      });
      SparseKet out;
      for (auto const& [idx, amp] : ket) {
        if (!out.empty() && out.back().first == idx) {
          out.back().second += amp;
        } else {
          out.emplace_back(idx, amp);
        }
      }
      std::erase_if(out, [](auto const& e) { return e.second == 0.0; });
      ket = std::move(out);
    }

    inline void apply_op(SlotModel const& m, Radix const& radix, SlotOp const& op, SparseKet& ket) {
      switch (op.kind) {
        case SlotOp::Kind::swap: {
          for (auto& [idx, amp] : ket) {
            std::size_t const x = radix.digit(idx, op.slot);
            std::size_t const y = radix.digit(idx, op.slot + 1);
            if (m.sign_twist && m.negative[x] && m.negative[y]) {
              amp = -amp;
            }
            idx = idx - x * radix.place[op.slot] - y * radix.place[op.slot + 1]
                  + y * radix.place[op.slot] + x * radix.place[op.slot + 1];
          }
          normalize(ket);
          break;
        }
        case SlotOp::Kind::project: {
          SparseKet out;
          for (auto const& [idx, amp] : ket) {
            std::size_t const x = radix.digit(idx, 0);
            if (m.v[x] == 0.0) {
              continue;
            }
            std::uint64_t const rest = idx - x;
            for (std::size_t c = 0; c < m.local_dim; ++c) {
              if (m.v[c] != 0.0) {
                out.emplace_back(rest + c, amp * m.v[x] * m.v[c]);
              }
            }
          }
          normalize(out);
          ket = std::move(out);
          break;
        }
        case SlotOp::Kind::diagonal: {
          for (auto& [idx, amp] : ket) {
            amp *= op.values[radix.digit(idx, op.slot)];
          }
          normalize(ket);
          break;
        }
      }
    }
  }  // namespace detail

  // psi(X) = sum_x rho(x) <x| X |x>, X given as an operator program. Only
  // basis states in the support of rho are visited.
  inline double expectation(SlotModel const& m, OperatorProgram const& prog) {
    std::uint64_t const dim = m.dimension();
    std::uint64_t const cap = static_cast<std::uint64_t>(max_dense_dim());
    if (dim == std::numeric_limits<std::uint64_t>::max() || dim / cap > cap) {
      throw ResourceGuardError("tensor dimension D^N = " + std::to_string(m.local_dim)
                               + "^" + std::to_string(m.slots)
                               + " exceeds the ROOKCHAR_MAX_DIM budget");
    }
    for (auto const& op : prog) {
      if (op.slot + (op.kind == SlotOp::Kind::swap ? 1 : 0) >= m.slots) {
        throw SupportError("operator acts beyond slot N = " + std::to_string(m.slots));
      }
    }
    detail::Radix const radix(m.local_dim, m.slots);

    std::vector<std::vector<std::size_t>> support(m.slots);
    for (std::size_t k = 0; k < m.slots; ++k) {
      for (std::size_t c = 0; c < m.local_dim; ++c) {
        if (m.rho[k][c] != 0.0) {
          support[k].push_back(c);
        }
      }
      if (support[k].empty()) {
        return 0.0;
      }
    }

    double                   total = 0.0;
    std::vector<std::size_t> pos(m.slots, 0);
    while (true) {
      std::uint64_t idx    = 0;
      double        weight = 1.0;
      for (std::size_t k = 0; k < m.slots; ++k) {
        std::size_t const c = support[k][pos[k]];
        idx += c * radix.place[k];
        weight *= m.rho[k][c];
      }
      detail::SparseKet ket{{idx, 1.0}};
      for (auto const& op : prog) {
        detail::apply_op(m, radix, op, ket);
        if (ket.empty()) {
          break;
        }
      }
      for (auto const& [j, amp] : ket) {
        if (j == idx) {
          total += weight * amp;
        }
      }

      std::size_t k = 0;
      while (k < m.slots && ++pos[k] == support[k].size()) {
        pos[k++] = 0;
      }
      if (k == m.slots) {
        break;
      }
    }
    return total;
  }

  inline double phi_model(ModelParams const& p, PartialBijection const& r, ModelOptions const& opts = {}) {
    check_support(r, p.N);
    return expectation(build_slot_model(p, opts), program_for(r));
  }

  // Dense matrices on H^(tensor N), slot 1 the most significant factor.
  struct EmbeddedGenerators {
    std::size_t            local_dim = 0;
    std::size_t            slots     = 0;
    std::vector<DenseReal> s;     // s[k-1] = T(s_k)
    DenseReal              eps1;  // T(e{1})
    DenseReal              rho;   // rho_1 x ... x rho_N
  };

  inline EmbeddedGenerators embed_generators(SlotModel const& m) {
    std::uint64_t const dim = m.dimension();
    if (dim > max_dense_dim()) {
      throw ResourceGuardError("dense dimension D^N = " + std::to_string(m.local_dim)
                               + "^" + std::to_string(m.slots) + " exceeds ROOKCHAR_MAX_DIM = "
                               + std::to_string(max_dense_dim()));
    }
    EmbeddedGenerators g;
    g.local_dim = m.local_dim;
    g.slots     = m.slots;
    auto const n = static_cast<std::size_t>(dim);

    // digit of slot k (0-based) in the kron ordering
    std::vector<std::size_t> place(m.slots);
    std::size_t              p = 1;
    for (std::size_t k = m.slots; k-- > 0;) {
      place[k] = p;
      p *= m.local_dim;
    }
    auto digit = [&](std::size_t idx, std::size_t k) {
      return (idx / place[k]) % m.local_dim;
    };

    for (std::size_t k = 0; k + 1 < m.slots; ++k) {
      DenseReal t(n, n);
      for (std::size_t col = 0; col < n; ++col) {
        std::size_t const x   = digit(col, k);
        std::size_t const y   = digit(col, k + 1);
        std::size_t const row = col - x * place[k] - y * place[k + 1] + y * place[k]
                                + x * place[k + 1];
        bool const flip = m.sign_twist && m.negative[x] && m.negative[y];
        t(row, col)     = flip ? -1.0 : 1.0;
      }
      g.s.push_back(std::move(t));
    }

    g.eps1 = kron(DenseReal::outer(m.v), DenseReal::identity(n / m.local_dim));
    g.rho  = DenseReal::identity(1);
    for (std::size_t k = 0; k < m.slots; ++k) {
      g.rho = kron(g.rho, DenseReal::diagonal(m.rho[k]));
    }
    return g;
  }

  inline EmbeddedGenerators embed_generators(ModelParams const& p, ModelOptions const& opts = {}) {
    return embed_generators(build_slot_model(p, opts));
  }

  inline DenseReal evaluate_word(EmbeddedGenerators const& g, GeneratorWord const& w) {
    std::size_t const n   = g.rho.rows();
    DenseReal         out = DenseReal::identity(n);
    for (auto const& l : w) {
      if (l.kind == Letter::Kind::s) {
        if (l.index < 1 || l.index > g.s.size()) {
          throw SupportError("generator s" + std::to_string(l.index) + " needs more than N = "
                             + std::to_string(g.slots) + " slots");
        }
        out = matmul(out, g.s[l.index - 1]);
      } else {
        out = matmul(out, g.eps1);
      }
    }
    return out;
  }

  inline DenseReal represent(EmbeddedGenerators const& g, PartialBijection const& r) {
    check_support(r, g.slots);
    return evaluate_word(g, element_to_word(r));
  }

  inline double phi_model_dense(EmbeddedGenerators const& g, PartialBijection const& r) {
    return trace(matmul(represent(g, r), g.rho));
  }

  inline double phi_model_dense(ModelParams const& p, PartialBijection const& r, ModelOptions const& opts = {}) {
    return phi_model_dense(embed_generators(p, opts), r);
  }

}  // namespace rookchar
