#pragma once

// Words over Popova's generators of R_infinity: the adjacent transpositions
// s_i = (i i+1) and the idempotent e{1}.

#include <cstddef>
#include <string>
#include <vector>

#include "partial_bijection.hpp"

namespace rookchar {

  struct Letter {
    enum class Kind { s, eps1 };

    Kind       kind  = Kind::s;
    point_type index = 1;  // i for s_i; unused for eps1

    static Letter S(point_type i) {
      return {Kind::s, i};
    }

    static Letter Eps1() {
      return {Kind::eps1, 1};
    }

    bool operator==(Letter const&) const = default;
  };

  using GeneratorWord = std::vector<Letter>;

  inline PartialBijection generator_element(Letter const& l) {
    return l.kind == Letter::Kind::s
               ? PartialBijection::transposition(l.index, l.index + 1)
               : PartialBijection::idempotent({1});
  }

  // l_1 l_2 ... l_k as a semigroup product.
  inline PartialBijection word_to_element(GeneratorWord const& w) {
    PartialBijection r;
    for (auto const& l : w) {
      r = compose(r, generator_element(l));
    }
    return r;
  }

  inline std::string render(GeneratorWord const& w) {
    std::string out;
    for (auto const& l : w) {
      if (!out.empty()) {
        out += ' ';
      }
      out += l.kind == Letter::Kind::s ? "s" + std::to_string(l.index) : "e1";
    }
    return out.empty() ? "()" : out;
  }

  namespace detail {
    // (1 k) = s_{k-1} ... s_2 s_1 s_2 ... s_{k-1}
    inline void append_transposition_1k(GeneratorWord& w, point_type k) {
      for (point_type j = k - 1; j >= 2; --j) {
        w.push_back(Letter::S(j));
      }
      w.push_back(Letter::S(1));
      for (point_type j = 2; j <= k - 1; ++j) {
        w.push_back(Letter::S(j));
      }
    }
  }  // namespace detail

  // Factor r = s * e_A with s a permutation, write s by bubble sort and
  // each e{k} as (1 k) e{1} (1 k). Not minimal.
  inline GeneratorWord element_to_word(PartialBijection const& r) {
    std::size_t const n = r.bound();
    // Extend r to a permutation s by sending D(r)'s complement onto I(r)'s
    // complement in increasing order.
    auto const              killed = r.domain_complement();
    auto const              free   = r.range_complement();
    std::vector<point_type> s(r.images());
    for (std::size_t i = 0; i < killed.size(); ++i) {
      s[killed[i] - 1] = free[i];
    }
    // Sorting the one-line notation by adjacent swaps multiplies s on the
    // right by s_j, so s = s_{j_m} ... s_{j_1}.
    std::vector<point_type> swaps;
    for (bool changed = true; changed;) {
      changed = false;
      for (std::size_t j = 0; j + 1 < n; ++j) {
        if (s[j] > s[j + 1]) {
          std::swap(s[j], s[j + 1]);
          swaps.push_back(static_cast<point_type>(j + 1));
          changed = true;
        }
      }
    }
    GeneratorWord w;
    for (auto it = swaps.rbegin(); it != swaps.rend(); ++it) {
      w.push_back(Letter::S(*it));
    }
    for (auto k : killed) {
      if (k == 1) {
        w.push_back(Letter::Eps1());
        continue;
      }
      detail::append_transposition_1k(w, k);
      w.push_back(Letter::Eps1());
      detail::append_transposition_1k(w, k);
    }
    return w;
  }

  struct Relation {
    std::string   name;
    GeneratorWord lhs;
    GeneratorWord rhs;
  };

  // Every instance of Popova's defining relations with generator indices
  // <= n.
  inline std::vector<Relation> popova_relations(point_type n) {
    using L = Letter;
    std::vector<Relation> out;
    for (point_type i = 1; i <= n; ++i) {
      out.push_back({"s" + std::to_string(i) + "^2 = e", {L::S(i), L::S(i)}, {}});
    }
    for (point_type i = 1; i <= n; ++i) {
      for (point_type j = i + 2; j <= n; ++j) {
        out.push_back({"s" + std::to_string(i) + " s" + std::to_string(j) + " = s"
                           + std::to_string(j) + " s" + std::to_string(i),
                       {L::S(i), L::S(j)},
                       {L::S(j), L::S(i)}});
      }
    }
    for (point_type i = 1; i + 1 <= n; ++i) {
      out.push_back({"braid at s" + std::to_string(i),
                     {L::S(i), L::S(i + 1), L::S(i)},
                     {L::S(i + 1), L::S(i), L::S(i + 1)}});
    }
    out.push_back({"e1^2 = e1", {L::Eps1(), L::Eps1()}, {L::Eps1()}});
    if (n >= 1) {
      GeneratorWord const core = {L::Eps1(), L::S(1), L::Eps1()};
      out.push_back({"e1 s1 e1 s1 = e1 s1 e1",
                     {L::Eps1(), L::S(1), L::Eps1(), L::S(1)},
                     core});
      out.push_back({"s1 e1 s1 e1 = e1 s1 e1",
                     {L::S(1), L::Eps1(), L::S(1), L::Eps1()},
                     core});
    }
    return out;
  }

  struct RelationReport {
    std::size_t              checked = 0;
    std::vector<std::string> violations;

    bool passed() const noexcept {
      return violations.empty();
    }
  };

  // Checks each relation under an arbitrary word evaluation, so the same
  // list drives both the semigroup itself and matrix representations of it.
  template <typename Evaluate, typename Equal>
  RelationReport verify_relations(std::vector<Relation> const& relations,
                                  Evaluate&&                   evaluate,
                                  Equal&&                      equal) {
    RelationReport report;
    for (auto const& rel : relations) {
      ++report.checked;
      if (!equal(evaluate(rel.lhs), evaluate(rel.rhs))) {
        report.violations.push_back(rel.name + ": " + render(rel.lhs)
                                    + " != " + render(rel.rhs));
      }
    }
    return report;
  }

  inline RelationReport verify_popova_relations(point_type n) {
    return verify_relations(
        popova_relations(n),
        [](GeneratorWord const& w) { return word_to_element(w); },
        [](PartialBijection const& a, PartialBijection const& b) {
          return a == b;
        });
  }

}  // namespace rookchar
