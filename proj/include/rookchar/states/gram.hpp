#pragma once

// Gram matrices of a function on R_infinity with exact PSD certificates.

#include <cstddef>
#include <set>
#include <stdexcept>
#include <string>
#include <vector>

#include "../linalg/rational_matrix.hpp"
#include "../partial_bijection.hpp"

namespace rookchar {

  // star_j_i: M[i][j] = f(r_j^* r_i).  i_star_j: M[i][j] = f(r_i r_j^*).
  enum class GramOrdering { star_j_i, i_star_j };

  inline char const* to_string(GramOrdering o) {
    return o == GramOrdering::star_j_i ? "starJI" : "iStarJ";
  }

  inline GramOrdering parse_gram_ordering(std::string const& text) {
    if (text == "starJI") {
      return GramOrdering::star_j_i;
    }
    if (text == "iStarJ") {
      return GramOrdering::i_star_j;
    }
    throw std::invalid_argument("unknown Gram ordering \"" + text
                                + "\" (expected starJI or iStarJ)");
  }

  struct GramReport {
    std::vector<PartialBijection> elements;
    GramOrdering                  ordering = GramOrdering::star_j_i;
    RationalMatrix                matrix;
    PsdCertificate                certificate;
    std::string                   note;
  };

  template <typename Function>
  RationalMatrix build_gram(Function&&                           f,
                            std::vector<PartialBijection> const& elements,
                            GramOrdering                         ordering) {
    std::set<PartialBijection> seen(elements.begin(), elements.end());
    if (seen.size() != elements.size()) {
      throw std::invalid_argument("gram_matrix: elements must be distinct");
    }
    std::size_t const n = elements.size();
    RationalMatrix    m(n);
    std::vector<PartialBijection> starred;
    starred.reserve(n);
    for (auto const& r : elements) {
      starred.push_back(star(r));
    }
    for (std::size_t i = 0; i < n; ++i) {
      for (std::size_t j = 0; j < n; ++j) {
        m(i, j) = ordering == GramOrdering::star_j_i ? f(compose(starred[j], elements[i]))
                                                     : f(compose(elements[i], starred[j]));
      }
    }
    return m;
  }

  template <typename Function>
  GramReport gram_matrix(Function&&                           f,
                         std::vector<PartialBijection> const& elements,
                         GramOrdering ordering = GramOrdering::star_j_i) {
    GramReport report;
    report.elements = elements;
    report.ordering = ordering;
    report.matrix   = build_gram(f, elements, ordering);
    if (report.matrix.is_symmetric()) {
      report.certificate = psd_certificate(report.matrix);
    } else {
      // Not Hermitian, so not positive definite; there is no witness vector.
      report.certificate.verdict = PsdVerdict::not_psd;
      report.note                = "matrix is not symmetric";
    }
    return report;
  }

}  // namespace rookchar
