#pragma once

// Small row-major dense real matrices for the finite tensor oracles.

#include <algorithm>
#include <cmath>
#include <cstddef>
#include <stdexcept>
#include <vector>

namespace rookchar {

  class DenseReal {
   public:
    DenseReal() = default;

    DenseReal(std::size_t rows, std::size_t cols, double fill = 0.0)
        : rows_(rows), cols_(cols), data_(rows * cols, fill) {}

    static DenseReal identity(std::size_t n) {
      DenseReal m(n, n);
      for (std::size_t i = 0; i < n; ++i) {
        m(i, i) = 1.0;
      }
      return m;
    }

    static DenseReal diagonal(std::vector<double> const& d) {
      DenseReal m(d.size(), d.size());
      for (std::size_t i = 0; i < d.size(); ++i) {
        m(i, i) = d[i];
      }
      return m;
    }

    // |v><v|
    static DenseReal outer(std::vector<double> const& v) {
      DenseReal m(v.size(), v.size());
      for (std::size_t i = 0; i < v.size(); ++i) {
        for (std::size_t j = 0; j < v.size(); ++j) {
          m(i, j) = v[i] * v[j];
        }
      }
      return m;
    }

    std::size_t rows() const noexcept {
      return rows_;
    }

    std::size_t cols() const noexcept {
      return cols_;
    }

    double& operator()(std::size_t i, std::size_t j) {
      return data_[i * cols_ + j];
    }

    double operator()(std::size_t i, std::size_t j) const {
      return data_[i * cols_ + j];
    }

    std::vector<double> const& data() const noexcept {
      return data_;
    }

   private:
    std::size_t         rows_ = 0;
    std::size_t         cols_ = 0;
    std::vector<double> data_;
  };

  class DimensionError : public std::invalid_argument {
   public:
    using std::invalid_argument::invalid_argument;
  };

  inline DenseReal matmul(DenseReal const& a, DenseReal const& b) {
    if (a.cols() != b.rows()) {
      throw DimensionError("matmul: inner dimensions differ");
    }
    DenseReal c(a.rows(), b.cols());
    for (std::size_t i = 0; i < a.rows(); ++i) {
      for (std::size_t k = 0; k < a.cols(); ++k) {
        double const aik = a(i, k);
        if (aik == 0.0) {
          continue;
        }
        for (std::size_t j = 0; j < b.cols(); ++j) {
          c(i, j) += aik * b(k, j);
        }
      }
    }
    return c;
  }

  inline DenseReal kron(DenseReal const& a, DenseReal const& b) {
    DenseReal c(a.rows() * b.rows(), a.cols() * b.cols());
    for (std::size_t i = 0; i < a.rows(); ++i) {
      for (std::size_t j = 0; j < a.cols(); ++j) {
        double const aij = a(i, j);
        if (aij == 0.0) {
          continue;
        }
        for (std::size_t k = 0; k < b.rows(); ++k) {
          for (std::size_t l = 0; l < b.cols(); ++l) {
            c(i * b.rows() + k, j * b.cols() + l) = aij * b(k, l);
          }
        }
      }
    }
    return c;
  }

  inline double trace(DenseReal const& a) {
    if (a.rows() != a.cols()) {
      throw DimensionError("trace: matrix is not square");
    }
    double t = 0.0;
    for (std::size_t i = 0; i < a.rows(); ++i) {
      t += a(i, i);
    }
    return t;
  }

  inline std::vector<double> apply(DenseReal const& a, std::vector<double> const& x) {
    if (a.cols() != x.size()) {
      throw DimensionError("apply: dimension mismatch");
    }
    std::vector<double> y(a.rows(), 0.0);
    for (std::size_t i = 0; i < a.rows(); ++i) {
      for (std::size_t j = 0; j < a.cols(); ++j) {
        y[i] += a(i, j) * x[j];
      }
    }
    return y;
  }

  inline DenseReal transpose(DenseReal const& a) {
    DenseReal t(a.cols(), a.rows());
    for (std::size_t i = 0; i < a.rows(); ++i) {
      for (std::size_t j = 0; j < a.cols(); ++j) {
        t(j, i) = a(i, j);
      }
    }
    return t;
  }

  inline double max_abs_diff(DenseReal const& a, DenseReal const& b) {
    if (a.rows() != b.rows() || a.cols() != b.cols()) {
      throw DimensionError("max_abs_diff: shapes differ");
    }
    double m = 0.0;
    for (std::size_t i = 0; i < a.data().size(); ++i) {
      m = std::max(m, std::abs(a.data()[i] - b.data()[i]));
    }
    return m;
  }

}  // namespace rookchar
