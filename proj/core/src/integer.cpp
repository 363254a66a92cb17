#include "bitwist/integer.hpp"

#include <cassert>
#include <sstream>
#include <stdexcept>
#include <utility>

namespace bitwist {

  Integer mod(Integer const& a, Integer const& m) {
    Integer r = a % m;
    if (r < 0) {
      r += (m < 0 ? Integer(-m) : m);
    }
    return r;
  }

  Integer gcd(Integer const& a, Integer const& b) {
    return boost::multiprecision::gcd(a, b);
  }

  Integer lcm(Integer const& a, Integer const& b) {
    if (a == 0 || b == 0) {
      return 0;
    }
    return boost::multiprecision::abs(a / gcd(a, b) * b);
  }

  Integer ipow(Integer base, unsigned exponent) {
    Integer result = 1;
    while (exponent != 0) {
      if (exponent & 1u) {
        result *= base;
      }
      base *= base;
      exponent >>= 1;
    }
    return result;
  }

  std::string to_string(Integer const& x) {
    return x.str();
  }

  std::string to_string(IntVector const& v) {
    std::string out = "[";
    for (std::size_t i = 0; i < v.size(); ++i) {
      if (i != 0) {
        out += ",";
      }
      out += v[i].str();
    }
    return out + "]";
  }

  IntMatrix::IntMatrix(
      std::initializer_list<std::initializer_list<long long>> rows)
      : rows_(rows.size()), cols_(rows.size() == 0 ? 0 : rows.begin()->size()) {
    data_.reserve(rows_ * cols_);
    for (auto const& r : rows) {
      if (r.size() != cols_) {
        throw std::invalid_argument("IntMatrix: ragged initializer");
      }
      for (long long x : r) {
        data_.emplace_back(x);
      }
    }
  }

  IntMatrix IntMatrix::identity(std::size_t n) {
    IntMatrix m(n, n);
    for (std::size_t i = 0; i < n; ++i) {
      m(i, i) = 1;
    }
    return m;
  }

  IntMatrix IntMatrix::diagonal(IntVector const& entries) {
    IntMatrix m(entries.size(), entries.size());
    for (std::size_t i = 0; i < entries.size(); ++i) {
      m(i, i) = entries[i];
    }
    return m;
  }

  IntMatrix IntMatrix::from_rows(std::vector<IntVector> const& rows) {
    std::size_t const cols = rows.empty() ? 0 : rows.front().size();
    IntMatrix         m(rows.size(), cols);
    for (std::size_t i = 0; i < rows.size(); ++i) {
      if (rows[i].size() != cols) {
        throw std::invalid_argument("IntMatrix: ragged rows");
      }
      for (std::size_t j = 0; j < cols; ++j) {
        m(i, j) = rows[i][j];
      }
    }
    return m;
  }

  IntVector IntMatrix::row(std::size_t i) const {
    return IntVector(data_.begin() + i * cols_,
                     data_.begin() + (i + 1) * cols_);
  }

  IntVector IntMatrix::column(std::size_t j) const {
    IntVector c(rows_);
    for (std::size_t i = 0; i < rows_; ++i) {
      c[i] = (*this)(i, j);
    }
    return c;
  }

  IntMatrix IntMatrix::transpose() const {
    IntMatrix t(cols_, rows_);
    for (std::size_t i = 0; i < rows_; ++i) {
      for (std::size_t j = 0; j < cols_; ++j) {
        t(j, i) = (*this)(i, j);
      }
    }
    return t;
  }

  Integer IntMatrix::determinant() const {
    if (!is_square()) {
      throw std::invalid_argument("determinant of a non-square matrix");
    }
    std::size_t const n = rows_;
    if (n == 0) {
      return 1;
    }
    IntMatrix a    = *this;
    Integer   prev = 1;
    int       sign = 1;
    for (std::size_t k = 0; k + 1 < n; ++k) {
      if (a(k, k) == 0) {
        std::size_t p = k + 1;
        while (p < n && a(p, k) == 0) {
          ++p;
        }
        if (p == n) {
          return 0;
        }
        a.swap_rows(k, p);
        sign = -sign;
      }
      for (std::size_t i = k + 1; i < n; ++i) {
        for (std::size_t j = k + 1; j < n; ++j) {
          a(i, j) = (a(i, j) * a(k, k) - a(i, k) * a(k, j)) / prev;
        }
      }
      prev = a(k, k);
    }
    return sign * a(n - 1, n - 1);
  }

  bool IntMatrix::is_zero() const {
    for (auto const& x : data_) {
      if (x != 0) {
        return false;
      }
    }
    return true;
  }

  void IntMatrix::swap_rows(std::size_t a, std::size_t b) {
    if (a == b) {
      return;
    }
    for (std::size_t j = 0; j < cols_; ++j) {
      std::swap((*this)(a, j), (*this)(b, j));
    }
  }

  void IntMatrix::swap_cols(std::size_t a, std::size_t b) {
    if (a == b) {
      return;
    }
    for (std::size_t i = 0; i < rows_; ++i) {
      std::swap((*this)(i, a), (*this)(i, b));
    }
  }

  void IntMatrix::add_row_multiple(std::size_t dst, std::size_t src,
                                   Integer const& factor) {
    if (factor == 0) {
      return;
    }
    for (std::size_t j = 0; j < cols_; ++j) {
      (*this)(dst, j) += factor * (*this)(src, j);
    }
  }

  void IntMatrix::add_col_multiple(std::size_t dst, std::size_t src,
                                   Integer const& factor) {
    if (factor == 0) {
      return;
    }
    for (std::size_t i = 0; i < rows_; ++i) {
      (*this)(i, dst) += factor * (*this)(i, src);
    }
  }

  void IntMatrix::negate_row(std::size_t i) {
    for (std::size_t j = 0; j < cols_; ++j) {
      (*this)(i, j) = -(*this)(i, j);
    }
  }

  void IntMatrix::negate_col(std::size_t j) {
    for (std::size_t i = 0; i < rows_; ++i) {
      (*this)(i, j) = -(*this)(i, j);
    }
  }

  std::string IntMatrix::to_string() const {
    std::string out = "[";
    for (std::size_t i = 0; i < rows_; ++i) {
      if (i != 0) {
        out += ",";
      }
      out += bitwist::to_string(row(i));
    }
    return out + "]";
  }

  IntMatrix operator*(IntMatrix const& a, IntMatrix const& b) {
    if (a.cols() != b.rows()) {
      throw std::invalid_argument("matrix product: shape mismatch");
    }
    IntMatrix c(a.rows(), b.cols());
    for (std::size_t i = 0; i < a.rows(); ++i) {
      for (std::size_t k = 0; k < a.cols(); ++k) {
        if (a(i, k) == 0) {
          continue;
        }
        for (std::size_t j = 0; j < b.cols(); ++j) {
          c(i, j) += a(i, k) * b(k, j);
        }
      }
    }
    return c;
  }

  IntMatrix operator+(IntMatrix const& a, IntMatrix const& b) {
    if (a.rows() != b.rows() || a.cols() != b.cols()) {
      throw std::invalid_argument("matrix sum: shape mismatch");
    }
    IntMatrix c(a.rows(), a.cols());
    for (std::size_t i = 0; i < a.rows(); ++i) {
      for (std::size_t j = 0; j < a.cols(); ++j) {
        c(i, j) = a(i, j) + b(i, j);
      }
    }
    return c;
  }

  IntMatrix operator-(IntMatrix const& a, IntMatrix const& b) {
    if (a.rows() != b.rows() || a.cols() != b.cols()) {
      throw std::invalid_argument("matrix difference: shape mismatch");
    }
    IntMatrix c(a.rows(), a.cols());
    for (std::size_t i = 0; i < a.rows(); ++i) {
      for (std::size_t j = 0; j < a.cols(); ++j) {
        c(i, j) = a(i, j) - b(i, j);
      }
    }
    return c;
  }

  IntVector operator*(IntMatrix const& a, IntVector const& v) {
    if (a.cols() != v.size()) {
      throw std::invalid_argument("matrix-vector product: shape mismatch");
    }
    IntVector out(a.rows());
    for (std::size_t i = 0; i < a.rows(); ++i) {
      for (std::size_t j = 0; j < a.cols(); ++j) {
        out[i] += a(i, j) * v[j];
      }
    }
    return out;
  }

  IntMatrix hconcat(IntMatrix const& a, IntMatrix const& b) {
    if (a.rows() != b.rows()) {
      throw std::invalid_argument("hconcat: row count mismatch");
    }
    IntMatrix c(a.rows(), a.cols() + b.cols());
    for (std::size_t i = 0; i < a.rows(); ++i) {
      for (std::size_t j = 0; j < a.cols(); ++j) {
        c(i, j) = a(i, j);
      }
      for (std::size_t j = 0; j < b.cols(); ++j) {
        c(i, a.cols() + j) = b(i, j);
      }
    }
    return c;
  }

}  // namespace bitwist
