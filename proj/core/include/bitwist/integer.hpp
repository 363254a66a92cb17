#ifndef BITWIST_INTEGER_HPP_
#define BITWIST_INTEGER_HPP_

#include <cstddef>
#include <initializer_list>
#include <string>
#include <vector>

#include <boost/multiprecision/cpp_int.hpp>

namespace bitwist {

  using Integer   = boost::multiprecision::cpp_int;
  using IntVector = std::vector<Integer>;

  //! Nonnegative remainder of a modulo m (m > 0).
  Integer mod(Integer const& a, Integer const& m);
  Integer gcd(Integer const& a, Integer const& b);
  Integer lcm(Integer const& a, Integer const& b);
  Integer ipow(Integer base, unsigned exponent);

  std::string to_string(Integer const& x);
  std::string to_string(IntVector const& v);

  //! Dense row-major integer matrix with exact entries.
  class IntMatrix {
   public:
    IntMatrix() = default;
    IntMatrix(std::size_t rows, std::size_t cols)
        : rows_(rows), cols_(cols), data_(rows * cols) {}
    IntMatrix(std::initializer_list<std::initializer_list<long long>> rows);

    static IntMatrix identity(std::size_t n);
    static IntMatrix diagonal(IntVector const& entries);
    static IntMatrix from_rows(std::vector<IntVector> const& rows);

    std::size_t rows() const noexcept { return rows_; }
    std::size_t cols() const noexcept { return cols_; }
    bool        is_square() const noexcept { return rows_ == cols_; }

    Integer& operator()(std::size_t i, std::size_t j) {
      return data_[i * cols_ + j];
    }
    Integer const& operator()(std::size_t i, std::size_t j) const {
      return data_[i * cols_ + j];
    }

    IntVector row(std::size_t i) const;
    IntVector column(std::size_t j) const;

    IntMatrix transpose() const;
    //! Exact determinant by fraction-free (Bareiss) elimination.
    Integer determinant() const;
    bool    is_zero() const;

    void swap_rows(std::size_t a, std::size_t b);
    void swap_cols(std::size_t a, std::size_t b);
    //! row[dst] += factor * row[src]
    void add_row_multiple(std::size_t dst, std::size_t src,
                          Integer const& factor);
    void add_col_multiple(std::size_t dst, std::size_t src,
                          Integer const& factor);
    void negate_row(std::size_t i);
    void negate_col(std::size_t j);

    friend bool operator==(IntMatrix const&, IntMatrix const&) = default;

    std::string to_string() const;

   private:
    std::size_t          rows_ = 0;
    std::size_t          cols_ = 0;
    std::vector<Integer> data_;
  };

  IntMatrix operator*(IntMatrix const& a, IntMatrix const& b);
  IntMatrix operator+(IntMatrix const& a, IntMatrix const& b);
  IntMatrix operator-(IntMatrix const& a, IntMatrix const& b);
  IntVector operator*(IntMatrix const& a, IntVector const& v);

  //! Horizontal concatenation [a | b].
  IntMatrix hconcat(IntMatrix const& a, IntMatrix const& b);

}  // namespace bitwist

#endif  // BITWIST_INTEGER_HPP_
