#pragma once

#include <gmpxx.h>

#include <iosfwd>
#include <string>
#include <vector>

namespace crosscap {

// Dense square-or-rectangular matrix of arbitrary-precision integers,
// row-major.
class IntMatrix {
 public:
  IntMatrix() = default;
  IntMatrix(int rows, int cols) : rows_(rows), cols_(cols), data_(static_cast<std::size_t>(rows) * cols) {}
  static IntMatrix identity(int n);

  int rows() const { return rows_; }
  int cols() const { return cols_; }
  mpz_class& operator()(int r, int c) { return data_[static_cast<std::size_t>(r) * cols_ + c]; }
  const mpz_class& operator()(int r, int c) const { return data_[static_cast<std::size_t>(r) * cols_ + c]; }

  IntMatrix operator*(const IntMatrix& other) const;
  std::vector<mpz_class> apply(const std::vector<mpz_class>& v) const;
  IntMatrix transpose() const;
  IntMatrix power(unsigned exponent) const;
  IntMatrix submatrix(const std::vector<int>& indices) const;

  bool nonnegative() const;
  mpz_class column_sum(int c) const;
  mpz_class determinant() const;

  friend bool operator==(const IntMatrix& a, const IntMatrix& b) {
    return a.rows_ == b.rows_ && a.cols_ == b.cols_ && a.data_ == b.data_;
  }

 private:
  int rows_ = 0;
  int cols_ = 0;
  std::vector<mpz_class> data_;
};

// Plain text: "matrix R C" followed by R rows of C integers.
std::string write_matrix(const IntMatrix& m);
IntMatrix read_matrix(const std::string& text);

}  // namespace crosscap
