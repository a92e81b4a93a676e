#include "crosscap/matrix.hpp"

#include <sstream>

#include "crosscap/errors.hpp"

namespace crosscap {

IntMatrix IntMatrix::identity(int n) {
  IntMatrix m(n, n);
  for (int i = 0; i < n; ++i) m(i, i) = 1;
  return m;
}

IntMatrix IntMatrix::operator*(const IntMatrix& other) const {
  if (cols_ != other.rows_) throw ParameterError("matrix dimension mismatch in product");
  IntMatrix out(rows_, other.cols_);
  for (int i = 0; i < rows_; ++i)
    for (int l = 0; l < cols_; ++l) {
      const mpz_class& a = (*this)(i, l);
      if (a == 0) continue;
      for (int j = 0; j < other.cols_; ++j) {
        const mpz_class& b = other(l, j);
        if (b != 0) out(i, j) += a * b;
      }
    }
  return out;
}

std::vector<mpz_class> IntMatrix::apply(const std::vector<mpz_class>& v) const {
  if (static_cast<int>(v.size()) != cols_) throw ParameterError("vector length mismatch");
  std::vector<mpz_class> out(rows_);
  for (int i = 0; i < rows_; ++i)
    for (int j = 0; j < cols_; ++j) {
      const mpz_class& a = (*this)(i, j);
      if (a != 0) out[i] += a * v[j];
    }
  return out;
}

IntMatrix IntMatrix::transpose() const {
  IntMatrix out(cols_, rows_);
  for (int i = 0; i < rows_; ++i)
    for (int j = 0; j < cols_; ++j) out(j, i) = (*this)(i, j);
  return out;
}

IntMatrix IntMatrix::power(unsigned exponent) const {
  if (rows_ != cols_) throw ParameterError("power of a non-square matrix");
  IntMatrix result = identity(rows_);
  IntMatrix base = *this;
  while (exponent > 0) {
    if (exponent & 1u) result = result * base;
    exponent >>= 1;
    if (exponent > 0) base = base * base;
  }
  return result;
}

IntMatrix IntMatrix::submatrix(const std::vector<int>& indices) const {
  const int s = static_cast<int>(indices.size());
  IntMatrix out(s, s);
  for (int i = 0; i < s; ++i)
    for (int j = 0; j < s; ++j) out(i, j) = (*this)(indices[i], indices[j]);
  return out;
}

bool IntMatrix::nonnegative() const {
  for (const auto& x : data_)
    if (x < 0) return false;
  return true;
}

mpz_class IntMatrix::column_sum(int c) const {
  mpz_class s = 0;
  for (int r = 0; r < rows_; ++r) s += (*this)(r, c);
  return s;
}

// Fraction-free Bareiss elimination.
mpz_class IntMatrix::determinant() const {
  if (rows_ != cols_) throw ParameterError("determinant of a non-square matrix");
  const int n = rows_;
  if (n == 0) return 1;
  IntMatrix a = *this;
  mpz_class prev = 1;
  int sign = 1;
  for (int k = 0; k < n - 1; ++k) {
    if (a(k, k) == 0) {
      int p = k + 1;
      while (p < n && a(p, k) == 0) ++p;
      if (p == n) return 0;
      for (int j = 0; j < n; ++j) std::swap(a(k, j), a(p, j));
      sign = -sign;
    }
    for (int i = k + 1; i < n; ++i)
      for (int j = k + 1; j < n; ++j) {
        a(i, j) = a(i, j) * a(k, k) - a(i, k) * a(k, j);
        mpz_divexact(a(i, j).get_mpz_t(), a(i, j).get_mpz_t(), prev.get_mpz_t());
      }
    prev = a(k, k);
  }
  return sign * a(n - 1, n - 1);
}

std::string write_matrix(const IntMatrix& m) {
  std::ostringstream os;
  os << "matrix " << m.rows() << ' ' << m.cols() << '\n';
  for (int i = 0; i < m.rows(); ++i) {
    for (int j = 0; j < m.cols(); ++j) os << (j ? " " : "") << m(i, j).get_str();
    os << '\n';
  }
  return os.str();
}

IntMatrix read_matrix(const std::string& text) {
  std::istringstream is(text);
  std::string tag;
  int r = 0, c = 0;
  if (!(is >> tag >> r >> c) || tag != "matrix" || r < 0 || c < 0) throw ParseError("expected 'matrix R C' header");
  IntMatrix m(r, c);
  for (int i = 0; i < r; ++i)
    for (int j = 0; j < c; ++j) {
      std::string tok;
      if (!(is >> tok)) throw ParseError("matrix ends early at row " + std::to_string(i));
      if (m(i, j).set_str(tok, 10) != 0) throw ParseError("bad integer '" + tok + "'");
    }
  std::string extra;
  if (is >> extra) throw ParseError("trailing data after matrix");
  return m;
}

}  // namespace crosscap
