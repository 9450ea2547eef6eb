#pragma once

#include <boost/multiprecision/cpp_int.hpp>

#include <cctype>
#include <cstddef>
#include <cstdint>
#include <initializer_list>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

#include "hchain/errors.hpp"

namespace hchain {

using Integer = boost::multiprecision::cpp_int;
using Rational = boost::multiprecision::cpp_rational;
using RationalVector = std::vector<Rational>;

namespace detail {

// Boost rejects negative denominators, so move the sign up first.
inline Rational make_rational(Integer num, Integer den) {
  if (den < 0) {
    num = -num;
    den = -den;
  }
  return Rational(num, den);
}

}  // namespace detail

inline Rational rational(std::int64_t num, std::int64_t den = 1) {
  if (den == 0) throw DomainError("rational: zero denominator");
  return detail::make_rational(Integer(num), Integer(den));
}

inline Integer numerator_of(const Rational& q) { return boost::multiprecision::numerator(q); }
inline Integer denominator_of(const Rational& q) { return boost::multiprecision::denominator(q); }

// "p/q", or "p" when q == 1.
inline std::string to_string(const Rational& q) {
  Integer den = denominator_of(q);
  if (den == 1) return numerator_of(q).str();
  return numerator_of(q).str() + "/" + den.str();
}

namespace detail {

inline bool is_integer_literal(std::string_view s) {
  std::size_t i = 0;
  if (!s.empty() && (s[0] == '-' || s[0] == '+')) i = 1;
  if (i == s.size()) return false;
  for (; i < s.size(); ++i)
    if (!std::isdigit(static_cast<unsigned char>(s[i]))) return false;
  return true;
}

inline Integer parse_integer(std::string_view s) {
  if (!is_integer_literal(s)) throw ParseError("not an integer: '" + std::string(s) + "'");
  if (s[0] == '+') s.remove_prefix(1);
  return Integer(std::string(s));
}

inline std::string_view trim(std::string_view s) {
  while (!s.empty() && std::isspace(static_cast<unsigned char>(s.front()))) s.remove_prefix(1);
  while (!s.empty() && std::isspace(static_cast<unsigned char>(s.back()))) s.remove_suffix(1);
  return s;
}

}  // namespace detail

// Accepts "p" or "p/q" with q != 0; the result is reduced.
inline Rational parse_rational(std::string_view text) {
  std::string_view s = detail::trim(text);
  auto slash = s.find('/');
  if (slash == std::string_view::npos) return Rational(detail::parse_integer(s));
  Integer num = detail::parse_integer(s.substr(0, slash));
  Integer den = detail::parse_integer(s.substr(slash + 1));
  if (den == 0) throw ParseError("zero denominator in '" + std::string(text) + "'");
  return detail::make_rational(num, den);
}

inline Rational dot(const RationalVector& a, const RationalVector& b) {
  if (a.size() != b.size()) throw DimensionError("dot: length mismatch");
  Rational sum = 0;
  for (std::size_t i = 0; i < a.size(); ++i) sum += a[i] * b[i];
  return sum;
}

// Dense row-major matrix over the rationals. Meant for n <= ~12.
class RationalMatrix {
 public:
  RationalMatrix() = default;
  RationalMatrix(std::size_t rows, std::size_t cols) : rows_(rows), cols_(cols), data_(rows * cols) {}

  RationalMatrix(std::initializer_list<std::initializer_list<Rational>> rows) {
    rows_ = rows.size();
    cols_ = rows_ == 0 ? 0 : rows.begin()->size();
    data_.reserve(rows_ * cols_);
    for (const auto& row : rows) {
      if (row.size() != cols_) throw DimensionError("matrix rows must have equal length");
      data_.insert(data_.end(), row.begin(), row.end());
    }
  }

  static RationalMatrix from_rows(const std::vector<RationalVector>& rows) {
    RationalMatrix m(rows.size(), rows.empty() ? 0 : rows.front().size());
    for (std::size_t i = 0; i < rows.size(); ++i) {
      if (rows[i].size() != m.cols_) throw DimensionError("matrix rows must have equal length");
      for (std::size_t j = 0; j < m.cols_; ++j) m(i, j) = rows[i][j];
    }
    return m;
  }

  static RationalMatrix identity(std::size_t n) {
    RationalMatrix m(n, n);
    for (std::size_t i = 0; i < n; ++i) m(i, i) = 1;
    return m;
  }

  std::size_t rows() const { return rows_; }
  std::size_t cols() const { return cols_; }
  bool is_square() const { return rows_ == cols_; }

  Rational& operator()(std::size_t i, std::size_t j) { return data_[i * cols_ + j]; }
  const Rational& operator()(std::size_t i, std::size_t j) const { return data_[i * cols_ + j]; }

  RationalVector row(std::size_t i) const {
    return RationalVector(data_.begin() + static_cast<std::ptrdiff_t>(i * cols_),
                          data_.begin() + static_cast<std::ptrdiff_t>((i + 1) * cols_));
  }

  void swap_rows(std::size_t a, std::size_t b) {
    if (a == b) return;
    for (std::size_t j = 0; j < cols_; ++j) std::swap((*this)(a, j), (*this)(b, j));
  }

  RationalVector operator*(const RationalVector& x) const {
    if (x.size() != cols_) throw DimensionError("matrix-vector product: length mismatch");
    RationalVector y(rows_);
    for (std::size_t i = 0; i < rows_; ++i)
      for (std::size_t j = 0; j < cols_; ++j) y[i] += (*this)(i, j) * x[j];
    return y;
  }

  friend RationalMatrix operator*(const RationalMatrix& a, const RationalMatrix& b) {
    if (a.cols_ != b.rows_) throw DimensionError("matrix product: inner dimensions differ");
    RationalMatrix c(a.rows_, b.cols_);
    for (std::size_t i = 0; i < a.rows_; ++i)
      for (std::size_t k = 0; k < a.cols_; ++k) {
        if (a(i, k) == 0) continue;
        for (std::size_t j = 0; j < b.cols_; ++j) c(i, j) += a(i, k) * b(k, j);
      }
    return c;
  }

  friend bool operator==(const RationalMatrix&, const RationalMatrix&) = default;

 private:
  std::size_t rows_ = 0;
  std::size_t cols_ = 0;
  std::vector<Rational> data_;
};

// Fraction-free (Bareiss) elimination. On integer input every intermediate
// value is an integer minor, so nothing grows beyond the final determinant.
inline Rational det(const RationalMatrix& m) {
  if (!m.is_square()) throw DimensionError("det: matrix is not square");
  const std::size_t n = m.rows();
  if (n == 0) throw DimensionError("det: empty matrix");

  RationalMatrix a = m;
  Rational previous_pivot = 1;
  int sign = 1;
  for (std::size_t k = 0; k < n; ++k) {
    if (a(k, k) == 0) {
      std::size_t p = k + 1;
      while (p < n && a(p, k) == 0) ++p;
      if (p == n) return 0;
      a.swap_rows(k, p);
      sign = -sign;
    }
    for (std::size_t i = k + 1; i < n; ++i) {
      for (std::size_t j = k + 1; j < n; ++j)
        a(i, j) = (a(i, j) * a(k, k) - a(i, k) * a(k, j)) / previous_pivot;
      a(i, k) = 0;
    }
    previous_pivot = a(k, k);
  }
  return sign * a(n - 1, n - 1);
}

// Exact solution of m x = b by Gauss-Jordan elimination.
inline RationalVector solve(const RationalMatrix& m, const RationalVector& b) {
  if (!m.is_square()) throw DimensionError("solve: matrix is not square");
  const std::size_t n = m.rows();
  if (b.size() != n) throw DimensionError("solve: right-hand side has wrong length");

  RationalMatrix a = m;
  RationalVector x = b;
  for (std::size_t k = 0; k < n; ++k) {
    std::size_t p = k;
    while (p < n && a(p, k) == 0) ++p;
    if (p == n) throw SingularMatrixError("solve: matrix is singular");
    if (p != k) {
      a.swap_rows(k, p);
      std::swap(x[k], x[p]);
    }
    const Rational pivot = a(k, k);
    for (std::size_t j = k; j < n; ++j) a(k, j) /= pivot;
    x[k] /= pivot;
    for (std::size_t i = 0; i < n; ++i) {
      if (i == k || a(i, k) == 0) continue;
      const Rational factor = a(i, k);
      for (std::size_t j = k; j < n; ++j) a(i, j) -= factor * a(k, j);
      x[i] -= factor * x[k];
    }
  }
  return x;
}

inline RationalMatrix inverse(const RationalMatrix& m) {
  if (!m.is_square()) throw DimensionError("inverse: matrix is not square");
  const std::size_t n = m.rows();
  RationalMatrix inv(n, n);
  for (std::size_t j = 0; j < n; ++j) {
    RationalVector e(n, 0);
    e[j] = 1;
    const RationalVector col = solve(m, e);
    for (std::size_t i = 0; i < n; ++i) inv(i, j) = col[i];
  }
  return inv;
}

}  // namespace hchain
