#pragma once

// Exact scalars, small dense vectors and matrices.
//
// Everything in corelat is exact: lattice points are int64 vectors, inner
// products and statistics are cpp_rational.  Matrices here are tiny (rank <= 8)
// so the naive algorithms are the right ones.

#include <boost/multiprecision/cpp_int.hpp>

#include <cstdint>
#include <numeric>
#include <sstream>
#include <stdexcept>
#include <string>
#include <string_view>
#include <vector>

namespace corelat {

using BigInt = boost::multiprecision::cpp_int;
using Rational = boost::multiprecision::cpp_rational;

using IntVec = std::vector<std::int64_t>;
using RatVec = std::vector<Rational>;

/// Base class for every error thrown by the library.
class Error : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

/// A computation would exceed the configured enumeration cap.
class FeasibilityError : public Error {
 public:
  using Error::Error;
};

/// Two independent routes to the same quantity disagreed.
class ConsistencyError : public Error {
 public:
  using Error::Error;
};

inline Rational make_rational(std::int64_t num, std::int64_t den = 1) {
  if (den == 0) throw Error("zero denominator");
  return Rational(BigInt(num), BigInt(den));
}

inline BigInt to_bigint(__int128 v) {
  const bool neg = v < 0;
  unsigned __int128 u = neg ? static_cast<unsigned __int128>(-(v + 1)) + 1
                            : static_cast<unsigned __int128>(v);
  BigInt hi = static_cast<std::uint64_t>(u >> 64);
  BigInt out = (hi << 64) + static_cast<std::uint64_t>(u);
  return neg ? BigInt(-out) : out;
}

/// Lowest-terms "p/q"; integers print as "p".
inline std::string to_string(const Rational& r) { return r.str(); }

inline Rational parse_rational(std::string_view s) {
  const auto slash = s.find('/');
  try {
    if (slash == std::string_view::npos) return Rational(BigInt(std::string(s)));
    BigInt p(std::string(s.substr(0, slash)));
    BigInt q(std::string(s.substr(slash + 1)));
    if (q == 0) throw Error("zero denominator in rational: " + std::string(s));
    return Rational(p, q);
  } catch (const std::runtime_error&) {
    throw Error("malformed rational: " + std::string(s));
  }
}

inline bool is_integer(const Rational& r) {
  return boost::multiprecision::denominator(r) == 1;
}

inline std::int64_t to_int64(const Rational& r) {
  if (!is_integer(r)) throw Error("value is not an integer: " + r.str());
  return boost::multiprecision::numerator(r).convert_to<std::int64_t>();
}

inline BigInt floor_of(const Rational& r) {
  const BigInt& p = boost::multiprecision::numerator(r);
  const BigInt& q = boost::multiprecision::denominator(r);
  BigInt f = p / q;
  if (p % q != 0 && p < 0) f -= 1;
  return f;
}

inline BigInt ceil_of(const Rational& r) { return -floor_of(-r); }

inline RatVec to_rational(const IntVec& v) {
  RatVec out;
  out.reserve(v.size());
  for (auto x : v) out.emplace_back(x);
  return out;
}

inline bool all_integer(const RatVec& v) {
  for (const auto& x : v)
    if (!is_integer(x)) return false;
  return true;
}

inline IntVec to_integer(const RatVec& v) {
  IntVec out;
  out.reserve(v.size());
  for (const auto& x : v) out.push_back(to_int64(x));
  return out;
}

template <class T>
std::vector<T> scaled(const std::vector<T>& v, const T& s) {
  std::vector<T> out(v);
  for (auto& x : out) x *= s;
  return out;
}

template <class T>
std::vector<T> added(const std::vector<T>& a, const std::vector<T>& b) {
  if (a.size() != b.size()) throw Error("dimension mismatch");
  std::vector<T> out(a);
  for (std::size_t i = 0; i < a.size(); ++i) out[i] += b[i];
  return out;
}

template <class T>
std::vector<T> subtracted(const std::vector<T>& a, const std::vector<T>& b) {
  if (a.size() != b.size()) throw Error("dimension mismatch");
  std::vector<T> out(a);
  for (std::size_t i = 0; i < a.size(); ++i) out[i] -= b[i];
  return out;
}

template <class T>
std::string vec_to_string(const std::vector<T>& v) {
  std::ostringstream os;
  os << '(';
  for (std::size_t i = 0; i < v.size(); ++i) {
    if (i) os << ',';
    os << v[i];
  }
  os << ')';
  return os.str();
}

/// Row-major dense matrix.
template <class T>
class Matrix {
 public:
  Matrix() = default;
  Matrix(std::size_t rows, std::size_t cols, T fill = T(0))
      : rows_(rows), cols_(cols), data_(rows * cols, fill) {}

  static Matrix identity(std::size_t n) {
    Matrix m(n, n);
    for (std::size_t i = 0; i < n; ++i) m(i, i) = T(1);
    return m;
  }

  std::size_t rows() const { return rows_; }
  std::size_t cols() const { return cols_; }

  T& operator()(std::size_t i, std::size_t j) { return data_[i * cols_ + j]; }
  const T& operator()(std::size_t i, std::size_t j) const {
    return data_[i * cols_ + j];
  }

  Matrix transpose() const {
    Matrix t(cols_, rows_);
    for (std::size_t i = 0; i < rows_; ++i)
      for (std::size_t j = 0; j < cols_; ++j) t(j, i) = (*this)(i, j);
    return t;
  }

  friend Matrix operator*(const Matrix& a, const Matrix& b) {
    if (a.cols_ != b.rows_) throw Error("dimension mismatch in matrix product");
    Matrix c(a.rows_, b.cols_);
    for (std::size_t i = 0; i < a.rows_; ++i)
      for (std::size_t k = 0; k < a.cols_; ++k) {
        const T& aik = a(i, k);
        if (aik == T(0)) continue;
        for (std::size_t j = 0; j < b.cols_; ++j) c(i, j) += aik * b(k, j);
      }
    return c;
  }

  std::vector<T> operator*(const std::vector<T>& v) const {
    if (v.size() != cols_) throw Error("dimension mismatch in matrix-vector product");
    std::vector<T> out(rows_, T(0));
    for (std::size_t i = 0; i < rows_; ++i)
      for (std::size_t j = 0; j < cols_; ++j) out[i] += (*this)(i, j) * v[j];
    return out;
  }

  std::vector<T> row(std::size_t i) const {
    return std::vector<T>(data_.begin() + i * cols_, data_.begin() + (i + 1) * cols_);
  }
  std::vector<T> col(std::size_t j) const {
    std::vector<T> out(rows_);
    for (std::size_t i = 0; i < rows_; ++i) out[i] = (*this)(i, j);
    return out;
  }

  friend bool operator==(const Matrix&, const Matrix&) = default;
  friend auto operator<=>(const Matrix& a, const Matrix& b) {
    return a.data_ <=> b.data_;
  }

  const std::vector<T>& data() const { return data_; }

 private:
  std::size_t rows_ = 0;
  std::size_t cols_ = 0;
  std::vector<T> data_;
};

using IntMatrix = Matrix<std::int64_t>;
using RatMatrix = Matrix<Rational>;

inline RatMatrix to_rational(const IntMatrix& m) {
  RatMatrix r(m.rows(), m.cols());
  for (std::size_t i = 0; i < m.rows(); ++i)
    for (std::size_t j = 0; j < m.cols(); ++j) r(i, j) = Rational(m(i, j));
  return r;
}

/// Gauss-Jordan inverse over Q.  Throws on a singular input.
inline RatMatrix inverse(const RatMatrix& m) {
  const std::size_t n = m.rows();
  if (m.cols() != n) throw Error("inverse of non-square matrix");
  RatMatrix a = m;
  RatMatrix inv = RatMatrix::identity(n);
  for (std::size_t c = 0; c < n; ++c) {
    std::size_t p = c;
    while (p < n && a(p, c) == 0) ++p;
    if (p == n) throw Error("singular matrix");
    if (p != c)
      for (std::size_t j = 0; j < n; ++j) {
        std::swap(a(p, j), a(c, j));
        std::swap(inv(p, j), inv(c, j));
      }
    const Rational piv = a(c, c);
    for (std::size_t j = 0; j < n; ++j) {
      a(c, j) /= piv;
      inv(c, j) /= piv;
    }
    for (std::size_t i = 0; i < n; ++i) {
      if (i == c || a(i, c) == 0) continue;
      const Rational f = a(i, c);
      for (std::size_t j = 0; j < n; ++j) {
        a(i, j) -= f * a(c, j);
        inv(i, j) -= f * inv(c, j);
      }
    }
  }
  return inv;
}

inline RatMatrix inverse(const IntMatrix& m) { return inverse(to_rational(m)); }

/// Fraction-free (Bareiss) determinant.
inline std::int64_t determinant(const IntMatrix& m) {
  const std::size_t n = m.rows();
  if (m.cols() != n) throw Error("determinant of non-square matrix");
  if (n == 0) return 1;
  Matrix<BigInt> a(n, n);
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = 0; j < n; ++j) a(i, j) = m(i, j);
  BigInt prev = 1;
  int sign = 1;
  for (std::size_t k = 0; k + 1 < n; ++k) {
    if (a(k, k) == 0) {
      std::size_t p = k + 1;
      while (p < n && a(p, k) == 0) ++p;
      if (p == n) return 0;
      for (std::size_t j = 0; j < n; ++j) std::swap(a(p, j), a(k, j));
      sign = -sign;
    }
    for (std::size_t i = k + 1; i < n; ++i)
      for (std::size_t j = k + 1; j < n; ++j)
        a(i, j) = (a(i, j) * a(k, k) - a(i, k) * a(k, j)) / prev;
    prev = a(k, k);
  }
  return sign * a(n - 1, n - 1).convert_to<std::int64_t>();
}

/// v^T M w over Q.
inline Rational bilinear(const RatVec& v, const IntMatrix& m, const RatVec& w) {
  Rational s = 0;
  for (std::size_t i = 0; i < v.size(); ++i) {
    if (v[i] == 0) continue;
    Rational row = 0;
    for (std::size_t j = 0; j < w.size(); ++j)
      if (m(i, j) != 0) row += m(i, j) * w[j];
    s += v[i] * row;
  }
  return s;
}

inline std::int64_t bilinear(const IntVec& v, const IntMatrix& m, const IntVec& w) {
  std::int64_t s = 0;
  for (std::size_t i = 0; i < v.size(); ++i) {
    if (v[i] == 0) continue;
    std::int64_t row = 0;
    for (std::size_t j = 0; j < w.size(); ++j) row += m(i, j) * w[j];
    s += v[i] * row;
  }
  return s;
}

inline std::int64_t lcm_of(const IntVec& v) {
  std::int64_t l = 1;
  for (auto x : v) l = std::lcm(l, x);
  return l;
}

}  // namespace corelat
