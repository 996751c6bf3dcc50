#pragma once

// Square matrices over H' (x) C and small real matrices.
//
// Scalars do not commute, so products always keep the left operand's entry
// on the left: (AB)_ij = sum_k A_ik B_kj. Multiplying a matrix by a
// TensorScalar s means entrywise left multiplication, s*M = (s M_ij), and
// M*s is entrywise right multiplication.

#include <algorithm>
#include <array>
#include <cmath>
#include <cstddef>
#include <initializer_list>
#include <stdexcept>
#include <string>
#include <vector>

#include "splitconf/algebra.hpp"

namespace splitconf {

template <ScalarType T, std::size_t N>
class Mat {
 public:
  using Entry = TensorScalar<T>;
  static constexpr std::size_t kDim = N;

  Mat() = default;
  Mat(std::initializer_list<std::initializer_list<Entry>> rows) {
    if (rows.size() != N) throw std::invalid_argument("Mat: wrong number of rows");
    std::size_t i = 0;
    for (const auto& row : rows) {
      if (row.size() != N) throw std::invalid_argument("Mat: wrong number of columns");
      std::size_t j = 0;
      for (const auto& e : row) m_[i][j++] = e;
      ++i;
    }
  }

  static Mat identity() {
    Mat r;
    for (std::size_t i = 0; i < N; ++i) r.m_[i][i] = Entry(T(1));
    return r;
  }
  static Mat zero() { return Mat{}; }
  /// s times the identity.
  static Mat diagonal(const Entry& s) {
    Mat r;
    for (std::size_t i = 0; i < N; ++i) r.m_[i][i] = s;
    return r;
  }

  const Entry& operator()(std::size_t i, std::size_t j) const { return m_[i][j]; }
  Entry& operator()(std::size_t i, std::size_t j) { return m_[i][j]; }

  Mat& operator+=(const Mat& b) {
    for (std::size_t i = 0; i < N; ++i)
      for (std::size_t j = 0; j < N; ++j) m_[i][j] += b.m_[i][j];
    return *this;
  }
  Mat& operator-=(const Mat& b) {
    for (std::size_t i = 0; i < N; ++i)
      for (std::size_t j = 0; j < N; ++j) m_[i][j] -= b.m_[i][j];
    return *this;
  }
  friend Mat operator+(Mat a, const Mat& b) { return a += b; }
  friend Mat operator-(Mat a, const Mat& b) { return a -= b; }
  friend Mat operator-(Mat a) {
    for (auto& row : a.m_)
      for (auto& e : row) e = -e;
    return a;
  }

  friend Mat operator*(const Mat& a, const Mat& b) {
    Mat r;
    for (std::size_t i = 0; i < N; ++i)
      for (std::size_t k = 0; k < N; ++k) {
        if (a.m_[i][k].is_zero()) continue;
        for (std::size_t j = 0; j < N; ++j) r.m_[i][j] += a.m_[i][k] * b.m_[k][j];
      }
    return r;
  }

  friend Mat operator*(const Entry& s, Mat a) {
    for (auto& row : a.m_)
      for (auto& e : row) e = s * e;
    return a;
  }
  friend Mat operator*(Mat a, const Entry& s) {
    for (auto& row : a.m_)
      for (auto& e : row) e = e * s;
    return a;
  }
  friend Mat operator*(const T& s, Mat a) {
    for (auto& row : a.m_)
      for (auto& e : row) e = s * e;
    return a;
  }

  friend bool operator==(const Mat&, const Mat&) = default;

  bool is_zero(double tol = 0.0) const {
    for (const auto& row : m_)
      for (const auto& e : row)
        if (!e.is_zero(tol)) return false;
    return true;
  }

 private:
  std::array<std::array<Entry, N>, N> m_{};
};

template <ScalarType T>
using Mat2 = Mat<T, 2>;
template <ScalarType T>
using Mat4 = Mat<T, 4>;

template <ScalarType T, std::size_t N>
Mat<T, N> mat_mul(const Mat<T, N>& a, const Mat<T, N>& b) {
  return a * b;
}

template <ScalarType T, std::size_t N>
Mat<T, N> mat_add(const Mat<T, N>& a, const Mat<T, N>& b) {
  return a + b;
}

/// Entrywise left multiplication s * M.
template <ScalarType T, std::size_t N>
Mat<T, N> scalar_mul(const TensorScalar<T>& s, const Mat<T, N>& m) {
  return s * m;
}

template <ScalarType T, std::size_t N>
TensorScalar<T> trace(const Mat<T, N>& m) {
  TensorScalar<T> r;
  for (std::size_t i = 0; i < N; ++i) r += m(i, i);
  return r;
}

/// m - tr(m) I.
template <ScalarType T, std::size_t N>
Mat<T, N> trace_reversal(const Mat<T, N>& m) {
  return m - Mat<T, N>::diagonal(trace(m));
}

template <ScalarType T, std::size_t N>
Mat<T, N> transpose(const Mat<T, N>& m) {
  Mat<T, N> r;
  for (std::size_t i = 0; i < N; ++i)
    for (std::size_t j = 0; j < N; ++j) r(i, j) = m(j, i);
  return r;
}

template <ScalarType T, std::size_t N>
Mat<T, N> conj_bar(const Mat<T, N>& m) {
  Mat<T, N> r;
  for (std::size_t i = 0; i < N; ++i)
    for (std::size_t j = 0; j < N; ++j) r(i, j) = conj_bar(m(i, j));
  return r;
}

template <ScalarType T, std::size_t N>
Mat<T, N> conj_star(const Mat<T, N>& m) {
  Mat<T, N> r;
  for (std::size_t i = 0; i < N; ++i)
    for (std::size_t j = 0; j < N; ++j) r(i, j) = conj_star(m(i, j));
  return r;
}

template <ScalarType T, std::size_t N>
bool approx_equal(const Mat<T, N>& a, const Mat<T, N>& b, double tol = kDefaultTolerance) {
  for (std::size_t i = 0; i < N; ++i)
    for (std::size_t j = 0; j < N; ++j)
      if (!approx_equal(a(i, j), b(i, j), tol)) return false;
  return true;
}

/// Largest absolute coefficient difference over all entries.
template <ScalarType T, std::size_t N>
double max_abs_diff(const Mat<T, N>& a, const Mat<T, N>& b) {
  double worst = 0.0;
  for (std::size_t i = 0; i < N; ++i)
    for (std::size_t j = 0; j < N; ++j)
      for (std::size_t k = 0; k < 8; ++k) {
        const double d = std::abs(ScalarTraits<T>::to_double(a(i, j).coefficients()[k]) -
                                  ScalarTraits<T>::to_double(b(i, j).coefficients()[k]));
        worst = std::max(worst, d);
      }
  return worst;
}

/// Hermitian with respect to C: equal to its transpose with bar applied.
template <ScalarType T, std::size_t N>
bool is_c_hermitian(const Mat<T, N>& m, double tol = kDefaultTolerance) {
  return approx_equal(m, transpose(conj_bar(m)), tol);
}

template <ScalarType To, ScalarType From, std::size_t N>
Mat<To, N> scalar_cast(const Mat<From, N>& m) {
  Mat<To, N> r;
  for (std::size_t i = 0; i < N; ++i)
    for (std::size_t j = 0; j < N; ++j) r(i, j) = scalar_cast<To>(m(i, j));
  return r;
}

// ---------------------------------------------------------------------------
// Closed-form exponentials

enum class SquareClass { PlusIdentity, MinusIdentity, Zero, Other };

template <ScalarType T, std::size_t N>
SquareClass classify_square(const Mat<T, N>& a, double tol = kDefaultTolerance) {
  const auto sq = a * a;
  const auto id = Mat<T, N>::identity();
  if (approx_equal(sq, id, tol)) return SquareClass::PlusIdentity;
  if (approx_equal(sq, -id, tol)) return SquareClass::MinusIdentity;
  if (sq.is_zero(tol)) return SquareClass::Zero;
  return SquareClass::Other;
}

/// exp(A alpha) for A^2 = +I (I cosh + A sinh) or A^2 = -I (I cos + A sin).
/// The square of A is classified in A's own arithmetic, so passing an exact
/// matrix gives an exact classification.
template <ScalarType T, std::size_t N>
Mat<double, N> exp_involutory(const Mat<T, N>& a, double alpha) {
  const auto kind = classify_square(a);
  const auto ad = scalar_cast<double>(a);
  const auto id = Mat<double, N>::identity();
  switch (kind) {
    case SquareClass::PlusIdentity:
      return std::cosh(alpha) * id + std::sinh(alpha) * ad;
    case SquareClass::MinusIdentity:
      return std::cos(alpha) * id + std::sin(alpha) * ad;
    default:
      throw std::invalid_argument("exp_involutory: A^2 is neither +I nor -I");
  }
}

/// exp(A alpha) = I + A alpha for A^2 = 0.
template <ScalarType T, std::size_t N>
Mat<double, N> exp_nilpotent(const Mat<T, N>& a, double alpha) {
  if (classify_square(a) != SquareClass::Zero) {
    throw std::invalid_argument("exp_nilpotent: A^2 is not zero");
  }
  return Mat<double, N>::identity() + alpha * scalar_cast<double>(a);
}

/// The real number s with X tilde(X) = s I. For X built from coordinates
/// this is x^2 + y^2 + z^2 + q^2 - p^2 - t^2, and det X = -s.
template <ScalarType T>
T quadratic_form(const Mat2<T>& x, double tol = kDefaultTolerance) {
  const auto prod = x * trace_reversal(x);
  const auto& s = prod(0, 0);
  if (!s.is_real(tol) || !approx_equal(prod, Mat2<T>::diagonal(s), tol)) {
    throw std::domain_error("quadratic_form: X tilde(X) is not a real multiple of I");
  }
  return s.real_part();
}

// ---------------------------------------------------------------------------
// Real matrices

template <ScalarType T>
class RealMatrix {
 public:
  RealMatrix() = default;
  explicit RealMatrix(std::size_t n) : n_(n), data_(n * n, T(0)) {}
  RealMatrix(std::initializer_list<std::initializer_list<T>> rows) : n_(rows.size()) {
    data_.reserve(n_ * n_);
    for (const auto& row : rows) {
      if (row.size() != n_) throw std::invalid_argument("RealMatrix: rows must be square");
      data_.insert(data_.end(), row.begin(), row.end());
    }
  }

  static RealMatrix identity(std::size_t n) {
    RealMatrix r(n);
    for (std::size_t i = 0; i < n; ++i) r(i, i) = T(1);
    return r;
  }

  std::size_t size() const { return n_; }
  const T& operator()(std::size_t i, std::size_t j) const { return data_[i * n_ + j]; }
  T& operator()(std::size_t i, std::size_t j) { return data_[i * n_ + j]; }

  friend RealMatrix operator+(RealMatrix a, const RealMatrix& b) {
    check_same(a, b);
    for (std::size_t i = 0; i < a.data_.size(); ++i) a.data_[i] += b.data_[i];
    return a;
  }
  friend RealMatrix operator-(RealMatrix a, const RealMatrix& b) {
    check_same(a, b);
    for (std::size_t i = 0; i < a.data_.size(); ++i) a.data_[i] -= b.data_[i];
    return a;
  }
  friend RealMatrix operator-(RealMatrix a) {
    for (auto& v : a.data_) v = -v;
    return a;
  }
  friend RealMatrix operator*(const T& s, RealMatrix a) {
    for (auto& v : a.data_) v *= s;
    return a;
  }
  friend RealMatrix operator*(const RealMatrix& a, const RealMatrix& b) {
    check_same(a, b);
    RealMatrix r(a.n_);
    for (std::size_t i = 0; i < a.n_; ++i)
      for (std::size_t k = 0; k < a.n_; ++k) {
        const T& x = a(i, k);
        if (x == T(0)) continue;
        for (std::size_t j = 0; j < a.n_; ++j) r(i, j) += x * b(k, j);
      }
    return r;
  }
  friend bool operator==(const RealMatrix&, const RealMatrix&) = default;

  bool is_zero() const {
    for (const auto& v : data_)
      if (v != T(0)) return false;
    return true;
  }

 private:
  static void check_same(const RealMatrix& a, const RealMatrix& b) {
    if (a.n_ != b.n_) {
      throw std::invalid_argument("RealMatrix: dimension mismatch (" + std::to_string(a.n_) +
                                  " vs " + std::to_string(b.n_) + ")");
    }
  }

  std::size_t n_ = 0;
  std::vector<T> data_;
};

template <ScalarType T>
RealMatrix<T> transpose(const RealMatrix<T>& m) {
  RealMatrix<T> r(m.size());
  for (std::size_t i = 0; i < m.size(); ++i)
    for (std::size_t j = 0; j < m.size(); ++j) r(i, j) = m(j, i);
  return r;
}

/// Kronecker product; entry (i*nb + k, j*nb + l) is a(i,j) b(k,l).
template <ScalarType T>
RealMatrix<T> kron(const RealMatrix<T>& a, const RealMatrix<T>& b) {
  const std::size_t na = a.size();
  const std::size_t nb = b.size();
  RealMatrix<T> r(na * nb);
  for (std::size_t i = 0; i < na; ++i)
    for (std::size_t j = 0; j < na; ++j) {
      const T& x = a(i, j);
      if (x == T(0)) continue;
      for (std::size_t k = 0; k < nb; ++k)
        for (std::size_t l = 0; l < nb; ++l) r(i * nb + k, j * nb + l) = x * b(k, l);
    }
  return r;
}

template <ScalarType T>
RealMatrix<T> kron(std::initializer_list<RealMatrix<T>> factors) {
  RealMatrix<T> r = RealMatrix<T>::identity(1);
  for (const auto& f : factors) r = kron(r, f);
  return r;
}

/// Determinant by Gaussian elimination with partial pivoting.
template <ScalarType T>
T determinant(RealMatrix<T> m) {
  const std::size_t n = m.size();
  T det(1);
  for (std::size_t col = 0; col < n; ++col) {
    std::size_t pivot = col;
    for (std::size_t r = col + 1; r < n; ++r) {
      if constexpr (ScalarTraits<T>::exact) {
        if (m(pivot, col) == T(0) && m(r, col) != T(0)) pivot = r;
      } else {
        if (std::abs(m(r, col)) > std::abs(m(pivot, col))) pivot = r;
      }
    }
    if (m(pivot, col) == T(0)) return T(0);
    if (pivot != col) {
      for (std::size_t j = 0; j < n; ++j) std::swap(m(pivot, j), m(col, j));
      det = -det;
    }
    det *= m(col, col);
    for (std::size_t r = col + 1; r < n; ++r) {
      const T f = m(r, col) / m(col, col);
      if (f == T(0)) continue;
      for (std::size_t j = col; j < n; ++j) m(r, j) -= f * m(col, j);
    }
  }
  return det;
}

template <ScalarType T>
double max_abs_diff(const RealMatrix<T>& a, const RealMatrix<T>& b) {
  if (a.size() != b.size()) throw std::invalid_argument("max_abs_diff: dimension mismatch");
  double worst = 0.0;
  for (std::size_t i = 0; i < a.size(); ++i)
    for (std::size_t j = 0; j < a.size(); ++j)
      worst = std::max(worst, std::abs(ScalarTraits<T>::to_double(a(i, j)) -
                                        ScalarTraits<T>::to_double(b(i, j))));
  return worst;
}

template <ScalarType To, ScalarType From>
RealMatrix<To> scalar_cast(const RealMatrix<From>& m) {
  RealMatrix<To> r(m.size());
  for (std::size_t i = 0; i < m.size(); ++i)
    for (std::size_t j = 0; j < m.size(); ++j) r(i, j) = scalar_cast<To>(m(i, j));
  return r;
}

}  // namespace splitconf
