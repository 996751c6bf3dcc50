#pragma once

// Arithmetic in the complex numbers C = span{1, l}, the split quaternions
// H' = span{1, K, KL, L}, and the tensor product H' (x) C.

#include <array>
#include <cstddef>
#include <string>
#include <string_view>

#include "splitconf/scalar.hpp"

namespace splitconf {

/// Split-quaternion basis units, in coefficient order (z, q, p, t).
enum class SplitUnit : std::size_t { One = 0, K = 1, KL = 2, L = 3 };

/// Complex basis units.
enum class ComplexUnit : std::size_t { One = 0, Ell = 1 };

namespace detail {

struct UnitProduct {
  int sign;
  std::size_t unit;
};

// kSplitTable[a][b] = a*b for units in {1, K, KL, L}.
// K^2 = -1, L^2 = (KL)^2 = 1, KL = K*L, L(KL) = -K, (KL)K = L.
inline constexpr std::array<std::array<UnitProduct, 4>, 4> kSplitTable{{
    {{{1, 0}, {1, 1}, {1, 2}, {1, 3}}},
    {{{1, 1}, {-1, 0}, {-1, 3}, {1, 2}}},
    {{{1, 2}, {1, 3}, {1, 0}, {1, 1}}},
    {{{1, 3}, {-1, 2}, {-1, 1}, {1, 0}}},
}};

inline constexpr std::array<std::array<UnitProduct, 2>, 2> kComplexTable{{
    {{{1, 0}, {1, 1}}},
    {{{1, 1}, {-1, 0}}},
}};

}  // namespace detail

// ---------------------------------------------------------------------------
// Complex

template <ScalarType T>
struct Complex {
  T re{};
  T im{};

  static Complex ell() { return {T(0), T(1)}; }

  friend Complex operator+(const Complex& a, const Complex& b) {
    return {a.re + b.re, a.im + b.im};
  }
  friend Complex operator-(const Complex& a, const Complex& b) {
    return {a.re - b.re, a.im - b.im};
  }
  friend Complex operator-(const Complex& a) { return {-a.re, -a.im}; }
  friend Complex operator*(const Complex& a, const Complex& b) {
    return {a.re * b.re - a.im * b.im, a.re * b.im + a.im * b.re};
  }
  friend bool operator==(const Complex&, const Complex&) = default;
};

template <ScalarType T>
Complex<T> complex_mul(const Complex<T>& a, const Complex<T>& b) {
  return a * b;
}

template <ScalarType T>
Complex<T> conj_bar(const Complex<T>& a) {
  return {a.re, -a.im};
}

// ---------------------------------------------------------------------------
// SplitQuaternion: A = z + qK + pKL + tL

template <ScalarType T>
struct SplitQuaternion {
  std::array<T, 4> c{};  // indexed by SplitUnit

  SplitQuaternion() = default;
  SplitQuaternion(T z, T q, T p, T t) : c{z, q, p, t} {}

  static SplitQuaternion unit(SplitUnit u, T scale = T(1)) {
    SplitQuaternion r;
    r.c[static_cast<std::size_t>(u)] = scale;
    return r;
  }

  const T& operator[](SplitUnit u) const { return c[static_cast<std::size_t>(u)]; }
  T& operator[](SplitUnit u) { return c[static_cast<std::size_t>(u)]; }

  friend SplitQuaternion operator+(SplitQuaternion a, const SplitQuaternion& b) {
    for (std::size_t i = 0; i < 4; ++i) a.c[i] += b.c[i];
    return a;
  }
  friend SplitQuaternion operator-(SplitQuaternion a, const SplitQuaternion& b) {
    for (std::size_t i = 0; i < 4; ++i) a.c[i] -= b.c[i];
    return a;
  }
  friend SplitQuaternion operator-(SplitQuaternion a) {
    for (auto& v : a.c) v = -v;
    return a;
  }
  friend SplitQuaternion operator*(const SplitQuaternion& a, const SplitQuaternion& b) {
    SplitQuaternion r;
    for (std::size_t i = 0; i < 4; ++i) {
      for (std::size_t j = 0; j < 4; ++j) {
        const auto& e = detail::kSplitTable[i][j];
        const T term = a.c[i] * b.c[j];
        if (e.sign > 0) {
          r.c[e.unit] += term;
        } else {
          r.c[e.unit] -= term;
        }
      }
    }
    return r;
  }
  friend bool operator==(const SplitQuaternion&, const SplitQuaternion&) = default;
};

template <ScalarType T>
SplitQuaternion<T> sq_mul(const SplitQuaternion<T>& a, const SplitQuaternion<T>& b) {
  return a * b;
}

template <ScalarType T>
SplitQuaternion<T> conj_star(const SplitQuaternion<T>& a) {
  return {a.c[0], -a.c[1], -a.c[2], -a.c[3]};
}

/// A * star(A) = (z^2 + q^2 - p^2 - t^2) * 1.
template <ScalarType T>
T split_norm(const SplitQuaternion<T>& a) {
  return a.c[0] * a.c[0] + a.c[1] * a.c[1] - a.c[2] * a.c[2] - a.c[3] * a.c[3];
}

// ---------------------------------------------------------------------------
// TensorScalar: element of H' (x) C.
//
// Eight real coefficients, stored as coeff[c * 4 + h] for split unit h and
// complex unit c, i.e. in the order 1, K, KL, L, l, Kl, KLl, Ll. The complex
// unit l commutes with K, L and KL.

template <ScalarType T>
class TensorScalar {
 public:
  static constexpr std::size_t kSize = 8;
  static constexpr std::array<std::string_view, kSize> kLabels{"1", "K", "KL", "L",
                                                               "l", "Kl", "KLl", "Ll"};

  TensorScalar() = default;
  explicit TensorScalar(std::array<T, kSize> coeff) : coeff_(coeff) {}
  // Real scalars embed as multiples of 1.
  TensorScalar(T real) { coeff_[0] = real; }  // NOLINT(google-explicit-constructor)
  TensorScalar(int real) : TensorScalar(T(real)) {}  // NOLINT(google-explicit-constructor)

  explicit TensorScalar(const Complex<T>& a) {
    coeff_[0] = a.re;
    coeff_[4] = a.im;
  }
  explicit TensorScalar(const SplitQuaternion<T>& a) {
    for (std::size_t h = 0; h < 4; ++h) coeff_[h] = a.c[h];
  }

  static TensorScalar unit(SplitUnit h, ComplexUnit c = ComplexUnit::One, T scale = T(1)) {
    TensorScalar r;
    r.coeff_[index(h, c)] = scale;
    return r;
  }
  /// The i-th of the eight basis elements, in label order.
  static TensorScalar basis(std::size_t i) {
    TensorScalar r;
    r.coeff_.at(i) = T(1);
    return r;
  }

  static constexpr std::size_t index(SplitUnit h, ComplexUnit c) {
    return static_cast<std::size_t>(c) * 4 + static_cast<std::size_t>(h);
  }

  const T& operator()(SplitUnit h, ComplexUnit c) const { return coeff_[index(h, c)]; }
  T& operator()(SplitUnit h, ComplexUnit c) { return coeff_[index(h, c)]; }
  const std::array<T, kSize>& coefficients() const { return coeff_; }

  /// Complex coefficient of split unit h.
  Complex<T> coeff(SplitUnit h) const {
    return {(*this)(h, ComplexUnit::One), (*this)(h, ComplexUnit::Ell)};
  }

  /// Real when every coefficient other than that of 1 vanishes.
  bool is_real(double tol = 0.0) const {
    for (std::size_t i = 1; i < kSize; ++i) {
      if (!ScalarTraits<T>::is_zero(coeff_[i], tol)) return false;
    }
    return true;
  }
  T real_part() const { return coeff_[0]; }

  bool is_zero(double tol = 0.0) const {
    for (const auto& v : coeff_) {
      if (!ScalarTraits<T>::is_zero(v, tol)) return false;
    }
    return true;
  }

  TensorScalar& operator+=(const TensorScalar& b) {
    for (std::size_t i = 0; i < kSize; ++i) coeff_[i] += b.coeff_[i];
    return *this;
  }
  TensorScalar& operator-=(const TensorScalar& b) {
    for (std::size_t i = 0; i < kSize; ++i) coeff_[i] -= b.coeff_[i];
    return *this;
  }
  friend TensorScalar operator+(TensorScalar a, const TensorScalar& b) { return a += b; }
  friend TensorScalar operator-(TensorScalar a, const TensorScalar& b) { return a -= b; }
  friend TensorScalar operator-(TensorScalar a) {
    for (auto& v : a.coeff_) v = -v;
    return a;
  }

  friend TensorScalar operator*(const TensorScalar& a, const TensorScalar& b) {
    TensorScalar r;
    for (std::size_t ca = 0; ca < 2; ++ca) {
      for (std::size_t ha = 0; ha < 4; ++ha) {
        const T& x = a.coeff_[ca * 4 + ha];
        if (x == T(0)) continue;
        for (std::size_t cb = 0; cb < 2; ++cb) {
          const auto& ec = detail::kComplexTable[ca][cb];
          for (std::size_t hb = 0; hb < 4; ++hb) {
            const T& y = b.coeff_[cb * 4 + hb];
            if (y == T(0)) continue;
            const auto& eh = detail::kSplitTable[ha][hb];
            const T term = x * y;
            T& out = r.coeff_[ec.unit * 4 + eh.unit];
            if (ec.sign * eh.sign > 0) {
              out += term;
            } else {
              out -= term;
            }
          }
        }
      }
    }
    return r;
  }

  /// Real scaling; real numbers are central so the side does not matter.
  friend TensorScalar operator*(const T& s, TensorScalar a) {
    for (auto& v : a.coeff_) v *= s;
    return a;
  }

  friend bool operator==(const TensorScalar&, const TensorScalar&) = default;

 private:
  std::array<T, kSize> coeff_{};
};

template <ScalarType T>
TensorScalar<T> tensor_mul(const TensorScalar<T>& a, const TensorScalar<T>& b) {
  return a * b;
}

/// Negates the l part; acts on the C factor only.
template <ScalarType T>
TensorScalar<T> conj_bar(const TensorScalar<T>& a) {
  auto c = a.coefficients();
  for (std::size_t h = 0; h < 4; ++h) c[4 + h] = -c[4 + h];
  return TensorScalar<T>(c);
}

/// Negates the K, KL, L parts; acts on the H' factor only.
template <ScalarType T>
TensorScalar<T> conj_star(const TensorScalar<T>& a) {
  auto c = a.coefficients();
  for (std::size_t i = 0; i < 8; ++i) {
    if (i % 4 != 0) c[i] = -c[i];
  }
  return TensorScalar<T>(c);
}

template <ScalarType T>
bool approx_equal(const TensorScalar<T>& a, const TensorScalar<T>& b,
                  double tol = kDefaultTolerance) {
  for (std::size_t i = 0; i < TensorScalar<T>::kSize; ++i) {
    if (!ScalarTraits<T>::equal(a.coefficients()[i], b.coefficients()[i], tol)) return false;
  }
  return true;
}

template <ScalarType To, ScalarType From>
TensorScalar<To> scalar_cast(const TensorScalar<From>& a) {
  std::array<To, 8> c{};
  for (std::size_t i = 0; i < 8; ++i) c[i] = scalar_cast<To>(a.coefficients()[i]);
  return TensorScalar<To>(c);
}

/// Symbolic rendering such as "1", "-l", "0.5 + 2KL".
std::string format_symbolic(const TensorScalar<double>& a, double tol = kDefaultTolerance);
std::string format_symbolic(const TensorScalar<Rational>& a);

using ExactScalar = TensorScalar<Rational>;
using RealScalar = TensorScalar<double>;

}  // namespace splitconf
