#pragma once

// Generalized Pauli matrices Sigma_m, the Cl(4,2) gamma matrices Gamma_m,
// and the embeddings of a coordinate vector as X (2x2) and P (4x4).

#include <array>
#include <cstddef>
#include <optional>
#include <stdexcept>
#include <string>
#include <string_view>

#include "splitconf/matrices.hpp"
#include "splitconf/report.hpp"

namespace splitconf {

/// Vector coordinates in the fixed order (x, y, z, t, p, q).
enum class CoordIndex : std::size_t { x = 0, y = 1, z = 2, t = 3, p = 4, q = 5 };

inline constexpr std::array<CoordIndex, 6> kAllCoords{CoordIndex::x, CoordIndex::y,
                                                      CoordIndex::z, CoordIndex::t,
                                                      CoordIndex::p, CoordIndex::q};

constexpr std::size_t index_of(CoordIndex m) { return static_cast<std::size_t>(m); }

constexpr char coord_name(CoordIndex m) {
  constexpr std::string_view names = "xyztpq";
  return names[index_of(m)];
}

std::optional<CoordIndex> parse_coord(char c);

/// Diagonal metric: +1 on x, y, z, q and -1 on t, p.
constexpr int metric(CoordIndex m) {
  return (m == CoordIndex::t || m == CoordIndex::p) ? -1 : 1;
}

constexpr int metric(CoordIndex a, CoordIndex b) { return a == b ? metric(a) : 0; }

template <ScalarType T>
struct Vector6 {
  std::array<T, 6> c{};

  static Vector6 basis(CoordIndex m) {
    Vector6 v;
    v[m] = T(1);
    return v;
  }

  const T& operator[](CoordIndex m) const { return c[index_of(m)]; }
  T& operator[](CoordIndex m) { return c[index_of(m)]; }

  friend Vector6 operator+(Vector6 a, const Vector6& b) {
    for (std::size_t i = 0; i < 6; ++i) a.c[i] += b.c[i];
    return a;
  }
  friend Vector6 operator*(const T& s, Vector6 a) {
    for (auto& v : a.c) v *= s;
    return a;
  }
  friend bool operator==(const Vector6&, const Vector6&) = default;
};

/// g(v, v) = x^2 + y^2 + z^2 - t^2 - p^2 + q^2.
template <ScalarType T>
T metric_norm(const Vector6<T>& v) {
  T r(0);
  for (auto m : kAllCoords) {
    const T sq = v[m] * v[m];
    if (metric(m) > 0) {
      r += sq;
    } else {
      r -= sq;
    }
  }
  return r;
}

template <ScalarType T>
Mat2<T> sigma(CoordIndex m) {
  using S = TensorScalar<T>;
  const S one(T(1));
  const S zero;
  const S ell = S::unit(SplitUnit::One, ComplexUnit::Ell);
  switch (m) {
    case CoordIndex::x:
      return {{zero, one}, {one, zero}};
    case CoordIndex::y:
      return {{zero, -ell}, {ell, zero}};
    case CoordIndex::z:
      return {{one, zero}, {zero, -one}};
    case CoordIndex::t:
      return Mat2<T>::diagonal(S::unit(SplitUnit::L));
    case CoordIndex::p:
      return Mat2<T>::diagonal(S::unit(SplitUnit::KL));
    case CoordIndex::q:
      return Mat2<T>::diagonal(S::unit(SplitUnit::K));
  }
  throw std::invalid_argument("sigma: bad index");
}

/// [[0, A], [B, 0]] from 2x2 blocks.
template <ScalarType T>
Mat4<T> block_off_diagonal(const Mat2<T>& upper, const Mat2<T>& lower) {
  Mat4<T> r;
  for (std::size_t i = 0; i < 2; ++i)
    for (std::size_t j = 0; j < 2; ++j) {
      r(i, j + 2) = upper(i, j);
      r(i + 2, j) = lower(i, j);
    }
  return r;
}

template <ScalarType T>
Mat4<T> block_diagonal(const Mat2<T>& upper, const Mat2<T>& lower) {
  Mat4<T> r;
  for (std::size_t i = 0; i < 2; ++i)
    for (std::size_t j = 0; j < 2; ++j) {
      r(i, j) = upper(i, j);
      r(i + 2, j + 2) = lower(i, j);
    }
  return r;
}

template <ScalarType T>
Mat2<T> upper_right_block(const Mat4<T>& m) {
  Mat2<T> r;
  for (std::size_t i = 0; i < 2; ++i)
    for (std::size_t j = 0; j < 2; ++j) r(i, j) = m(i, j + 2);
  return r;
}

/// Gamma_m = [[0, Sigma_m], [tilde(Sigma_m), 0]].
template <ScalarType T>
Mat4<T> gamma(CoordIndex m) {
  const auto s = sigma<T>(m);
  return block_off_diagonal(s, trace_reversal(s));
}

/// X = x^m Sigma_m.
template <ScalarType T>
Mat2<T> build_X(const Vector6<T>& v) {
  Mat2<T> r;
  for (auto m : kAllCoords) {
    if (v[m] == T(0)) continue;
    r += v[m] * sigma<T>(m);
  }
  return r;
}

/// P = [[0, X], [tilde(X), 0]] = x^m Gamma_m.
template <ScalarType T>
Mat4<T> build_P(const Vector6<T>& v) {
  const auto x = build_X(v);
  return block_off_diagonal(x, trace_reversal(x));
}

/// <A, B> = (1/8) tr(AB + BA), real part. Throws when the trace has a
/// non-real component beyond tol, which means an input left span{Gamma_m}.
template <ScalarType T>
T inner_product(const Mat4<T>& a, const Mat4<T>& b, double tol = kDefaultTolerance) {
  const auto tr = trace(a * b + b * a);
  if (!tr.is_real(tol)) {
    throw std::domain_error("inner_product: trace is not real; inputs outside span{Gamma}");
  }
  return tr.real_part() / T(8);
}

/// Coordinates x^m = g^{mm} <Gamma_m, P>. Throws if rebuilding P from them
/// leaves a residual above tol.
template <ScalarType T>
Vector6<T> extract_coords(const Mat4<T>& p, double tol = kDefaultTolerance) {
  Vector6<T> v;
  for (auto m : kAllCoords) {
    const T ip = inner_product(gamma<T>(m), p, tol);
    v[m] = metric(m) > 0 ? ip : -ip;
  }
  if (!approx_equal(build_P(v), p, tol)) {
    throw std::domain_error("extract_coords: matrix is not in span{Gamma}");
  }
  return v;
}

/// Anticommutator AB + BA.
template <ScalarType T, std::size_t N>
Mat<T, N> anticommutator(const Mat<T, N>& a, const Mat<T, N>& b) {
  return a * b + b * a;
}

/// Checks {Gamma_m, Gamma_n} = 2 g_mn I exactly for the 21 unordered pairs.
Report verify_clifford();

std::string pair_name(CoordIndex a, CoordIndex b);

}  // namespace splitconf
