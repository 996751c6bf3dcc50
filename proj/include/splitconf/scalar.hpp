#pragma once

#include <cmath>
#include <cstdint>
#include <string>
#include <type_traits>

#include "splitconf/rational.hpp"

namespace splitconf {

// Exact mode uses Rational. Every structural matrix (Sigma, Gamma, products
// of them) has small integer entries, far from the 64-bit range.

inline constexpr double kDefaultTolerance = 1e-12;

template <class T>
struct ScalarTraits;

template <>
struct ScalarTraits<Rational> {
  static constexpr bool exact = true;
  static Rational zero() { return Rational(0); }
  static Rational one() { return Rational(1); }
  static bool is_zero(const Rational& v, double /*tol*/ = 0.0) { return v == 0; }
  static bool equal(const Rational& a, const Rational& b, double /*tol*/ = 0.0) {
    return a == b;
  }
  static double to_double(const Rational& v) {
    return v.to_double();
  }
};

template <>
struct ScalarTraits<double> {
  static constexpr bool exact = false;
  static double zero() { return 0.0; }
  static double one() { return 1.0; }
  static bool is_zero(double v, double tol = kDefaultTolerance) {
    return std::abs(v) <= tol;
  }
  static bool equal(double a, double b, double tol = kDefaultTolerance) {
    return std::abs(a - b) <= tol;
  }
  static double to_double(double v) { return v; }
};

template <class T>
concept ScalarType = requires { ScalarTraits<T>::exact; };

template <class To, ScalarType From>
To scalar_cast(const From& v) {
  if constexpr (std::is_same_v<To, From>) {
    return v;
  } else {
    static_assert(std::is_same_v<To, double>, "only exact -> double casts are lossless enough");
    return ScalarTraits<From>::to_double(v);
  }
}

inline std::string to_string(const Rational& v) { return v.str(); }

}  // namespace splitconf
