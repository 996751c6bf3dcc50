#include "splitconf/format.hpp"

#include <cmath>
#include <cstdio>

namespace splitconf {

std::string format_number(double v) {
  if (v == 0.0) return "0";  // also folds -0
  char buf[32];
  std::snprintf(buf, sizeof buf, "%.12g", v);
  return buf;
}

namespace {

template <class Coeff, class Render, class IsZero, class IsNeg>
std::string render_terms(const Coeff& c, Render render, IsZero is_zero, IsNeg is_neg) {
  std::string out;
  for (std::size_t i = 0; i < 8; ++i) {
    if (is_zero(c[i])) continue;
    const bool neg = is_neg(c[i]);
    std::string mag = render(c[i], neg);
    std::string term;
    if (i == 0) {
      term = mag;
    } else {
      term = (mag == "1" ? std::string() : mag) + std::string(RealScalar::kLabels[i]);
    }
    if (out.empty()) {
      out = neg ? "-" + term : term;
    } else {
      out += neg ? " - " : " + ";
      out += term;
    }
  }
  return out.empty() ? "0" : out;
}

}  // namespace

std::string format_symbolic(const TensorScalar<double>& a, double tol) {
  return render_terms(
      a.coefficients(), [](double v, bool neg) { return format_number(neg ? -v : v); },
      [tol](double v) { return std::abs(v) <= tol; }, [](double v) { return v < 0; });
}

std::string format_symbolic(const TensorScalar<Rational>& a) {
  return render_terms(
      a.coefficients(), [](const Rational& v, bool neg) { return to_string(neg ? -v : v); },
      [](const Rational& v) { return v == 0; }, [](const Rational& v) { return v < 0; });
}

template <class T, class F>
static std::string format_real(const RealMatrix<T>& m, F fmt) {
  std::string out = "[";
  for (std::size_t i = 0; i < m.size(); ++i) {
    if (i) out += "; ";
    for (std::size_t j = 0; j < m.size(); ++j) {
      if (j) out += ", ";
      out += fmt(m(i, j));
    }
  }
  return out + "]";
}

std::string format_matrix(const RealMatrix<double>& m) {
  return format_real(m, [](double v) { return format_number(v); });
}

std::string format_matrix(const RealMatrix<Rational>& m) {
  return format_real(m, [](const Rational& v) { return to_string(v); });
}

}  // namespace splitconf
