#pragma once

#include <string>

#include "splitconf/matrices.hpp"

namespace splitconf {

/// Rows as "[a, b; c, d]" with symbolic entries.
template <ScalarType T, std::size_t N>
std::string format_matrix(const Mat<T, N>& m) {
  std::string out = "[";
  for (std::size_t i = 0; i < N; ++i) {
    if (i) out += "; ";
    for (std::size_t j = 0; j < N; ++j) {
      if (j) out += ", ";
      out += format_symbolic(m(i, j));
    }
  }
  return out + "]";
}

std::string format_number(double v);

std::string format_matrix(const RealMatrix<double>& m);
std::string format_matrix(const RealMatrix<Rational>& m);

}  // namespace splitconf
