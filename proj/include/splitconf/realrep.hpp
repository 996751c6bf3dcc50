#pragma once

// The real 16x16 representation. C and H' are sent to 2x2 real matrices,
//   1 -> I, l -> l s_y        (C)
//   1 -> I, L -> s_z, K -> -l s_y, KL -> s_x   (H')
// where l s_y = [[0, 1], [-1, 0]]. A TensorScalar becomes the 4x4 matrix
// kron(H' image, C image), and an N x N matrix over H' (x) C becomes a
// 4N x 4N real matrix with one 4x4 block per entry. For Mat4 the factor
// order is therefore block (x) Sigma-content (x) H' (x) C.

#include <array>
#include <optional>
#include <string>
#include <vector>

#include "splitconf/group.hpp"

namespace splitconf {

struct RealImageTable {
  std::array<RealMatrix<Rational>, 2> complex;  // indexed by ComplexUnit
  std::array<RealMatrix<Rational>, 4> split;    // indexed by SplitUnit
};

const RealImageTable& real_image_table();

template <ScalarType T>
RealMatrix<T> realify_scalar(const TensorScalar<T>& s) {
  const auto& table = real_image_table();
  RealMatrix<T> r(4);
  for (std::size_t h = 0; h < 4; ++h)
    for (std::size_t c = 0; c < 2; ++c) {
      const T& coef = s(static_cast<SplitUnit>(h), static_cast<ComplexUnit>(c));
      if (coef == T(0)) continue;
      r = r + coef * scalar_cast<T>(kron(table.split[h], table.complex[c]));
    }
  return r;
}

/// Entry (i, j) becomes the 4x4 block at rows 4i.., columns 4j...
template <ScalarType T, std::size_t N>
RealMatrix<T> realify(const Mat<T, N>& m) {
  RealMatrix<T> r(4 * N);
  for (std::size_t i = 0; i < N; ++i)
    for (std::size_t j = 0; j < N; ++j) {
      const auto b = realify_scalar(m(i, j));
      for (std::size_t k = 0; k < 4; ++k)
        for (std::size_t l = 0; l < 4; ++l) r(4 * i + k, 4 * j + l) = b(k, l);
    }
  return r;
}

/// The four real 2x2 matrices used as Kronecker factors.
enum class Pauli { I, X, Z, LY };

std::string to_string(Pauli p);
RealMatrix<Rational> pauli_matrix(Pauli p);

/// sign * f0 (x) f1 (x) f2 (x) f3.
struct KronExpr {
  int sign = 1;
  std::array<Pauli, 4> f{Pauli::I, Pauli::I, Pauli::I, Pauli::I};

  friend bool operator==(const KronExpr&, const KronExpr&) = default;
};

std::string to_string(const KronExpr& e);
RealMatrix<Rational> evaluate(const KronExpr& e);

/// Finds the Kronecker form of a 16x16 matrix by search, if it has one.
std::optional<KronExpr> factorize(const RealMatrix<Rational>& m);

/// The listed Kronecker form of Gamma_m.
KronExpr real_gamma_expr(CoordIndex m);
RealMatrix<Rational> real_gamma(CoordIndex m);

/// real_gamma(a) real_gamma(b).
RealMatrix<Rational> real_bivector(GeneratorId id);

/// The fifteen products in kAllGenerators order.
std::vector<RealMatrix<Rational>> real_generators();

/// The listed Kronecker form of Gamma_a Gamma_b.
KronExpr listed_generator_expr(GeneratorId id);

/// exp(B theta/2) for the real bivector B, using B^2 = +-I.
RealMatrix<double> real_generator(GeneratorId id, double theta);

/// Both multiplication tables (4 C pairs, 16 H' pairs) through the images.
Report verify_image_tables();

/// realify(ab) = realify(a) realify(b) over all 64 basis pairs.
Report homomorphism_check();

/// Clifford relations for the real gammas and agreement with the
/// realified 4x4 gammas.
Report verify_real_clifford();

/// The fifteen products against their listed Kronecker forms, exactly and
/// as exponentials at the given angles.
Report so42gen_check(const std::vector<double>& angles = {0.3, 1.0, -0.7},
                     double tol = kDefaultTolerance);

/// Which generators survive a restriction on the third Kronecker factor,
/// for the printed criterion {I, s_x} and for the images {I, s_z} of
/// {1, L}; plus the commutation of exp(Gamma_p Gamma_q) with the Lorentz part.
Report restrict_so31_second(double tol = kDefaultTolerance);

Report realrep_suite(double tol = kDefaultTolerance);

}  // namespace splitconf
