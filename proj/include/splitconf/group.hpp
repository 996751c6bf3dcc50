#pragma once

// The fifteen SO(4,2) generators M_ab and their actions.
//
// Convention: M_ab(theta) = exp(Gamma_a Gamma_b theta / 2), acting on P by
// P -> M P M^{-1}. This is the parameterization under which the explicit
// generator matrices satisfy M_pq = exp(-L theta/2) I and M_pq acts on
// Minkowski points as the dilation Q -> exp(-theta) Q. A single generator
// moves coordinates in its plane by
//   x^a' = x^a c(theta) + x^b s(theta) g_bb
//   x^b' = x^b c(theta) - x^a s(theta) g_aa
// with (c, s) = (cos, sin) when (Gamma_a Gamma_b)^2 = -I and (cosh, sinh)
// when it is +I.
//
// A GeneratorWord applies its entries left to right, so the induced 6x6
// matrix of the concatenation w1 w2 is R(w2) R(w1).

#include <array>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "splitconf/clifford.hpp"
#include "splitconf/report.hpp"

namespace splitconf {

struct GeneratorId {
  CoordIndex a;
  CoordIndex b;

  std::string name() const { return pair_name(a, b); }
  friend bool operator==(const GeneratorId&, const GeneratorId&) = default;
};

/// The fifteen generators in the order of the explicit matrix listing.
inline constexpr std::array<GeneratorId, 15> kAllGenerators{{
    {CoordIndex::x, CoordIndex::y}, {CoordIndex::y, CoordIndex::z}, {CoordIndex::z, CoordIndex::x},
    {CoordIndex::q, CoordIndex::x}, {CoordIndex::q, CoordIndex::y}, {CoordIndex::q, CoordIndex::z},
    {CoordIndex::t, CoordIndex::p}, {CoordIndex::t, CoordIndex::x}, {CoordIndex::t, CoordIndex::y},
    {CoordIndex::t, CoordIndex::z}, {CoordIndex::t, CoordIndex::q}, {CoordIndex::p, CoordIndex::x},
    {CoordIndex::p, CoordIndex::y}, {CoordIndex::p, CoordIndex::z}, {CoordIndex::p, CoordIndex::q},
}};

/// Rotations xy, yz, zx followed by boosts tx, ty, tz.
inline constexpr std::array<GeneratorId, 6> kLorentzGenerators{{
    {CoordIndex::x, CoordIndex::y}, {CoordIndex::y, CoordIndex::z}, {CoordIndex::z, CoordIndex::x},
    {CoordIndex::t, CoordIndex::x}, {CoordIndex::t, CoordIndex::y}, {CoordIndex::t, CoordIndex::z},
}};

inline constexpr GeneratorId kDilation{CoordIndex::p, CoordIndex::q};

/// Parses a two-letter name such as "zx". Only the fifteen canonical
/// orderings are accepted.
std::optional<GeneratorId> parse_generator(std::string_view name);

struct WordEntry {
  GeneratorId id;
  double angle = 0.0;
};

using GeneratorWord = std::vector<WordEntry>;

/// Gamma_a Gamma_b, exactly.
Mat4<Rational> bivector(GeneratorId id);

/// True when (Gamma_a Gamma_b)^2 = -I, i.e. the generator is a rotation.
bool is_rotation(GeneratorId id);

/// M_ab(theta). Throws std::invalid_argument when a == b.
Mat4<double> generator(GeneratorId id, double theta);

/// The pair of 2x2 factors (left, right) with X -> left X right equivalent
/// to conjugating P by generator(id, theta).
struct XAction {
  Mat2<double> left;
  Mat2<double> right;
};
XAction x_action(GeneratorId id, double theta);

/// Successive conjugations P -> M P M^{-1}. Throws std::runtime_error if the
/// result leaves span{Gamma_m}.
Mat4<double> act_on_P(const GeneratorWord& word, const Mat4<double>& p,
                      double tol = 1e-9);

/// The equivalent 2x2 action on X. Throws std::runtime_error if the result
/// stops being C-Hermitian.
Mat2<double> act_on_X(const GeneratorWord& word, const Mat2<double>& x,
                      double tol = 1e-9);

/// The 6x6 real matrix R with extract_coords(act_on_P(w, build_P(v))) = R v.
RealMatrix<double> so6_matrix(const GeneratorWord& word);

/// diag(+1, +1, +1, -1, -1, +1) in (x, y, z, t, p, q) order.
RealMatrix<double> metric_matrix();

/// Exact checks of the five product identities over all index choices.
Report verify_properties();

// --- SO(3,1) projection -----------------------------------------------------

/// Sets p = q = 0.
template <ScalarType T>
Vector6<T> project_so31(Vector6<T> v) {
  v[CoordIndex::p] = T(0);
  v[CoordIndex::q] = T(0);
  return v;
}

/// Gamma_m for m in {x, y, z, t}; the zero matrix for p and q.
Mat4<Rational> project_gamma(CoordIndex m);

/// The (x, y, z, t) block of so6_matrix(word).
RealMatrix<double> so31_block(const GeneratorWord& word);

/// diag(+1, +1, +1, -1).
RealMatrix<double> minkowski_metric();

// --- explicit matrix listing cross-check -----------------------------------

/// Compares generator(id, phi) against the explicit 4x4 matrix listing at
/// each angle. Mismatches are reported as documented discrepancies with
/// both matrices, never as failures.
Report appendix_check(const std::vector<double>& angles = {0.3, 1.0, -0.7},
                      double tol = kDefaultTolerance);

/// The listed matrix for a generator, evaluated at phi.
Mat4<double> appendix_matrix(GeneratorId id, double phi);

}  // namespace splitconf
