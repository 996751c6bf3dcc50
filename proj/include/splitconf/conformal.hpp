#pragma once

// Minkowski space as the projective null cone of the (x,y,z,t,p,q) space.
// A null vector P with p + q != 0 determines Q = (T, X, Y, Z) = (t, x, y, z)/(p + q).

#include <array>
#include <cstdint>
#include <optional>
#include <string>
#include <string_view>

#include "splitconf/group.hpp"

namespace splitconf {

struct MinkowskiPoint {
  double T = 0.0;
  double Xc = 0.0;
  double Y = 0.0;
  double Z = 0.0;

  friend bool operator==(const MinkowskiPoint&, const MinkowskiPoint&) = default;
};

/// The directions that carry translations: x, y, z, t.
inline constexpr std::array<CoordIndex, 4> kSpacetimeCoords{CoordIndex::x, CoordIndex::y,
                                                            CoordIndex::z, CoordIndex::t};

/// Unit vector along m in (T, Xc, Y, Z).
MinkowskiPoint unit_point(CoordIndex m);
double component(const MinkowskiPoint& q, CoordIndex m);

/// Signature (+,+,+,-) on (Xc, Y, Z, T).
double minkowski_dot(const MinkowskiPoint& a, const MinkowskiPoint& b);
double minkowski_norm(const MinkowskiPoint& a);

double max_abs_diff(const MinkowskiPoint& a, const MinkowskiPoint& b);

class NullVector {
 public:
  /// Throws std::invalid_argument if p + q == 0 or the null condition fails.
  /// Both tests are relative to the size of v.
  explicit NullVector(const Vector6<double>& v, double tol = 1e-9);

  const Vector6<double>& coords() const { return v_; }
  double p_plus_q() const { return v_[CoordIndex::p] + v_[CoordIndex::q]; }

 private:
  Vector6<double> v_;
};

/// |g(v,v)| relative to the Euclidean size of v.
double null_residual(const Vector6<double>& v);

/// (t, x, y, z)/(p + q). Throws std::domain_error when p + q == 0.
MinkowskiPoint q_from_p(const NullVector& n);

/// Canonical section p + q = 1.
NullVector embed_point(const MinkowskiPoint& m);

/// a_m = Gamma_p Gamma_m - Gamma_q Gamma_m. Throws std::invalid_argument for p, q.
Mat4<Rational> translation_generator(CoordIndex m);
/// b_m = Gamma_p Gamma_m + Gamma_q Gamma_m. Throws std::invalid_argument for p, q.
Mat4<Rational> conformal_translation_generator(CoordIndex m);

enum class StepKind { Generator, Translation, ConformalTranslation };

/// One factor of a conformal word: an M_ab, an a_m or a b_m.
struct ConformalStep {
  StepKind kind = StepKind::Generator;
  GeneratorId id{CoordIndex::x, CoordIndex::y};  // for Generator
  CoordIndex direction = CoordIndex::x;          // for the translations
  double angle = 0.0;

  std::string name() const;
};

/// Accepts the fifteen generator names and ax..at, bx..bt.
std::optional<ConformalStep> parse_step(std::string_view name, double angle);

/// The group element of a step: exp(B theta/2) for the step's bivector B.
Mat4<double> step_matrix(const ConformalStep& step);

/// Conjugates build_P(v) by the step's group element.
Vector6<double> apply_step(const ConformalStep& step, const Vector6<double>& v);

NullVector apply_translation(CoordIndex m, double theta, const NullVector& n);
NullVector apply_dilation(double theta, const NullVector& n);

/// Image of a conformal translation. Points sent to p + q = 0 come back
/// with at_infinity set and no Q-coordinates.
struct ConformalImage {
  Vector6<double> v;
  bool at_infinity = false;
  std::optional<MinkowskiPoint> point() const;
};

ConformalImage apply_conformal_translation(CoordIndex m, double theta, const NullVector& n);

/// (v + alpha |v|^2) / (1 + 2<v,alpha> + |alpha|^2 |v|^2), or nullopt when the
/// denominator vanishes (to within tol).
std::optional<MinkowskiPoint> mobius_oracle(const MinkowskiPoint& v, const MinkowskiPoint& alpha,
                                            double tol = 1e-14);
double mobius_denominator(const MinkowskiPoint& v, const MinkowskiPoint& alpha);

/// Sorts the fifteen basis elements (Lorentz M_ab, a_m, b_m, M_pq) by their
/// observed action on sample points and checks the counts 3/3/1/4/4.
Report classify_generators();

/// Exact image of Gamma_x, Gamma_p, Gamma_q under a_x and b_x, term by term
/// in theta, compared with the closed forms as usually printed.
Report termwise_check();

struct ConformalSuiteConfig {
  double tolerance = 1e-12;
  double oracle_tolerance = 1e-9;
  std::uint64_t seed = 42;
  int samples = 1000;
};

/// Randomized translation, dilation and Mobius checks plus the exact
/// nilpotency, termwise and classification checks.
Report conformal_suite(const ConformalSuiteConfig& config = {});

}  // namespace splitconf
