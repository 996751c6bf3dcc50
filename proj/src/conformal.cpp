#include "splitconf/conformal.hpp"

#include <algorithm>
#include <cmath>
#include <map>
#include <random>
#include <stdexcept>

#include "splitconf/format.hpp"

namespace splitconf {

namespace {

double euclidean_size(const Vector6<double>& v) {
  double s = 0.0;
  for (double c : v.c) s += c * c;
  return std::sqrt(s);
}

double max_abs(const Mat4<double>& m) {
  double r = 0.0;
  for (std::size_t i = 0; i < 4; ++i)
    for (std::size_t j = 0; j < 4; ++j)
      for (double c : m(i, j).coefficients()) r = std::max(r, std::abs(c));
  return r;
}

void require_spacetime(CoordIndex m, const char* what) {
  if (m == CoordIndex::p || m == CoordIndex::q) {
    throw std::invalid_argument(std::string(what) + ": direction must be one of x, y, z, t");
  }
}

MinkowskiPoint operator+(MinkowskiPoint a, const MinkowskiPoint& b) {
  a.T += b.T;
  a.Xc += b.Xc;
  a.Y += b.Y;
  a.Z += b.Z;
  return a;
}

MinkowskiPoint operator*(double s, MinkowskiPoint a) {
  a.T *= s;
  a.Xc *= s;
  a.Y *= s;
  a.Z *= s;
  return a;
}

double point_size(const MinkowskiPoint& a) {
  return std::max({std::abs(a.T), std::abs(a.Xc), std::abs(a.Y), std::abs(a.Z)});
}

MinkowskiPoint random_point(std::mt19937_64& rng, double range) {
  std::uniform_real_distribution<double> d(-range, range);
  MinkowskiPoint p;
  p.T = d(rng);
  p.Xc = d(rng);
  p.Y = d(rng);
  p.Z = d(rng);
  return p;
}

std::string seed_context(const ConformalSuiteConfig& c) {
  return "seed=" + std::to_string(c.seed) + " samples=" + std::to_string(c.samples);
}

}  // namespace

MinkowskiPoint unit_point(CoordIndex m) {
  require_spacetime(m, "unit_point");
  MinkowskiPoint p;
  switch (m) {
    case CoordIndex::t: p.T = 1.0; break;
    case CoordIndex::x: p.Xc = 1.0; break;
    case CoordIndex::y: p.Y = 1.0; break;
    default: p.Z = 1.0; break;
  }
  return p;
}

double component(const MinkowskiPoint& q, CoordIndex m) {
  switch (m) {
    case CoordIndex::t: return q.T;
    case CoordIndex::x: return q.Xc;
    case CoordIndex::y: return q.Y;
    case CoordIndex::z: return q.Z;
    default: throw std::invalid_argument("component: direction must be one of x, y, z, t");
  }
}

double minkowski_dot(const MinkowskiPoint& a, const MinkowskiPoint& b) {
  return a.Xc * b.Xc + a.Y * b.Y + a.Z * b.Z - a.T * b.T;
}

double minkowski_norm(const MinkowskiPoint& a) { return minkowski_dot(a, a); }

double max_abs_diff(const MinkowskiPoint& a, const MinkowskiPoint& b) {
  return std::max({std::abs(a.T - b.T), std::abs(a.Xc - b.Xc), std::abs(a.Y - b.Y),
                   std::abs(a.Z - b.Z)});
}

double null_residual(const Vector6<double>& v) {
  double s = 0.0;
  for (double c : v.c) s += c * c;
  if (s == 0.0) return 0.0;
  return std::abs(metric_norm(v)) / s;
}

NullVector::NullVector(const Vector6<double>& v, double tol) : v_(v) {
  if (std::abs(p_plus_q()) <= tol * euclidean_size(v)) {
    throw std::invalid_argument("NullVector: p + q must be nonzero");
  }
  if (null_residual(v) > tol) {
    throw std::invalid_argument("NullVector: -t^2+x^2+y^2+z^2-p^2+q^2 = " +
                                format_number(metric_norm(v)) + ", not 0");
  }
}

MinkowskiPoint q_from_p(const NullVector& n) {
  const double s = n.p_plus_q();
  if (s == 0.0) throw std::domain_error("q_from_p: p + q = 0");
  const auto& v = n.coords();
  return {v[CoordIndex::t] / s, v[CoordIndex::x] / s, v[CoordIndex::y] / s, v[CoordIndex::z] / s};
}

NullVector embed_point(const MinkowskiPoint& m) {
  const double n = minkowski_norm(m);
  Vector6<double> v;
  v[CoordIndex::x] = m.Xc;
  v[CoordIndex::y] = m.Y;
  v[CoordIndex::z] = m.Z;
  v[CoordIndex::t] = m.T;
  v[CoordIndex::p] = (1.0 + n) / 2.0;
  v[CoordIndex::q] = (1.0 - n) / 2.0;
  return NullVector(v);
}

Mat4<Rational> translation_generator(CoordIndex m) {
  require_spacetime(m, "translation_generator");
  const auto gm = gamma<Rational>(m);
  return gamma<Rational>(CoordIndex::p) * gm - gamma<Rational>(CoordIndex::q) * gm;
}

Mat4<Rational> conformal_translation_generator(CoordIndex m) {
  require_spacetime(m, "conformal_translation_generator");
  const auto gm = gamma<Rational>(m);
  return gamma<Rational>(CoordIndex::p) * gm + gamma<Rational>(CoordIndex::q) * gm;
}

std::string ConformalStep::name() const {
  switch (kind) {
    case StepKind::Translation: return std::string("a") + coord_name(direction);
    case StepKind::ConformalTranslation: return std::string("b") + coord_name(direction);
    default: return id.name();
  }
}

std::optional<ConformalStep> parse_step(std::string_view name, double angle) {
  if (const auto id = parse_generator(name)) {
    return ConformalStep{StepKind::Generator, *id, CoordIndex::x, angle};
  }
  if (name.size() != 2 || (name[0] != 'a' && name[0] != 'b')) return std::nullopt;
  const auto m = parse_coord(name[1]);
  if (!m || *m == CoordIndex::p || *m == CoordIndex::q) return std::nullopt;
  ConformalStep s;
  s.kind = name[0] == 'a' ? StepKind::Translation : StepKind::ConformalTranslation;
  s.direction = *m;
  s.angle = angle;
  return s;
}

Mat4<double> step_matrix(const ConformalStep& step) {
  switch (step.kind) {
    case StepKind::Translation:
      return exp_nilpotent(translation_generator(step.direction), step.angle / 2);
    case StepKind::ConformalTranslation:
      return exp_nilpotent(conformal_translation_generator(step.direction), step.angle / 2);
    default: return generator(step.id, step.angle);
  }
}

Vector6<double> apply_step(const ConformalStep& step, const Vector6<double>& v) {
  ConformalStep inverse = step;
  inverse.angle = -step.angle;
  const auto image = step_matrix(step) * build_P(v) * step_matrix(inverse);
  return extract_coords(image, 1e-9 * std::max(1.0, max_abs(image)));
}

NullVector apply_translation(CoordIndex m, double theta, const NullVector& n) {
  ConformalStep s;
  s.kind = StepKind::Translation;
  s.direction = m;
  s.angle = theta;
  require_spacetime(m, "apply_translation");
  return NullVector(apply_step(s, n.coords()));
}

NullVector apply_dilation(double theta, const NullVector& n) {
  return NullVector(apply_step({StepKind::Generator, kDilation, CoordIndex::x, theta}, n.coords()));
}

std::optional<MinkowskiPoint> ConformalImage::point() const {
  if (at_infinity) return std::nullopt;
  return q_from_p(NullVector(v));
}

ConformalImage apply_conformal_translation(CoordIndex m, double theta, const NullVector& n) {
  require_spacetime(m, "apply_conformal_translation");
  ConformalStep s;
  s.kind = StepKind::ConformalTranslation;
  s.direction = m;
  s.angle = theta;
  ConformalImage out;
  out.v = apply_step(s, n.coords());
  const double pq = out.v[CoordIndex::p] + out.v[CoordIndex::q];
  out.at_infinity = std::abs(pq) <= 1e-12 * euclidean_size(out.v);
  return out;
}

double mobius_denominator(const MinkowskiPoint& v, const MinkowskiPoint& alpha) {
  return 1.0 + 2.0 * minkowski_dot(v, alpha) + minkowski_norm(alpha) * minkowski_norm(v);
}

std::optional<MinkowskiPoint> mobius_oracle(const MinkowskiPoint& v, const MinkowskiPoint& alpha,
                                            double tol) {
  const double d = mobius_denominator(v, alpha);
  if (std::abs(d) <= tol) return std::nullopt;
  return (1.0 / d) * (v + minkowski_norm(v) * alpha);
}

// --- classification ---------------------------------------------------------

namespace {

std::vector<ConformalStep> basis_steps(double theta) {
  std::vector<ConformalStep> steps;
  for (const auto& id : kLorentzGenerators)
    steps.push_back({StepKind::Generator, id, CoordIndex::x, theta});
  steps.push_back({StepKind::Generator, kDilation, CoordIndex::x, theta});
  for (auto m : kSpacetimeCoords) {
    ConformalStep a;
    a.kind = StepKind::Translation;
    a.direction = m;
    a.angle = theta;
    steps.push_back(a);
    a.kind = StepKind::ConformalTranslation;
    steps.push_back(a);
  }
  return steps;
}

std::string expected_class(const ConformalStep& s) {
  switch (s.kind) {
    case StepKind::Translation: return std::string("translation-") + coord_name(s.direction);
    case StepKind::ConformalTranslation:
      return std::string("conformal-translation-") + coord_name(s.direction);
    default:
      if (s.id == kDilation) return "dilation";
      return is_rotation(s.id) ? "rotation" : "boost";
  }
}

std::string observed_class(const ConformalStep& s, const std::vector<MinkowskiPoint>& points) {
  constexpr double tol = 1e-10;
  const double theta = s.angle;
  std::vector<MinkowskiPoint> images;
  std::vector<double> scale;
  for (const auto& q : points) {
    const auto n = embed_point(q);
    const auto v = apply_step(s, n.coords());
    images.push_back(q_from_p(NullVector(v)));
    scale.push_back(v[CoordIndex::p] + v[CoordIndex::q]);
  }
  auto all = [&](auto&& pred) {
    for (std::size_t i = 0; i < points.size(); ++i)
      if (!pred(i)) return false;
    return true;
  };

  for (auto m : kSpacetimeCoords) {
    if (all([&](std::size_t i) {
          return max_abs_diff(images[i], points[i] + theta * unit_point(m)) < tol;
        }))
      return std::string("translation-") + coord_name(m);
  }
  for (auto m : kSpacetimeCoords) {
    if (all([&](std::size_t i) {
          const auto o = mobius_oracle(points[i], theta * unit_point(m));
          return o && max_abs_diff(images[i], *o) < tol;
        }))
      return std::string("conformal-translation-") + coord_name(m);
  }
  const double lambda = 1.0 / scale.front();
  if (std::abs(lambda - 1.0) > tol &&
      all([&](std::size_t i) { return max_abs_diff(images[i], lambda * points[i]) < tol; }))
    return "dilation";

  // Lorentz: p + q fixed, Q -> L Q linear with L^T eta L = eta.
  if (!all([&](std::size_t i) { return std::abs(scale[i] - 1.0) < tol; })) return "unclassified";
  RealMatrix<double> l(4);
  const std::array<CoordIndex, 4> order{CoordIndex::x, CoordIndex::y, CoordIndex::z,
                                        CoordIndex::t};
  for (std::size_t j = 0; j < 4; ++j) {
    const auto img = q_from_p(NullVector(apply_step(s, embed_point(unit_point(order[j])).coords())));
    for (std::size_t i = 0; i < 4; ++i) l(i, j) = component(img, order[i]);
  }
  const bool linear = all([&](std::size_t k) {
    for (std::size_t i = 0; i < 4; ++i) {
      double acc = 0.0;
      for (std::size_t j = 0; j < 4; ++j) acc += l(i, j) * component(points[k], order[j]);
      const double got = component(images[k], order[i]);
      if (std::abs(got - acc) > tol) return false;
    }
    return true;
  });
  const auto eta = minkowski_metric();
  if (!linear || max_abs_diff(transpose(l) * eta * l, eta) > tol) return "unclassified";
  const bool fixes_time = std::abs(l(3, 3) - 1.0) < tol && std::abs(l(0, 3)) < tol &&
                          std::abs(l(1, 3)) < tol && std::abs(l(2, 3)) < tol &&
                          std::abs(l(3, 0)) < tol && std::abs(l(3, 1)) < tol &&
                          std::abs(l(3, 2)) < tol;
  return fixes_time ? "rotation" : "boost";
}

}  // namespace

Report classify_generators() {
  Report report("classify");
  std::mt19937_64 rng(7);
  std::vector<MinkowskiPoint> points;
  for (int i = 0; i < 6; ++i) points.push_back(random_point(rng, 0.5));

  std::map<std::string, int> counts;
  for (const auto& s : basis_steps(0.37)) {
    const auto want = expected_class(s);
    const auto got = observed_class(s, points);
    // "translation-x" and "conformal-translation-x" count without the direction
    const bool directed = got.starts_with("translation-") || got.starts_with("conformal-");
    const std::string kind = directed ? got.substr(0, got.size() - 2) : got;
    ++counts[kind];
    report.add("classify." + s.name(), got == want, want, got, "theta=0.37 on 6 sample points");
  }
  const std::string want_counts = "rotation=3 boost=3 dilation=1 translation=4 conformal-translation=4";
  const std::string got_counts =
      "rotation=" + std::to_string(counts["rotation"]) + " boost=" +
      std::to_string(counts["boost"]) + " dilation=" + std::to_string(counts["dilation"]) +
      " translation=" + std::to_string(counts["translation"]) +
      " conformal-translation=" + std::to_string(counts["conformal-translation"]);
  report.add("classify.counts", got_counts == want_counts, want_counts, got_counts);
  return report;
}

// --- termwise images of a_x and b_x -----------------------------------------

namespace {

// Coefficient of theta^k, k = 0, 1, 2, for the Gamma_x, Gamma_p, Gamma_q parts.
using Poly = std::array<Rational, 3>;
struct TermImage {
  Poly x, p, q;
};

struct PrintedImage {
  const char* id;
  bool conformal;
  CoordIndex source;
  TermImage printed;
};

const Rational kHalf(1, 2);

// clang-format off
const std::array<PrintedImage, 6> kPrinted{{
  {"termwise.a_x.Gamma_x", false, CoordIndex::x, {{1, 0, 0}, {0, 1, 0}, {0, -1, 0}}},
  {"termwise.a_x.Gamma_p", false, CoordIndex::p, {{0, 1, 0}, {1, 0, kHalf}, {0, 0, -kHalf}}},
  {"termwise.a_x.Gamma_q", false, CoordIndex::q, {{0, 1, 0}, {0, 0, kHalf}, {1, 0, 0}}},
  {"termwise.b_x.Gamma_x", true, CoordIndex::x, {{1, 0, 0}, {0, kHalf, 0}, {0, kHalf, 0}}},
  {"termwise.b_x.Gamma_q", true, CoordIndex::q, {{0, -1, 0}, {0, 0, -kHalf}, {1, 0, -kHalf}}},
  {"termwise.b_x.Gamma_p", true, CoordIndex::p, {{0, 1, 0}, {1, kHalf, 0}, {0, 0, kHalf}}},
}};
// clang-format on

std::string format_poly(const Poly& c) {
  std::string out;
  for (std::size_t k = 0; k < 3; ++k) {
    if (c[k] == Rational(0)) continue;
    std::string coef = c[k].str();
    if (!out.empty()) {
      if (coef.starts_with("-")) {
        out += " - ";
        coef.erase(0, 1);
      } else {
        out += " + ";
      }
    }
    if (k == 0) {
      out += coef;
    } else {
      if (coef == "1") coef.clear();
      else if (coef == "-1") coef = "-";
      out += coef + (k == 1 ? "theta" : "theta^2");
    }
  }
  return out.empty() ? "0" : out;
}

std::string format_image(const TermImage& t) {
  return "x: " + format_poly(t.x) + "; p: " + format_poly(t.p) + "; q: " + format_poly(t.q);
}

}  // namespace

Report termwise_check() {
  Report report("termwise");
  for (const auto& entry : kPrinted) {
    const auto a = entry.conformal ? conformal_translation_generator(CoordIndex::x)
                                   : translation_generator(CoordIndex::x);
    const auto g = gamma<Rational>(entry.source);
    // (I + theta/2 A) G (I - theta/2 A) = G + theta (AG - GA)/2 - theta^2 AGA/4
    const std::array<Vector6<Rational>, 3> coeffs{
        extract_coords(g), extract_coords(kHalf * (a * g - g * a)),
        extract_coords(Rational(-1, 4) * (a * g * a))};
    TermImage got;
    bool others_zero = true;
    for (std::size_t k = 0; k < 3; ++k) {
      got.x[k] = coeffs[k][CoordIndex::x];
      got.p[k] = coeffs[k][CoordIndex::p];
      got.q[k] = coeffs[k][CoordIndex::q];
      for (auto m : {CoordIndex::y, CoordIndex::z, CoordIndex::t})
        others_zero = others_zero && coeffs[k][m] == Rational(0);
    }
    const auto& want = entry.printed;
    std::string diff;
    auto compare = [&](const char* label, const Poly& w, const Poly& h) {
      for (std::size_t k = 0; k < 3; ++k)
        if (w[k] != h[k]) {
          if (!diff.empty()) diff += ", ";
          diff += std::string("Gamma_") + label + " theta^" + std::to_string(k) + " printed " +
                  w[k].str() + " recomputed " + h[k].str();
        }
    };
    compare("x", want.x, got.x);
    compare("p", want.p, got.p);
    compare("q", want.q, got.q);
    if (!others_zero) {
      report.add(entry.id, false, format_image(want), format_image(got),
                 "image has y, z or t components");
    } else if (diff.empty()) {
      report.add(entry.id, true, format_image(want), format_image(got), "exact");
    } else {
      report.add(CheckEntry{entry.id, CheckStatus::Discrepancy, format_image(want),
                            format_image(got),
                            diff + "; recomputation is exact and authoritative"});
    }
  }
  return report;
}

// --- randomized suite ---------------------------------------------------------

Report conformal_suite(const ConformalSuiteConfig& config) {
  Report report("conformal");
  std::mt19937_64 rng(config.seed);
  std::uniform_real_distribution<double> angle(-1.0, 1.0);
  const std::string ctx = seed_context(config);
  double worst_null = 0.0;
  auto track = [&](const Vector6<double>& v) { worst_null = std::max(worst_null, null_residual(v)); };

  for (auto m : kSpacetimeCoords) {
    const std::string c(1, coord_name(m));
    const auto a = translation_generator(m);
    const auto b = conformal_translation_generator(m);
    report.add("nilpotent.a_" + c, (a * a).is_zero() && !a.is_zero(), "a^2 = 0, a != 0",
               (a * a).is_zero() ? "a^2 = 0" : "a^2 != 0");
    report.add("nilpotent.b_" + c, (b * b).is_zero() && !b.is_zero(), "b^2 = 0, b != 0",
               (b * b).is_zero() ? "b^2 = 0" : "b^2 != 0");
  }

  for (auto m : kSpacetimeCoords) {
    const std::string c(1, coord_name(m));
    double worst = 0.0, worst_add = 0.0;
    for (int i = 0; i < config.samples; ++i) {
      const auto q = random_point(rng, 1.0);
      const double t1 = angle(rng), t2 = angle(rng);
      const auto n = embed_point(q);
      const auto n1 = apply_translation(m, t1, n);
      track(n1.coords());
      worst = std::max(worst, max_abs_diff(q_from_p(n1), q + t1 * unit_point(m)));
      const auto n12 = apply_translation(m, t2, n1);
      worst_add = std::max(worst_add,
                           max_abs_diff(q_from_p(n12), q_from_p(apply_translation(m, t1 + t2, n))));
    }
    report.add("translation." + c, worst <= config.tolerance, "Q' = Q + theta e_" + c,
               "max deviation " + format_number(worst), ctx);
    report.add("translation.additive." + c, worst_add <= config.tolerance,
               "translate(t1) then translate(t2) = translate(t1 + t2)",
               "max deviation " + format_number(worst_add), ctx);
  }

  {
    double worst = 0.0, worst_scale = 0.0;
    for (int i = 0; i < config.samples; ++i) {
      const auto q = random_point(rng, 1.0);
      const double theta = angle(rng);
      const auto n = embed_point(q);
      const auto d = apply_dilation(theta, n);
      track(d.coords());
      worst = std::max(worst, max_abs_diff(q_from_p(d), std::exp(-theta) * q));
      worst_scale = std::max(worst_scale, std::abs(d.p_plus_q() - std::exp(theta) * n.p_plus_q()));
    }
    report.add("dilation", worst <= config.tolerance, "Q' = exp(-theta) Q",
               "max deviation " + format_number(worst), ctx);
    report.add("dilation.p_plus_q", worst_scale <= config.tolerance,
               "p + q scales by exp(theta)", "max deviation " + format_number(worst_scale), ctx);
  }

  {
    double worst = 0.0;
    for (int i = 0; i < config.samples; ++i) {
      const auto q = random_point(rng, 1.0);
      const auto& id = kLorentzGenerators[i % kLorentzGenerators.size()];
      const double theta = angle(rng);
      const auto n = embed_point(q);
      const NullVector img(apply_step({StepKind::Generator, id, CoordIndex::x, theta}, n.coords()));
      track(img.coords());
      const auto l = so31_block({{id, theta}});
      const std::array<double, 4> in{q.Xc, q.Y, q.Z, q.T};
      std::array<double, 4> out{};
      for (std::size_t r = 0; r < 4; ++r)
        for (std::size_t k = 0; k < 4; ++k) out[r] += l(r, k) * in[k];
      const auto qi = q_from_p(img);
      worst = std::max({worst, std::abs(img.p_plus_q() - 1.0),
                        max_abs_diff(qi, MinkowskiPoint{out[3], out[0], out[1], out[2]})});
    }
    report.add("lorentz", worst <= config.tolerance,
               "p + q fixed and Q moves by the Lorentz block", "max deviation " + format_number(worst),
               ctx);
  }

  std::uniform_real_distribution<double> small(-0.5, 0.5);
  for (auto m : kSpacetimeCoords) {
    const std::string c(1, coord_name(m));
    double worst = 0.0;
    int tried = 0;
    for (int i = 0; i < config.samples; ++i) {
      MinkowskiPoint q;
      double theta = 0.0;
      do {
        q = random_point(rng, 1.0);
        theta = small(rng);
        ++tried;
      } while (std::abs(mobius_denominator(q, theta * unit_point(m))) < 0.1);
      const auto img = apply_conformal_translation(m, theta, embed_point(q));
      track(img.v);
      const auto want = mobius_oracle(q, theta * unit_point(m));
      const auto got = img.point();
      if (!got || !want) {
        worst = INFINITY;
        continue;
      }
      worst = std::max(worst, max_abs_diff(*got, *want) / std::max(1.0, point_size(*want)));
    }
    report.add("conformal_translation." + c, worst <= config.oracle_tolerance,
               "Q' = mobius_oracle(Q, theta e_" + c + ")",
               "max relative deviation " + format_number(worst),
               ctx + " drawn=" + std::to_string(tried));
  }

  {
    // (0,1,0,0) with alpha = -e_x: the denominator (1 + theta)^2 vanishes.
    const MinkowskiPoint q{0, 1, 0, 0};
    const auto img = apply_conformal_translation(CoordIndex::x, -1.0, embed_point(q));
    report.add("conformal_translation.at_infinity",
               img.at_infinity && !mobius_oracle(q, -1.0 * unit_point(CoordIndex::x)),
               "point at infinity", img.at_infinity ? "point at infinity" : "finite image",
               "Q = (0,1,0,0), b_x, theta = -1");
  }

  {
    double worst_trip = 0.0, worst_ratio = 0.0;
    for (int i = 0; i < config.samples; ++i) {
      const auto q = random_point(rng, 2.0);
      const auto n = embed_point(q);
      track(n.coords());
      worst_trip = std::max(worst_trip, max_abs_diff(q_from_p(n), q));
      // Any rescaling of the null vector gives the same ratio.
      const double lambda = 0.5 + std::abs(angle(rng));
      const NullVector scaled(lambda * n.coords());
      const double p = scaled.coords()[CoordIndex::p], qq = scaled.coords()[CoordIndex::q];
      worst_ratio = std::max(worst_ratio, std::abs((p - qq) / (p + qq) - minkowski_norm(q)) /
                                              std::max(1.0, std::abs(minkowski_norm(q))));
    }
    report.add("embedding.round_trip", worst_trip <= config.tolerance, "q_from_p(embed_point(Q)) = Q",
               "max deviation " + format_number(worst_trip), ctx);
    report.add("embedding.p_minus_q", worst_ratio <= config.tolerance,
               "(p - q)/(p + q) = |Q|^2", "max relative deviation " + format_number(worst_ratio),
               ctx);
  }

  report.add("null_preserved", worst_null <= config.oracle_tolerance, "null residual <= 1e-9",
             "max null residual " + format_number(worst_null), ctx);

  report.merge(termwise_check());
  report.merge(classify_generators());
  return report;
}

}  // namespace splitconf
