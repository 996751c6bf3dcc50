// Acceptance run: one PASS/FAIL line per criterion, nonzero exit on any FAIL.

#include <chrono>
#include <cstdio>
#include <functional>
#include <string>

#include "splitconf/conformal.hpp"
#include "splitconf/realrep.hpp"
#include "splitconf/suites.hpp"

using namespace splitconf;

namespace {

struct Outcome {
  bool ok;
  std::string detail;
};

bool all_pass(const Report& r, std::string_view prefix, std::size_t* seen = nullptr) {
  std::size_t n = 0;
  bool ok = true;
  for (const auto& e : r.entries()) {
    if (!e.id.starts_with(prefix)) continue;
    ++n;
    ok = ok && e.status == CheckStatus::Pass;
  }
  if (seen) *seen = n;
  return ok && n > 0;
}

Outcome clifford() {
  int bad = 0;
  for (auto a : kAllCoords)
    for (auto b : kAllCoords) {
      const auto want4 = Mat4<Rational>::diagonal(ExactScalar(Rational(2 * metric(a, b))));
      if (anticommutator(gamma<Rational>(a), gamma<Rational>(b)) != want4) ++bad;
      const auto ra = real_gamma(a), rb = real_gamma(b);
      if (ra * rb + rb * ra != Rational(2 * metric(a, b)) * RealMatrix<Rational>::identity(16)) ++bad;
    }
  return {bad == 0, "36 ordered pairs, 4x4 and 16x16, " + std::to_string(bad) + " mismatches"};
}

Outcome properties() {
  const auto r = verify_properties();
  std::size_t n1, n2, n3, n4, n5;
  const bool ok = all_pass(r, "prop1.", &n1) && all_pass(r, "prop2.", &n2) &&
                  all_pass(r, "prop3.", &n3) && all_pass(r, "prop4.", &n4) &&
                  all_pass(r, "prop5.", &n5);
  return {ok && n1 == 6 && n2 == 120 && n3 == 30 && n4 == 30 && n5 == 30,
          std::to_string(n1) + "/" + std::to_string(n2) + "/" + std::to_string(n3) + "/" +
              std::to_string(n4) + "/" + std::to_string(n5) + " checks"};
}

Outcome invariance(const Report& group) {
  const bool ok = all_pass(group, "invariance.quadratic_form") && all_pass(group, "invariance.metric") &&
                  all_pass(group, "invariance.det");
  return {ok, group.find("invariance.quadratic_form")->actual + "; " +
                  group.find("invariance.metric")->actual + "; det " +
                  group.find("invariance.det")->actual};
}

Outcome equivalence(const Report& group) {
  const bool ok = all_pass(group, "equivalence.");
  return {ok, group.find("equivalence.x_action")->actual + "; " +
                  group.find("equivalence.hermitian")->actual};
}

Outcome conformal(const Report& c) {
  std::size_t n = 0;
  const bool ok = all_pass(c, "translation.", &n) && all_pass(c, "dilation") &&
                  all_pass(c, "conformal_translation.") && all_pass(c, "null_preserved") &&
                  all_pass(c, "classify.") && !c.has_failures();
  return {ok, "classification " + c.find("classify.counts")->actual + "; " +
                  c.find("null_preserved")->actual};
}

Outcome nilpotency() {
  bool ok = true;
  for (auto m : kSpacetimeCoords) {
    const auto a = translation_generator(m), b = conformal_translation_generator(m);
    ok = ok && (a * a).is_zero() && (b * b).is_zero() && !a.is_zero() && !b.is_zero();
  }
  return {ok, "a_m^2 = b_m^2 = 0 for m in x, y, z, t"};
}

Outcome homomorphism() {
  const auto h = homomorphism_check();
  const auto t = verify_image_tables();
  return {!h.has_failures() && h.entries().size() == 64 && !t.has_failures() &&
              t.entries().size() == 20,
          std::to_string(h.count(CheckStatus::Pass)) + " basis pairs, " +
              std::to_string(t.count(CheckStatus::Pass)) + " table products"};
}

Outcome projection(const Report& group) {
  const bool ok = all_pass(group, "projection.pi_gamma_") && all_pass(group, "projection.lorentz.") &&
                  all_pass(group, "projection.dilation_commutes.");
  return {ok, "pi(Gamma_p) = pi(Gamma_q) = 0, six Lorentz generators, M_pq commutes"};
}

Outcome cross_checks(const Report& group) {
  const std::vector<double> angles{0.3, 1.0, -0.7};
  const auto app = appendix_check(angles);
  const auto gen = so42gen_check(angles);
  bool ok = app.entries().size() == 15 && gen.entries().size() == 30 && !app.has_failures() &&
            !gen.has_failures();
  // No silent mismatch: every pass really matches, every discrepancy says where.
  for (const auto& id : kAllGenerators) {
    const auto* e = app.find("appendix.M_" + id.name());
    if (!e) {
      ok = false;
      continue;
    }
    bool matches = true;
    for (double phi : angles)
      matches = matches && approx_equal(appendix_matrix(id, phi), generator(id, phi));
    if (e->status == CheckStatus::Pass) ok = ok && matches;
    if (e->status == CheckStatus::Discrepancy) ok = ok && !matches && !e->context.empty();
  }
  ok = ok && all_pass(group, "generator.");
  return {ok, "appendix " + std::to_string(app.count(CheckStatus::Pass)) + " match, " +
                  std::to_string(app.count(CheckStatus::Discrepancy)) + " documented; real forms " +
                  std::to_string(gen.count(CheckStatus::Pass)) + "/30 match"};
}

Outcome algebra_sanity() {
  const auto one = ExactScalar(Rational(1));
  const auto l = ExactScalar::unit(SplitUnit::L);
  const auto a = one + l, b = one - l;
  bool ok = (a * b).is_zero() && !a.is_zero() && !b.is_zero();
  const auto ell = ExactScalar::unit(SplitUnit::One, ComplexUnit::Ell);
  for (std::size_t h = 0; h < 4; ++h) {
    const auto u = ExactScalar::unit(static_cast<SplitUnit>(h));
    ok = ok && ell * u == u * ell;
  }
  return {ok, "(1+L)(1-L) = 0, l central"};
}

}  // namespace

int main() {
  const auto start = std::chrono::steady_clock::now();
  const RunConfig config;  // seed 42, 1000 samples, tolerance 1e-12
  const auto group = group_suite(config);
  const auto conf = run_suite("conformal", config);

  const std::vector<std::pair<std::string, std::function<Outcome()>>> criteria{
      {"Clifford relations exact", clifford},
      {"Product identities exact", properties},
      {"Quadratic form and metric invariance", [&] { return invariance(group); }},
      {"2x2 and 4x4 actions agree", [&] { return equivalence(group); }},
      {"Conformal action", [&] { return conformal(conf); }},
      {"Null rotation generators nilpotent", nilpotency},
      {"Real representation homomorphism", homomorphism},
      {"SO(3,1) projections", [&] { return projection(group); }},
      {"Explicit matrix cross-checks", [&] { return cross_checks(group); }},
      {"Zero divisors and central l", algebra_sanity},
  };

  int failed = 0;
  for (std::size_t i = 0; i < criteria.size(); ++i) {
    const auto o = criteria[i].second();
    if (!o.ok) ++failed;
    std::printf("%s criterion %zu: %s (%s)\n", o.ok ? "PASS" : "FAIL", i + 1,
                criteria[i].first.c_str(), o.detail.c_str());
  }
  const double secs =
      std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
  std::printf("%d of %zu criteria passed in %.2f s\n", static_cast<int>(criteria.size()) - failed,
              criteria.size(), secs);
  return failed == 0 ? 0 : 1;
}
