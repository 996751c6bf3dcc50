#include <cmath>
#include <random>

#include "doctest.h"
#include "splitconf/conformal.hpp"

using namespace splitconf;

namespace {

using CI = CoordIndex;

MinkowskiPoint random_point(std::mt19937& rng) {
  std::uniform_real_distribution<double> d(-1.5, 1.5);
  return {d(rng), d(rng), d(rng), d(rng)};
}

Vector6<double> make(double x, double y, double z, double t, double p, double q) {
  Vector6<double> v;
  v[CI::x] = x;
  v[CI::y] = y;
  v[CI::z] = z;
  v[CI::t] = t;
  v[CI::p] = p;
  v[CI::q] = q;
  return v;
}

}  // namespace

TEST_CASE("NullVector and q_from_p") {
  const NullVector n(make(0.6, 0, 0.8, 0, 1, 0));
  const auto q = q_from_p(n);
  CHECK(q.T == 0.0);
  CHECK(q.Xc == doctest::Approx(0.6));
  CHECK(q.Y == 0.0);
  CHECK(q.Z == doctest::Approx(0.8));

  CHECK_THROWS_AS(NullVector(make(0, 0, 0, 0, 1, 0)), std::invalid_argument);
  CHECK_THROWS_AS(NullVector(make(1, 0, 0, 0, 1, -1)), std::invalid_argument);
  CHECK_THROWS_AS(NullVector(Vector6<double>{}), std::invalid_argument);

  const NullVector scaled(-3.5 * n.coords());
  CHECK(max_abs_diff(q_from_p(scaled), q) < 1e-15);
}

TEST_CASE("embed_point") {
  const auto origin = embed_point({0, 0, 0, 0}).coords();
  CHECK(origin[CI::p] == 0.5);
  CHECK(origin[CI::q] == 0.5);

  const auto e = embed_point({0, 1, 0, 0}).coords();
  CHECK(e[CI::p] == 1.0);
  CHECK(e[CI::q] == 0.0);

  std::mt19937 rng(41);
  for (int i = 0; i < 200; ++i) {
    const auto q = random_point(rng);
    const auto n = embed_point(q);
    CHECK(n.p_plus_q() == doctest::Approx(1.0));
    CHECK(null_residual(n.coords()) < 1e-15);
    CHECK(max_abs_diff(q_from_p(n), q) < 1e-12);
    const double p = n.coords()[CI::p], qq = n.coords()[CI::q];
    CHECK((p - qq) / (p + qq) == doctest::Approx(minkowski_norm(q)));
  }
}

TEST_CASE("null rotation generators") {
  for (auto m : kSpacetimeCoords) {
    const auto a = translation_generator(m);
    const auto b = conformal_translation_generator(m);
    CHECK((a * a).is_zero());
    CHECK((b * b).is_zero());
    CHECK_FALSE(a.is_zero());
    CHECK_FALSE(b.is_zero());
  }
  CHECK_THROWS_AS(translation_generator(CI::p), std::invalid_argument);
  CHECK_THROWS_AS(conformal_translation_generator(CI::q), std::invalid_argument);
}

TEST_CASE("translations") {
  const auto img = q_from_p(apply_translation(CI::x, 2.0, embed_point({0, 0, 0, 0})));
  CHECK(max_abs_diff(img, {0, 2, 0, 0}) < 1e-12);

  const auto n = embed_point({0.3, -0.2, 0.5, 0.1});
  CHECK(max_abs_diff(q_from_p(apply_translation(CI::t, 0.0, n)), q_from_p(n)) == 0.0);

  std::mt19937 rng(42);
  for (int i = 0; i < 100; ++i) {
    const auto q = random_point(rng);
    for (auto m : kSpacetimeCoords) {
      const double theta = 0.7 - 0.01 * i;
      auto want = q;
      switch (m) {
        case CI::t: want.T += theta; break;
        case CI::x: want.Xc += theta; break;
        case CI::y: want.Y += theta; break;
        default: want.Z += theta; break;
      }
      CHECK(max_abs_diff(q_from_p(apply_translation(m, theta, embed_point(q))), want) < 1e-12);
    }
  }
  CHECK_THROWS_AS(apply_translation(CI::p, 1.0, n), std::invalid_argument);
}

TEST_CASE("dilation") {
  const auto img = q_from_p(apply_dilation(std::log(2.0), embed_point({0, 1, 0, 0})));
  CHECK(max_abs_diff(img, {0, 0.5, 0, 0}) < 1e-12);

  const auto n = embed_point({0.4, 0.1, -0.9, 0.2});
  const auto d = apply_dilation(0.3, n);
  CHECK(d.p_plus_q() == doctest::Approx(std::exp(0.3) * n.p_plus_q()));
  CHECK(max_abs_diff(q_from_p(apply_dilation(0.0, n)), q_from_p(n)) == 0.0);
}

TEST_CASE("mobius_oracle") {
  const MinkowskiPoint v{0.2, 0.4, -0.3, 0.7};
  CHECK(*mobius_oracle(v, {}) == v);

  const MinkowskiPoint light{1, 1, 0, 0};
  const MinkowskiPoint alpha{0, 0.3, 0.2, 0};
  const auto o = *mobius_oracle(light, alpha);
  const double d = 1 + 2 * minkowski_dot(light, alpha);
  CHECK(o.T == doctest::Approx(1 / d));
  CHECK(o.Xc == doctest::Approx(1 / d));

  for (double theta : {0.5, -0.25, 2.0}) {
    const auto x = *mobius_oracle({0, 1, 0, 0}, {0, theta, 0, 0});
    CHECK(x.Xc == doctest::Approx(1 / (1 + theta)));
  }
  CHECK_FALSE(mobius_oracle({0, 1, 0, 0}, {0, -1, 0, 0}).has_value());
}

TEST_CASE("conformal translations") {
  std::mt19937 rng(43);
  std::uniform_real_distribution<double> angle(-0.5, 0.5);
  int compared = 0;
  for (int i = 0; i < 200; ++i) {
    const auto q = random_point(rng);
    const double theta = angle(rng);
    for (auto m : kSpacetimeCoords) {
      MinkowskiPoint dir = unit_point(m);
      dir = {theta * dir.T, theta * dir.Xc, theta * dir.Y, theta * dir.Z};
      if (std::abs(mobius_denominator(q, dir)) < 0.1) continue;
      const auto img = apply_conformal_translation(m, theta, embed_point(q));
      REQUIRE_FALSE(img.at_infinity);
      CHECK(null_residual(img.v) < 1e-12);
      CHECK(max_abs_diff(*img.point(), *mobius_oracle(q, dir)) < 1e-9);
      ++compared;
    }
  }
  CHECK(compared > 600);

  const auto n = embed_point({0.1, 0.2, 0.3, 0.4});
  CHECK(max_abs_diff(*apply_conformal_translation(CI::y, 0.0, n).point(), q_from_p(n)) == 0.0);

  const auto inf = apply_conformal_translation(CI::x, -1.0, embed_point({0, 1, 0, 0}));
  CHECK(inf.at_infinity);
  CHECK_FALSE(inf.point().has_value());
  CHECK(null_residual(inf.v) < 1e-12);
}

TEST_CASE("rotations and boosts keep p + q") {
  const auto n = embed_point({0.5, -0.4, 0.3, 0.2});
  for (const auto& id : kLorentzGenerators) {
    const NullVector img(apply_step({StepKind::Generator, id, CI::x, 0.8}, n.coords()));
    CHECK(img.p_plus_q() == doctest::Approx(1.0));
    const auto q = q_from_p(img);
    CHECK(minkowski_norm(q) == doctest::Approx(minkowski_norm(q_from_p(n))));
  }
}

TEST_CASE("parse_step") {
  CHECK(parse_step("zx", 1.0)->kind == StepKind::Generator);
  CHECK(parse_step("at", 1.0)->kind == StepKind::Translation);
  CHECK(parse_step("bz", 1.0)->direction == CI::z);
  CHECK(parse_step("bz", 1.0)->name() == "bz");
  CHECK_FALSE(parse_step("ap", 1.0).has_value());
  CHECK_FALSE(parse_step("cx", 1.0).has_value());
  CHECK_FALSE(parse_step("xz", 1.0).has_value());
}

TEST_CASE("classify_generators") {
  const auto r = classify_generators();
  CHECK(r.entries().size() == 16);
  CHECK_FALSE(r.has_failures());
  CHECK(r.find("classify.xy")->actual == "rotation");
  CHECK(r.find("classify.at")->actual == "translation-t");
  CHECK(r.find("classify.bz")->actual == "conformal-translation-z");
  CHECK(r.find("classify.counts")->actual ==
        "rotation=3 boost=3 dilation=1 translation=4 conformal-translation=4");
}

TEST_CASE("termwise images") {
  const auto r = termwise_check();
  CHECK(r.entries().size() == 6);
  CHECK_FALSE(r.has_failures());
  CHECK(r.find("termwise.a_x.Gamma_x")->status == CheckStatus::Pass);
  CHECK(r.find("termwise.a_x.Gamma_p")->status == CheckStatus::Pass);
  CHECK(r.find("termwise.b_x.Gamma_q")->status == CheckStatus::Pass);
  const auto* p = r.find("termwise.b_x.Gamma_p");
  CHECK(p->status == CheckStatus::Discrepancy);
  CHECK(p->actual == "x: theta; p: 1 + 1/2theta^2; q: 1/2theta^2");
  CHECK(r.find("termwise.b_x.Gamma_x")->actual == "x: 1; p: theta; q: theta");
}

TEST_CASE("conformal_suite") {
  const auto r = conformal_suite({1e-12, 1e-9, 42, 200});
  CHECK_FALSE(r.has_failures());
  CHECK(r.count(CheckStatus::Discrepancy) == 3);
  const auto again = conformal_suite({1e-12, 1e-9, 42, 200});
  REQUIRE(again.entries().size() == r.entries().size());
  for (std::size_t i = 0; i < r.entries().size(); ++i)
    CHECK(again.entries()[i].actual == r.entries()[i].actual);
}
