#include <cmath>
#include <random>

#include "doctest.h"
#include "splitconf/realrep.hpp"

using namespace splitconf;

namespace {

using CI = CoordIndex;
using RM = RealMatrix<Rational>;
using TS = ExactScalar;

const RM kI2 = RM::identity(2);
const RM kLy{{0, 1}, {-1, 0}};
const RM kSx{{0, 1}, {1, 0}};
const RM kSz{{1, 0}, {0, -1}};

GeneratorId gen(const char* name) { return *parse_generator(name); }

}  // namespace

TEST_CASE("image table") {
  const auto& t = real_image_table();
  CHECK(t.complex[1] == kLy);
  CHECK(t.complex[1] * t.complex[1] == -kI2);
  CHECK(t.split[static_cast<std::size_t>(SplitUnit::L)] == kSz);
  CHECK(t.split[static_cast<std::size_t>(SplitUnit::K)] == -kLy);
  CHECK(t.split[static_cast<std::size_t>(SplitUnit::KL)] == kSx);

  const auto r = verify_image_tables();
  CHECK(r.entries().size() == 4 + 16);
  CHECK_FALSE(r.has_failures());
}

TEST_CASE("realify_scalar") {
  CHECK(realify_scalar(TS::unit(SplitUnit::One, ComplexUnit::Ell)) == kron(kI2, kLy));
  CHECK(realify_scalar(TS::unit(SplitUnit::L)) == kron(kSz, kI2));
  CHECK(realify_scalar(TS(Rational(3))) == Rational(3) * RM::identity(4));

  // Exhaustive homomorphism over basis pairs, plus random combinations.
  for (std::size_t i = 0; i < 8; ++i)
    for (std::size_t j = 0; j < 8; ++j) {
      const auto a = TS::basis(i), b = TS::basis(j);
      CHECK(realify_scalar(a * b) == realify_scalar(a) * realify_scalar(b));
    }
  std::mt19937 rng(51);
  std::uniform_int_distribution<int> d(-4, 4);
  for (int n = 0; n < 50; ++n) {
    std::array<Rational, 8> ca, cb;
    for (auto& c : ca) c = Rational(d(rng), 2);
    for (auto& c : cb) c = Rational(d(rng), 3);
    const TS a(ca), b(cb);
    CHECK(realify_scalar(a * b) == realify_scalar(a) * realify_scalar(b));
    CHECK(realify_scalar(a + b) == realify_scalar(a) + realify_scalar(b));
  }

  const auto r = homomorphism_check();
  CHECK(r.entries().size() == 64);
  CHECK_FALSE(r.has_failures());
}

TEST_CASE("real gammas") {
  CHECK(real_gamma(CI::x) == kron({kSx, kSx, kI2, kI2}));
  CHECK(real_gamma(CI::t) == kron({kLy, kI2, kSz, kI2}));
  for (auto m : kAllCoords) CHECK(real_gamma(m) == realify(gamma<Rational>(m)));
  for (auto a : kAllCoords)
    for (auto b : kAllCoords) {
      const auto ga = real_gamma(a), gb = real_gamma(b);
      CHECK(ga * gb + gb * ga == Rational(2 * metric(a, b)) * RM::identity(16));
    }
  const auto r = verify_real_clifford();
  CHECK(r.entries().size() == 21 + 6);
  CHECK_FALSE(r.has_failures());
}

TEST_CASE("factorize") {
  const KronExpr e{-1, {Pauli::Z, Pauli::LY, Pauli::Z, Pauli::LY}};
  const auto f = factorize(evaluate(e));
  REQUIRE(f.has_value());
  CHECK(*f == e);
  CHECK(to_string(e) == "-s_z (x) l s_y (x) s_z (x) l s_y");
  CHECK_FALSE(factorize(RM::identity(16) + real_gamma(CI::x)).has_value());
  CHECK_FALSE(factorize(RM::identity(4)).has_value());
}

TEST_CASE("real generators") {
  const auto gens = real_generators();
  REQUIRE(gens.size() == 15);
  CHECK(real_bivector(gen("tq")) == kron({kI2, kI2, kSx, kI2}));
  CHECK(real_bivector(gen("pq")) == -kron({kI2, kI2, kSz, kI2}));
  CHECK(real_bivector(gen("xy")) == kron({kI2, kSz, kI2, kLy}));
  for (std::size_t k = 0; k < 15; ++k) {
    CHECK(gens[k] == realify(bivector(kAllGenerators[k])));
    CHECK(gens[k] == evaluate(listed_generator_expr(kAllGenerators[k])));
  }

  for (const auto& id : kAllGenerators)
    for (double phi : {0.3, -1.4}) {
      const auto r = real_generator(id, phi);
      CHECK(max_abs_diff(r, realify(generator(id, phi))) < 1e-12);
      CHECK(max_abs_diff(r * real_generator(id, -phi), RealMatrix<double>::identity(16)) < 1e-12);
    }

  const auto report = so42gen_check();
  CHECK(report.entries().size() == 30);
  CHECK_FALSE(report.has_failures());
  CHECK(report.count(CheckStatus::Discrepancy) == 0);
}

TEST_CASE("realify respects products of words") {
  std::mt19937 rng(52);
  std::uniform_int_distribution<std::size_t> pick(0, 14);
  for (int n = 0; n < 20; ++n) {
    auto abstract = Mat4<Rational>::identity();
    auto real = RM::identity(16);
    for (int k = 0; k < 4; ++k) {
      const auto id = kAllGenerators[pick(rng)];
      // I + B/2 keeps everything rational
      const auto step = Mat4<Rational>::identity() + Rational(1, 2) * bivector(id);
      abstract = abstract * step;
      real = real * realify(step);
    }
    CHECK(realify(abstract) == real);
  }
}

TEST_CASE("second SO(3,1) projection") {
  const auto r = restrict_so31_second();
  CHECK_FALSE(r.has_failures());
  const auto* printed = r.find("second_projection.printed_criterion");
  REQUIRE(printed != nullptr);
  CHECK(printed->status == CheckStatus::Discrepancy);
  CHECK(printed->actual == "xy yz zx tq px py pz");
  CHECK(r.find("second_projection.image_criterion")->actual == "xy yz zx tx ty tz pq");
  CHECK(r.find("second_projection.commute.xy")->status == CheckStatus::Pass);

  const auto f = factorize(real_bivector(kDilation));
  REQUIRE(f.has_value());
  CHECK(f->f[2] == Pauli::Z);
  CHECK(factorize(real_bivector(gen("xy")))->f[2] == Pauli::I);

  const auto d = real_generator(kDilation, 0.7);
  const auto l = real_generator(gen("xy"), 1.1);
  CHECK(max_abs_diff(d * l, l * d) < 1e-12);
}

TEST_CASE("realrep_suite") {
  const auto r = realrep_suite();
  CHECK_FALSE(r.has_failures());
  CHECK(r.count(CheckStatus::Discrepancy) == 1);
  CHECK(r.find("realify.products")->status == CheckStatus::Pass);
}
