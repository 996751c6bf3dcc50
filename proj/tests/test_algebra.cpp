#include <random>

#include "doctest.h"
#include "splitconf/algebra.hpp"

using namespace splitconf;

namespace {

using C = Complex<Rational>;
using SQ = SplitQuaternion<Rational>;
using TS = ExactScalar;

TS unit(SplitUnit h, ComplexUnit c = ComplexUnit::One) { return TS::unit(h, c); }

const TS kOne = unit(SplitUnit::One);
const TS kK = unit(SplitUnit::K);
const TS kKL = unit(SplitUnit::KL);
const TS kL = unit(SplitUnit::L);
const TS kEll = unit(SplitUnit::One, ComplexUnit::Ell);

SQ random_sq(std::mt19937& rng) {
  std::uniform_int_distribution<int> d(-5, 5);
  return SQ(d(rng), d(rng), d(rng), d(rng));
}

}  // namespace

TEST_CASE("complex_mul") {
  CHECK(complex_mul(C{1, 2}, C{3, 4}) == C{-5, 10});
  CHECK(complex_mul(C{7, -3}, C{1, 0}) == C{7, -3});
  CHECK(complex_mul(C::ell(), C::ell()) == C{-1, 0});
}

TEST_CASE("split quaternion multiplication table") {
  const auto K = SQ::unit(SplitUnit::K);
  const auto L = SQ::unit(SplitUnit::L);
  const auto KL = SQ::unit(SplitUnit::KL);
  const auto one = SQ::unit(SplitUnit::One);

  CHECK(K * K == -one);
  CHECK(L * L == one);
  CHECK(KL * KL == one);
  CHECK(K * L == KL);
  CHECK(sq_mul(L, KL) == -K);
  CHECK(sq_mul(KL, K) == L);
  // distinct imaginary units anticommute
  CHECK(L * K == -(K * L));
  CHECK(KL * L == -(L * KL));
  CHECK(K * KL == -(KL * K));
}

TEST_CASE("zero divisors") {
  const auto one = SQ::unit(SplitUnit::One);
  const auto L = SQ::unit(SplitUnit::L);
  const SQ zero;
  CHECK(sq_mul(one + L, one - L) == zero);
  CHECK(one + L != zero);
  CHECK(one - L != zero);
  CHECK(TS(one + L) * TS(one - L) == TS{});
}

TEST_CASE("conjugations") {
  CHECK(conj_bar(C{3, 5}) == C{3, -5});
  CHECK(conj_star(SQ(1, 2, 3, 4)) == SQ(1, -2, -3, -4));

  const TS ellK = unit(SplitUnit::K, ComplexUnit::Ell);
  CHECK(conj_star(ellK) == -ellK);
  CHECK(conj_bar(ellK) == -ellK);
  CHECK(conj_star(conj_bar(ellK)) == ellK);

  for (std::size_t i = 0; i < 8; ++i) {
    const auto b = TS::basis(i);
    CHECK(conj_star(conj_star(b)) == b);
    CHECK(conj_bar(conj_bar(b)) == b);
    CHECK(conj_star(conj_bar(b)) == conj_bar(conj_star(b)));
  }
}

TEST_CASE("star is an anti-automorphism, bar an automorphism") {
  for (std::size_t i = 0; i < 4; ++i) {
    for (std::size_t j = 0; j < 4; ++j) {
      const auto a = SQ::unit(static_cast<SplitUnit>(i));
      const auto b = SQ::unit(static_cast<SplitUnit>(j));
      CHECK(conj_star(a * b) == conj_star(b) * conj_star(a));
    }
  }
  std::mt19937 rng(7);
  std::uniform_int_distribution<int> d(-9, 9);
  for (int n = 0; n < 50; ++n) {
    const C a{d(rng), d(rng)};
    const C b{d(rng), d(rng)};
    CHECK(conj_bar(a * b) == conj_bar(a) * conj_bar(b));
  }
}

TEST_CASE("split norm") {
  std::mt19937 rng(11);
  for (int n = 0; n < 100; ++n) {
    const auto a = random_sq(rng);
    CHECK(a * conj_star(a) == SQ(split_norm(a), 0, 0, 0));
    CHECK(split_norm(a) == a.c[0] * a.c[0] + a.c[1] * a.c[1] - a.c[2] * a.c[2] - a.c[3] * a.c[3]);
  }
}

TEST_CASE("tensor_mul") {
  const TS ellK = unit(SplitUnit::K, ComplexUnit::Ell);
  const TS ellL = unit(SplitUnit::L, ComplexUnit::Ell);
  CHECK(tensor_mul(ellK, ellL) == -kKL);

  std::mt19937 rng(3);
  std::uniform_int_distribution<int> d(-4, 4);
  for (int n = 0; n < 20; ++n) {
    std::array<Rational, 8> c{};
    for (auto& v : c) v = d(rng);
    const TS a(c);
    CHECK(a * kOne == a);
    CHECK(kOne * a == a);
  }
}

TEST_CASE("ell is central") {
  for (const auto& h : {kOne, kK, kKL, kL}) {
    CHECK(kEll * h == h * kEll);
  }
  CHECK(kEll * kEll == -kOne);
}

TEST_CASE("associativity on all basis triples") {
  for (std::size_t i = 0; i < 8; ++i)
    for (std::size_t j = 0; j < 8; ++j)
      for (std::size_t k = 0; k < 8; ++k) {
        const auto a = TS::basis(i), b = TS::basis(j), c = TS::basis(k);
        REQUIRE((a * b) * c == a * (b * c));
      }
}

TEST_CASE("embeddings are homomorphic") {
  std::mt19937 rng(5);
  std::uniform_int_distribution<int> d(-6, 6);
  for (int n = 0; n < 50; ++n) {
    const C a{d(rng), d(rng)}, b{d(rng), d(rng)};
    CHECK(TS(a) * TS(b) == TS(a * b));
    const auto p = random_sq(rng), q = random_sq(rng);
    CHECK(TS(p) * TS(q) == TS(p * q));
  }
}
