#include "splitconf/realrep.hpp"

#include <cmath>
#include <stdexcept>

#include "splitconf/format.hpp"

namespace splitconf {

namespace {

using RM = RealMatrix<Rational>;

constexpr std::array<const char*, 2> kComplexLabels{"1", "l"};
constexpr std::array<const char*, 4> kSplitLabels{"1", "K", "KL", "L"};
constexpr std::array<Pauli, 4> kAllPauli{Pauli::I, Pauli::X, Pauli::Z, Pauli::LY};

KronExpr expr(int sign, Pauli a, Pauli b, Pauli c, Pauli d) { return {sign, {a, b, c, d}}; }

constexpr auto I = Pauli::I;
constexpr auto X = Pauli::X;
constexpr auto Z = Pauli::Z;
constexpr auto LY = Pauli::LY;

bool unit_entries(const RM& m) {
  for (std::size_t i = 0; i < m.size(); ++i)
    for (std::size_t j = 0; j < m.size(); ++j) {
      const auto& v = m(i, j);
      if (v != Rational(0) && v != Rational(1) && v != Rational(-1)) return false;
    }
  return true;
}

RealMatrix<double> exp_real(const RM& b, double alpha) {
  const auto sq = b * b;
  const auto id = RM::identity(b.size());
  const auto bd = scalar_cast<double>(b);
  const auto idd = RealMatrix<double>::identity(b.size());
  if (sq == id) return std::cosh(alpha) * idd + std::sinh(alpha) * bd;
  if (sq == -id) return std::cos(alpha) * idd + std::sin(alpha) * bd;
  throw std::invalid_argument("exp_real: matrix does not square to +-I");
}

const std::vector<std::pair<KronExpr, RM>>& factor_candidates() {
  static const auto table = [] {
    std::vector<std::pair<KronExpr, RM>> out;
    for (auto a : kAllPauli)
      for (auto b : kAllPauli)
        for (auto c : kAllPauli)
          for (auto d : kAllPauli) {
            const KronExpr e{1, {a, b, c, d}};
            out.emplace_back(e, evaluate(e));
          }
    return out;
  }();
  return table;
}

std::string list_names(const std::vector<GeneratorId>& ids) {
  std::string out;
  for (const auto& id : ids) {
    if (!out.empty()) out += " ";
    out += id.name();
  }
  return out;
}

}  // namespace

const RealImageTable& real_image_table() {
  static const RealImageTable table = [] {
    const RM one = RM::identity(2);
    const RM ly{{0, 1}, {-1, 0}};
    const RM sx{{0, 1}, {1, 0}};
    const RM sz{{1, 0}, {0, -1}};
    RealImageTable t;
    t.complex = {one, ly};
    t.split[static_cast<std::size_t>(SplitUnit::One)] = one;
    t.split[static_cast<std::size_t>(SplitUnit::K)] = -ly;
    t.split[static_cast<std::size_t>(SplitUnit::KL)] = sx;
    t.split[static_cast<std::size_t>(SplitUnit::L)] = sz;
    return t;
  }();
  return table;
}

std::string to_string(Pauli p) {
  switch (p) {
    case Pauli::I: return "I";
    case Pauli::X: return "s_x";
    case Pauli::Z: return "s_z";
    case Pauli::LY: return "l s_y";
  }
  return "?";
}

RM pauli_matrix(Pauli p) {
  switch (p) {
    case Pauli::I: return RM::identity(2);
    case Pauli::X: return RM{{0, 1}, {1, 0}};
    case Pauli::Z: return RM{{1, 0}, {0, -1}};
    case Pauli::LY: return RM{{0, 1}, {-1, 0}};
  }
  throw std::invalid_argument("pauli_matrix: bad factor");
}

std::string to_string(const KronExpr& e) {
  std::string out = e.sign < 0 ? "-" : "";
  for (std::size_t i = 0; i < 4; ++i) {
    if (i) out += " (x) ";
    out += to_string(e.f[i]);
  }
  return out;
}

RM evaluate(const KronExpr& e) {
  const auto m = kron({pauli_matrix(e.f[0]), pauli_matrix(e.f[1]), pauli_matrix(e.f[2]),
                       pauli_matrix(e.f[3])});
  return e.sign < 0 ? -m : m;
}

std::optional<KronExpr> factorize(const RM& m) {
  if (m.size() != 16) return std::nullopt;
  const RM neg = -m;
  for (const auto& [e, value] : factor_candidates()) {
    if (value == m) return e;
    if (value == neg) return KronExpr{-1, e.f};
  }
  return std::nullopt;
}

KronExpr real_gamma_expr(CoordIndex m) {
  switch (m) {
    case CoordIndex::x: return expr(1, X, X, I, I);
    case CoordIndex::y: return expr(-1, X, LY, I, LY);
    case CoordIndex::z: return expr(1, X, Z, I, I);
    case CoordIndex::t: return expr(1, LY, I, Z, I);
    case CoordIndex::q: return expr(-1, LY, I, LY, I);
    case CoordIndex::p: return expr(1, LY, I, X, I);
  }
  throw std::invalid_argument("real_gamma_expr: bad index");
}

RM real_gamma(CoordIndex m) { return evaluate(real_gamma_expr(m)); }

RM real_bivector(GeneratorId id) {
  if (id.a == id.b) throw std::invalid_argument("real_bivector: indices must differ");
  return real_gamma(id.a) * real_gamma(id.b);
}

std::vector<RM> real_generators() {
  std::vector<RM> out;
  for (const auto& id : kAllGenerators) out.push_back(real_bivector(id));
  return out;
}

KronExpr listed_generator_expr(GeneratorId id) {
  const auto n = id.name();
  if (n == "tx") return expr(1, Z, X, Z, I);
  if (n == "ty") return expr(-1, Z, LY, Z, LY);
  if (n == "tz") return expr(1, Z, Z, Z, I);
  if (n == "xy") return expr(1, I, Z, I, LY);
  if (n == "yz") return expr(1, I, X, I, LY);
  if (n == "zx") return expr(1, I, LY, I, I);
  if (n == "qx") return expr(-1, Z, X, LY, I);
  if (n == "qy") return expr(1, Z, LY, LY, LY);
  if (n == "qz") return expr(-1, Z, Z, LY, I);
  if (n == "px") return expr(1, Z, X, X, I);
  if (n == "py") return expr(-1, Z, LY, X, LY);
  if (n == "pz") return expr(1, Z, Z, X, I);
  if (n == "tp") return expr(-1, I, I, LY, I);
  if (n == "tq") return expr(1, I, I, X, I);
  if (n == "pq") return expr(-1, I, I, Z, I);
  throw std::invalid_argument("listed_generator_expr: no entry for " + n);
}

RealMatrix<double> real_generator(GeneratorId id, double theta) {
  return exp_real(real_bivector(id), theta / 2);
}

Report verify_image_tables() {
  Report report("image_tables");
  const auto& t = real_image_table();
  for (std::size_t a = 0; a < 2; ++a)
    for (std::size_t b = 0; b < 2; ++b) {
      const auto prod = ExactScalar::unit(SplitUnit::One, static_cast<ComplexUnit>(a)) *
                        ExactScalar::unit(SplitUnit::One, static_cast<ComplexUnit>(b));
      RM want(2);
      for (std::size_t c = 0; c < 2; ++c)
        want = want + prod(SplitUnit::One, static_cast<ComplexUnit>(c)) * t.complex[c];
      const auto got = t.complex[a] * t.complex[b];
      report.add(std::string("table.C.") + kComplexLabels[a] + "*" + kComplexLabels[b], got == want,
                 format_matrix(want), format_matrix(got));
    }
  for (std::size_t a = 0; a < 4; ++a)
    for (std::size_t b = 0; b < 4; ++b) {
      const auto prod = ExactScalar::unit(static_cast<SplitUnit>(a)) *
                        ExactScalar::unit(static_cast<SplitUnit>(b));
      RM want(2);
      for (std::size_t h = 0; h < 4; ++h)
        want = want + prod(static_cast<SplitUnit>(h), ComplexUnit::One) * t.split[h];
      const auto got = t.split[a] * t.split[b];
      report.add(std::string("table.H.") + kSplitLabels[a] + "*" + kSplitLabels[b], got == want,
                 format_matrix(want), format_matrix(got));
    }
  return report;
}

Report homomorphism_check() {
  Report report("homomorphism");
  const auto& labels = ExactScalar::kLabels;
  for (std::size_t i = 0; i < 8; ++i)
    for (std::size_t j = 0; j < 8; ++j) {
      const auto a = ExactScalar::basis(i);
      const auto b = ExactScalar::basis(j);
      const auto want = realify_scalar(a) * realify_scalar(b);
      const auto got = realify_scalar(a * b);
      report.add("homomorphism." + std::string(labels[i]) + "*" + std::string(labels[j]),
                 got == want, format_matrix(want), format_matrix(got),
                 "realify(ab) = realify(a) realify(b)");
    }
  return report;
}

Report verify_real_clifford() {
  Report report("real_clifford");
  for (std::size_t i = 0; i < kAllCoords.size(); ++i)
    for (std::size_t j = i; j < kAllCoords.size(); ++j) {
      const auto a = kAllCoords[i];
      const auto b = kAllCoords[j];
      const auto ga = real_gamma(a), gb = real_gamma(b);
      const auto got = ga * gb + gb * ga;
      const auto want = Rational(2 * metric(a, b)) * RM::identity(16);
      report.add("real_anticommutator." + pair_name(a, b), got == want,
                 "2 g_mn I16 with g_mn = " + std::to_string(metric(a, b)),
                 got == want ? "as expected" : "mismatch", "{Gamma_m, Gamma_n} in 16x16 integers");
    }
  for (auto m : kAllCoords) {
    const auto listed = real_gamma(m);
    const auto realified = realify(gamma<Rational>(m));
    const bool ok = listed == realified && unit_entries(listed);
    const auto f = factorize(realified);
    report.add(std::string("real_gamma.") + coord_name(m), ok, to_string(real_gamma_expr(m)),
               f ? to_string(*f) : "no Kronecker form",
               "listed Kronecker form against the realified 4x4 gamma");
  }
  return report;
}

Report so42gen_check(const std::vector<double>& angles, double tol) {
  Report report("so42gen");
  for (const auto& id : kAllGenerators) {
    const auto recomputed = real_bivector(id);
    const auto listed_expr = listed_generator_expr(id);
    const auto listed = evaluate(listed_expr);
    const auto recomputed_form = factorize(recomputed);
    const std::string form = recomputed_form ? to_string(*recomputed_form) : "no Kronecker form";
    const std::string check = "so42gen." + id.name();
    if (listed == recomputed) {
      report.add(check, true, to_string(listed_expr), form, "exact");
    } else {
      report.add(CheckEntry{check, CheckStatus::Discrepancy, to_string(listed_expr), form,
                            "listed Kronecker form differs from Gamma_" +
                                std::string(1, coord_name(id.a)) + " Gamma_" +
                                std::string(1, coord_name(id.b)) +
                                "; recomputation is authoritative"});
    }

    // Exponentials: the realified 4x4 generator, the real exponential of
    // the recomputed product, and of the listed form.
    double worst_rep = 0.0, worst_listed = 0.0;
    for (double phi : angles) {
      const auto r = real_generator(id, phi);
      worst_rep = std::max(worst_rep, max_abs_diff(realify(generator(id, phi)), r));
      worst_listed = std::max(worst_listed, max_abs_diff(exp_real(listed, phi / 2), r));
    }
    const bool homomorphic = realify(bivector(id)) == recomputed;
    report.add(check + ".exp", homomorphic && worst_rep <= tol,
               "realify(M(phi)) = exp(B phi/2) at " + std::to_string(angles.size()) + " angles",
               "max deviation " + format_number(worst_rep),
               "listed form exponential deviates by " + format_number(worst_listed));
  }
  return report;
}

Report restrict_so31_second(double tol) {
  Report report("second_projection");
  std::vector<GeneratorId> printed, images;
  std::string factors;
  for (const auto& id : kAllGenerators) {
    const auto f = factorize(real_bivector(id));
    if (!f) {
      report.add("second_projection.factor." + id.name(), false, "Kronecker form",
                 "no Kronecker form");
      continue;
    }
    const Pauli third = f->f[2];
    if (!factors.empty()) factors += ", ";
    factors += id.name() + ": " + to_string(third);
    if (third == Pauli::I || third == Pauli::X) printed.push_back(id);
    if (third == Pauli::I || third == Pauli::Z) images.push_back(id);
  }

  std::vector<GeneratorId> want(kLorentzGenerators.begin(), kLorentzGenerators.end());
  want.push_back(kDilation);
  const auto want_names = list_names(want);

  if (list_names(printed) == want_names) {
    report.add("second_projection.printed_criterion", true, want_names, list_names(printed),
               "third factor in {I, s_x}");
  } else {
    report.add(CheckEntry{"second_projection.printed_criterion", CheckStatus::Discrepancy,
                          want_names, list_names(printed),
                          "third factor in {I, s_x} does not select the Lorentz generators plus "
                          "Gamma_p Gamma_q; L maps to s_z, not s_x. Third factors: " +
                              factors});
  }
  report.add("second_projection.image_criterion", list_names(images) == want_names, want_names,
             list_names(images), "third factor in {I, s_z}, the images of {1, L}");

  // The survivors close under multiplication within {I, s_z} in the third slot.
  bool closed = true;
  for (const auto& a : images)
    for (const auto& b : images) {
      const auto f = factorize(real_bivector(a) * real_bivector(b));
      if (!f || (f->f[2] != Pauli::I && f->f[2] != Pauli::Z)) closed = false;
    }
  report.add("second_projection.closure", closed, "products keep third factor in {I, s_z}",
             closed ? "closed" : "not closed");

  for (const auto& id : kLorentzGenerators) {
    double worst = 0.0;
    for (double theta : {0.4, -1.2})
      for (double phi : {0.9, 2.3}) {
        const auto d = real_generator(kDilation, theta);
        const auto l = real_generator(id, phi);
        worst = std::max(worst, max_abs_diff(d * l, l * d));
      }
    report.add("second_projection.commute." + id.name(), worst <= tol,
               "[M_pq, M_" + id.name() + "] = 0", "max entry " + format_number(worst));
  }
  return report;
}

Report realrep_suite(double tol) {
  Report report("realrep");
  report.merge(verify_image_tables());
  report.merge(homomorphism_check());
  report.merge(verify_real_clifford());
  report.merge(so42gen_check({0.3, 1.0, -0.7}, tol));
  report.merge(restrict_so31_second(tol));

  // realify of a product of two bivectors equals the product of realifications.
  bool ok = true;
  for (const auto& a : kAllGenerators)
    for (const auto& b : kAllGenerators)
      ok = ok && realify(bivector(a) * bivector(b)) == real_bivector(a) * real_bivector(b);
  report.add("realify.products", ok, "realify(B_a B_b) = realify(B_a) realify(B_b)",
             ok ? "holds for all 225 pairs" : "mismatch");
  return report;
}

}  // namespace splitconf
