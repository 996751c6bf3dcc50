#include "splitconf/group.hpp"

#include <algorithm>
#include <stdexcept>

#include "splitconf/format.hpp"

namespace splitconf {

namespace {

template <std::size_t N>
double max_abs(const Mat<double, N>& m) {
  double r = 0.0;
  for (std::size_t i = 0; i < N; ++i)
    for (std::size_t j = 0; j < N; ++j)
      for (double c : m(i, j).coefficients()) r = std::max(r, std::abs(c));
  return r;
}

void require_distinct(GeneratorId id) {
  if (id.a == id.b) {
    throw std::invalid_argument("generator: indices must differ (M_" + id.name() +
                                " only rescales by a real number)");
  }
}

}  // namespace

std::optional<GeneratorId> parse_generator(std::string_view name) {
  if (name.size() != 2) return std::nullopt;
  const auto a = parse_coord(name[0]);
  const auto b = parse_coord(name[1]);
  if (!a || !b) return std::nullopt;
  const GeneratorId id{*a, *b};
  if (std::find(kAllGenerators.begin(), kAllGenerators.end(), id) == kAllGenerators.end()) {
    return std::nullopt;
  }
  return id;
}

Mat4<Rational> bivector(GeneratorId id) {
  require_distinct(id);
  return gamma<Rational>(id.a) * gamma<Rational>(id.b);
}

bool is_rotation(GeneratorId id) {
  return classify_square(bivector(id)) == SquareClass::MinusIdentity;
}

Mat4<double> generator(GeneratorId id, double theta) {
  return exp_involutory(bivector(id), theta / 2);
}

XAction x_action(GeneratorId id, double theta) {
  require_distinct(id);
  const auto sa = sigma<Rational>(id.a);
  const auto sb = sigma<Rational>(id.b);
  return {exp_involutory(sa * conj_star(sb), theta / 2),
          exp_involutory(conj_star(sa) * sb, -theta / 2)};
}

Mat4<double> act_on_P(const GeneratorWord& word, const Mat4<double>& p, double tol) {
  Mat4<double> cur = p;
  for (const auto& step : word) {
    cur = generator(step.id, step.angle) * cur * generator(step.id, -step.angle);
    try {
      (void)extract_coords(cur, tol * std::max(1.0, max_abs(cur)));
    } catch (const std::domain_error&) {
      throw std::runtime_error("act_on_P: result left span{Gamma} after M_" + step.id.name());
    }
  }
  return cur;
}

Mat2<double> act_on_X(const GeneratorWord& word, const Mat2<double>& x, double tol) {
  Mat2<double> cur = x;
  for (const auto& step : word) {
    const auto f = x_action(step.id, step.angle);
    cur = f.left * cur * f.right;
    if (!is_c_hermitian(cur, tol * std::max(1.0, max_abs(cur)))) {
      throw std::runtime_error("act_on_X: Hermiticity lost after M_" + step.id.name());
    }
  }
  return cur;
}

RealMatrix<double> so6_matrix(const GeneratorWord& word) {
  RealMatrix<double> r(6);
  for (auto n : kAllCoords) {
    const auto image = act_on_P(word, gamma<double>(n));
    const auto col = extract_coords(image, 1e-9 * std::max(1.0, max_abs(image)));
    for (auto m : kAllCoords) r(index_of(m), index_of(n)) = col[m];
  }
  return r;
}

RealMatrix<double> metric_matrix() {
  RealMatrix<double> g(6);
  for (auto m : kAllCoords) g(index_of(m), index_of(m)) = metric(m);
  return g;
}

Report verify_properties() {
  Report report("properties");
  auto g = [](CoordIndex m) { return gamma<Rational>(m); };
  auto real = [](int v) { return ExactScalar(Rational(v)); };

  for (auto a : kAllCoords) {
    const auto sq = g(a) * g(a);
    const auto want = Mat4<Rational>::diagonal(real(metric(a)));
    report.add(std::string("prop1.") + coord_name(a), sq == want, format_matrix(want),
               format_matrix(sq), "Gamma_a Gamma_a = +-I");
  }

  for (auto a : kAllCoords)
    for (auto b : kAllCoords)
      for (auto c : kAllCoords) {
        if (a == b || b == c || a == c) continue;
        const auto ab = g(a) * g(b);
        const auto lhs = ab * g(c);
        const auto rhs = g(c) * ab;
        report.add("prop2." + pair_name(a, b) + coord_name(c), lhs == rhs, format_matrix(rhs),
                   format_matrix(lhs), "(Gamma_a Gamma_b) Gamma_c = Gamma_c (Gamma_a Gamma_b)");
      }

  for (auto a : kAllCoords)
    for (auto b : kAllCoords) {
      if (a == b) continue;
      const auto ab = g(a) * g(b);
      const auto p3 = ab * g(b);
      const auto want3 = Rational(metric(b)) * g(a);
      report.add("prop3." + pair_name(a, b), p3 == want3 && p3 == (g(b) * g(b)) * g(a),
                 format_matrix(want3), format_matrix(p3), "(Gamma_a Gamma_b) Gamma_b = g_bb Gamma_a");

      const auto p4 = ab * g(a);
      const auto want4 = Rational(-metric(a)) * g(b);
      report.add("prop4." + pair_name(a, b), p4 == want4 && p4 == -((g(a) * g(a)) * g(b)),
                 format_matrix(want4), format_matrix(p4),
                 "(Gamma_a Gamma_b) Gamma_a = -g_aa Gamma_b");

      const auto p5 = ab * ab;
      const auto want5 = Mat4<Rational>::diagonal(real(-metric(a) * metric(b)));
      report.add("prop5." + pair_name(a, b), p5 == want5 && p5 == -((g(a) * g(a)) * (g(b) * g(b))),
                 format_matrix(want5), format_matrix(p5),
                 "(Gamma_a Gamma_b)^2 = -Gamma_a^2 Gamma_b^2");
    }
  return report;
}

Mat4<Rational> project_gamma(CoordIndex m) {
  if (m == CoordIndex::p || m == CoordIndex::q) return Mat4<Rational>::zero();
  return gamma<Rational>(m);
}

RealMatrix<double> so31_block(const GeneratorWord& word) {
  const auto r6 = so6_matrix(word);
  RealMatrix<double> r(4);
  for (std::size_t i = 0; i < 4; ++i)
    for (std::size_t j = 0; j < 4; ++j) r(i, j) = r6(i, j);
  return r;
}

RealMatrix<double> minkowski_metric() {
  return RealMatrix<double>{{1, 0, 0, 0}, {0, 1, 0, 0}, {0, 0, 1, 0}, {0, 0, 0, -1}};
}

}  // namespace splitconf
