#include "splitconf/suites.hpp"

#include <algorithm>
#include <cmath>
#include <future>
#include <random>
#include <stdexcept>

#include "splitconf/conformal.hpp"
#include "splitconf/format.hpp"
#include "splitconf/group.hpp"
#include "splitconf/realrep.hpp"

namespace splitconf {

namespace {

double mat_size(const Mat2<double>& m) {
  double r = 0.0;
  for (std::size_t i = 0; i < 2; ++i)
    for (std::size_t j = 0; j < 2; ++j)
      for (double c : m(i, j).coefficients()) r = std::max(r, std::abs(c));
  return r;
}

std::string context(const RunConfig& c) {
  return "seed=" + std::to_string(c.seed) + " samples=" + std::to_string(c.samples);
}

}  // namespace

const std::vector<std::string>& suite_names() {
  static const std::vector<std::string> names{"clifford", "properties", "group",
                                              "conformal", "realrep", "appendix"};
  return names;
}

bool is_suite_name(std::string_view name) {
  const auto& n = suite_names();
  return std::find(n.begin(), n.end(), name) != n.end();
}

Report group_suite(const RunConfig& config) {
  Report report("group");
  std::mt19937_64 rng(config.seed);
  std::uniform_real_distribution<double> coord(-2.0, 2.0);
  std::uniform_real_distribution<double> angle(-1.0, 1.0);
  std::uniform_int_distribution<int> length(0, 5);
  std::uniform_int_distribution<std::size_t> pick(0, kAllGenerators.size() - 1);

  const auto g = metric_matrix();
  double worst_q = 0.0, worst_g = 0.0, worst_det = 0.0, worst_x = 0.0;
  int not_hermitian = 0;
  for (int n = 0; n < config.samples; ++n) {
    Vector6<double> v;
    for (auto& c : v.c) c = coord(rng);
    GeneratorWord w(static_cast<std::size_t>(length(rng)));
    for (auto& e : w) e = {kAllGenerators[pick(rng)], angle(rng)};

    const auto x = build_X(v);
    const auto x_img = act_on_X(w, x);
    const double s = quadratic_form(x);
    const double s_img = quadratic_form(x_img, 1e-9 * std::max(1.0, mat_size(x_img) * mat_size(x_img)));
    worst_q = std::max(worst_q, std::abs(s_img - s) / std::max(1.0, std::abs(s)));

    const auto r = so6_matrix(w);
    worst_g = std::max(worst_g, max_abs_diff(transpose(r) * g * r, g));
    worst_det = std::max(worst_det, std::abs(determinant(r) - 1.0));

    const auto p_img = act_on_P(w, build_P(v));
    worst_x = std::max(worst_x, max_abs_diff(x_img, upper_right_block(p_img)));
    worst_x = std::max(worst_x, max_abs_diff(x_img, build_X(extract_coords(p_img, 1e-9))));
    if (!is_c_hermitian(x_img, config.tolerance * std::max(1.0, mat_size(x_img)))) ++not_hermitian;
  }
  const auto ctx = context(config);
  report.add("invariance.quadratic_form", worst_q <= 1e-9, "relative change <= 1e-9",
             "max relative change " + format_number(worst_q), ctx);
  report.add("invariance.metric", worst_g <= config.tolerance, "R^T G R = G",
             "max deviation " + format_number(worst_g), ctx);
  report.add("invariance.det", worst_det <= config.tolerance, "det R = 1",
             "max deviation " + format_number(worst_det), ctx);
  report.add("equivalence.x_action", worst_x <= config.tolerance,
             "act_on_X = upper-right block of act_on_P", "max deviation " + format_number(worst_x),
             ctx);
  report.add("equivalence.hermitian", not_hermitian == 0, "X stays C-Hermitian",
             std::to_string(not_hermitian) + " samples lost Hermiticity", ctx);

  // Each recomputed generator at the cross-check angles.
  for (const auto& id : kAllGenerators) {
    double worst = 0.0;
    for (double phi : {0.3, 1.0, -0.7}) {
      const auto r = so6_matrix({{id, phi}});
      worst = std::max({worst, max_abs_diff(transpose(r) * g * r, g),
                        std::abs(determinant(r) - 1.0)});
      Vector6<double> v;
      for (std::size_t i = 0; i < 6; ++i) v.c[i] = 1.0 + 0.5 * static_cast<double>(i);
      const auto p_img = act_on_P({{id, phi}}, build_P(v));
      worst = std::max(worst, max_abs_diff(act_on_X({{id, phi}}, build_X(v)),
                                           upper_right_block(p_img)));
    }
    report.add("generator." + id.name(), worst <= config.tolerance,
               "metric, det and 2x2/4x4 agreement at 3 angles",
               "max deviation " + format_number(worst));
  }

  // SO(3,1) projection.
  report.add("projection.pi_gamma_p", project_gamma(CoordIndex::p).is_zero(), "0",
             format_matrix(project_gamma(CoordIndex::p)));
  report.add("projection.pi_gamma_q", project_gamma(CoordIndex::q).is_zero(), "0",
             format_matrix(project_gamma(CoordIndex::q)));
  const auto eta = minkowski_metric();
  for (const auto& id : kLorentzGenerators) {
    double worst_l = 0.0, worst_c = 0.0;
    for (double phi : {0.3, 1.0, -0.7}) {
      const auto r6 = so6_matrix({{id, phi}});
      for (std::size_t i = 4; i < 6; ++i)
        for (std::size_t j = 0; j < 6; ++j)
          worst_l = std::max(worst_l, std::abs(r6(i, j) - (i == j ? 1.0 : 0.0)));
      const auto l = so31_block({{id, phi}});
      worst_l = std::max(worst_l, max_abs_diff(transpose(l) * eta * l, eta));
      for (double theta : {0.5, -1.1}) {
        const auto m = generator(id, phi);
        const auto d = generator(kDilation, theta);
        worst_c = std::max(worst_c, max_abs_diff(m * d, d * m));
      }
    }
    report.add("projection.lorentz." + id.name(), worst_l <= config.tolerance,
               "L^T eta L = eta with p, q fixed", "max deviation " + format_number(worst_l));
    report.add("projection.dilation_commutes." + id.name(), worst_c <= config.tolerance,
               "[M_pq, M_" + id.name() + "] = 0", "max entry " + format_number(worst_c));
  }
  return report;
}

Report run_suite(std::string_view name, const RunConfig& config) {
  if (name == "clifford") return verify_clifford();
  if (name == "properties") return verify_properties();
  if (name == "group") return group_suite(config);
  if (name == "conformal") {
    ConformalSuiteConfig c;
    c.tolerance = config.tolerance;
    c.seed = config.seed;
    c.samples = config.samples;
    return conformal_suite(c);
  }
  if (name == "realrep") return realrep_suite(config.tolerance);
  if (name == "appendix") return appendix_check({0.3, 1.0, -0.7}, config.tolerance);
  throw std::invalid_argument("unknown suite '" + std::string(name) + "'");
}

std::vector<Report> run_suites(const std::vector<std::string>& names, const RunConfig& config) {
  for (const auto& n : names)
    if (!is_suite_name(n)) throw std::invalid_argument("unknown suite '" + n + "'");
  std::vector<std::future<Report>> jobs;
  for (const auto& n : suite_names()) {
    if (std::find(names.begin(), names.end(), n) == names.end()) continue;
    jobs.push_back(std::async(std::launch::async, [n, config] { return run_suite(n, config); }));
  }
  std::vector<Report> out;
  for (auto& j : jobs) out.push_back(j.get());
  return out;
}

}  // namespace splitconf
