// Explicit 4x4 generator matrices, transcribed entry by entry from the
// published listing and evaluated at an angle phi.
//
// Entry grammar: a product of factors joined by '*', with an optional
// leading '-'. Factors:
//   0, 1            constants
//   c, s            cos(phi/2), sin(phi/2)
//   ch, sh          cosh(phi/2), sinh(phi/2)
//   K, L, KL, i     units of H' (x) C; the listing writes i for l
//   exp(u), exp(-u) e^{+-u phi/2} for a unit u
// The listing's "K (x) i" is written K*i.

#include <cmath>
#include <stdexcept>
#include <string>
#include <string_view>

#include "splitconf/format.hpp"
#include "splitconf/group.hpp"

namespace splitconf {

namespace {

struct ListedMatrix {
  std::string_view name;
  std::array<std::string_view, 16> entries;  // row-major
};

// clang-format off
constexpr std::array<ListedMatrix, 15> kListing{{
  {"xy", {"exp(i)", "0", "0", "0",
          "0", "exp(-i)", "0", "0",
          "0", "0", "exp(i)", "0",
          "0", "0", "0", "exp(-i)"}},
  {"yz", {"c", "i*s", "0", "0",
          "i*s", "c", "0", "0",
          "0", "0", "c", "i*s",
          "0", "0", "i*s", "c"}},
  {"zx", {"c", "s", "0", "0",
          "-s", "c", "0", "0",
          "0", "0", "c", "s",
          "0", "0", "-s", "c"}},
  {"qx", {"c", "K*s", "0", "0",
          "K*s", "c", "0", "0",
          "0", "0", "c", "-K*s",
          "0", "0", "-K*s", "c"}},
  {"qy", {"c", "-K*i*s", "0", "0",
          "K*i*s", "c", "0", "0",
          "0", "0", "c", "K*i*s",
          "0", "0", "-K*i*s", "c"}},
  {"qz", {"exp(K)", "0", "0", "0",
          "0", "exp(-K)", "0", "0",
          "0", "0", "exp(-K)", "0",
          "0", "0", "0", "exp(K)"}},
  {"tp", {"exp(K)", "0", "0", "0",
          "0", "exp(K)", "0", "0",
          "0", "0", "exp(K)", "0",
          "0", "0", "0", "exp(K)"}},
  {"tx", {"ch", "L*sh", "0", "0",
          "L*sh", "ch", "0", "0",
          "0", "0", "ch", "-L*sh",
          "0", "0", "-L*sh", "ch"}},
  {"ty", {"ch", "-L*i*sh", "0", "0",
          "L*i*sh", "ch", "0", "0",
          "0", "0", "ch", "-L*i*sh",
          "0", "0", "L*i*sh", "ch"}},
  {"tz", {"exp(L)", "0", "0", "0",
          "0", "exp(-L)", "0", "0",
          "0", "0", "exp(-L)", "0",
          "0", "0", "0", "exp(L)"}},
  {"tq", {"exp(KL)", "0", "0", "0",
          "0", "exp(KL)", "0", "0",
          "0", "0", "exp(KL)", "0",
          "0", "0", "0", "exp(KL)"}},
  {"px", {"ch", "KL*sh", "0", "0",
          "KL*sh", "ch", "0", "0",
          "0", "0", "ch", "-KL*sh",
          "0", "0", "-KL*sh", "ch"}},
  {"py", {"ch", "-KL*i*sh", "0", "0",
          "KL*i*sh", "ch", "0", "0",
          "0", "0", "ch", "KL*i*sh",
          "0", "0", "-KL*i*sh", "ch"}},
  {"pz", {"exp(KL)", "0", "0", "0",
          "0", "exp(-KL)", "0", "0",
          "0", "0", "exp(-KL)", "0",
          "0", "0", "0", "exp(KL)"}},
  {"pq", {"exp(-L)", "0", "0", "0",
          "0", "exp(-L)", "0", "0",
          "0", "0", "exp(-L)", "0",
          "0", "0", "0", "exp(-L)"}},
}};
// clang-format on

RealScalar unit_value(std::string_view u) {
  if (u == "K") return RealScalar::unit(SplitUnit::K);
  if (u == "L") return RealScalar::unit(SplitUnit::L);
  if (u == "KL") return RealScalar::unit(SplitUnit::KL);
  if (u == "i") return RealScalar::unit(SplitUnit::One, ComplexUnit::Ell);
  throw std::invalid_argument("listing: unknown unit '" + std::string(u) + "'");
}

// e^{u alpha} for a unit with u^2 = +-1.
RealScalar unit_exp(const RealScalar& u, double alpha) {
  const auto sq = u * u;
  if (approx_equal(sq, RealScalar(1.0))) return RealScalar(std::cosh(alpha)) + std::sinh(alpha) * u;
  if (approx_equal(sq, RealScalar(-1.0))) return RealScalar(std::cos(alpha)) + std::sin(alpha) * u;
  throw std::invalid_argument("listing: exponent unit does not square to +-1");
}

RealScalar evaluate_factor(std::string_view f, double phi) {
  const double h = phi / 2;
  if (f == "0") return RealScalar(0.0);
  if (f == "1") return RealScalar(1.0);
  if (f == "c") return RealScalar(std::cos(h));
  if (f == "s") return RealScalar(std::sin(h));
  if (f == "ch") return RealScalar(std::cosh(h));
  if (f == "sh") return RealScalar(std::sinh(h));
  if (f.starts_with("exp(") && f.ends_with(")")) {
    auto inner = f.substr(4, f.size() - 5);
    double sign = 1.0;
    if (inner.starts_with("-")) {
      sign = -1.0;
      inner.remove_prefix(1);
    }
    return unit_exp(unit_value(inner), sign * h);
  }
  return unit_value(f);
}

RealScalar evaluate_entry(std::string_view text, double phi) {
  double sign = 1.0;
  if (text.starts_with("-")) {
    sign = -1.0;
    text.remove_prefix(1);
  }
  RealScalar value(sign);
  while (!text.empty()) {
    const auto star = text.find('*');
    const auto factor = text.substr(0, star);
    value = value * evaluate_factor(factor, phi);
    if (star == std::string_view::npos) break;
    text.remove_prefix(star + 1);
  }
  return value;
}

const ListedMatrix& listing_for(GeneratorId id) {
  for (const auto& m : kListing)
    if (m.name == id.name()) return m;
  throw std::invalid_argument("listing: no entry for M_" + id.name());
}

bool matches_at_all(const std::vector<double>& angles, double tol, auto&& candidate,
                    GeneratorId id) {
  for (double phi : angles)
    if (!approx_equal(candidate(phi), appendix_matrix(id, phi), tol)) return false;
  return true;
}

}  // namespace

Mat4<double> appendix_matrix(GeneratorId id, double phi) {
  const auto& listed = listing_for(id);
  Mat4<double> m;
  for (std::size_t k = 0; k < 16; ++k) m(k / 4, k % 4) = evaluate_entry(listed.entries[k], phi);
  return m;
}

Report appendix_check(const std::vector<double>& angles, double tol) {
  Report report("appendix");
  for (const auto& id : kAllGenerators) {
    const std::string check = "appendix.M_" + id.name();
    const bool match =
        matches_at_all(angles, tol, [id](double phi) { return generator(id, phi); }, id);
    if (match) {
      report.add(check, true, "listed matrix", "recomputed matrix matches at all sampled angles");
      continue;
    }

    // Look for an explanation: reversed angle or a different generator.
    std::string diagnosis = "no single-generator explanation found";
    if (matches_at_all(angles, tol, [id](double phi) { return generator(id, -phi); }, id)) {
      diagnosis = "listed matrix equals M_" + id.name() + "(-phi)";
    } else {
      for (const auto& other : kAllGenerators) {
        if (other == id) continue;
        if (matches_at_all(angles, tol, [other](double phi) { return generator(other, phi); },
                           id)) {
          diagnosis = "listed matrix equals recomputed M_" + other.name();
          break;
        }
      }
    }

    const double phi = angles.front();
    const auto recomputed = generator(id, phi);
    const auto listed = appendix_matrix(id, phi);
    std::string where;
    for (std::size_t i = 0; i < 4; ++i)
      for (std::size_t j = 0; j < 4; ++j)
        if (!approx_equal(recomputed(i, j), listed(i, j), tol)) {
          if (!where.empty()) where += ",";
          where += "(" + std::to_string(i + 1) + "," + std::to_string(j + 1) + ")";
        }

    report.add(CheckEntry{check, CheckStatus::Discrepancy, format_matrix(listed),
                          format_matrix(recomputed),
                          "phi=" + format_number(phi) + "; differing entries " + where + "; " +
                              diagnosis + "; recomputation is authoritative"});
  }
  return report;
}

}  // namespace splitconf
