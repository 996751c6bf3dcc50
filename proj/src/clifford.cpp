#include "splitconf/clifford.hpp"

#include "splitconf/format.hpp"

namespace splitconf {

std::optional<CoordIndex> parse_coord(char c) {
  for (auto m : kAllCoords)
    if (coord_name(m) == c) return m;
  return std::nullopt;
}

std::string pair_name(CoordIndex a, CoordIndex b) {
  return std::string{coord_name(a), coord_name(b)};
}

Report verify_clifford() {
  Report report("clifford");
  for (std::size_t i = 0; i < kAllCoords.size(); ++i) {
    for (std::size_t j = i; j < kAllCoords.size(); ++j) {
      const auto a = kAllCoords[i];
      const auto b = kAllCoords[j];
      const auto got = anticommutator(gamma<Rational>(a), gamma<Rational>(b));
      const auto want = Mat4<Rational>::diagonal(ExactScalar(Rational(2 * metric(a, b))));
      report.add("anticommutator." + pair_name(a, b), got == want, format_matrix(want),
                 format_matrix(got), "{Gamma_m, Gamma_n} = 2 g_mn I");
    }
  }
  return report;
}

}  // namespace splitconf
