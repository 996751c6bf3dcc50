#include "cli.hpp"

#include <CLI11.hpp>
#include <charconv>
#include <cstdlib>
#include <json.hpp>
#include <optional>
#include <ostream>
#include <sstream>

#include "splitconf/conformal.hpp"
#include "splitconf/format.hpp"
#include "splitconf/realrep.hpp"
#include "splitconf/suites.hpp"

namespace splitconf::cli {

namespace {

using json = nlohmann::ordered_json;

struct UsageError : std::runtime_error {
  using std::runtime_error::runtime_error;
};

double clean(double v) { return v == 0.0 ? 0.0 : v; }

std::string trim(std::string_view s) {
  while (!s.empty() && std::isspace(static_cast<unsigned char>(s.front()))) s.remove_prefix(1);
  while (!s.empty() && std::isspace(static_cast<unsigned char>(s.back()))) s.remove_suffix(1);
  return std::string(s);
}

std::vector<std::string> split(std::string_view s, char sep) {
  std::vector<std::string> out;
  std::size_t start = 0;
  while (true) {
    const auto pos = s.find(sep, start);
    out.push_back(trim(s.substr(start, pos - start)));
    if (pos == std::string_view::npos) break;
    start = pos + 1;
  }
  return out;
}

double parse_number(const std::string& text, const std::string& what) {
  double v = 0.0;
  const char* first = text.data();
  const char* last = first + text.size();
  if (!text.empty() && *first == '+') ++first;
  const auto [ptr, ec] = std::from_chars(first, last, v);
  if (text.empty() || ec != std::errc() || ptr != last || !std::isfinite(v)) {
    throw UsageError(what + ": '" + text + "' is not a number");
  }
  return v;
}

std::vector<ConformalStep> parse_word(const std::string& text) {
  std::vector<ConformalStep> word;
  if (trim(text).empty()) return word;
  for (const auto& item : split(text, ',')) {
    const auto colon = item.find(':');
    if (colon == std::string::npos) throw UsageError("--word: expected name:angle, got '" + item + "'");
    const auto name = trim(item.substr(0, colon));
    const double angle = parse_number(trim(item.substr(colon + 1)), "--word angle");
    const auto step = parse_step(name, angle);
    if (!step) throw UsageError("--word: unknown generator '" + name + "'");
    word.push_back(*step);
  }
  return word;
}

std::string csv_field(const std::string& s) {
  if (s.find_first_of(",\"\n") == std::string::npos) return s;
  std::string out = "\"";
  for (char c : s) {
    if (c == '"') out += '"';
    out += c;
  }
  return out + "\"";
}

// --- verify ------------------------------------------------------------------

json summary_json(std::size_t pass, std::size_t fail, std::size_t disc) {
  return json{{"pass", pass}, {"fail", fail}, {"discrepancy-documented", disc}};
}

int cmd_verify(const std::vector<std::string>& requested, const RunConfig& config,
               const std::string& format, std::ostream& out) {
  std::vector<std::string> names;
  for (const auto& r : requested)
    for (const auto& n : split(r, ','))
      if (!n.empty()) names.push_back(n);
  if (names.empty()) names = suite_names();
  for (const auto& n : names)
    if (!is_suite_name(n)) throw UsageError("--suites: unknown suite '" + n + "'");

  const auto reports = run_suites(names, config);
  std::size_t pass = 0, fail = 0, disc = 0;
  for (const auto& r : reports) {
    pass += r.count(CheckStatus::Pass);
    fail += r.count(CheckStatus::Fail);
    disc += r.count(CheckStatus::Discrepancy);
  }
  const int code = fail > 0 ? kCheckFailed : kOk;

  if (format == "json") {
    json doc;
    doc["config"] = {{"tolerance", config.tolerance}, {"seed", config.seed},
                     {"samples", config.samples}};
    doc["suites"] = json::array();
    for (const auto& r : reports) {
      json s;
      s["suite"] = r.suite();
      s["summary"] = summary_json(r.count(CheckStatus::Pass), r.count(CheckStatus::Fail),
                                  r.count(CheckStatus::Discrepancy));
      s["entries"] = json::array();
      for (const auto& e : r.entries())
        s["entries"].push_back({{"id", e.id},
                                {"status", std::string(to_string(e.status))},
                                {"expected", e.expected},
                                {"actual", e.actual},
                                {"context", e.context}});
      doc["suites"].push_back(std::move(s));
    }
    doc["summary"] = summary_json(pass, fail, disc);
    doc["exit_code"] = code;
    out << doc.dump(2) << "\n";
  } else if (format == "csv") {
    out << "suite,id,status,expected,actual,context\n";
    for (const auto& r : reports)
      for (const auto& e : r.entries())
        out << csv_field(r.suite()) << ',' << csv_field(e.id) << ','
            << csv_field(std::string(to_string(e.status))) << ',' << csv_field(e.expected) << ','
            << csv_field(e.actual) << ',' << csv_field(e.context) << '\n';
  } else {
    for (const auto& r : reports) {
      out << "== " << r.suite() << ": " << r.count(CheckStatus::Pass) << " pass, "
          << r.count(CheckStatus::Fail) << " fail, " << r.count(CheckStatus::Discrepancy)
          << " discrepancy-documented\n";
      for (const auto& e : r.entries()) {
        std::string status(to_string(e.status));
        status.resize(24, ' ');
        out << status << e.id << "\n";
        if (e.status != CheckStatus::Pass) {
          out << "    expected: " << e.expected << "\n"
              << "    actual:   " << e.actual << "\n";
          if (!e.context.empty()) out << "    context:  " << e.context << "\n";
        }
      }
    }
    out << "overall: " << pass << " pass, " << fail << " fail, " << disc
        << " discrepancy-documented (seed=" << config.seed << ", samples=" << config.samples
        << ", tolerance=" << format_number(config.tolerance) << ")\n";
  }
  return code;
}

// --- transform ---------------------------------------------------------------

struct TransformRow {
  std::string name;
  double angle = 0.0;
  Vector6<double> v;
  std::optional<MinkowskiPoint> point;  // set for Minkowski input when finite
};

json coords_json(const Vector6<double>& v) {
  json j;
  for (auto m : kAllCoords) j[std::string(1, coord_name(m))] = clean(v[m]);
  return j;
}

json point_json(const MinkowskiPoint& q) {
  return json{{"T", clean(q.T)}, {"X", clean(q.Xc)}, {"Y", clean(q.Y)}, {"Z", clean(q.Z)}};
}

std::string coords_text(const Vector6<double>& v) {
  std::string out = "(";
  for (std::size_t i = 0; i < 6; ++i) {
    if (i) out += ", ";
    out += format_number(v.c[i]);
  }
  return out + ")";
}

std::string point_text(const MinkowskiPoint& q) {
  return "(" + format_number(q.T) + ", " + format_number(q.Xc) + ", " + format_number(q.Y) +
         ", " + format_number(q.Z) + ")";
}

std::optional<MinkowskiPoint> finite_point(const Vector6<double>& v) {
  const double s = v[CoordIndex::p] + v[CoordIndex::q];
  double size = 0.0;
  for (double c : v.c) size = std::max(size, std::abs(c));
  if (std::abs(s) <= 1e-12 * std::max(1.0, size)) return std::nullopt;
  return MinkowskiPoint{v[CoordIndex::t] / s, v[CoordIndex::x] / s, v[CoordIndex::y] / s,
                        v[CoordIndex::z] / s};
}

int cmd_transform(const std::string& word_text, const std::string& point_text_in,
                  const std::string& format, std::ostream& out) {
  const auto word = parse_word(word_text);
  std::vector<double> comps;
  for (const auto& c : split(point_text_in, ',')) comps.push_back(parse_number(c, "--point"));
  if (comps.size() != 4 && comps.size() != 6) {
    throw UsageError("--point: expected 4 components (T,X,Y,Z) or 6 (x,y,z,t,p,q)");
  }
  const bool minkowski = comps.size() == 4;

  std::vector<TransformRow> rows;
  Vector6<double> v;
  std::optional<MinkowskiPoint> input_point;
  if (minkowski) {
    input_point = MinkowskiPoint{comps[0], comps[1], comps[2], comps[3]};
    v = embed_point(*input_point).coords();
  } else {
    for (std::size_t i = 0; i < 6; ++i) v.c[i] = comps[i];
  }
  rows.push_back({"input", 0.0, v, input_point});
  for (const auto& step : word) {
    v = apply_step(step, v);
    rows.push_back({step.name(), step.angle, v, minkowski ? finite_point(v) : std::nullopt});
  }
  const bool at_infinity = minkowski && !rows.back().point;
  const std::string status = at_infinity ? "point-at-infinity" : "finite";

  if (format == "json") {
    json doc;
    doc["input"] = minkowski ? point_json(*input_point) : coords_json(rows.front().v);
    doc["input_kind"] = minkowski ? "minkowski" : "vector6";
    doc["steps"] = json::array();
    for (std::size_t i = 1; i < rows.size(); ++i) {
      json s{{"name", rows[i].name}, {"angle", clean(rows[i].angle)}, {"coords", coords_json(rows[i].v)}};
      if (minkowski) {
        s["point"] = rows[i].point ? point_json(*rows[i].point) : json(nullptr);
        s["status"] = rows[i].point ? "finite" : "point-at-infinity";
      }
      doc["steps"].push_back(std::move(s));
    }
    doc["final"] = {{"coords", coords_json(rows.back().v)}};
    if (minkowski) {
      doc["final"]["point"] = rows.back().point ? point_json(*rows.back().point) : json(nullptr);
      doc["status"] = status;
    }
    out << doc.dump(2) << "\n";
  } else if (format == "csv") {
    out << "step,name,angle,x,y,z,t,p,q,T,X,Y,Z,status\n";
    for (std::size_t i = 0; i < rows.size(); ++i) {
      const auto& r = rows[i];
      out << i << ',' << r.name << ',' << format_number(r.angle);
      for (double c : r.v.c) out << ',' << format_number(c);
      if (r.point) {
        out << ',' << format_number(r.point->T) << ',' << format_number(r.point->Xc) << ','
            << format_number(r.point->Y) << ',' << format_number(r.point->Z) << ",finite\n";
      } else {
        out << ",,,,," << (minkowski ? "point-at-infinity" : "") << '\n';
      }
    }
  } else {
    if (minkowski) out << "input (T, X, Y, Z) = " << point_text(*input_point) << "\n";
    out << "input (x, y, z, t, p, q) = " << coords_text(rows.front().v) << "\n";
    for (std::size_t i = 1; i < rows.size(); ++i) {
      const auto& r = rows[i];
      out << "step " << i << " " << r.name << ":" << format_number(r.angle)
          << " -> (x, y, z, t, p, q) = " << coords_text(r.v);
      if (minkowski) {
        out << "; (T, X, Y, Z) = " << (r.point ? point_text(*r.point) : "point at infinity");
      }
      out << "\n";
    }
    if (minkowski) {
      out << "final (T, X, Y, Z) = "
          << (rows.back().point ? point_text(*rows.back().point) : "point at infinity") << "\n";
    } else {
      out << "final (x, y, z, t, p, q) = " << coords_text(rows.back().v) << "\n";
    }
  }
  return kOk;
}

// --- show --------------------------------------------------------------------

template <ScalarType T, std::size_t N>
void emit_matrix(const Mat<T, N>& m, const std::string& format, json meta, std::ostream& out) {
  const auto& labels = TensorScalar<T>::kLabels;
  if (format == "json") {
    meta["size"] = N;
    meta["entries"] = json::array();
    for (std::size_t i = 0; i < N; ++i) {
      json row = json::array();
      for (std::size_t j = 0; j < N; ++j) {
        json e;
        for (std::size_t k = 0; k < labels.size(); ++k)
          e[std::string(labels[k])] = clean(ScalarTraits<T>::to_double(m(i, j).coefficients()[k]));
        row.push_back(std::move(e));
      }
      meta["entries"].push_back(std::move(row));
    }
    out << meta.dump(2) << "\n";
  } else if (format == "csv") {
    out << "row,col";
    for (const auto& l : labels) out << ',' << l;
    out << '\n';
    for (std::size_t i = 0; i < N; ++i)
      for (std::size_t j = 0; j < N; ++j) {
        out << i << ',' << j;
        for (const auto& c : m(i, j).coefficients())
          out << ',' << format_number(ScalarTraits<T>::to_double(c));
        out << '\n';
      }
  } else {
    std::vector<std::string> cells;
    std::size_t width = 0;
    for (std::size_t i = 0; i < N; ++i)
      for (std::size_t j = 0; j < N; ++j) {
        cells.push_back(format_symbolic(m(i, j)));
        width = std::max(width, cells.back().size());
      }
    for (std::size_t i = 0; i < N; ++i) {
      for (std::size_t j = 0; j < N; ++j) {
        auto c = cells[i * N + j];
        if (j + 1 < N) c.resize(width + 2, ' ');
        out << c;
      }
      out << "\n";
    }
  }
}

template <ScalarType T>
void emit_real(const RealMatrix<T>& m, const std::string& format, json meta, std::ostream& out) {
  const std::size_t n = m.size();
  if (format == "json") {
    meta["size"] = n;
    meta["entries"] = json::array();
    for (std::size_t i = 0; i < n; ++i) {
      json row = json::array();
      for (std::size_t j = 0; j < n; ++j) row.push_back(clean(ScalarTraits<T>::to_double(m(i, j))));
      meta["entries"].push_back(std::move(row));
    }
    out << meta.dump(2) << "\n";
    return;
  }
  std::vector<std::string> cells;
  std::size_t width = 0;
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = 0; j < n; ++j) {
      cells.push_back(format_number(ScalarTraits<T>::to_double(m(i, j))));
      width = std::max(width, cells.back().size());
    }
  for (std::size_t i = 0; i < n; ++i) {
    for (std::size_t j = 0; j < n; ++j) {
      const auto& c = cells[i * n + j];
      if (format == "csv") {
        out << (j ? "," : "") << c;
      } else {
        out << (j ? " " : "") << std::string(width - c.size(), ' ') << c;
      }
    }
    out << "\n";
  }
}

int cmd_show(const std::string& object, const std::string& id, std::optional<double> angle,
             const std::string& format, std::ostream& out) {
  json meta{{"object", object}, {"id", id}};
  meta["angle"] = angle ? json(*angle) : json(nullptr);

  if (object == "sigma" || object == "gamma" || object == "real-gamma") {
    const auto m = id.size() == 1 ? parse_coord(id[0]) : std::nullopt;
    if (!m) throw UsageError("show " + object + ": id must be one of x, y, z, t, p, q");
    if (angle) throw UsageError("show " + object + ": --angle does not apply");
    if (object == "sigma") emit_matrix(sigma<Rational>(*m), format, meta, out);
    if (object == "gamma") emit_matrix(gamma<Rational>(*m), format, meta, out);
    if (object == "real-gamma") emit_real(real_gamma(*m), format, meta, out);
    return kOk;
  }
  const auto g = parse_generator(id);
  if (!g) throw UsageError("show " + object + ": unknown generator '" + id + "'");
  if (object == "generator") {
    if (angle) {
      emit_matrix(generator(*g, *angle), format, meta, out);
    } else {
      emit_matrix(bivector(*g), format, meta, out);
    }
  } else {
    if (angle) {
      emit_real(real_generator(*g, *angle), format, meta, out);
    } else {
      emit_real(real_bivector(*g), format, meta, out);
    }
  }
  return kOk;
}

}  // namespace

int run_cli(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
  CLI::App app{"Split-quaternion SO(4,2) toolkit: verification suites, transforms, matrix dumps",
               "splitconf"};
  app.require_subcommand(1);

  std::string format = "text";
  if (const char* env = std::getenv("SPLITCONF_FORMAT"); env && *env) {
    format = env;
    if (format != "json" && format != "text" && format != "csv") {
      err << "error: SPLITCONF_FORMAT must be json, text or csv, not '" << format << "'\n";
      return kUsage;
    }
  }
  RunConfig config;
  app.add_option("--format", format, "Output format (default from SPLITCONF_FORMAT, else text)")
      ->check(CLI::IsMember({"json", "text", "csv"}));
  app.add_option("--tolerance", config.tolerance, "Numerical tolerance")
      ->check(CLI::PositiveNumber);
  app.add_option("--seed", config.seed, "Seed for randomized suites");
  app.add_option("--samples", config.samples, "Samples per randomized check")
      ->check(CLI::Range(1, 100000000));

  auto* verify = app.add_subcommand("verify", "Run verification suites");
  std::vector<std::string> suites;
  verify->add_option("--suites", suites,
                     "Comma-separated subset of clifford, properties, group, conformal, realrep, "
                     "appendix (default: all)");
  verify->fallthrough();

  auto* transform = app.add_subcommand("transform", "Apply a generator word to a point");
  std::string word, point;
  transform->add_option("--word", word, "Comma-separated name:angle pairs, e.g. zx:0.5,ax:2");
  transform->add_option("--point", point, "T,X,Y,Z or x,y,z,t,p,q")->required();
  transform->fallthrough();

  auto* show = app.add_subcommand("show", "Print a matrix");
  std::string object, id;
  std::optional<double> angle;
  show->add_option("object", object, "sigma, gamma, generator, real-gamma or real-generator")
      ->required()
      ->check(CLI::IsMember({"sigma", "gamma", "generator", "real-gamma", "real-generator"}));
  show->add_option("id", id, "Coordinate letter or generator name")->required();
  show->add_option("--angle", angle, "Angle for generator and real-generator");
  show->fallthrough();

  std::vector<std::string> argv_store{"splitconf"};
  argv_store.insert(argv_store.end(), args.begin(), args.end());
  std::vector<char*> argv;
  for (auto& a : argv_store) argv.push_back(a.data());

  try {
    app.parse(static_cast<int>(argv.size()), argv.data());
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e, out, err);
    return code == 0 ? kOk : kUsage;
  }

  try {
    if (*verify) return cmd_verify(suites, config, format, out);
    if (*transform) return cmd_transform(word, point, format, out);
    return cmd_show(object, id, angle, format, out);
  } catch (const UsageError& e) {
    err << "error: " << e.what() << "\n";
    return kUsage;
  } catch (const std::exception& e) {
    err << "error: " << e.what() << "\n";
    return kCheckFailed;
  }
}

}  // namespace splitconf::cli
