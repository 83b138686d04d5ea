#include "sweep.hpp"

#include <algorithm>
#include <chrono>
#include <cmath>
#include <cstdio>
#include <fstream>
#include <map>
#include <numbers>
#include <ostream>
#include <sstream>

#include "detcount/arith.hpp"
#include "detcount/asymptotics.hpp"
#include "detcount/casework.hpp"
#include "detcount/diagnostics.hpp"
#include "detcount/divisor_tables.hpp"
#include "detcount/exact_count.hpp"
#include "detcount/parallel.hpp"
#include "detcount/summation.hpp"

namespace detcount::cli {

namespace {

using nlohmann::json;

constexpr double kPiSq = std::numbers::pi * std::numbers::pi;

// ---- output model -------------------------------------------------------

struct Cell {
  enum Kind { kText, kInteger, kReal } kind = kText;
  std::string text;
  double real = 0;
};

Cell text(std::string s) { return {Cell::kText, std::move(s), 0}; }
Cell integer(Count v) { return {Cell::kInteger, detcount::to_string(v), 0}; }
Cell integer(Int v) { return {Cell::kInteger, std::to_string(v), 0}; }
Cell integer(std::size_t v) { return {Cell::kInteger, std::to_string(v), 0}; }
Cell real(double v) { return {Cell::kReal, {}, v}; }
Cell boolean(bool v) { return text(v ? "true" : "false"); }

using Record = std::vector<std::pair<std::string, Cell>>;

struct Artifact {
  std::vector<std::string> columns;
  std::vector<std::vector<Cell>> rows;
  std::vector<Record> fits;
  std::string failure;  // nonempty: an exact identity failed
};

std::string format_real(double v) {
  if (std::isnan(v)) return "nan";
  if (std::isinf(v)) return v > 0 ? "inf" : "-inf";
  char buf[64];
  std::snprintf(buf, sizeof buf, "%.12g", v);
  return buf;
}

std::string csv_cell(const Cell& c) { return c.kind == Cell::kReal ? format_real(c.real) : c.text; }

json json_cell(const Cell& c) {
  switch (c.kind) {
    case Cell::kText: return c.text;
    case Cell::kInteger:
      // counts beyond 64 bits stay strings
      try {
        std::size_t used = 0;
        const long long v = std::stoll(c.text, &used);
        if (used == c.text.size()) return v;
      } catch (const std::exception&) {
      }
      return c.text;
    case Cell::kReal:
      if (std::isfinite(c.real)) return c.real;
      return format_real(c.real);
  }
  return nullptr;
}

void write_csv(const Artifact& a, std::ostream& out) {
  for (std::size_t i = 0; i < a.columns.size(); ++i) out << (i ? "," : "") << a.columns[i];
  out << '\n';
  for (const auto& row : a.rows) {
    for (std::size_t i = 0; i < row.size(); ++i) out << (i ? "," : "") << csv_cell(row[i]);
    out << '\n';
  }
  for (const auto& fit : a.fits) {
    out << "# fit";
    for (const auto& [k, v] : fit) out << ' ' << k << '=' << csv_cell(v);
    out << '\n';
  }
}

void write_json(const Artifact& a, const SweepConfig& config, std::ostream& out) {
  json doc;
  doc["version"] = kVersion;
  doc["config"] = to_json(config);
  // execution details, not parameters of the result
  doc["config"].erase("jobs");
  doc["config"].erase("output");
  doc["rows"] = json::array();
  for (const auto& row : a.rows) {
    json obj = json::object();
    for (std::size_t i = 0; i < row.size(); ++i) obj[a.columns[i]] = json_cell(row[i]);
    doc["rows"].push_back(std::move(obj));
  }
  doc["fits"] = json::array();
  for (const auto& fit : a.fits) {
    json obj = json::object();
    for (const auto& [k, v] : fit) obj[k] = json_cell(v);
    doc["fits"].push_back(std::move(obj));
  }
  out << doc.dump(2) << '\n';
}

// ---- helpers --------------------------------------------------------------

std::vector<Int> sorted_unique(std::vector<Int> v) {
  std::sort(v.begin(), v.end());
  v.erase(std::unique(v.begin(), v.end()), v.end());
  return v;
}

class Stopwatch {
 public:
  double ms() const {
    return std::chrono::duration<double, std::milli>(std::chrono::steady_clock::now() - start_).count();
  }

 private:
  std::chrono::steady_clock::time_point start_ = std::chrono::steady_clock::now();
};

Record loglinear_record(const std::string& kind, const LogLinearFit& f, double expected) {
  return {{"kind", text(kind)},           {"a", real(f.a)},
          {"b", real(f.b)},               {"a_stderr", real(f.a_stderr)},
          {"r_squared", real(f.r_squared)}, {"a_expected", real(expected)},
          {"a_rel_dev", real(std::fabs(f.a / expected - 1))}};
}

struct SweepPoint {
  Int H;
  Int delta;
  Count exact;
  double main;
};

std::vector<Record> sweep_fits(const std::vector<SweepPoint>& points) {
  std::map<Int, std::vector<SweepPoint>> by_delta;
  for (const auto& p : points) by_delta[p.delta].push_back(p);
  std::vector<Record> fits;
  for (const auto& [delta, ps] : by_delta) {
    if (delta == 0) {
      std::vector<std::pair<double, double>> rows;
      for (const auto& p : ps) rows.emplace_back(static_cast<double>(p.H), to_double(p.exact));
      Record r{{"delta", integer(delta)}};
      const auto rec = loglinear_record("h2logh", fit_linear_in_logN(rows), 96.0 / kPiSq);
      r.insert(r.end(), rec.begin(), rec.end());
      r.push_back({"points", integer(static_cast<Int>(rows.size()))});
      fits.push_back(std::move(r));
    } else {
      std::vector<FitRow> rows;
      for (const auto& p : ps) rows.push_back({static_cast<double>(p.H), to_double(p.exact), p.main});
      const ErrorFit f = fit_error_exponent(rows);
      fits.push_back({{"delta", integer(delta)},
                      {"kind", text("error_exponent")},
                      {"exponent", real(f.exponent)},
                      {"log_constant", real(f.log_constant)},
                      {"r_squared", real(f.r_squared)},
                      {"points", integer(f.points.size())}});
    }
  }
  return fits;
}

// ---- modes ----------------------------------------------------------------

Artifact run_sweep(const SweepConfig& c) {
  Artifact a;
  a.columns = {"H", "delta", "exact", "main", "error", "normalized_error", "bound"};
  if (c.timing) a.columns.push_back("wall_time_ms");

  struct Row {
    SweepPoint point;
    AsymptoticReport rep;
    double ms;
  };
  std::vector<Row> rows;
  for (Int H : sorted_unique(c.H)) {
    const ProductCount products(H);
    for (Int delta : sorted_unique(c.delta)) {
      Stopwatch sw;
      const AsymptoticReport rep = report(products, delta, c.epsilon, c.jobs);
      rows.push_back({{H, delta, rep.exact, rep.main}, rep, sw.ms()});
    }
  }
  std::sort(rows.begin(), rows.end(), [](const Row& x, const Row& y) {
    return std::pair(x.point.delta, x.point.H) < std::pair(y.point.delta, y.point.H);
  });
  std::vector<SweepPoint> points;
  for (const auto& r : rows) {
    std::vector<Cell> cells{integer(r.point.H),  integer(r.point.delta), integer(r.rep.exact),
                            real(r.rep.main),    real(r.rep.error),      real(r.rep.normalized),
                            real(r.rep.bound)};
    if (c.timing) cells.push_back(real(r.ms));
    a.rows.push_back(std::move(cells));
    points.push_back(r.point);
  }
  if (c.fit) a.fits = sweep_fits(points);
  return a;
}

Artifact run_tau(const SweepConfig& c) {
  Artifact a;
  const auto Ns = sorted_unique(c.N);
  const auto deltas = sorted_unique(c.delta);
  if (deltas.empty()) {
    a.columns = {"N", "k", "moment", "main", "error"};
    if (c.timing) a.columns.push_back("wall_time_ms");
    std::vector<std::pair<double, double>> fit_rows;
    for (Int N : Ns) {
      Stopwatch sw;
      const TauTable table(N);
      const Count moment = tau_moment(table, c.k, c.jobs);
      const double ms = sw.ms();
      const double n = static_cast<double>(N);
      double main = std::nan("");
      if (c.k == 1) main = n * n;
      if (c.k == 2) main = main_term(MainTermKind::TAU_SQ_MAIN, N);
      std::vector<Cell> cells{integer(N), integer(static_cast<Int>(c.k)), integer(moment), real(main),
                              real(to_double(moment) - main)};
      if (c.timing) cells.push_back(real(ms));
      a.rows.push_back(std::move(cells));
      fit_rows.emplace_back(n, to_double(moment));
    }
    if (Ns.size() >= 2) {
      const double expected = c.k == 1 ? 0.0 : 12.0 / kPiSq;
      const LogLinearFit f = fit_linear_in_logN(fit_rows);
      Record r{{"kind", text("tau_moment")}, {"k", integer(static_cast<Int>(c.k))}, {"a", real(f.a)},
               {"b", real(f.b)}, {"a_stderr", real(f.a_stderr)}, {"r_squared", real(f.r_squared)}};
      if (c.k <= 2) r.emplace_back("a_expected", real(expected));
      a.fits.push_back(std::move(r));
    }
    return a;
  }

  a.columns = {"N", "delta", "shifted_sum", "log_candidate", "nolog_candidate"};
  if (c.timing) a.columns.push_back("wall_time_ms");
  std::map<Int, std::vector<std::pair<double, double>>> by_delta;
  for (Int N : Ns) {
    const TauTable table(N);
    for (Int delta : deltas) {
      Stopwatch sw;
      const Count s = shifted_sum(table, delta, c.jobs);
      const double ms = sw.ms();
      std::vector<Cell> cells{integer(N), integer(delta), integer(s),
                              real(main_term(MainTermKind::SHIFTED_LOG_CANDIDATE, N, delta)),
                              real(main_term(MainTermKind::SHIFTED_NOLOG_CANDIDATE, N, delta))};
      if (c.timing) cells.push_back(real(ms));
      a.rows.push_back(std::move(cells));
      by_delta[delta].emplace_back(static_cast<double>(N), to_double(s));
    }
  }
  // rows by (delta, N)
  std::stable_sort(a.rows.begin(), a.rows.end(), [](const auto& x, const auto& y) {
    return std::stoll(x[1].text) < std::stoll(y[1].text);
  });
  if (Ns.size() >= 3) {
    for (const auto& [delta, rows] : by_delta) {
      const ShiftedDiscrimination d = discriminate_shifted(rows, delta);
      a.fits.push_back({{"kind", text("shifted")},
                        {"delta", integer(delta)},
                        {"slope", real(d.fit.a)},
                        {"slope_stderr", real(d.fit.a_stderr)},
                        {"log_slope", real(d.log_slope)},
                        {"z_log", real(d.z_log)},
                        {"z_nolog", real(d.z_nolog)},
                        {"log_error_exponent", real(d.log_error.exponent)},
                        {"nolog_error_exponent", real(d.nolog_error.exponent)},
                        {"selected", text(to_string(d.selected))}});
    }
  }
  return a;
}

Artifact run_hyperbola(const SweepConfig& c) {
  Artifact a;
  a.columns = {"variant", "index", "K", "q", "U", "V", "X", "Y", "A", "exact", "main", "error", "bound", "normalized"};
  const auto boxes = random_box_queries(c.seed, c.queries);
  const auto curves = random_curve_queries(c.seed + 1, c.queries);
  const auto box = run_box_diagnostics(boxes, c.epsilon, c.jobs);
  const auto curve = run_curve_diagnostics(curves, c.epsilon, c.jobs);
  auto tail = [](const AsymptoticReport& r) {
    return std::vector<Cell>{integer(r.exact), real(r.main), real(r.error), real(r.bound), real(r.normalized)};
  };
  for (std::size_t i = 0; i < boxes.size(); ++i) {
    const auto& q = boxes[i];
    std::vector<Cell> row{text("box"), integer(i), integer(q.K), integer(q.q), real(q.U), real(q.V),
                          real(q.X), real(q.Y), text("")};
    const auto t = tail(box.reports[i]);
    row.insert(row.end(), t.begin(), t.end());
    a.rows.push_back(std::move(row));
  }
  for (std::size_t i = 0; i < curves.size(); ++i) {
    const auto& q = curves[i];
    std::vector<Cell> row{text("curve"), integer(i), integer(q.K), integer(q.q), real(q.U), text(""),
                          real(q.X), text(""), real(std::get<HyperbolicBound>(q.bound).A)};
    const auto t = tail(curve.reports[i]);
    row.insert(row.end(), t.begin(), t.end());
    a.rows.push_back(std::move(row));
  }
  for (const auto& [name, s] : {std::pair{"box", &box}, std::pair{"curve", &curve}})
    a.fits.push_back({{"kind", text("hyperbola")},
                      {"variant", text(name)},
                      {"epsilon", real(c.epsilon)},
                      {"max_normalized", real(s->max_normalized)},
                      {"argmax", integer(s->argmax)}});
  return a;
}

Artifact run_lemmas(const SweepConfig& c) {
  constexpr double kEnvelopeConstant = 25;
  Artifact a;
  a.columns = {"lemma", "variant", "X", "Y", "r", "exact", "main", "error", "envelope", "ratio"};
  std::vector<Int> xs = c.N.empty() ? std::vector<Int>{100, 1000, 10000} : sorted_unique(c.N);
  std::size_t exceedances = 0;
  double max_ratio = 0;
  auto add = [&](const std::string& lemma, Cell variant, Cell X, Cell Y, Cell r, const LemmaReport& rep,
                 bool enveloped) {
    a.rows.push_back({text(lemma), std::move(variant), std::move(X), std::move(Y), std::move(r), real(rep.exact),
                      real(rep.main), real(rep.error), real(rep.envelope), real(rep.ratio)});
    if (!enveloped) return;
    max_ratio = std::max(max_ratio, rep.ratio);
    if (!(rep.ratio <= kEnvelopeConstant)) {
      ++exceedances;
      a.fits.push_back({{"kind", text("exceedance")}, {"lemma", text(lemma)}, {"row", integer(a.rows.size() - 1)},
                        {"ratio", real(rep.ratio)}});
    }
  };

  for (Int X : xs) {
    const double x = static_cast<double>(X);
    for (int variant = 1; variant <= 4; ++variant)
      for (Int r : {1, 2, 5, 10}) {
        if (r > X) continue;
        std::vector<double> ys{x / 10, x / 2};
        if (variant == 1) ys = {0};
        for (double y : ys) {
          if (variant == 3 && !(y > 0 && y <= x)) continue;
          if (variant == 4 && y < static_cast<double>(r)) continue;
          add("xy_sum", integer(static_cast<Int>(variant)), real(x), real(y), integer(r), xy_sum(variant, x, y, r),
              true);
        }
      }
    add("phi_ratio", text(""), real(x), text(""), text(""), phi_ratio_report(X), true);
    add("phi_over_square", text(""), real(x), text(""), text(""), phi_over_square_report(X), true);
    add("gcd_power", text(""), real(x), integer(Int{720}), text(""), gcd_power_report(X, 720, 0.5, 1.0), true);
  }
  const auto deltas = c.delta.empty() ? std::vector<Int>{6, 12, 720, 5040} : sorted_unique(c.delta);
  const auto Hs = c.H.empty() ? std::vector<Int>{10, 100, 1000} : sorted_unique(c.H);
  for (Int d : deltas)
    for (Int H : Hs) {
      const DivisorTail t = divisor_tail(d, H);
      const bool holds = divisor_tail_bound_holds(d, H);
      if (!holds) a.failure = "divisor tail bound fails at delta=" + std::to_string(d) + " H=" + std::to_string(H);
      const double env = static_cast<double>(tau(d)) / static_cast<double>(H);
      add("divisor_tail", text(""), integer(d), integer(H), text(""), make_report(t.partial, t.full, env), false);
    }
  a.fits.push_back({{"kind", text("lemma_envelopes")},
                    {"constant", real(kEnvelopeConstant)},
                    {"max_ratio", real(max_ratio)},
                    {"exceedances", integer(exceedances)}});
  return a;
}

Artifact run_casework(const SweepConfig& c) {
  Artifact a;
  a.columns = {"H", "delta", "family", "region", "direct", "via_hyperbola", "agree"};
  for (Int H : sorted_unique(c.H)) {
    const TauTable table(H);
    for (Int delta : sorted_unique(c.delta)) {
      Count g_total = 0, j_total = 0;
      auto note_failure = [&](const std::string& what) {
        if (a.failure.empty()) a.failure = what + " at H=" + std::to_string(H) + " delta=" + std::to_string(delta);
      };
      for (RegionG r : kRegionsG) {
        const Count direct = region_sum_G(H, delta, r, c.jobs);
        const auto via = region_sum_G_via_hyperbola(H, delta, r);
        const bool agree = via.value == direct && !via.mismatch_c;
        if (!agree) note_failure("G region " + to_string(r) + " hyperbola mismatch");
        g_total += direct;
        a.rows.push_back({integer(H), integer(delta), text("G"), text(to_string(r)), integer(direct),
                          integer(via.value), boolean(agree)});
      }
      for (RegionJ r : kRegionsJ) {
        const Count direct = region_sum_J(H, delta, r, c.jobs);
        const auto via = region_sum_J_via_hyperbola(H, delta, r);
        const bool agree = via.value == direct && !via.mismatch_c;
        if (!agree) note_failure("J region " + to_string(r) + " hyperbola mismatch");
        j_total += direct;
        a.rows.push_back({integer(H), integer(delta), text("J"), text(to_string(r)), integer(direct),
                          integer(via.value), boolean(agree)});
      }
      const Count c111 = sign_class_count(H, delta, {1, 1, 1}, c.jobs);
      const Count c11m = sign_class_count(H, delta, {1, 1, -1}, c.jobs);
      const Count shifted = shifted_sum(table, delta, c.jobs);
      const bool consistent = g_total == c111 && j_total == c11m && c11m == shifted;
      if (!consistent) note_failure("region totals disagree with sign-class counts");
      a.fits.push_back({{"kind", text("casework")},
                        {"H", integer(H)},
                        {"delta", integer(delta)},
                        {"G_total", integer(g_total)},
                        {"sign_111", integer(c111)},
                        {"J_total", integer(j_total)},
                        {"sign_11m1", integer(c11m)},
                        {"shifted_sum", integer(shifted)},
                        {"consistent", boolean(consistent)}});
    }
  }
  return a;
}

std::vector<std::string> split_csv_line(const std::string& line) {
  std::vector<std::string> out;
  std::stringstream ss(line);
  std::string field;
  while (std::getline(ss, field, ',')) out.push_back(field);
  return out;
}

Artifact run_fit(const SweepConfig& c) {
  std::ifstream in(c.input);
  if (!in) throw ArgumentError("cannot open --input file '" + c.input + "'");
  std::string line;
  std::vector<std::string> header;
  while (header.empty() && std::getline(in, line))
    if (!line.empty() && line[0] != '#') header = split_csv_line(line);
  auto column = [&](const std::string& name) {
    const auto it = std::find(header.begin(), header.end(), name);
    if (it == header.end()) throw ArgumentError("--input is missing column '" + name + "'");
    return static_cast<std::size_t>(it - header.begin());
  };
  const std::size_t iH = column("H"), iD = column("delta"), iE = column("exact"), iM = column("main");
  std::vector<SweepPoint> points;
  std::size_t line_no = 1;
  while (std::getline(in, line)) {
    ++line_no;
    if (line.empty() || line[0] == '#') continue;
    const auto f = split_csv_line(line);
    if (f.size() < header.size()) throw ArgumentError("--input line " + std::to_string(line_no) + " is short");
    try {
      points.push_back({std::stoll(f[iH]), std::stoll(f[iD]), static_cast<Count>(std::stoull(f[iE])), std::stod(f[iM])});
    } catch (const std::logic_error&) {
      throw ArgumentError("--input line " + std::to_string(line_no) + " is not numeric");
    }
  }
  if (points.empty()) throw ArgumentError("--input has no data rows");

  Artifact a;
  a.columns = {"delta", "kind", "slope", "intercept", "slope_stderr", "r_squared", "points"};
  for (const auto& rec : sweep_fits(points)) {
    auto get = [&](const std::string& k) -> Cell {
      for (const auto& [key, v] : rec)
        if (key == k) return v;
      return text("");
    };
    const bool exponent = get("kind").text == "error_exponent";
    a.rows.push_back({get("delta"), get("kind"), exponent ? get("exponent") : get("a"),
                      exponent ? get("log_constant") : get("b"), exponent ? text("") : get("a_stderr"),
                      get("r_squared"), get("points")});
  }
  return a;
}

Artifact run_fixtures(const SweepConfig& c) {
  Artifact a;
  a.columns = {"name", "H", "delta", "value"};
  auto add = [&](const std::string& name, Int H, Int delta, Count value) {
    a.rows.push_back({text(name), integer(H), integer(delta), integer(value)});
  };
  for (Int H : {1, 2, 3})
    for (Int delta = 0; delta <= 3; ++delta) add("D2_naive", H, delta, naive_count(H, delta, 2, c.jobs));
  add("D3_naive", 1, 0, naive_count(1, 0, 3, c.jobs));
  add("D3_naive", 1, 1, naive_count(1, 1, 3, c.jobs));
  const ProductCount products(2);
  for (Int m = -4; m <= 4; ++m) add("c2", 2, m, products(m));
  for (Int N : {10, 100}) add("tau_sum", N, 0, tau_moment(TauTable(N), 1, c.jobs));
  add("sign_111", 2, 4, sign_class_count(2, 4, {1, 1, 1}, c.jobs));
  add("zero_entry", 1, 0, zero_entry_count(1, 0));
  add("zero_entry", 1, 2, zero_entry_count(1, 2));
  return a;
}

void require(bool ok, const std::string& message) {
  if (!ok) throw ArgumentError(message);
}

}  // namespace

std::string to_string(Mode mode) {
  switch (mode) {
    case Mode::count: return "count";
    case Mode::sweep: return "sweep";
    case Mode::tau: return "tau";
    case Mode::hyperbola: return "hyperbola";
    case Mode::lemmas: return "lemmas";
    case Mode::casework: return "casework";
    case Mode::fit: return "fit";
    case Mode::fixtures: return "fixtures";
  }
  return "?";
}

Mode mode_from_string(const std::string& name) {
  for (Mode m : {Mode::count, Mode::sweep, Mode::tau, Mode::hyperbola, Mode::lemmas, Mode::casework, Mode::fit,
                 Mode::fixtures})
    if (to_string(m) == name) return m;
  throw ArgumentError("unknown mode '" + name + "'");
}

json to_json(const SweepConfig& c) {
  return {{"mode", to_string(c.mode)}, {"H", c.H},         {"delta", c.delta},     {"N", c.N},
          {"k", c.k},                  {"epsilon", c.epsilon}, {"jobs", c.jobs},   {"seed", c.seed},
          {"queries", c.queries},      {"output", c.output}, {"input", c.input},   {"format", c.format},
          {"timing", c.timing},        {"fit", c.fit}};
}

void apply_json(const json& j, SweepConfig& c) {
  if (!j.is_object()) throw ArgumentError("config must be a JSON object");
  try {
    for (const auto& [key, v] : j.items()) {
      if (key == "mode") c.mode = mode_from_string(v.get<std::string>());
      else if (key == "H") c.H = v.get<std::vector<Int>>();
      else if (key == "delta") c.delta = v.get<std::vector<Int>>();
      else if (key == "N") c.N = v.get<std::vector<Int>>();
      else if (key == "k") c.k = v.get<int>();
      else if (key == "epsilon") c.epsilon = v.get<double>();
      else if (key == "jobs") c.jobs = v.get<unsigned>();
      else if (key == "seed") c.seed = v.get<std::uint64_t>();
      else if (key == "queries") c.queries = v.get<std::size_t>();
      else if (key == "output") c.output = v.get<std::string>();
      else if (key == "input") c.input = v.get<std::string>();
      else if (key == "format") c.format = v.get<std::string>();
      else if (key == "timing") c.timing = v.get<bool>();
      else if (key == "fit") c.fit = v.get<bool>();
      else throw ArgumentError("unknown config key '" + key + "'");
    }
  } catch (const json::exception& e) {
    throw ArgumentError(std::string("bad config value: ") + e.what());
  }
}

void validate(const SweepConfig& c) {
  require(c.format == "csv" || c.format == "json", "--format must be csv or json");
  require(c.jobs >= 1, "--jobs must be >= 1");
  require(c.epsilon >= 0 && std::isfinite(c.epsilon), "--epsilon must be finite and >= 0");
  auto all_at_least = [](const std::vector<Int>& v, Int lo) {
    return std::all_of(v.begin(), v.end(), [lo](Int x) { return x >= lo; });
  };
  switch (c.mode) {
    case Mode::count:
      require(c.H.size() == 1 && c.delta.size() == 1, "count needs exactly one --H and one --delta");
      [[fallthrough]];
    case Mode::sweep:
      require(!c.H.empty(), to_string(c.mode) + " needs --H");
      require(!c.delta.empty(), to_string(c.mode) + " needs --delta");
      require(all_at_least(c.H, 1), "--H values must be >= 1");
      if (c.fit) {
        const auto hs = sorted_unique(c.H);
        for (Int d : c.delta)
          require(hs.size() >= (d == 0 ? 2u : 3u), "--fit needs at least 3 H values (2 for delta 0)");
        if (std::find(c.delta.begin(), c.delta.end(), 0) != c.delta.end())
          require(all_at_least(c.H, 2), "--fit with delta 0 needs H >= 2");
      }
      break;
    case Mode::tau:
      require(!c.N.empty(), "tau needs --N");
      require(all_at_least(c.N, 2), "--N values must be >= 2");
      require(c.k >= 1, "--k must be >= 1");
      require(all_at_least(c.delta, 1), "tau --delta values must be >= 1");
      break;
    case Mode::hyperbola:
      require(c.queries >= 1, "--queries must be >= 1");
      break;
    case Mode::lemmas:
      require(all_at_least(c.N, 10), "lemmas --N values must be >= 10");
      require(all_at_least(c.delta, 1), "lemmas --delta values must be >= 1");
      require(all_at_least(c.H, 1), "lemmas --H values must be >= 1");
      break;
    case Mode::casework:
      require(!c.H.empty() && !c.delta.empty(), "casework needs --H and --delta");
      require(all_at_least(c.H, 1), "--H values must be >= 1");
      require(all_at_least(c.delta, 1), "casework --delta values must be >= 1");
      break;
    case Mode::fit:
      require(!c.input.empty(), "fit needs --input");
      break;
    case Mode::fixtures:
      break;
  }
}

int run(const SweepConfig& config, std::ostream& out, std::ostream& err) {
  try {
    validate(config);
    set_default_jobs(config.jobs);
    Artifact a;
    switch (config.mode) {
      case Mode::count:
      case Mode::sweep: a = run_sweep(config); break;
      case Mode::tau: a = run_tau(config); break;
      case Mode::hyperbola: a = run_hyperbola(config); break;
      case Mode::lemmas: a = run_lemmas(config); break;
      case Mode::casework: a = run_casework(config); break;
      case Mode::fit: a = run_fit(config); break;
      case Mode::fixtures: a = run_fixtures(config); break;
    }
    if (config.format == "json")
      write_json(a, config, out);
    else
      write_csv(a, out);
    if (!a.failure.empty()) {
      err << "invariant violated: " << a.failure << '\n';
      return kInvariant;
    }
    return kOk;
  } catch (const ArgumentError& e) {
    err << "error: " << e.what() << '\n';
    return kUsage;
  } catch (const BudgetError& e) {
    err << "budget exceeded: " << e.what() << '\n';
    return kBudget;
  } catch (const std::exception& e) {
    err << "internal error: " << e.what() << '\n';
    return kInvariant;
  }
}

}  // namespace detcount::cli
