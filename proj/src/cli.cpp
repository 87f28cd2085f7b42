#include "gofinsler/cli.hpp"

#include "gofinsler/s7_catalog.hpp"
#include "gofinsler/serialization.hpp"

#include <CLI11.hpp>

#include <cmath>
#include <fstream>
#include <numbers>
#include <optional>
#include <sstream>

namespace gofinsler::cli {

namespace {

struct BadInput : std::runtime_error
{
  using std::runtime_error::runtime_error;
};

struct IoError : std::runtime_error
{
  using std::runtime_error::runtime_error;
};

std::vector<std::string> split(const std::string& text, char sep)
{
  std::vector<std::string> parts;
  std::size_t start = 0;
  for (std::size_t pos; (pos = text.find(sep, start)) != std::string::npos; start = pos + 1)
    parts.push_back(text.substr(start, pos - start));
  parts.push_back(text.substr(start));
  return parts;
}

std::string trim(const std::string& s)
{
  const auto b = s.find_first_not_of(" \t\n\r");
  if (b == std::string::npos)
    return {};
  return s.substr(b, s.find_last_not_of(" \t\n\r") - b + 1);
}

double parse_real(const std::string& token)
{
  const std::string t = trim(token);
  std::size_t used = 0;
  double v = 0.0;
  try {
    v = std::stod(t, &used);
  } catch (const std::exception&) {
    throw BadInput("not a number: '" + t + "'");
  }
  if (used != t.size() || !std::isfinite(v))
    throw BadInput("not a finite number: '" + t + "'");
  return v;
}

// Everything a command needs about the space.
struct Workspace
{
  std::optional<ReductiveSpace> space;
  std::optional<MatrixRealization> realization;
  std::optional<Eigen::MatrixXd> family_a;
};

Workspace load_workspace(const RunConfig& cfg)
{
  Workspace ws;
  if (cfg.space == "s7") {
    auto s7 = s7::build_s7_space();
    ws.space.emplace(std::move(s7.space));
    ws.realization = std::move(s7.realization);
    return ws;
  }
  SpaceDocument doc = [&] {
    try {
      return load_space_file(cfg.space);
    } catch (const std::invalid_argument& ex) {
      throw BadInput(ex.what());
    } catch (const std::runtime_error& ex) {
      throw IoError(ex.what());
    }
  }();
  ws.space.emplace(std::move(doc.space));
  ws.family_a = std::move(doc.family_a);
  return ws;
}

FinslerMetric build_metric(const Workspace& ws, const RunConfig& cfg)
{
  const ReductiveSpace& space = *ws.space;
  Eigen::MatrixXd a;
  if (!cfg.family.empty())
    a = parse_matrix(cfg.family);
  else if (ws.family_a)
    a = *ws.family_a;
  else
    a = Eigen::MatrixXd::Ones(1, space.block_count());

  try {
    MetricFamily family(space, a);
    LFunction L = cfg.l_spec.empty() ? LFunction::sum_of_squares(std::vector<double>(family.k(), 1.0))
                                     : parse_l_spec(cfg.l_spec, family.k());
    return FinslerMetric(std::move(family), std::move(L));
  } catch (const std::invalid_argument& ex) {
    throw BadInput(ex.what());
  }
}

AlgVector parse_y(const ReductiveSpace& space, const std::string& text)
{
  if (text.empty())
    throw BadInput("--y is required");
  const Eigen::VectorXd c = parse_coords(text);
  AlgVector y;
  if (c.size() == space.dim_m())
    y = space.from_m_coords(c);
  else if (c.size() == space.dim())
    y = project_m(space, c);
  else
    throw BadInput("--y needs " + std::to_string(space.dim_m()) + " m-coordinates (or " +
                   std::to_string(space.dim()) + " full coordinates)");
  if (y.isZero(0.0))
    throw BadInput("y must be nonzero");
  return y;
}

/// Writes to --out when given, else to the command's stdout.
class Sink
{
public:
  Sink(const std::string& path, std::ostream& fallback) : m_stream(&fallback)
  {
    if (!path.empty()) {
      m_file.open(path);
      if (!m_file)
        throw IoError("cannot open output file '" + path + "'");
      m_stream = &m_file;
    }
  }
  std::ostream& stream() { return *m_stream; }
  void finish()
  {
    m_stream->flush();
    if (!*m_stream)
      throw IoError("write failed");
  }

private:
  std::ofstream m_file;
  std::ostream* m_stream;
};

std::string format_or(const RunConfig& cfg, const std::string& fallback)
{
  const std::string f = cfg.format.empty() ? fallback : cfg.format;
  if (f != "json" && f != "csv")
    throw BadInput("--format must be json or csv");
  return f;
}

json vec_json(const Eigen::VectorXd& v)
{
  json a = json::array();
  for (double x : v)
    a.push_back(x);
  return a;
}

int cmd_validate_l(const RunConfig& cfg, std::ostream& out)
{
  if (cfg.l_spec.empty())
    throw BadInput("--l is required");
  if (cfg.samples < 1)
    throw BadInput("--samples must be at least 1");
  if (!cfg.format.empty())
    format_or(cfg, "json");
  const LFunction L = parse_l_spec(cfg.l_spec, 2);
  const LValidationReport report = validate_L(L, cfg.samples, cfg.seed);

  static constexpr const char* roman[] = {"i", "ii", "iii", "iv", "v"};
  Sink sink(cfg.out, out);
  auto& os = sink.stream();
  if (cfg.format == "json") {
    json conds = json::array();
    for (std::size_t c = 0; c < report.conditions.size(); ++c) {
      const auto& cond = report.conditions[c];
      conds.push_back({{"condition", roman[c]}, {"name", cond.name}, {"pass", cond.pass}, {"worst", cond.worst},
                       {"witness", vec_json(cond.witness)}});
    }
    os << json{{"l", L.kind_name()}, {"conditions", conds}, {"pass", report.pass}}.dump(2) << '\n';
  } else if (cfg.format == "csv") {
    os << "condition,name,pass,worst\n";
    for (std::size_t c = 0; c < report.conditions.size(); ++c) {
      const auto& cond = report.conditions[c];
      os << roman[c] << ',' << cond.name << ',' << (cond.pass ? 1 : 0) << ',' << format_double(cond.worst) << '\n';
    }
  } else {
    for (std::size_t c = 0; c < report.conditions.size(); ++c) {
      const auto& cond = report.conditions[c];
      os << '(' << roman[c] << ") " << cond.name << ": " << (cond.pass ? "PASS" : "FAIL")
         << "  worst=" << format_double(cond.worst) << '\n';
    }
    os << (report.pass ? "L is admissible" : "L is NOT admissible") << '\n';
  }
  sink.finish();
  return report.pass ? kOk : kCheckFailed;
}

int cmd_graph(const RunConfig& cfg, std::ostream& out)
{
  const Workspace ws = load_workspace(cfg);
  const FinslerMetric metric = build_metric(ws, cfg);
  const AlgVector y = parse_y(*ws.space, cfg.y);
  const double tol = cfg.tol > 0 ? cfg.tol : 1e-9;
  const GeodesicGraphResult result = solve_geodesic_graph(metric, y);

  Sink sink(cfg.out, out);
  if (format_or(cfg, "json") == "json") {
    json doc = result_to_json(*ws.space, result);
    if (cfg.space == "s7") {
      const AlgVector closed = s7::closed_form_xi(y, C_coefficients(metric, y).values);
      doc["closed_form_xi"] = vec_json(ws.space->to_h_coords(closed));
    }
    sink.stream() << doc.dump(2) << '\n';
  } else {
    const ReductiveSpace& S = *ws.space;
    auto& os = sink.stream();
    bool first = true;
    auto cell = [&](const std::string& s) {
      os << (first ? "" : ",") << s;
      first = false;
    };
    for (int i : S.m_indices())
      cell("y_" + S.algebra().labels()[i]);
    for (int i : S.h_indices())
      cell("xi_" + S.algebra().labels()[i]);
    os << ",residual,rank,unique\n";
    first = true;
    for (double v : S.to_m_coords(result.y))
      cell(format_double(v));
    for (double v : S.to_h_coords(result.xi))
      cell(format_double(v));
    os << ',' << format_double(result.residual_norm) << ',' << result.rank << ',' << (result.unique ? 1 : 0) << '\n';
  }
  sink.finish();
  return result.residual_norm < tol ? kOk : kCheckFailed;
}

int cmd_scan(const RunConfig& cfg, std::ostream& out, std::ostream& err)
{
  if (cfg.samples < 1)
    throw BadInput("--samples must be at least 1");
  const Workspace ws = load_workspace(cfg);
  const FinslerMetric metric = build_metric(ws, cfg);
  const double tol = cfg.tol > 0 ? cfg.tol : 1e-9;
  const ScanReport report = go_property_scan(metric, cfg.samples, cfg.seed);
  const bool pass = report.max_residual < tol;

  Sink sink(cfg.out, out);
  if (format_or(cfg, "csv") == "csv") {
    write_scan_csv(sink.stream(), *ws.space, report);
  } else {
    json samples = json::array();
    for (const auto& s : report.samples)
      samples.push_back({{"y", vec_json(ws.space->to_m_coords(s.y))}, {"residual", s.residual}});
    sink.stream() << json{{"max_residual", report.max_residual},
                          {"worst_y", vec_json(ws.space->to_m_coords(report.worst_y))},
                          {"samples", samples}}
                       .dump(2)
                  << '\n';
  }
  sink.finish();
  // Sampled evidence only: a clean scan does not prove the geodesic orbit property.
  err << "scan: " << report.samples.size() << " samples, max residual " << format_double(report.max_residual)
      << (pass ? " (below " : " (ABOVE ") << format_double(tol) << "; sampled evidence, not a proof)\n";
  return pass ? kOk : kCheckFailed;
}

int cmd_verify_s7(const RunConfig& cfg, std::ostream& out)
{
  if (cfg.samples < 1)
    throw BadInput("--samples must be at least 1");
  const double tol = cfg.tol > 0 ? cfg.tol : 1e-8;
  const s7::S7Space s7 = s7::build_s7_space();
  const ReductiveSpace& S = s7.space;
  const LieAlgebra& g = S.algebra();

  json checks = json::array();
  bool all = true;
  auto add = [&](const std::string& name, bool pass, double value, double limit, json witness) {
    checks.push_back({{"name", name}, {"pass", pass}, {"value", value}, {"tol", limit}, {"witness", witness}});
    all = all && pass;
  };

  const JacobiReport jac = check_jacobi(g, kStructuralTol);
  add("jacobi", jac.pass, jac.max_violation, kStructuralTol,
      json::array({g.labels()[jac.witness[0]], g.labels()[jac.witness[1]], g.labels()[jac.witness[2]]}));

  const SpaceReport sv = validate_space(S);
  json failed = json::array();
  for (const auto& c : sv.checks)
    if (!c.pass)
      failed.push_back(c.name);
  add("space_validation", sv.pass, sv.check("alpha_invariance").value, kInvarianceTol, failed);

  const Eigen::MatrixXd W_op = 2.0 * s7::elementary_B(2, 3) - s7::elementary_A(1, 2) + s7::elementary_A(3, 4);
  const std::pair<int, Eigen::MatrixXd> patterns[] = {
    {s7::kH1, s7::elementary_A(1, 2) + s7::elementary_A(3, 4)},
    {s7::kH2, s7::elementary_A(1, 3) - s7::elementary_A(2, 4)},
    {s7::kH3, s7::elementary_A(1, 4) + s7::elementary_A(2, 3)},
    {s7::kW, W_op},
  };
  double pattern_dev = 0.0;
  std::string pattern_worst = "H1";
  for (const auto& [idx, expected] : patterns) {
    const double d = (s7::ad_on_m(S, g.basis_vector(idx)) - expected).cwiseAbs().maxCoeff();
    if (d > pattern_dev) {
      pattern_dev = d;
      pattern_worst = g.labels()[idx];
    }
  }
  add("ad_patterns", pattern_dev == 0.0, pattern_dev, 0.0, pattern_worst);

  std::mt19937_64 rng(cfg.seed);
  double ext_dev = 0.0;
  json ext_witness;
  for (int s = 0; s < 100; ++s) {
    const AlgVector y = s7::random_generic_vector(rng);
    const Eigen::VectorXd C = s7::random_weights(rng);
    const double d = (s7::extended_matrix(y, C) - s7::scaled_assembled_matrix(S, y, C)).cwiseAbs().maxCoeff();
    if (s == 0 || d > ext_dev) {
      ext_dev = d;
      ext_witness = {{"y", vec_json(S.to_m_coords(y))}, {"C", vec_json(C)}};
    }
  }
  add("extended_matrix", ext_dev < kStructuralTol, ext_dev, kStructuralTol, ext_witness);

  const s7::ClosedFormReport cf = s7::verify_closed_form(s7, cfg.samples, cfg.seed + 1, tol, 20);
  add("closed_form_residual", cf.max_residual < tol, cf.max_residual, tol,
      {{"y", vec_json(S.to_m_coords(cf.worst_residual_y))}, {"C", vec_json(cf.worst_residual_C)}});
  add("closed_form_vs_solver", cf.unique_cases > 0 && cf.max_solver_difference < tol, cf.max_solver_difference, tol,
      {{"y", vec_json(S.to_m_coords(cf.worst_difference_y))},
       {"C", vec_json(cf.worst_difference_C)},
       {"unique_cases", cf.unique_cases},
       {"cases", cf.cases}});

  RunConfig metric_cfg = cfg;
  if (metric_cfg.family.empty() && metric_cfg.l_spec.empty()) {
    metric_cfg.family = "1,1,1;2,1,4";
    metric_cfg.l_spec = "sq_sum:1,3";
  }
  Workspace ws;
  ws.space = S;
  const FinslerMetric metric = build_metric(ws, metric_cfg);
  std::normal_distribution<double> normal(0.0, 1.0);
  std::uniform_real_distribution<double> angle(-std::numbers::pi, std::numbers::pi);
  double eq_dev = 0.0;
  json eq_witness;
  int eq_cases = 0;
  for (int s = 0; s < 100; ++s) {
    const AlgVector y = s7::random_generic_vector(rng);
    Eigen::VectorXd hc(4);
    for (auto& v : hc)
      v = normal(rng);
    const AlgVector h = S.from_h_coords(hc.normalized());
    const double t = angle(rng);
    const EquivarianceReport eq = check_equivariance(metric, y, h, t);
    if (!eq.both_unique)
      continue;
    ++eq_cases;
    if (eq_witness.is_null() || eq.deviation > eq_dev) {
      eq_dev = eq.deviation;
      eq_witness = {{"y", vec_json(S.to_m_coords(y))}, {"h", vec_json(hc.normalized())}, {"t", t}};
    }
  }
  add("equivariance", eq_cases > 0 && eq_dev < tol, eq_dev, tol, eq_witness);

  Sink sink(cfg.out, out);
  if (format_or(cfg, "json") == "json") {
    sink.stream() << json{{"checks", checks}, {"pass", all}}.dump(2) << '\n';
  } else {
    sink.stream() << "check,pass,value,tol\n";
    for (const auto& c : checks)
      sink.stream() << c["name"].get<std::string>() << ',' << (c["pass"].get<bool>() ? 1 : 0) << ','
                    << format_double(c["value"].get<double>()) << ',' << format_double(c["tol"].get<double>()) << '\n';
  }
  sink.finish();
  return all ? kOk : kCheckFailed;
}

int cmd_orbit(const RunConfig& cfg, std::ostream& out)
{
  if (cfg.steps < 2)
    throw BadInput("--steps must be at least 2");
  if (!std::isfinite(cfg.t_max))
    throw BadInput("--t-max must be finite");
  const Workspace ws = load_workspace(cfg);
  if (!ws.realization)
    throw BadInput("orbit: the space has no matrix realization (only the builtin s7 does)");
  const FinslerMetric metric = build_metric(ws, cfg);
  const AlgVector y = parse_y(*ws.space, cfg.y);
  const GeodesicGraphResult graph = solve_geodesic_graph(metric, y);

  std::vector<double> ts(cfg.steps);
  for (int s = 0; s < cfg.steps; ++s)
    ts[s] = cfg.t_max * s / (cfg.steps - 1);
  const auto points = orbit_curve(*ws.space, y + graph.xi, ts, *ws.realization);

  constexpr double sphere_tol = 1e-9;
  bool all_on_sphere = true;
  Sink sink(cfg.out, out);
  auto& os = sink.stream();
  os << 't';
  for (Eigen::Index i = 0; i < ws.realization->origin.size(); ++i)
    os << ",p" << i;
  os << ",norm,on_sphere\n";
  for (std::size_t s = 0; s < points.size(); ++s) {
    const double n = points[s].norm();
    const bool ok = std::abs(n - ws.realization->origin.norm()) <= sphere_tol;
    all_on_sphere = all_on_sphere && ok;
    os << format_double(ts[s]);
    for (double v : points[s])
      os << ',' << format_double(v);
    os << ',' << format_double(n) << ',' << (ok ? 1 : 0) << '\n';
  }
  sink.finish();
  return all_on_sphere ? kOk : kCheckFailed;
}

std::string json_to_flag_text(const json& v)
{
  if (v.is_string())
    return v.get<std::string>();
  if (v.is_number())
    return format_double(v.get<double>());
  if (v.is_array()) {
    // [[..],[..]] -> "a,b;c,d", [..] -> "a,b"
    std::string s;
    for (std::size_t i = 0; i < v.size(); ++i) {
      if (i)
        s += v[i].is_array() ? ";" : ",";
      s += json_to_flag_text(v[i]);
    }
    return s;
  }
  if (v.is_object() && v.contains("kind")) {
    std::string s = v.at("kind").get<std::string>();
    if (s == "custom")
      throw BadInput("custom L is only available through the library API");
    if (v.contains("weights"))
      s += ":" + json_to_flag_text(v.at("weights"));
    return s;
  }
  throw BadInput("unsupported config value: " + v.dump());
}

void apply_config(const std::string& path, RunConfig& cfg, const CLI::App& app)
{
  std::ifstream in(path);
  if (!in)
    throw IoError("cannot open config file '" + path + "'");
  json doc;
  try {
    in >> doc;
  } catch (const json::exception& ex) {
    throw BadInput(std::string("config is not valid JSON: ") + ex.what());
  }
  if (!doc.is_object())
    throw BadInput("config must be a JSON object");
  auto given = [&](const std::string& flag) { return app.count(flag) > 0; };
  try {
    for (const auto& [key, v] : doc.items()) {
      if (key == "space" && !given("--space"))
        cfg.space = v.get<std::string>();
      else if (key == "l" && !given("--l"))
        cfg.l_spec = json_to_flag_text(v);
      else if (key == "family" && !given("--family"))
        cfg.family = json_to_flag_text(v);
      else if (key == "y" && !given("--y"))
        cfg.y = json_to_flag_text(v);
      else if (key == "samples" && !given("--samples"))
        cfg.samples = v.get<int>();
      else if (key == "seed" && !given("--seed"))
        cfg.seed = v.get<std::uint64_t>();
      else if (key == "tol" && !given("--tol"))
        cfg.tol = v.get<double>();
      else if (key == "out" && !given("--out"))
        cfg.out = v.get<std::string>();
      else if (key == "format" && !given("--format"))
        cfg.format = v.get<std::string>();
      else if (key == "t_max" && !given("--t-max"))
        cfg.t_max = v.get<double>();
      else if (key == "steps" && !given("--steps"))
        cfg.steps = v.get<int>();
    }
  } catch (const json::exception& ex) {
    throw BadInput(std::string("config: ") + ex.what());
  }
}

} // namespace

LFunction parse_l_spec(const std::string& spec, int arity)
{
  const std::string s = trim(spec);
  const auto colon = s.find(':');
  const std::string kind = trim(s.substr(0, colon));
  std::vector<double> weights;
  if (colon != std::string::npos) {
    for (const auto& tok : split(s.substr(colon + 1), ','))
      weights.push_back(parse_real(tok));
  } else {
    if (arity < 1)
      throw BadInput("L spec needs weights");
    weights.assign(arity, 1.0);
  }
  try {
    if (kind == "sum_sq")
      return LFunction::sum_of_squares(weights);
    if (kind == "sq_sum")
      return LFunction::squared_sum(weights);
    if (kind == "sum")
      return LFunction::linear_sum(weights);
  } catch (const std::invalid_argument& ex) {
    throw BadInput(ex.what());
  }
  if (kind == "custom")
    throw BadInput("custom L is only available through the library API");
  throw BadInput("unknown L kind '" + kind + "' (expected sum_sq, sq_sum or sum)");
}

Eigen::MatrixXd parse_matrix(const std::string& text)
{
  std::vector<std::vector<double>> rows;
  for (const auto& row : split(text, ';')) {
    if (trim(row).empty())
      continue;
    std::vector<double> r;
    for (const auto& tok : split(row, ','))
      r.push_back(parse_real(tok));
    if (!rows.empty() && r.size() != rows[0].size())
      throw BadInput("matrix rows differ in length");
    rows.push_back(std::move(r));
  }
  if (rows.empty())
    throw BadInput("empty matrix");
  Eigen::MatrixXd M(static_cast<Eigen::Index>(rows.size()), static_cast<Eigen::Index>(rows[0].size()));
  for (std::size_t r = 0; r < rows.size(); ++r)
    for (std::size_t c = 0; c < rows[r].size(); ++c)
      M(static_cast<Eigen::Index>(r), static_cast<Eigen::Index>(c)) = rows[r][c];
  return M;
}

Eigen::VectorXd parse_coords(const std::string& text)
{
  std::string t = text;
  for (char& ch : t)
    if (ch == ',' || ch == '[' || ch == ']')
      ch = ' ';
  std::istringstream in(t);
  std::vector<double> vals;
  std::string tok;
  while (in >> tok)
    vals.push_back(parse_real(tok));
  if (vals.empty())
    throw BadInput("no coordinates given");
  return Eigen::Map<Eigen::VectorXd>(vals.data(), static_cast<Eigen::Index>(vals.size()));
}

int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err)
{
  CLI::App app{"Homogeneous geodesics of composite Finsler metrics on reductive homogeneous spaces"};
  app.name("gofinsler");
  app.require_subcommand(1);
  app.fallthrough();

  RunConfig cfg;
  std::string config_path;
  app.add_option("--config", config_path, "JSON config file; flags win on conflict");
  app.add_option("--space", cfg.space, "Space JSON file, or s7 for the builtin sphere");
  app.add_option("--l", cfg.l_spec, "Combiner L as kind:w1,w2,... (sum_sq, sq_sum, sum)");
  app.add_option("--family", cfg.family, "Coefficients a_ji as rows \"a11,a12;a21,a22\"");
  app.add_option("--y", cfg.y, "Point of m as comma-separated m-coordinates");
  app.add_option("--samples", cfg.samples, "Number of samples");
  app.add_option("--seed", cfg.seed, "Sampler seed");
  app.add_option("--tol", cfg.tol, "Pass/fail tolerance");
  app.add_option("--out", cfg.out, "Output path (default stdout)");
  app.add_option("--format", cfg.format, "json or csv");
  app.add_option("--t-max", cfg.t_max, "Orbit end time");
  app.add_option("--steps", cfg.steps, "Orbit points");

  auto* validate = app.add_subcommand("validate-l", "Check conditions (i)-(v) on L");
  auto* graph = app.add_subcommand("graph", "Solve the geodesic graph at one y");
  auto* scan = app.add_subcommand("scan", "Sample the geodesic orbit property");
  auto* verify = app.add_subcommand("verify-s7", "Run the S7 catalog verification suite");
  auto* orbit = app.add_subcommand("orbit", "Emit the homogeneous geodesic through the origin");

  std::vector<std::string> argv_store{"gofinsler"};
  argv_store.insert(argv_store.end(), args.begin(), args.end());
  std::vector<const char*> argv;
  for (const auto& a : argv_store)
    argv.push_back(a.c_str());

  try {
    app.parse(static_cast<int>(argv.size()), argv.data());
  } catch (const CLI::CallForHelp&) {
    out << app.help();
    return kOk;
  } catch (const CLI::ParseError& e) {
    err << "gofinsler: " << e.what() << '\n';
    return kBadInput;
  }

  try {
    if (!config_path.empty())
      apply_config(config_path, cfg, app);
    if (validate->parsed())
      return cmd_validate_l(cfg, out);
    if (graph->parsed())
      return cmd_graph(cfg, out);
    if (scan->parsed())
      return cmd_scan(cfg, out, err);
    if (verify->parsed())
      return cmd_verify_s7(cfg, out);
    if (orbit->parsed())
      return cmd_orbit(cfg, out);
  } catch (const BadInput& e) {
    err << "gofinsler: " << e.what() << '\n';
    return kBadInput;
  } catch (const IoError& e) {
    err << "gofinsler: " << e.what() << '\n';
    return kIoError;
  } catch (const std::invalid_argument& e) {
    err << "gofinsler: " << e.what() << '\n';
    return kBadInput;
  }
  return kBadInput;
}

} // namespace gofinsler::cli
