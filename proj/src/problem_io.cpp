#include "bjorling/problem_io.hpp"

#include <cmath>
#include <cstdio>
#include <fstream>
#include <set>
#include <sstream>

namespace bjorling {

namespace {

constexpr int kSeriesExtraDegree = 30;

[[noreturn]] void parse_error(const std::string& where, const std::string& what) {
  fail(ErrorCode::Parse, where + ": " + what);
}

void reject_unknown(const Json& obj, const std::set<std::string>& known, const std::string& where) {
  if (!obj.is_object()) parse_error(where, "expected an object");
  for (const auto& [key, value] : obj.items()) {
    if (known.count(key) == 0) parse_error(where, "unknown key '" + key + "'");
  }
}

Expr parse_expr_at(const Json& j, const std::string& where) {
  if (!j.is_string()) parse_error(where, "expected an expression string");
  try {
    return Expr::parse(j.get<std::string>());
  } catch (const Error& e) {
    parse_error(where, e.what());
  }
}

double real_of(const Json& j, const ExprScope& scope, const std::string& where) {
  if (j.is_number()) return j.get<double>();
  if (j.is_string()) {
    const Expr e = parse_expr_at(j, where);
    try {
      return e.value(scope);
    } catch (const Error& err) {
      parse_error(where, err.what());
    }
  }
  parse_error(where, "expected a number or an expression");
}

int int_of(const Json& j, const std::string& where) {
  if (!j.is_number_integer()) parse_error(where, "expected an integer");
  return j.get<int>();
}

void require_vars(const Expr& e, const ExprScope& scope, const std::set<std::string>& allowed,
                  const std::string& where) {
  for (const auto& name : e.free_variables(scope)) {
    if (allowed.count(name) == 0) parse_error(where, "unknown name '" + name + "'");
  }
}

/// A coefficient list (polynomial in u - u0) or an expression in u.
USeries jet_of(const Json& j, const ExprScope& scope, double center, int degree, const std::string& where) {
  if (j.is_array()) {
    if (j.empty()) parse_error(where, "empty coefficient list");
    std::vector<double> c;
    for (std::size_t k = 0; k < j.size(); ++k) c.push_back(real_of(j[k], scope, where + "[" + std::to_string(k) + "]"));
    const int given = static_cast<int>(c.size()) - 1;
    return USeries(center, std::move(c)).resized(std::max(given, degree));
  }
  const Expr e = parse_expr_at(j, where);
  require_vars(e, scope, {"u"}, where);
  try {
    return e.jet(scope, center, degree);
  } catch (const Error& err) {
    if (err.code() == ErrorCode::Parse) parse_error(where, err.what());
    throw;
  }
}

Triple<USeries> triple_jet(const Json& doc, const char* key, const ExprScope& scope, double center, int degree) {
  const Json& j = doc.at(key);
  if (!j.is_array() || j.size() != 3) parse_error(key, "expected three components");
  Triple<USeries> t;
  for (std::size_t c = 0; c < 3; ++c) {
    t[c] = jet_of(j[c], scope, center, degree, std::string(key) + "[" + std::to_string(c) + "]");
  }
  return t;
}

USeries series_entry(const Json& j, const ExprScope& scope, double default_center, int degree,
                     const std::string& where) {
  reject_unknown(j, {"ode", "y0", "center", "coeffs"}, where);
  const double center = j.contains("center") ? real_of(j["center"], scope, where + ".center") : default_center;
  if (j.contains("coeffs")) {
    if (j.contains("ode")) parse_error(where, "give either coeffs or ode, not both");
    return jet_of(j["coeffs"], scope, center, degree, where + ".coeffs");
  }
  if (!j.contains("ode") || !j.contains("y0")) parse_error(where, "needs 'ode' and 'y0', or 'coeffs'");
  const Expr rhs = parse_expr_at(j["ode"], where + ".ode");
  require_vars(rhs, scope, {"y"}, where + ".ode");
  const double y0 = real_of(j["y0"], scope, where + ".y0");
  const auto f = [&](const USeries& y) { return rhs.jet(scope, center, y.degree(), {{"y", y}}); };
  return ode_taylor(f, center, y0, degree);
}

Tensor3 parse_tensor(const Json& j) {
  Tensor3 t{};
  if (!j.is_array() || j.size() != 3) parse_error("C", "expected a 3x3x3 array C[a][b][c]");
  for (std::size_t a = 0; a < 3; ++a) {
    if (!j[a].is_array() || j[a].size() != 3) parse_error("C", "expected a 3x3x3 array C[a][b][c]");
    for (std::size_t b = 0; b < 3; ++b) {
      if (!j[a][b].is_array() || j[a][b].size() != 3) parse_error("C", "expected a 3x3x3 array C[a][b][c]");
      for (std::size_t c = 0; c < 3; ++c) {
        if (!j[a][b][c].is_number()) parse_error("C", "entries must be numbers");
        t[a][b][c] = j[a][b][c].get<double>();
      }
    }
  }
  return t;
}

Eigen::Matrix3d parse_matrix(const Json& j, const std::string& where) {
  Eigen::Matrix3d m;
  if (!j.is_array() || j.size() != 3) parse_error(where, "expected a 3x3 array");
  for (int r = 0; r < 3; ++r) {
    const Json& row = j[static_cast<std::size_t>(r)];
    if (!row.is_array() || row.size() != 3) parse_error(where, "expected a 3x3 array");
    for (int c = 0; c < 3; ++c) {
      if (!row[static_cast<std::size_t>(c)].is_number()) parse_error(where, "entries must be numbers");
      m(r, c) = row[static_cast<std::size_t>(c)].get<double>();
    }
  }
  return m;
}

AffineFrame parse_frame(const Json& j) {
  reject_unknown(j, {"constant", "linear"}, "A");
  AffineFrame f;
  if (j.contains("constant")) f.constant = parse_matrix(j["constant"], "A.constant");
  if (j.contains("linear")) {
    const Json& l = j["linear"];
    if (!l.is_array() || l.size() != 3) parse_error("A.linear", "expected three 3x3 matrices");
    for (std::size_t k = 0; k < 3; ++k) f.linear[k] = parse_matrix(l[k], "A.linear[" + std::to_string(k) + "]");
  }
  return f;
}

Json matrix_json(const Eigen::Matrix3d& m) {
  Json j = Json::array();
  for (int r = 0; r < 3; ++r) j.push_back({m(r, 0), m(r, 1), m(r, 2)});
  return j;
}

Json tensor_json(const Tensor3& t) {
  Json j = Json::array();
  for (const auto& a : t) {
    Json ja = Json::array();
    for (const auto& b : a) ja.push_back({b[0], b[1], b[2]});
    j.push_back(ja);
  }
  return j;
}

Json grid_json(const Grid& g) {
  return {{"u_min", g.u_min}, {"u_max", g.u_max}, {"v_min", g.v_min},
          {"v_max", g.v_max}, {"nu", g.nu},       {"nv", g.nv}};
}

Grid parse_grid(const Json& j, const ExprScope& scope) {
  reject_unknown(j, {"u_min", "u_max", "v_min", "v_max", "nu", "nv"}, "grid");
  Grid g;
  if (j.contains("u_min")) g.u_min = real_of(j["u_min"], scope, "grid.u_min");
  if (j.contains("u_max")) g.u_max = real_of(j["u_max"], scope, "grid.u_max");
  if (j.contains("v_min")) g.v_min = real_of(j["v_min"], scope, "grid.v_min");
  if (j.contains("v_max")) g.v_max = real_of(j["v_max"], scope, "grid.v_max");
  if (j.contains("nu")) g.nu = int_of(j["nu"], "grid.nu");
  if (j.contains("nv")) g.nv = int_of(j["nv"], "grid.nv");
  if (!(g.u_min <= g.u_max) || !(g.v_min <= g.v_max)) parse_error("grid", "ranges must satisfy min <= max");
  if (g.nu < 2 || g.nv < 2) parse_error("grid", "nu and nv must be at least 2");
  return g;
}

Tolerances parse_tolerances(const Json& j) {
  reject_unknown(j, {"cone", "causal", "invariant", "residual", "boundary", "minimality", "fd_step", "reference"},
                 "tolerances");
  Tolerances t;
  const std::pair<const char*, double*> fields[] = {
      {"cone", &t.cone},         {"causal", &t.causal},         {"invariant", &t.invariant},
      {"residual", &t.residual}, {"boundary", &t.boundary},     {"minimality", &t.minimality},
      {"fd_step", &t.fd_step},   {"reference", &t.reference}};
  for (const auto& [key, ptr] : fields) {
    if (!j.contains(key)) continue;
    if (!j[key].is_number() || !(j[key].get<double>() > 0.0)) {
      parse_error(std::string("tolerances.") + key, "expected a positive number");
    }
    *ptr = j[key].get<double>();
  }
  return t;
}

Json series_json(const BiSeries& s) { return s.coeffs(); }

BiSeries parse_biseries(const Json& j, double center, int order, const std::string& where) {
  if (!j.is_array() || j.size() != BiSeries::triangle_size(order)) {
    parse_error(where, "expected " + std::to_string(BiSeries::triangle_size(order)) + " coefficients");
  }
  BiSeries s(center, order);
  for (int d = 0, k = 0; d <= order; ++d) {
    for (int n = 0; n <= d; ++n, ++k) s.at(d - n, n) = j[static_cast<std::size_t>(k)].get<double>();
  }
  return s;
}

std::string sci(double x) {
  char buf[32];
  std::snprintf(buf, sizeof buf, "%.3g", x);
  return buf;
}

void check(std::vector<std::string>& failures, const char* name, double value, double limit) {
  if (!(value <= limit)) failures.push_back(std::string(name) + " = " + sci(value) + " exceeds " + sci(limit));
}

double psi_scale(const Triple<KSeries>& psi) {
  const double s = std::max({1.0, psi[0].max_abs(), psi[1].max_abs(), psi[2].max_abs()});
  return s * s;
}

}  // namespace

ProblemSpec parse_problem(const Json& doc, std::optional<int> order_override) {
  reject_unknown(doc,
                 {"description", "group", "mode", "params", "center", "order", "beta", "V", "grid", "tolerances",
                  "series", "reference", "relation", "C", "A"},
                 "problem");
  for (const char* key : {"group", "mode", "beta", "V"}) {
    if (!doc.contains(key)) parse_error("problem", std::string("missing key '") + key + "'");
  }
  ProblemSpec spec;
  BjorlingProblem& p = spec.problem;
  ExprScope& scope = spec.scope;

  if (!doc["group"].is_string()) parse_error("group", "expected a name");
  const GroupKind kind = parse_group_kind(doc["group"].get<std::string>());
  if (kind == GroupKind::Generic) {
    if (!doc.contains("C")) parse_error("group", "a generic group needs a structure-constant table C");
    const AffineFrame frame = doc.contains("A") ? parse_frame(doc["A"]) : AffineFrame{};
    p.group = GroupModel::generic(parse_tensor(doc["C"]), frame);
  } else {
    if (doc.contains("C") || doc.contains("A")) parse_error("group", "C and A apply to generic groups only");
    p.group = GroupModel::builtin(kind);
  }
  if (!doc["mode"].is_string()) parse_error("mode", "expected a name");
  p.kind = parse_problem_kind(doc["mode"].get<std::string>());

  if (doc.contains("params")) {
    if (!doc["params"].is_object()) parse_error("params", "expected an object");
    for (const auto& [name, value] : doc["params"].items()) {
      if (name == "u" || name == "v" || name == "y" || name == "pi" || name.rfind('x', 0) == 0) {
        parse_error("params." + name, "reserved name");
      }
      scope.params[name] = real_of(value, scope, "params." + name);
    }
  }

  p.order = order_override ? *order_override : doc.contains("order") ? int_of(doc["order"], "order") : 12;
  if (p.order < 1) parse_error("order", "must be at least 1");
  const double center = doc.contains("center") ? real_of(doc["center"], scope, "center") : 0.0;

  if (doc.contains("series")) {
    if (!doc["series"].is_object()) parse_error("series", "expected an object");
    for (const auto& [name, value] : doc["series"].items()) {
      if (scope.params.count(name) != 0) parse_error("series." + name, "name clashes with a parameter");
      scope.series[name] = series_entry(value, scope, center, p.order + kSeriesExtraDegree, "series." + name);
    }
  }

  p.beta = triple_jet(doc, "beta", scope, center, p.order + 1);
  p.V = triple_jet(doc, "V", scope, center, p.order + 1);
  if (doc.contains("grid")) p.grid = parse_grid(doc["grid"], scope);
  if (doc.contains("tolerances")) p.tol = parse_tolerances(doc["tolerances"]);

  if (doc.contains("reference")) {
    const Json& r = doc["reference"];
    if (!r.is_array() || r.size() != 3) parse_error("reference", "expected three expressions in u and v");
    Triple<Expr> ref;
    for (std::size_t c = 0; c < 3; ++c) {
      const std::string where = "reference[" + std::to_string(c) + "]";
      ref[c] = parse_expr_at(r[c], where);
      require_vars(ref[c], scope, {"u", "v"}, where);
    }
    spec.reference = ref;
  }
  if (doc.contains("relation")) {
    spec.relation = parse_expr_at(doc["relation"], "relation");
    require_vars(*spec.relation, scope, {"x1", "x2", "x3"}, "relation");
  }
  return spec;
}

Json read_json_file(const std::filesystem::path& path) {
  std::ifstream in(path);
  if (!in) fail(ErrorCode::Io, "cannot read " + path.string());
  try {
    return Json::parse(in);
  } catch (const Json::exception& e) {
    fail(ErrorCode::Parse, path.string() + ": " + e.what());
  }
}

ProblemSpec load_problem(const std::filesystem::path& path, std::optional<int> order_override) {
  const Json doc = read_json_file(path);
  try {
    return parse_problem(doc, order_override);
  } catch (const Json::exception& e) {
    fail(ErrorCode::Parse, path.string() + ": " + e.what());
  }
}

SolveOutcome run_problem(const ProblemSpec& spec) {
  const BjorlingProblem& p = spec.problem;
  const Tolerances& tol = p.tol;
  SolveOutcome out;
  if (!p.group.has_recipe()) {
    out.frame = solve_frame(p);
    const double s2 = psi_scale(out.frame->psi);
    check(out.failures, "cone_residual", out.frame->residual.cone, tol.cone * s2);
    check(out.failures, "pde_residual", out.frame->residual.pde, tol.cone * s2);
    return out;
  }

  out.solution = solve_bjorling(p);
  const BjorlingSolution& sol = *out.solution;
  const ResidualReport& r = sol.report;
  const double s2 = psi_scale(sol.psi);
  check(out.failures, "cone_residual", r.cone_residual, tol.cone * s2);
  check(out.failures, "pde_residual", r.pde_residual, tol.cone * s2);
  check(out.failures, "conformality_residual", r.conformality_residual, tol.residual);
  check(out.failures, "boundary_curve_residual", r.boundary_curve_residual, tol.boundary);
  check(out.failures, "normal_residual", r.normal_residual, tol.residual);
  check(out.failures, "minimality_residual", r.minimality_residual, tol.minimality);
  if (sol.strip.residual_limited) {
    out.failures.push_back("strip: residuals forced the v-range down to [" + sci(sol.strip.v_min) + ", " +
                           sci(sol.strip.v_max) + "]");
  }

  const SurfaceMap f = as_surface(sol.f);
  if (spec.reference) {
    const auto& ref = *spec.reference;
    const ExprScope& scope = spec.scope;
    const SurfaceMap g = [&](double u, double v) {
      const std::map<std::string, double> vars{{"u", u}, {"v", v}};
      return Triple<double>{ref[0].value(scope, vars), ref[1].value(scope, vars), ref[2].value(scope, vars)};
    };
    out.reference_deviation = compare_closed_form(sol.f, g, r.grid);
    check(out.failures, "reference_deviation", *out.reference_deviation, tol.reference);
  }
  if (spec.relation) {
    double worst = 0.0;
    for (int i = 0; i < r.grid.nu; ++i)
      for (int j = 0; j < r.grid.nv; ++j) {
        const Triple<double> x = f(r.grid.u(i), r.grid.v(j));
        const double val = spec.relation->value(spec.scope, {{"x1", x[0]}, {"x2", x[1]}, {"x3", x[2]}});
        worst = std::max(worst, std::abs(val));
      }
    out.relation_residual = worst;
    check(out.failures, "relation_residual", worst, tol.reference);
  }
  return out;
}

Json report_json(const ProblemSpec& spec, const SolveOutcome& outcome) {
  const BjorlingProblem& p = spec.problem;
  Json j;
  j["schema_version"] = kSchemaVersion;
  j["group"] = std::string(p.group.name());
  j["mode"] = to_string(p.kind);
  j["order"] = p.order;
  j["center"] = p.center();
  if (outcome.frame) {
    j["cone_residual"] = outcome.frame->residual.cone;
    j["pde_residual"] = outcome.frame->residual.pde;
    j["sign_at_base"] = outcome.frame->residual.sign.at_base;
    j["sign_consistent"] = outcome.frame->residual.sign.consistent;
    j["surface_reconstructed"] = false;
  }
  if (outcome.solution) {
    const BjorlingSolution& s = *outcome.solution;
    const ResidualReport& r = s.report;
    j["cone_residual"] = r.cone_residual;
    j["pde_residual"] = r.pde_residual;
    j["conformality_residual"] = r.conformality_residual;
    j["boundary_curve_residual"] = r.boundary_curve_residual;
    j["normal_residual"] = r.normal_residual;
    j["normal_flipped"] = r.normal_flipped;
    j["minimality_residual"] = r.minimality_residual;
    j["minimality_fd_step"] = p.tol.fd_step;
    j["sign_at_base"] = r.sign.at_base;
    j["sign_min"] = r.sign.min;
    j["sign_max"] = r.sign.max;
    j["sign_consistent"] = r.sign.consistent;
    j["sign_matches_kind"] = r.sign_matches_kind;
    j["strip_v_min"] = s.strip.v_min;
    j["strip_v_max"] = s.strip.v_max;
    j["strip_halvings"] = s.strip.halvings;
    j["strip_chart_limited"] = s.strip.chart_limited;
    j["strip_residual_limited"] = s.strip.residual_limited;
    j["surface_reconstructed"] = true;
  }
  if (outcome.reference_deviation) j["reference_deviation"] = *outcome.reference_deviation;
  if (outcome.relation_residual) j["relation_residual"] = *outcome.relation_residual;
  j["passed"] = outcome.passed();
  std::string failing;
  for (const auto& f : outcome.failures) failing += (failing.empty() ? "" : "; ") + f;
  j["failures"] = failing;
  return j;
}

Json solution_json(const ProblemSpec& spec, const SolveOutcome& outcome) {
  const BjorlingProblem& p = spec.problem;
  Json j;
  j["schema_version"] = kSchemaVersion;
  j["group"] = std::string(p.group.name());
  if (p.group.kind() == GroupKind::Generic) {
    j["C"] = tensor_json(p.group.structure());
    Json a;
    a["constant"] = matrix_json(p.group.frame().constant);
    a["linear"] = {matrix_json(p.group.frame().linear[0]), matrix_json(p.group.frame().linear[1]),
                   matrix_json(p.group.frame().linear[2])};
    j["A"] = a;
  }
  j["mode"] = to_string(p.kind);
  j["center"] = p.center();
  j["order"] = p.order;
  j["grid"] = grid_json(p.grid);
  j["layout"] = "coefficient of (u-center)^m v^n at index (m+n)(m+n+1)/2 + n";
  const Triple<KSeries>& psi = outcome.solution ? outcome.solution->psi : outcome.frame->psi;
  Json jp = Json::array();
  for (const auto& c : psi) jp.push_back({{"re", series_json(c.re())}, {"im", series_json(c.im())}});
  j["psi"] = jp;
  if (outcome.solution) {
    const BjorlingSolution& s = *outcome.solution;
    j["f_order"] = s.f[0].order();
    j["f"] = {series_json(s.f[0]), series_json(s.f[1]), series_json(s.f[2])};
    j["strip"] = {{"v_min", s.strip.v_min}, {"v_max", s.strip.v_max}, {"halvings", s.strip.halvings}};
  } else {
    j["f"] = nullptr;
  }
  return j;
}

StoredSolution parse_solution(const Json& doc) {
  try {
    if (!doc.is_object() || doc.value("schema_version", 0) != kSchemaVersion) {
      parse_error("solution", "missing or unsupported schema_version");
    }
    StoredSolution s;
    const GroupKind kind = parse_group_kind(doc.at("group").get<std::string>());
    s.group = kind == GroupKind::Generic
                  ? GroupModel::generic(parse_tensor(doc.at("C")), parse_frame(doc.at("A")))
                  : GroupModel::builtin(kind);
    s.kind = parse_problem_kind(doc.at("mode").get<std::string>());
    s.grid = parse_grid(doc.at("grid"), {});
    const double center = doc.at("center").get<double>();
    const int order = doc.at("order").get<int>();
    const Mode mode = mode_of(s.kind);
    const Json& jp = doc.at("psi");
    if (!jp.is_array() || jp.size() != 3) parse_error("psi", "expected three components");
    for (std::size_t c = 0; c < 3; ++c) {
      const std::string where = "psi[" + std::to_string(c) + "]";
      s.psi[c] = KSeries(parse_biseries(jp[c].at("re"), center, order, where + ".re"),
                         parse_biseries(jp[c].at("im"), center, order, where + ".im"), mode);
    }
    if (!doc.at("f").is_null()) {
      const int f_order = doc.at("f_order").get<int>();
      const Json& jf = doc.at("f");
      if (!jf.is_array() || jf.size() != 3) parse_error("f", "expected three components");
      Triple<BiSeries> f;
      for (std::size_t c = 0; c < 3; ++c) {
        f[c] = parse_biseries(jf[c], center, f_order, "f[" + std::to_string(c) + "]");
      }
      s.f = f;
    }
    return s;
  } catch (const Json::exception& e) {
    fail(ErrorCode::Parse, std::string("solution: ") + e.what());
  }
}

StoredSolution load_solution(const std::filesystem::path& path) { return parse_solution(read_json_file(path)); }

MeshFormat parse_mesh_format(std::string_view name) {
  if (name == "obj") return MeshFormat::Obj;
  if (name == "csv") return MeshFormat::Csv;
  fail(ErrorCode::Usage, "unknown mesh format '" + std::string(name) + "' (expected obj or csv)");
}

Mesh build_mesh(const StoredSolution& solution, MeshFormat format) {
  if (!solution.f) fail(ErrorCode::Usage, "solution has no reconstructed surface (generic group)");
  const Triple<BiSeries>& f = *solution.f;
  const Triple<BiSeries> fu{f[0].du(), f[1].du(), f[2].du()};
  const Triple<BiSeries> fv{f[0].dv(), f[1].dv(), f[2].dv()};
  const Grid& g = solution.grid;

  Mesh mesh;
  std::ostringstream out;
  out.precision(17);
  if (format == MeshFormat::Csv) out << "u,v,x1,x2,x3,residual\n";
  std::vector<int> id(static_cast<std::size_t>(g.nu * g.nv), 0);
  for (int i = 0; i < g.nu; ++i) {
    for (int j = 0; j < g.nv; ++j) {
      const double u = g.u(i), v = g.v(j);
      const CoordPoint x{{f[0].eval(u, v), f[1].eval(u, v), f[2].eval(u, v)}};
      if (!solution.group.in_domain(x)) {
        ++mesh.clipped;
        continue;
      }
      id[static_cast<std::size_t>(i * g.nv + j)] = ++mesh.vertices;
      if (format == MeshFormat::Obj) {
        out << "v " << x[0] << ' ' << x[1] << ' ' << x[2] << '\n';
        continue;
      }
      const Eigen::Matrix3d Ainv = solution.group.frame_matrix(x).A_inv;
      const Eigen::Vector3d a = Ainv * Eigen::Vector3d(fu[0].eval(u, v), fu[1].eval(u, v), fu[2].eval(u, v));
      const Eigen::Vector3d b = Ainv * Eigen::Vector3d(fv[0].eval(u, v), fv[1].eval(u, v), fv[2].eval(u, v));
      const FrameVector fa{a[0], a[1], a[2]}, fb{b[0], b[1], b[2]};
      const double residual = conformality_defect(fa, fb, solution.kind);
      out << u << ',' << v << ',' << x[0] << ',' << x[1] << ',' << x[2] << ',' << residual << '\n';
    }
  }
  if (format == MeshFormat::Obj) {
    auto at = [&](int i, int j) { return id[static_cast<std::size_t>(i * g.nv + j)]; };
    for (int i = 0; i + 1 < g.nu; ++i) {
      for (int j = 0; j + 1 < g.nv; ++j) {
        const int a = at(i, j), b = at(i + 1, j), c = at(i + 1, j + 1), d = at(i, j + 1);
        if (a == 0 || b == 0 || c == 0 || d == 0) continue;
        out << "f " << a << ' ' << b << ' ' << c << ' ' << d << '\n';
        ++mesh.faces;
      }
    }
  }
  mesh.text = out.str();
  return mesh;
}

void write_file_atomic(const std::filesystem::path& path, const std::string& content) {
  std::filesystem::path tmp = path;
  tmp += ".tmp";
  {
    std::ofstream out(tmp, std::ios::binary | std::ios::trunc);
    if (!out) fail(ErrorCode::Io, "cannot write " + tmp.string());
    out << content;
    out.flush();
    if (!out) fail(ErrorCode::Io, "write failed for " + tmp.string());
  }
  std::error_code ec;
  std::filesystem::rename(tmp, path, ec);
  if (ec) {
    std::filesystem::remove(tmp, ec);
    fail(ErrorCode::Io, "cannot move output into place at " + path.string());
  }
}

}  // namespace bjorling
