#include "bjorling/solver.hpp"

#include <algorithm>
#include <cmath>
#include <sstream>
#include <string>

namespace bjorling {

namespace {

constexpr int kMaxHalvings = 8;

Triple<BiSeries> lift(const Triple<USeries>& t, int order) {
  return {BiSeries::from_u(t[0], order), BiSeries::from_u(t[1], order), BiSeries::from_u(t[2], order)};
}

Triple<BiSeries> derivative_u(const Triple<BiSeries>& t) { return {t[0].du(), t[1].du(), t[2].du()}; }

/// beta' in frame components, as a series of the given order.
Triple<BiSeries> velocity_in_frame(const GroupModel& group, const Triple<USeries>& beta, int order) {
  const Triple<BiSeries> point = lift(beta, order + 1);
  return group.to_frame(point, derivative_u(point));
}

std::string fmt(double x) {
  std::ostringstream os;
  os.precision(3);
  os << x;
  return os.str();
}

}  // namespace

const char* to_string(Causal c) {
  switch (c) {
    case Causal::Timelike: return "timelike";
    case Causal::Spacelike: return "spacelike";
    case Causal::Lightlike: return "lightlike";
    case Causal::MixedCausal: return "mixed";
  }
  return "mixed";
}

void validate(const BjorlingProblem& p) {
  const int N = p.order;
  if (N < 1) fail(ErrorCode::InvalidProblem, "order: truncation order must be at least 1");
  const double u0 = p.center();
  for (std::size_t c = 0; c < 3; ++c) {
    if (p.beta[c].center() != u0 || p.V[c].center() != u0) {
      fail(ErrorCode::InvalidProblem, "center: all curve and field jets must share the center u0");
    }
    if (p.beta[c].degree() < N + 1) {
      fail(ErrorCode::InvalidProblem, "jet degree: beta needs degree >= order + 1 = " + std::to_string(N + 1));
    }
    if (p.V[c].degree() < N) {
      fail(ErrorCode::InvalidProblem, "jet degree: V needs degree >= order = " + std::to_string(N));
    }
  }
  const CoordPoint base{{p.beta[0][0], p.beta[1][0], p.beta[2][0]}};
  if (!p.group.in_domain(base)) {
    fail(ErrorCode::InvalidProblem, "chart: beta(u0) lies outside the " + std::string(p.group.name()) + " chart");
  }
  const Triple<BiSeries> bd = velocity_in_frame(p.group, p.beta, N);
  const Triple<BiSeries> V = lift(p.V, N);
  const double target = p.kind == ProblemKind::SpacelikeSurface ? -1.0 : 1.0;
  const double v_scale = std::max({1.0, V[0].max_abs(), V[1].max_abs(), V[2].max_abs()});
  const BiSeries gVV = metric_eval(V, V) - BiSeries::constant(u0, N, target);
  if (gVV.max_abs() > p.tol.invariant * v_scale * v_scale) {
    fail(ErrorCode::InvalidProblem, std::string("unit field: g(V,V) = ") + (target > 0 ? "+1" : "-1") +
                                        " is violated (" + to_string(p.kind) + " problems need a " +
                                        (target > 0 ? "spacelike" : "timelike") +
                                        " unit field; max coefficient defect " + fmt(gVV.max_abs()) + ")");
  }
  const double b_scale = std::max({1.0, bd[0].max_abs(), bd[1].max_abs(), bd[2].max_abs()});
  const BiSeries gBV = metric_eval(bd, V);
  if (gBV.max_abs() > p.tol.invariant * v_scale * b_scale) {
    fail(ErrorCode::InvalidProblem,
         "orthogonality: g(beta', V) = 0 is violated (max coefficient defect " + fmt(gBV.max_abs()) + ")");
  }
}

Causal classify_curve(const GroupModel& group, const Triple<USeries>& beta, double u_min, double u_max,
                      double causal_tol, int samples) {
  const int order = std::min({beta[0].degree(), beta[1].degree(), beta[2].degree()}) - 1;
  if (order < 0) fail(ErrorCode::Usage, "curve jets need degree >= 1");
  const Triple<BiSeries> bd = velocity_in_frame(group, beta, order);
  const BiSeries g = metric_eval(bd, bd);
  std::vector<double> us{beta[0].center()};
  for (int i = 0; i < samples; ++i) {
    us.push_back(samples == 1 ? u_min : u_min + i * (u_max - u_min) / (samples - 1));
  }
  double scale = 0.0;
  for (double u : us) {
    double e = 0.0;
    for (const auto& c : bd) e += c.eval(u, 0.0) * c.eval(u, 0.0);
    scale = std::max(scale, e);
  }
  const double band = causal_tol * scale;
  bool pos = false, neg = false;
  for (double u : us) {
    const double x = g.eval(u, 0.0);
    if (std::abs(x) <= band || scale == 0.0) return Causal::Lightlike;
    (x > 0 ? pos : neg) = true;
  }
  if (pos && neg) return Causal::MixedCausal;
  return pos ? Causal::Spacelike : Causal::Timelike;
}

InitialData initial_data(const BjorlingProblem& p) {
  const Causal causal = classify_curve(p.group, p.beta, p.grid.u_min, p.grid.u_max, p.tol.causal);
  if (causal == Causal::Lightlike) {
    fail(ErrorCode::CharacteristicData, "characteristic (lightlike) initial curve: g(beta', beta') vanishes");
  }
  if (causal == Causal::MixedCausal) {
    fail(ErrorCode::CausalMismatch, "initial curve changes causal character on the sampled interval");
  }
  const Causal wanted =
      p.kind == ProblemKind::TimelikeCurveOnTimelikeSurface ? Causal::Timelike : Causal::Spacelike;
  if (causal != wanted) {
    fail(ErrorCode::CausalMismatch, std::string("mode '") + to_string(p.kind) + "' needs a " + to_string(wanted) +
                                        " curve, got a " + to_string(causal) + " one");
  }

  const int N = p.order;
  const Mode mode = mode_of(p.kind);
  const double s = p.kind == ProblemKind::SpacelikeCurveOnTimelikeSurface ? -1.0 : 1.0;
  const Triple<BiSeries> point = lift(p.beta, N + 1);
  const Triple<BiSeries> bd_coord = derivative_u(point);
  const Triple<BiSeries> bd = p.group.to_frame(point, bd_coord);
  const Triple<BiSeries> W = lorentz_cross(lift(p.V, N), bd);
  const Triple<BiSeries> W_coord = p.group.to_coords(point, W);

  InitialData d;
  for (std::size_t c = 0; c < 3; ++c) {
    d.psi0[c] = KSeries(0.5 * bd[c], (0.5 * s) * W[c].truncated(N), mode);
    d.phi0[c] = KSeries(0.5 * bd_coord[c], (0.5 * s) * W_coord[c].truncated(N), mode);
  }
  return d;
}

double relative_cone_residual(const Triple<KSeries>& psi) {
  const double scale = std::max({1.0, psi[0].max_abs(), psi[1].max_abs(), psi[2].max_abs()});
  return (psi[0] * psi[0] + psi[1] * psi[1] - psi[2] * psi[2]).max_abs() / (scale * scale);
}

Triple<KSeries> ck_march(const Tensor3& gamma, const Triple<KSeries>& psi0, ThirdComponent third, double cone_tol) {
  const int N = psi0[0].order();
  const Mode mode = psi0[0].mode();
  const KScalar unit = KScalar::unit(mode);
  Triple<KSeries> psi = psi0;
  for (auto& c : psi) {
    if (c.order() != N) fail(ErrorCode::Usage, "initial components must share one order");
    for (int d = 1; d <= N; ++d)
      for (int n = 1; n <= d; ++n) c.set(d - n, n, KScalar::real(0.0, mode));
  }
  const double initial_cone = relative_cone_residual(psi);
  if (initial_cone > cone_tol) {
    fail(ErrorCode::ConstraintDrift, "initial data is off the cone psi1^2 + psi2^2 - psi3^2 = 0 (relative defect " +
                                         fmt(initial_cone) + ")");
  }
  const KScalar branch = psi[2].coeff(0, 0);
  const bool lift_third = third == ThirdComponent::LiftFromCone;
  auto relift = [&] { psi[2] = sqrt(psi[0] * psi[0] + psi[1] * psi[1], branch); };
  const std::size_t marched = lift_third ? 2 : 3;

  for (int n = 0; n < N; ++n) {
    if (lift_third) relift();
    const Triple<KSeries> G = pde_rhs(gamma, psi);
    for (std::size_t c = 0; c < marched; ++c) {
      for (int m = 0; m + n + 1 <= N; ++m) {
        const KScalar rhs = static_cast<double>(m + 1) * psi[c].coeff(m + 1, n) + 2.0 * G[c].coeff(m, n);
        psi[c].set(m, n + 1, (1.0 / (n + 1)) * (unit * rhs));
      }
    }
  }
  if (lift_third) relift();

  const double drift = relative_cone_residual(psi);
  if (drift > cone_tol) {
    fail(ErrorCode::ConstraintDrift, "cone constraint drifted to " + fmt(drift) + " during marching");
  }
  return psi;
}

BiSeries integrate_real_part(const KSeries& phi) {
  // Paracomplex phi = (f_u + tau f_v)/2, complex phi = (f_u - i f_v)/2.
  const double sign = phi.mode() == Mode::Paracomplex ? 2.0 : -2.0;
  return antidiff_exact(2.0 * phi.re(), sign * phi.im());
}

Triple<BiSeries> reconstruct_surface(const GroupModel& group, const Triple<KSeries>& psi, const CoordPoint& base) {
  const auto& I = integrate_real_part;
  Triple<BiSeries> f;
  switch (group.kind()) {
    case GroupKind::Heisenberg: {
      f[0] = base[0] + I(psi[0]);
      f[1] = base[1] + I(psi[1]);
      const KSeries phi3 = (0.5 * f[0]) * psi[1] - (0.5 * f[1]) * psi[0] + psi[2];
      f[2] = base[2] + I(phi3);
      return f;
    }
    case GroupKind::DeSitter: {
      if (!(base[2] > 0.0)) fail(ErrorCode::DomainError, "de Sitter base point needs x3 > 0");
      f[2] = base[2] * exp(I(psi[2]));
      f[0] = base[0] + I(f[2] * psi[0]);
      f[1] = base[1] + I(f[2] * psi[1]);
      return f;
    }
    case GroupKind::H2xR: {
      if (!(base[1] > 0.0)) fail(ErrorCode::DomainError, "H2xR base point needs x2 > 0");
      f[1] = base[1] * exp(I(psi[1]));
      f[0] = base[0] + I(f[1] * psi[0]);
      f[2] = base[2] + I(psi[2]);
      return f;
    }
    case GroupKind::Generic: break;
  }
  fail(ErrorCode::UnsupportedRecipe, "no integration recipe for generic groups; only residual checks are available");
}

FrameSolution solve_frame(const BjorlingProblem& problem) {
  validate(problem);
  FrameSolution s;
  s.initial = initial_data(problem);
  s.psi = ck_march(problem.group.gamma(), s.initial.psi0, ThirdComponent::March, problem.tol.cone);
  s.residual = residual_weierstrass(problem.group.gamma(), s.psi, problem.grid);
  return s;
}

namespace {

bool grid_in_chart(const GroupModel& group, const Triple<BiSeries>& f, const Grid& g) {
  for (int i = 0; i < g.nu; ++i)
    for (int j = 0; j < g.nv; ++j) {
      const double u = g.u(i), v = g.v(j);
      const CoordPoint p{{f[0].eval(u, v), f[1].eval(u, v), f[2].eval(u, v)}};
      if (!group.in_domain(p)) return false;
    }
  return true;
}

struct GridResiduals {
  double conformality = 0.0;
  double minimality = 0.0;
};

GridResiduals grid_residuals(const BjorlingProblem& p, const Triple<BiSeries>& f, const Grid& g) {
  GridResiduals r;
  r.conformality = conformality_check(p.group, f, p.kind, g);
  r.minimality = mean_curvature_numeric(p.group, as_surface(f), p.kind, g, p.tol.fd_step);
  return r;
}

bool grid_ok(const GridResiduals& r, const Tolerances& tol) {
  return r.conformality <= tol.residual && r.minimality <= tol.minimality;
}

}  // namespace

bool BjorlingSolution::passes(const Tolerances& tol) const {
  const double scale = std::max({1.0, psi[0].max_abs(), psi[1].max_abs(), psi[2].max_abs()});
  const double s2 = scale * scale;
  return report.cone_residual <= tol.cone * s2 && report.pde_residual <= tol.cone * s2 &&
         report.conformality_residual <= tol.residual && report.boundary_curve_residual <= tol.boundary &&
         report.normal_residual <= tol.residual && report.minimality_residual <= tol.minimality &&
         !strip.residual_limited;
}

BjorlingSolution solve_bjorling(const BjorlingProblem& problem) {
  if (!problem.group.has_recipe()) {
    fail(ErrorCode::UnsupportedRecipe, "no integration recipe for generic groups; only residual checks are available");
  }
  const FrameSolution fs = solve_frame(problem);

  BjorlingSolution sol;
  sol.kind = problem.kind;
  sol.phi0 = fs.initial.phi0;
  sol.psi0 = fs.initial.psi0;
  sol.psi = fs.psi;
  const CoordPoint base{{problem.beta[0][0], problem.beta[1][0], problem.beta[2][0]}};
  sol.f = reconstruct_surface(problem.group, sol.psi, base);

  ResidualReport& rep = sol.report;
  rep.cone_residual = fs.residual.cone;
  rep.pde_residual = fs.residual.pde;

  bool have_report_grid = false;
  bool accepted = false;
  for (int k = 0; k <= kMaxHalvings && !accepted; ++k) {
    const Grid g = problem.grid.scaled_v(std::ldexp(1.0, -k));
    if (!grid_in_chart(problem.group, sol.f, g)) {
      sol.strip.chart_limited = true;
      continue;
    }
    const GridResiduals r = grid_residuals(problem, sol.f, g);
    if (!have_report_grid) {
      have_report_grid = true;
      rep.grid = g;
      rep.conformality_residual = r.conformality;
      rep.minimality_residual = r.minimality;
    }
    if (grid_ok(r, problem.tol)) {
      accepted = true;
      sol.strip.v_min = g.v_min;
      sol.strip.v_max = g.v_max;
      sol.strip.halvings = k;
    } else {
      sol.strip.residual_limited = true;
    }
  }
  if (!have_report_grid) {
    fail(ErrorCode::DomainError, "the surface leaves the chart on every strip down to 2^-" +
                                     std::to_string(kMaxHalvings) + " of the requested v-range");
  }
  if (!accepted) {
    sol.strip.v_min = sol.strip.v_max = 0.0;
    sol.strip.halvings = kMaxHalvings;
  }

  const BoundaryResidual b = normal_boundary_check(problem.group, sol.f, problem.beta, problem.V, rep.grid);
  rep.boundary_curve_residual = b.curve;
  rep.normal_residual = b.normal;
  rep.normal_flipped = b.flipped;
  rep.sign = residual_weierstrass(problem.group.gamma(), sol.psi, rep.grid).sign;
  rep.sign_matches_kind = rep.sign.at_base * hermitian_sign_of(problem.kind) > 0.0;
  return sol;
}

}  // namespace bjorling
