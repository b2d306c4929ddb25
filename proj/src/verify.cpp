#include "bjorling/verify.hpp"

#include <algorithm>
#include <cmath>
#include <string>

namespace bjorling {

const char* to_string(ProblemKind kind) {
  switch (kind) {
    case ProblemKind::TimelikeCurveOnTimelikeSurface: return "timelike";
    case ProblemKind::SpacelikeCurveOnTimelikeSurface: return "spacelike-curve";
    case ProblemKind::SpacelikeSurface: return "spacelike-surface";
  }
  return "timelike";
}

ProblemKind parse_problem_kind(std::string_view name) {
  if (name == "timelike") return ProblemKind::TimelikeCurveOnTimelikeSurface;
  if (name == "spacelike-curve") return ProblemKind::SpacelikeCurveOnTimelikeSurface;
  if (name == "spacelike-surface") return ProblemKind::SpacelikeSurface;
  fail(ErrorCode::Parse,
       "unknown mode '" + std::string(name) + "' (expected timelike, spacelike-curve or spacelike-surface)");
}

double Grid::u(int i) const { return nu <= 1 ? u_min : u_min + i * (u_max - u_min) / (nu - 1); }
double Grid::v(int j) const { return nv <= 1 ? v_min : v_min + j * (v_max - v_min) / (nv - 1); }

Grid Grid::scaled_v(double factor) const {
  Grid g = *this;
  g.v_min *= factor;
  g.v_max *= factor;
  return g;
}

SurfaceMap as_surface(const Triple<BiSeries>& f) {
  return [f](double u, double v) { return Triple<double>{f[0].eval(u, v), f[1].eval(u, v), f[2].eval(u, v)}; };
}

double hermitian_norm(const Triple<KScalar>& psi) {
  return psi[0].sq_mod() + psi[1].sq_mod() - psi[2].sq_mod();
}

WeierstrassResidual residual_weierstrass(const Tensor3& gamma, const Triple<KSeries>& psi, const Grid& grid) {
  WeierstrassResidual r;
  r.cone = (psi[0] * psi[0] + psi[1] * psi[1] - psi[2] * psi[2]).max_abs();
  const Triple<KSeries> G = pde_rhs(gamma, psi);
  for (std::size_t c = 0; c < 3; ++c) {
    r.pde = std::max(r.pde, (psi[c].diff(Derivative::ZBar) + G[c]).max_abs());
  }
  auto at = [&](double u, double v) {
    return hermitian_norm({psi[0].eval(u, v), psi[1].eval(u, v), psi[2].eval(u, v)});
  };
  r.sign.at_base = at(psi[0].center(), 0.0);
  r.sign.min = r.sign.max = r.sign.at_base;
  for (int i = 0; i < grid.nu; ++i)
    for (int j = 0; j < grid.nv; ++j) {
      const double h = at(grid.u(i), grid.v(j));
      r.sign.min = std::min(r.sign.min, h);
      r.sign.max = std::max(r.sign.max, h);
    }
  r.sign.consistent = r.sign.min > 0.0 || r.sign.max < 0.0;
  return r;
}

namespace {

struct Jet {
  Triple<BiSeries> f, fu, fv;

  explicit Jet(const Triple<BiSeries>& s) : f(s) {
    for (std::size_t c = 0; c < 3; ++c) {
      fu[c] = s[c].du();
      fv[c] = s[c].dv();
    }
  }

  static Triple<double> eval(const Triple<BiSeries>& t, double u, double v) {
    return {t[0].eval(u, v), t[1].eval(u, v), t[2].eval(u, v)};
  }
};

FrameVector to_frame_at(const Eigen::Matrix3d& A_inv, const Triple<double>& w) {
  const Eigen::Vector3d r = A_inv * Eigen::Vector3d(w[0], w[1], w[2]);
  return {r[0], r[1], r[2]};
}

double coord_norm(const Eigen::Matrix3d& g, const Triple<double>& a, const Triple<double>& b) {
  const Eigen::Vector3d x(a[0], a[1], a[2]);
  const Eigen::Vector3d y(b[0], b[1], b[2]);
  return x.dot(g * y);
}

}  // namespace

double conformality_defect(const FrameVector& fu, const FrameVector& fv, ProblemKind kind) {
  const double guu = metric_eval(fu, fu), gvv = metric_eval(fv, fv);
  const double raw = std::abs(metric_eval(fu, fv)) + std::abs(guu + sigma_of(kind) * gvv);
  const double scale = std::max(std::abs(guu), std::abs(gvv));
  return scale > 0.0 ? raw / scale : raw;
}

double conformality_check(const GroupModel& group, const Triple<BiSeries>& f, ProblemKind kind, const Grid& grid) {
  const Jet jet(f);
  double worst = 0.0;
  for (int i = 0; i < grid.nu; ++i)
    for (int j = 0; j < grid.nv; ++j) {
      const double u = grid.u(i), v = grid.v(j);
      const auto A_inv = group.frame_matrix(CoordPoint{Jet::eval(jet.f, u, v)}).A_inv;
      const FrameVector a = to_frame_at(A_inv, Jet::eval(jet.fu, u, v));
      const FrameVector b = to_frame_at(A_inv, Jet::eval(jet.fv, u, v));
      worst = std::max(worst, conformality_defect(a, b, kind));
    }
  return worst;
}

BoundaryResidual normal_boundary_check(const GroupModel& group, const Triple<BiSeries>& f,
                                       const Triple<USeries>& beta, const Triple<USeries>& V, const Grid& grid) {
  BoundaryResidual r;
  for (std::size_t c = 0; c < 3; ++c) {
    const int top = std::min(f[c].order(), beta[c].degree());
    for (int m = 0; m <= top; ++m) r.curve = std::max(r.curve, std::abs(f[c].at(m, 0) - beta[c][m]));
  }
  const Jet jet(f);
  double plus = 0.0, minus = 0.0;
  for (int i = 0; i < grid.nu; ++i) {
    const double u = grid.u(i);
    const auto A_inv = group.frame_matrix(CoordPoint{Jet::eval(jet.f, u, 0.0)}).A_inv;
    const FrameVector a = to_frame_at(A_inv, Jet::eval(jet.fu, u, 0.0));
    const FrameVector b = to_frame_at(A_inv, Jet::eval(jet.fv, u, 0.0));
    const FrameVector n = lorentz_cross(a, b);
    const double nn = metric_eval(n, n);
    const double scale = (a[0] * a[0] + a[1] * a[1] + a[2] * a[2]) * (b[0] * b[0] + b[1] * b[1] + b[2] * b[2]);
    if (!(std::abs(nn) > 1e-14 * scale) || scale == 0.0) {
      fail(ErrorCode::DegenerateFrame, "f_u x f_v is null at u = " + std::to_string(u));
    }
    const double len = std::sqrt(std::abs(nn));
    for (std::size_t c = 0; c < 3; ++c) {
      const double Nc = n[c] / len;
      const double Vc = V[c].eval(u);
      plus = std::max(plus, std::abs(Nc - Vc));
      minus = std::max(minus, std::abs(Nc + Vc));
    }
  }
  r.flipped = minus < plus;
  r.normal = std::min(plus, minus);
  return r;
}

double mean_curvature_numeric(const GroupModel& group, const SurfaceMap& f, ProblemKind kind, const Grid& grid,
                              double h) {
  const double s = sigma_of(kind);
  double worst = 0.0;
  for (int i = 0; i < grid.nu; ++i)
    for (int j = 0; j < grid.nv; ++j) {
      const double u = grid.u(i), v = grid.v(j);
      const Triple<double> f0 = f(u, v);
      const Triple<double> fpu = f(u + h, v), fmu = f(u - h, v);
      const Triple<double> fpv = f(u, v + h), fmv = f(u, v - h);
      Triple<double> fu{}, fv{}, fuu{}, fvv{};
      for (std::size_t k = 0; k < 3; ++k) {
        fu[k] = (fpu[k] - fmu[k]) / (2 * h);
        fv[k] = (fpv[k] - fmv[k]) / (2 * h);
        fuu[k] = (fpu[k] - 2 * f0[k] + fmu[k]) / (h * h);
        fvv[k] = (fpv[k] - 2 * f0[k] + fmv[k]) / (h * h);
      }
      const CoordPoint p{f0};
      const Tensor3 G = christoffels_numeric(group, p, h);
      const double lambda = std::abs(coord_norm(group.coord_metric(p), fu, fu));
      double r = 0.0;
      for (int k = 0; k < 3; ++k) {
        double R = fuu[static_cast<std::size_t>(k)] - s * fvv[static_cast<std::size_t>(k)];
        for (std::size_t a = 0; a < 3; ++a)
          for (std::size_t b = 0; b < 3; ++b) R += G[k][a][b] * (fu[a] * fu[b] - s * fv[a] * fv[b]);
        r = std::max(r, std::abs(R));
      }
      worst = std::max(worst, r / std::max(lambda, 1e-300));
    }
  return worst;
}

double compare_closed_form(const Triple<BiSeries>& f, const SurfaceMap& reference, const Grid& grid) {
  double worst = 0.0;
  for (int i = 0; i < grid.nu; ++i)
    for (int j = 0; j < grid.nv; ++j) {
      const double u = grid.u(i), v = grid.v(j);
      const Triple<double> ref = reference(u, v);
      for (std::size_t c = 0; c < 3; ++c) worst = std::max(worst, std::abs(f[c].eval(u, v) - ref[c]));
    }
  return worst;
}

}  // namespace bjorling
