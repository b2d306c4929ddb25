#pragma once

#include <functional>
#include <vector>

#include "bjorling/group.hpp"
#include "bjorling/series.hpp"

namespace bjorling {

/// Causal type of the surface being built. Timelike surfaces use the
/// paracomplex parameter z = u + tau v, spacelike surfaces z = u + i v.
enum class ProblemKind {
  TimelikeCurveOnTimelikeSurface,
  SpacelikeCurveOnTimelikeSurface,
  SpacelikeSurface,
};

const char* to_string(ProblemKind kind);
/// "timelike" | "spacelike-curve" | "spacelike-surface"
ProblemKind parse_problem_kind(std::string_view name);

constexpr Mode mode_of(ProblemKind k) {
  return k == ProblemKind::SpacelikeSurface ? Mode::Complex : Mode::Paracomplex;
}
/// +1 when the induced metric is Lorentzian (conformality reads
/// g(f_u,f_u) = -g(f_v,f_v)), -1 when it is Riemannian.
constexpr double sigma_of(ProblemKind k) { return k == ProblemKind::SpacelikeSurface ? -1.0 : 1.0; }
/// f_v(u, 0) = fv_sign * (V x beta').
constexpr double fv_sign_of(ProblemKind k) {
  return k == ProblemKind::TimelikeCurveOnTimelikeSurface ? 1.0 : -1.0;
}
/// Expected sign of |psi1|^2 + |psi2|^2 - |psi3|^2 along the initial curve
/// (the sign of g(beta', beta')).
constexpr double hermitian_sign_of(ProblemKind k) {
  return k == ProblemKind::TimelikeCurveOnTimelikeSurface ? -1.0 : 1.0;
}

/// Rectangular sample grid in the (u, v) parameter domain.
struct Grid {
  double u_min = -0.5;
  double u_max = 0.5;
  double v_min = -0.5;
  double v_max = 0.5;
  int nu = 11;
  int nv = 11;

  double u(int i) const;
  double v(int j) const;
  /// Same u-samples with the v-range scaled by factor.
  Grid scaled_v(double factor) const;
};

using SurfaceMap = std::function<Triple<double>(double u, double v)>;

SurfaceMap as_surface(const Triple<BiSeries>& f);

struct SignProfile {
  double at_base = 0.0;
  double min = 0.0;
  double max = 0.0;
  /// No sign change and no zero on the sampled grid.
  bool consistent = true;
};

struct WeierstrassResidual {
  double cone = 0.0;  ///< max coefficient of psi1^2 + psi2^2 - psi3^2
  double pde = 0.0;   ///< max over c of the coefficients of d(psi_c)/d(zbar) + G_c
  SignProfile sign;
};

WeierstrassResidual residual_weierstrass(const Tensor3& gamma, const Triple<KSeries>& psi, const Grid& grid);

/// |psi1|^2 + |psi2|^2 - |psi3|^2 at one point.
double hermitian_norm(const Triple<KScalar>& psi);

/// (|g(f_u, f_v)| + |g(f_u, f_u) + sigma g(f_v, f_v)|) / max(|g(f_u, f_u)|, |g(f_v, f_v)|)
/// for frame-component tangents.
double conformality_defect(const FrameVector& fu, const FrameVector& fv, ProblemKind kind);

/// Grid max of conformality_defect, with the derivatives mapped to frame
/// components through A^-1(f).
double conformality_check(const GroupModel& group, const Triple<BiSeries>& f, ProblemKind kind, const Grid& grid);

struct BoundaryResidual {
  double curve = 0.0;   ///< max coefficient deviation of f(., 0) from beta
  double normal = 0.0;  ///< max over grid u of |N(u, 0) -/+ V(u)|
  bool flipped = false; ///< N matched -V rather than +V
};

/// Compares the boundary data of a reconstructed surface with the curve
/// (coordinates) and the prescribed normal field (frame components). The
/// normal is f_u x f_v in the frame, scaled to unit length; throws
/// DegenerateFrame when that vector is (numerically) null.
BoundaryResidual normal_boundary_check(const GroupModel& group, const Triple<BiSeries>& f,
                                       const Triple<USeries>& beta, const Triple<USeries>& V, const Grid& grid);

/// Tension-field residual of a parametrized surface, using only coordinate
/// data: R^k = f^k_uu - s f^k_vv + Gamma^k_ij(f) (f^i_u f^j_u - s f^i_v f^j_v)
/// with every derivative and every Christoffel symbol taken by central
/// differences of step h. Returns the grid max of max_k |R^k| / |g(f_u, f_u)|.
double mean_curvature_numeric(const GroupModel& group, const SurfaceMap& f, ProblemKind kind, const Grid& grid,
                              double h);

/// Largest component-wise deviation between the series surface and a
/// reference on the grid.
double compare_closed_form(const Triple<BiSeries>& f, const SurfaceMap& reference, const Grid& grid);

/// Complete record of every check for one solution.
struct ResidualReport {
  double cone_residual = 0.0;
  double pde_residual = 0.0;
  double conformality_residual = 0.0;
  double boundary_curve_residual = 0.0;
  double normal_residual = 0.0;
  double minimality_residual = 0.0;
  bool normal_flipped = false;
  SignProfile sign;
  /// Base-point sign of |psi|^2 agrees with the kind.
  bool sign_matches_kind = true;
  Grid grid;
};

}  // namespace bjorling
