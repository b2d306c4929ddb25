#pragma once

#include <optional>

#include "bjorling/group.hpp"
#include "bjorling/series.hpp"
#include "bjorling/verify.hpp"

namespace bjorling {

struct Tolerances {
  double cone = 1e-9;        ///< cone constraint, relative to max(1, |psi|^2)
  double causal = 1e-10;     ///< lightlike band, relative to |beta'|^2
  double invariant = 1e-9;   ///< g(V,V) = +-1 and g(beta', V) = 0 as series
  double residual = 1e-8;    ///< grid-level residuals
  double boundary = 1e-10;   ///< f(., 0) against beta, coefficientwise
  double minimality = 1e-4;  ///< tension residual
  double fd_step = 1e-3;     ///< finite-difference step of the tension residual
  double reference = 1e-8;   ///< deviation from a closed form or an implicit relation
};

/// The curve is given by coordinate jets, the unit field by frame-component
/// jets, both centered at the same u0. Jets need degree >= order + 1.
struct BjorlingProblem {
  GroupModel group = GroupModel::heisenberg();
  Triple<USeries> beta;
  Triple<USeries> V;
  ProblemKind kind = ProblemKind::TimelikeCurveOnTimelikeSurface;
  int order = 12;
  Grid grid;
  Tolerances tol;

  double center() const { return beta[0].center(); }
};

/// Checks g(V,V) = +-1, g(beta', V) = 0, jet degrees and the chart guard at
/// beta(u0). Throws InvalidProblem with the name of the violated invariant.
void validate(const BjorlingProblem& problem);

enum class Causal { Timelike, Spacelike, Lightlike, MixedCausal };

const char* to_string(Causal c);

/// Sign of g(beta', beta') sampled on [u_min, u_max] (and at the center).
Causal classify_curve(const GroupModel& group, const Triple<USeries>& beta, double u_min, double u_max,
                      double causal_tol = 1e-10, int samples = 65);

/// Initial data on v = 0 as K-series whose rows n >= 1 are zero.
struct InitialData {
  Triple<KSeries> phi0;  ///< coordinate components of df/dz along the curve
  Triple<KSeries> psi0;  ///< frame components
};

/// Throws CharacteristicData for lightlike curves and CausalMismatch when
/// the curve's causal type does not fit the problem kind.
InitialData initial_data(const BjorlingProblem& problem);

enum class ThirdComponent {
  March,         ///< psi3 evolves by its own equation
  LiftFromCone,  ///< psi3 = sqrt(psi1^2 + psi2^2) rebuilt at every v-order
};

/// Cauchy-Kovalevskaya marching in v of d(psi)/d(zbar) + G(psi) = 0, written
/// as psi_v = unit (psi_u + 2 G). Row n + 1 of every component is explicit in
/// rows <= n. Throws ConstraintDrift if the cone constraint fails on the
/// data or on the result.
Triple<KSeries> ck_march(const Tensor3& gamma, const Triple<KSeries>& psi0,
                         ThirdComponent third = ThirdComponent::March, double cone_tol = 1e-9);

/// Max coefficient of psi1^2 + psi2^2 - psi3^2 divided by max(1, max|psi|^2).
double relative_cone_residual(const Triple<KSeries>& psi);

/// f from psi by the group's staged "2 Re int ... dz" recipe, with
/// f(u0, 0) = base. UnsupportedRecipe for generic groups.
Triple<BiSeries> reconstruct_surface(const GroupModel& group, const Triple<KSeries>& psi, const CoordPoint& base);

/// 2 Re int phi dz as a real series vanishing at the center.
BiSeries integrate_real_part(const KSeries& phi);

/// v-range on which the grid residuals were found acceptable.
struct Strip {
  double v_min = 0.0;
  double v_max = 0.0;
  int halvings = 0;          ///< total dyadic shrink applied to the requested range
  bool chart_limited = false;
  bool residual_limited = false;
};

struct BjorlingSolution {
  ProblemKind kind = ProblemKind::TimelikeCurveOnTimelikeSurface;
  Triple<KSeries> phi0;
  Triple<KSeries> psi0;
  Triple<KSeries> psi;
  Triple<BiSeries> f;
  Strip strip;
  ResidualReport report;

  /// Every residual within the problem's tolerances.
  bool passes(const Tolerances& tol) const;
};

/// Frame-level part of the pipeline (validate, classify, initial data,
/// march). Works for generic groups.
struct FrameSolution {
  InitialData initial;
  Triple<KSeries> psi;
  WeierstrassResidual residual;
};
FrameSolution solve_frame(const BjorlingProblem& problem);

/// validate -> classify -> initial data -> march -> reconstruct -> verify.
/// The v-range is shrunk dyadically when the requested strip leaves the
/// chart or the residuals exceed tolerance, and the result is recorded in
/// the strip field.
BjorlingSolution solve_bjorling(const BjorlingProblem& problem);

}  // namespace bjorling
