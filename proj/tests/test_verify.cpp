#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <cmath>

#include "bjorling/corpus.hpp"
#include "bjorling/solver.hpp"
#include "bjorling/verify.hpp"
#include "support.hpp"

using namespace bjorling;

namespace {

const double c = 1.0;

Grid grid(double u0, double u1, double v0, double v1) {
  Grid g;
  g.u_min = u0;
  g.u_max = u1;
  g.v_min = v0;
  g.v_max = v1;
  g.nu = g.nv = 9;
  return g;
}

struct ClosedForm {
  GroupModel group;
  ProblemKind kind;
  SurfaceMap f;
  Grid grid;
};

std::vector<ClosedForm> closed_forms() {
  return {
      {GroupModel::heisenberg(), ProblemKind::TimelikeCurveOnTimelikeSurface,
       [](double u, double v) {
         return Triple<double>{std::exp(v) * std::cosh(u), c, std::exp(v) * (-(c / 2) * std::cosh(u) + std::sinh(u))};
       },
       grid(-1, 1, -0.5, 0.5)},
      {GroupModel::de_sitter(), ProblemKind::SpacelikeCurveOnTimelikeSurface,
       [](double u, double v) {
         return Triple<double>{std::exp(-v) * std::sinh(u), c, std::exp(-v) * std::cosh(u)};
       },
       grid(-1, 1, -0.5, 0.5)},
      {GroupModel::h2xr(), ProblemKind::SpacelikeSurface,
       [](double u, double v) { return Triple<double>{std::exp(v) * std::cos(u), std::exp(v) * std::sin(u), c}; },
       grid(0.8, 2.3, -0.5, 0.5)},
      // Saddle: f = (4u, -4Q(v), -8uQ(v)), Q = cosh(4v + a)/4.
      {GroupModel::heisenberg(), ProblemKind::TimelikeCurveOnTimelikeSurface,
       [](double u, double v) {
         const double Q = std::cosh(4 * v + std::acosh(2.0)) / 4;
         return Triple<double>{4 * u, -4 * Q, -8 * u * Q};
       },
       grid(-0.5, 0.5, -0.2, 0.2)},
  };
}

}  // namespace

TEST_CASE("tension residual of closed-form minimal surfaces is O(h^2)") {
  for (const auto& cf : closed_forms()) {
    const double r1 = mean_curvature_numeric(cf.group, cf.f, cf.kind, cf.grid, 1e-3);
    const double r2 = mean_curvature_numeric(cf.group, cf.f, cf.kind, cf.grid, 5e-4);
    double scale = 0.0;
    for (int i = 0; i < cf.grid.nu; ++i)
      for (int j = 0; j < cf.grid.nv; ++j)
        for (double x : cf.f(cf.grid.u(i), cf.grid.v(j))) scale = std::max(scale, std::abs(x));
    CHECK(r1 <= 1e-4);
    CHECK((r2 <= r1 / 3.0 || std::max(r1, r2) <= testing::fd_rounding_floor(scale, 5e-4)));
  }
}

TEST_CASE("tension residual detects non-minimal surfaces") {
  const SurfaceMap probe = [](double u, double v) { return Triple<double>{u, c + u * u, 1 + v}; };
  const double r = mean_curvature_numeric(GroupModel::de_sitter(), probe, ProblemKind::TimelikeCurveOnTimelikeSurface,
                                          grid(-0.2, 0.2, -0.2, 0.2), 1e-3);
  CHECK(r > 0.1);
  // A round sphere-like cap is not minimal in the Heisenberg group either.
  const SurfaceMap bowl = [](double u, double v) { return Triple<double>{u, v, u * u + v * v}; };
  CHECK(mean_curvature_numeric(GroupModel::heisenberg(), bowl, ProblemKind::SpacelikeSurface,
                               grid(-0.2, 0.2, -0.2, 0.2), 1e-3) > 0.1);
}

TEST_CASE("conformality defect") {
  const FrameVector a{1, 0, 0}, b{0, 0, 1};
  CHECK(conformality_defect(a, b, ProblemKind::TimelikeCurveOnTimelikeSurface) == 0.0);
  CHECK(conformality_defect(a, FrameVector{0, 1, 0}, ProblemKind::SpacelikeSurface) == 0.0);
  CHECK(conformality_defect(a, FrameVector{0, 2, 0}, ProblemKind::SpacelikeSurface) == doctest::Approx(3.0 / 4.0));

  const BjorlingSolution s = solve_bjorling(parse_problem(find_example("desitter_plane")->problem).problem);
  Triple<BiSeries> f = s.f;
  CHECK(conformality_check(GroupModel::de_sitter(), f, s.kind, s.report.grid) < 1e-10);
  f[0] = 1.1 * f[0];
  CHECK(conformality_check(GroupModel::de_sitter(), f, s.kind, s.report.grid) > 1e-2);
}

TEST_CASE("Weierstrass residuals") {
  const BjorlingSolution s = solve_bjorling(parse_problem(find_example("heisenberg_vertical_plane")->problem).problem);
  const Tensor3& gamma = GroupModel::heisenberg().gamma();
  const WeierstrassResidual r = residual_weierstrass(gamma, s.psi, s.report.grid);
  CHECK(r.cone < 1e-12);
  CHECK(r.pde < 1e-12);
  CHECK(r.sign.consistent);
  CHECK(r.sign.at_base == doctest::Approx(-0.5));  // g(beta', beta') / 2 = -1/2
  Triple<KSeries> bent = s.psi;
  bent[1] = bent[1] + KSeries::from_real(BiSeries::v_var(0.0, bent[1].order()), Mode::Paracomplex);
  const WeierstrassResidual rb = residual_weierstrass(gamma, bent, s.report.grid);
  CHECK(rb.pde > 0.1);
  CHECK(rb.cone > 0.1);
}

TEST_CASE("hermitian norm uses the algebra's modulus") {
  const Mode p = Mode::Paracomplex, q = Mode::Complex;
  CHECK(hermitian_norm({KScalar{1, 2, p}, KScalar{0, 0, p}, KScalar{0, 1, p}}) == doctest::Approx(-3 + 1));
  CHECK(hermitian_norm({KScalar{1, 2, q}, KScalar{0, 0, q}, KScalar{0, 1, q}}) == doctest::Approx(5 - 1));
}

TEST_CASE("boundary check reports curve, normal and orientation") {
  const BjorlingProblem p = parse_problem(find_example("h2xr_plane")->problem).problem;
  const BjorlingSolution s = solve_bjorling(p);
  const BoundaryResidual plus = normal_boundary_check(p.group, s.f, p.beta, p.V, s.report.grid);
  CHECK(plus.curve < 1e-14);
  CHECK(plus.normal < 1e-12);
  CHECK_FALSE(plus.flipped);
  const Triple<USeries> minusV{-1.0 * p.V[0], -1.0 * p.V[1], -1.0 * p.V[2]};
  const BoundaryResidual minus = normal_boundary_check(p.group, s.f, p.beta, minusV, s.report.grid);
  CHECK(minus.flipped);
  CHECK(minus.normal < 1e-12);

  const int N = 4;
  const Triple<BiSeries> line{BiSeries::u_var(0.0, N), BiSeries::constant(0.0, N, 1.0), BiSeries::constant(0.0, N, 1.0)};
  CHECK_THROWS_CODE(normal_boundary_check(p.group, line, p.beta, p.V, grid(-0.1, 0.1, 0, 0)), ErrorCode::DegenerateFrame);
}

TEST_CASE("closed-form comparison") {
  const int N = 6;
  const Triple<BiSeries> f{BiSeries::u_var(0.0, N), BiSeries::v_var(0.0, N), BiSeries::constant(0.0, N, 2.0)};
  const SurfaceMap ref = [](double u, double v) { return Triple<double>{u, v, 2.0 + 1e-3 * u}; };
  CHECK(compare_closed_form(f, ref, grid(-1, 1, -1, 1)) == doctest::Approx(1e-3));
}
