#include "bjorling/group.hpp"

#include <cmath>
#include <sstream>

namespace bjorling {

namespace {

Tensor3 zero_tensor() { return Tensor3{}; }

std::string describe(const CoordPoint& p) {
  std::ostringstream os;
  os << "(" << p[0] << ", " << p[1] << ", " << p[2] << ")";
  return os.str();
}

}  // namespace

std::string_view to_string(GroupKind kind) {
  switch (kind) {
    case GroupKind::Heisenberg: return "heisenberg";
    case GroupKind::DeSitter: return "desitter";
    case GroupKind::H2xR: return "h2xr";
    case GroupKind::Generic: return "generic";
  }
  return "generic";
}

GroupKind parse_group_kind(std::string_view name) {
  if (name == "heisenberg") return GroupKind::Heisenberg;
  if (name == "desitter") return GroupKind::DeSitter;
  if (name == "h2xr") return GroupKind::H2xR;
  if (name == "generic") return GroupKind::Generic;
  fail(ErrorCode::Parse, "unknown group '" + std::string(name) + "' (expected heisenberg, desitter, h2xr or generic)");
}

ConnectionTables connection_coeffs(const Tensor3& C) {
  for (int a = 0; a < 3; ++a)
    for (int b = 0; b < 3; ++b)
      for (int c = 0; c < 3; ++c)
        if (C[a][b][c] != -C[b][a][c]) {
          fail(ErrorCode::Usage, "structure constants are not antisymmetric in the lower indices");
        }
  ConnectionTables t;
  const auto& e = kSignature;
  for (int a = 0; a < 3; ++a)
    for (int b = 0; b < 3; ++b)
      for (int c = 0; c < 3; ++c) {
        t.L[a][b][c] = C[a][b][c] - C[b][c][a] * e[a] * e[c] - C[a][c][b] * e[b] * e[c];
        t.gamma[a][b][c] = 0.5 * t.L[a][b][c];
      }
  return t;
}

Eigen::Matrix3d AffineFrame::at(const CoordPoint& p) const {
  return constant + p[0] * linear[0] + p[1] * linear[1] + p[2] * linear[2];
}

GroupModel::GroupModel(GroupKind kind, const Tensor3& C, const Tensor3& gamma, AffineFrame frame)
    : kind_(kind), C_(C), gamma_(gamma), frame_(std::move(frame)) {}

GroupModel GroupModel::heisenberg() {
  // E1 = d_x - y/2 d_z, E2 = d_y + x/2 d_z, E3 = d_z;  [E1, E2] = E3.
  Tensor3 C = zero_tensor();
  C[0][1][2] = 1.0;
  C[1][0][2] = -1.0;
  Tensor3 g = zero_tensor();
  g[0][1][2] = 0.5;
  g[1][0][2] = -0.5;
  g[0][2][1] = 0.5;
  g[2][0][1] = 0.5;
  g[1][2][0] = -0.5;
  g[2][1][0] = -0.5;
  AffineFrame A;
  A.linear[0](2, 1) = 0.5;
  A.linear[1](2, 0) = -0.5;
  return {GroupKind::Heisenberg, C, g, A};
}

GroupModel GroupModel::de_sitter() {
  // E_a = x3 d_a on x3 > 0;  [E1, E3] = -E1, [E2, E3] = -E2.
  Tensor3 C = zero_tensor();
  C[0][2][0] = -1.0;
  C[2][0][0] = 1.0;
  C[1][2][1] = -1.0;
  C[2][1][1] = 1.0;
  Tensor3 g = zero_tensor();
  g[0][2][0] = -1.0;
  g[1][2][1] = -1.0;
  g[0][0][2] = -1.0;
  g[1][1][2] = -1.0;
  AffineFrame A;
  A.constant.setZero();
  A.linear[2].setIdentity();
  return {GroupKind::DeSitter, C, g, A};
}

GroupModel GroupModel::h2xr() {
  // E1 = x2 d_1, E2 = x2 d_2, E3 = d_3 on x2 > 0;  [E1, E2] = -E1.
  Tensor3 C = zero_tensor();
  C[0][1][0] = -1.0;
  C[1][0][0] = 1.0;
  Tensor3 g = zero_tensor();
  g[0][1][0] = -1.0;
  g[0][0][1] = 1.0;
  AffineFrame A;
  A.constant = Eigen::Vector3d(0.0, 0.0, 1.0).asDiagonal();
  A.linear[1] = Eigen::Vector3d(1.0, 1.0, 0.0).asDiagonal();
  return {GroupKind::H2xR, C, g, A};
}

GroupModel GroupModel::generic(const Tensor3& C, AffineFrame frame) {
  const ConnectionTables t = connection_coeffs(C);
  return {GroupKind::Generic, C, t.gamma, std::move(frame)};
}

GroupModel GroupModel::builtin(GroupKind kind) {
  switch (kind) {
    case GroupKind::Heisenberg: return heisenberg();
    case GroupKind::DeSitter: return de_sitter();
    case GroupKind::H2xR: return h2xr();
    case GroupKind::Generic: break;
  }
  fail(ErrorCode::Usage, "generic groups need explicit structure constants");
}

bool GroupModel::in_domain(const CoordPoint& p) const {
  switch (kind_) {
    case GroupKind::Heisenberg: return true;
    case GroupKind::DeSitter: return p[2] > 0.0;
    case GroupKind::H2xR: return p[1] > 0.0;
    case GroupKind::Generic: return std::abs(frame_.at(p).determinant()) > 1e-12;
  }
  return false;
}

FrameMatrices GroupModel::frame_matrix(const CoordPoint& p) const {
  if (!in_domain(p)) fail(ErrorCode::DomainError, "point " + describe(p) + " is outside the " + std::string(name()) + " chart");
  FrameMatrices m;
  m.A = frame_.at(p);
  m.A_inv = m.A.inverse();
  return m;
}

Eigen::Matrix3d GroupModel::coord_metric(const CoordPoint& p) const {
  const Eigen::Matrix3d Ai = frame_matrix(p).A_inv;
  const Eigen::Matrix3d eps = Eigen::Vector3d(kSignature[0], kSignature[1], kSignature[2]).asDiagonal();
  return Ai.transpose() * eps * Ai;
}

std::array<std::array<BiSeries, 3>, 3> GroupModel::matrix_along(const Triple<BiSeries>& point) const {
  const double center = point[0].center();
  const int order = std::min({point[0].order(), point[1].order(), point[2].order()});
  std::array<std::array<BiSeries, 3>, 3> A;
  for (int i = 0; i < 3; ++i)
    for (int j = 0; j < 3; ++j) {
      BiSeries e = BiSeries::constant(center, order, frame_.constant(i, j));
      for (int k = 0; k < 3; ++k) {
        const double s = frame_.linear[static_cast<std::size_t>(k)](i, j);
        if (s != 0.0) e = e + s * point[static_cast<std::size_t>(k)];
      }
      A[i][j] = e;
    }
  return A;
}

Triple<BiSeries> GroupModel::to_coords(const Triple<BiSeries>& point, const Triple<BiSeries>& vec) const {
  const auto A = matrix_along(point);
  Triple<BiSeries> out;
  for (int i = 0; i < 3; ++i) out[static_cast<std::size_t>(i)] = A[i][0] * vec[0] + A[i][1] * vec[1] + A[i][2] * vec[2];
  return out;
}

Triple<BiSeries> GroupModel::to_frame(const Triple<BiSeries>& point, const Triple<BiSeries>& vec) const {
  const auto A = matrix_along(point);
  // Cofactors; adj(A) = cof^T.
  auto cof = [&](int i, int j) {
    const int r0 = (i + 1) % 3, r1 = (i + 2) % 3, c0 = (j + 1) % 3, c1 = (j + 2) % 3;
    return A[r0][c0] * A[r1][c1] - A[r0][c1] * A[r1][c0];
  };
  std::array<std::array<BiSeries, 3>, 3> co;
  for (int i = 0; i < 3; ++i)
    for (int j = 0; j < 3; ++j) co[i][j] = cof(i, j);
  const BiSeries det = A[0][0] * co[0][0] + A[0][1] * co[0][1] + A[0][2] * co[0][2];
  const CoordPoint p0{{point[0].at(0, 0), point[1].at(0, 0), point[2].at(0, 0)}};
  if (!in_domain(p0)) fail(ErrorCode::DomainError, "curve base point " + describe(p0) + " is outside the chart");
  const BiSeries inv_det = reciprocal(det);
  Triple<BiSeries> out;
  for (int i = 0; i < 3; ++i) {
    BiSeries acc = co[0][i] * vec[0] + co[1][i] * vec[1] + co[2][i] * vec[2];
    out[static_cast<std::size_t>(i)] = inv_det * acc;
  }
  return out;
}

Triple<KScalar> pde_rhs(const GroupModel& group, const Triple<KScalar>& psi) {
  const Mode mode = psi[0].mode();
  Triple<KScalar> G{KScalar::real(0, mode), KScalar::real(0, mode), KScalar::real(0, mode)};
  const Tensor3& g = group.gamma();
  for (int a = 0; a < 3; ++a)
    for (int b = 0; b < 3; ++b) {
      const KScalar p = psi[static_cast<std::size_t>(a)].conj() * psi[static_cast<std::size_t>(b)];
      for (int c = 0; c < 3; ++c)
        if (g[a][b][c] != 0.0) G[static_cast<std::size_t>(c)] += g[a][b][c] * p;
    }
  return G;
}

Triple<KSeries> pde_rhs(const Tensor3& gamma, const Triple<KSeries>& psi) {
  const Mode mode = psi[0].mode();
  const int order = std::min({psi[0].order(), psi[1].order(), psi[2].order()});
  const double center = psi[0].center();
  Triple<KSeries> G{KSeries::zero(center, order, mode), KSeries::zero(center, order, mode),
                    KSeries::zero(center, order, mode)};
  for (int a = 0; a < 3; ++a)
    for (int b = 0; b < 3; ++b) {
      bool used = false;
      for (int c = 0; c < 3; ++c) used = used || gamma[a][b][c] != 0.0;
      if (!used) continue;
      const KSeries p = psi[static_cast<std::size_t>(a)].conj() * psi[static_cast<std::size_t>(b)];
      for (int c = 0; c < 3; ++c)
        if (gamma[a][b][c] != 0.0) G[static_cast<std::size_t>(c)] = G[static_cast<std::size_t>(c)] + gamma[a][b][c] * p;
    }
  return G;
}

Tensor3 christoffels_numeric(const MetricField& metric, const Triple<double>& x, double h) {
  // dg[l] = d g / d x_l
  std::array<Eigen::Matrix3d, 3> dg;
  for (std::size_t l = 0; l < 3; ++l) {
    Triple<double> xp = x, xm = x;
    xp[l] += h;
    xm[l] -= h;
    dg[l] = (metric(xp) - metric(xm)) / (2.0 * h);
  }
  const Eigen::Matrix3d ginv = metric(x).inverse();
  Tensor3 G{};
  for (int k = 0; k < 3; ++k)
    for (int i = 0; i < 3; ++i)
      for (int j = i; j < 3; ++j) {
        double s = 0.0;
        for (int l = 0; l < 3; ++l) {
          s += ginv(k, l) * (dg[static_cast<std::size_t>(i)](j, l) + dg[static_cast<std::size_t>(j)](i, l) -
                             dg[static_cast<std::size_t>(l)](i, j));
        }
        G[k][i][j] = G[k][j][i] = 0.5 * s;
      }
  return G;
}

Tensor3 christoffels_numeric(const GroupModel& group, const CoordPoint& x, std::optional<double> h) {
  const double norm = std::sqrt(x[0] * x[0] + x[1] * x[1] + x[2] * x[2]);
  const double step = h.value_or(1e-5 * std::max(1.0, norm));
  for (std::size_t l = 0; l < 3; ++l)
    for (double s : {-step, step}) {
      CoordPoint p = x;
      p.x[l] += s;
      if (!group.in_domain(p)) fail(ErrorCode::DomainError, "Christoffel stencil leaves the chart at " + describe(p));
    }
  return christoffels_numeric([&](const Triple<double>& p) { return group.coord_metric(CoordPoint{p}); }, x.x, step);
}

}  // namespace bjorling
