#pragma once

#include <array>
#include <functional>
#include <optional>
#include <string>
#include <string_view>

#include <Eigen/Dense>

#include "bjorling/scalar.hpp"
#include "bjorling/series.hpp"

namespace bjorling {

template <class T>
using Triple = std::array<T, 3>;

/// Components in the left-invariant orthonormal frame {E1, E2, E3}; E1, E2
/// spacelike and E3 timelike.
template <class T>
using FrameVec = Triple<T>;
using FrameVector = FrameVec<double>;

/// Signature of the frame: <E_a, E_a>.
inline constexpr Triple<double> kSignature{1.0, 1.0, -1.0};

/// A point of the model chart.
struct CoordPoint {
  Triple<double> x{};

  double operator[](int i) const { return x[static_cast<std::size_t>(i)]; }
};

/// t[a][b][c] with zero-based indices; used for structure constants C_ab^c,
/// connection coefficients gamma_ab^c and Christoffel symbols Gamma^k_ij
/// (stored as t[k][i][j]).
using Tensor3 = std::array<std::array<std::array<double, 3>, 3>, 3>;

/// Lorentzian cross product in frame components.
template <class T>
FrameVec<T> lorentz_cross(const FrameVec<T>& y, const FrameVec<T>& w) {
  return {y[1] * w[2] - w[1] * y[2], y[2] * w[0] - w[2] * y[0], y[1] * w[0] - w[1] * y[0]};
}

/// g(Y, W) = y1 w1 + y2 w2 - y3 w3, bilinear (no conjugation for K-values).
template <class T>
T metric_eval(const FrameVec<T>& y, const FrameVec<T>& w) {
  return y[0] * w[0] + y[1] * w[1] - y[2] * w[2];
}

struct ConnectionTables {
  Tensor3 L{};      ///< (C_ab^c - C_bc^a e_a e_c - C_ac^b e_b e_c)
  Tensor3 gamma{};  ///< L / 2, so that nabla_{E_a} E_b = sum_c gamma_ab^c E_c
};

/// Levi-Civita connection of a left-invariant Lorentzian metric from its
/// structure constants. Throws Usage if C is not antisymmetric in a, b.
ConnectionTables connection_coeffs(const Tensor3& C);

/// A(x) = A0 + x1 A1 + x2 A2 + x3 A3, the matrix with phi_a = sum_b A_ab psi_b
/// (coordinate components from frame components). Every built-in frame is
/// affine in its chart.
struct AffineFrame {
  Eigen::Matrix3d constant = Eigen::Matrix3d::Identity();
  std::array<Eigen::Matrix3d, 3> linear{Eigen::Matrix3d::Zero(), Eigen::Matrix3d::Zero(),
                                        Eigen::Matrix3d::Zero()};

  Eigen::Matrix3d at(const CoordPoint& p) const;
};

struct FrameMatrices {
  Eigen::Matrix3d A;
  Eigen::Matrix3d A_inv;
};

enum class GroupKind { Heisenberg, DeSitter, H2xR, Generic };

std::string_view to_string(GroupKind kind);
/// "heisenberg" | "desitter" | "h2xr" | "generic"
GroupKind parse_group_kind(std::string_view name);

/// Immutable descriptor of a three-dimensional Lie group with a
/// left-invariant Lorentzian metric, in a fixed chart.
class GroupModel {
 public:
  static GroupModel heisenberg();
  static GroupModel de_sitter();
  static GroupModel h2xr();
  /// Connection computed from C; A defaults to the identity frame. Supports
  /// marching and residual checks, not surface reconstruction.
  static GroupModel generic(const Tensor3& C, AffineFrame frame = {});
  static GroupModel builtin(GroupKind kind);

  GroupKind kind() const { return kind_; }
  std::string_view name() const { return to_string(kind_); }
  const Tensor3& structure() const { return C_; }
  const Tensor3& gamma() const { return gamma_; }
  const AffineFrame& frame() const { return frame_; }
  bool has_recipe() const { return kind_ != GroupKind::Generic; }

  /// Chart guard (x3 > 0 for de Sitter, x2 > 0 for H2xR, det A != 0 otherwise).
  bool in_domain(const CoordPoint& p) const;
  /// A(x) and its inverse; DomainError outside the chart.
  FrameMatrices frame_matrix(const CoordPoint& p) const;
  /// g_ij in coordinates: A^-T diag(1, 1, -1) A^-1.
  Eigen::Matrix3d coord_metric(const CoordPoint& p) const;

  /// Frame components A(point)^-1 vec of a coordinate vector field along a
  /// series-valued point. A is inverted through its adjugate and the series
  /// reciprocal of det A.
  Triple<BiSeries> to_frame(const Triple<BiSeries>& point, const Triple<BiSeries>& vec) const;
  /// Coordinate components A(point) vec of a frame-component field.
  Triple<BiSeries> to_coords(const Triple<BiSeries>& point, const Triple<BiSeries>& vec) const;

 private:
  std::array<std::array<BiSeries, 3>, 3> matrix_along(const Triple<BiSeries>& point) const;

  GroupModel(GroupKind kind, const Tensor3& C, const Tensor3& gamma, AffineFrame frame);

  GroupKind kind_;
  Tensor3 C_;
  Tensor3 gamma_;
  AffineFrame frame_;
};

/// G_c = sum_{a,b} gamma_ab^c conj(psi_a) psi_b; the Weierstrass system is
/// d(psi_c)/d(zbar) + G_c = 0.
Triple<KScalar> pde_rhs(const GroupModel& group, const Triple<KScalar>& psi);
Triple<KSeries> pde_rhs(const Tensor3& gamma, const Triple<KSeries>& psi);

using MetricField = std::function<Eigen::Matrix3d(const Triple<double>&)>;

/// Gamma^k_ij (stored [k][i][j]) from central differences of g_ij with step h.
Tensor3 christoffels_numeric(const MetricField& metric, const Triple<double>& x, double h);

/// Same, for a group's coordinate metric. Default h = 1e-5 * max(1, |x|).
/// DomainError if x or any stencil point leaves the chart.
Tensor3 christoffels_numeric(const GroupModel& group, const CoordPoint& x, std::optional<double> h = {});

}  // namespace bjorling
