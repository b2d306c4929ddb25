#pragma once

#include <cstddef>
#include <functional>
#include <vector>

#include "bjorling/scalar.hpp"

namespace bjorling {

/// Univariate Taylor jet  sum_k c_k (u - center)^k,  k = 0..degree.
///
/// Used for curve data along the initial line v = 0 and for the ODE
/// generators of example profiles. Binary operations truncate to the smaller
/// degree and require equal centers.
class USeries {
 public:
  USeries() = default;
  USeries(double center, std::vector<double> coeffs);

  static USeries constant(double center, int degree, double value);
  /// The identity jet u itself: center + 1 * (u - center).
  static USeries variable(double center, int degree);

  int degree() const { return static_cast<int>(c_.size()) - 1; }
  double center() const { return center_; }
  const std::vector<double>& coeffs() const { return c_; }
  double operator[](int k) const { return c_[static_cast<std::size_t>(k)]; }
  double& operator[](int k) { return c_[static_cast<std::size_t>(k)]; }

  double eval(double u) const;
  USeries derivative() const;
  USeries truncated(int degree) const;
  /// Same center, zero-padded or truncated to the given degree.
  USeries resized(int degree) const;

  USeries operator-() const;
  friend USeries operator+(const USeries& a, const USeries& b);
  friend USeries operator-(const USeries& a, const USeries& b);
  friend USeries operator*(const USeries& a, const USeries& b);
  friend USeries operator*(double s, const USeries& a);
  friend USeries operator+(double s, const USeries& a);

 private:
  double center_ = 0.0;
  std::vector<double> c_{0.0};
};

USeries reciprocal(const USeries& a);
USeries exp(const USeries& a);
USeries log(const USeries& a);
USeries sin(const USeries& a);
USeries cos(const USeries& a);
USeries sinh(const USeries& a);
USeries cosh(const USeries& a);
/// a^p for real p. Non-integer p needs a positive constant term; negative p
/// needs a nonzero one. Violations raise DomainError.
USeries pow(const USeries& a, double p);
USeries sqrt(const USeries& a);

/// Taylor coefficients of the solution of y' = rhs(y), y(center) = y0.
///
/// rhs receives the jet of y known so far (degree k) and must return a jet
/// whose degree-k coefficient depends only on y_0..y_k, which holds for any
/// composition of the series operations in this header.
USeries ode_taylor(const std::function<USeries(const USeries&)>& rhs, double center, double y0,
                   int degree);

/// Truncated bivariate real power series  sum c[m][n] (u - u0)^m v^n  over
/// the total-degree triangle m + n <= order, centered at (u0, 0).
class BiSeries {
 public:
  BiSeries() : BiSeries(0.0, 0) {}
  BiSeries(double center_u, int order);

  static BiSeries constant(double center_u, int order, double value);
  static BiSeries u_var(double center_u, int order);
  static BiSeries v_var(double center_u, int order);
  /// Embeds a jet in u as the v-independent row n = 0.
  static BiSeries from_u(const USeries& a, int order);

  static constexpr std::size_t triangle_size(int order) {
    return static_cast<std::size_t>(order + 1) * static_cast<std::size_t>(order + 2) / 2;
  }
  static constexpr std::size_t index(int m, int n) {
    const auto d = static_cast<std::size_t>(m + n);
    return d * (d + 1) / 2 + static_cast<std::size_t>(n);
  }

  int order() const { return order_; }
  double center() const { return center_; }
  double at(int m, int n) const { return c_[index(m, n)]; }
  double& at(int m, int n) { return c_[index(m, n)]; }
  const std::vector<double>& coeffs() const { return c_; }

  double eval(double u, double v) const;
  BiSeries du() const;
  BiSeries dv() const;
  BiSeries truncated(int order) const;
  /// Restriction to v = 0 as a jet in u.
  USeries row0() const;
  double max_abs() const;

  BiSeries operator-() const;
  friend BiSeries operator+(const BiSeries& a, const BiSeries& b);
  friend BiSeries operator-(const BiSeries& a, const BiSeries& b);
  friend BiSeries operator*(const BiSeries& a, const BiSeries& b);
  friend BiSeries operator*(double s, const BiSeries& a);
  friend BiSeries operator+(double s, const BiSeries& a);

 private:
  double center_;
  int order_;
  std::vector<double> c_;
};

/// Largest |a_k - b_k| over the shared triangle.
double max_abs_diff(const BiSeries& a, const BiSeries& b);

BiSeries exp(const BiSeries& a);
BiSeries reciprocal(const BiSeries& a);

/// F with F(u0, 0) = 0, dF/du = fu and dF/dv = fv, one order above the
/// inputs. Throws NonIntegrable when d(fu)/dv and d(fv)/du disagree by more
/// than 1e-9 times max(1, largest input or compared coefficient).
BiSeries antidiff_exact(const BiSeries& fu, const BiSeries& fv);

enum class Derivative { U, V, Z, ZBar };

/// A K-valued series re + unit * im with both parts on the same triangle.
class KSeries {
 public:
  KSeries() = default;
  KSeries(BiSeries re, BiSeries im, Mode mode);

  static KSeries zero(double center_u, int order, Mode mode);
  static KSeries from_real(const BiSeries& re, Mode mode);
  static KSeries constant(double center_u, int order, const KScalar& value);

  const BiSeries& re() const { return re_; }
  const BiSeries& im() const { return im_; }
  BiSeries& re() { return re_; }
  BiSeries& im() { return im_; }
  Mode mode() const { return mode_; }
  int order() const { return re_.order(); }
  double center() const { return re_.center(); }

  KScalar coeff(int m, int n) const { return {re_.at(m, n), im_.at(m, n), mode_}; }
  void set(int m, int n, const KScalar& z);

  KScalar eval(double u, double v) const;
  KSeries conj() const;
  KSeries diff(Derivative which) const;
  KSeries truncated(int order) const;
  double max_abs() const;

  KSeries operator-() const;
  friend KSeries operator+(const KSeries& a, const KSeries& b);
  friend KSeries operator-(const KSeries& a, const KSeries& b);
  friend KSeries operator*(const KSeries& a, const KSeries& b);
  friend KSeries operator*(const KScalar& s, const KSeries& a);
  friend KSeries operator*(double s, const KSeries& a);
  /// Real series times K-series (used when a coordinate multiplies a frame
  /// component during reconstruction).
  friend KSeries operator*(const BiSeries& s, const KSeries& a);

 private:
  BiSeries re_;
  BiSeries im_;
  Mode mode_ = Mode::Paracomplex;
};

/// Multiplication by the imaginary unit: unit * (a + unit b) = unit^2 b + unit a.
KSeries times_unit(const KSeries& a);

/// Para-Cauchy-Riemann defect: largest coefficient of a_u - b_v and a_v - b_u.
double para_cr_residual(const KSeries& a);

/// The root r of a with r(u0, 0) = branch. branch^2 must match the constant
/// term of a (BranchError) and be invertible in K (DegenerateSqrt).
KSeries sqrt(const KSeries& a, const KScalar& branch);

}  // namespace bjorling
