#include "bjorling/series.hpp"

#include <algorithm>
#include <cmath>
#include <sstream>
#include <string>

namespace bjorling {

namespace {

void require_same_center(double a, double b) {
  if (a != b) {
    fail(ErrorCode::Usage, "series centers differ: " + std::to_string(a) + " vs " + std::to_string(b));
  }
}

bool is_integer(double p) { return std::floor(p) == p; }

}  // namespace

// ---------------------------------------------------------------------------
// USeries

USeries::USeries(double center, std::vector<double> coeffs) : center_(center), c_(std::move(coeffs)) {
  if (c_.empty()) c_.push_back(0.0);
}

USeries USeries::constant(double center, int degree, double value) {
  std::vector<double> c(static_cast<std::size_t>(degree) + 1, 0.0);
  c[0] = value;
  return {center, std::move(c)};
}

USeries USeries::variable(double center, int degree) {
  std::vector<double> c(static_cast<std::size_t>(degree) + 1, 0.0);
  c[0] = center;
  if (degree >= 1) c[1] = 1.0;
  return {center, std::move(c)};
}

double USeries::eval(double u) const {
  const double x = u - center_;
  double acc = 0.0;
  for (auto it = c_.rbegin(); it != c_.rend(); ++it) acc = acc * x + *it;
  return acc;
}

USeries USeries::derivative() const {
  if (degree() == 0) return constant(center_, 0, 0.0);
  std::vector<double> d(c_.size() - 1);
  for (std::size_t k = 1; k < c_.size(); ++k) d[k - 1] = static_cast<double>(k) * c_[k];
  return {center_, std::move(d)};
}

USeries USeries::truncated(int degree) const {
  return resized(std::min(degree, this->degree()));
}

USeries USeries::resized(int degree) const {
  std::vector<double> c(static_cast<std::size_t>(degree) + 1, 0.0);
  for (int k = 0; k <= std::min(degree, this->degree()); ++k) c[static_cast<std::size_t>(k)] = (*this)[k];
  return {center_, std::move(c)};
}

USeries USeries::operator-() const { return -1.0 * *this; }

USeries operator+(const USeries& a, const USeries& b) {
  require_same_center(a.center_, b.center_);
  const int n = std::min(a.degree(), b.degree());
  USeries r = a.truncated(n);
  for (int k = 0; k <= n; ++k) r[k] += b[k];
  return r;
}

USeries operator-(const USeries& a, const USeries& b) { return a + (-b); }

USeries operator*(const USeries& a, const USeries& b) {
  require_same_center(a.center_, b.center_);
  const int n = std::min(a.degree(), b.degree());
  USeries r = USeries::constant(a.center_, n, 0.0);
  for (int i = 0; i <= n; ++i) {
    for (int j = 0; i + j <= n; ++j) r[i + j] += a[i] * b[j];
  }
  return r;
}

USeries operator*(double s, const USeries& a) {
  USeries r = a;
  for (auto& x : r.c_) x *= s;
  return r;
}

USeries operator+(double s, const USeries& a) {
  USeries r = a;
  r[0] += s;
  return r;
}

USeries reciprocal(const USeries& a) {
  if (a[0] == 0.0) fail(ErrorCode::NotInvertible, "reciprocal of a jet with zero constant term");
  USeries r = USeries::constant(a.center(), a.degree(), 1.0 / a[0]);
  for (int k = 1; k <= a.degree(); ++k) {
    double s = 0.0;
    for (int j = 1; j <= k; ++j) s += a[j] * r[k - j];
    r[k] = -s / a[0];
  }
  return r;
}

USeries exp(const USeries& a) {
  USeries e = USeries::constant(a.center(), a.degree(), std::exp(a[0]));
  for (int k = 1; k <= a.degree(); ++k) {
    double s = 0.0;
    for (int j = 1; j <= k; ++j) s += j * a[j] * e[k - j];
    e[k] = s / k;
  }
  return e;
}

USeries log(const USeries& a) {
  if (a[0] <= 0.0) fail(ErrorCode::DomainError, "log of a jet with non-positive constant term");
  USeries l = USeries::constant(a.center(), a.degree(), std::log(a[0]));
  for (int k = 1; k <= a.degree(); ++k) {
    double s = 0.0;
    for (int j = 1; j < k; ++j) s += j * l[j] * a[k - j];
    l[k] = (a[k] - s / k) / a[0];
  }
  return l;
}

namespace {

// s' = c a', c' = sign * s a'. sign = -1 gives (sin, cos), +1 gives (sinh, cosh).
std::pair<USeries, USeries> trig_pair(const USeries& a, double sign) {
  const double a0 = a[0];
  USeries s = USeries::constant(a.center(), a.degree(), sign < 0 ? std::sin(a0) : std::sinh(a0));
  USeries c = USeries::constant(a.center(), a.degree(), sign < 0 ? std::cos(a0) : std::cosh(a0));
  for (int k = 1; k <= a.degree(); ++k) {
    double ss = 0.0;
    double cc = 0.0;
    for (int j = 1; j <= k; ++j) {
      ss += j * a[j] * c[k - j];
      cc += j * a[j] * s[k - j];
    }
    s[k] = ss / k;
    c[k] = sign * cc / k;
  }
  return {s, c};
}

}  // namespace

USeries sin(const USeries& a) { return trig_pair(a, -1.0).first; }
USeries cos(const USeries& a) { return trig_pair(a, -1.0).second; }
USeries sinh(const USeries& a) { return trig_pair(a, 1.0).first; }
USeries cosh(const USeries& a) { return trig_pair(a, 1.0).second; }

USeries pow(const USeries& a, double p) {
  if (p == 0.0) return USeries::constant(a.center(), a.degree(), 1.0);
  const double a0 = a[0];
  if (a0 == 0.0) {
    if (p > 0.0 && is_integer(p)) {
      USeries r = USeries::constant(a.center(), a.degree(), 1.0);
      for (int i = 0; i < static_cast<int>(p); ++i) r = r * a;
      return r;
    }
    fail(ErrorCode::DomainError, "power " + std::to_string(p) + " of a jet vanishing at its center");
  }
  if (a0 < 0.0 && !is_integer(p)) {
    fail(ErrorCode::DomainError, "non-integer power " + std::to_string(p) + " of a jet with negative value " +
                                     std::to_string(a0));
  }
  // a b' = p a' b  =>  b_k = 1/(k a0) sum_{j=1..k} ((p + 1) j - k) a_j b_{k-j}
  USeries b = USeries::constant(a.center(), a.degree(), std::pow(a0, p));
  for (int k = 1; k <= a.degree(); ++k) {
    double s = 0.0;
    for (int j = 1; j <= k; ++j) s += ((p + 1.0) * j - k) * a[j] * b[k - j];
    b[k] = s / (k * a0);
  }
  return b;
}

USeries sqrt(const USeries& a) {
  if (a[0] < 0.0) fail(ErrorCode::DomainError, "square root of negative leading value " + std::to_string(a[0]));
  return pow(a, 0.5);
}

USeries ode_taylor(const std::function<USeries(const USeries&)>& rhs, double center, double y0, int degree) {
  USeries y = USeries::constant(center, degree, 0.0);
  y[0] = y0;
  for (int k = 0; k < degree; ++k) {
    const USeries f = rhs(y.truncated(k));
    if (f.degree() < k) fail(ErrorCode::Usage, "ODE right-hand side lost degree");
    y[k + 1] = f[k] / (k + 1);
  }
  return y;
}

// ---------------------------------------------------------------------------
// BiSeries

BiSeries::BiSeries(double center_u, int order)
    : center_(center_u), order_(order), c_(triangle_size(order), 0.0) {
  if (order < 0) fail(ErrorCode::Usage, "series order must be non-negative");
}

BiSeries BiSeries::constant(double center_u, int order, double value) {
  BiSeries r(center_u, order);
  r.at(0, 0) = value;
  return r;
}

BiSeries BiSeries::u_var(double center_u, int order) {
  BiSeries r = constant(center_u, order, center_u);
  if (order >= 1) r.at(1, 0) = 1.0;
  return r;
}

BiSeries BiSeries::v_var(double center_u, int order) {
  BiSeries r(center_u, order);
  if (order >= 1) r.at(0, 1) = 1.0;
  return r;
}

BiSeries BiSeries::from_u(const USeries& a, int order) {
  BiSeries r(a.center(), order);
  for (int m = 0; m <= std::min(order, a.degree()); ++m) r.at(m, 0) = a[m];
  return r;
}

double BiSeries::eval(double u, double v) const {
  const double x = u - center_;
  // Horner in v for each u-power, then Horner in u.
  double acc = 0.0;
  for (int m = order_; m >= 0; --m) {
    double row = 0.0;
    for (int n = order_ - m; n >= 0; --n) row = row * v + at(m, n);
    acc = acc * x + row;
  }
  return acc;
}

BiSeries BiSeries::du() const {
  if (order_ == 0) fail(ErrorCode::Usage, "cannot differentiate an order-0 series");
  BiSeries r(center_, order_ - 1);
  for (int d = 0; d <= order_ - 1; ++d) {
    for (int n = 0; n <= d; ++n) r.at(d - n, n) = (d - n + 1) * at(d - n + 1, n);
  }
  return r;
}

BiSeries BiSeries::dv() const {
  if (order_ == 0) fail(ErrorCode::Usage, "cannot differentiate an order-0 series");
  BiSeries r(center_, order_ - 1);
  for (int d = 0; d <= order_ - 1; ++d) {
    for (int n = 0; n <= d; ++n) r.at(d - n, n) = (n + 1) * at(d - n, n + 1);
  }
  return r;
}

BiSeries BiSeries::truncated(int order) const {
  const int o = std::min(order, order_);
  BiSeries r(center_, o);
  std::copy_n(c_.begin(), triangle_size(o), r.c_.begin());
  return r;
}

USeries BiSeries::row0() const {
  std::vector<double> c(static_cast<std::size_t>(order_) + 1);
  for (int m = 0; m <= order_; ++m) c[static_cast<std::size_t>(m)] = at(m, 0);
  return {center_, std::move(c)};
}

double BiSeries::max_abs() const {
  double m = 0.0;
  for (double x : c_) m = std::max(m, std::abs(x));
  return m;
}

BiSeries BiSeries::operator-() const { return -1.0 * *this; }

BiSeries operator+(const BiSeries& a, const BiSeries& b) {
  require_same_center(a.center_, b.center_);
  BiSeries r = a.truncated(std::min(a.order_, b.order_));
  for (std::size_t k = 0; k < r.c_.size(); ++k) r.c_[k] += b.c_[k];
  return r;
}

BiSeries operator-(const BiSeries& a, const BiSeries& b) {
  require_same_center(a.center_, b.center_);
  BiSeries r = a.truncated(std::min(a.order_, b.order_));
  for (std::size_t k = 0; k < r.c_.size(); ++k) r.c_[k] -= b.c_[k];
  return r;
}

BiSeries operator*(const BiSeries& a, const BiSeries& b) {
  require_same_center(a.center_, b.center_);
  const int order = std::min(a.order_, b.order_);
  BiSeries r(a.center_, order);
  for (int da = 0; da <= order; ++da) {
    for (int na = 0; na <= da; ++na) {
      const double x = a.at(da - na, na);
      if (x == 0.0) continue;
      for (int db = 0; da + db <= order; ++db) {
        for (int nb = 0; nb <= db; ++nb) {
          r.at(da - na + db - nb, na + nb) += x * b.at(db - nb, nb);
        }
      }
    }
  }
  return r;
}

BiSeries operator*(double s, const BiSeries& a) {
  BiSeries r = a;
  for (auto& x : r.c_) x *= s;
  return r;
}

BiSeries operator+(double s, const BiSeries& a) {
  BiSeries r = a;
  r.at(0, 0) += s;
  return r;
}

double max_abs_diff(const BiSeries& a, const BiSeries& b) { return (a - b).max_abs(); }

BiSeries exp(const BiSeries& a) {
  const int order = a.order();
  BiSeries e = BiSeries::constant(a.center(), order, std::exp(a.at(0, 0)));
  // e_u = a_u e fixes every coefficient with m >= 1; e_v = a_v e fixes the m = 0 column.
  for (int d = 1; d <= order; ++d) {
    for (int n = 0; n <= d; ++n) {
      const int m = d - n;
      double s = 0.0;
      if (m >= 1) {
        for (int i = 1; i <= m; ++i)
          for (int j = 0; j <= n; ++j) s += i * a.at(i, j) * e.at(m - i, n - j);
        e.at(m, n) = s / m;
      } else {
        for (int j = 1; j <= n; ++j) s += j * a.at(0, j) * e.at(0, n - j);
        e.at(0, n) = s / n;
      }
    }
  }
  return e;
}

BiSeries reciprocal(const BiSeries& a) {
  const double a0 = a.at(0, 0);
  if (a0 == 0.0) fail(ErrorCode::NotInvertible, "reciprocal of a series with zero constant term");
  BiSeries r = BiSeries::constant(a.center(), a.order(), 1.0 / a0);
  for (int d = 1; d <= a.order(); ++d) {
    for (int n = 0; n <= d; ++n) {
      const int m = d - n;
      double s = 0.0;
      for (int i = 0; i <= m; ++i)
        for (int j = 0; j <= n; ++j)
          if (i + j > 0) s += a.at(i, j) * r.at(m - i, n - j);
      r.at(m, n) = -s / a0;
    }
  }
  return r;
}

BiSeries antidiff_exact(const BiSeries& fu, const BiSeries& fv) {
  require_same_center(fu.center(), fv.center());
  const int order = std::min(fu.order(), fv.order());
  // Compatibility: (n+1) fu[m][n+1] == (m+1) fv[m+1][n] on the shared triangle.
  double worst = 0.0;
  double scale = std::max({1.0, fu.max_abs(), fv.max_abs()});
  for (int d = 0; d + 1 <= order; ++d) {
    for (int n = 0; n <= d; ++n) {
      const int m = d - n;
      const double lhs = (n + 1) * fu.at(m, n + 1);
      const double rhs = (m + 1) * fv.at(m + 1, n);
      worst = std::max(worst, std::abs(lhs - rhs));
      scale = std::max({scale, std::abs(lhs), std::abs(rhs)});
    }
  }
  if (worst > 1e-9 * scale) {
    std::ostringstream msg;
    msg << "partials are not compatible: curl defect " << worst << " at scale " << scale;
    fail(ErrorCode::NonIntegrable, msg.str());
  }
  BiSeries f(fu.center(), order + 1);
  for (int d = 1; d <= order + 1; ++d) {
    for (int n = 0; n <= d; ++n) {
      const int m = d - n;
      f.at(m, n) = m >= 1 ? fu.at(m - 1, n) / m : fv.at(0, n - 1) / n;
    }
  }
  return f;
}

// ---------------------------------------------------------------------------
// KSeries

KSeries::KSeries(BiSeries re, BiSeries im, Mode mode) : re_(std::move(re)), im_(std::move(im)), mode_(mode) {
  require_same_center(re_.center(), im_.center());
  if (re_.order() != im_.order()) fail(ErrorCode::Usage, "real and imaginary parts differ in order");
}

KSeries KSeries::zero(double center_u, int order, Mode mode) {
  return {BiSeries(center_u, order), BiSeries(center_u, order), mode};
}

KSeries KSeries::from_real(const BiSeries& re, Mode mode) {
  return {re, BiSeries(re.center(), re.order()), mode};
}

KSeries KSeries::constant(double center_u, int order, const KScalar& value) {
  return {BiSeries::constant(center_u, order, value.re()), BiSeries::constant(center_u, order, value.im()),
          value.mode()};
}

void KSeries::set(int m, int n, const KScalar& z) {
  require_same_mode(mode_, z.mode());
  re_.at(m, n) = z.re();
  im_.at(m, n) = z.im();
}

KScalar KSeries::eval(double u, double v) const { return {re_.eval(u, v), im_.eval(u, v), mode_}; }

KSeries KSeries::conj() const { return {re_, -im_, mode_}; }

KSeries KSeries::diff(Derivative which) const {
  switch (which) {
    case Derivative::U: return {re_.du(), im_.du(), mode_};
    case Derivative::V: return {re_.dv(), im_.dv(), mode_};
    case Derivative::Z:
    case Derivative::ZBar: {
      // Paracomplex: d/dz = (d_u + tau d_v)/2.  Complex: d/dz = (d_u - i d_v)/2.
      // d/dzbar flips the sign in front of the unit.
      double sign = mode_ == Mode::Paracomplex ? 1.0 : -1.0;
      if (which == Derivative::ZBar) sign = -sign;
      const KSeries u = diff(Derivative::U);
      const KSeries v = diff(Derivative::V);
      return 0.5 * (u + sign * times_unit(v));
    }
  }
  return *this;
}

KSeries KSeries::truncated(int order) const { return {re_.truncated(order), im_.truncated(order), mode_}; }

double KSeries::max_abs() const { return std::max(re_.max_abs(), im_.max_abs()); }

KSeries KSeries::operator-() const { return {-re_, -im_, mode_}; }

KSeries operator+(const KSeries& a, const KSeries& b) {
  require_same_mode(a.mode_, b.mode_);
  return {a.re_ + b.re_, a.im_ + b.im_, a.mode_};
}

KSeries operator-(const KSeries& a, const KSeries& b) {
  require_same_mode(a.mode_, b.mode_);
  return {a.re_ - b.re_, a.im_ - b.im_, a.mode_};
}

KSeries operator*(const KSeries& a, const KSeries& b) {
  require_same_mode(a.mode_, b.mode_);
  const double s = unit_square(a.mode_);
  return {a.re_ * b.re_ + s * (a.im_ * b.im_), a.re_ * b.im_ + a.im_ * b.re_, a.mode_};
}

KSeries operator*(const KScalar& s, const KSeries& a) {
  require_same_mode(s.mode(), a.mode_);
  const double u2 = unit_square(a.mode_);
  return {s.re() * a.re_ + (u2 * s.im()) * a.im_, s.re() * a.im_ + s.im() * a.re_, a.mode_};
}

KSeries operator*(double s, const KSeries& a) { return {s * a.re_, s * a.im_, a.mode_}; }

KSeries operator*(const BiSeries& s, const KSeries& a) { return {s * a.re_, s * a.im_, a.mode_}; }

KSeries times_unit(const KSeries& a) { return {unit_square(a.mode()) * a.im(), a.re(), a.mode()}; }

double para_cr_residual(const KSeries& a) {
  if (a.mode() != Mode::Paracomplex) fail(ErrorCode::Usage, "para-Cauchy-Riemann check needs paracomplex data");
  const BiSeries r1 = a.re().du() - a.im().dv();
  const BiSeries r2 = a.re().dv() - a.im().du();
  return std::max(r1.max_abs(), r2.max_abs());
}

KSeries sqrt(const KSeries& a, const KScalar& branch) {
  require_same_mode(a.mode(), branch.mode());
  const KScalar a0 = a.coeff(0, 0);
  const KScalar miss = branch * branch - a0;
  const double scale = std::max(1.0, std::hypot(a0.re(), a0.im()));
  if (std::hypot(miss.re(), miss.im()) > 1e-10 * scale) {
    fail(ErrorCode::BranchError, "branch does not square to the constant term");
  }
  if (branch.is_zero() || branch.is_zero_divisor()) {
    fail(ErrorCode::DegenerateSqrt, "square-root branch is not invertible");
  }
  const KScalar inv2r0 = (2.0 * branch).inverse();
  const Mode mode = a.mode();
  KSeries r = KSeries::zero(a.center(), a.order(), mode);
  r.set(0, 0, branch);
  for (int d = 1; d <= a.order(); ++d) {
    for (int n = 0; n <= d; ++n) {
      const int m = d - n;
      KScalar s = a.coeff(m, n);
      for (int i = 0; i <= m; ++i) {
        for (int j = 0; j <= n; ++j) {
          if ((i == 0 && j == 0) || (i == m && j == n)) continue;
          s -= r.coeff(i, j) * r.coeff(m - i, n - j);
        }
      }
      r.set(m, n, s * inv2r0);
    }
  }
  return r;
}

}  // namespace bjorling
