#pragma once

#include <cmath>
#include <iosfwd>
#include <utility>

#include "bjorling/error.hpp"

namespace bjorling {

/// Which two-dimensional real algebra a value lives in: the complex numbers
/// (unit i, i^2 = -1) or the paracomplex numbers (unit tau, tau^2 = +1).
enum class Mode { Complex, Paracomplex };

const char* to_string(Mode mode);

/// Square of the imaginary unit in the given algebra.
constexpr double unit_square(Mode mode) {
  return mode == Mode::Complex ? -1.0 : 1.0;
}

/// A number re + unit * im. Binary operations require both operands to share
/// a mode; mixing modes is a usage error.
class KScalar {
 public:
  constexpr KScalar() = default;
  constexpr KScalar(double re, double im, Mode mode) : re_(re), im_(im), mode_(mode) {}

  static constexpr KScalar real(double re, Mode mode) { return {re, 0.0, mode}; }
  static constexpr KScalar unit(Mode mode) { return {0.0, 1.0, mode}; }

  constexpr double re() const { return re_; }
  constexpr double im() const { return im_; }
  constexpr Mode mode() const { return mode_; }

  KScalar conj() const { return {re_, -im_, mode_}; }

  /// z * conj(z) as a real number: re^2 + im^2 (complex) or re^2 - im^2
  /// (paracomplex, indefinite).
  double sq_mod() const { return re_ * re_ - unit_square(mode_) * im_ * im_; }

  /// True when z is a nonzero element with vanishing z * conj(z). Uses the
  /// scale-relative band 1e-12 * max(1, re^2 + im^2). Always false in
  /// complex mode.
  bool is_zero_divisor() const;

  bool is_zero() const { return re_ == 0.0 && im_ == 0.0; }

  /// conj(z) / (z conj(z)); throws NotInvertible on zero and zero divisors.
  KScalar inverse() const;

  /// The algebra isomorphism L -> R + R, a + tau b -> (a + b, a - b).
  /// Paracomplex only.
  std::pair<double, double> split() const;

  KScalar operator-() const { return {-re_, -im_, mode_}; }

  friend KScalar operator+(const KScalar& a, const KScalar& b);
  friend KScalar operator-(const KScalar& a, const KScalar& b);
  friend KScalar operator*(const KScalar& a, const KScalar& b);
  friend KScalar operator*(double s, const KScalar& a) { return {s * a.re_, s * a.im_, a.mode_}; }
  friend KScalar operator*(const KScalar& a, double s) { return s * a; }

  KScalar& operator+=(const KScalar& b) { return *this = *this + b; }
  KScalar& operator-=(const KScalar& b) { return *this = *this - b; }
  KScalar& operator*=(const KScalar& b) { return *this = *this * b; }

  friend bool operator==(const KScalar&, const KScalar&) = default;

 private:
  double re_ = 0.0;
  double im_ = 0.0;
  Mode mode_ = Mode::Paracomplex;
};

std::ostream& operator<<(std::ostream& os, const KScalar& z);

void require_same_mode(Mode a, Mode b);

/// Separate results of the conjugate/modulus query.
struct ConjNorm {
  KScalar conj;
  double sq_mod;
  bool is_zero_divisor;
};

inline ConjNorm conj_norm(const KScalar& z) {
  return {z.conj(), z.sq_mod(), z.is_zero_divisor()};
}

}  // namespace bjorling
