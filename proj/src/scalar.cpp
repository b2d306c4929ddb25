#include "bjorling/scalar.hpp"

#include <algorithm>
#include <ostream>

namespace bjorling {

std::string_view to_string(ErrorCode code) {
  switch (code) {
    case ErrorCode::Usage: return "Usage";
    case ErrorCode::NotInvertible: return "NotInvertible";
    case ErrorCode::NonIntegrable: return "NonIntegrable";
    case ErrorCode::BranchError: return "BranchError";
    case ErrorCode::DegenerateSqrt: return "DegenerateSqrt";
    case ErrorCode::DomainError: return "DomainError";
    case ErrorCode::InvalidProblem: return "InvalidProblem";
    case ErrorCode::CausalMismatch: return "CausalMismatch";
    case ErrorCode::CharacteristicData: return "CharacteristicData";
    case ErrorCode::ConstraintDrift: return "ConstraintDrift";
    case ErrorCode::UnsupportedRecipe: return "UnsupportedRecipe";
    case ErrorCode::DegenerateFrame: return "DegenerateFrame";
    case ErrorCode::Parse: return "Parse";
    case ErrorCode::Io: return "Io";
  }
  return "Unknown";
}

const char* to_string(Mode mode) {
  return mode == Mode::Complex ? "complex" : "paracomplex";
}

void require_same_mode(Mode a, Mode b) {
  if (a != b) {
    fail(ErrorCode::Usage, std::string("mode mismatch: ") + to_string(a) + " vs " + to_string(b));
  }
}

bool KScalar::is_zero_divisor() const {
  if (mode_ == Mode::Complex || is_zero()) return false;
  const double band = 1e-12 * std::max(1.0, re_ * re_ + im_ * im_);
  return std::abs(sq_mod()) <= band;
}

KScalar KScalar::inverse() const {
  if (is_zero()) fail(ErrorCode::NotInvertible, "inverse of zero");
  if (is_zero_divisor()) fail(ErrorCode::NotInvertible, "inverse of a zero divisor");
  const double m = sq_mod();
  return {re_ / m, -im_ / m, mode_};
}

std::pair<double, double> KScalar::split() const {
  if (mode_ != Mode::Paracomplex) fail(ErrorCode::Usage, "split map is defined for paracomplex values only");
  return {re_ + im_, re_ - im_};
}

KScalar operator+(const KScalar& a, const KScalar& b) {
  require_same_mode(a.mode_, b.mode_);
  return {a.re_ + b.re_, a.im_ + b.im_, a.mode_};
}

KScalar operator-(const KScalar& a, const KScalar& b) {
  require_same_mode(a.mode_, b.mode_);
  return {a.re_ - b.re_, a.im_ - b.im_, a.mode_};
}

KScalar operator*(const KScalar& a, const KScalar& b) {
  require_same_mode(a.mode_, b.mode_);
  const double s = unit_square(a.mode_);
  return {a.re_ * b.re_ + s * a.im_ * b.im_, a.re_ * b.im_ + a.im_ * b.re_, a.mode_};
}

std::ostream& operator<<(std::ostream& os, const KScalar& z) {
  return os << z.re() << (z.im() < 0 ? "-" : "+") << (z.mode() == Mode::Complex ? "i" : "t")
            << std::abs(z.im());
}

}  // namespace bjorling
