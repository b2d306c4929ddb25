#pragma once

#include <cmath>
#include <limits>
#include <random>

#include "bjorling/scalar.hpp"

namespace testing {

inline std::mt19937_64& rng() {
  static std::mt19937_64 gen(20240611);
  return gen;
}

inline double uniform(double lo, double hi) { return std::uniform_real_distribution<double>(lo, hi)(rng()); }

inline bjorling::KScalar random_k(bjorling::Mode mode, double r = 1.0) {
  return {uniform(-r, r), uniform(-r, r), mode};
}

inline double factorial(int n) {
  double f = 1.0;
  for (int k = 2; k <= n; ++k) f *= k;
  return f;
}

/// Level below which central second differences of step h on values of
/// size scale are dominated by rounding.
inline double fd_rounding_floor(double scale, double h) {
  return 16 * std::numeric_limits<double>::epsilon() * scale / (h * h);
}

/// Expects a nested call to throw bjorling::Error with the given code.
#define CHECK_THROWS_CODE(expr, ecode)                        \
  do {                                                        \
    bool thrown_ = false;                                     \
    try {                                                     \
      (void)(expr);                                           \
    } catch (const bjorling::Error& e_) {                     \
      thrown_ = true;                                         \
      CHECK(e_.code() == (ecode));                            \
    }                                                         \
    CHECK_MESSAGE(thrown_, "expected bjorling::Error");       \
  } while (0)

}  // namespace testing
