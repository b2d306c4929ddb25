#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <complex>

#include "bjorling/scalar.hpp"
#include "support.hpp"

using namespace bjorling;
using testing::random_k;

namespace {

bool close(const KScalar& a, const KScalar& b, double tol) {
  return std::abs(a.re() - b.re()) <= tol && std::abs(a.im() - b.im()) <= tol;
}

}  // namespace

TEST_CASE("paracomplex product follows tau^2 = 1") {
  const KScalar a{2, 3, Mode::Paracomplex}, b{-1, 0.5, Mode::Paracomplex};
  const KScalar p = a * b;
  CHECK(p.re() == doctest::Approx(2 * -1 + 3 * 0.5));
  CHECK(p.im() == doctest::Approx(2 * 0.5 + 3 * -1));
  const KScalar t = KScalar::unit(Mode::Paracomplex);
  CHECK(t * t == KScalar::real(1.0, Mode::Paracomplex));
}

TEST_CASE("complex mode agrees with std::complex") {
  for (int k = 0; k < 200; ++k) {
    const KScalar a = random_k(Mode::Complex, 3), b = random_k(Mode::Complex, 3);
    const std::complex<double> ca(a.re(), a.im()), cb(b.re(), b.im());
    const std::complex<double> p = ca * cb;
    CHECK((a * b).re() == doctest::Approx(p.real()));
    CHECK((a * b).im() == doctest::Approx(p.imag()));
    const std::complex<double> q = 1.0 / ca;
    CHECK(a.inverse().re() == doctest::Approx(q.real()));
    CHECK(a.inverse().im() == doctest::Approx(q.imag()));
    CHECK(a.sq_mod() == doctest::Approx(std::norm(ca)));
  }
}

TEST_CASE("zero divisors") {
  const KScalar d{1.5, 1.5, Mode::Paracomplex}, e{2, -2, Mode::Paracomplex};
  CHECK(d.is_zero_divisor());
  CHECK(e.is_zero_divisor());
  CHECK(d * e == KScalar::real(0.0, Mode::Paracomplex));
  CHECK_THROWS_CODE(d.inverse(), ErrorCode::NotInvertible);
  CHECK_THROWS_CODE(KScalar().inverse(), ErrorCode::NotInvertible);
  CHECK_FALSE(KScalar(1.5, 1.5, Mode::Complex).is_zero_divisor());
  CHECK_FALSE(KScalar(0, 0, Mode::Paracomplex).is_zero_divisor());
  const ConjNorm cn = conj_norm(d);
  CHECK(cn.sq_mod == doctest::Approx(0.0));
  CHECK(cn.is_zero_divisor);
  CHECK(cn.conj == KScalar(1.5, -1.5, Mode::Paracomplex));
}

TEST_CASE("mode mixing and split misuse are usage errors") {
  const KScalar a{1, 2, Mode::Paracomplex}, b{1, 2, Mode::Complex};
  CHECK_THROWS_CODE(a + b, ErrorCode::Usage);
  CHECK_THROWS_CODE(a * b, ErrorCode::Usage);
  CHECK_THROWS_CODE(b.split(), ErrorCode::Usage);
}

TEST_CASE("split is the idempotent-basis isomorphism") {
  const auto [p, q] = KScalar(3, 1, Mode::Paracomplex).split();
  CHECK(p == 4.0);
  CHECK(q == 2.0);
}

TEST_CASE("property: ring axioms, split multiplicativity, inverses") {
  for (Mode mode : {Mode::Paracomplex, Mode::Complex}) {
    for (int k = 0; k < 2000; ++k) {
      const KScalar a = random_k(mode), b = random_k(mode), c = random_k(mode);
      CHECK(close(a * b, b * a, 1e-12));
      CHECK(close((a * b) * c, a * (b * c), 1e-12));
      CHECK(close(a * (b + c), a * b + a * c, 1e-12));
      CHECK(close((a + b) - b, a, 1e-12));
      CHECK(close((a * b).conj(), a.conj() * b.conj(), 1e-12));
      CHECK((a * b).sq_mod() == doctest::Approx(a.sq_mod() * b.sq_mod()).epsilon(1e-10));
      if (mode == Mode::Paracomplex) {
        const auto [ap, aq] = a.split();
        const auto [bp, bq] = b.split();
        const auto [pp, pq] = (a * b).split();
        CHECK(std::abs(pp - ap * bp) <= 1e-12);
        CHECK(std::abs(pq - aq * bq) <= 1e-12);
      }
      if (std::abs(a.sq_mod()) > 0.05) {
        CHECK(close(a * a.inverse(), KScalar::real(1.0, mode), 1e-12));
      }
    }
  }
}
