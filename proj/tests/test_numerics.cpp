#include "lambdaq/numerics.hpp"

#include "doctest.h"

using namespace lambdaq;

namespace {

APComplex make(double re, double im, unsigned prec) {
  PrecisionGuard g(prec);
  return {Real(re), Real(im), prec};
}

Real tol(unsigned digits) {
  return pow(Real(10), -static_cast<int>(digits));
}

}  // namespace

TEST_CASE("complex primitives") {
  PrecisionGuard g(60);
  APComplex i = make(0, 1, 60);
  APComplex z = i * i;
  CHECK(abs(z.re + 1) < tol(50));
  CHECK(abs(z.im) < tol(50));
  APComplex e = cexp(make(0, 0, 60));
  CHECK(abs(e.re - 1) < tol(50));
  // exp(i pi) = -1.
  APComplex ip = {Real(0), pi_value(), 60};
  APComplex m1 = cexp(ip);
  CHECK(abs(m1.re + 1) < tol(50));
  CHECK(abs(m1.im) < tol(50));
  CHECK(abs(cabs(make(3, 4, 60)) - 5) < tol(50));
}

TEST_CASE("quadratic points") {
  QuadPoint p = QuadPoint::from_discriminant(-4, 60);
  CHECK(abs(p.alpha.re) < tol(50));
  CHECK(abs(p.alpha.im - 1) < tol(50));
  QuadPoint r = QuadPoint::from_discriminant(-3, 60);
  CHECK(abs(r.alpha.re - Real(1) / 2) < tol(50));
  QuadPoint q = QuadPoint::from_quadratic(1, -1, 2, 60);
  CHECK(abs(q.alpha.re - Real(1) / 2) < tol(20));  // (1 + i sqrt 7)/2
  CHECK_THROWS(QuadPoint::from_discriminant(5, 60));
}

TEST_CASE("reduce_point lands in the fundamental domain and tracks the matrix") {
  PrecisionGuard g(60);
  APComplex tau = make(3.7, 0.02, 60);
  auto [red, m] = reduce_point(tau);
  CHECK(m.det() == 1);
  CHECK(abs(red.re) <= Real("0.5000001"));
  CHECK(cabs(red) >= Real("0.9999999"));
  APComplex again = mobius(m, tau);
  CHECK(abs(again.re - red.re) < tol(45));
  CHECK(abs(again.im - red.im) < tol(45));
}

TEST_CASE("wp is even and lattice-periodic") {
  unsigned prec = 80;
  PrecisionGuard g(prec);
  APComplex tau = make(0.31, 1.27, prec);
  APComplex z = make(0.23, 0.11, prec);
  APComplex a = wp_value(z, tau, prec);
  APComplex b = wp_value(-z, tau, prec);
  CHECK(cabs(a - b) < tol(prec - 15));
  APComplex one = make(1, 0, prec);
  CHECK(cabs(wp_value(z + one, tau, prec) - a) < tol(prec - 15));
  CHECK(cabs(wp_value(z + tau, tau, prec) - a) < tol(prec - 15));
}

TEST_CASE("lemniscatic half-period values sum to zero") {
  // e1 + e2 + e3 = 0 (coefficient of wp^2 in the cubic vanishes).
  unsigned prec = 80;
  PrecisionGuard g(prec);
  APComplex tau = make(0, 1, prec);  // square lattice
  APComplex half = make(0.5, 0, prec);
  APComplex htau = {Real(0), Real(1) / 2, prec};
  APComplex e1 = wp_value(half, tau, prec);
  APComplex e2 = wp_value(htau, tau, prec);
  APComplex e3 = wp_value(half + htau, tau, prec);
  APComplex s = e1 + e2 + e3;
  CHECK(cabs(s) < tol(prec - 15));
  // Square lattice: wp((1+tau)/2) = 0 and wp(tau/2) = -wp(1/2).
  CHECK(cabs(e3) < tol(prec - 15));
  CHECK(cabs(e2 + e1) < tol(prec - 15));
}

TEST_CASE("j at CM points recognizes singular moduli") {
  unsigned prec = 100;
  QuadPoint i_pt = QuadPoint::from_discriminant(-4, prec);
  APComplex j1 = j_value(i_pt, prec);
  CHECK(abs(j1.re - 1728) < tol(prec / 2));
  CHECK(abs(j1.im) < tol(prec / 2));
  QuadPoint rho = QuadPoint::from_discriminant(-3, prec);
  CHECK(cabs(j_value(rho, prec)) < tol(prec / 2));
  QuadPoint w7 = QuadPoint::from_discriminant(-7, prec);
  APComplex j7 = j_value(w7, prec);
  CHECK(abs(j7.re + 3375) < tol(prec / 2));
  CHECK(abs(j7.im) < tol(prec / 2));
}

TEST_CASE("both lambda evaluation paths agree") {
  LambdaSpec spec{7, 3};
  unsigned prec = 100;
  for (long long d : {-4LL, -7LL, -8LL}) {
    QuadPoint p = QuadPoint::from_discriminant(d, prec);
    auto [wp_path, series_path] = lambda_value_paths(spec, p, prec);
    CHECK(cabs(wp_path - series_path) < tol(prec - 40));
    // lambda_value itself performs the cross-check and must not throw.
    APComplex v = lambda_value(spec, p, prec);
    CHECK(cabs(v - wp_path) < tol(prec - 40));
  }
}

TEST_CASE("precision doubling keeps the value stable") {
  LambdaSpec spec{7, 3};
  QuadPoint lo = QuadPoint::from_discriminant(-4, 60);
  QuadPoint hi = QuadPoint::from_discriminant(-4, 120);
  APComplex a = lambda_value(spec, lo, 60);
  APComplex b = lambda_value(spec, hi, 120);
  PrecisionGuard g(120);
  CHECK(abs(a.re - b.re) < tol(15));
  CHECK(abs(a.im - b.im) < tol(15));
}

TEST_CASE("eval_series_at matches a hand evaluation") {
  unsigned prec = 60;
  PrecisionGuard g(prec);
  // s = zeta * q at N = 4, alpha = i: value exp(2 pi i * (1/4 + i/4... )).
  QSeries<CycNum> s = QSeries<CycNum>::monomial(1, CycNum::zeta_pow(4, 1), 5);
  APComplex alpha = make(0, 1, prec);
  APComplex got = eval_series_at(s, 4, alpha, prec);
  // q = exp(2 pi i * i / 4) = exp(-pi/2); zeta = i.
  Real q = exp(-pi_value() / 2);
  CHECK(abs(got.re) < tol(50));
  CHECK(abs(got.im - q) < tol(50));
}
