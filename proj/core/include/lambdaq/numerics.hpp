#pragma once

#include "lambdaq/lambda.hpp"
#include "lambdaq/modpoly.hpp"

#include <boost/multiprecision/mpfr.hpp>

#include <string>
#include <utility>

namespace lambdaq {

using Real = boost::multiprecision::mpfr_float;

// Scoped working precision (decimal digits) for mpfr temporaries.
// Precision context is per-call; nothing global leaks past the guard.
class PrecisionGuard {
 public:
  explicit PrecisionGuard(unsigned digits)
      : saved_(Real::default_precision()) {
    Real::default_precision(digits);
  }
  ~PrecisionGuard() { Real::default_precision(saved_); }
  PrecisionGuard(const PrecisionGuard&) = delete;
  PrecisionGuard& operator=(const PrecisionGuard&) = delete;

 private:
  unsigned saved_;
};

// Arbitrary-precision complex value carrying its working precision.
struct APComplex {
  Real re, im;
  unsigned prec = 0;  // decimal digits the value was computed at

  friend APComplex operator+(const APComplex& a, const APComplex& b) {
    return {a.re + b.re, a.im + b.im, std::min(a.prec, b.prec)};
  }
  friend APComplex operator-(const APComplex& a, const APComplex& b) {
    return {a.re - b.re, a.im - b.im, std::min(a.prec, b.prec)};
  }
  friend APComplex operator*(const APComplex& a, const APComplex& b) {
    return {a.re * b.re - a.im * b.im, a.re * b.im + a.im * b.re,
            std::min(a.prec, b.prec)};
  }
  friend APComplex operator/(const APComplex& a, const APComplex& b) {
    Real d = b.re * b.re + b.im * b.im;
    return {(a.re * b.re + a.im * b.im) / d, (a.im * b.re - a.re * b.im) / d,
            std::min(a.prec, b.prec)};
  }
  APComplex operator-() const { return {-re, -im, prec}; }
};

Real cabs(const APComplex& z);
APComplex cexp(const APComplex& z);
Real pi_value();

// An imaginary quadratic point of the upper half plane.
struct QuadPoint {
  APComplex alpha;
  std::string description;
  bool maximal_order = false;

  // D < 0, D = 0 or 1 mod 4: alpha = sqrt(D)/2 resp. (1+sqrt(D))/2.
  static QuadPoint from_discriminant(long long d, unsigned prec);
  // Root of a*x^2 + b*x + c in the upper half plane (b^2 - 4ac < 0).
  static QuadPoint from_quadratic(long long a, long long b, long long c,
                                  unsigned prec);
};

// Moebius action A(tau).
APComplex mobius(const UniMat& a, const APComplex& tau);

// SL2(Z) reduction: M * tau in the fundamental domain (|re| <= 1/2,
// |tau| >= 1).
std::pair<APComplex, UniMat> reduce_point(const APComplex& tau);

// Weierstrass wp(z; L_tau) via the exponential q-expansion, after
// reduction of tau and of z into the fundamental parallelogram.
APComplex wp_value(const APComplex& z, const APComplex& tau, unsigned prec);

// Numeric value of a q-series with cyclotomic coefficients at
// q = exp(2*pi*i*alpha/N).
APComplex eval_series_at(const QSeries<CycNum>& s, unsigned n,
                         const APComplex& alpha, unsigned prec);

// Lambda_k(alpha) through the wp ratio, cross-checked against the exact
// q-expansion evaluated at q(alpha); throws if the two evaluation paths
// disagree beyond the precision margin.
APComplex lambda_value(const LambdaSpec& spec, const QuadPoint& p, unsigned prec);

// Both evaluation paths, for the cross-path tests.
std::pair<APComplex, APComplex> lambda_value_paths(const LambdaSpec& spec,
                                                   const QuadPoint& p,
                                                   unsigned prec);

APComplex j_value(const QuadPoint& p, unsigned prec);

// (wp(k tau/N) - wp(tau/N)) / (wp(2 tau/N) - wp(tau/N)) at tau = alpha.
APComplex wp_tau_ratio(const LambdaSpec& spec, const QuadPoint& p, unsigned prec);

struct CertReport {
  enum class Verdict { PASS, FAIL, INCONCLUSIVE };
  APComplex value;
  bool j_recognized = false;
  Int j_int = 0;
  Real residual;
  Verdict verdict = Verdict::INCONCLUSIVE;
  std::string note;
};

// Certifies Lambda_k(alpha) as an algebraic integer: recognizes j(alpha)
// as a rational integer J, then checks |Phi(value, J)| below the PASS
// threshold 10^{-prec/3} (J-recognition threshold 10^{-prec/2}).  Phi
// must be the exactly computed modular polynomial for (N, k).
CertReport certify_algebraic_integer(const LambdaSpec& spec, const QuadPoint& p,
                                     unsigned prec, const ModPoly& phi);

std::string verdict_name(CertReport::Verdict v);

}  // namespace lambdaq
