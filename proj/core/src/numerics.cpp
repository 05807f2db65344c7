#include "lambdaq/numerics.hpp"

#include <cmath>
#include <stdexcept>

namespace lambdaq {

Real cabs(const APComplex& z) { return sqrt(z.re * z.re + z.im * z.im); }

APComplex cexp(const APComplex& z) {
  Real m = exp(z.re);
  return {m * cos(z.im), m * sin(z.im), z.prec};
}

Real pi_value() { return 4 * atan(Real(1)); }

QuadPoint QuadPoint::from_discriminant(long long d, unsigned prec) {
  if (d >= 0) throw std::invalid_argument("QuadPoint: discriminant must be negative");
  long long m = ((d % 4) + 4) % 4;
  if (m != 0 && m != 1)
    throw std::invalid_argument("QuadPoint: discriminant must be 0 or 1 mod 4");
  PrecisionGuard g(prec + 10);
  QuadPoint p;
  Real root = sqrt(Real(-d));
  if (m == 0)
    p.alpha = {Real(0), root / 2, prec};
  else
    p.alpha = {Real(1) / 2, root / 2, prec};
  p.description = "disc " + std::to_string(d);
  p.maximal_order = true;  // fundamental-discriminant callers; flag informational
  return p;
}

QuadPoint QuadPoint::from_quadratic(long long a, long long b, long long c,
                                    unsigned prec) {
  long long disc = b * b - 4 * a * c;
  if (a == 0 || disc >= 0)
    throw std::invalid_argument("QuadPoint: need a != 0 and b^2 - 4ac < 0");
  PrecisionGuard g(prec + 10);
  QuadPoint p;
  Real root = sqrt(Real(-disc));
  long long den = 2 * a;
  p.alpha = {Real(-b) / den, root / (den > 0 ? den : -den), prec};
  p.description = std::to_string(a) + "x^2+" + std::to_string(b) + "x+" +
                  std::to_string(c);
  return p;
}

APComplex mobius(const UniMat& a, const APComplex& tau) {
  APComplex num{a.a * tau.re + a.b, a.a * tau.im, tau.prec};
  APComplex den{a.c * tau.re + a.d, a.c * tau.im, tau.prec};
  return num / den;
}

std::pair<APComplex, UniMat> reduce_point(const APComplex& tau) {
  if (tau.im <= 0) throw std::domain_error("reduce_point: im(tau) must be > 0");
  APComplex t = tau;
  UniMat m;
  const Real eps = pow(Real(10), -30);
  for (int iter = 0; iter < 10000; ++iter) {
    Real shift = floor(t.re + Real(1) / 2);
    if (!shift.is_zero()) {
      long long s = shift.convert_to<long long>();
      t.re -= shift;
      m = UniMat{1, -s, 0, 1} * m;
    }
    Real n2 = t.re * t.re + t.im * t.im;
    if (n2 < 1 - eps) {
      // S-inversion: tau -> -1/tau
      t = APComplex{-t.re / n2, t.im / n2, t.prec};
      m = UniMat{0, -1, 1, 0} * m;
    } else {
      return {t, m};
    }
  }
  throw std::runtime_error("reduce_point: did not converge");
}

namespace {

// (2*pi*i)^{-2} wp(z; L_tau) at an already reduced tau, via
//   1/12 + w/(1-w)^2
//   + sum_{n>=1} [ q^n w/(1-q^n w)^2 + q^n w^{-1}/(1-q^n w^{-1})^2
//                  - 2 q^n/(1-q^n)^2 ]
// with w = e^{2 pi i z}, q = e^{2 pi i tau}, z reduced into the
// fundamental parallelogram first.
APComplex wp_series_reduced(const APComplex& z, const APComplex& tau,
                            unsigned prec) {
  const Real pi = pi_value();
  const Real two_pi = 2 * pi;
  // z = x + y*tau with x, y real; recentre both into [-1/2, 1/2).
  Real y = z.im / tau.im;
  Real x = z.re - y * tau.re;
  x -= floor(x + Real(1) / 2);
  y -= floor(y + Real(1) / 2);
  APComplex zr{x + y * tau.re, y * tau.im, prec};

  APComplex w = cexp(APComplex{-two_pi * zr.im, two_pi * zr.re, prec});
  APComplex q = cexp(APComplex{-two_pi * tau.im, two_pi * tau.re, prec});
  APComplex one{Real(1), Real(0), prec};

  APComplex omw = one - w;
  if (cabs(omw) < pow(Real(10), -static_cast<long>(prec)))
    throw std::domain_error("wp_value: z lies in the period lattice");

  APComplex acc = w / (omw * omw);
  acc.re += Real(1) / 12;

  const Real absq = cabs(q);
  const Real absw = cabs(w);
  const Real tol = pow(Real(10), -static_cast<long>(prec) - 10);
  const Real denom_floor = (1 - absq) * (1 - absq);
  APComplex qn = one;
  for (long n = 1; n < 100000; ++n) {
    qn = qn * q;
    APComplex a1 = qn * w, a2 = qn / w;
    APComplex d1 = one - a1, d2 = one - a2, d3 = one - qn;
    acc = acc + a1 / (d1 * d1) + a2 / (d2 * d2) -
          APComplex{Real(2), Real(0), prec} * qn / (d3 * d3);
    Real bound = cabs(qn) * (absw + 1 / absw + 2) / denom_floor;
    if (bound < tol) return acc;
  }
  throw std::runtime_error("wp_value: series did not converge");
}

}  // namespace

APComplex wp_value(const APComplex& z, const APComplex& tau, unsigned prec) {
  PrecisionGuard g(prec + 20);
  const unsigned wp = prec + 20;
  APComplex zz{z.re, z.im, wp}, tt{tau.re, tau.im, wp};
  auto [tred, m] = reduce_point(tt);
  // L_{M tau} = (c tau + d)^{-1} L_tau, so
  // wp(z; L_tau) = u^{-2} wp(z/u; L_{M tau}) with u = c tau + d.
  APComplex u{m.c * tt.re + m.d, m.c * tt.im, wp};
  APComplex s = wp_series_reduced(zz / u, tred, wp);
  const Real pi = pi_value();
  APComplex factor{-4 * pi * pi, Real(0), wp};  // (2 pi i)^2
  APComplex r = factor * s / (u * u);
  r.prec = prec;
  return r;
}

APComplex eval_series_at(const QSeries<CycNum>& s, unsigned n,
                         const APComplex& alpha, unsigned prec) {
  PrecisionGuard g(prec + 20);
  const unsigned wp = prec + 20;
  const Real pi = pi_value();
  const Real two_pi_over_n = 2 * pi / static_cast<long>(n);
  // zeta powers
  std::vector<APComplex> zeta(n);
  for (unsigned t = 0; t < n; ++t) {
    Real ang = two_pi_over_n * t;
    zeta[t] = {cos(ang), sin(ang), wp};
  }
  APComplex acc{Real(0), Real(0), wp};
  for (const auto& [e, c] : s.terms()) {
    // q^e = exp(2 pi i e alpha / N)
    APComplex expo{-two_pi_over_n * e * alpha.im, two_pi_over_n * e * alpha.re, wp};
    APComplex qe = cexp(expo);
    APComplex coeff{Real(0), Real(0), wp};
    const auto& coords = c.coords();
    for (std::size_t t = 0; t < coords.size(); ++t) {
      if (coords[t].is_zero()) continue;
      Real x(numerator(coords[t]));
      x /= Real(denominator(coords[t]));
      coeff = coeff + APComplex{x, Real(0), wp} * zeta[t % n];
    }
    acc = acc + coeff * qe;
  }
  acc.prec = prec;
  return acc;
}

namespace {

long series_terms_needed(unsigned n, const APComplex& alpha, unsigned digits) {
  double im = alpha.im.convert_to<double>();
  double rate = 2 * 3.141592653589793 * im / n;  // -log |q|
  long t = static_cast<long>((digits + 10) * 2.302585093 / rate) + 2 * static_cast<long>(n);
  return t;
}

}  // namespace

std::pair<APComplex, APComplex> lambda_value_paths(const LambdaSpec& spec,
                                                   const QuadPoint& p,
                                                   unsigned prec) {
  spec.validate();
  const unsigned n = spec.level;
  PrecisionGuard g(prec + 20);
  // direct wp ratio
  APComplex zk{Real(spec.k) / static_cast<long>(n), Real(0), prec};
  APComplex z2{Real(2) / static_cast<long>(n), Real(0), prec};
  APComplex z1{Real(1) / static_cast<long>(n), Real(0), prec};
  APComplex wk = wp_value(zk, p.alpha, prec);
  APComplex w2 = wp_value(z2, p.alpha, prec);
  APComplex w1 = wp_value(z1, p.alpha, prec);
  APComplex direct = (wk - w1) / (w2 - w1);
  // exact series evaluated at q(alpha)
  long t = series_terms_needed(n, p.alpha, prec);
  QSeries<CycNum> lam = lambda_expansion(spec, UniMat::identity(), t);
  APComplex series = eval_series_at(lam, n, p.alpha, prec);
  return {direct, series};
}

APComplex lambda_value(const LambdaSpec& spec, const QuadPoint& p, unsigned prec) {
  auto [direct, series] = lambda_value_paths(spec, p, prec);
  PrecisionGuard g(prec + 20);
  Real diff = cabs(direct - series);
  if (diff > pow(Real(10), -(static_cast<long>(prec) - 40)))
    throw std::runtime_error("lambda_value: evaluation paths disagree (" +
                             diff.str(5, std::ios_base::scientific) + ")");
  return direct;
}

APComplex j_value(const QuadPoint& p, unsigned prec) {
  PrecisionGuard g(prec + 20);
  const unsigned wp = prec + 20;
  APComplex tau{p.alpha.re, p.alpha.im, wp};
  auto [tred, m] = reduce_point(tau);
  (void)m;
  const Real pi = pi_value();
  APComplex qf = cexp(APComplex{-2 * pi * tred.im, 2 * pi * tred.re, wp});
  double lq = std::log10(cabs(qf).convert_to<double>());
  // coefficient growth ~ exp(4 pi sqrt(n)); stop when the tail is dead
  long terms = 2;
  while (4 * 3.141592653589793 * std::sqrt(static_cast<double>(terms)) / 2.302585093 +
             terms * lq >
         -(static_cast<double>(prec) + 15))
    ++terms;
  QSeries<Rat> j = j_expansion(1, terms + 2);
  APComplex acc{Real(0), Real(0), wp};
  APComplex q_inv{qf.re, qf.im, wp};
  for (const auto& [e, c] : j.terms()) {
    APComplex qe{Real(1), Real(0), wp};
    if (e >= 0) {
      for (long i = 0; i < e; ++i) qe = qe * qf;
    } else {
      qe = APComplex{Real(1), Real(0), wp} / qf;
    }
    Real x(numerator(c));
    x /= Real(denominator(c));
    acc = acc + APComplex{x, Real(0), wp} * qe;
  }
  acc.prec = prec;
  return acc;
}

APComplex wp_tau_ratio(const LambdaSpec& spec, const QuadPoint& p, unsigned prec) {
  spec.validate();
  const unsigned n = spec.level;
  PrecisionGuard g(prec + 20);
  auto frac = [&](long s) {
    return APComplex{p.alpha.re * s / static_cast<long>(n),
                     p.alpha.im * s / static_cast<long>(n), prec};
  };
  APComplex wk = wp_value(frac(spec.k), p.alpha, prec);
  APComplex w2 = wp_value(frac(2), p.alpha, prec);
  APComplex w1 = wp_value(frac(1), p.alpha, prec);
  return (wk - w1) / (w2 - w1);
}

CertReport certify_algebraic_integer(const LambdaSpec& spec, const QuadPoint& p,
                                     unsigned prec, const ModPoly& phi) {
  if (phi.level != spec.level || phi.k != spec.k)
    throw std::invalid_argument("certify: modular polynomial is for different (N, k)");
  PrecisionGuard g(prec + 20);
  const unsigned wp = prec + 20;
  CertReport rep;
  rep.value = lambda_value(spec, p, prec);
  APComplex jv = j_value(p, prec);

  Real jround = floor(jv.re + Real(1) / 2);
  Real jerr = cabs(jv - APComplex{jround, Real(0), wp});
  Real recog_tol = pow(Real(10), -static_cast<long>(prec) / 2);
  if (jerr > recog_tol) {
    rep.verdict = CertReport::Verdict::INCONCLUSIVE;
    rep.note = "j(alpha) not recognizable as a rational integer";
    rep.residual = Real(0);
    return rep;
  }
  rep.j_recognized = true;
  rep.j_int = jround.convert_to<Int>();

  // Phi(X, J) is a monic integer polynomial; evaluate at X = value.
  std::vector<Int> xcoeffs;
  xcoeffs.reserve(phi.coeffs.size());
  for (const auto& jp : phi.coeffs) {
    Rat acc(0);
    Rat jpow(1);
    for (const auto& c : jp.coeffs) {
      acc += c * jpow;
      jpow *= Rat(rep.j_int);
    }
    if (!is_integer(acc))
      throw std::logic_error("certify: non-integer coefficient after j substitution");
    xcoeffs.push_back(numerator(acc));
  }
  APComplex res{Real(0), Real(0), wp};
  for (auto it = xcoeffs.rbegin(); it != xcoeffs.rend(); ++it) {
    res = res * rep.value;
    res.re += Real(*it);
  }
  rep.residual = cabs(res);
  Real pass_tol = pow(Real(10), -static_cast<long>(prec) / 3);
  rep.verdict = rep.residual < pass_tol ? CertReport::Verdict::PASS
                                        : CertReport::Verdict::FAIL;
  return rep;
}

std::string verdict_name(CertReport::Verdict v) {
  switch (v) {
    case CertReport::Verdict::PASS: return "PASS";
    case CertReport::Verdict::FAIL: return "FAIL";
    default: return "INCONCLUSIVE";
  }
}

}  // namespace lambdaq
