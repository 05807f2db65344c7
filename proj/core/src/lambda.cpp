#include "lambdaq/lambda.hpp"

#include <numeric>
#include <stdexcept>

namespace lambdaq {

long LambdaSpec::delta() const {
  return std::gcd(k, static_cast<long>(level));
}

bool is_prime_power(unsigned long n) {
  if (n < 2) return false;
  for (unsigned long p = 2; p * p <= n; ++p) {
    if (n % p != 0) continue;
    while (n % p == 0) n /= p;
    return n == 1;
  }
  return true;  // n itself prime
}

bool LambdaSpec::hypothesis_holds() const {
  long d = delta();
  if (d == 1) return true;
  return std::gcd(d, 3L) == 1 && !is_prime_power(level / d);
}

void LambdaSpec::validate() const {
  if (level < 7)
    throw std::invalid_argument("LambdaSpec: level must be >= 7");
  if (!(3 <= k && 2 * k < static_cast<long>(level)))
    throw std::invalid_argument("LambdaSpec: need 3 <= k < N/2");
}

QSeries<CycNum> phi_slash(long s, const UniMat& a, unsigned n, long trunc) {
  if (trunc < 1) throw std::invalid_argument("phi_slash: truncation must be >= 1");
  const SlashData sd = slash_data(s, a, n);  // rejects s = 0 mod N
  const long l = sd.brace_sc;
  const long ss = sd.s_star;
  const long ln = static_cast<long>(n);
  QSeries<CycNum> out(trunc);

  if (l == 0) {
    CycNum zs = CycNum::zeta_pow(n, ss);
    CycNum om = one_minus_zeta_pow(n, ss);
    out.add_term(0, zs * (om * om).inverse());
    for (long nn = 1; nn * ln < trunc; ++nn) {
      CycNum f = one_minus_zeta_pow(n, ss * nn) * one_minus_zeta_pow(n, -ss * nn);
      if (f.is_zero()) continue;
      for (long m = 1; m * nn * ln < trunc; ++m)
        out.add_term(m * nn * ln, CycNum::from_rat(n, Rat(-nn)) * f);
    }
    return out;
  }

  // sum n u^n
  for (long nn = 1; nn * l < trunc; ++nn)
    out.add_term(nn * l, CycNum::zeta_pow(n, ss * nn) * CycNum::from_rat(n, Rat(nn)));
  // -(1-u^n)(1-u^{-n}) q^{mnN} = (-2 + u^n + u^{-n}) q^{mnN}, times n
  for (long nn = 1;; ++nn) {
    // the lowest exponent this n can contribute is n(N - {sc}) at m = 1
    if (nn * (ln - l) >= trunc) break;
    for (long m = 1;; ++m) {
      long base = m * nn * ln;
      if (base - nn * l >= trunc) break;
      CycNum w = CycNum::from_rat(n, Rat(nn));
      out.add_term(base, CycNum::from_rat(n, Rat(-2 * nn)));
      out.add_term(base + nn * l, CycNum::zeta_pow(n, ss * nn) * w);
      out.add_term(base - nn * l, CycNum::zeta_pow(n, -ss * nn) * w);
    }
  }
  return out;
}

QSeries<CycNum> phi_diff_slash(long r, long s, const UniMat& a, unsigned n,
                               long trunc) {
  if ((r - s) % static_cast<long>(n) == 0)
    throw std::invalid_argument("phi_diff_slash: r = s");
  return phi_slash(r, a, n, trunc) - phi_slash(s, a, n, trunc);
}

CycNum theta(long r, long s, const UniMat& a, unsigned n) {
  if ((r - s) % static_cast<long>(n) == 0)
    throw std::invalid_argument("theta: r = s");
  const SlashData rd = slash_data(r, a, n);
  const SlashData sd = slash_data(s, a, n);
  if (rd.brace_sc == sd.brace_sc) {
    const long l = rd.brace_sc;
    CycNum zs = CycNum::zeta_pow(n, sd.s_star);
    CycNum f1 = one_minus_zeta_pow(n, rd.s_star - sd.s_star);
    if (2 * l == static_cast<long>(n)) {
      // At l = N/2 the u^{-1} q^N feedback of *both* phi_r and phi_s lands
      // on q^{N/2}, so the leading coefficient picks up zeta^{-r*} and
      // zeta^{-s*}:  zeta^{r*} + zeta^{-r*} - zeta^{s*} - zeta^{-s*}
      //            = zeta^{-r*} (1 - zeta^{r*-s*}) (1 - zeta^{r*+s*}).
      return CycNum::zeta_pow(n, -rd.s_star) * f1 *
             one_minus_zeta_pow(n, rd.s_star + sd.s_star);
    }
    if (l != 0) return -(zs * f1);
    CycNum f2 = one_minus_zeta_pow(n, rd.s_star + sd.s_star);
    CycNum dr = one_minus_zeta_pow(n, rd.s_star);
    CycNum ds = one_minus_zeta_pow(n, sd.s_star);
    return -(zs * f1 * f2 * (dr * dr * ds * ds).inverse());
  }
  if (rd.brace_sc > sd.brace_sc) return -theta(s, r, a, n);
  CycNum zr = CycNum::zeta_pow(n, rd.s_star);
  if (rd.brace_sc != 0) return zr;
  CycNum dr = one_minus_zeta_pow(n, rd.s_star);
  return zr * (dr * dr).inverse();
}

QSeries<CycNum> lambda_expansion(const LambdaSpec& spec, const UniMat& a,
                                 long trunc) {
  spec.validate();
  const unsigned n = spec.level;
  // Work with enough cushion that the propagated truncation of the
  // quotient still covers the requested window, then cut exactly.
  const long t0 = trunc + 2 * static_cast<long>(n);
  QSeries<CycNum> num = phi_diff_slash(spec.k, 1, a, n, t0);
  QSeries<CycNum> den = phi_diff_slash(2, 1, a, n, t0);
  QSeries<CycNum> res = num * den.invert();
  if (res.trunc() < trunc)
    throw std::logic_error("lambda_expansion: truncation cushion too small");
  return res.truncated(trunc);
}

CycNum omega_ratio(const LambdaSpec& spec, const UniMat& a) {
  spec.validate();
  return theta(spec.k, 1, a, spec.level) *
         theta(2, 1, a, spec.level).inverse();
}

}  // namespace lambdaq
