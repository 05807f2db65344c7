#pragma once

#include "lambdaq/cyclotomic.hpp"
#include "lambdaq/modgroup.hpp"
#include "lambdaq/qseries.hpp"

namespace lambdaq {

// Parameters of Lambda_k = W_{[k,2,1]} at level N, with the hypothesis
// data for the integrality statement: delta = gcd(k, N), and either
// delta = 1, or delta > 1 with gcd(delta, 3) = 1 and N/delta not a
// prime power.
struct LambdaSpec {
  unsigned level = 0;
  long k = 0;

  long delta() const;
  // The integrality hypotheses.  Expansions are computed either way;
  // only the integrality claim is conditional on this.
  bool hypothesis_holds() const;
  void validate() const;  // 3 <= k < N/2
};

bool is_prime_power(unsigned long n);

// q-expansion of phi_s[A]_2 truncated at q^T, where
// phi_s = (2*pi*i)^{-2} wp(s/N; L_tau) - 1/12:
//   {sc} = 0:  zeta^{s*}/(1-zeta^{s*})^2
//                - sum_{m,n>=1} n (1-zeta^{s*n})(1-zeta^{-s*n}) q^{mnN}
//   else:      sum_{n>=1} n u_s^n
//                - sum_{m,n>=1} n (1-u_s^n)(1-u_s^{-n}) q^{mnN}
// with u_s = zeta^{s*} q^{{sc}}; the mixed-sign exponents mnN - {sc}n are
// combined exactly before truncation.
QSeries<CycNum> phi_slash(long s, const UniMat& a, unsigned n, long trunc);

// (phi_r - phi_s)[A]_2.
QSeries<CycNum> phi_diff_slash(long r, long s, const UniMat& a, unsigned n,
                               long trunc);

// Exact leading coefficient of (phi_r - phi_s)[A]_2 at q^l with
// l = min({rc}, {sc}), from the closed-form case table.  For
// {rc} > {sc} the value is -theta(s, r, A) (the difference flips sign).
CycNum theta(long r, long s, const UniMat& a, unsigned n);

// Lambda_k o A = (phi_k - phi_1)[A]_2 / (phi_2 - phi_1)[A]_2, truncated
// at exactly q^trunc.  Order is min({kc},{c}) - min({2c},{c}); the
// leading coefficient is theta(k,1,A)/theta(2,1,A).
QSeries<CycNum> lambda_expansion(const LambdaSpec& spec, const UniMat& a,
                                 long trunc);

// omega = theta_{k,1}(A) / theta_{2,1}(A); lies in Z[zeta] whenever the
// spec hypotheses hold.
CycNum omega_ratio(const LambdaSpec& spec, const UniMat& a);

}  // namespace lambdaq
