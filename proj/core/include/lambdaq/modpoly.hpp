#pragma once

#include "lambdaq/lambda.hpp"
#include "lambdaq/qseries.hpp"

#include <vector>

namespace lambdaq {

// Polynomial in j with exact rational coefficients (integers for the
// modular equation), little-endian by j-degree.
struct JPoly {
  std::vector<Rat> coeffs;

  int degree() const { return static_cast<int>(coeffs.size()) - 1; }
  bool is_integral() const;
  friend bool operator==(const JPoly& a, const JPoly& b) { return a.coeffs == b.coeffs; }
};

// Phi(X, j) = prod_{A in R} (X - Lambda_k o A), monic in X of degree
// equal to the coset count, with coefficients in Z[j].
struct ModPoly {
  unsigned level = 0;
  long k = 0;
  std::vector<JPoly> coeffs;  // indexed by X-degree, size degree+1

  int degree() const { return static_cast<int>(coeffs.size()) - 1; }
};

// q-expansion of j as a series in q = exp(2*pi*i*tau/N): exponents are
// multiples of N (the j-variable is q_full = q^N), integer coefficients,
// computed exactly as E4^3 / Delta with Delta the eta product.
QSeries<Rat> j_expansion(unsigned n, long trunc);

// Eisenstein series and Delta in the q_full variable (exponent step 1),
// exposed for the E4^3 - E6^2 = 1728 Delta identity check.
QSeries<Rat> eisenstein_e4(long terms);
QSeries<Rat> eisenstein_e6(long terms);
QSeries<Rat> delta_eta(long terms);

// Lambda_k o A for every A in transversal(N), each truncated at q^trunc.
std::vector<QSeries<CycNum>> conjugate_expansions(const LambdaSpec& spec, long trunc);

// Elementary symmetric functions e_1..e_m of the conjugate set.  Each
// must come out with rational coefficients supported on exponents
// divisible by N; anything else throws (Galois-stability certificate).
std::vector<QSeries<Rat>> symmetric_functions(const LambdaSpec& spec, long trunc);

// The unique polynomial P with P(j) = s through the truncation, found by
// repeatedly killing the most negative term with a multiple of a power
// of j.  Throws on a nonzero residual.
JPoly express_in_j(const QSeries<Rat>& s, unsigned n);

// Default truncation: N * (coset_count + 4).
long default_modpoly_trunc(unsigned n);

ModPoly modular_polynomial(const LambdaSpec& spec, long trunc = 0);

// Residual series Phi(lambda, j) for lambda = Lambda_k o A; zero up to
// its truncation when Phi is correct.
QSeries<CycNum> modpoly_residual(const ModPoly& phi, const LambdaSpec& spec,
                                 const UniMat& a, long trunc);

// Evaluate a JPoly at a j-expansion (helper for the residual check).
QSeries<Rat> evaluate_jpoly(const JPoly& p, const std::vector<QSeries<Rat>>& j_powers);

}  // namespace lambdaq
