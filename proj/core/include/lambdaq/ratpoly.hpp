#pragma once

#include "lambdaq/rational.hpp"

#include <optional>
#include <tuple>
#include <utility>
#include <vector>

// Dense univariate polynomials over Q, little-endian coefficient order.
// The zero polynomial is the empty vector.  Only what the cyclotomic
// layer needs: ring ops, field division, extended gcd, resultant.
namespace lambdaq::ratpoly {

using Poly = std::vector<Rat>;

void trim(Poly& p);
int degree(const Poly& p);  // -1 for the zero polynomial

Poly add(const Poly& a, const Poly& b);
Poly sub(const Poly& a, const Poly& b);
Poly mul(const Poly& a, const Poly& b);
Poly neg(const Poly& a);
Poly scale(const Poly& a, const Rat& c);

// Quotient and remainder; b must be nonzero.
std::pair<Poly, Poly> divmod(const Poly& a, const Poly& b);

// a / b when the remainder is zero, nullopt otherwise.
std::optional<Poly> divide_exact(const Poly& a, const Poly& b);

// Monic gcd g together with u, v such that u*a + v*b = g.
std::tuple<Poly, Poly, Poly> ext_gcd(const Poly& a, const Poly& b);

Rat resultant(const Poly& f, const Poly& g);

Poly x_pow_minus_one(unsigned n);  // X^n - 1

}  // namespace lambdaq::ratpoly
