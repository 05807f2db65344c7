#pragma once

#include <cstdint>
#include <string>
#include <vector>

namespace lambdaq {

// Element of SL2(Z).
struct UniMat {
  long long a = 1, b = 0, c = 0, d = 1;

  long long det() const { return a * d - b * c; }
  static UniMat identity() { return {}; }
  UniMat inverse() const { return {d, -b, -c, a}; }

  friend UniMat operator*(const UniMat& x, const UniMat& y) {
    return {x.a * y.a + x.b * y.c, x.a * y.b + x.b * y.d,
            x.c * y.a + x.d * y.c, x.c * y.b + x.d * y.d};
  }
  friend bool operator==(const UniMat& x, const UniMat& y) {
    return x.a == y.a && x.b == y.b && x.c == y.c && x.d == y.d;
  }

  std::string to_string() const;
};

// The reduction {x}, mu(x): 0 <= brace <= N/2, mu = +1 when x = 0 or N/2
// mod N, otherwise x = mu * brace mod N with 0 < brace < N/2.
struct BraceData {
  long brace = 0;
  int mu = 1;
};

BraceData brace(long long x, unsigned n);

// s* = mu(sc) s d mod N together with {sc}; the monomial u_s = zeta^{s*} q^{{sc}}.
struct SlashData {
  long s_star = 0;   // reduced to [0, N)
  long brace_sc = 0;
};

SlashData slash_data(long long s, const UniMat& a, unsigned n);

// Number of right cosets of Gamma_1(N)*{+-1} in SL2(Z):
// (N^2/2) * prod_{p | N} (1 - p^{-2}).
unsigned long coset_count(unsigned n);

// A complete duplicate-free transversal of those cosets.  Classes are the
// bottom rows (c, d) mod N with gcd(c, d, N) = 1, modulo (c, d) ~ (-c, -d);
// each entry is an exact SL2(Z) lift.  Deterministic ordering.
std::vector<UniMat> transversal(unsigned n);

// A * B^{-1} in Gamma_1(N)*{+-1}?
bool same_coset(const UniMat& a, const UniMat& b, unsigned n);

}  // namespace lambdaq
