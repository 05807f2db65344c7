#pragma once

#include "lambdaq/ratpoly.hpp"
#include "lambdaq/rational.hpp"

#include <optional>
#include <string>
#include <vector>

namespace lambdaq {

// The N-th cyclotomic polynomial: monic of degree phi(N), an exact
// divisor of X^N - 1.
struct CycPoly {
  unsigned level = 0;
  ratpoly::Poly coeffs;  // integer entries, monic

  unsigned degree() const { return static_cast<unsigned>(coeffs.size()) - 1; }
};

// Cached; computed once per level by exact division of X^N - 1 by the
// product of the lower-level cyclotomic polynomials.
const CycPoly& cyclotomic_polynomial(unsigned n);

unsigned euler_phi(unsigned n);

// An exact element of Q(zeta_N) in the power basis 1, zeta, ...,
// zeta^{phi(N)-1}, fully reduced mod Phi_N.  The power basis is an
// integral basis of Z[zeta_N], so is_integral() is a coordinate check.
// Values are immutable; arithmetic is pure and parallel-safe.
class CycNum {
 public:
  CycNum() = default;  // zero of level 1 (plain rational zero)

  static CycNum zero(unsigned level);
  static CycNum one(unsigned level);
  static CycNum from_rat(unsigned level, const Rat& value);
  // zeta^e with e taken mod N.
  static CycNum zeta_pow(unsigned level, long long e);
  // Coordinates in the power basis; resized/reduced as needed.
  static CycNum from_coords(unsigned level, std::vector<Rat> coords);

  unsigned level() const { return level_; }
  const std::vector<Rat>& coords() const { return coords_; }

  bool is_zero() const;
  bool is_one() const;
  // All power-basis coordinates beyond index 0 vanish exactly.
  bool is_rational() const;
  Rat rational_part() const { return coords_.empty() ? Rat(0) : coords_[0]; }

  // Membership in Z[zeta_N]: every coordinate an integer.
  bool is_integral() const;
  // is_integral and |norm| = 1.
  bool is_unit() const;

  // Field norm to Q, computed as resultant(Phi_N, representative).
  Rat norm() const;

  CycNum inverse() const;  // throws std::domain_error on zero

  friend CycNum operator+(const CycNum& a, const CycNum& b);
  friend CycNum operator-(const CycNum& a, const CycNum& b);
  friend CycNum operator*(const CycNum& a, const CycNum& b);
  CycNum operator-() const;
  friend bool operator==(const CycNum& a, const CycNum& b);
  friend bool operator!=(const CycNum& a, const CycNum& b) { return !(a == b); }

  CycNum& operator+=(const CycNum& b) { return *this = *this + b; }
  CycNum& operator-=(const CycNum& b) { return *this = *this - b; }
  CycNum& operator*=(const CycNum& b) { return *this = *this * b; }

  std::string to_string() const;  // human-readable, coordinates in zeta

 private:
  unsigned level_ = 1;
  std::vector<Rat> coords_ = {Rat(0)};
};

inline bool is_zero(const CycNum& x) { return x.is_zero(); }

// a/b when the quotient lies in Z[zeta], nullopt otherwise ("NotDivisible").
std::optional<CycNum> divide_exact(const CycNum& a, const CycNum& b);

// 1 - zeta^e, the workhorse quantity of the unit lemma.
CycNum one_minus_zeta_pow(unsigned level, long long e);

}  // namespace lambdaq
