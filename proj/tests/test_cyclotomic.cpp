#include "lambdaq/cyclotomic.hpp"

#include "doctest.h"

#include <stdexcept>

#include <random>

using namespace lambdaq;

namespace {

// Independent oracle: Phi_n = prod_{d | n} (X^{n/d} - 1)^{mu(d)} computed
// over Q[x], no sharing with the cached bottom-up construction.
ratpoly::Poly phi_by_moebius(unsigned n) {
  auto moebius = [](unsigned m) {
    int mu = 1;
    for (unsigned p = 2; p * p <= m; ++p) {
      if (m % p) continue;
      m /= p;
      if (m % p == 0) return 0;
      mu = -mu;
    }
    if (m > 1) mu = -mu;
    return mu;
  };
  ratpoly::Poly num = {Rat(1)};
  ratpoly::Poly den = {Rat(1)};
  for (unsigned d = 1; d <= n; ++d) {
    if (n % d) continue;
    int mu = moebius(d);
    if (mu == 1) num = ratpoly::mul(num, ratpoly::x_pow_minus_one(n / d));
    if (mu == -1) den = ratpoly::mul(den, ratpoly::x_pow_minus_one(n / d));
  }
  auto q = ratpoly::divide_exact(num, den);
  REQUIRE(q.has_value());
  return *q;
}

CycNum random_cyc(unsigned n, std::mt19937& rng) {
  std::uniform_int_distribution<int> dist(-9, 9);
  std::vector<Rat> coords(euler_phi(n));
  for (auto& c : coords) c = Rat(dist(rng));
  return CycNum::from_coords(n, std::move(coords));
}

}  // namespace

TEST_CASE("cyclotomic polynomials match the Moebius-product oracle") {
  for (unsigned n : {1u, 2u, 3u, 4u, 7u, 8u, 9u, 10u, 11u, 12u, 15u, 30u}) {
    CHECK(cyclotomic_polynomial(n).coeffs == phi_by_moebius(n));
    CHECK(cyclotomic_polynomial(n).degree() == euler_phi(n));
  }
  // Frozen: Phi_12 = x^4 - x^2 + 1.
  ratpoly::Poly phi12 = {Rat(1), Rat(0), Rat(-1), Rat(0), Rat(1)};
  CHECK(cyclotomic_polynomial(12).coeffs == phi12);
}

TEST_CASE("zeta_pow reduces mod Phi_N and satisfies zeta^N = 1") {
  for (unsigned n : {7u, 8u, 12u}) {
    CycNum z = CycNum::zeta_pow(n, 1);
    CycNum p = CycNum::one(n);
    for (unsigned e = 0; e < n; ++e) {
      CHECK(p == CycNum::zeta_pow(n, e));
      p *= z;
    }
    CHECK(p == CycNum::one(n));
    CHECK(CycNum::zeta_pow(n, -3) == CycNum::zeta_pow(n, n - 3));
  }
}

TEST_CASE("norms of 1 - zeta^k") {
  // N prime: norm(1 - zeta) = N.
  CHECK(one_minus_zeta_pow(7, 1).norm() == Rat(7));
  CHECK(one_minus_zeta_pow(11, 1).norm() == Rat(11));
  // N = 12, k = 2: N/gcd = 6 is not a prime power, so a unit.
  CHECK(abs(one_minus_zeta_pow(12, 2).norm()) == Rat(1));
  CHECK(one_minus_zeta_pow(12, 2).is_unit());
  // N = 12, k = 4: N/gcd = 3 is a prime power, not a unit.
  CHECK(abs(one_minus_zeta_pow(12, 4).norm()) > Rat(1));
  CHECK(!one_minus_zeta_pow(12, 4).is_unit());
}

TEST_CASE("integrality is a power-basis coordinate check") {
  // (1 + i)/2 is not an algebraic integer.
  CycNum x = (CycNum::one(4) + CycNum::zeta_pow(4, 1))
                 .inverse();  // 1/(1+i) = (1-i)/2
  CHECK(!x.is_integral());
  CHECK((x + x) * (CycNum::one(4) + CycNum::zeta_pow(4, 1)) ==
        CycNum::from_rat(4, Rat(2)));
  // (1 - zeta^3)/(1 - zeta) at N = 9 is 1 + zeta + zeta^2, integral.
  auto q = divide_exact(one_minus_zeta_pow(9, 3), one_minus_zeta_pow(9, 1));
  REQUIRE(q.has_value());
  CHECK(q->is_integral());
  CHECK(*q == CycNum::one(9) + CycNum::zeta_pow(9, 1) + CycNum::zeta_pow(9, 2));
  // (1 - zeta^8)/(1 - zeta^4) = 1 + zeta^4 at N = 12.
  auto q2 = divide_exact(one_minus_zeta_pow(12, 8), one_minus_zeta_pow(12, 4));
  REQUIRE(q2.has_value());
  CHECK(*q2 == CycNum::one(12) + CycNum::zeta_pow(12, 4));
}

TEST_CASE("inverse round-trips and divide_exact rejects non-integral quotients") {
  // inverse(1 - i) = (1 + i)/2 at N = 4.
  CycNum one_minus_i = CycNum::one(4) - CycNum::zeta_pow(4, 1);
  CycNum inv = one_minus_i.inverse();
  CHECK(inv == CycNum::from_coords(4, {Rat(1, 2), Rat(1, 2)}));
  CHECK(inv * one_minus_i == CycNum::one(4));
  // 1/(1 - zeta) at N = 7 is not in Z[zeta] (norm 7).
  CHECK(!divide_exact(CycNum::one(7), one_minus_zeta_pow(7, 1)).has_value());
  CHECK_THROWS_AS(CycNum::zero(7).inverse(), std::domain_error);
}

TEST_CASE("field axioms on random elements") {
  std::mt19937 rng(20260826);
  for (unsigned n : {7u, 12u}) {
    for (int rep = 0; rep < 25; ++rep) {
      CycNum a = random_cyc(n, rng);
      CycNum b = random_cyc(n, rng);
      CycNum c = random_cyc(n, rng);
      CHECK(a * (b + c) == a * b + a * c);
      CHECK(a * b == b * a);
      CHECK((a * b) * c == a * (b * c));
      CHECK(a - a == CycNum::zero(n));
      if (!a.is_zero()) {
        CHECK(a * a.inverse() == CycNum::one(n));
        CHECK(a.norm() != Rat(0));
      }
      // Norm is multiplicative.
      CHECK(a.norm() * b.norm() == (a * b).norm());
    }
  }
}

TEST_CASE("mixed-level arithmetic is rejected") {
  CHECK_THROWS_AS(CycNum::zeta_pow(7, 1) + CycNum::zeta_pow(8, 1),
                  std::invalid_argument);
}

TEST_CASE("rational embedding") {
  CycNum half = CycNum::from_rat(7, Rat(1, 2));
  CHECK(half.is_rational());
  CHECK(!half.is_integral());
  CHECK(half.rational_part() == Rat(1, 2));
  CHECK(half.norm() == Rat(1, 64));  // (1/2)^phi(7)
}
