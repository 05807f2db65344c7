#include "lambdaq/qseries.hpp"

#include "doctest.h"

#include <stdexcept>

#include <random>

using namespace lambdaq;

namespace {

QSeries<Rat> random_series(long lo, long trunc, std::mt19937& rng) {
  std::uniform_int_distribution<int> dist(-5, 5);
  QSeries<Rat> s(trunc);
  for (long e = lo; e < trunc; ++e) s.add_term(e, Rat(dist(rng)));
  return s;
}

}  // namespace

TEST_CASE("basic arithmetic and zero stripping") {
  QSeries<Rat> a(5);
  a.add_term(0, Rat(1));
  a.add_term(2, Rat(3));
  QSeries<Rat> b(5);
  b.add_term(2, Rat(-3));
  QSeries<Rat> s = a + b;
  CHECK(s.terms().size() == 1);  // q^2 terms cancel and are not stored
  CHECK(*s.coeff_ptr(0) == Rat(1));
  CHECK(s.coeff_ptr(2) == nullptr);
  CHECK(a - a == QSeries<Rat>(5));
  CHECK((a - a).is_zero());
}

TEST_CASE("addition truncation is the min of the operands") {
  QSeries<Rat> a = QSeries<Rat>::monomial(0, Rat(1), 10);
  QSeries<Rat> b = QSeries<Rat>::monomial(1, Rat(1), 4);
  CHECK((a + b).trunc() == 4);
}

TEST_CASE("product truncation is min(Ta + ord b, Tb + ord a)") {
  QSeries<Rat> a = QSeries<Rat>::monomial(2, Rat(1), 10);   // ord 2, T 10
  QSeries<Rat> b = QSeries<Rat>::monomial(-1, Rat(1), 6);   // ord -1, T 6
  QSeries<Rat> p = a * b;
  CHECK(p.trunc() == std::min(10 + (-1), 6 + 2));  // 8
  CHECK(*p.coeff_ptr(1) == Rat(1));
}

TEST_CASE("product truncation against a wider recomputation") {
  std::mt19937 rng(7);
  for (int rep = 0; rep < 20; ++rep) {
    QSeries<Rat> wa = random_series(-2, 30, rng);
    QSeries<Rat> wb = random_series(0, 30, rng);
    QSeries<Rat> narrow = wa.truncated(12) * wb.truncated(9);
    QSeries<Rat> wide = wa * wb;
    // Every coefficient the narrow product claims must be the true one.
    CHECK(congruent_mod(narrow, wide, narrow.trunc()));
  }
}

TEST_CASE("invert round-trips to 1 at the propagated truncation") {
  std::mt19937 rng(11);
  for (int rep = 0; rep < 20; ++rep) {
    QSeries<Rat> a = random_series(-3, 17, rng);
    a.add_term(-3, Rat(1));  // make sure the order is exactly -3
    if (a.coeff_ptr(-3) == nullptr) continue;
    QSeries<Rat> inv = a.invert();
    CHECK(inv.trunc() == 17 - 2 * (-3));
    QSeries<Rat> prod = a * inv;
    CHECK(*prod.coeff_ptr(0) == Rat(1));
    CHECK(prod.terms().size() == 1);
  }
}

TEST_CASE("invert of a monomial") {
  QSeries<Rat> m = QSeries<Rat>::monomial(4, Rat(3), 9);
  QSeries<Rat> inv = m.invert();
  CHECK(inv.trunc() == 1);  // 9 - 2*4
  CHECK(*inv.coeff_ptr(-4) == Rat(1, 3));
  CHECK_THROWS_AS(QSeries<Rat>(5).invert(), std::domain_error);
}

TEST_CASE("geometric series inverse") {
  // (1 - q)^{-1} = 1 + q + q^2 + ...
  QSeries<Rat> a(8);
  a.add_term(0, Rat(1));
  a.add_term(1, Rat(-1));
  QSeries<Rat> inv = a.invert();
  for (long e = 0; e < 8; ++e) CHECK(*inv.coeff_ptr(e) == Rat(1));
}

TEST_CASE("shifted and truncated") {
  QSeries<Rat> a = QSeries<Rat>::monomial(2, Rat(5), 6);
  QSeries<Rat> sh = a.shifted(-2);
  CHECK(sh.trunc() == 4);
  CHECK(*sh.coeff_ptr(0) == Rat(5));
  CHECK_THROWS_AS(a.truncated(7), std::invalid_argument);
  CHECK(a.truncated(2).is_zero());
}

TEST_CASE("congruent_mod compares only below the modulus") {
  QSeries<Rat> a(10);
  a.add_term(1, Rat(2));
  a.add_term(7, Rat(1));
  QSeries<Rat> b(8);
  b.add_term(1, Rat(2));
  b.add_term(7, Rat(9));
  CHECK(congruent_mod(a, b, 7));
  CHECK(!congruent_mod(a, b, 8));
  CHECK_THROWS_AS(congruent_mod(a, b, 9), std::invalid_argument);
}

TEST_CASE("cyclotomic coefficient predicates") {
  QSeries<CycNum> s(5);
  s.add_term(0, CycNum::from_rat(7, Rat(2)));
  s.add_term(1, CycNum::zeta_pow(7, 3));
  CHECK(coefficients_integral(s));
  CHECK(!coefficients_rational(s));
  CHECK_THROWS_AS(to_rational_series(s), std::runtime_error);
  QSeries<CycNum> r(5);
  r.add_term(2, CycNum::from_rat(7, Rat(1, 3)));
  CHECK(coefficients_rational(r));
  CHECK(!coefficients_integral(r));
  CHECK(*to_rational_series(r).coeff_ptr(2) == Rat(1, 3));
}
