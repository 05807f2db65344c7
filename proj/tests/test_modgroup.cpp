#include "lambdaq/modgroup.hpp"

#include "doctest.h"

#include <stdexcept>

#include <numeric>
#include <random>
#include <set>

using namespace lambdaq;

namespace {

// Brute-force coset oracle: enumerate the bottom rows (c, d) mod N of
// Gamma_1(N)*{+-1} orbits directly.
std::set<std::pair<long, long>> bottom_row_classes(unsigned n) {
  std::set<std::pair<long, long>> classes;
  long m = n;
  for (long c = 0; c < m; ++c)
    for (long d = 0; d < m; ++d) {
      if (std::gcd(std::gcd(c, d), m) != 1) continue;
      std::pair<long, long> p{c, d};
      std::pair<long, long> q{((-c) % m + m) % m, ((-d) % m + m) % m};
      classes.insert(std::min(p, q));
    }
  return classes;
}

UniMat random_sl2(std::mt19937& rng) {
  // Random word in S and T keeps entries small and det exactly 1.
  UniMat s{0, -1, 1, 0};
  UniMat t{1, 1, 0, 1};
  UniMat m = UniMat::identity();
  std::uniform_int_distribution<int> coin(0, 2);
  for (int i = 0; i < 12; ++i) m = m * (coin(rng) == 0 ? s : t);
  return m;
}

}  // namespace

TEST_CASE("brace reduction") {
  auto b = brace(5, 7);
  CHECK(b.brace == 2);
  CHECK(b.mu == -1);
  b = brace(2, 7);
  CHECK(b.brace == 2);
  CHECK(b.mu == 1);
  b = brace(0, 9);
  CHECK(b.brace == 0);
  CHECK(b.mu == 1);
  b = brace(4, 8);  // x = N/2: mu pinned to +1
  CHECK(b.brace == 4);
  CHECK(b.mu == 1);
  b = brace(-3, 9);
  CHECK(b.brace == 3);
  CHECK(b.mu == -1);
}

TEST_CASE("brace uniqueness and symmetry over a range") {
  for (unsigned n = 2; n <= 40; ++n)
    for (long x = -2 * static_cast<long>(n); x <= 2 * static_cast<long>(n); ++x) {
      auto b = brace(x, n);
      CHECK(0 <= b.brace);
      CHECK(2 * b.brace <= static_cast<long>(n));
      // Defining congruence x = mu * brace mod N.
      CHECK(((x - b.mu * b.brace) % static_cast<long>(n) + n) % n == 0);
      CHECK(brace(-x, n).brace == b.brace);
      if (b.brace != 0 && 2 * b.brace != static_cast<long>(n))
        CHECK(brace(-x, n).mu == -b.mu);
      else
        CHECK(b.mu == 1);
    }
}

TEST_CASE("slash_data") {
  UniMat s_mat{0, -1, 1, 0};
  auto sd = slash_data(3, s_mat, 7);  // c=1, d=0: s* = 0, {sc} = 3
  CHECK(sd.s_star == 0);
  CHECK(sd.brace_sc == 3);
  sd = slash_data(3, UniMat::identity(), 7);  // c=0: s* = s, {sc} = 0
  CHECK(sd.s_star == 3);
  CHECK(sd.brace_sc == 0);
  sd = slash_data(5, UniMat::identity(), 7);  // {sc} = {0}: mu = +1, s* = sd
  CHECK(sd.s_star == 5);
  CHECK(sd.brace_sc == 0);
  sd = slash_data(3, UniMat{2, 1, 7, 4}, 7);  // c = 0 mod 7 behaves like c = 0
  CHECK(sd.s_star == 5);                      // 3*4 = 12 = 5 mod 7
  CHECK(sd.brace_sc == 0);
  CHECK_THROWS_AS(slash_data(7, UniMat::identity(), 7), std::invalid_argument);
}

TEST_CASE("coset counts match (N^2/2) prod (1 - p^-2)") {
  CHECK(coset_count(7) == 24);
  CHECK(coset_count(8) == 24);
  CHECK(coset_count(9) == 36);
  CHECK(coset_count(10) == 36);
  CHECK(coset_count(11) == 60);
  CHECK(coset_count(12) == 48);
}

TEST_CASE("transversal is a complete duplicate-free set of coset reps") {
  for (unsigned n : {7u, 8u, 9u, 10u, 12u}) {
    auto tr = transversal(n);
    CHECK(tr.size() == coset_count(n));
    CHECK(tr.size() == bottom_row_classes(n).size());
    for (const auto& m : tr) CHECK(m.det() == 1);
    for (size_t i = 0; i < tr.size(); ++i)
      for (size_t j = i + 1; j < tr.size(); ++j)
        CHECK(!same_coset(tr[i], tr[j], n));
  }
}

TEST_CASE("transversal ordering is deterministic and starts at the identity") {
  auto a = transversal(7);
  auto b = transversal(7);
  CHECK(a == b);
  CHECK(a[0] == UniMat::identity());
}

TEST_CASE("every SL2(Z) element lands in exactly one coset") {
  std::mt19937 rng(20260826);
  auto tr = transversal(8);
  for (int rep = 0; rep < 40; ++rep) {
    UniMat m = random_sl2(rng);
    REQUIRE(m.det() == 1);
    int hits = 0;
    for (const auto& a : tr) hits += same_coset(m, a, 8);
    CHECK(hits == 1);
  }
}

TEST_CASE("UniMat algebra") {
  UniMat s{0, -1, 1, 0};
  UniMat t{1, 1, 0, 1};
  CHECK((s * s) * (s * s) == UniMat::identity());
  CHECK(s * s.inverse() == UniMat::identity());
  CHECK((s * t).det() == 1);
  CHECK(s.to_string() == "[[0,-1],[1,0]]");
}
