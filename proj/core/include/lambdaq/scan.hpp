#pragma once

#include "lambdaq/lambda.hpp"

#include <functional>
#include <string>
#include <vector>

namespace lambdaq {

// Outcome of an exhaustive property scan.  Failures carry a minimal
// counterexample description.
struct ScanReport {
  std::string name;
  unsigned long long cases = 0;
  std::vector<std::string> failures;

  bool ok() const { return failures.empty(); }
  std::string summary() const;
};

// Recorded outcome of one integrality case (used by prop3 with
// --include-excluded: excluded cases are reported, never asserted).
struct IntegralityRecord {
  unsigned level = 0;
  long k = 0;
  bool hypothesis = false;
  bool integral = false;
};

// Lemma 2: for N <= max_level and 1 <= k < N, |norm(1 - zeta^k)| = 1
// exactly when N/gcd(k,N) is not a prime power.  Exact arithmetic.
ScanReport lemma2_scan(unsigned max_level);

// Lemma 1: zeta^{r*-s*} != 1 whenever {rc} = {sc} (plus the r*+s* variant
// at {rc} in {0, N/2}), over coprime (c, d) in [0, N)^2 and 0 < r != s <= N/2.
ScanReport lemma1_scan(unsigned level_lo, unsigned level_hi);

// Prop. 1: the computed (phi_r - phi_s)[A]_2 matches the case (i)/(ii)/(iii)
// closed forms coefficient-by-coefficient below q^N, over all transversal A.
ScanReport prop1_scan(const std::vector<unsigned>& levels);

// Prop. 2: theta_{r,s}(A) equals the exact leading series coefficient and
// the cofactor is 1 + q * (integral series), same ranges.
ScanReport prop2_scan(const std::vector<unsigned>& levels);

// Prop. 3: all coefficients of Lambda_k o A through q^{3N} lie in Z[zeta]
// for every qualifying (N, k) and transversal A.  With include_excluded,
// hypothesis-violating (N, k) are recorded in `records` without assertion.
ScanReport prop3_scan(const std::vector<unsigned>& levels, bool include_excluded = false,
                      std::vector<IntegralityRecord>* records = nullptr);

// Theorem 4.1 desk check: the transversal expansions of Lambda_k o A
// through q^{4N} are pairwise distinct for 2 < k < N/2.
ScanReport distinctness_scan(const std::vector<unsigned>& levels);

// Qualifying k values for the Prop. 3 suites at level N.
std::vector<long> qualifying_k(unsigned level);
// All k with 2 < k < N/2 (the generator-theorem range).
std::vector<long> generator_range_k(unsigned level);

// Bounded worker pool: runs fn(i) for i in [0, n) on up to `threads`
// workers; results are assembled by index, so output order is
// deterministic regardless of completion order.
void parallel_for(std::size_t n, const std::function<void(std::size_t)>& fn,
                  unsigned threads = 0);

}  // namespace lambdaq
