#include "lambdaq/modgroup.hpp"

#include <numeric>
#include <sstream>
#include <stdexcept>

namespace lambdaq {

namespace {

long long mod_reduce(long long x, unsigned n) {
  long long r = x % static_cast<long long>(n);
  return r < 0 ? r + n : r;
}

long long gcd_ll(long long a, long long b) { return std::gcd(a < 0 ? -a : a, b < 0 ? -b : b); }

// x*a + y*b = gcd(a,b)
void ext_gcd_ll(long long a, long long b, long long& x, long long& y) {
  if (b == 0) {
    x = a >= 0 ? 1 : -1;
    y = 0;
    return;
  }
  long long x1, y1;
  ext_gcd_ll(b, a % b, x1, y1);
  x = y1;
  y = x1 - (a / b) * y1;
}

}  // namespace

std::string UniMat::to_string() const {
  std::ostringstream os;
  os << "[[" << a << "," << b << "],[" << c << "," << d << "]]";
  return os.str();
}

BraceData brace(long long x, unsigned n) {
  if (n < 1) throw std::invalid_argument("brace: level must be positive");
  long long r = mod_reduce(x, n);
  if (r == 0) return {0, 1};
  if (2 * r == n) return {static_cast<long>(r), 1};
  if (2 * r < n) return {static_cast<long>(r), 1};
  return {static_cast<long>(n - r), -1};
}

SlashData slash_data(long long s, const UniMat& a, unsigned n) {
  if (mod_reduce(s, n) == 0)
    throw std::invalid_argument("slash_data: s must not be 0 mod N");
  BraceData bs = brace(s * a.c, n);
  SlashData out;
  out.brace_sc = bs.brace;
  out.s_star = static_cast<long>(mod_reduce(bs.mu * s * a.d, n));
  return out;
}

unsigned long coset_count(unsigned n) {
  // N^2 * prod (1 - p^-2), halved for the sign identification.
  unsigned long num = static_cast<unsigned long>(n) * n;
  unsigned m = n;
  for (unsigned p = 2; p * p <= m; ++p) {
    if (m % p != 0) continue;
    while (m % p == 0) m /= p;
    num = num / (p * p) * (p * p - 1);
  }
  if (m > 1) num = num / (m * m) * (m * m - 1);
  return num / 2;
}

std::vector<UniMat> transversal(unsigned n) {
  if (n < 5) throw std::invalid_argument("transversal: level must be >= 5");
  std::vector<UniMat> out;
  out.reserve(coset_count(n));
  for (unsigned c0 = 0; c0 < n; ++c0) {
    for (unsigned d0 = 0; d0 < n; ++d0) {
      if (std::gcd(std::gcd(c0, d0), n) != 1) continue;
      // Keep the lexicographically smaller of (c0,d0) and its negation.
      unsigned nc = (n - c0) % n, nd = (n - d0) % n;
      if (std::make_pair(nc, nd) < std::make_pair(c0, d0)) continue;
      // Lift to SL2(Z): bottom row (c, d) congruent to (c0, d0) mod N
      // with gcd(c, d) = 1.  c0 = 0 needs c = N unless d0 = 1.
      long long c = c0;
      if (c0 == 0 && d0 != 1) c = n;
      long long d = d0;
      if (c == 0) {
        d = 1;  // the identity class
      } else {
        while (gcd_ll(c, d) != 1) d += n;
      }
      long long x, y;
      ext_gcd_ll(d, c, x, y);  // x*d + y*c = 1
      UniMat m{x, -y, c, d};
      if (m.det() != 1) throw std::logic_error("transversal: lift has det != 1");
      out.push_back(m);
    }
  }
  if (out.size() != coset_count(n))
    throw std::logic_error("transversal: size disagrees with the index formula");
  return out;
}

bool same_coset(const UniMat& a, const UniMat& b, unsigned n) {
  UniMat m = a * b.inverse();
  if (mod_reduce(m.c, n) != 0) return false;
  long long r = mod_reduce(m.a, n);
  return r == 1 || r == static_cast<long long>(n) - 1;
}

}  // namespace lambdaq
