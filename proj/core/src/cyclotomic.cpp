#include "lambdaq/cyclotomic.hpp"

#include <map>
#include <mutex>
#include <sstream>
#include <stdexcept>

namespace lambdaq {

unsigned euler_phi(unsigned n) {
  unsigned result = n;
  for (unsigned p = 2; p * p <= n; ++p) {
    if (n % p == 0) {
      while (n % p == 0) n /= p;
      result -= result / p;
    }
  }
  if (n > 1) result -= result / n;
  return result;
}

namespace {

// Per-level data shared by all CycNum operations.  Built once under a
// lock, read-only afterwards.
struct FieldData {
  CycPoly phi;
  unsigned deg = 0;
  // zeta^e reduced mod Phi_N, for 0 <= e < N.
  std::vector<std::vector<Rat>> zeta_pows;
  // x^{deg+t} mod Phi_N for 0 <= t < deg-1, used to fold product tails.
  std::vector<std::vector<Rat>> tail_reduction;
};

std::vector<Rat> reduce_mod_phi(ratpoly::Poly p, const ratpoly::Poly& phi) {
  auto [q, r] = ratpoly::divmod(p, phi);
  (void)q;
  std::vector<Rat> out(phi.size() - 1);
  for (std::size_t i = 0; i < r.size(); ++i) out[i] = r[i];
  return out;
}

const FieldData& field(unsigned n) {
  static std::mutex mtx;
  static std::map<unsigned, FieldData> cache;
  std::lock_guard<std::mutex> lock(mtx);
  auto it = cache.find(n);
  if (it != cache.end()) return it->second;

  FieldData fd;
  fd.phi = cyclotomic_polynomial(n);
  fd.deg = fd.phi.degree();
  fd.zeta_pows.resize(n);
  for (unsigned e = 0; e < n; ++e) {
    ratpoly::Poly xe(e + 1);
    xe[e] = 1;
    fd.zeta_pows[e] = reduce_mod_phi(std::move(xe), fd.phi.coeffs);
  }
  if (fd.deg > 1) {
    fd.tail_reduction.resize(fd.deg - 1);
    for (unsigned t = 0; t + 1 < fd.deg; ++t) {
      ratpoly::Poly xe(fd.deg + t + 1);
      xe[fd.deg + t] = 1;
      fd.tail_reduction[t] = reduce_mod_phi(std::move(xe), fd.phi.coeffs);
    }
  }
  return cache.emplace(n, std::move(fd)).first->second;
}

void check_levels(const CycNum& a, const CycNum& b) {
  if (a.level() != b.level())
    throw std::invalid_argument("CycNum: level mismatch (" +
                                std::to_string(a.level()) + " vs " +
                                std::to_string(b.level()) + ")");
}

}  // namespace

const CycPoly& cyclotomic_polynomial(unsigned n) {
  static std::mutex mtx;
  static std::map<unsigned, CycPoly> cache;
  std::lock_guard<std::mutex> lock(mtx);
  // Build all divisor levels bottom-up: Phi_n = (X^n - 1) / prod_{d|n, d<n} Phi_d.
  for (unsigned m = 1; m <= n; ++m) {
    if (n % m != 0 || cache.count(m)) continue;
    ratpoly::Poly num = ratpoly::x_pow_minus_one(m);
    for (unsigned d = 1; d < m; ++d) {
      if (m % d != 0) continue;
      auto q = ratpoly::divide_exact(num, cache.at(d).coeffs);
      if (!q) throw std::logic_error("cyclotomic_polynomial: inexact division");
      num = std::move(*q);
    }
    CycPoly p;
    p.level = m;
    p.coeffs = std::move(num);
    cache.emplace(m, std::move(p));
  }
  return cache.at(n);
}

CycNum CycNum::zero(unsigned level) {
  CycNum x;
  x.level_ = level;
  x.coords_.assign(euler_phi(level), Rat(0));
  return x;
}

CycNum CycNum::one(unsigned level) { return from_rat(level, Rat(1)); }

CycNum CycNum::from_rat(unsigned level, const Rat& value) {
  CycNum x = zero(level);
  x.coords_[0] = value;
  return x;
}

CycNum CycNum::zeta_pow(unsigned level, long long e) {
  const FieldData& fd = field(level);
  long long r = e % static_cast<long long>(level);
  if (r < 0) r += level;
  CycNum x;
  x.level_ = level;
  x.coords_ = fd.zeta_pows[static_cast<unsigned>(r)];
  return x;
}

CycNum CycNum::from_coords(unsigned level, std::vector<Rat> coords) {
  const FieldData& fd = field(level);
  if (coords.size() > fd.deg)
    coords = reduce_mod_phi(std::move(coords), fd.phi.coeffs);
  coords.resize(fd.deg);
  CycNum x;
  x.level_ = level;
  x.coords_ = std::move(coords);
  return x;
}

bool CycNum::is_zero() const {
  for (const auto& c : coords_)
    if (!c.is_zero()) return false;
  return true;
}

bool CycNum::is_one() const {
  if (coords_.empty() || coords_[0] != 1) return false;
  for (std::size_t i = 1; i < coords_.size(); ++i)
    if (!coords_[i].is_zero()) return false;
  return true;
}

bool CycNum::is_rational() const {
  for (std::size_t i = 1; i < coords_.size(); ++i)
    if (!coords_[i].is_zero()) return false;
  return true;
}

bool CycNum::is_integral() const {
  for (const auto& c : coords_)
    if (!is_integer(c)) return false;
  return true;
}

bool CycNum::is_unit() const {
  if (!is_integral()) return false;
  Rat n = norm();
  return n == 1 || n == -1;
}

Rat CycNum::norm() const {
  const FieldData& fd = field(level_);
  ratpoly::Poly rep(coords_.begin(), coords_.end());
  ratpoly::trim(rep);
  return ratpoly::resultant(fd.phi.coeffs, rep);
}

CycNum CycNum::inverse() const {
  if (is_zero()) throw std::domain_error("CycNum: division by zero");
  const FieldData& fd = field(level_);
  ratpoly::Poly rep(coords_.begin(), coords_.end());
  ratpoly::trim(rep);
  auto [g, u, v] = ratpoly::ext_gcd(rep, fd.phi.coeffs);
  (void)v;
  // Phi_N is irreducible over Q, so the gcd with a nonzero representative
  // of lower degree is 1.
  if (ratpoly::degree(g) != 0)
    throw std::logic_error("CycNum::inverse: non-trivial gcd with Phi_N");
  return from_coords(level_, std::vector<Rat>(u.begin(), u.end()));
}

CycNum operator+(const CycNum& a, const CycNum& b) {
  check_levels(a, b);
  CycNum r = a;
  for (std::size_t i = 0; i < r.coords_.size(); ++i) r.coords_[i] += b.coords_[i];
  return r;
}

CycNum operator-(const CycNum& a, const CycNum& b) {
  check_levels(a, b);
  CycNum r = a;
  for (std::size_t i = 0; i < r.coords_.size(); ++i) r.coords_[i] -= b.coords_[i];
  return r;
}

CycNum CycNum::operator-() const {
  CycNum r = *this;
  for (auto& c : r.coords_) c = -c;
  return r;
}

CycNum operator*(const CycNum& a, const CycNum& b) {
  check_levels(a, b);
  const FieldData& fd = field(a.level_);
  const unsigned deg = fd.deg;
  std::vector<Rat> conv(2 * deg - 1);
  for (unsigned i = 0; i < deg; ++i) {
    if (a.coords_[i].is_zero()) continue;
    for (unsigned j = 0; j < deg; ++j) {
      if (b.coords_[j].is_zero()) continue;
      conv[i + j] += a.coords_[i] * b.coords_[j];
    }
  }
  CycNum r;
  r.level_ = a.level_;
  r.coords_.assign(conv.begin(), conv.begin() + deg);
  for (unsigned t = 0; t + 1 < deg; ++t) {
    const Rat& c = conv[deg + t];
    if (c.is_zero()) continue;
    const auto& red = fd.tail_reduction[t];
    for (unsigned i = 0; i < deg; ++i)
      if (!red[i].is_zero()) r.coords_[i] += c * red[i];
  }
  return r;
}

bool operator==(const CycNum& a, const CycNum& b) {
  check_levels(a, b);
  return a.coords_ == b.coords_;
}

std::string CycNum::to_string() const {
  std::ostringstream os;
  bool first = true;
  for (std::size_t i = 0; i < coords_.size(); ++i) {
    if (coords_[i].is_zero()) continue;
    if (!first) os << " + ";
    os << coords_[i].str();
    if (i == 1) os << "*z";
    if (i > 1) os << "*z^" << i;
    first = false;
  }
  if (first) os << "0";
  return os.str();
}

std::optional<CycNum> divide_exact(const CycNum& a, const CycNum& b) {
  if (b.is_zero()) throw std::domain_error("divide_exact: division by zero");
  CycNum q = a * b.inverse();
  if (!q.is_integral()) return std::nullopt;
  return q;
}

CycNum one_minus_zeta_pow(unsigned level, long long e) {
  return CycNum::one(level) - CycNum::zeta_pow(level, e);
}

}  // namespace lambdaq
