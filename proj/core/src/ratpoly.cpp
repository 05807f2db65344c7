#include "lambdaq/ratpoly.hpp"

#include <stdexcept>

namespace lambdaq::ratpoly {

void trim(Poly& p) {
  while (!p.empty() && p.back().is_zero()) p.pop_back();
}

int degree(const Poly& p) { return static_cast<int>(p.size()) - 1; }

Poly add(const Poly& a, const Poly& b) {
  Poly r(std::max(a.size(), b.size()));
  for (std::size_t i = 0; i < r.size(); ++i) {
    if (i < a.size()) r[i] += a[i];
    if (i < b.size()) r[i] += b[i];
  }
  trim(r);
  return r;
}

Poly sub(const Poly& a, const Poly& b) {
  Poly r(std::max(a.size(), b.size()));
  for (std::size_t i = 0; i < r.size(); ++i) {
    if (i < a.size()) r[i] += a[i];
    if (i < b.size()) r[i] -= b[i];
  }
  trim(r);
  return r;
}

Poly mul(const Poly& a, const Poly& b) {
  if (a.empty() || b.empty()) return {};
  Poly r(a.size() + b.size() - 1);
  for (std::size_t i = 0; i < a.size(); ++i) {
    if (a[i].is_zero()) continue;
    for (std::size_t j = 0; j < b.size(); ++j) r[i + j] += a[i] * b[j];
  }
  trim(r);
  return r;
}

Poly neg(const Poly& a) {
  Poly r = a;
  for (auto& c : r) c = -c;
  return r;
}

Poly scale(const Poly& a, const Rat& c) {
  if (c.is_zero()) return {};
  Poly r = a;
  for (auto& x : r) x *= c;
  return r;
}

std::pair<Poly, Poly> divmod(const Poly& a, const Poly& b) {
  if (b.empty()) throw std::domain_error("ratpoly: division by zero polynomial");
  Poly rem = a;
  trim(rem);
  const int db = degree(b);
  if (degree(rem) < db) return {{}, rem};
  Poly quot(rem.size() - b.size() + 1);
  const Rat& lc = b.back();
  for (int i = degree(rem); i >= db; --i) {
    if (rem[i].is_zero()) continue;
    Rat c = rem[i] / lc;
    quot[i - db] = c;
    for (int j = 0; j <= db; ++j) rem[i - db + j] -= c * b[j];
  }
  trim(quot);
  trim(rem);
  return {quot, rem};
}

std::optional<Poly> divide_exact(const Poly& a, const Poly& b) {
  auto [q, r] = divmod(a, b);
  if (!r.empty()) return std::nullopt;
  return q;
}

std::tuple<Poly, Poly, Poly> ext_gcd(const Poly& a, const Poly& b) {
  Poly r0 = a, r1 = b;
  trim(r0);
  trim(r1);
  Poly u0 = {Rat(1)}, v0 = {}, u1 = {}, v1 = {Rat(1)};
  while (!r1.empty()) {
    auto [q, r] = divmod(r0, r1);
    Poly u = sub(u0, mul(q, u1));
    Poly v = sub(v0, mul(q, v1));
    r0 = std::move(r1);
    r1 = std::move(r);
    u0 = std::move(u1);
    u1 = std::move(u);
    v0 = std::move(v1);
    v1 = std::move(v);
  }
  if (!r0.empty() && r0.back() != 1) {
    Rat inv = Rat(1) / r0.back();
    r0 = scale(r0, inv);
    u0 = scale(u0, inv);
    v0 = scale(v0, inv);
  }
  return {r0, u0, v0};
}

Rat resultant(const Poly& f, const Poly& g) {
  Poly a = f, b = g;
  trim(a);
  trim(b);
  // res(f,g) = lc(f)^deg(g) * prod g evaluated at the roots of f.
  if (a.empty() || b.empty()) return Rat(0);
  if (degree(a) == 0) {
    Rat r(1);
    for (int i = 0; i < degree(b); ++i) r *= a[0];
    return r;
  }
  if (degree(b) == 0) {
    Rat r(1);
    for (int i = 0; i < degree(a); ++i) r *= b[0];
    return r;
  }
  if (degree(a) < degree(b)) {
    Rat sign = (degree(a) * degree(b)) % 2 == 0 ? 1 : -1;
    return sign * resultant(b, a);
  }
  // deg a >= deg b >= 1: res(a,b) = (-1)^{da db} lc(b)^{da-dr} res(b, a mod b)
  auto [q, r] = divmod(a, b);
  (void)q;
  if (r.empty()) return Rat(0);
  Rat lead(1);
  for (int i = 0; i < degree(a) - degree(r); ++i) lead *= b.back();
  Rat sign = (degree(a) * degree(b)) % 2 == 0 ? 1 : -1;
  return sign * lead * resultant(b, r);
}

Poly x_pow_minus_one(unsigned n) {
  Poly p(n + 1);
  p[0] = -1;
  p[n] = 1;
  return p;
}

}  // namespace lambdaq::ratpoly
