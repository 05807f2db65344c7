#pragma once

#include "lambdaq/cyclotomic.hpp"
#include "lambdaq/rational.hpp"

#include <map>
#include <optional>
#include <sstream>
#include <stdexcept>
#include <string>

namespace lambdaq {

inline Rat coeff_inverse(const Rat& x) {
  if (x.is_zero()) throw std::domain_error("coeff_inverse: zero");
  return Rat(1) / x;
}
inline CycNum coeff_inverse(const CycNum& x) { return x.inverse(); }

// Truncated Laurent series in q = exp(2*pi*i*tau/N): the series knows
// its coefficients only for exponents strictly below trunc(), and every
// operation computes the provably correct truncation of its result.
// Coefficients C need ring ops, ==, and a free is_zero(C); CycNum and
// Rat both qualify.  Zero coefficients are never stored.  Values are
// immutable once built; all operations are pure.
template <class C>
class QSeries {
 public:
  explicit QSeries(long trunc) : trunc_(trunc) {}

  static QSeries monomial(long exponent, const C& coeff, long trunc) {
    QSeries s(trunc);
    s.add_term(exponent, coeff);
    return s;
  }

  long trunc() const { return trunc_; }
  const std::map<long, C>& terms() const { return terms_; }

  // Smallest stored exponent; nullopt when zero up to the truncation.
  std::optional<long> order() const {
    if (terms_.empty()) return std::nullopt;
    return terms_.begin()->first;
  }
  // Order for truncation bookkeeping: a series that is zero as far as
  // we can see contributes its truncation bound.
  long order_bound() const { return terms_.empty() ? trunc_ : terms_.begin()->first; }

  bool is_zero() const { return terms_.empty(); }

  const C* coeff_ptr(long exponent) const {
    auto it = terms_.find(exponent);
    return it == terms_.end() ? nullptr : &it->second;
  }

  // Merge a term in, dropping exponents at or beyond trunc and zero sums.
  void add_term(long exponent, const C& coeff) {
    if (exponent >= trunc_ || lambdaq::is_zero(coeff)) return;
    auto it = terms_.find(exponent);
    if (it == terms_.end()) {
      terms_.emplace(exponent, coeff);
    } else {
      it->second += coeff;
      if (lambdaq::is_zero(it->second)) terms_.erase(it);
    }
  }

  QSeries truncated(long t) const {
    if (t > trunc_)
      throw std::invalid_argument("QSeries::truncated: cannot raise truncation");
    QSeries r(t);
    for (const auto& [e, c] : terms_) {
      if (e >= t) break;
      r.terms_.emplace(e, c);
    }
    return r;
  }

  QSeries shifted(long delta) const {
    QSeries r(trunc_ + delta);
    for (const auto& [e, c] : terms_) r.terms_.emplace(e + delta, c);
    return r;
  }

  friend QSeries operator+(const QSeries& a, const QSeries& b) {
    QSeries r(std::min(a.trunc_, b.trunc_));
    for (const auto& [e, c] : a.terms_) r.add_term(e, c);
    for (const auto& [e, c] : b.terms_) r.add_term(e, c);
    return r;
  }

  friend QSeries operator-(const QSeries& a, const QSeries& b) { return a + (-b); }

  QSeries operator-() const {
    QSeries r(trunc_);
    for (const auto& [e, c] : terms_) r.terms_.emplace(e, -c);
    return r;
  }

  // Product truncation: min(T_a + ord(b), T_b + ord(a)).
  friend QSeries operator*(const QSeries& a, const QSeries& b) {
    long t = std::min(a.trunc_ + b.order_bound(), b.trunc_ + a.order_bound());
    QSeries r(t);
    for (const auto& [ea, ca] : a.terms_) {
      for (const auto& [eb, cb] : b.terms_) {
        if (ea + eb >= t) break;
        r.add_term(ea + eb, ca * cb);
      }
    }
    return r;
  }

  QSeries scalar_mul(const C& c) const {
    QSeries r(trunc_);
    if (lambdaq::is_zero(c)) return r;
    for (const auto& [e, x] : terms_) r.add_term(e, x * c);
    return r;
  }

  // Multiplicative inverse up to the propagated truncation: for input
  // of order o known mod q^T, the result is known mod q^{T - 2o}.
  QSeries invert() const {
    if (terms_.empty())
      throw std::domain_error("QSeries::invert: series is zero up to truncation");
    const long o = terms_.begin()->first;
    const long n_rel = trunc_ - o;  // number of known relative coefficients
    // a[k] = coefficient of q^{o+k}
    const C a0inv = coeff_inverse(terms_.begin()->second);
    std::map<long, C> b;  // relative coefficients of the inverse
    b.emplace(0, a0inv);
    for (long n = 1; n < n_rel; ++n) {
      std::optional<C> acc;
      for (const auto& [e, c] : terms_) {
        long k = e - o;
        if (k < 1) continue;
        if (k > n) break;
        auto it = b.find(n - k);
        if (it == b.end()) continue;
        C prod = c * it->second;
        if (acc)
          *acc += prod;
        else
          acc = prod;
      }
      if (acc && !lambdaq::is_zero(*acc)) b.emplace(n, -(a0inv * *acc));
    }
    QSeries r(trunc_ - 2 * o);
    for (auto& [k, c] : b) r.add_term(k - o, c);
    return r;
  }

  friend bool operator==(const QSeries& a, const QSeries& b) {
    return a.trunc_ == b.trunc_ && a.terms_ == b.terms_;
  }

  std::string to_text() const {
    std::ostringstream os;
    bool first = true;
    for (const auto& [e, c] : terms_) {
      if (!first) os << " + ";
      os << "(" << coeff_text(c) << ")";
      if (e != 0) os << "*q^" << e;
      first = false;
    }
    if (first) os << "0";
    os << " (O(q^" << trunc_ << "))";
    return os.str();
  }

 private:
  static std::string coeff_text(const Rat& c) { return c.str(); }
  static std::string coeff_text(const CycNum& c) { return c.to_string(); }

  std::map<long, C> terms_;
  long trunc_;
};

// Coefficient agreement below q^M; both series must know that far.
template <class C>
bool congruent_mod(const QSeries<C>& a, const QSeries<C>& b, long m) {
  if (a.trunc() < m || b.trunc() < m)
    throw std::invalid_argument("congruent_mod: insufficient truncation");
  auto ia = a.terms().begin(), ib = b.terms().begin();
  while (true) {
    const bool ea = ia == a.terms().end() || ia->first >= m;
    const bool eb = ib == b.terms().end() || ib->first >= m;
    if (ea && eb) return true;
    if (ea != eb) return false;
    if (ia->first != ib->first || !(ia->second == ib->second)) return false;
    ++ia;
    ++ib;
  }
}

inline bool coefficients_integral(const QSeries<CycNum>& s) {
  for (const auto& [e, c] : s.terms()) {
    (void)e;
    if (!c.is_integral()) return false;
  }
  return true;
}

// All coefficients rational (coordinates beyond index 0 vanish exactly);
// the Galois-stability certificate used by the modular-polynomial step.
inline bool coefficients_rational(const QSeries<CycNum>& s) {
  for (const auto& [e, c] : s.terms()) {
    (void)e;
    if (!c.is_rational()) return false;
  }
  return true;
}

inline QSeries<Rat> to_rational_series(const QSeries<CycNum>& s) {
  QSeries<Rat> r(s.trunc());
  for (const auto& [e, c] : s.terms()) {
    if (!c.is_rational())
      throw std::runtime_error("to_rational_series: non-rational coefficient at q^" +
                               std::to_string(e));
    r.add_term(e, c.rational_part());
  }
  return r;
}

}  // namespace lambdaq
