#include "lambdaq/modpoly.hpp"

#include <stdexcept>

namespace lambdaq {

bool JPoly::is_integral() const {
  for (const auto& c : coeffs)
    if (!is_integer(c)) return false;
  return true;
}

QSeries<Rat> eisenstein_e4(long terms) {
  QSeries<Rat> s(terms);
  s.add_term(0, Rat(1));
  for (long m = 1; m < terms; ++m) {
    Int sigma3 = 0;
    for (long d = 1; d <= m; ++d)
      if (m % d == 0) sigma3 += Int(d) * d * d;
    s.add_term(m, Rat(240) * Rat(sigma3));
  }
  return s;
}

QSeries<Rat> eisenstein_e6(long terms) {
  QSeries<Rat> s(terms);
  s.add_term(0, Rat(1));
  for (long m = 1; m < terms; ++m) {
    Int sigma5 = 0;
    for (long d = 1; d <= m; ++d)
      if (m % d == 0) sigma5 += Int(d) * d * d * d * d;
    s.add_term(m, Rat(-504) * Rat(sigma5));
  }
  return s;
}

QSeries<Rat> delta_eta(long terms) {
  // q * prod (1 - q^m)^24; the 24th power via squarings.
  QSeries<Rat> p(terms);
  p.add_term(0, Rat(1));
  for (long m = 1; m < terms; ++m) {
    QSeries<Rat> f(terms);
    f.add_term(0, Rat(1));
    f.add_term(m, Rat(-1));
    p = p * f;
  }
  QSeries<Rat> p2 = p * p;
  QSeries<Rat> p4 = p2 * p2;
  QSeries<Rat> p8 = p4 * p4;
  QSeries<Rat> p16 = p8 * p8;
  return (p16 * p8).shifted(1);
}

QSeries<Rat> j_expansion(unsigned n, long trunc) {
  if (trunc < 1) throw std::invalid_argument("j_expansion: truncation must be >= 1");
  const long ln = static_cast<long>(n);
  const long tf = trunc / ln + 4;  // q_full terms, with cushion
  QSeries<Rat> e4 = eisenstein_e4(tf);
  QSeries<Rat> num = e4 * e4 * e4;
  QSeries<Rat> jf = num * delta_eta(tf).invert();
  // Re-express in q: exponents scale by N.
  QSeries<Rat> out(jf.trunc() * ln);
  for (const auto& [e, c] : jf.terms()) out.add_term(e * ln, c);
  if (out.trunc() < trunc) throw std::logic_error("j_expansion: cushion too small");
  return out;
}

std::vector<QSeries<CycNum>> conjugate_expansions(const LambdaSpec& spec, long trunc) {
  std::vector<QSeries<CycNum>> out;
  for (const UniMat& a : transversal(spec.level))
    out.push_back(lambda_expansion(spec, a, trunc));
  return out;
}

namespace {

// Polynomials in X with q-series coefficients, little-endian in X.
using XPoly = std::vector<QSeries<CycNum>>;

XPoly xpoly_mul(const XPoly& u, const XPoly& v) {
  XPoly r;
  r.reserve(u.size() + v.size() - 1);
  for (std::size_t k = 0; k + 1 < u.size() + v.size(); ++k) {
    std::optional<QSeries<CycNum>> acc;
    for (std::size_t i = 0; i < u.size(); ++i) {
      if (k < i || k - i >= v.size()) continue;
      QSeries<CycNum> prod = u[i] * v[k - i];
      acc = acc ? *acc + prod : prod;
    }
    r.push_back(std::move(*acc));
  }
  return r;
}

XPoly product_tree(const std::vector<XPoly>& leaves, std::size_t lo, std::size_t hi) {
  if (hi - lo == 1) return leaves[lo];
  std::size_t mid = lo + (hi - lo) / 2;
  return xpoly_mul(product_tree(leaves, lo, mid), product_tree(leaves, mid, hi));
}

}  // namespace

std::vector<QSeries<Rat>> symmetric_functions(const LambdaSpec& spec, long trunc) {
  const unsigned n = spec.level;
  auto conj = conjugate_expansions(spec, trunc);
  std::vector<XPoly> leaves;
  leaves.reserve(conj.size());
  for (auto& lam : conj) {
    QSeries<CycNum> one = QSeries<CycNum>::monomial(0, CycNum::one(n), trunc);
    leaves.push_back(XPoly{-lam, std::move(one)});
  }
  XPoly phi = product_tree(leaves, 0, leaves.size());
  const std::size_t m = conj.size();
  std::vector<QSeries<Rat>> es;
  es.reserve(m);
  for (std::size_t i = 1; i <= m; ++i) {
    // coefficient of X^{m-i} is (-1)^i e_i
    QSeries<CycNum> c = i % 2 == 0 ? phi[m - i] : -phi[m - i];
    QSeries<Rat> e = to_rational_series(c);  // throws if not rational
    for (const auto& [ex, co] : e.terms()) {
      (void)co;
      if (ex % static_cast<long>(n) != 0)
        throw std::runtime_error(
            "symmetric_functions: exponent not a multiple of N (invariance failure)");
    }
    es.push_back(std::move(e));
  }
  return es;
}

JPoly express_in_j(const QSeries<Rat>& s, unsigned n) {
  const long ln = static_cast<long>(n);
  QSeries<Rat> rem = s;
  long d0 = 0;
  if (auto o = rem.order(); o && *o < 0) d0 = (-*o) / ln;
  QSeries<Rat> j = j_expansion(n, s.trunc() + 2 * (d0 + 2) * ln);
  std::vector<QSeries<Rat>> jpow;  // j^0 .. j^d0
  jpow.push_back(QSeries<Rat>::monomial(0, Rat(1), j.trunc()));
  for (long d = 1; d <= d0; ++d) jpow.push_back(jpow.back() * j);

  JPoly p;
  p.coeffs.assign(static_cast<std::size_t>(d0) + 1, Rat(0));
  while (!rem.is_zero()) {
    long e = *rem.order();
    if (e > 0 || e % ln != 0)
      throw std::runtime_error("express_in_j: nonzero residual at q^" + std::to_string(e));
    long d = -e / ln;
    Rat c = *rem.coeff_ptr(e);
    p.coeffs[static_cast<std::size_t>(d)] += c;
    rem = rem - jpow[static_cast<std::size_t>(d)].scalar_mul(c);
  }
  while (!p.coeffs.empty() && p.coeffs.back().is_zero()) p.coeffs.pop_back();
  return p;
}

long default_modpoly_trunc(unsigned n) {
  return static_cast<long>(n) * (static_cast<long>(coset_count(n)) + 4);
}

ModPoly modular_polynomial(const LambdaSpec& spec, long trunc) {
  spec.validate();
  if (trunc == 0) trunc = default_modpoly_trunc(spec.level);
  auto es = symmetric_functions(spec, trunc);
  const std::size_t m = es.size();
  ModPoly phi;
  phi.level = spec.level;
  phi.k = spec.k;
  phi.coeffs.resize(m + 1);
  phi.coeffs[m] = JPoly{{Rat(1)}};
  for (std::size_t i = 1; i <= m; ++i) {
    QSeries<Rat> c = i % 2 == 0 ? es[i - 1] : -es[i - 1];
    JPoly p = express_in_j(c, spec.level);
    if (!p.is_integral())
      throw std::runtime_error("modular_polynomial: non-integer coefficient at X^" +
                               std::to_string(m - i));
    phi.coeffs[m - i] = std::move(p);
  }
  return phi;
}

QSeries<Rat> evaluate_jpoly(const JPoly& p, const std::vector<QSeries<Rat>>& j_powers) {
  QSeries<Rat> acc(j_powers.empty() ? 1 : j_powers[0].trunc());
  for (std::size_t i = 0; i < p.coeffs.size(); ++i) {
    if (p.coeffs[i].is_zero()) continue;
    acc = acc + j_powers.at(i).scalar_mul(p.coeffs[i]);
  }
  return acc;
}

namespace {

QSeries<CycNum> to_cyc_series(const QSeries<Rat>& s, unsigned n) {
  QSeries<CycNum> r(s.trunc());
  for (const auto& [e, c] : s.terms()) r.add_term(e, CycNum::from_rat(n, c));
  return r;
}

}  // namespace

QSeries<CycNum> modpoly_residual(const ModPoly& phi, const LambdaSpec& spec,
                                 const UniMat& a, long trunc) {
  const unsigned n = spec.level;
  QSeries<CycNum> lam = lambda_expansion(spec, a, trunc);
  QSeries<Rat> j = j_expansion(n, trunc);
  int max_jdeg = 0;
  for (const auto& p : phi.coeffs) max_jdeg = std::max(max_jdeg, p.degree());
  std::vector<QSeries<Rat>> jpow;
  jpow.push_back(QSeries<Rat>::monomial(0, Rat(1), j.trunc()));
  for (int d = 1; d <= max_jdeg; ++d) jpow.push_back(jpow.back() * j);

  // Horner in X
  QSeries<CycNum> acc = to_cyc_series(evaluate_jpoly(phi.coeffs.back(), jpow), n);
  for (int i = phi.degree() - 1; i >= 0; --i)
    acc = acc * lam + to_cyc_series(evaluate_jpoly(phi.coeffs[static_cast<std::size_t>(i)], jpow), n);
  return acc;
}

}  // namespace lambdaq
