#include "lambdaq/scan.hpp"

#include "lambdaq/qseries.hpp"

#include <atomic>
#include <mutex>
#include <numeric>
#include <sstream>
#include <thread>

namespace lambdaq {

std::string ScanReport::summary() const {
  std::ostringstream os;
  os << name << ": " << cases << " cases, " << failures.size() << " failures";
  if (!failures.empty()) os << "; first: " << failures.front();
  return os.str();
}

void parallel_for(std::size_t n, const std::function<void(std::size_t)>& fn,
                  unsigned threads) {
  if (threads == 0) threads = std::max(1u, std::thread::hardware_concurrency());
  threads = std::min<std::size_t>(threads, n);
  if (threads <= 1) {
    for (std::size_t i = 0; i < n; ++i) fn(i);
    return;
  }
  std::atomic<std::size_t> next{0};
  std::exception_ptr err;
  std::mutex err_mtx;
  auto worker = [&] {
    for (;;) {
      std::size_t i = next.fetch_add(1);
      if (i >= n) return;
      try {
        fn(i);
      } catch (...) {
        std::lock_guard<std::mutex> lock(err_mtx);
        if (!err) err = std::current_exception();
      }
    }
  };
  std::vector<std::thread> pool;
  for (unsigned t = 0; t < threads; ++t) pool.emplace_back(worker);
  for (auto& t : pool) t.join();
  if (err) std::rethrow_exception(err);
}

ScanReport lemma2_scan(unsigned max_level) {
  ScanReport rep;
  rep.name = "lemma2";
  for (unsigned n = 2; n <= max_level; ++n) {
    for (unsigned k = 1; k < n; ++k) {
      ++rep.cases;
      unsigned delta = std::gcd(k, n);
      bool expect_unit = !is_prime_power(n / delta);
      Rat nm = one_minus_zeta_pow(n, k).norm();
      if (nm < 0) nm = -nm;
      bool is_one = nm == 1;
      if (is_one != expect_unit || (!expect_unit && nm <= 1)) {
        std::ostringstream os;
        os << "N=" << n << " k=" << k << " |norm|=" << nm.str();
        rep.failures.push_back(os.str());
      }
    }
  }
  return rep;
}

ScanReport lemma1_scan(unsigned level_lo, unsigned level_hi) {
  ScanReport rep;
  rep.name = "lemma1";
  for (unsigned n = level_lo; n <= level_hi; ++n) {
    const long ln = static_cast<long>(n);
    for (long c = 0; c < ln; ++c) {
      for (long d = 0; d < ln; ++d) {
        if (std::gcd(c, d) != 1) continue;
        for (long s = 1; 2 * s <= ln; ++s) {
          for (long r = 1; 2 * r <= ln; ++r) {
            if (r == s) continue;
            BraceData rb = brace(r * c, n), sb = brace(s * c, n);
            if (rb.brace != sb.brace) continue;
            ++rep.cases;
            long rstar = rb.mu * r * d, sstar = sb.mu * s * d;
            bool bad = (rstar - sstar) % ln == 0;
            if (rb.brace == 0 || 2 * rb.brace == ln)
              bad = bad || (rstar + sstar) % ln == 0;
            if (bad) {
              std::ostringstream os;
              os << "N=" << n << " c=" << c << " d=" << d << " r=" << r
                 << " s=" << s;
              rep.failures.push_back(os.str());
            }
          }
        }
      }
    }
  }
  return rep;
}

namespace {

// Prop. 1 closed forms mod q^N, built independently of phi_slash.
QSeries<CycNum> prop1_rhs(long r, long s, const UniMat& a, unsigned n) {
  const long ln = static_cast<long>(n);
  const SlashData rd = slash_data(r, a, n), sd = slash_data(s, a, n);
  QSeries<CycNum> rhs(ln);
  auto add_u_expansion = [&](long brace_x, long xstar, int sign) {
    // sign * ( sum_n n u^n + u^{-1} q^N ), u = zeta^{xstar} q^{brace_x}
    for (long m = 1; m * brace_x < ln; ++m)
      rhs.add_term(m * brace_x,
                   CycNum::zeta_pow(n, xstar * m) * CycNum::from_rat(n, Rat(sign * m)));
    rhs.add_term(ln - brace_x,
                 CycNum::zeta_pow(n, -xstar) * CycNum::from_rat(n, Rat(sign)));
  };
  auto const_term = [&](long xstar) {
    CycNum z = CycNum::zeta_pow(n, xstar);
    CycNum om = one_minus_zeta_pow(n, xstar);
    return z * (om * om).inverse();
  };
  if (rd.brace_sc != 0 && sd.brace_sc != 0) {
    add_u_expansion(rd.brace_sc, rd.s_star, +1);
    add_u_expansion(sd.brace_sc, sd.s_star, -1);
  } else if (rd.brace_sc == 0 && sd.brace_sc != 0) {
    rhs.add_term(0, const_term(rd.s_star));
    add_u_expansion(sd.brace_sc, sd.s_star, -1);
  } else if (rd.brace_sc != 0 && sd.brace_sc == 0) {
    rhs.add_term(0, -const_term(sd.s_star));
    add_u_expansion(rd.brace_sc, rd.s_star, +1);
  } else {
    // {rc} = {sc} = 0: constant -zeta^{sd}(1-zeta^{(r-s)d})(1-zeta^{(r+s)d})
    //                   / ((1-zeta^{rd})^2 (1-zeta^{sd})^2)
    const long dd = a.d;
    CycNum num = -(CycNum::zeta_pow(n, s * dd) *
                   one_minus_zeta_pow(n, (r - s) * dd) *
                   one_minus_zeta_pow(n, (r + s) * dd));
    CycNum dr = one_minus_zeta_pow(n, r * dd);
    CycNum ds = one_minus_zeta_pow(n, s * dd);
    rhs.add_term(0, num * (dr * dr * ds * ds).inverse());
  }
  return rhs;
}

struct Case {
  unsigned n;
  UniMat a;
  long r, s;
};

std::vector<Case> rs_cases(const std::vector<unsigned>& levels) {
  std::vector<Case> cases;
  for (unsigned n : levels)
    for (const UniMat& a : transversal(n))
      for (long r = 2; 2 * r <= static_cast<long>(n); ++r)
        for (long s = 1; s < r; ++s) cases.push_back({n, a, r, s});
  return cases;
}

}  // namespace

ScanReport prop1_scan(const std::vector<unsigned>& levels) {
  ScanReport rep;
  rep.name = "prop1";
  auto cases = rs_cases(levels);
  rep.cases = cases.size();
  std::vector<std::string> fail(cases.size());
  parallel_for(cases.size(), [&](std::size_t i) {
    const Case& c = cases[i];
    QSeries<CycNum> lhs = phi_diff_slash(c.r, c.s, c.a, c.n, c.n);
    QSeries<CycNum> rhs = prop1_rhs(c.r, c.s, c.a, c.n);
    if (!congruent_mod(lhs, rhs, static_cast<long>(c.n))) {
      std::ostringstream os;
      os << "N=" << c.n << " A=" << c.a.to_string() << " r=" << c.r
         << " s=" << c.s;
      fail[i] = os.str();
    }
  });
  for (auto& f : fail)
    if (!f.empty()) rep.failures.push_back(std::move(f));
  return rep;
}

ScanReport prop2_scan(const std::vector<unsigned>& levels) {
  ScanReport rep;
  rep.name = "prop2";
  auto cases = rs_cases(levels);
  rep.cases = cases.size();
  std::vector<std::string> fail(cases.size());
  parallel_for(cases.size(), [&](std::size_t i) {
    const Case& c = cases[i];
    const long ln = static_cast<long>(c.n);
    const long t = 2 * ln;
    QSeries<CycNum> diff = phi_diff_slash(c.r, c.s, c.a, c.n, t);
    CycNum th = theta(c.r, c.s, c.a, c.n);
    long l = std::min(slash_data(c.r, c.a, c.n).brace_sc,
                      slash_data(c.s, c.a, c.n).brace_sc);
    std::string problem;
    if (th.is_zero()) problem = "theta vanishes";
    auto ord = diff.order();
    if (problem.empty() && (!ord || *ord != l)) problem = "order != min brace";
    if (problem.empty() && !(*diff.coeff_ptr(l) == th))
      problem = "leading coefficient != theta";
    if (problem.empty()) {
      // cofactor: diff / (theta q^l) must be 1 + q * (integral series)
      QSeries<CycNum> cof = diff.shifted(-l).scalar_mul(th.inverse());
      if (!cof.coeff_ptr(0) || !cof.coeff_ptr(0)->is_one())
        problem = "cofactor constant term != 1";
      else if (!coefficients_integral(cof))
        problem = "cofactor not integral";
    }
    if (!problem.empty()) {
      std::ostringstream os;
      os << "N=" << c.n << " A=" << c.a.to_string() << " r=" << c.r
         << " s=" << c.s << ": " << problem;
      fail[i] = os.str();
    }
  });
  for (auto& f : fail)
    if (!f.empty()) rep.failures.push_back(std::move(f));
  return rep;
}

std::vector<long> qualifying_k(unsigned level) {
  std::vector<long> ks;
  for (long k = 3; 2 * k < static_cast<long>(level); ++k) {
    LambdaSpec spec{level, k};
    if (spec.hypothesis_holds()) ks.push_back(k);
  }
  return ks;
}

std::vector<long> generator_range_k(unsigned level) {
  std::vector<long> ks;
  for (long k = 3; 2 * k < static_cast<long>(level); ++k) ks.push_back(k);
  return ks;
}

ScanReport prop3_scan(const std::vector<unsigned>& levels, bool include_excluded,
                      std::vector<IntegralityRecord>* records) {
  ScanReport rep;
  rep.name = "prop3";
  struct KCase {
    unsigned n;
    long k;
    UniMat a;
    bool hypothesis;
  };
  std::vector<KCase> cases;
  for (unsigned n : levels) {
    for (long k : generator_range_k(n)) {
      LambdaSpec spec{n, k};
      if (!spec.hypothesis_holds() && !include_excluded) continue;
      for (const UniMat& a : transversal(n))
        cases.push_back({n, k, a, spec.hypothesis_holds()});
    }
  }
  rep.cases = cases.size();
  std::vector<std::string> fail(cases.size());
  std::vector<IntegralityRecord> recs(cases.size());
  parallel_for(cases.size(), [&](std::size_t i) {
    const KCase& c = cases[i];
    LambdaSpec spec{c.n, c.k};
    QSeries<CycNum> lam = lambda_expansion(spec, c.a, 3 * static_cast<long>(c.n));
    bool integral = coefficients_integral(lam);
    recs[i] = {c.n, c.k, c.hypothesis, integral};
    if (c.hypothesis && !integral) {
      std::ostringstream os;
      os << "N=" << c.n << " k=" << c.k << " A=" << c.a.to_string()
         << ": non-integral coefficient";
      fail[i] = os.str();
    }
  });
  for (auto& f : fail)
    if (!f.empty()) rep.failures.push_back(std::move(f));
  if (records) *records = std::move(recs);
  return rep;
}

ScanReport distinctness_scan(const std::vector<unsigned>& levels) {
  ScanReport rep;
  rep.name = "distinctness";
  for (unsigned n : levels) {
    const long t = 4 * static_cast<long>(n);
    auto trans = transversal(n);
    for (long k : generator_range_k(n)) {
      LambdaSpec spec{n, k};
      std::vector<QSeries<CycNum>> exps;
      exps.reserve(trans.size());
      for (const UniMat& a : trans) exps.push_back(lambda_expansion(spec, a, t));
      for (std::size_t i = 0; i < exps.size(); ++i) {
        for (std::size_t j = i + 1; j < exps.size(); ++j) {
          ++rep.cases;
          if (congruent_mod(exps[i], exps[j], t)) {
            std::ostringstream os;
            os << "N=" << n << " k=" << k << " A=" << trans[i].to_string()
               << " B=" << trans[j].to_string() << ": expansions coincide";
            rep.failures.push_back(os.str());
          }
        }
      }
    }
  }
  return rep;
}

}  // namespace lambdaq
