#include <map>
// Batch front end: every pipeline behind a subcommand, deterministic
// machine-readable output.  Results go to stdout, progress to stderr.
// Exit codes: 0 success/PASS, 1 verification FAIL, 2 usage error.

#include "lambdaq/json_io.hpp"
#include "lambdaq/lambda.hpp"
#include "lambdaq/modgroup.hpp"
#include "lambdaq/modpoly.hpp"
#include "lambdaq/numerics.hpp"
#include "lambdaq/scan.hpp"

#include <CLI11.hpp>

#include <cstdlib>
#include <fstream>
#include <iostream>
#include <sstream>

namespace {

using namespace lambdaq;

constexpr int kExitOk = 0;
constexpr int kExitFail = 1;
constexpr int kExitUsage = 2;

UniMat parse_matrix(const std::string& text) {
  UniMat m;
  char c1, c2, c3;
  std::istringstream is(text);
  if (!(is >> m.a >> c1 >> m.b >> c2 >> m.c >> c3 >> m.d) || c1 != ',' ||
      c2 != ',' || c3 != ',')
    throw CLI::ValidationError("--matrix", "expected a,b,c,d");
  if (m.det() != 1)
    throw CLI::ValidationError("--matrix", "determinant must be 1");
  return m;
}

// Either a discriminant ("-4") or an integer quadratic "a,b,c" meaning
// a*x^2 + b*x + c = 0.
QuadPoint parse_point(const std::string& text, unsigned prec) {
  if (text.find(',') == std::string::npos)
    return QuadPoint::from_discriminant(std::stoll(text), prec);
  long long a, b, c;
  char c1, c2;
  std::istringstream is(text);
  if (!(is >> a >> c1 >> b >> c2 >> c) || c1 != ',' || c2 != ',')
    throw CLI::ValidationError("--point", "expected D or a,b,c");
  return QuadPoint::from_quadratic(a, b, c, prec);
}

unsigned default_precision() {
  if (const char* env = std::getenv("LAMBDAQ_PREC")) {
    long v = std::atol(env);
    if (v >= 20) return static_cast<unsigned>(v);
  }
  return 150;
}

void require(bool cond, const std::string& msg) {
  if (!cond) throw CLI::ValidationError("precondition", msg);
}

int report_scans(const std::vector<ScanReport>& reps, bool json) {
  bool ok = true;
  Json out = Json::array();
  for (const auto& r : reps) {
    ok = ok && r.ok();
    if (json) {
      Json jr{{"suite", r.name},
              {"cases", r.cases},
              {"failures", Json::array()}};
      for (const auto& f : r.failures) jr["failures"].push_back(f);
      out.push_back(jr);
    } else {
      std::cout << (r.ok() ? "PASS " : "FAIL ") << r.summary() << "\n";
    }
  }
  if (json) std::cout << out.dump(2) << "\n";
  return ok ? kExitOk : kExitFail;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"exact q-expansions of generalized lambda functions, the modular "
               "equation Phi(X, j), and numeric certification of singular values"};
  app.require_subcommand(1);

  unsigned level = 7;
  long k = 3;
  long r = 2, s = 1;
  long trunc = 0;
  unsigned prec = default_precision();
  bool json = false;
  std::string matrix_text = "1,0,0,1";
  std::string point_text = "-4";
  std::string out_path;
  std::string phi_path;
  unsigned max_level = 40;
  unsigned level_lo = 7, level_hi = 9;
  bool include_excluded = false;

  auto* cmd_expand = app.add_subcommand("expand", "q-expansion of Lambda_k o A");
  cmd_expand->add_option("--level", level)->required();
  cmd_expand->add_option("--k", k)->required();
  cmd_expand->add_option("--matrix", matrix_text, "a,b,c,d with det 1");
  cmd_expand->add_option("--trunc", trunc, "truncation order (default 3N)");
  cmd_expand->add_flag("--json", json);

  auto* cmd_theta = app.add_subcommand("theta", "leading coefficient theta_{r,s}(A)");
  cmd_theta->add_option("--level", level)->required();
  cmd_theta->add_option("--r", r)->required();
  cmd_theta->add_option("--s", s)->required();
  cmd_theta->add_option("--matrix", matrix_text);
  cmd_theta->add_flag("--json", json);

  auto* cmd_trans = app.add_subcommand("transversal",
                                       "coset representatives of Gamma_1(N){+-1} in SL2(Z)");
  cmd_trans->add_option("--level", level)->required();

  auto* cmd_modpoly = app.add_subcommand("modpoly", "modular polynomial Phi(X, j)");
  cmd_modpoly->add_option("--level", level)->required();
  cmd_modpoly->add_option("--k", k)->required();
  cmd_modpoly->add_option("--trunc", trunc, "series truncation (default N*(m+4))");
  cmd_modpoly->add_option("--out", out_path, "write JSON here instead of stdout");

  auto* cmd_eval = app.add_subcommand("eval",
                                      "numeric Lambda_k and j at an imaginary quadratic point");
  cmd_eval->add_option("--level", level)->required();
  cmd_eval->add_option("--k", k)->required();
  cmd_eval->add_option("--point", point_text, "discriminant D, or a,b,c");
  cmd_eval->add_option("--prec", prec, "working precision in decimal digits");
  cmd_eval->add_flag("--json", json);

  auto* cmd_verify = app.add_subcommand("verify",
                                        "certify Lambda_k(alpha) as an algebraic integer");
  cmd_verify->add_option("--level", level)->required();
  cmd_verify->add_option("--k", k)->required();
  cmd_verify->add_option("--point", point_text);
  cmd_verify->add_option("--prec", prec);
  cmd_verify->add_option("--phi", phi_path, "load Phi(X,j) JSON instead of recomputing");
  cmd_verify->add_flag("--json", json);

  auto* cmd_lemma = app.add_subcommand("lemma-scan", "Lemma 1 + Lemma 2 exact suites");
  cmd_lemma->add_option("--max-level", max_level);
  cmd_lemma->add_flag("--json", json);

  auto* cmd_prop = app.add_subcommand("prop-scan",
                                      "exhaustive Prop. 1/2/3 property suites");
  cmd_prop->add_option("--level-lo", level_lo);
  cmd_prop->add_option("--level-hi", level_hi);
  cmd_prop->add_flag("--include-excluded", include_excluded,
                     "also record hypothesis-violating (N,k) integrality outcomes");
  cmd_prop->add_flag("--json", json);

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    int code = app.exit(e);
    return code == 0 ? kExitOk : kExitUsage;
  }

  try {
    if (*cmd_expand) {
      require(level >= 7, "lambda pipelines need N >= 7");
      require(2 < k && 2 * k < static_cast<long>(level), "need 2 < k < N/2");
      UniMat a = parse_matrix(matrix_text);
      if (trunc <= 0) trunc = 3 * static_cast<long>(level);
      LambdaSpec spec{level, k};
      QSeries<CycNum> lam = lambda_expansion(spec, a, trunc);
      if (json) {
        Json out{{"level", level}, {"k", k}, {"matrix", to_json(a)},
                 {"series", to_json(lam)},
                 {"integral", coefficients_integral(lam)}};
        std::cout << out.dump(2) << "\n";
      } else {
        std::cout << lam.to_text() << "\n";
      }
      return kExitOk;
    }

    if (*cmd_theta) {
      require(level >= 7, "need N >= 7");
      require(r != s && r > 0 && s > 0 && 2 * r <= static_cast<long>(level) &&
                  2 * s <= static_cast<long>(level),
              "need 0 < r != s <= N/2");
      UniMat a = parse_matrix(matrix_text);
      CycNum th = theta(r, s, a, level);
      if (json) {
        Json out{{"level", level}, {"r", r}, {"s", s}, {"matrix", to_json(a)},
                 {"theta", to_json(th)}};
        std::cout << out.dump(2) << "\n";
      } else {
        std::cout << th.to_string() << "\n";
      }
      return kExitOk;
    }

    if (*cmd_trans) {
      require(level >= 5, "transversal needs N >= 5");
      Json out = Json::array();
      for (const UniMat& m : transversal(level)) out.push_back(to_json(m));
      std::cout << out.dump(2) << "\n";
      return kExitOk;
    }

    if (*cmd_modpoly) {
      require(level >= 7, "lambda pipelines need N >= 7");
      require(2 < k && 2 * k < static_cast<long>(level), "need 2 < k < N/2");
      std::cerr << "computing Phi(X, j) at level " << level << ", k=" << k
                << " ..." << std::endl;
      ModPoly phi = modular_polynomial(LambdaSpec{level, k}, trunc);
      Json out = to_json(phi);
      if (out_path.empty()) {
        std::cout << out.dump(2) << "\n";
      } else {
        std::ofstream f(out_path);
        f << out.dump(2) << "\n";
      }
      return kExitOk;
    }

    if (*cmd_eval) {
      require(level >= 7, "lambda pipelines need N >= 7");
      require(2 < k && 2 * k < static_cast<long>(level), "need 2 < k < N/2");
      QuadPoint p = parse_point(point_text, prec);
      LambdaSpec spec{level, k};
      APComplex v = lambda_value(spec, p, prec);
      APComplex jv = j_value(p, prec);
      auto fmt = [&](const APComplex& z) {
        return Json{{"re", z.re.str(static_cast<int>(prec), std::ios_base::fixed)},
                    {"im", z.im.str(static_cast<int>(prec), std::ios_base::fixed)}};
      };
      Json out{{"level", level}, {"k", k}, {"point", p.description},
               {"prec", prec}, {"lambda", fmt(v)}, {"j", fmt(jv)}};
      if (json)
        std::cout << out.dump(2) << "\n";
      else
        std::cout << "lambda = " << out["lambda"]["re"].get<std::string>() << " + "
                  << out["lambda"]["im"].get<std::string>() << " i\n"
                  << "j      = " << out["j"]["re"].get<std::string>() << " + "
                  << out["j"]["im"].get<std::string>() << " i\n";
      return kExitOk;
    }

    if (*cmd_verify) {
      require(level >= 7, "lambda pipelines need N >= 7");
      require(2 < k && 2 * k < static_cast<long>(level), "need 2 < k < N/2");
      QuadPoint p = parse_point(point_text, prec);
      LambdaSpec spec{level, k};
      ModPoly phi;
      if (phi_path.empty()) {
        std::cerr << "computing Phi(X, j) at level " << level << ", k=" << k
                  << " ..." << std::endl;
        phi = modular_polynomial(spec);
      } else {
        std::ifstream f(phi_path);
        if (!f) throw std::runtime_error("cannot open " + phi_path);
        Json j;
        f >> j;
        phi = modpoly_from_json(j);
      }
      CertReport rep = certify_algebraic_integer(spec, p, prec, phi);
      Json out = to_json(rep);
      if (json)
        std::cout << out.dump(2) << "\n";
      else
        std::cout << verdict_name(rep.verdict) << "  j=" << out["j"].get<std::string>()
                  << "  residual=" << out["residual"].get<std::string>() << "\n";
      return rep.verdict == CertReport::Verdict::FAIL ? kExitFail : kExitOk;
    }

    if (*cmd_lemma) {
      std::cerr << "lemma suites through level " << max_level << " ..." << std::endl;
      std::vector<ScanReport> reps;
      reps.push_back(lemma2_scan(max_level));
      reps.push_back(lemma1_scan(7, std::min(max_level, 30u)));
      return report_scans(reps, json);
    }

    if (*cmd_prop) {
      require(level_lo >= 7 && level_hi >= level_lo && level_hi <= 12,
              "prop scans run at desk scale 7 <= N <= 12");
      std::vector<unsigned> levels;
      for (unsigned n = level_lo; n <= level_hi; ++n) levels.push_back(n);
      std::vector<ScanReport> reps;
      std::cerr << "prop1 ..." << std::endl;
      reps.push_back(prop1_scan(levels));
      std::cerr << "prop2 ..." << std::endl;
      reps.push_back(prop2_scan(levels));
      std::cerr << "prop3 ..." << std::endl;
      std::vector<IntegralityRecord> records;
      reps.push_back(prop3_scan(levels, include_excluded, &records));
      int code = report_scans(reps, json);
      if (include_excluded && !json) {
        // aggregate the recorded (not asserted) outcomes over the transversal
        std::map<std::pair<unsigned, long>, bool> agg;
        for (const auto& rec : records) {
          if (rec.hypothesis) continue;
          auto key = std::make_pair(rec.level, rec.k);
          auto it = agg.find(key);
          agg[key] = (it == agg.end() ? true : it->second) && rec.integral;
        }
        for (const auto& [key, integral] : agg)
          std::cout << "record N=" << key.first << " k=" << key.second
                    << " (hypothesis fails) all-integral="
                    << (integral ? "yes" : "no") << "\n";
      }
      return code;
    }
  } catch (const CLI::ValidationError& e) {
    std::cerr << "usage error: " << e.what() << "\n";
    return kExitUsage;
  } catch (const std::invalid_argument& e) {
    std::cerr << "usage error: " << e.what() << "\n";
    return kExitUsage;
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kExitFail;
  }
  return kExitUsage;
}
