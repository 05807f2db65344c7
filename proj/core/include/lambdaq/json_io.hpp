#pragma once

#include "lambdaq/modpoly.hpp"
#include "lambdaq/numerics.hpp"
#include "lambdaq/qseries.hpp"

#include <json.hpp>

namespace lambdaq {

// Deterministic JSON forms: object keys in fixed insertion order, terms
// in ascending exponent order, rationals as "p/q" strings.
using Json = nlohmann::ordered_json;

inline Json to_json(const CycNum& x) {
  Json coeffs = Json::array();
  for (const auto& c : x.coords()) coeffs.push_back(rat_to_string(c));
  return Json{{"level", x.level()}, {"coeffs", coeffs}};
}

inline Json to_json(const Rat& x) { return rat_to_string(x); }

template <class C>
Json to_json(const QSeries<C>& s) {
  Json terms = Json::array();
  for (const auto& [e, c] : s.terms()) terms.push_back(Json::array({e, to_json(c)}));
  return Json{{"trunc", s.trunc()}, {"terms", terms}};
}

inline Json to_json(const UniMat& m) {
  return Json::array({Json::array({m.a, m.b}), Json::array({m.c, m.d})});
}

inline Json to_json(const ModPoly& p) {
  Json coeffs = Json::array();
  for (std::size_t i = 0; i < p.coeffs.size(); ++i) {
    Json jc = Json::array();
    const auto& jp = p.coeffs[i];
    for (std::size_t d = 0; d < jp.coeffs.size(); ++d) {
      if (jp.coeffs[d].is_zero()) continue;
      jc.push_back(Json::array({d, rat_to_string(jp.coeffs[d])}));
    }
    coeffs.push_back(Json::array({i, jc}));
  }
  return Json{{"level", p.level},
              {"k", p.k},
              {"degree", p.degree()},
              {"coeffs", coeffs}};
}

ModPoly modpoly_from_json(const Json& j);

inline Json to_json(const CertReport& r) {
  return Json{{"value",
               Json{{"re", r.value.re.str(static_cast<int>(r.value.prec), std::ios_base::fixed)},
                    {"im", r.value.im.str(static_cast<int>(r.value.prec), std::ios_base::fixed)}}},
              {"j", r.j_recognized ? r.j_int.str() : std::string("unrecognized")},
              {"residual", r.residual.str(3, std::ios_base::scientific)},
              {"verdict", verdict_name(r.verdict)}};
}

}  // namespace lambdaq
