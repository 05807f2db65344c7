#include "lambdaq/json_io.hpp"

#include <stdexcept>

namespace lambdaq {

ModPoly modpoly_from_json(const Json& j) {
  ModPoly p;
  p.level = j.at("level").get<unsigned>();
  p.k = j.at("k").get<long>();
  const int degree = j.at("degree").get<int>();
  p.coeffs.resize(static_cast<std::size_t>(degree) + 1);
  for (const auto& entry : j.at("coeffs")) {
    std::size_t xdeg = entry.at(0).get<std::size_t>();
    if (xdeg >= p.coeffs.size())
      throw std::runtime_error("modpoly_from_json: X-degree out of range");
    JPoly jp;
    for (const auto& term : entry.at(1)) {
      std::size_t d = term.at(0).get<std::size_t>();
      if (jp.coeffs.size() <= d) jp.coeffs.resize(d + 1, Rat(0));
      jp.coeffs[d] = rat_from_string(term.at(1).get<std::string>());
    }
    p.coeffs[xdeg] = std::move(jp);
  }
  return p;
}

}  // namespace lambdaq
