#pragma once

#include <boost/multiprecision/gmp.hpp>

#include <string>

namespace lambdaq {

using Int = boost::multiprecision::mpz_int;
using Rat = boost::multiprecision::mpq_rational;

inline bool is_zero(const Rat& x) { return x.is_zero(); }
inline bool is_integer(const Rat& x) { return denominator(x) == 1; }

// "p/q" with the "/q" part omitted for integers; this is the wire form
// used by all JSON output.
inline std::string rat_to_string(const Rat& x) { return x.str(); }

inline Rat rat_from_string(const std::string& s) { return Rat(s); }

}  // namespace lambdaq
