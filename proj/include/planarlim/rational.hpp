#pragma once

#include <boost/multiprecision/cpp_int.hpp>

#include <string>

#include "graph.hpp"

namespace planarlim {

/// Exact rational numbers (arbitrary precision).
using Rational = boost::multiprecision::cpp_rational;

/// "p/q" in lowest terms, with q > 0 (q = 1 is written out).
inline std::string to_fraction(const Rational& x) {
  const auto q = boost::multiprecision::denominator(x);
  if (q == 1) return boost::multiprecision::numerator(x).str();
  return boost::multiprecision::numerator(x).str() + "/" + q.str();
}

inline Rational parse_fraction(const std::string& text) {
  try {
    const auto slash = text.find('/');
    if (slash == std::string::npos) return Rational(boost::multiprecision::cpp_int(text));
    const boost::multiprecision::cpp_int p(text.substr(0, slash));
    const boost::multiprecision::cpp_int q(text.substr(slash + 1));
    if (q == 0) throw InvalidInput("zero denominator");
    return Rational(p, q);
  } catch (const std::runtime_error&) {
    throw InvalidInput("not a fraction: '" + text + "'");
  }
}

inline double to_double(const Rational& x) { return x.convert_to<double>(); }

}  // namespace planarlim
