#pragma once

#include <boost/multiprecision/gmp.hpp>

#include <numeric>
#include <stdexcept>
#include <string>

namespace dehnforge {

// Exact arithmetic backends.  All coefficient/exponent arithmetic in the
// algebraic modules goes through these; no floating point.
using Integer  = boost::multiprecision::mpz_int;
using Rational = boost::multiprecision::mpq_rational;

inline Integer rat_num(const Rational& r) { return numerator(r); }
inline Integer rat_den(const Rational& r) { return denominator(r); }

inline Rational make_rational(long num, long den = 1) {
    if (den == 0) throw std::invalid_argument("rational with zero denominator");
    return Rational(num, den);
}

/// Parse "p/q" or "p" into an exact rational.
inline Rational parse_rational(const std::string& s) {
    auto slash = s.find('/');
    if (slash == std::string::npos) return Rational(Integer(s));
    Integer num(s.substr(0, slash));
    Integer den(s.substr(slash + 1));
    if (den == 0) throw std::invalid_argument("rational with zero denominator: " + s);
    return Rational(num, den);
}

inline Integer int_lcm(const Integer& a, const Integer& b) {
    if (a == 0 || b == 0) return 0;
    return boost::multiprecision::lcm(a, b);
}

/// Least common multiple of denominators, i.e. the smallest N with N*r
/// integral for every r supplied so far.  Start from 1 and fold.
inline Integer fold_denominator_lcm(Integer acc, const Rational& r) {
    return int_lcm(acc, rat_den(r));
}

inline bool is_integral(const Rational& r) { return rat_den(r) == 1; }

inline double to_double(const Rational& r) { return r.convert_to<double>(); }

}  // namespace dehnforge
