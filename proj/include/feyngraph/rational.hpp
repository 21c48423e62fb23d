#pragma once

#include <gmpxx.h>
#include <stdexcept>
#include <string>

namespace feyngraph {

// Exact rational scalar used throughout. GMP keeps Bareiss minors and
// antipode coefficients exact without overflow concerns.
using Rational = mpq_class;

inline Rational rat(long num, long den = 1) {
    if (den == 0) throw std::invalid_argument("rational with zero denominator");
    Rational r(num, den);
    r.canonicalize();
    return r;
}

// Serialized form is always "p/q" in lowest terms, q > 0, including "1/1".
inline std::string rat_str(const Rational& r) {
    return r.get_num().get_str() + "/" + r.get_den().get_str();
}

// Accepts "p/q" or a bare integer "p".
inline Rational rat_parse(const std::string& text) {
    Rational r;
    if (r.set_str(text, 10) != 0)
        throw std::invalid_argument("bad rational literal: '" + text + "'");
    if (r.get_den() == 0)
        throw std::invalid_argument("zero denominator: '" + text + "'");
    r.canonicalize();
    return r;
}

inline Rational factorial(int n) {
    Rational r = 1;
    for (int i = 2; i <= n; ++i) r *= i;
    return r;
}

} // namespace feyngraph
