#ifndef SHARPDEG_RATIONAL_HPP
#define SHARPDEG_RATIONAL_HPP

#include <gmpxx.h>

#include <string>

#include "sharpdeg/errors.hpp"

namespace sharpdeg {

// All coefficients and weighted counts are exact rationals.  No floating
// point is used anywhere in the core.
using Rational = mpq_class;
using Integer = mpz_class;

inline Rational rat(long num, long den = 1) {
    Rational r(num, den);
    r.canonicalize();
    return r;
}

inline int sign_of(const Rational& r) { return sgn(r); }

// Canonical text form: "p" or "p/q" with q > 1.
inline std::string rational_to_string(const Rational& r) {
    Rational c = r;
    c.canonicalize();
    if (c.get_den() == 1) return c.get_num().get_str();
    return c.get_num().get_str() + "/" + c.get_den().get_str();
}

inline Rational rational_from_string(const std::string& s) {
    Rational r;
    if (r.set_str(s, 10) != 0) throw PreconditionError("bad rational literal: " + s);
    if (r.get_den() == 0) throw PreconditionError("zero denominator: " + s);
    r.canonicalize();
    return r;
}

} // namespace sharpdeg

#endif
