#ifndef SHARPDEG_PARSE_HPP
#define SHARPDEG_PARSE_HPP

#include <string>

#include "sharpdeg/polynomial.hpp"
#include "sharpdeg/quadrics.hpp"

namespace sharpdeg {

enum class VarStyle { Affine, Homogeneous };  // x1..xn versus X0..Xn / z0..zn

struct ParsedPolynomial {
    Polynomial poly;
    VarStyle style;
};

// Grammar: '+'/'-' separated terms; a term is an optional integer or a/b
// coefficient followed by juxtaposed factors x3, X0^2, ...; parse(print(p))
// is the identity.
ParsedPolynomial parse_polynomial(const std::string& text);

// Parse with a fixed variable count (indices beyond it are an error).
ParsedPolynomial parse_polynomial(const std::string& text, int nvars);

std::string print_polynomial(const Polynomial& p, VarStyle style);

// map source=Q(a,b) target=Q(c,d) [ z0^2 : +1 ; z1 z2 : -1/2 ; ... ]
MonomialMap parse_map(const std::string& text);
std::string print_map(const MonomialMap& f);

} // namespace sharpdeg

#endif
