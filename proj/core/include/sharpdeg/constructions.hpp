#ifndef SHARPDEG_CONSTRUCTIONS_HPP
#define SHARPDEG_CONSTRUCTIONS_HPP

#include <utility>
#include <vector>

#include "sharpdeg/polynomial.hpp"

namespace sharpdeg {

// Generalized Whitney polynomial: start from x_1 + ... + x_n and repeatedly
// replace a top-degree monomial m by m * s.  choices[i], when given, names
// the degree-(i+1) monomial replaced at step i+2; the default is the pure
// power of the last variable.  The result has d(n-1)+1 terms.
Polynomial whitney(int n, int d, const std::vector<MultiIndex>& choices = {});

// The sharp cubic pair: x1^3 + 3 x1 x2 + x2^3 in two variables, and its
// three-variable image under x2 -> x2 + x3 (seven terms, degree (N-1)/2).
std::pair<Polynomial, Polynomial> faran_cubics();

// p - m + m*g for a degree-d monomial m of p and g in {s, three-variable
// sharp cubic up to permutation}; raises degree by deg(g) keeping sharpness.
Polynomial sharp_extend(const Polynomial& p, const MultiIndex& m, const Polynomial& g);

// Two-variable sharp family for odd d with (d+3)/2 terms, built from the
// power-sum recurrence g_k = x g_{k-1} + y g_{k-2}; constancy on x + y = 1
// and nonnegativity are checked at construction.
Polynomial dkr_sharp_2d(int d);

struct UndoingDecomposition {
    int n = 0;
    int d = 0;
    // coefficients of the terms of degree < d, keyed by exponent
    std::map<MultiIndex, Rational, GradedLexAsc> coefficients;
};

// p = s^d + sum c_a x^a (1 - s^(d-|a|)): extracts the c_a and checks the
// identity; a homogeneous member must equal s^d.
UndoingDecomposition undoing_decomposition(const Polynomial& p);
Polynomial rebuild(const UndoingDecomposition& u);

// All sharp p (N = 2d+1, nonnegative, p = 1 on s = 1, three variables) whose
// quotient diagram has maximal support.  Exhaustive over the admissible
// subtraction patterns; d in {6,7} only behind allow_long.
std::vector<Polynomial> filledsharp_search(int d, bool allow_long = false);

} // namespace sharpdeg

#endif
