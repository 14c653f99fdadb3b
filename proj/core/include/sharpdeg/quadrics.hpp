#ifndef SHARPDEG_QUADRICS_HPP
#define SHARPDEG_QUADRICS_HPP

#include <string>
#include <vector>

#include "sharpdeg/bounds.hpp"
#include "sharpdeg/polynomial.hpp"

namespace sharpdeg {

// Affine hyperquadric signature: a positive and b negative squared moduli.
// Q(n, 0) is the sphere S^(2n-1).
struct HyperquadricSignature {
    int pos = 0;
    int neg = 0;

    friend bool operator==(const HyperquadricSignature&, const HyperquadricSignature&) = default;
};

// One component of a monomial map in homogeneous coordinates: the squared
// magnitude of its coefficient, its exponent, and the sign of the target
// coordinate it occupies.  Phases never matter here, so the squared
// magnitude is the whole coefficient datum.
struct MapComponent {
    Rational coeff_sq;    // > 0
    MultiIndex exponent;  // over n+1 homogeneous variables
    bool negative_slot = false;
};

struct MonomialMap {
    HyperquadricSignature source;  // affine signature; n = pos + neg
    HyperquadricSignature target;  // affine signature of the target
    std::vector<MapComponent> components;

    int nvars() const { return source.pos + source.neg + 1; }
    int degree() const;  // common degree of the components
    void validate() const;
};

// Signed sum of the squared-magnitude monomials, one per component.
Polynomial real_polynomial_of_map(const MonomialMap& f);

// Sphere-target map whose squared component magnitudes are the coefficients
// of p, plus the homogenizing slot; inverts real_polynomial_of_map up to
// homogenization.
MonomialMap map_of_positive_polynomial(const Polynomial& p);

struct QuadricCheck {
    bool valid = false;
    std::vector<int> witness_form;  // +-1 per homogeneous coordinate
};

// True iff the real polynomial vanishes on the source hyperquadric, i.e. is
// an exact multiple of a signed linear form with the source signature.
QuadricCheck verify_quadric_map(const MonomialMap& f);

struct MapDecomposition {
    enum class Kind { Indecomposable, Decomposable, Indeterminate };
    Kind kind = Kind::Indecomposable;
    std::vector<std::vector<int>> groups;  // component indices per summand
};

// Search for a direct-sum split into two hyperquadric maps over a common
// source form.  Exact for component counts within the cap; a disconnected
// real-polynomial support decides larger maps, otherwise indeterminate.
MapDecomposition monomial_decomposability(const MonomialMap& f, std::size_t cap = 20);

// Degree bounds for the map with hypothesis flags (linear independence,
// indecomposability, sphere targets); unverifiable hypotheses mark the
// entries conditional.
BoundReport degree_report(const MonomialMap& f);

} // namespace sharpdeg

#endif
