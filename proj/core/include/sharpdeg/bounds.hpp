#ifndef SHARPDEG_BOUNDS_HPP
#define SHARPDEG_BOUNDS_HPP

#include <optional>
#include <string>
#include <vector>

#include "sharpdeg/diagram.hpp"
#include "sharpdeg/polynomial.hpp"

namespace sharpdeg {

struct BoundEntry {
    std::string tag;      // stable rule id, e.g. "T1.1i"
    Rational value;       // the bound as an exact rational
    bool satisfied = false;
    bool sharp = false;       // equality attained
    bool conditional = false; // hypotheses could not be verified exactly
    std::string note;
};

struct BoundTable {
    bool unbounded = false;  // one variable admits no degree bound at all
    std::vector<BoundEntry> entries;
};

enum class BoundClass { Positive2D, Positive3D, Indecomposable2D, IndecomposableGeneral, CRMap };

// Formula values only; callers fill in satisfied/sharp against an actual
// degree.  N is interpreted per rule (affine term count for T1.*, monomial
// count of the homogeneous polynomial for T7.*).
BoundTable bound_table(int n, int N, BoundClass cls);

struct BoundReport {
    int n = 0;
    int N = 0;
    Rational actual_degree;
    std::vector<BoundEntry> bounds;
};

// Classify an affine polynomial and report every applicable degree bound.
BoundReport verify_bound(const Polynomial& p);

struct PullbackResult {
    Polynomial composed;            // element of the two-variable class
    int big_degree = 0;             // degree of the plugged-in sharp family
    std::vector<int> permutation;   // variable order placing the pure monomial last
    int t_exponent = 0;             // collapsed exponent of the witness monomial
    Rational degree_lower_bound;    // d*D - t_exponent
    Rational bound_value;           // 2n(2N-5)/(3n^2-3n-2) for the input
};

// Composition with the flipped two-variable sharp family.  Input is a
// homogeneous multiple of the hyperplane form in n+1 >= 4 variables with a
// pure monomial; checks divisibility, monomial economy, and the bound.
PullbackResult pullback_compose(const Polynomial& P);

struct CollapseResult {
    Polynomial collapsed;          // multiple of X_0+X_1+T in three variables
    std::vector<int> ordering;     // variable permutation used
    std::vector<Rational> weights; // the substituted point on the collapsed hyperplane
    Rational p_degree_lower;       // d/(n-1)
    Rational bound_value;          // (n-1)(2N-5)
};

CollapseResult collapse_to_two_vars(const Polynomial& P);

struct DependenceReport {
    int d = 0;
    std::vector<int> per_variable;  // terms depending on each variable
    bool all_meet_degree = false;
    std::optional<BoundEntry> corollary;  // (N-1)/(n-1) when a top monomial uses <= 3 variables
};

DependenceReport variable_dependence_check(const Polynomial& p);

struct FilledObservation {
    int d = 0;
    Rational face_minimum;     // per-face minimum of edge/3 + interior
    Rational certified_lower;  // 10 * face_minimum + 5
    int whitney_nodes = 0;     // d(n-1)+2 attained by the path family
    bool verdict = false;      // certified_lower > 3d+2
};

// Four-variable observation: a filled diagram has more than 3d+2 nodes while
// the path family attains exactly 3d+2.
FilledObservation filled_observation_check(int d, std::size_t cap = 22);

} // namespace sharpdeg

#endif
