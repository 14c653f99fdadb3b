#ifndef SHARPDEG_POLYNOMIAL_HPP
#define SHARPDEG_POLYNOMIAL_HPP

#include <map>
#include <optional>
#include <span>
#include <string>
#include <vector>

#include "sharpdeg/errors.hpp"
#include "sharpdeg/multi_index.hpp"
#include "sharpdeg/rational.hpp"

namespace sharpdeg {

// Sparse multivariate polynomial with exact rational coefficients.
// Terms are kept in descending graded-lex order so begin() is the lead term.
// Zero coefficients are never stored.
class Polynomial {
public:
    using TermMap = std::map<MultiIndex, Rational, GradedLexDesc>;

    explicit Polynomial(int nvars = 0) : nvars_(nvars) {}

    static Polynomial zero(int nvars) { return Polynomial(nvars); }

    static Polynomial constant(int nvars, const Rational& c) {
        Polynomial p(nvars);
        p.add_term(MultiIndex(static_cast<std::size_t>(nvars)), c);
        return p;
    }

    static Polynomial monomial(int nvars, const MultiIndex& m, const Rational& c) {
        Polynomial p(nvars);
        p.add_term(m, c);
        return p;
    }

    static Polynomial variable(int nvars, int j) {
        return monomial(nvars, MultiIndex::unit(static_cast<std::size_t>(nvars),
                                                static_cast<std::size_t>(j)),
                        Rational(1));
    }

    // x_1 + ... + x_n (or X_0 + ... + X_n when nvars counts homogeneous vars)
    static Polynomial hyperplane_sum(int nvars) {
        Polynomial p(nvars);
        for (int j = 0; j < nvars; ++j)
            p.add_term(MultiIndex::unit(static_cast<std::size_t>(nvars),
                                        static_cast<std::size_t>(j)),
                       Rational(1));
        return p;
    }

    int nvars() const { return nvars_; }
    bool is_zero() const { return terms_.empty(); }
    std::size_t term_count() const { return terms_.size(); }
    const TermMap& terms() const { return terms_; }

    Rational coeff(const MultiIndex& m) const {
        auto it = terms_.find(m);
        return it == terms_.end() ? Rational(0) : it->second;
    }

    // Accumulates into the coefficient, purging zeros.
    void add_term(const MultiIndex& m, const Rational& c);

    // Highest total degree; -1 on the zero polynomial.
    int degree() const;

    bool is_homogeneous(int* deg = nullptr) const;

    Polynomial& operator+=(const Polynomial& o);
    Polynomial& operator-=(const Polynomial& o);
    friend Polynomial operator+(Polynomial a, const Polynomial& b) { return a += b; }
    friend Polynomial operator-(Polynomial a, const Polynomial& b) { return a -= b; }
    friend Polynomial operator*(const Polynomial& a, const Polynomial& b);
    Polynomial operator-() const;
    Polynomial scaled(const Rational& c) const;

    friend bool operator==(const Polynomial& a, const Polynomial& b) {
        return a.nvars_ == b.nvars_ && a.terms_ == b.terms_;
    }

    // Replace variable `var` by a polynomial in the same variable set.
    Polynomial substitute(int var, const Polynomial& replacement) const;

    Rational evaluate(std::span<const Rational> point) const;

    std::string debug_string() const;

private:
    void check_compatible(const Polynomial& o) const;

    int nvars_;
    TermMap terms_;
};

// Homogenize p(x)-1 with an auxiliary variable to degree deg(p), then flip
// the auxiliary sign so that the result vanishes on X_0 + ... + X_n = 0
// whenever p = 1 on x_1 + ... + x_n = 1.  The new variable becomes index 0.
Polynomial homogenize_and_flip(const Polynomial& p);

// Exact division of P by the linear form sum_j signs[j] * X_j (signs are
// +-1).  Returns the quotient, or nullopt if the remainder is nonzero.
std::optional<Polynomial> try_divide_by_linear(const Polynomial& P, std::span<const int> signs);

std::optional<Polynomial> try_divide_by_s(const Polynomial& P);

// Throwing variant of try_divide_by_s; failure means P is not a multiple of
// the hyperplane form.
Polynomial divide_by_s(const Polynomial& P);

struct PDegreeCount {
    int p_degree;        // degree after removing the common monomial factor
    int degree;
    int monomial_count;  // N(P)
    MultiIndex common_factor;
};

PDegreeCount p_degree_and_count(const Polynomial& P);

struct ClassReport {
    bool in_I = false;  // homogenization is an exact multiple of X_0+...+X_n
    bool in_H = false;  // nonnegative coefficients and p = 1 on x_1+...+x_n = 1
    int degree = 0;
    int p_degree = 0;         // of the homogenized polynomial
    int monomial_count = 0;   // N(p)
    // Connectivity of the quotient's diagram support; a decomposability hint
    // only (disconnected => decomposable, the converse is not claimed).
    bool support_connected = true;
};

ClassReport class_membership(const Polynomial& p);

// True iff p(x) = 1 identically on the hyperplane x_1 + ... + x_n = 1.
bool constant_one_on_hyperplane(const Polynomial& p);

} // namespace sharpdeg

#endif
