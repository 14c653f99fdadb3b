#include "sharpdeg/polynomial.hpp"

#include <sstream>

namespace sharpdeg {

void Polynomial::add_term(const MultiIndex& m, const Rational& c) {
    if (static_cast<int>(m.size()) != nvars_)
        throw PreconditionError("multi-index arity does not match variable count");
    if (sgn(c) == 0) return;
    auto [it, inserted] = terms_.try_emplace(m, c);
    if (!inserted) {
        it->second += c;
        if (sgn(it->second) == 0) terms_.erase(it);
    }
}

int Polynomial::degree() const {
    if (terms_.empty()) return -1;
    return terms_.begin()->first.degree();  // lead term has the max degree
}

bool Polynomial::is_homogeneous(int* deg) const {
    if (terms_.empty()) {
        if (deg) *deg = -1;
        return true;
    }
    int d = terms_.begin()->first.degree();
    for (const auto& [m, c] : terms_)
        if (m.degree() != d) return false;
    if (deg) *deg = d;
    return true;
}

void Polynomial::check_compatible(const Polynomial& o) const {
    if (nvars_ != o.nvars_)
        throw PreconditionError("variable-count mismatch: " + std::to_string(nvars_) +
                                " vs " + std::to_string(o.nvars_));
}

Polynomial& Polynomial::operator+=(const Polynomial& o) {
    check_compatible(o);
    for (const auto& [m, c] : o.terms_) add_term(m, c);
    return *this;
}

Polynomial& Polynomial::operator-=(const Polynomial& o) {
    check_compatible(o);
    for (const auto& [m, c] : o.terms_) add_term(m, -c);
    return *this;
}

Polynomial operator*(const Polynomial& a, const Polynomial& b) {
    a.check_compatible(b);
    Polynomial r(a.nvars_);
    for (const auto& [ma, ca] : a.terms_)
        for (const auto& [mb, cb] : b.terms_)
            r.add_term(ma + mb, ca * cb);
    return r;
}

Polynomial Polynomial::operator-() const {
    Polynomial r(nvars_);
    for (const auto& [m, c] : terms_) r.terms_.emplace(m, -c);
    return r;
}

Polynomial Polynomial::scaled(const Rational& c) const {
    Polynomial r(nvars_);
    if (sgn(c) == 0) return r;
    for (const auto& [m, k] : terms_) {
        Rational v = k * c;
        v.canonicalize();
        r.terms_.emplace(m, v);
    }
    return r;
}

Polynomial Polynomial::substitute(int var, const Polynomial& replacement) const {
    check_compatible(replacement);
    if (var < 0 || var >= nvars_) throw PreconditionError("substitute: variable out of range");
    Polynomial r(nvars_);
    // incremental powers of the replacement, indexed by exponent
    std::vector<Polynomial> powers{Polynomial::constant(nvars_, Rational(1))};
    for (const auto& [m, c] : terms_) {
        int e = m[static_cast<std::size_t>(var)];
        if (e < 0) throw PreconditionError("substitute: negative exponent");
        while (static_cast<int>(powers.size()) <= e)
            powers.push_back(powers.back() * replacement);
        MultiIndex rest = m;
        rest[static_cast<std::size_t>(var)] = 0;
        Polynomial mono = Polynomial::monomial(nvars_, rest, c);
        r += mono * powers[static_cast<std::size_t>(e)];
    }
    return r;
}

Rational Polynomial::evaluate(std::span<const Rational> point) const {
    if (static_cast<int>(point.size()) != nvars_)
        throw PreconditionError("evaluate: point arity mismatch");
    Rational total(0);
    for (const auto& [m, c] : terms_) {
        Rational v = c;
        for (std::size_t i = 0; i < m.size(); ++i) {
            int e = m[i];
            if (e < 0) throw PreconditionError("evaluate: negative exponent");
            for (int k = 0; k < e; ++k) v *= point[i];
        }
        total += v;
    }
    total.canonicalize();
    return total;
}

std::string Polynomial::debug_string() const {
    std::ostringstream os;
    bool first = true;
    for (const auto& [m, c] : terms_) {
        if (!first) os << " + ";
        os << rational_to_string(c) << "*" << m.to_string();
        first = false;
    }
    if (first) os << "0";
    return os.str();
}

Polynomial homogenize_and_flip(const Polynomial& p) {
    int d = p.degree();
    if (d <= 0) throw PreconditionError("homogenize_and_flip: input must have degree >= 1");
    int n = p.nvars();
    Polynomial P(n + 1);
    for (const auto& [m, c] : p.terms()) {
        int k = d - m.degree();
        MultiIndex g(static_cast<std::size_t>(n + 1));
        g[0] = k;
        for (int i = 0; i < n; ++i) g[static_cast<std::size_t>(i + 1)] = m[static_cast<std::size_t>(i)];
        // t^k with t = -X_0 contributes (-1)^k
        P.add_term(g, (k % 2 == 0) ? c : -c);
    }
    // the homogenized "-1": -(-X_0)^d
    MultiIndex g0(static_cast<std::size_t>(n + 1));
    g0[0] = d;
    P.add_term(g0, (d % 2 == 0) ? Rational(-1) : Rational(1));
    return P;
}

std::optional<Polynomial> try_divide_by_linear(const Polynomial& P, std::span<const int> signs) {
    if (static_cast<int>(signs.size()) != P.nvars())
        throw PreconditionError("divisor form arity mismatch");
    for (int s : signs)
        if (s != 1 && s != -1) throw PreconditionError("divisor form coefficients must be +-1");

    // Iterated elimination in descending graded-lex order.  The lead term of
    // the form is signs[0]*X_0; once a lead term of the running remainder has
    // no X_0 it can never be cancelled later, so we can stop early.
    Polynomial R = P;
    Polynomial Q(P.nvars());
    while (!R.is_zero()) {
        const auto& [m, c] = *R.terms().begin();
        if (m[0] < 1) return std::nullopt;
        MultiIndex q = m.plus(0, -1);
        Rational qc = (signs[0] == 1) ? c : -c;
        Q.add_term(q, qc);
        for (std::size_t j = 0; j < signs.size(); ++j)
            R.add_term(q.plus(j), signs[j] == 1 ? -qc : qc);
    }
    return Q;
}

std::optional<Polynomial> try_divide_by_s(const Polynomial& P) {
    std::vector<int> signs(static_cast<std::size_t>(P.nvars()), 1);
    return try_divide_by_linear(P, signs);
}

Polynomial divide_by_s(const Polynomial& P) {
    auto q = try_divide_by_s(P);
    if (!q) throw NotDivisibleError("polynomial is not divisible by the hyperplane form");
    return *q;
}

PDegreeCount p_degree_and_count(const Polynomial& P) {
    if (P.is_zero()) throw PreconditionError("p_degree_and_count: zero polynomial");
    MultiIndex gcd = P.terms().begin()->first;
    for (const auto& [m, c] : P.terms())
        for (std::size_t i = 0; i < gcd.size(); ++i)
            gcd[i] = std::min(gcd[i], m[i]);
    PDegreeCount out;
    out.degree = P.degree();
    out.common_factor = gcd;
    out.p_degree = out.degree - gcd.degree();
    out.monomial_count = static_cast<int>(P.term_count());
    return out;
}

bool constant_one_on_hyperplane(const Polynomial& p) {
    int n = p.nvars();
    if (n < 1) throw PreconditionError("constant_one_on_hyperplane: need at least one variable");
    // substitute x_n := 1 - x_1 - ... - x_{n-1} and compare with 1
    Polynomial repl = Polynomial::constant(n, Rational(1));
    for (int j = 0; j + 1 < n; ++j) repl -= Polynomial::variable(n, j);
    Polynomial q = p.substitute(n - 1, repl);
    return q == Polynomial::constant(n, Rational(1));
}

} // namespace sharpdeg
