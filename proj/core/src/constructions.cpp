#include "sharpdeg/constructions.hpp"

#include <algorithm>
#include <cstdint>

#include "sharpdeg/diagram.hpp"

namespace sharpdeg {

Polynomial whitney(int n, int d, const std::vector<MultiIndex>& choices) {
    if (n < 2 || d < 1) throw PreconditionError("whitney: need n >= 2, d >= 1");
    if (!choices.empty() && static_cast<int>(choices.size()) != d - 1)
        throw PreconditionError("whitney: expected " + std::to_string(d - 1) + " choices");
    Polynomial p = Polynomial::hyperplane_sum(n);
    Polynomial s = p;
    for (int step = 2; step <= d; ++step) {
        MultiIndex m = choices.empty()
                           ? MultiIndex::unit(static_cast<std::size_t>(n),
                                              static_cast<std::size_t>(n - 1))
                           : choices[static_cast<std::size_t>(step - 2)];
        if (!choices.empty() && m.degree() != step - 1)
            throw PreconditionError("whitney: choice has degree " + std::to_string(m.degree()) +
                                    ", expected " + std::to_string(step - 1));
        if (choices.empty()) {
            MultiIndex pure(static_cast<std::size_t>(n));
            pure[static_cast<std::size_t>(n - 1)] = step - 1;
            m = pure;
        }
        Rational c = p.coeff(m);
        if (sgn(c) == 0) throw PreconditionError("whitney: chosen monomial absent from the polynomial");
        Polynomial term = Polynomial::monomial(n, m, c);
        p += term * (s - Polynomial::constant(n, Rational(1)));
    }
    if (static_cast<int>(p.term_count()) != d * (n - 1) + 1)
        throw ContradictionError("whitney: term count is not d(n-1)+1");
    if (!constant_one_on_hyperplane(p))
        throw ContradictionError("whitney: result is not constant on the hyperplane");
    return p;
}

std::pair<Polynomial, Polynomial> faran_cubics() {
    Polynomial p2(2);
    p2.add_term(MultiIndex{3, 0}, Rational(1));
    p2.add_term(MultiIndex{1, 1}, Rational(3));
    p2.add_term(MultiIndex{0, 3}, Rational(1));
    Polynomial p3(3);
    p3.add_term(MultiIndex{3, 0, 0}, Rational(1));
    p3.add_term(MultiIndex{1, 1, 0}, Rational(3));
    p3.add_term(MultiIndex{0, 3, 0}, Rational(1));
    p3 = p3.substitute(1, Polynomial::variable(3, 1) + Polynomial::variable(3, 2));
    return {p2, p3};
}

namespace {

bool is_faran3_permutation(const Polynomial& g) {
    if (g.nvars() != 3) return false;
    Polynomial base = faran_cubics().second;
    int perm[3] = {0, 1, 2};
    std::sort(perm, perm + 3);
    do {
        Polynomial image(3);
        for (const auto& [m, c] : base.terms()) {
            MultiIndex q(3);
            for (int i = 0; i < 3; ++i) q[static_cast<std::size_t>(perm[i])] = m[static_cast<std::size_t>(i)];
            image.add_term(q, c);
        }
        if (image == g) return true;
    } while (std::next_permutation(perm, perm + 3));
    return false;
}

} // namespace

Polynomial sharp_extend(const Polynomial& p, const MultiIndex& m, const Polynomial& g) {
    int n = p.nvars();
    if (n != 3) throw PreconditionError("sharp_extend: three variables expected");
    int d = p.degree();
    if (m.degree() != d) throw PreconditionError("sharp_extend: monomial must have the top degree");
    Rational c = p.coeff(m);
    if (sgn(c) == 0) throw PreconditionError("sharp_extend: monomial absent from the polynomial");
    bool g_is_s = (g == Polynomial::hyperplane_sum(3));
    if (!g_is_s && !is_faran3_permutation(g))
        throw PreconditionError("sharp_extend: extension polynomial must be s or the sharp cubic");
    int k = g_is_s ? 1 : 3;

    Polynomial term = Polynomial::monomial(n, m, c);
    Polynomial out = p - term + term * g;

    // the advertised count N(p) + 2k holds when no product monomial collides
    bool collision = false;
    for (const auto& [gm, gc] : g.terms())
        if (gm + m != m && sgn((p - term).coeff(gm + m)) != 0) collision = true;
    if (!collision &&
        static_cast<int>(out.term_count()) != static_cast<int>(p.term_count()) + 2 * k)
        throw ContradictionError("sharp_extend: unexpected term count");
    if (!constant_one_on_hyperplane(out))
        throw ContradictionError("sharp_extend: result is not constant on the hyperplane");
    return out;
}

Polynomial dkr_sharp_2d(int d) {
    if (d < 1 || d % 2 == 0) throw PreconditionError("dkr_sharp_2d: degree must be odd and positive");
    Polynomial x = Polynomial::variable(2, 0), y = Polynomial::variable(2, 1);
    Polynomial gkm2 = Polynomial::constant(2, Rational(2));
    Polynomial gkm1 = x;
    for (int k = 2; k <= d; ++k) {
        Polynomial gk = x * gkm1 + y * gkm2;
        gkm2 = std::move(gkm1);
        gkm1 = std::move(gk);
    }
    Polynomial out = gkm1;
    MultiIndex yd{0, d};
    out.add_term(yd, Rational((d + 1) % 2 == 0 ? 1 : -1));  // (-1)^(d+1) y^d
    for (const auto& [m, c] : out.terms())
        if (sgn(c) < 0) throw ContradictionError("dkr_sharp_2d: negative coefficient");
    if (!constant_one_on_hyperplane(out))
        throw ContradictionError("dkr_sharp_2d: result is not constant on the hyperplane");
    if (static_cast<int>(out.term_count()) != (d + 3) / 2)
        throw ContradictionError("dkr_sharp_2d: term count is not (d+3)/2");
    return out;
}

UndoingDecomposition undoing_decomposition(const Polynomial& p) {
    ClassReport rep = class_membership(p);
    if (!rep.in_H) throw PreconditionError("undoing_decomposition: polynomial is not in the class");
    UndoingDecomposition u;
    u.n = p.nvars();
    u.d = std::max(p.degree(), 0);
    for (const auto& [m, c] : p.terms())
        if (m.degree() < u.d) u.coefficients.emplace(m, c);
    if (u.coefficients.empty()) {
        // homogeneous members are exactly the d-th power of the hyperplane sum
        Polynomial sd = Polynomial::constant(u.n, Rational(1));
        Polynomial s = Polynomial::hyperplane_sum(u.n);
        for (int i = 0; i < u.d; ++i) sd = sd * s;
        if (!(p == sd))
            throw ContradictionError("undoing_decomposition: homogeneous member differs from s^d");
    }
    if (!(rebuild(u) == p))
        throw ContradictionError("undoing_decomposition: rebuilt polynomial differs");
    return u;
}

Polynomial rebuild(const UndoingDecomposition& u) {
    Polynomial s = Polynomial::hyperplane_sum(u.n);
    std::vector<Polynomial> spow{Polynomial::constant(u.n, Rational(1))};
    for (int i = 1; i <= u.d; ++i) spow.push_back(spow.back() * s);
    Polynomial out = spow[static_cast<std::size_t>(u.d)];
    for (const auto& [m, c] : u.coefficients) {
        Polynomial mono = Polynomial::monomial(u.n, m, c);
        out += mono - mono * spow[static_cast<std::size_t>(u.d - m.degree())];
    }
    return out;
}

namespace {

std::int64_t binomial64(int n, int k) {
    if (k < 0 || k > n) return 0;
    std::int64_t r = 1;
    for (int i = 1; i <= k; ++i) r = r * (n - k + i) / i;
    return r;
}

std::int64_t multinomial3(int total, int a, int b, int c) {
    if (a < 0 || b < 0 || c < 0 || a + b + c != total) return 0;
    return binomial64(total, a) * binomial64(total - a, b);
}

// All exponent patterns of degree-d monomials in three variables that use at
// least two variables (the pure powers are handled separately).
std::vector<MultiIndex> nonpure_top(int d) {
    std::vector<MultiIndex> out;
    for (int a = d; a >= 0; --a)
        for (int b = d - a; b >= 0; --b) {
            int c = d - a - b;
            MultiIndex m{a, b, c};
            int used = (a > 0) + (b > 0) + (c > 0);
            if (used >= 2) out.push_back(m);
        }
    return out;
}

struct LinearSystem {
    // rows of [coefficients | rhs] over the subtraction unknowns
    std::vector<std::vector<Rational>> rows;
    std::size_t unknowns = 0;
    std::vector<std::size_t> pivot_col;
    bool consistent = false;

    void reduce() {
        std::size_t rank = 0;
        for (std::size_t col = 0; col < unknowns && rank < rows.size(); ++col) {
            std::size_t sel = rank;
            while (sel < rows.size() && sgn(rows[sel][col]) == 0) ++sel;
            if (sel == rows.size()) continue;
            std::swap(rows[rank], rows[sel]);
            for (std::size_t r = 0; r < rows.size(); ++r) {
                if (r == rank || sgn(rows[r][col]) == 0) continue;
                Rational f = rows[r][col] / rows[rank][col];
                for (std::size_t c2 = col; c2 <= unknowns; ++c2) rows[r][c2] -= f * rows[rank][c2];
            }
            pivot_col.push_back(col);
            ++rank;
        }
        consistent = true;
        for (std::size_t r = rank; r < rows.size(); ++r)
            if (sgn(rows[r][unknowns]) != 0) consistent = false;
    }

    bool unique() const { return consistent && pivot_col.size() == unknowns; }

    // particular solution with every free variable bound to `free_value`
    std::vector<Rational> solution(const Rational& free_value) const {
        std::vector<Rational> x(unknowns, free_value);
        std::vector<char> is_pivot(unknowns, 0);
        for (std::size_t c : pivot_col) is_pivot[c] = 1;
        for (std::size_t r = pivot_col.size(); r-- > 0;) {
            std::size_t pc = pivot_col[r];
            Rational v = rows[r][unknowns];
            for (std::size_t c = 0; c < unknowns; ++c)
                if (c != pc && !is_pivot[c]) v -= rows[r][c] * x[c];
            v /= rows[r][pc];
            v.canonicalize();
            x[pc] = v;
        }
        return x;
    }
};

bool diagram_support_maximal(const Polynomial& p, int d) {
    Polynomial Q = divide_by_s(homogenize_and_flip(p));
    NewtonDiagram D = diagram_of(Q, d);
    std::size_t want = 0;
    for (int lvl = 0; lvl < d; ++lvl) want += static_cast<std::size_t>((lvl + 1) * (lvl + 2) / 2);
    return D.signs().size() == want;
}

} // namespace

std::vector<Polynomial> filledsharp_search(int d, bool allow_long) {
    if (d < 1 || d > 7) throw CapExceededError("filledsharp_search: supported degrees are 1..7");
    if (d >= 6 && !allow_long)
        throw CapExceededError("filledsharp_search: degrees 6 and 7 require the long-running mode");

    const Polynomial s = Polynomial::hyperplane_sum(3);

    // admissible subtraction exponents: degree 2..d-1, exactly two variables
    // (a pure one would put a second pure term in that variable, and a
    // constant one rescales away)
    std::vector<MultiIndex> cands;
    for (int deg = 2; deg <= d - 1; ++deg)
        for (int i = 0; i < 3; ++i)
            for (int j = i + 1; j < 3; ++j)
                for (int a = 1; a <= deg - 1; ++a) {
                    MultiIndex m(3);
                    m[static_cast<std::size_t>(i)] = a;
                    m[static_cast<std::size_t>(j)] = deg - a;
                    cands.push_back(m);
                }

    const std::vector<MultiIndex> top = nonpure_top(d);
    const int t_count = static_cast<int>(top.size());
    std::vector<std::int64_t> top_coeff(top.size());
    for (std::size_t i = 0; i < top.size(); ++i)
        top_coeff[i] = multinomial3(d, top[i][0], top[i][1], top[i][2]);

    // contribution of subtracting c * x^alpha * s^(d-|alpha|) to x^beta
    auto contrib = [&](const MultiIndex& alpha, const MultiIndex& beta) -> std::int64_t {
        MultiIndex delta = beta - alpha;
        return multinomial3(d - alpha.degree(), delta[0], delta[1], delta[2]);
    };

    const int amax = std::min(static_cast<int>(cands.size()), (3 * (d - 1)) / 2);
    std::vector<Polynomial> found;

    auto emit_candidate = [&](const std::vector<int>& A, const std::vector<int>& alive,
                              const std::vector<Rational>& c) {
        for (const Rational& v : c)
            if (sgn(v) <= 0) return;
        // alive top terms must stay strictly positive
        std::vector<char> dead(top.size(), 1);
        for (int w : alive) dead[static_cast<std::size_t>(w)] = 0;
        for (int i = 0; i < t_count; ++i) {
            Rational g(top_coeff[static_cast<std::size_t>(i)]);
            for (std::size_t a = 0; a < A.size(); ++a)
                g -= c[a] * Rational(contrib(cands[static_cast<std::size_t>(A[a])],
                                             top[static_cast<std::size_t>(i)]));
            int sg = sgn(g);
            if (dead[static_cast<std::size_t>(i)] ? sg != 0 : sg <= 0) return;
        }
        Polynomial p(3);
        // start from s^d and apply the subtractions
        std::vector<Polynomial> spow{Polynomial::constant(3, Rational(1))};
        for (int i = 1; i <= d; ++i) spow.push_back(spow.back() * s);
        p = spow[static_cast<std::size_t>(d)];
        for (std::size_t a = 0; a < A.size(); ++a) {
            Polynomial mono =
                Polynomial::monomial(3, cands[static_cast<std::size_t>(A[a])], c[a]);
            p += mono - mono * spow[static_cast<std::size_t>(
                                d - cands[static_cast<std::size_t>(A[a])].degree())];
        }
        ClassReport rep = class_membership(p);
        if (!rep.in_H) return;
        if (static_cast<int>(p.term_count()) != 2 * d + 1) return;
        if (p.degree() != d) return;
        if (!diagram_support_maximal(p, d)) return;
        found.push_back(std::move(p));
    };

    // enumerate subtraction supports A, then the surviving top terms
    std::vector<int> A;
    auto recurse = [&](auto&& self, int start) -> void {
        {
            const int asz = static_cast<int>(A.size());
            const int n_alive = 2 * d - 2 - asz;
            if (n_alive >= 0) {
                // union of the shadows: top terms a subtraction can reach
                std::vector<char> in_u(top.size(), 0);
                int usz = 0;
                for (int ai : A)
                    for (int i = 0; i < t_count; ++i)
                        if (!in_u[static_cast<std::size_t>(i)] &&
                            contrib(cands[static_cast<std::size_t>(ai)],
                                    top[static_cast<std::size_t>(i)]) > 0) {
                            in_u[static_cast<std::size_t>(i)] = 1;
                            ++usz;
                        }
                const int kills = t_count - n_alive;
                const int forced_alive = t_count - usz;
                if (kills >= 0 && kills <= usz && forced_alive <= n_alive) {
                    // pick the survivors inside the shadow
                    std::vector<int> ushadow;
                    for (int i = 0; i < t_count; ++i)
                        if (in_u[static_cast<std::size_t>(i)]) ushadow.push_back(i);
                    const int pick = n_alive - forced_alive;
                    std::vector<int> sel(static_cast<std::size_t>(pick));
                    auto choose = [&](auto&& chooser, int from, int got) -> void {
                        if (got == pick) {
                            std::vector<char> alive_mask(top.size(), 0);
                            for (int i = 0; i < t_count; ++i)
                                if (!in_u[static_cast<std::size_t>(i)])
                                    alive_mask[static_cast<std::size_t>(i)] = 1;
                            for (int w : sel) alive_mask[static_cast<std::size_t>(ushadow[static_cast<std::size_t>(w)])] = 1;
                            LinearSystem sys;
                            sys.unknowns = A.size();
                            for (int i = 0; i < t_count; ++i) {
                                if (alive_mask[static_cast<std::size_t>(i)]) continue;
                                std::vector<Rational> row;
                                row.reserve(A.size() + 1);
                                for (int ai : A)
                                    row.emplace_back(contrib(cands[static_cast<std::size_t>(ai)],
                                                             top[static_cast<std::size_t>(i)]));
                                row.emplace_back(top_coeff[static_cast<std::size_t>(i)]);
                                sys.rows.push_back(std::move(row));
                            }
                            sys.reduce();
                            if (sys.consistent) {
                                std::vector<int> alive;
                                for (int i = 0; i < t_count; ++i)
                                    if (alive_mask[static_cast<std::size_t>(i)]) alive.push_back(i);
                                if (sys.unique()) {
                                    emit_candidate(A, alive, sys.solution(Rational(0)));
                                } else {
                                    // free directions: probe a few deterministic
                                    // values; a hit would be a one-parameter
                                    // family, which the checks downstream vet
                                    for (const Rational& fv :
                                         {rat(1), rat(1, 2), rat(2), rat(1, 3), rat(3)})
                                        emit_candidate(A, alive, sys.solution(fv));
                                }
                            }
                            return;
                        }
                        for (int w = from; w < static_cast<int>(ushadow.size()); ++w) {
                            sel[static_cast<std::size_t>(got)] = w;
                            chooser(chooser, w + 1, got + 1);
                        }
                    };
                    if (pick >= 0) choose(choose, 0, 0);
                }
            }
        }
        if (static_cast<int>(A.size()) == amax) return;
        for (int next = start; next < static_cast<int>(cands.size()); ++next) {
            A.push_back(next);
            self(self, next + 1);
            A.pop_back();
        }
    };
    recurse(recurse, 0);

    std::sort(found.begin(), found.end(), [](const Polynomial& a, const Polynomial& b) {
        auto ia = a.terms().begin();
        auto ib = b.terms().begin();
        for (; ia != a.terms().end() && ib != b.terms().end(); ++ia, ++ib) {
            int c = graded_lex_cmp(ia->first, ib->first);
            if (c != 0) return c > 0;
            if (ia->second != ib->second) return ia->second < ib->second;
        }
        return a.terms().size() < b.terms().size();
    });
    return found;
}

} // namespace sharpdeg
