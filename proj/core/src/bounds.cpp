#include "sharpdeg/bounds.hpp"

#include <algorithm>

#include "sharpdeg/constructions.hpp"
#include "sharpdeg/enumeration.hpp"

namespace sharpdeg {

namespace {

BoundEntry entry(std::string tag, Rational value, std::string note = {}) {
    BoundEntry e;
    e.tag = std::move(tag);
    e.value = std::move(value);
    e.note = std::move(note);
    return e;
}

void judge(BoundEntry& e, const Rational& actual) {
    e.satisfied = actual <= e.value;
    e.sharp = actual == e.value;
}

Rational rule_t12iv(int n, int N) {
    return rat(4 * (2 * N - 3), 3 * (2 * n - 3));
}

Rational rule_t71(int n, int N) {
    return rat(2 * n * (2 * N - 5), 3 * n * n - 3 * n - 2);
}

} // namespace

BoundTable bound_table(int n, int N, BoundClass cls) {
    BoundTable t;
    if (N < 1) throw PreconditionError("bound_table: N must be positive");
    if (n < 2) {
        // one affine variable: x^d is 1 on x = 1 for every d
        t.unbounded = true;
        return t;
    }
    switch (cls) {
        case BoundClass::Positive2D:
            if (n == 2) t.entries.push_back(entry("T1.1i", rat(2 * N - 3)));
            break;
        case BoundClass::Positive3D:
            if (n == 3) {
                t.entries.push_back(entry("T1.2ii", rat(N - 1, 2)));
                t.entries.push_back(entry("C7.4", rat(N - 1, n - 1)));
            }
            break;
        case BoundClass::Indecomposable2D:
            if (n == 2) t.entries.push_back(entry("T1.2i", rat(2 * N - 3)));
            break;
        case BoundClass::IndecomposableGeneral:
            t.entries.push_back(entry("T1.2iv", rule_t12iv(n, N)));
            if (n >= 3)
                t.entries.push_back(
                    entry("T7.1", rule_t71(n, N), "requires a pure monomial; N counts homogeneous terms"));
            t.entries.push_back(
                entry("T7.2", rat((n - 1) * (2 * N - 5)), "N counts homogeneous terms"));
            break;
        case BoundClass::CRMap:
            if (n == 2) t.entries.push_back(entry("T1.3i", rat(2 * N - 3)));
            if (n == 3) t.entries.push_back(entry("T1.3ii", rat(N - 1, 2)));
            t.entries.push_back(entry("T1.3iii", rat((n - 1) * (2 * N - 5)),
                                      "existence value, far from optimal"));
            break;
    }
    return t;
}

BoundReport verify_bound(const Polynomial& p) {
    ClassReport rep = class_membership(p);
    if (!rep.in_I)
        throw PreconditionError("verify_bound: polynomial is not constant 1 on the hyperplane");
    const int n = p.nvars();
    const int d = rep.degree;
    const int N = rep.monomial_count;

    BoundReport out;
    out.n = n;
    out.N = N;
    out.actual_degree = Rational(d);
    if (n < 2) return out;  // no bound applies in one variable

    bool indecomposable = rep.in_H;  // nonnegative members are always indecomposable
    bool indecomp_exact = rep.in_H;
    Polynomial P(0);
    int NP = N, pdeg = d;
    if (d >= 1) {
        P = homogenize_and_flip(p);
        auto pc = p_degree_and_count(P);
        NP = pc.monomial_count;
        pdeg = pc.p_degree;
        if (!indecomposable) {
            if (NP <= 20) {
                auto verdict = decomposability_oracle(P);
                indecomposable = verdict.kind == Decomposition::Kind::Indecomposable;
                indecomp_exact = true;
            } else {
                indecomposable = rep.support_connected;  // hint only
                indecomp_exact = false;
            }
        }
    }

    auto push = [&](BoundEntry e, const Rational& actual) {
        judge(e, actual);
        out.bounds.push_back(std::move(e));
    };

    if (rep.in_H && n == 2) push(entry("T1.1i", rat(2 * N - 3)), Rational(d));
    if (rep.in_H && n == 3) push(entry("T1.2ii", rat(N - 1, 2)), Rational(d));
    if (rep.in_H && n >= 3) {
        bool small_top = false;
        for (const auto& [m, c] : p.terms()) {
            if (m.degree() != d) continue;
            int used = 0;
            for (std::size_t i = 0; i < m.size(); ++i)
                if (m[i] > 0) ++used;
            if (used <= 3) small_top = true;
        }
        if (small_top) push(entry("C7.4", rat(N - 1, n - 1)), Rational(d));
    }
    if (indecomposable) {
        if (n == 2 && !rep.in_H) {
            BoundEntry e = entry("T1.2i", rat(2 * N - 3));
            e.conditional = !indecomp_exact;
            push(std::move(e), Rational(d));
        }
        if (n == 3 && !rep.in_H && !has_overhang(Support::of(diagram_of(divide_by_s(P), d))).found) {
            BoundEntry e = entry("T1.2iii", rat(N - 1, 2));
            e.conditional = !indecomp_exact;
            push(std::move(e), Rational(d));
        }
        {
            BoundEntry e = entry("T1.2iv", rule_t12iv(n, N));
            e.conditional = !indecomp_exact;
            push(std::move(e), Rational(d));
        }
        if (d >= 1) {
            bool pure = false;
            for (const auto& [m, c] : P.terms()) {
                int used = 0;
                for (std::size_t i = 0; i < m.size(); ++i)
                    if (m[i] > 0) ++used;
                if (used == 1) pure = true;
            }
            if (pure && n >= 3) {
                BoundEntry e = entry("T7.1", rule_t71(n, NP), "measured on the p-degree");
                e.conditional = !indecomp_exact;
                push(std::move(e), Rational(pdeg));
            }
            BoundEntry e = entry("T7.2", rat((n - 1) * (2 * NP - 5)), "measured on the p-degree");
            e.conditional = !indecomp_exact;
            push(std::move(e), Rational(pdeg));
        }
    }
    return out;
}

namespace {

Polynomial strip_common_factor(const Polynomial& P, MultiIndex* factor = nullptr) {
    auto pc = p_degree_and_count(P);
    if (factor) *factor = pc.common_factor;
    if (pc.common_factor.degree() == 0) return P;
    Polynomial out(P.nvars());
    for (const auto& [m, c] : P.terms()) out.add_term(m - pc.common_factor, c);
    return out;
}

Rational rational_pow(const Rational& base, int e) {
    Rational r(1);
    for (int i = 0; i < e; ++i) r *= base;
    r.canonicalize();
    return r;
}

void require_indecomposable(const Polynomial& P, const Polynomial& Q, int d) {
    // the exact oracle is exponential in the monomial count; beyond a small
    // size the connected-support hint is the admissible evidence
    if (static_cast<int>(P.term_count()) <= 14) {
        auto verdict = decomposability_oracle(P);
        if (verdict.kind == Decomposition::Kind::Decomposable)
            throw PreconditionError("input is decomposable");
    } else {
        NewtonDiagram D = diagram_of(Q, d);
        if (!support_geometry(Support::of(D)).connected)
            throw PreconditionError("input is decomposable (disconnected diagram support)");
    }
}

} // namespace

PullbackResult pullback_compose(const Polynomial& P_in) {
    int deg = -1;
    if (P_in.is_zero() || !P_in.is_homogeneous(&deg))
        throw PreconditionError("pullback_compose: nonzero homogeneous input required");
    const int n = P_in.nvars() - 1;
    if (n < 3) throw PreconditionError("pullback_compose: need at least four homogeneous variables");

    Polynomial P = strip_common_factor(P_in);
    const int d = P.degree();
    auto Q = try_divide_by_s(P);
    if (!Q) throw PreconditionError("pullback_compose: input is not a multiple of the hyperplane form");
    require_indecomposable(P, *Q, d);

    // move a pure monomial to the last slot
    int pure_var = -1;
    for (const auto& [m, c] : P.terms()) {
        for (std::size_t i = 0; i < m.size(); ++i)
            if (m[i] == d && m.degree() == d) pure_var = static_cast<int>(i);
    }
    if (pure_var < 0) throw PreconditionError("pullback_compose: no pure monomial present");
    std::vector<int> perm(static_cast<std::size_t>(n + 1));
    for (int i = 0; i <= n; ++i) perm[static_cast<std::size_t>(i)] = i;
    std::swap(perm[static_cast<std::size_t>(pure_var)], perm[static_cast<std::size_t>(n)]);
    Polynomial Pp(n + 1);
    for (const auto& [m, c] : P.terms()) {
        MultiIndex q(static_cast<std::size_t>(n + 1));
        for (int i = 0; i <= n; ++i)
            q[static_cast<std::size_t>(i)] = m[static_cast<std::size_t>(perm[static_cast<std::size_t>(i)])];
        Pp.add_term(q, c);
    }

    // components of the flipped sharp family, slotted by collapsed exponent
    const int D = 2 * n - 3;
    Polynomial Pdkr = homogenize_and_flip(dkr_sharp_2d(D));
    std::vector<MultiIndex> comp_exp(static_cast<std::size_t>(n + 1), MultiIndex(3));
    std::vector<Rational> comp_mag(static_cast<std::size_t>(n + 1), Rational(0));
    std::vector<int> comp_sign(static_cast<std::size_t>(n + 1), 0);
    for (const auto& [g, c] : Pdkr.terms()) {
        int pos;
        if (g[0] == D) pos = n;
        else if (g[0] == 0) pos = (g[1] == D) ? 0 : 1;
        else pos = g[0] + 1;
        comp_exp[static_cast<std::size_t>(pos)] = g;
        comp_mag[static_cast<std::size_t>(pos)] = abs(c);
        comp_sign[static_cast<std::size_t>(pos)] = sgn(c);
    }
    for (int k = 0; k <= n; ++k)
        if (comp_sign[static_cast<std::size_t>(k)] == 0)
            throw ContradictionError("pullback_compose: missing component in the sharp family");

    // sign-twist the variables so the composed hyperplane form matches
    Polynomial composed(3);
    for (const auto& [m, c] : Pp.terms()) {
        Rational coeff = c;
        MultiIndex target(3);
        for (int k = 0; k <= n; ++k) {
            int e = m[static_cast<std::size_t>(k)];
            if (e == 0) continue;
            if (comp_sign[static_cast<std::size_t>(k)] < 0 && e % 2 == 1) coeff = -coeff;
            coeff *= rational_pow(comp_mag[static_cast<std::size_t>(k)], e);
            for (std::size_t i = 0; i < 3; ++i) target[i] += e * comp_exp[static_cast<std::size_t>(k)][i];
        }
        composed.add_term(target, coeff);
    }

    if (!try_divide_by_s(composed))
        throw ContradictionError("pullback_compose: composition is not divisible by u+v+t");
    if (composed.term_count() > P.term_count())
        throw ContradictionError("pullback_compose: composition gained monomials");

    // witness monomial without the pure variable, minimizing the collapsed
    // exponent of the auxiliary variable
    int best_c = -1;
    for (const auto& [m, c] : Pp.terms()) {
        if (m[static_cast<std::size_t>(n)] != 0) continue;
        int t_exp = 0;
        for (int k = 0; k < n; ++k)
            t_exp += m[static_cast<std::size_t>(k)] * comp_exp[static_cast<std::size_t>(k)][0];
        if (best_c < 0 || t_exp < best_c) best_c = t_exp;
    }
    if (best_c < 0)
        throw ContradictionError("pullback_compose: no monomial avoids the pure variable");

    PullbackResult out;
    out.composed = composed;
    out.big_degree = D;
    out.permutation = perm;
    out.t_exponent = best_c;
    out.degree_lower_bound = Rational(d * D - best_c);
    out.bound_value = rule_t71(n, static_cast<int>(P.term_count()));

    if (Rational(p_degree_and_count(composed).p_degree) < out.degree_lower_bound)
        throw ContradictionError("pullback_compose: composed p-degree below the witness bound");
    if (Rational(d) > out.bound_value)
        throw ContradictionError("pullback_compose: input violates the degree bound");
    return out;
}

CollapseResult collapse_to_two_vars(const Polynomial& P_in) {
    int deg = -1;
    if (P_in.is_zero() || !P_in.is_homogeneous(&deg))
        throw PreconditionError("collapse_to_two_vars: nonzero homogeneous input required");
    const int n = P_in.nvars() - 1;
    if (n < 2) throw PreconditionError("collapse_to_two_vars: need at least three homogeneous variables");

    Polynomial P = strip_common_factor(P_in);
    const int d = P.degree();
    auto Qopt = try_divide_by_s(P);
    if (!Qopt)
        throw PreconditionError("collapse_to_two_vars: input is not a multiple of the hyperplane form");
    Polynomial Q = *Qopt;
    require_indecomposable(P, Q, d);

    // keep the pair of variables making the surviving exponent largest
    int best_i = 0, best_j = 1, best_a = -1;
    for (int i = 0; i <= n; ++i)
        for (int j = 0; j <= n; ++j) {
            if (i == j) continue;
            int a = -1;
            for (const auto& [m, c] : P.terms())
                if (m[static_cast<std::size_t>(i)] == 0)
                    a = std::max(a, m[static_cast<std::size_t>(j)]);
            if (a > best_a) {
                best_a = a;
                best_i = i;
                best_j = j;
            }
        }
    std::vector<int> order{best_i, best_j};
    for (int k = 0; k <= n; ++k)
        if (k != best_i && k != best_j) order.push_back(k);

    auto permute = [&](const Polynomial& A) {
        Polynomial out(n + 1);
        for (const auto& [m, c] : A.terms()) {
            MultiIndex q(static_cast<std::size_t>(n + 1));
            for (int i = 0; i <= n; ++i)
                q[static_cast<std::size_t>(i)] =
                    m[static_cast<std::size_t>(order[static_cast<std::size_t>(i)])];
            out.add_term(q, c);
        }
        return out;
    };
    Polynomial Qp = permute(Q);

    // deterministic witness points on the collapsed hyperplane
    const int collapsed = n - 1;
    std::vector<Rational> weights;
    Polynomial Qt(3);
    bool ok = false;
    for (int r = 1; r <= 97 && !ok; ++r) {
        Rational W(0);
        std::vector<Rational> w(static_cast<std::size_t>(collapsed));
        for (int m = 0; m < collapsed; ++m) {
            w[static_cast<std::size_t>(m)] = rational_pow(Rational(r), m);
            W += w[static_cast<std::size_t>(m)];
        }
        for (auto& v : w) {
            v /= W;
            v.canonicalize();
        }
        // collapse: cell (a0, a1, k) collects the terms with tail degree k
        std::map<MultiIndex, Rational, GradedLexDesc> cells;
        std::map<MultiIndex, bool, GradedLexDesc> occupied;
        for (const auto& [m, c] : Qp.terms()) {
            int k = 0;
            Rational v = c;
            for (int t = 2; t <= n; ++t) {
                int e = m[static_cast<std::size_t>(t)];
                k += e;
                v *= rational_pow(w[static_cast<std::size_t>(t - 2)], e);
            }
            MultiIndex cell{m[0], m[1], k};
            occupied[cell] = true;
            auto [it, fresh] = cells.try_emplace(cell, v);
            if (!fresh) it->second += v;
        }
        bool cancel = false;
        for (const auto& [cell, seen] : occupied)
            if (sgn(cells[cell]) == 0) cancel = true;
        if (cancel) continue;
        Qt = Polynomial(3);
        for (const auto& [cell, v] : cells) Qt.add_term(cell, v);
        weights = w;
        ok = true;
    }
    if (!ok)
        throw PreconditionError(
            "collapse_to_two_vars: no witness point avoided cancellation within the retry budget");

    Polynomial Pt = Polynomial::hyperplane_sum(3) * Qt;

    CollapseResult out;
    out.collapsed = Pt;
    out.ordering = order;
    out.weights = weights;
    out.p_degree_lower = Rational(d) / Rational(n - 1);
    out.bound_value = rat((n - 1) * (2 * static_cast<int>(P.term_count()) - 5));

    if (Rational(p_degree_and_count(Pt).p_degree) < out.p_degree_lower)
        throw ContradictionError("collapse_to_two_vars: collapsed p-degree below d/(n-1)");
    if (Rational(d) > out.bound_value)
        throw ContradictionError("collapse_to_two_vars: input violates the degree bound");
    NewtonDiagram Dq = diagram_of(Q, d);
    if (support_geometry(Support::of(Dq)).connected) {
        NewtonDiagram Dt = diagram_of(Qt, d);
        if (!support_geometry(Support::of(Dt)).connected)
            throw ContradictionError("collapse_to_two_vars: collapse disconnected the support");
    }
    return out;
}

DependenceReport variable_dependence_check(const Polynomial& p) {
    const int n = p.nvars();
    if (n < 3)
        throw PreconditionError(
            "variable_dependence_check: no per-variable dependence bound holds in two variables");
    ClassReport rep = class_membership(p);
    if (!rep.in_H)
        throw PreconditionError("variable_dependence_check: polynomial is not in the nonnegative class");
    DependenceReport out;
    out.d = rep.degree;
    out.per_variable.assign(static_cast<std::size_t>(n), 0);
    for (const auto& [m, c] : p.terms())
        for (int j = 0; j < n; ++j)
            if (m[static_cast<std::size_t>(j)] > 0) ++out.per_variable[static_cast<std::size_t>(j)];
    out.all_meet_degree = std::all_of(out.per_variable.begin(), out.per_variable.end(),
                                      [&](int c) { return c >= out.d; });
    if (!out.all_meet_degree)
        throw ContradictionError("variable_dependence_check: a variable appears in fewer than d terms");
    bool small_top = false;
    for (const auto& [m, c] : p.terms()) {
        if (m.degree() != out.d) continue;
        int used = 0;
        for (std::size_t i = 0; i < m.size(); ++i)
            if (m[i] > 0) ++used;
        if (used <= 3) small_top = true;
    }
    if (small_top) {
        BoundEntry e = entry("C7.4", rat(rep.monomial_count - 1, n - 1));
        judge(e, Rational(out.d));
        out.corollary = std::move(e);
    }
    return out;
}

FilledObservation filled_observation_check(int d, std::size_t cap) {
    if (d < 2) throw PreconditionError("filled_observation_check: need d >= 2");
    const std::size_t face_points = static_cast<std::size_t>(d * (d + 1) / 2);
    if (face_points > cap)
        throw CapExceededError("filled_observation_check: face exceeds the exhaustive cap");

    // the ten 2-faces of the filled four-variable support are all the same
    // lattice triangle, so one minimization serves them all
    std::vector<std::pair<int, int>> pts;
    for (int a = 0; a < d; ++a)
        for (int b = 0; a + b < d; ++b) pts.emplace_back(a, b);
    std::map<std::pair<int, int>, int> index;
    for (std::size_t i = 0; i < pts.size(); ++i) index[pts[i]] = static_cast<int>(i);

    struct FaceSite {
        unsigned mask = 0;
        int members[3] = {-1, -1, -1};
        int member_count = 0;
    };
    std::set<std::pair<int, int>> sites;
    for (auto [a, b] : pts) {
        sites.insert({a, b});
        sites.insert({a + 1, b});
        sites.insert({a, b + 1});
    }
    std::vector<FaceSite> plan;
    for (auto [a, b] : sites) {
        FaceSite s;
        const std::pair<int, int> e[3] = {{a, b}, {a - 1, b}, {a, b - 1}};
        for (int i = 0; i < 3; ++i) {
            auto it = index.find(e[i]);
            if (it != index.end()) {
                s.members[i] = it->second;
                s.mask |= 1u << it->second;
                ++s.member_count;
            }
        }
        if (s.member_count > 0) plan.push_back(s);
    }

    long best_sixths = -1;
    for (unsigned long sigma = 0; sigma < (1ul << pts.size()); ++sigma) {
        long sixths = 0;
        for (const FaceSite& s : plan) {
            unsigned bits = static_cast<unsigned>(sigma) & s.mask;
            if (bits != 0 && bits != s.mask) continue;  // mixed signs
            int zeros = 3 - s.member_count;
            if (zeros == 0) sixths += 6;       // interior, counted once
            else if (zeros == 1) sixths += 2;  // edge, shared by three faces
        }
        if (best_sixths < 0 || sixths < best_sixths) best_sixths = sixths;
    }

    FilledObservation out;
    out.d = d;
    out.face_minimum = rat(best_sixths, 6);
    if (out.face_minimum < rat(d - 1, 3))
        throw ContradictionError("filled_observation_check: face minimum below (d-1)/3");
    out.certified_lower = Rational(10) * out.face_minimum + Rational(5);

    Polynomial w = whitney(4, d);
    NewtonDiagram Dw = diagram_of(divide_by_s(homogenize_and_flip(w)), d);
    out.whitney_nodes = node_count(Dw);
    out.verdict = out.certified_lower > Rational(3 * d + 2);
    return out;
}

} // namespace sharpdeg
