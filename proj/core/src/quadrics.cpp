#include "sharpdeg/quadrics.hpp"

#include <algorithm>

#include "sharpdeg/enumeration.hpp"

namespace sharpdeg {

int MonomialMap::degree() const {
    if (components.empty()) throw PreconditionError("monomial map has no components");
    return components.front().exponent.degree();
}

void MonomialMap::validate() const {
    if (source.pos < 1) throw PreconditionError("source signature needs a positive part");
    if (components.empty()) throw PreconditionError("monomial map has no components");
    const int nv = nvars();
    int deg = components.front().exponent.degree();
    int pos = 0, neg = 0;
    for (const MapComponent& c : components) {
        if (static_cast<int>(c.exponent.size()) != nv)
            throw PreconditionError("component exponent arity mismatch");
        if (!c.exponent.non_negative())
            throw PreconditionError("component exponent must be nonnegative");
        if (c.exponent.degree() != deg)
            throw PreconditionError("components must share one degree");
        if (sgn(c.coeff_sq) <= 0)
            throw PreconditionError("component squared magnitude must be positive");
        (c.negative_slot ? neg : pos) += 1;
    }
    // homogeneous target signature is (pos, neg+1) of the affine one, up to
    // an overall sign of the defining form
    bool direct = pos == target.pos && neg == target.neg + 1;
    bool flipped = neg == target.pos && pos == target.neg + 1;
    if (!direct && !flipped)
        throw PreconditionError("component slots do not match the target signature");
}

Polynomial real_polynomial_of_map(const MonomialMap& f) {
    f.validate();
    Polynomial R(f.nvars());
    for (const MapComponent& c : f.components)
        R.add_term(c.exponent, c.negative_slot ? -c.coeff_sq : c.coeff_sq);
    return R;
}

MonomialMap map_of_positive_polynomial(const Polynomial& p) {
    const int n = p.nvars();
    int d = p.degree();
    if (d < 1) throw PreconditionError("map_of_positive_polynomial: degree must be at least 1");
    for (const auto& [m, c] : p.terms())
        if (sgn(c) < 0)
            throw PreconditionError("map_of_positive_polynomial: negative coefficient present");
    if (!constant_one_on_hyperplane(p))
        throw PreconditionError("map_of_positive_polynomial: polynomial is not 1 on the hyperplane");

    MonomialMap f;
    f.source = {n, 0};
    f.target = {static_cast<int>(p.term_count()), 0};
    for (const auto& [m, c] : p.terms()) {
        MapComponent comp;
        comp.coeff_sq = c;
        MultiIndex e(static_cast<std::size_t>(n + 1));
        e[0] = d - m.degree();
        for (int i = 0; i < n; ++i) e[static_cast<std::size_t>(i + 1)] = m[static_cast<std::size_t>(i)];
        comp.exponent = e;
        comp.negative_slot = false;
        f.components.push_back(std::move(comp));
    }
    // the homogenizing coordinate occupies the one negative slot of the target
    MapComponent denom;
    denom.coeff_sq = Rational(1);
    MultiIndex e(static_cast<std::size_t>(n + 1));
    e[0] = d;
    denom.exponent = e;
    denom.negative_slot = true;
    f.components.push_back(std::move(denom));
    return f;
}

namespace {

// Signed forms with the source's homogeneous signature, i.e. source.neg + 1
// minus signs distributed over the n+1 coordinates.
std::vector<std::vector<int>> source_forms(const MonomialMap& f) {
    const int nv = f.nvars();
    const int minus = f.source.neg + 1;
    std::vector<std::vector<int>> forms;
    std::vector<int> pick(static_cast<std::size_t>(minus));
    auto rec = [&](auto&& self, int from, int got) -> void {
        if (got == minus) {
            std::vector<int> form(static_cast<std::size_t>(nv), 1);
            for (int i = 0; i < minus; ++i) form[static_cast<std::size_t>(pick[static_cast<std::size_t>(i)])] = -1;
            forms.push_back(std::move(form));
            return;
        }
        for (int v = from; v < nv; ++v) {
            pick[static_cast<std::size_t>(got)] = v;
            self(self, v + 1, got + 1);
        }
    };
    rec(rec, 0, 0);
    return forms;
}

} // namespace

QuadricCheck verify_quadric_map(const MonomialMap& f) {
    Polynomial R = real_polynomial_of_map(f);
    QuadricCheck out;
    if (R.is_zero()) {
        // fully cancelling maps vanish on everything
        out.valid = true;
        out.witness_form.assign(static_cast<std::size_t>(f.nvars()), 1);
        out.witness_form[0] = -1;
        return out;
    }
    for (const auto& form : source_forms(f)) {
        if (try_divide_by_linear(R, form)) {
            out.valid = true;
            out.witness_form = form;
            return out;
        }
    }
    return out;
}

MapDecomposition monomial_decomposability(const MonomialMap& f, std::size_t cap) {
    QuadricCheck check = verify_quadric_map(f);
    if (!check.valid)
        throw PreconditionError("monomial_decomposability: not a hyperquadric map");
    Polynomial R = real_polynomial_of_map(f);
    const std::size_t count = f.components.size();

    MapDecomposition out;
    if (count <= 1) return out;

    // candidate source forms: every signed form that divides the real
    // polynomial can carry a decomposition
    std::vector<std::vector<int>> forms;
    for (const auto& form : source_forms(f))
        if (R.is_zero() || try_divide_by_linear(R, form)) forms.push_back(form);

    auto group_real = [&](std::uint64_t mask) {
        Polynomial S(f.nvars());
        for (std::size_t i = 0; i < count; ++i)
            if (mask >> i & 1ull) {
                const MapComponent& c = f.components[i];
                S.add_term(c.exponent, c.negative_slot ? -c.coeff_sq : c.coeff_sq);
            }
        return S;
    };

    if (count <= cap) {
        const std::uint64_t limit = 1ull << (count - 1);
        for (std::uint64_t half = 1; half < limit; ++half) {
            std::uint64_t mask = half << 1 | 1ull;  // keep component 0 on the left
            if (mask == (1ull << count) - 1) continue;
            Polynomial G = group_real(mask);
            for (const auto& form : forms) {
                bool g_ok = G.is_zero() || try_divide_by_linear(G, form).has_value();
                if (!g_ok) continue;
                Polynomial H = R - G;
                bool h_ok = H.is_zero() || try_divide_by_linear(H, form).has_value();
                if (!h_ok) continue;
                out.kind = MapDecomposition::Kind::Decomposable;
                out.groups.assign(2, {});
                for (std::size_t i = 0; i < count; ++i)
                    out.groups[(mask >> i & 1ull) ? 0 : 1].push_back(static_cast<int>(i));
                return out;
            }
        }
        out.kind = MapDecomposition::Kind::Indecomposable;
        return out;
    }

    // too many components for the exact search: a disconnected support still
    // decides, anything else stays open
    for (const auto& form : forms) {
        if (R.is_zero()) break;
        Decomposition dec = decomposability_oracle_wrt(R, form, 0);
        if (dec.kind == Decomposition::Kind::Decomposable) {
            out.kind = MapDecomposition::Kind::Decomposable;
            out.groups.assign(dec.parts.size(), {});
            for (std::size_t i = 0; i < count; ++i) {
                const MultiIndex& e = f.components[i].exponent;
                std::size_t where = 0;
                for (std::size_t g = 0; g < dec.parts.size(); ++g)
                    if (std::binary_search(dec.parts[g].begin(), dec.parts[g].end(), e,
                                           GradedLexAsc{}))
                        where = g;
                out.groups[where].push_back(static_cast<int>(i));
            }
            return out;
        }
    }
    out.kind = MapDecomposition::Kind::Indeterminate;
    return out;
}

BoundReport degree_report(const MonomialMap& f) {
    QuadricCheck check = verify_quadric_map(f);
    if (!check.valid) throw PreconditionError("degree_report: not a hyperquadric map");
    Polynomial R = real_polynomial_of_map(f);

    const int n = f.nvars() - 1;             // source affine dimension
    const int Ncomp = static_cast<int>(f.components.size());
    const int Nproj = Ncomp - 1;             // target projective dimension

    bool lin_indep = true;
    {
        std::set<MultiIndex, GradedLexAsc> seen;
        for (const MapComponent& c : f.components)
            if (!seen.insert(c.exponent).second) lin_indep = false;
    }
    MapDecomposition dec;
    bool indecomposable = false, indecomp_exact = false;
    if (Ncomp > 1) {
        dec = monomial_decomposability(f);
        indecomposable = dec.kind == MapDecomposition::Kind::Indecomposable;
        indecomp_exact = dec.kind != MapDecomposition::Kind::Indeterminate;
        if (dec.kind == MapDecomposition::Kind::Indeterminate) indecomposable = true;
    } else {
        indecomposable = indecomp_exact = true;
    }

    bool sphere_source = f.source.neg == 0;
    int neg_slots = 0;
    for (const MapComponent& c : f.components)
        if (c.negative_slot) ++neg_slots;
    bool sphere_target = f.target.neg == 0 && neg_slots == 1;

    int actual = R.is_zero() ? 0 : p_degree_and_count(R).p_degree;

    BoundReport out;
    out.n = n;
    out.N = Nproj;
    out.actual_degree = Rational(actual);

    auto push = [&](const char* tag, Rational value, bool conditional, std::string note) {
        BoundEntry e;
        e.tag = tag;
        e.value = std::move(value);
        e.conditional = conditional;
        e.note = std::move(note);
        e.satisfied = out.actual_degree <= e.value;
        e.sharp = out.actual_degree == e.value;
        out.bounds.push_back(std::move(e));
    };

    if (n == 2 && lin_indep && indecomposable)
        push("T1.3i", rat(2 * Nproj - 3), !indecomp_exact, "");
    if (n == 3 && sphere_source && sphere_target) {
        // sphere maps: N counts the affine target components
        push("T1.3ii", rat(Nproj - 1, 2), false, "sphere to sphere");
    }
    if (lin_indep && indecomposable) {
        int NR = static_cast<int>(R.term_count());
        push("T1.3iii", rat((n - 1) * (2 * NR - 5)), !indecomp_exact,
             "existence value, far from optimal");
    }
    if (!lin_indep || !indecomposable) {
        BoundEntry e;
        e.tag = "withheld";
        e.value = Rational(0);
        e.satisfied = true;
        e.conditional = true;
        e.note = "bounds require linearly independent components and monomial-indecomposability";
        out.bounds.push_back(std::move(e));
    }
    return out;
}

} // namespace sharpdeg
