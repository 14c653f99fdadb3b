// Acceptance suite: one pass/fail line per criterion, exit 0 only when all
// criteria hold.  Everything is exact arithmetic; no tolerances anywhere.

#include <sharpdeg/bounds.hpp>
#include <sharpdeg/constructions.hpp>
#include <sharpdeg/enumeration.hpp>
#include <sharpdeg/quadrics.hpp>
#include <sharpdeg/transforms.hpp>

#include <chrono>
#include <functional>
#include <iostream>
#include <random>
#include <sstream>
#include <string>
#include <vector>

using namespace sharpdeg;

namespace {

int failures = 0;

void report(int index, const std::string& label, bool ok, const std::string& detail = {}) {
    std::cout << (ok ? "PASS" : "FAIL") << " criterion " << index << ": " << label;
    if (!detail.empty()) std::cout << " [" << detail << "]";
    std::cout << std::endl;
    if (!ok) ++failures;
}

NewtonDiagram member_diagram(const Polynomial& p) {
    return diagram_of(divide_by_s(homogenize_and_flip(p)), p.degree());
}

// ---- criterion 1: exhaustive two-variable sweep ---------------------------

void criterion_1() {
    Certificate cert = exhaustive_bound_verify(SweepTheorem::T34, 5);
    bool ok = cert.ok;
    std::ostringstream detail;
    for (const SweepEntry& e : cert.entries) {
        if (e.min_nodes != e.bound) ok = false;  // bound met with equality
        detail << "d=" << e.d << ":" << e.min_nodes << "/" << e.bound << " ";
    }
    report(1, "connected 2D supports of size d<=5 need ceil((d+5)/2) nodes, attained", ok,
           detail.str());
}

// ---- criterion 2: exhaustive three-variable sweep -------------------------

void criterion_2(bool long_mode) {
    int dmax = long_mode ? 4 : 3;
    Certificate cert = exhaustive_bound_verify(SweepTheorem::T52, dmax, long_mode);
    bool ok = cert.ok;
    std::ostringstream detail;
    for (const SweepEntry& e : cert.entries) {
        if (e.min_nodes != e.bound) ok = false;
        detail << "d=" << e.d << ":" << e.min_nodes << "/" << e.bound << " ";
    }
    // equality is witnessed by the path supports of the replacement family
    for (int d = 1; d <= dmax; ++d) {
        Support K = Support::of(member_diagram(whitney(3, d)));
        MinNodesResult r = min_nodes_over_signs(K, d);
        if (r.min_nodes != 2 * d + 2) {
            ok = false;
            detail << "path-witness d=" << d << " got " << r.min_nodes << " ";
        }
    }
    report(2, "no-overhang 3D supports of size d<=" + std::to_string(dmax) +
                  " need 2d+2 nodes, path-attained",
           ok, detail.str());
}

// ---- criterion 3: sharp family counts -------------------------------------

void criterion_3() {
    bool ok = true;
    std::ostringstream detail;
    for (int d = 1; d <= 17; d += 2) {
        Polynomial p = dkr_sharp_2d(d);
        int N = static_cast<int>(p.term_count());
        if (N != (d + 3) / 2 || p.degree() != 2 * N - 3 || !class_membership(p).in_H) {
            ok = false;
            detail << "dkr d=" << d << " ";
        }
    }
    {
        Polynomial p3 = faran_cubics().second;
        if (p3.term_count() != 7 || p3.degree() != 3 ||
            Rational(p3.degree()) != rat(static_cast<int>(p3.term_count()) - 1, 2)) {
            ok = false;
            detail << "cubic ";
        }
    }
    for (int n = 2; n <= 5; ++n)
        for (int d = 1; d <= 8; ++d) {
            Polynomial p = whitney(n, d);
            int N = static_cast<int>(p.term_count());
            if (N != d * (n - 1) + 1 || Rational(d) != rat(N - 1, n - 1) ||
                !class_membership(p).in_H) {
                ok = false;
                detail << "whitney(" << n << "," << d << ") ";
            }
        }
    report(3, "sharp families hit their exact term counts and equalities", ok, detail.str());
}

// ---- criterion 4: the figure-one pipeline ---------------------------------

void criterion_4() {
    Polynomial p = faran_cubics().first;
    Polynomial P = homogenize_and_flip(p);
    Polynomial Q = divide_by_s(P);
    NewtonDiagram D = diagram_of(Q, 3);
    bool ok = true;
    ok = ok && D.sign_at(MultiIndex{0, 0}) == 1;
    ok = ok && D.sign_at(MultiIndex{2, 0}) == 1;
    ok = ok && D.sign_at(MultiIndex{0, 2}) == 1;
    ok = ok && D.sign_at(MultiIndex{1, 0}) == -1;
    ok = ok && D.sign_at(MultiIndex{0, 1}) == -1;
    ok = ok && D.sign_at(MultiIndex{1, 1}) == -1;
    ok = ok && D.signs().size() == 6;
    ok = ok && node_count(D) == 4;
    ok = ok && weighted_surface_count_2d(D) == Rational(2);
    report(4, "homogenize-divide recovers the known sign pattern with 4 nodes and SC 2", ok);
}

// ---- criterion 5: exhaustive filled-sharp search --------------------------

void criterion_5() {
    bool ok = true;
    std::ostringstream detail;
    auto d1 = filledsharp_search(1);
    if (d1.size() != 1 || !(d1[0] == Polynomial::hyperplane_sum(3))) {
        ok = false;
        detail << "d=1 ";
    }
    for (int d : {2, 4, 5}) {
        auto found = filledsharp_search(d);
        detail << "d=" << d << ":" << found.size() << " ";
        if (!found.empty()) ok = false;
    }
    auto d3 = filledsharp_search(3);
    detail << "d=3:" << d3.size();
    if (d3.size() != 3) ok = false;
    // the three results are exactly the permutation orbit of the cubic
    Polynomial base = faran_cubics().second;
    int matched = 0;
    int perm[3] = {0, 1, 2};
    std::sort(perm, perm + 3);
    std::vector<Polynomial> orbit;
    do {
        Polynomial image(3);
        for (const auto& [m, c] : base.terms()) {
            MultiIndex q(3);
            for (int i = 0; i < 3; ++i) q[static_cast<std::size_t>(perm[i])] = m[static_cast<std::size_t>(i)];
            image.add_term(q, c);
        }
        bool fresh = true;
        for (const Polynomial& seen : orbit)
            if (seen == image) fresh = false;
        if (fresh) orbit.push_back(image);
    } while (std::next_permutation(perm, perm + 3));
    for (const Polynomial& p : d3)
        for (const Polynomial& q : orbit)
            if (p == q) ++matched;
    if (matched != 3) ok = false;
    report(5, "filled-support sharp search finds {s}, {}, cubic orbit, {}, {}", ok, detail.str());
}

// ---- criterion 6: randomized transform receipts ---------------------------

Sign coin(std::mt19937_64& rng) { return (rng() & 1) ? Sign::P : Sign::N; }

void criterion_6() {
    std::mt19937_64 rng(20240817);
    bool ok = true;
    std::string first_failure;

    auto guard = [&](const char* what, const std::function<void()>& fn) {
        try {
            fn();
        } catch (const std::exception& e) {
            ok = false;
            if (first_failure.empty()) first_failure = std::string(what) + ": " + e.what();
        }
    };

    for (int t = 0; t < 1000; ++t) {
        int d = 2 + static_cast<int>(rng() % 5);
        int k = 1 + static_cast<int>(rng() % static_cast<std::uint64_t>(d - 1));
        NewtonDiagram D(2, d);
        for (int lvl = 0; lvl < k; ++lvl)
            for (int b = 0; b <= lvl; ++b) D.set(MultiIndex{lvl - b, b}, coin(rng));
        int anchor = static_cast<int>(rng() % static_cast<std::uint64_t>(k + 1));
        D.set(MultiIndex{k - anchor, anchor}, coin(rng));
        for (int lvl = k; lvl < d; ++lvl)
            for (int b = 0; b <= lvl; ++b)
                if (rng() % 3 == 0) D.set(MultiIndex{lvl - b, b}, coin(rng));
        Metric m = (t % 2) ? Metric::NodeCount : Metric::SurfaceCount;
        guard("fill", [&] {
            TransformReceipt r = fill_level_2d(D, k, m);
            if (r.delta_actual > Rational(0)) throw ContradictionError("fill gained");
        });
    }

    for (int t = 0; t < 1000; ++t) {
        int d = 2 + static_cast<int>(rng() % 5);
        int k = 1 + static_cast<int>(rng() % static_cast<std::uint64_t>(d));
        NewtonDiagram D(2, d);
        for (int lvl = 0; lvl < k; ++lvl)
            for (int b = 0; b <= lvl; ++b) D.set(MultiIndex{lvl - b, b}, coin(rng));
        for (int a = 2; a < d; ++a)
            for (int b = 0; a + b < d; ++b)
                if (a + b >= k && rng() % 3 == 0) D.set(MultiIndex{a, b}, coin(rng));
        guard("slice", [&] {
            TransformReceipt r = slice_column_2d(D, k);
            if (r.delta_actual > rat(-1, 2)) throw ContradictionError("slice undershot");
        });
    }

    for (int t = 0; t < 1000; ++t) {
        int d = 2 + static_cast<int>(rng() % 5);
        int k = 1 + static_cast<int>(rng() % static_cast<std::uint64_t>(d - 1));
        NewtonDiagram D(2, d);
        int anchor = static_cast<int>(rng() % static_cast<std::uint64_t>(k + 1));
        D.set(MultiIndex{k - anchor, anchor}, coin(rng));
        for (int lvl = k; lvl < d; ++lvl)
            for (int b = 0; b <= lvl; ++b)
                if (rng() % 3 == 0) D.set(MultiIndex{lvl - b, b}, coin(rng));
        guard("glue", [&] {
            TransformReceipt r = triangle_glue_2d(D, k);
            if (r.delta_actual > rat(k, 2)) throw ContradictionError("glue overpaid");
        });
    }

    for (int d = 1; d <= 12 && ok; ++d)
        for (int t = 0; t < 30; ++t) {
            std::vector<Sign> row;
            for (int i = 0; i < d; ++i) row.push_back(coin(rng));
            guard("prescribed", [&] {
                if (weighted_surface_count_2d(prescribed_minimal_2d(row, d)) != rat(d + 1, 2))
                    throw ContradictionError("prescribed missed (d+1)/2");
            });
        }

    report(6, "3000 randomized surgery receipts and exact prescribed-minimum rows", ok,
           first_failure);
}

// ---- criterion 7: reduction pipelines --------------------------------------

// pure-power chain along a chosen variable
std::vector<MultiIndex> power_chain(int n, int d, int var) {
    std::vector<MultiIndex> choices;
    for (int k = 1; k < d; ++k) {
        MultiIndex m(static_cast<std::size_t>(n));
        m[static_cast<std::size_t>(var)] = k;
        choices.push_back(m);
    }
    return choices;
}

// first step replaces the last variable, later steps the mixed monomial
// x_1 x_n^(k-1), which each step keeps available
std::vector<MultiIndex> bent_chain(int n, int d) {
    std::vector<MultiIndex> choices;
    for (int k = 1; k < d; ++k) {
        MultiIndex m(static_cast<std::size_t>(n));
        if (k == 1) m[static_cast<std::size_t>(n - 1)] = 1;
        else {
            m[0] = 1;
            m[static_cast<std::size_t>(n - 1)] = k - 1;
        }
        choices.push_back(m);
    }
    return choices;
}

std::vector<Polynomial> pipeline_inputs() {
    std::vector<Polynomial> out;
    auto [p2, p3] = faran_cubics();
    Polynomial s3 = Polynomial::hyperplane_sum(3);
    // three affine variables
    for (int d = 1; d <= 8; ++d) out.push_back(whitney(3, d));
    out.push_back(p3);
    out.push_back(sharp_extend(p3, MultiIndex{0, 0, 3}, s3));
    out.push_back(sharp_extend(p3, MultiIndex{3, 0, 0}, s3));
    out.push_back(sharp_extend(p3, MultiIndex{0, 0, 3}, p3));
    out.push_back(sharp_extend(s3, MultiIndex{0, 0, 1}, p3));
    {
        Polynomial q = sharp_extend(p3, MultiIndex{0, 0, 3}, s3);
        out.push_back(sharp_extend(q, MultiIndex{0, 0, 4}, s3));
    }
    out.push_back(sharp_extend(p3, MultiIndex{0, 3, 0}, s3));
    out.push_back(sharp_extend(p3, MultiIndex{0, 3, 0}, p3));
    for (int d = 2; d <= 6; ++d) out.push_back(whitney(3, d, power_chain(3, d, 1)));
    for (int d = 2; d <= 6; ++d) out.push_back(whitney(3, d, bent_chain(3, d)));
    // four and five affine variables
    for (int d = 1; d <= 6; ++d) out.push_back(whitney(4, d));
    for (int d = 2; d <= 5; ++d) out.push_back(whitney(4, d, power_chain(4, d, 1)));
    for (int d = 2; d <= 5; ++d) out.push_back(whitney(4, d, bent_chain(4, d)));
    for (int d = 1; d <= 5; ++d) out.push_back(whitney(5, d));
    for (int d = 2; d <= 4; ++d) out.push_back(whitney(5, d, power_chain(5, d, 1)));
    for (int d = 2; d <= 4; ++d) out.push_back(whitney(5, d, bent_chain(5, d)));
    return out;
}

void criterion_7() {
    std::vector<Polynomial> inputs = pipeline_inputs();
    bool ok = inputs.size() >= 50;
    std::ostringstream detail;
    detail << inputs.size() << " inputs";
    int idx = 0;
    for (const Polynomial& p : inputs) {
        ++idx;
        try {
            Polynomial P = homogenize_and_flip(p);
            const int n = p.nvars();
            const int d = P.degree();
            const int N = static_cast<int>(P.term_count());
            PullbackResult pr = pullback_compose(P);
            if (!try_divide_by_s(pr.composed)) throw ContradictionError("not divisible");
            if (pr.composed.term_count() > P.term_count())
                throw ContradictionError("monomials gained");
            if (Rational(d) > rat(2 * n * (2 * N - 5), 3 * n * n - 3 * n - 2))
                throw ContradictionError("pullback bound violated");
            CollapseResult cr = collapse_to_two_vars(P);
            if (!try_divide_by_s(cr.collapsed)) throw ContradictionError("collapse not divisible");
            if (Rational(d) > Rational((n - 1) * (2 * N - 5)))
                throw ContradictionError("collapse bound violated");
        } catch (const std::exception& e) {
            ok = false;
            detail << "; input " << idx << ": " << e.what();
            break;
        }
    }
    report(7, "pullback and collapse pipelines hold on 50+ generated inputs", ok, detail.str());
}

// ---- criterion 8: per-variable dependence ----------------------------------

void criterion_8() {
    bool ok = true;
    std::ostringstream detail;
    std::vector<Polynomial> inputs;
    auto [p2, p3] = faran_cubics();
    Polynomial s3 = Polynomial::hyperplane_sum(3);
    for (int d = 1; d <= 8; ++d) inputs.push_back(whitney(3, d));
    inputs.push_back(p3);
    inputs.push_back(sharp_extend(p3, MultiIndex{0, 0, 3}, s3));
    inputs.push_back(sharp_extend(p3, MultiIndex{0, 0, 3}, p3));
    inputs.push_back(sharp_extend(s3, MultiIndex{0, 0, 1}, p3));
    for (const Polynomial& p : inputs) {
        if (p.degree() > 8) continue;
        DependenceReport r = variable_dependence_check(p);
        for (int c : r.per_variable)
            if (c < r.d) {
                ok = false;
                detail << "violation at d=" << r.d << " ";
            }
    }
    report(8, "every generated three-variable member has >= d terms per variable", ok,
           detail.str());
}

// ---- criterion 9: hyperquadric bridge ---------------------------------------

MonomialMap reducible_example(int d) {
    MonomialMap f;
    f.source = {2, 0};
    f.target = {4, 1};
    auto comp = [&](std::vector<int> e, bool neg) {
        MapComponent c;
        c.coeff_sq = Rational(1);
        c.exponent = MultiIndex(std::move(e));
        c.negative_slot = neg;
        f.components.push_back(std::move(c));
    };
    comp({1, 0, d - 1}, false);
    comp({0, 1, d - 1}, false);
    comp({d, 0, 0}, false);
    comp({d - 1, 1, 0}, false);
    comp({0, 0, d}, true);
    comp({d - 1, 0, 1}, true);
    return f;
}

void criterion_9() {
    bool ok = true;
    std::ostringstream detail;
    std::vector<Polynomial> members{whitney(3, 2), whitney(3, 3), whitney(2, 4),
                                    faran_cubics().first, faran_cubics().second, dkr_sharp_2d(5)};
    for (const Polynomial& p : members) {
        MonomialMap f = map_of_positive_polynomial(p);
        Polynomial R = real_polynomial_of_map(f);
        // the squared magnitudes are exactly the coefficients of p
        Polynomial affine = R.substitute(0, Polynomial::constant(p.nvars() + 1, Rational(1)));
        Polynomial expect(p.nvars() + 1);
        for (const auto& [m, c] : p.terms()) {
            std::vector<int> e(static_cast<std::size_t>(p.nvars() + 1), 0);
            for (int i = 0; i < p.nvars(); ++i) e[static_cast<std::size_t>(i + 1)] = m[static_cast<std::size_t>(i)];
            expect.add_term(MultiIndex(e), c);
        }
        expect.add_term(MultiIndex(std::vector<int>(static_cast<std::size_t>(p.nvars() + 1), 0)),
                        Rational(-1));
        if (!(affine == expect)) {
            ok = false;
            detail << "roundtrip ";
        }
        if (!verify_quadric_map(f).valid) {
            ok = false;
            detail << "verify ";
        }
    }
    // decomposability verdicts agree on both sides for small maps
    std::vector<MonomialMap> maps;
    for (const Polynomial& p : {whitney(3, 2), faran_cubics().first, dkr_sharp_2d(5)})
        maps.push_back(map_of_positive_polynomial(p));
    for (int d = 2; d <= 4; ++d) maps.push_back(reducible_example(d));
    for (const MonomialMap& f : maps) {
        if (f.components.size() > 12) continue;
        // agreement is claimed only for linearly independent components
        std::set<MultiIndex, GradedLexAsc> seen;
        bool independent = true;
        for (const MapComponent& c : f.components)
            if (!seen.insert(c.exponent).second) independent = false;
        if (!independent) continue;
        MapDecomposition md = monomial_decomposability(f);
        QuadricCheck qc = verify_quadric_map(f);
        Decomposition pd = decomposability_oracle_wrt(real_polynomial_of_map(f), qc.witness_form);
        bool a = md.kind == MapDecomposition::Kind::Decomposable;
        bool b = pd.kind == Decomposition::Kind::Decomposable;
        if (a != b) {
            ok = false;
            detail << "oracle-mismatch ";
        }
    }
    for (int d = 1; d <= 5; ++d) {
        MapDecomposition md = monomial_decomposability(reducible_example(d));
        if (md.kind != MapDecomposition::Kind::Decomposable) {
            ok = false;
            detail << "reducible d=" << d << " ";
        }
    }
    report(9, "map/polynomial round trips, oracle agreement, decomposable example detected", ok,
           detail.str());
}

// ---- criterion 10: the four-variable observation ----------------------------

void criterion_10() {
    bool ok = true;
    std::ostringstream detail;
    for (int d : {2, 3}) {
        FilledObservation r = filled_observation_check(d);
        detail << "d=" << d << " lower=" << rational_to_string(r.certified_lower) << " path="
               << r.whitney_nodes << "  ";
        if (!r.verdict || r.whitney_nodes != 3 * d + 2) ok = false;
    }
    report(10, "filled 4D diagrams exceed 3d+2 nodes while the path family attains it", ok,
           detail.str());
}

} // namespace

int main(int argc, char** argv) {
    bool long_mode = false;
    for (int i = 1; i < argc; ++i)
        if (std::string(argv[i]) == "--long") long_mode = true;

    auto timed = [&](const char* name, const std::function<void()>& fn) {
        auto start = std::chrono::steady_clock::now();
        fn();
        auto ms = std::chrono::duration_cast<std::chrono::milliseconds>(
                      std::chrono::steady_clock::now() - start)
                      .count();
        std::cout << "  (" << name << " took " << ms << " ms)" << std::endl;
    };

    timed("criterion 1", criterion_1);
    timed("criterion 2", [&] { criterion_2(long_mode); });
    timed("criterion 3", criterion_3);
    timed("criterion 4", criterion_4);
    timed("criterion 5", criterion_5);
    timed("criterion 6", criterion_6);
    timed("criterion 7", criterion_7);
    timed("criterion 8", criterion_8);
    timed("criterion 9", criterion_9);
    timed("criterion 10", criterion_10);

    if (failures == 0) {
        std::cout << "all acceptance criteria hold" << std::endl;
        return 0;
    }
    std::cout << failures << " criteria failed" << std::endl;
    return 1;
}
