#include "sharpdeg/transforms.hpp"

#include <algorithm>

namespace sharpdeg {

namespace {

Rational metric_value(const NewtonDiagram& D, Metric m) {
    return m == Metric::NodeCount ? Rational(node_count(D)) : weighted_surface_count_2d(D);
}

void seal_receipt(TransformReceipt& r) {
    if (r.support_metric) {
        r.delta_actual = support_sc_3d(Support::of(r.after)) - support_sc_3d(Support::of(r.before));
    } else {
        r.delta_actual = metric_value(r.after, r.metric) - metric_value(r.before, r.metric);
    }
    if (r.delta_actual > r.delta_bound)
        throw ContradictionError(r.transform + ": delta " + rational_to_string(r.delta_actual) +
                                 " exceeds guaranteed bound " + rational_to_string(r.delta_bound));
}

// level k of a 2D diagram as positions b = 0..k mapping to (k-b, b)
MultiIndex level_point(int k, int b) { return MultiIndex{k - b, b}; }

bool levels_below_full(const NewtonDiagram& D, int k) {
    for (int lvl = 0; lvl < k; ++lvl)
        for (int b = 0; b <= lvl; ++b)
            if (D.sign_at(level_point(lvl, b)) == 0) return false;
    return true;
}

bool level_has_nonzero(const NewtonDiagram& D, int k) {
    for (int b = 0; b <= k; ++b)
        if (D.sign_at(level_point(k, b)) != 0) return true;
    return false;
}

Sign sign_from(int v) { return v > 0 ? Sign::P : Sign::N; }

} // namespace

TransformReceipt fill_level_2d(const NewtonDiagram& D, int k, Metric metric) {
    if (D.n() != 2) throw PreconditionError("fill_level_2d: n must be 2");
    if (k < 0 || k >= D.d()) throw PreconditionError("fill_level_2d: need 0 <= k < d");
    if (!levels_below_full(D, k))
        throw PreconditionError("fill_level_2d: every point below level k must be nonzero");
    if (!level_has_nonzero(D, k))
        throw PreconditionError("fill_level_2d: level k must contain a nonzero point");

    NewtonDiagram out = D;
    if (metric == Metric::NodeCount) {
        // fill each run of zeros with alternating signs; a run touching the
        // boundary starts opposite to the point below the boundary end
        std::vector<int> vals(static_cast<std::size_t>(k + 1));
        for (int b = 0; b <= k; ++b) vals[static_cast<std::size_t>(b)] = D.sign_at(level_point(k, b));
        int b = 0;
        while (b <= k) {
            if (vals[static_cast<std::size_t>(b)] != 0) {
                ++b;
                continue;
            }
            int e = b;
            while (e + 1 <= k && vals[static_cast<std::size_t>(e + 1)] == 0) ++e;
            std::vector<Sign> run(static_cast<std::size_t>(e - b + 1));
            if (b > 0) {
                Sign start = flip(sign_from(vals[static_cast<std::size_t>(b - 1)]));
                for (std::size_t i = 0; i < run.size(); ++i)
                    run[i] = (i % 2 == 0) ? start : flip(start);
            } else {
                // b == 0, e < k since the level has an anchor: fix the left
                // boundary point opposite to the support point below it
                Sign bound = flip(sign_from(D.sign_at(MultiIndex{k - 1, 0})));
                for (std::size_t i = 0; i < run.size(); ++i)
                    run[i] = (i % 2 == 0) ? bound : flip(bound);
            }
            if (e == k && b > 0) {
                // right-boundary run: phase from the boundary end instead
                Sign bound = flip(sign_from(D.sign_at(MultiIndex{0, k - 1})));
                for (std::size_t i = 0; i < run.size(); ++i)
                    run[run.size() - 1 - i] = (i % 2 == 0) ? bound : flip(bound);
            }
            for (int p = b; p <= e; ++p) out.set(level_point(k, p), run[static_cast<std::size_t>(p - b)]);
            b = e + 1;
        }
    } else {
        // one zero at a time, next to an existing nonzero point, choosing the
        // sign that keeps the weighted surface count low.  A single step may
        // bump the count by a half (a fresh vertex node over a still-empty
        // neighbor) that a later step cancels again, so only the final total
        // is binding.
        std::vector<int> zeros;
        for (int p = 0; p <= k; ++p)
            if (D.sign_at(level_point(k, p)) == 0) zeros.push_back(p);
        for (;;) {
            int pick = -1;
            for (int p = 0; p <= k; ++p) {
                if (out.sign_at(level_point(k, p)) != 0) continue;
                bool anchored = (p > 0 && out.sign_at(level_point(k, p - 1)) != 0) ||
                                (p < k && out.sign_at(level_point(k, p + 1)) != 0);
                if (anchored) {
                    pick = p;
                    break;
                }
            }
            if (pick < 0) break;
            NewtonDiagram with_p = out;
            with_p.set(level_point(k, pick), Sign::P);
            Rational sc_p = weighted_surface_count_2d(with_p);
            NewtonDiagram with_n = out;
            with_n.set(level_point(k, pick), Sign::N);
            Rational sc_n = weighted_surface_count_2d(with_n);
            out = (sc_p <= sc_n) ? with_p : with_n;  // ties break toward P
        }
        if (weighted_surface_count_2d(out) > weighted_surface_count_2d(D) &&
            zeros.size() <= 20) {
            // the greedy path overshot; a non-increasing assignment exists,
            // find it exhaustively
            Rational base = weighted_surface_count_2d(D);
            for (std::uint64_t mask = 0; mask < (1ull << zeros.size()); ++mask) {
                NewtonDiagram cand = D;
                for (std::size_t i = 0; i < zeros.size(); ++i)
                    cand.set(level_point(k, zeros[i]),
                             (mask >> i & 1ull) ? Sign::N : Sign::P);
                if (weighted_surface_count_2d(cand) <= base) {
                    out = cand;
                    break;
                }
            }
        }
    }

    TransformReceipt r(D, out);
    r.transform = "fill_level_2d";
    r.metric = metric;
    r.delta_bound = Rational(0);
    seal_receipt(r);
    return r;
}

TransformReceipt slice_column_2d(const NewtonDiagram& D, int k) {
    if (D.n() != 2) throw PreconditionError("slice_column_2d: n must be 2");
    if (k < 0) throw PreconditionError("slice_column_2d: k must be nonnegative");
    if (!levels_below_full(D, k))
        throw PreconditionError("slice_column_2d: every point below level k must be nonzero");
    for (const auto& [m, s] : D.signs()) {
        if (m[0] == 0 && m[1] >= k)
            throw PreconditionError("slice_column_2d: column a=0 must be empty from level k up");
        if (m[0] == 1 && m[1] >= k - 1)
            throw PreconditionError("slice_column_2d: column a=1 must be empty from level k-1 up");
    }

    NewtonDiagram out(2, std::max(D.d() - 1, 0));
    for (const auto& [m, s] : D.signs())
        if (m[1] >= 1) out.set(MultiIndex{m[0], m[1] - 1}, s);

    TransformReceipt r(D, out);
    r.transform = "slice_column_2d";
    r.metric = Metric::SurfaceCount;
    r.delta_bound = rat(-1, 2);
    seal_receipt(r);
    return r;
}

TransformReceipt triangle_glue_2d(const NewtonDiagram& D, int k) {
    if (D.n() != 2) throw PreconditionError("triangle_glue_2d: n must be 2");
    if (k < 1 || k > D.d() - 1) throw PreconditionError("triangle_glue_2d: need 1 <= k <= d-1");
    for (const auto& [m, s] : D.signs())
        if (m.degree() < k)
            throw PreconditionError("triangle_glue_2d: support must be empty below level k");
    if (!level_has_nonzero(D, k))
        throw PreconditionError("triangle_glue_2d: level k must contain a support point");

    // Interface row at level k-1: opposite sign below one chosen level-k
    // support point, alternating away from it.  This cancels one of that
    // point's half-weight nodes and creates no interior nodes elsewhere.
    int anchor = -1;
    for (int b = 0; b <= k; ++b)
        if (D.sign_at(level_point(k, b)) != 0) {
            anchor = b;
            break;
        }
    Sign opposite = flip(sign_from(D.sign_at(level_point(k, anchor))));
    int lo = std::max(anchor - 1, 0);
    int hi = std::min(anchor, k - 1);
    std::vector<Sign> row(static_cast<std::size_t>(k));
    for (int p = lo; p <= hi; ++p) row[static_cast<std::size_t>(p)] = opposite;
    for (int p = lo - 1; p >= 0; --p)
        row[static_cast<std::size_t>(p)] = flip(row[static_cast<std::size_t>(p + 1)]);
    for (int p = hi + 1; p < k; ++p)
        row[static_cast<std::size_t>(p)] = flip(row[static_cast<std::size_t>(p - 1)]);

    NewtonDiagram tri = prescribed_minimal_2d(row, k);
    NewtonDiagram out = D;
    for (const auto& [m, s] : tri.signs()) out.set(m, s);

    TransformReceipt r(D, out);
    r.transform = "triangle_glue_2d";
    r.metric = Metric::SurfaceCount;
    r.delta_bound = rat(k, 2);
    seal_receipt(r);
    return r;
}

NewtonDiagram prescribed_minimal_2d(const std::vector<Sign>& top_row, int d) {
    if (static_cast<int>(top_row.size()) != d)
        throw PreconditionError("prescribed_minimal_2d: top row must have d entries");
    NewtonDiagram D(2, d);
    for (int b = 0; b < d; ++b) D.set(level_point(d - 1, b), top_row[static_cast<std::size_t>(b)]);
    // each lower level drops the leftmost entry of the one above and flips
    for (int lvl = d - 2; lvl >= 0; --lvl)
        for (int b = 0; b <= lvl; ++b) {
            int above = D.sign_at(MultiIndex{lvl - b, b + 1});
            D.set(level_point(lvl, b), flip(sign_from(above)));
        }
    return D;
}

namespace {

NewtonDiagram normalize_translate(const NewtonDiagram& D) {
    Support K = Support::of(D);
    SupportGeometry g = support_geometry(K);
    if (g.hull_base.degree() == 0) return D;
    NewtonDiagram out(D.n(), g.size);
    for (const auto& [m, s] : D.signs()) out.set(m - g.hull_base, s);
    return out;
}

} // namespace

Reduce3dResult reduce_3d_step(const NewtonDiagram& D0) {
    if (D0.n() != 3) throw PreconditionError("reduce_3d_step: n must be 3");
    if (D0.empty()) throw PreconditionError("reduce_3d_step: empty diagram");
    NewtonDiagram D = normalize_translate(D0);
    Support K = Support::of(D);
    SupportGeometry geom = support_geometry(K);
    if (!geom.connected) throw PreconditionError("reduce_3d_step: support must be connected");
    if (has_overhang(K).found) throw PreconditionError("reduce_3d_step: support has an overhang");
    int d = geom.size;

    auto in_K = [&](const MultiIndex& m) { return K.points.count(m) > 0; };

    // largest k with every |m| < k present
    int k = 0;
    while (k < d) {
        bool full = true;
        for (int a = 0; a <= k && full; ++a)
            for (int b = 0; a + b <= k && full; ++b)
                if (!in_K(MultiIndex{a, b, k - a - b})) full = false;
        if (!full) break;
        ++k;
    }
    if (k == 0)
        throw ContradictionError("reduce_3d_step: normalized no-overhang support misses the origin");

    if (k == d) {
        Reduce3dResult res{Reduce3dResult::Kind::Terminal, D};
        return res;
    }

    // occupancy of the three edges of the level-k triangle
    int missing_axis = -1;
    for (int axis = 0; axis < 3 && missing_axis < 0; ++axis) {
        bool occupied = false;
        for (const MultiIndex& m : K.points)
            if (m.degree() == k && m[static_cast<std::size_t>(axis)] == 0) {
                occupied = true;
                break;
            }
        if (!occupied) missing_axis = axis;
    }

    if (missing_axis >= 0) {
        // slice off the face in the missing coordinate plane
        for (const MultiIndex& m : K.points)
            if (m[static_cast<std::size_t>(missing_axis)] == 0 && m.degree() >= k)
                throw ContradictionError(
                    "reduce_3d_step: no-overhang support has a plane point above the gap");
        NewtonDiagram out(3, d - 1);
        for (const auto& [m, s] : D.signs())
            if (m[static_cast<std::size_t>(missing_axis)] >= 1)
                out.set(m.plus(static_cast<std::size_t>(missing_axis), -1), s);
        Support K2 = Support::of(out);
        if (has_overhang(K2).found)
            throw ContradictionError("reduce_3d_step: slice produced an overhang");
        if (support_geometry(K2).size != d - 1)
            throw ContradictionError("reduce_3d_step: slice did not drop the size by one");
        Reduce3dResult res{Reduce3dResult::Kind::SliceOffFace, out};
        res.axis = missing_axis;
        TransformReceipt r(D, out);
        r.transform = "reduce3d_slice_off_face";
        r.metric = Metric::SurfaceCount;
        r.support_metric = true;
        r.delta_bound = Rational(-2);
        seal_receipt(r);
        res.receipt = std::move(r);
        return res;
    }

    // fill level k: slide the level-(k-1) signs up, then walk the remaining
    // edge zeros assigning whichever sign adds fewer nodes
    NewtonDiagram out = D;
    std::vector<MultiIndex> edge_zeros;
    for (int a = 0; a <= k; ++a)
        for (int b = 0; a + b <= k; ++b) {
            MultiIndex m{a, b, k - a - b};
            if (in_K(m)) continue;
            if (a >= 1) out.set(m, sign_from(D.sign_at(m.plus(0, -1))));
            else edge_zeros.push_back(m);
        }
    while (!edge_zeros.empty()) {
        std::size_t pick = edge_zeros.size();
        for (std::size_t i = 0; i < edge_zeros.size(); ++i) {
            for (const MultiIndex& nb : lattice_neighbors(edge_zeros[i]))
                if (nb.non_negative() && out.sign_at(nb) != 0) {
                    pick = i;
                    break;
                }
            if (pick < edge_zeros.size()) break;
        }
        if (pick == edge_zeros.size())
            throw ContradictionError("reduce_3d_step: isolated zero on the level-k edge");
        MultiIndex m = edge_zeros[pick];
        edge_zeros.erase(edge_zeros.begin() + static_cast<std::ptrdiff_t>(pick));
        NewtonDiagram with_p = out;
        with_p.set(m, Sign::P);
        NewtonDiagram with_n = out;
        with_n.set(m, Sign::N);
        out = (node_count(with_p) <= node_count(with_n)) ? with_p : with_n;
    }
    Support K2 = Support::of(out);
    if (has_overhang(K2).found)
        throw ContradictionError("reduce_3d_step: fill produced an overhang");

    Reduce3dResult res{Reduce3dResult::Kind::FillLevel, out};
    TransformReceipt r(D, out);
    r.transform = "reduce3d_fill_level";
    r.metric = Metric::SurfaceCount;
    r.support_metric = true;
    r.delta_bound = Rational(0);
    seal_receipt(r);
    res.receipt = std::move(r);
    return res;
}

std::pair<NewtonDiagram, NewtonDiagram> view_diagrams_3d(const NewtonDiagram& D) {
    if (D.n() != 3) throw PreconditionError("view_diagrams_3d: n must be 3");
    // cell (a,b) collects the fiber {(a,k,b-k)}; the first view keeps the
    // entry with the smallest k, the second the largest
    std::map<std::pair<int, int>, std::pair<int, Sign>> lo, hi;
    for (const auto& [m, s] : D.signs()) {
        std::pair<int, int> cell{m[0], m[1] + m[2]};
        int key = m[1];
        auto itl = lo.find(cell);
        if (itl == lo.end() || key < itl->second.first) lo[cell] = {key, s};
        auto ith = hi.find(cell);
        if (ith == hi.end() || key > ith->second.first) hi[cell] = {key, s};
    }
    NewtonDiagram D1(2, D.d()), D2(2, D.d());
    for (const auto& [cell, ks] : lo) D1.set(MultiIndex{cell.first, cell.second}, ks.second);
    for (const auto& [cell, ks] : hi) D2.set(MultiIndex{cell.first, cell.second}, ks.second);
    return {D1, D2};
}

} // namespace sharpdeg
