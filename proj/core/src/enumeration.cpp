#include "sharpdeg/enumeration.hpp"

#include <algorithm>
#include <bit>

namespace sharpdeg {

namespace {

// The simplex {m in N_0^n : |m| <= d-1} as an indexed point list with
// precomputed masks, so subset sweeps are plain bit fiddling.
struct SimplexGrid {
    int n, d;
    std::vector<MultiIndex> pts;  // graded-lex ascending; index 0 is the origin
    std::map<MultiIndex, int, GradedLexAsc> idx;
    std::vector<std::uint64_t> zero_axis;   // points with m_j == 0
    std::uint64_t top = 0;                  // points with |m| == d-1
    std::vector<std::uint64_t> nbr;         // in-simplex neighbor masks
    // per point, the 2D overhang exclusion zones (n == 2 only)
    std::vector<std::uint64_t> left_block, right_block;

    SimplexGrid(int n_, int d_) : n(n_), d(d_) {
        std::vector<int> cur(static_cast<std::size_t>(n), 0);
        build(cur, 0, d - 1);
        std::sort(pts.begin(), pts.end(), GradedLexAsc{});
        for (std::size_t i = 0; i < pts.size(); ++i) idx[pts[i]] = static_cast<int>(i);
        zero_axis.assign(static_cast<std::size_t>(n), 0);
        nbr.assign(pts.size(), 0);
        for (std::size_t i = 0; i < pts.size(); ++i) {
            const MultiIndex& m = pts[i];
            for (int j = 0; j < n; ++j)
                if (m[static_cast<std::size_t>(j)] == 0)
                    zero_axis[static_cast<std::size_t>(j)] |= 1ull << i;
            if (m.degree() == d - 1) top |= 1ull << i;
            for (const MultiIndex& q : lattice_neighbors(m)) {
                auto it = idx.find(q);
                if (it != idx.end()) nbr[i] |= 1ull << static_cast<unsigned>(it->second);
            }
        }
        if (n == 2) {
            left_block.assign(pts.size(), 0);
            right_block.assign(pts.size(), 0);
            for (std::size_t i = 0; i < pts.size(); ++i) {
                int a = pts[i][0], b = pts[i][1];
                for (std::size_t k = 0; k < pts.size(); ++k) {
                    int u = pts[k][0], v = pts[k][1];
                    if ((u == a && v == b - 1) || (u == a - 1 && v >= b))
                        left_block[i] |= 1ull << k;
                    if ((u == a - 1 && v == b) || (v == b - 1 && u >= a))
                        right_block[i] |= 1ull << k;
                }
            }
        }
    }

    void build(std::vector<int>& cur, int pos, int left) {
        if (pos == n) {
            pts.push_back(MultiIndex(cur));
            return;
        }
        for (int v = 0; v <= left; ++v) {
            cur[static_cast<std::size_t>(pos)] = v;
            build(cur, pos + 1, left - v);
        }
        cur[static_cast<std::size_t>(pos)] = 0;
    }

    bool normalized(std::uint64_t x) const {
        for (std::uint64_t z : zero_axis)
            if ((x & z) == 0) return false;
        return true;
    }

    bool connected(std::uint64_t x) const {
        if (x == 0) return false;
        std::uint64_t seen = x & (~x + 1);  // lowest set bit
        for (;;) {
            std::uint64_t grow = seen;
            std::uint64_t rest = x & ~seen;
            while (rest) {
                unsigned i = static_cast<unsigned>(std::countr_zero(rest));
                rest &= rest - 1;
                if (nbr[i] & seen) grow |= 1ull << i;
            }
            if (grow == seen) break;
            seen = grow;
        }
        return seen == x;
    }

    bool overhang_free_2d(std::uint64_t x) const {
        std::uint64_t rest = x;
        while (rest) {
            unsigned i = static_cast<unsigned>(std::countr_zero(rest));
            rest &= rest - 1;
            if (pts[i][0] == 0 && pts[i][1] == 0) continue;
            if ((x & left_block[i]) == 0 || (x & right_block[i]) == 0) return false;
        }
        return true;
    }
};

// 2D overhang on a small coordinate grid, used for the three projections of
// a 3D subset.
struct ProjectedGrid {
    int d;
    std::vector<std::uint64_t> cell_left, cell_right;

    explicit ProjectedGrid(int d_) : d(d_) {
        int cells = d * (d + 1) / 2;
        cell_left.assign(static_cast<std::size_t>(cells), 0);
        cell_right.assign(static_cast<std::size_t>(cells), 0);
        for (int a = 0; a < d; ++a)
            for (int b = 0; a + b < d; ++b) {
                int i = cell_index(a, b);
                for (int u = 0; u < d; ++u)
                    for (int v = 0; u + v < d; ++v) {
                        int k = cell_index(u, v);
                        if ((u == a && v == b - 1) || (u == a - 1 && v >= b))
                            cell_left[static_cast<std::size_t>(i)] |= 1ull << k;
                        if ((u == a - 1 && v == b) || (v == b - 1 && u >= a))
                            cell_right[static_cast<std::size_t>(i)] |= 1ull << k;
                    }
            }
    }

    int cell_index(int a, int b) const {
        // row-major over levels: offset of level l is l(l+1)/2, then b
        int l = a + b;
        return l * (l + 1) / 2 + b;
    }

    bool overhang_free(std::uint64_t cells) const {
        std::uint64_t rest = cells & ~1ull;  // skip the origin cell
        while (rest) {
            unsigned i = static_cast<unsigned>(std::countr_zero(rest));
            rest &= rest - 1;
            if ((cells & cell_left[i]) == 0 || (cells & cell_right[i]) == 0) return false;
        }
        return true;
    }
};

struct OverhangFilter3d {
    ProjectedGrid grid;
    // per simplex point, the projected cell bit under each of the three maps
    std::vector<std::uint64_t> cell_bit[3];

    OverhangFilter3d(const SimplexGrid& g) : grid(g.d) {
        for (int j = 0; j < 3; ++j) cell_bit[j].assign(g.pts.size(), 0);
        for (std::size_t i = 0; i < g.pts.size(); ++i) {
            const MultiIndex& m = g.pts[i];
            int proj[3][2] = {{m[0], m[1] + m[2]}, {m[0] + m[2], m[1]}, {m[0] + m[1], m[2]}};
            for (int j = 0; j < 3; ++j)
                cell_bit[j][i] = 1ull << grid.cell_index(proj[j][0], proj[j][1]);
        }
    }

    bool overhang_free(std::uint64_t x) const {
        for (int j = 0; j < 3; ++j) {
            std::uint64_t cells = 0;
            std::uint64_t rest = x;
            while (rest) {
                unsigned i = static_cast<unsigned>(std::countr_zero(rest));
                rest &= rest - 1;
                cells |= cell_bit[j][i];
            }
            if (!grid.overhang_free(cells)) return false;
        }
        return true;
    }
};

Support support_from_mask(const SimplexGrid& g, std::uint64_t x) {
    Support K;
    K.n = g.n;
    std::uint64_t rest = x;
    while (rest) {
        unsigned i = static_cast<unsigned>(std::countr_zero(rest));
        rest &= rest - 1;
        K.points.insert(g.pts[i]);
    }
    return K;
}

} // namespace

std::uint64_t enumeration_cost(const SearchSpec& spec) {
    SimplexGrid g(spec.n, spec.d);
    if (g.pts.size() >= 63) return ~0ull;
    return 1ull << g.pts.size();
}

void for_each_support(const SearchSpec& spec, const std::function<void(const Support&)>& fn) {
    if (spec.n != 2 && spec.n != 3)
        throw PreconditionError("support enumeration covers two and three variables");
    std::uint64_t cost = enumeration_cost(spec);
    if (cost > spec.support_cap)
        throw CapExceededError("support sweep would visit " + std::to_string(cost) +
                               " subsets, cap is " + std::to_string(spec.support_cap));
    SimplexGrid g(spec.n, spec.d);
    std::optional<OverhangFilter3d> over3;
    if (spec.no_overhang && spec.n == 3) over3.emplace(g);
    const std::uint64_t full = (g.pts.size() >= 64) ? ~0ull : (1ull << g.pts.size()) - 1;
    for (std::uint64_t x = 1; x <= full; ++x) {
        if (!g.normalized(x)) continue;
        if (spec.contains_origin && !(x & 1)) continue;
        if (spec.maximal && x != full) continue;
        if (spec.no_overhang) {
            if (spec.n == 2 && !g.overhang_free_2d(x)) continue;
            if (spec.n == 3 && !over3->overhang_free(x)) continue;
        }
        if (spec.connected && !g.connected(x)) continue;
        fn(support_from_mask(g, x));
    }
}

std::vector<Support> enumerate_supports(const SearchSpec& spec) {
    std::vector<Support> out;
    for_each_support(spec, [&](const Support& K) { out.push_back(K); });
    return out;
}

namespace {

struct NodeSiteMasks {
    int base = 0;                      // sites with a single participant
    std::vector<std::uint32_t> multi;  // participant masks of the other sites
};

NodeSiteMasks site_masks(const std::vector<MultiIndex>& pts) {
    std::map<MultiIndex, int, GradedLexAsc> idx;
    for (std::size_t i = 0; i < pts.size(); ++i) idx[pts[i]] = static_cast<int>(i);
    const std::size_t n = pts.empty() ? 0 : pts.front().size();
    std::set<MultiIndex, GradedLexAsc> cands;
    for (const MultiIndex& m : pts) {
        cands.insert(m);
        for (std::size_t j = 0; j < n; ++j) cands.insert(m.plus(j));
    }
    NodeSiteMasks out;
    for (const MultiIndex& top : cands) {
        std::uint32_t mask = 0;
        auto add = [&](const MultiIndex& q) {
            auto it = idx.find(q);
            if (it != idx.end()) mask |= 1u << static_cast<unsigned>(it->second);
        };
        add(top);
        for (std::size_t j = 0; j < n; ++j) add(top.plus(j, -1));
        if (mask == 0) continue;
        if (std::popcount(mask) == 1) ++out.base;
        else out.multi.push_back(mask);
    }
    return out;
}

} // namespace

MinNodesResult min_nodes_over_signs(const Support& K, int d, std::size_t cap) {
    if (K.points.empty()) throw PreconditionError("min_nodes_over_signs: empty support");
    if (K.points.size() > cap)
        throw CapExceededError("min_nodes_over_signs: support exceeds the cap of " +
                               std::to_string(cap) + " points");
    std::vector<MultiIndex> pts(K.points.begin(), K.points.end());
    for (const MultiIndex& m : pts)
        if (!m.non_negative() || m.degree() > d - 1)
            throw PreconditionError("min_nodes_over_signs: point outside the simplex");
    NodeSiteMasks sites = site_masks(pts);

    const std::size_t k = pts.size();
    int best = -1;
    std::uint32_t best_assign = 0;
    const std::uint64_t limit = 1ull << (k - 1);
    for (std::uint64_t half = 0; half < limit; ++half) {
        std::uint32_t x = static_cast<std::uint32_t>(half << 1);  // first point fixed positive
        int count = sites.base;
        for (std::uint32_t m : sites.multi) {
            std::uint32_t bits = x & m;
            if (bits == 0 || bits == m) ++count;
        }
        if (best < 0 || count < best) {
            best = count;
            best_assign = x;
        }
    }

    MinNodesResult out{best, NewtonDiagram(K.n, d)};
    for (std::size_t i = 0; i < k; ++i)
        out.argmin.set(pts[i], (best_assign >> i & 1u) ? Sign::N : Sign::P);
    return out;
}

Certificate exhaustive_bound_verify(SweepTheorem theorem, int d_max, bool allow_long) {
    Certificate cert;
    cert.theorem = theorem == SweepTheorem::T34 ? "T3.4" : "T5.2";
    if (theorem == SweepTheorem::T34 && d_max > 5)
        throw CapExceededError("T3.4 sweep is capped at d_max = 5");
    if (theorem == SweepTheorem::T52 && d_max > (allow_long ? 4 : 3))
        throw CapExceededError("T5.2 sweep is capped at d_max = 3 (4 in long mode)");
    if (d_max < 1) throw PreconditionError("d_max must be positive");

    cert.ok = true;
    for (int d = 1; d <= d_max; ++d) {
        SearchSpec spec;
        spec.n = theorem == SweepTheorem::T34 ? 2 : 3;
        spec.d = d;
        spec.connected = theorem == SweepTheorem::T34;
        spec.no_overhang = theorem == SweepTheorem::T52;
        SweepEntry entry;
        entry.d = d;
        entry.bound = theorem == SweepTheorem::T34 ? (d + 6) / 2 : 2 * d + 2;
        SimplexGrid g(spec.n, d);
        std::optional<OverhangFilter3d> over3;
        if (spec.no_overhang && spec.n == 3) over3.emplace(g);
        const std::uint64_t full = (1ull << g.pts.size()) - 1;
        for (std::uint64_t x = 1; x <= full; ++x) {
            if (!(x & g.top)) continue;  // size must be exactly d
            if (!g.normalized(x)) continue;
            if (spec.no_overhang) {
                if (spec.n == 2 && !g.overhang_free_2d(x)) continue;
                if (spec.n == 3 && !over3->overhang_free(x)) continue;
            }
            if (spec.connected && !g.connected(x)) continue;
            Support K = support_from_mask(g, x);
            MinNodesResult r = min_nodes_over_signs(K, d);
            ++entry.support_count;
            if (entry.support_count == 1 || r.min_nodes < entry.min_nodes) {
                entry.min_nodes = r.min_nodes;
                entry.witness = K;
            }
        }
        if (entry.support_count == 0 || entry.min_nodes < entry.bound) cert.ok = false;
        cert.entries.push_back(std::move(entry));
    }
    return cert;
}

namespace {

void refine_part(const Polynomial& part, std::span<const int> signs, std::size_t cap,
                 std::vector<Polynomial>& out, bool& complete) {
    const std::size_t N = part.term_count();
    if (N <= 1) {
        out.push_back(part);
        return;
    }
    // coarse split along diagram support components of the quotient
    Polynomial Qpart = *try_divide_by_linear(part, signs);
    {
        Support K;
        K.n = part.nvars();  // tails plus the leading coordinate; adjacency matches
        for (const auto& [gm, c] : Qpart.terms()) K.points.insert(gm);
        auto comps = connected_components(K);
        if (comps.size() > 1) {
            for (const auto& comp : comps) {
                Polynomial Qi(part.nvars());
                for (const MultiIndex& gm : comp) Qi.add_term(gm, Qpart.coeff(gm));
                Polynomial linear(part.nvars());
                for (std::size_t j = 0; j < signs.size(); ++j)
                    linear.add_term(MultiIndex::unit(static_cast<std::size_t>(part.nvars()), j),
                                    Rational(signs[j]));
                refine_part(linear * Qi, signs, cap, out, complete);
            }
            return;
        }
    }
    if (N > cap) {
        out.push_back(part);
        complete = false;
        return;
    }
    // exhaustive proper-subset search; every candidate keeps the lead term
    std::vector<std::pair<MultiIndex, Rational>> terms(part.terms().begin(), part.terms().end());
    const std::uint64_t full = (N >= 64) ? ~0ull : (1ull << N) - 1;
    const std::uint64_t limit = 1ull << (N - 1);
    for (std::uint64_t half = 1; half < limit; ++half) {
        std::uint64_t mask = (half << 1) | 1ull;
        if (mask == full) continue;
        Polynomial sub(part.nvars());
        for (std::size_t i = 0; i < N; ++i)
            if (mask >> i & 1ull) sub.add_term(terms[i].first, terms[i].second);
        if (!try_divide_by_linear(sub, signs)) continue;
        Polynomial rest = part - sub;
        refine_part(sub, signs, cap, out, complete);
        refine_part(rest, signs, cap, out, complete);
        return;
    }
    out.push_back(part);
}

} // namespace

Decomposition decomposability_oracle_wrt(const Polynomial& P, std::span<const int> signs,
                                         std::size_t cap) {
    if (P.is_zero()) throw PreconditionError("decomposability oracle: zero polynomial");
    if (!P.is_homogeneous())
        throw PreconditionError("decomposability oracle: homogeneous input required");
    if (!try_divide_by_linear(P, signs))
        throw PreconditionError("decomposability oracle: input is not a multiple of the form");
    Decomposition out;
    std::vector<Polynomial> parts;
    bool complete = true;
    refine_part(P, signs, cap, parts, complete);
    out.complete = complete;
    for (const Polynomial& part : parts) {
        std::vector<MultiIndex> group;
        for (const auto& [m, c] : part.terms()) group.push_back(m);
        std::sort(group.begin(), group.end(), GradedLexAsc{});
        out.parts.push_back(std::move(group));
    }
    std::sort(out.parts.begin(), out.parts.end(),
              [](const auto& a, const auto& b) { return GradedLexAsc{}(a.front(), b.front()); });
    if (out.parts.size() > 1) out.kind = Decomposition::Kind::Decomposable;
    else out.kind = complete ? Decomposition::Kind::Indecomposable : Decomposition::Kind::Indeterminate;
    return out;
}

Decomposition decomposability_oracle(const Polynomial& P, std::size_t cap) {
    std::vector<int> signs(static_cast<std::size_t>(P.nvars()), 1);
    return decomposability_oracle_wrt(P, signs, cap);
}

} // namespace sharpdeg
