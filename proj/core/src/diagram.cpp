#include "sharpdeg/diagram.hpp"

#include <algorithm>
#include <queue>

namespace sharpdeg {

NewtonDiagram::NewtonDiagram(int n, int d) : n_(n), d_(d) {
    if (n < 1 || d < 0) throw PreconditionError("NewtonDiagram: need n >= 1, d >= 0");
}

void NewtonDiagram::set(const MultiIndex& m, Sign s) {
    if (static_cast<int>(m.size()) != n_) throw PreconditionError("diagram point arity mismatch");
    if (!m.non_negative() || m.degree() > d_ - 1)
        throw PreconditionError("diagram point " + m.to_string() + " outside the simplex");
    signs_[m] = s;
}

int NewtonDiagram::sign_at(const MultiIndex& m) const {
    auto it = signs_.find(m);
    return it == signs_.end() ? 0 : static_cast<int>(it->second);
}

std::set<MultiIndex, GradedLexAsc> NewtonDiagram::support_points() const {
    std::set<MultiIndex, GradedLexAsc> out;
    for (const auto& [m, s] : signs_) out.insert(m);
    return out;
}

NewtonDiagram diagram_of(const Polynomial& Q, int d) {
    int n = Q.nvars() - 1;
    if (n < 1) throw PreconditionError("diagram_of: quotient must have at least two variables");
    int deg = -1;
    if (!Q.is_homogeneous(&deg) || (!Q.is_zero() && deg != d - 1))
        throw PreconditionError("diagram_of: quotient must be homogeneous of degree d-1");
    NewtonDiagram D(n, d);
    for (const auto& [g, c] : Q.terms()) {
        MultiIndex m(static_cast<std::size_t>(n));
        for (int i = 0; i < n; ++i) m[static_cast<std::size_t>(i)] = g[static_cast<std::size_t>(i + 1)];
        D.set(m, sgn(c) > 0 ? Sign::P : Sign::N);
    }
    return D;
}

Polynomial realize(const NewtonDiagram& D) {
    Polynomial Q(D.n() + 1);
    for (const auto& [m, s] : D.signs()) {
        MultiIndex g(static_cast<std::size_t>(D.n() + 1));
        g[0] = D.d() - 1 - m.degree();
        for (int i = 0; i < D.n(); ++i) g[static_cast<std::size_t>(i + 1)] = m[static_cast<std::size_t>(i)];
        Q.add_term(g, Rational(static_cast<int>(s)));
    }
    return Q;
}

namespace {

// Candidate positions for nodes: every node must involve a support point,
// and the point m belongs to E(alpha) only for alpha' in {m, m + e_k}.
std::set<MultiIndex, GradedLexAsc> node_candidates(const NewtonDiagram& D) {
    std::set<MultiIndex, GradedLexAsc> cands;
    for (const auto& [m, s] : D.signs()) {
        cands.insert(m);
        for (int k = 0; k < D.n(); ++k) cands.insert(m.plus(static_cast<std::size_t>(k)));
    }
    return cands;
}

struct SiteInfo {
    std::vector<MultiIndex> points;  // top point first, then the lower points
    std::vector<int> values;
    bool is_node = false;
    int zero_count = 0;
    bool zeros_all_low = false;  // every zero sits at a lower point
};

SiteInfo probe_site(const NewtonDiagram& D, const MultiIndex& top) {
    SiteInfo info;
    info.points.push_back(top);
    for (int k = 0; k < D.n(); ++k) info.points.push_back(top.plus(static_cast<std::size_t>(k), -1));
    bool has_p = false, has_n = false;
    bool top_zero = false;
    for (std::size_t i = 0; i < info.points.size(); ++i) {
        int v = D.sign_at(info.points[i]);
        info.values.push_back(v);
        if (v > 0) has_p = true;
        else if (v < 0) has_n = true;
        else {
            ++info.zero_count;
            if (i == 0) top_zero = true;
        }
    }
    info.is_node = (has_p != has_n);
    info.zeros_all_low = !top_zero;
    return info;
}

NodeKind classify_2d(const SiteInfo& info) {
    switch (info.zero_count) {
        case 0: return NodeKind::Interior;
        case 1: return NodeKind::Edge;
        case 2: return info.zeros_all_low ? NodeKind::Bottom : NodeKind::Vertex;
        default: return NodeKind::Vertex;
    }
}

} // namespace

std::vector<NodeSite> nodes(const NewtonDiagram& D) {
    std::vector<NodeSite> out;
    for (const MultiIndex& top : node_candidates(D)) {
        SiteInfo info = probe_site(D, top);
        if (!info.is_node) continue;
        NodeSite site;
        MultiIndex alpha(static_cast<std::size_t>(D.n() + 1));
        alpha[0] = D.d() - top.degree();
        for (int i = 0; i < D.n(); ++i) alpha[static_cast<std::size_t>(i + 1)] = top[static_cast<std::size_t>(i)];
        site.alpha = alpha;
        site.points = info.points;
        site.kind = (D.n() == 2) ? classify_2d(info) : NodeKind::Plain;
        out.push_back(std::move(site));
    }
    return out;
}

int node_count(const NewtonDiagram& D) {
    int count = 0;
    for (const MultiIndex& top : node_candidates(D))
        if (probe_site(D, top).is_node) ++count;
    return count;
}

Rational weighted_surface_count_2d(const NewtonDiagram& D) {
    if (D.n() != 2) throw PreconditionError("weighted_surface_count_2d: dimension must be 2");
    int twice = 0;  // accumulate doubled weights to stay integral
    for (const MultiIndex& top : node_candidates(D)) {
        SiteInfo info = probe_site(D, top);
        if (!info.is_node) continue;
        switch (classify_2d(info)) {
            case NodeKind::Interior: twice += 2; break;
            case NodeKind::Edge:
            case NodeKind::Vertex: twice += 1; break;
            default: break;  // bottom nodes have weight zero
        }
    }
    return rat(twice, 2);
}

std::vector<MultiIndex> lattice_neighbors(const MultiIndex& m) {
    std::vector<MultiIndex> out;
    std::size_t n = m.size();
    for (std::size_t j = 0; j < n; ++j) {
        out.push_back(m.plus(j, 1));
        out.push_back(m.plus(j, -1));
    }
    for (std::size_t i = 0; i < n; ++i)
        for (std::size_t j = 0; j < n; ++j)
            if (i != j) out.push_back(m.plus(i, 1).plus(j, -1));
    return out;
}

std::vector<std::vector<MultiIndex>> connected_components(const Support& K) {
    std::vector<std::vector<MultiIndex>> comps;
    std::set<MultiIndex, GradedLexAsc> todo = K.points;
    while (!todo.empty()) {
        std::vector<MultiIndex> comp;
        std::queue<MultiIndex> q;
        q.push(*todo.begin());
        todo.erase(todo.begin());
        while (!q.empty()) {
            MultiIndex m = q.front();
            q.pop();
            comp.push_back(m);
            for (const MultiIndex& nb : lattice_neighbors(m)) {
                auto it = todo.find(nb);
                if (it != todo.end()) {
                    q.push(nb);
                    todo.erase(it);
                }
            }
        }
        std::sort(comp.begin(), comp.end(), GradedLexAsc{});
        comps.push_back(std::move(comp));
    }
    return comps;
}

SupportGeometry support_geometry(const Support& K) {
    if (K.points.empty()) throw PreconditionError("support_geometry: empty support");
    SupportGeometry g;
    g.hull_base = *K.points.begin();
    g.hull_level = 0;
    for (const MultiIndex& m : K.points) {
        g.hull_level = std::max(g.hull_level, m.degree());
        for (std::size_t i = 0; i < m.size(); ++i)
            g.hull_base[i] = std::min(g.hull_base[i], m[i]);
    }
    g.size = g.hull_level - g.hull_base.degree() + 1;
    g.connected = connected_components(K).size() == 1;
    return g;
}

namespace {

struct Column {
    // occupied second coordinates per first coordinate
    std::map<int, std::set<int>> by_first;

    void insert(int a, int b) { by_first[a].insert(b); }
    bool contains(int a, int b) const {
        auto it = by_first.find(a);
        return it != by_first.end() && it->second.count(b) > 0;
    }
    bool any_at_or_above(int a, int b) const {
        auto it = by_first.find(a);
        if (it == by_first.end()) return false;
        return it->second.lower_bound(b) != it->second.end();
    }
};

// 2D overhang test on an arbitrary finite point set.
std::optional<std::pair<int, int>> overhang_2d(const std::vector<std::pair<int, int>>& pts) {
    Column cols, rows;
    for (auto [a, b] : pts) {
        cols.insert(a, b);
        rows.insert(b, a);
    }
    for (auto [a, b] : pts) {
        if (a == 0 && b == 0) continue;
        bool left = !cols.contains(a, b - 1) && !cols.any_at_or_above(a - 1, b);
        bool right = !cols.contains(a - 1, b) && !rows.any_at_or_above(b - 1, a);
        if (left || right) return std::make_pair(a, b);
    }
    return std::nullopt;
}

std::pair<int, int> project_3d(const MultiIndex& m, int j) {
    switch (j) {
        case 1: return {m[0], m[1] + m[2]};
        case 2: return {m[0] + m[2], m[1]};
        default: return {m[0] + m[1], m[2]};
    }
}

} // namespace

OverhangWitness has_overhang(const Support& K) {
    OverhangWitness w;
    if (K.n == 2) {
        std::vector<std::pair<int, int>> pts;
        for (const MultiIndex& m : K.points) pts.emplace_back(m[0], m[1]);
        if (auto o = overhang_2d(pts)) {
            w.found = true;
            w.where = MultiIndex{o->first, o->second};
            w.projection = 0;
        }
        return w;
    }
    if (K.n != 3) throw PreconditionError("has_overhang: dimension must be 2 or 3");
    for (int j = 1; j <= 3; ++j) {
        std::vector<std::pair<int, int>> pts;
        for (const MultiIndex& m : K.points) pts.push_back(project_3d(m, j));
        std::sort(pts.begin(), pts.end());
        pts.erase(std::unique(pts.begin(), pts.end()), pts.end());
        if (auto o = overhang_2d(pts)) {
            for (const MultiIndex& m : K.points) {
                if (project_3d(m, j) == *o) {
                    w.found = true;
                    w.where = m;
                    w.projection = j;
                    return w;
                }
            }
        }
    }
    return w;
}

namespace {

std::vector<std::vector<MultiIndex>> split_components(std::vector<MultiIndex> pts) {
    Support s;
    s.n = pts.empty() ? 0 : static_cast<int>(pts.front().size());
    s.points.insert(pts.begin(), pts.end());
    return connected_components(s);
}

} // namespace

std::vector<Face> faces_3d(const Support& K) {
    if (K.n != 3) throw PreconditionError("faces_3d: dimension must be 3");
    auto in_K = [&](const MultiIndex& m) { return K.points.count(m) > 0; };

    // a face point touches a zero point in some direction; which plane it
    // contributes to is decided by grouping, and nodes cancelled by K-points
    // behind a plane are discarded later by the counting rule
    std::vector<MultiIndex> face_points;
    for (const MultiIndex& m : K.points) {
        bool open = false;
        for (const MultiIndex& q : lattice_neighbors(m))
            if (!q.non_negative() || !in_K(q)) open = true;
        if (open) face_points.push_back(m);
    }

    std::vector<Face> faces;
    for (int axis = 0; axis < 3; ++axis) {
        std::map<int, std::vector<MultiIndex>> by_plane;
        for (const MultiIndex& m : face_points)
            by_plane[m[static_cast<std::size_t>(axis)]].push_back(m);
        for (auto& [c, pts] : by_plane) {
            for (auto& comp : split_components(std::move(pts))) {
                Face f;
                f.kind = Face::Kind::Vertical;
                f.axis = axis;
                f.level = c;
                f.points = std::move(comp);
                faces.push_back(std::move(f));
            }
        }
    }
    {
        std::map<int, std::vector<MultiIndex>> by_plane;
        for (const MultiIndex& m : face_points) by_plane[m.degree()].push_back(m);
        for (auto& [c, pts] : by_plane) {
            for (auto& comp : split_components(std::move(pts))) {
                Face f;
                f.kind = Face::Kind::Horizontal;
                f.axis = -1;
                f.level = c;
                f.points = std::move(comp);
                faces.push_back(std::move(f));
            }
        }
    }
    return faces;
}

namespace {

struct FaceFrame {
    // maps between face-plane 2D coordinates and ambient 3D points
    bool horizontal;
    int axis;   // for vertical faces
    int level;  // fixed coordinate or |m|
    int u_axis, v_axis;

    std::pair<int, int> to_2d(const MultiIndex& m) const {
        return {m[static_cast<std::size_t>(u_axis)], m[static_cast<std::size_t>(v_axis)]};
    }
    MultiIndex to_3d(int u, int v) const {
        MultiIndex m(3);
        if (horizontal) {
            m[static_cast<std::size_t>(u_axis)] = u;
            m[static_cast<std::size_t>(v_axis)] = v;
            m[0] = level - u - v;
        } else {
            m[static_cast<std::size_t>(axis)] = level;
            m[static_cast<std::size_t>(u_axis)] = u;
            m[static_cast<std::size_t>(v_axis)] = v;
        }
        return m;
    }
};

FaceFrame frame_of(const Face& F) {
    FaceFrame fr;
    fr.horizontal = F.kind == Face::Kind::Horizontal;
    fr.level = F.level;
    if (fr.horizontal) {
        fr.axis = -1;
        fr.u_axis = 1;
        fr.v_axis = 2;
    } else {
        fr.axis = F.axis;
        fr.u_axis = F.axis == 0 ? 1 : 0;
        fr.v_axis = F.axis == 2 ? 1 : 2;
    }
    return fr;
}

} // namespace

Rational face_sc_min(const Face& F, const Support& K, std::size_t cap) {
    if (K.n != 3) throw PreconditionError("face_sc_min: dimension must be 3");
    if (F.points.size() > cap)
        throw CapExceededError("face has " + std::to_string(F.points.size()) +
                               " points, exhaustive cap is " + std::to_string(cap));
    FaceFrame fr = frame_of(F);
    auto in_K = [&](const MultiIndex& m) { return m.non_negative() && K.points.count(m) > 0; };

    std::vector<std::pair<int, int>> fpts;
    fpts.reserve(F.points.size());
    for (const MultiIndex& m : F.points) fpts.push_back(fr.to_2d(m));
    std::sort(fpts.begin(), fpts.end());

    std::map<std::pair<int, int>, std::size_t> index;
    for (std::size_t i = 0; i < fpts.size(); ++i) index[fpts[i]] = i;

    // candidate 2D node positions around the face
    std::set<std::pair<int, int>> sites;
    for (auto [u, v] : fpts) {
        sites.insert({u, v});
        sites.insert({u + 1, v});
        sites.insert({u, v + 1});
    }

    struct SitePlan {
        unsigned mask = 0;        // face points among the three E-positions
        int members[3] = {-1, -1, -1};
        bool countable = true;    // no K-point outside the face involved
        bool top_zero_possible = true;
        int weight_interior, weight_edge, weight_vertex, weight_bottom;
    };

    std::vector<SitePlan> plans;
    for (auto [u, v] : sites) {
        SitePlan plan;
        const std::pair<int, int> epts[3] = {{u, v}, {u - 1, v}, {u, v - 1}};
        bool countable = true;
        for (int i = 0; i < 3; ++i) {
            auto it = index.find(epts[i]);
            if (it != index.end()) {
                plan.members[i] = static_cast<int>(it->second);
                plan.mask |= 1u << it->second;
            } else if (epts[i].first >= 0 && epts[i].second >= 0) {
                // zero position inside the quadrant: its ambient point must
                // not be a K-point, otherwise the node does not count
                MultiIndex amb = fr.to_3d(epts[i].first, epts[i].second);
                if (amb.non_negative() && in_K(amb)) countable = false;
            }
        }
        if (plan.mask == 0) continue;
        // companion point of the lifted node
        MultiIndex companion = fr.to_3d(u, v);
        if (fr.horizontal) companion = companion.plus(0, 1);
        else companion[static_cast<std::size_t>(fr.axis)] -= 1;
        if (in_K(companion)) countable = false;
        plan.countable = countable;
        plans.push_back(plan);
    }

    const bool horizontal = fr.horizontal;
    const std::size_t npts = fpts.size();
    long best_twice = -1;
    for (unsigned long sigma = 0; sigma < (1ul << npts); ++sigma) {
        long twice = 0;
        for (const SitePlan& plan : plans) {
            if (!plan.countable) continue;
            // values at the three E positions: member -> sign bit, else zero
            int zeros = 0;
            bool has_p = false, has_n = false, top_zero = false;
            for (int i = 0; i < 3; ++i) {
                if (plan.members[i] < 0) {
                    ++zeros;
                    if (i == 0) top_zero = true;
                } else if (sigma >> plan.members[i] & 1u) {
                    has_n = true;
                } else {
                    has_p = true;
                }
            }
            if (has_p == has_n) continue;  // mixed or empty
            if (zeros == 0) twice += 2;                                  // interior
            else if (zeros == 1) twice += 1;                             // edge
            else if (!horizontal && top_zero) twice += 1;                // vertex, not bottom
            // bottom nodes and horizontal-face vertex nodes count zero
        }
        if (best_twice < 0 || twice < best_twice) best_twice = twice;
        if (best_twice == 0) break;
    }
    return rat(best_twice, 2);
}

Rational support_sc_3d(const Support& K, std::size_t cap) {
    Rational total(0);
    for (const Face& f : faces_3d(K)) total += face_sc_min(f, K, cap);
    return total;
}

ClassReport class_membership(const Polynomial& p) {
    if (p.is_zero()) throw PreconditionError("class_membership: zero polynomial");
    ClassReport r;
    r.degree = std::max(p.degree(), 0);
    r.monomial_count = static_cast<int>(p.term_count());
    bool nonneg = true;
    for (const auto& [m, c] : p.terms())
        if (sgn(c) < 0) nonneg = false;
    bool constant_one = constant_one_on_hyperplane(p);
    r.in_I = constant_one;
    r.in_H = constant_one && nonneg;
    if (p.degree() >= 1) {
        Polynomial P = homogenize_and_flip(p);
        auto pd = p_degree_and_count(P);
        r.p_degree = pd.p_degree;
        if (constant_one) {
            Polynomial Q = divide_by_s(P);
            NewtonDiagram D = diagram_of(Q, p.degree());
            if (!Q.is_zero()) r.support_connected = support_geometry(Support::of(D)).connected;
        }
    }
    return r;
}

} // namespace sharpdeg
