#include <doctest.h>

#include <sharpdeg/constructions.hpp>
#include <sharpdeg/diagram.hpp>

#include <random>

#include "oracles.hpp"

using namespace sharpdeg;

namespace {

NewtonDiagram fig1_diagram() {
    NewtonDiagram D(2, 3);
    D.set(MultiIndex{0, 0}, Sign::P);
    D.set(MultiIndex{2, 0}, Sign::P);
    D.set(MultiIndex{0, 2}, Sign::P);
    D.set(MultiIndex{1, 0}, Sign::N);
    D.set(MultiIndex{0, 1}, Sign::N);
    D.set(MultiIndex{1, 1}, Sign::N);
    return D;
}

NewtonDiagram random_diagram(std::mt19937_64& rng, int n, int d, double density = 0.5) {
    NewtonDiagram D(n, d);
    std::vector<int> stack(static_cast<std::size_t>(n), 0);
    std::function<void(int, int)> rec = [&](int pos, int left) {
        if (pos == n) {
            if (std::uniform_real_distribution<double>(0, 1)(rng) < density)
                D.set(MultiIndex(stack), (rng() & 1) ? Sign::P : Sign::N);
            return;
        }
        for (int v = 0; v <= left; ++v) {
            stack[static_cast<std::size_t>(pos)] = v;
            rec(pos + 1, left - v);
        }
    };
    rec(0, d - 1);
    return D;
}

NewtonDiagram diagram_of_member(const Polynomial& p) {
    Polynomial P = homogenize_and_flip(p);
    return diagram_of(divide_by_s(P), p.degree());
}

} // namespace

TEST_CASE("diagram read-off") {
    SUBCASE("figure-one quotient") {
        Polynomial Q(3);
        Q.add_term(MultiIndex{2, 0, 0}, Rational(1));
        Q.add_term(MultiIndex{0, 2, 0}, Rational(1));
        Q.add_term(MultiIndex{0, 0, 2}, Rational(1));
        Q.add_term(MultiIndex{1, 1, 0}, Rational(-1));
        Q.add_term(MultiIndex{0, 1, 1}, Rational(-1));
        Q.add_term(MultiIndex{1, 0, 1}, Rational(-1));
        CHECK(diagram_of(Q, 3) == fig1_diagram());
    }
    SUBCASE("constant quotient") {
        NewtonDiagram D = diagram_of(Polynomial::constant(3, Rational(1)), 1);
        CHECK(D.signs().size() == 1);
        CHECK(D.sign_at(MultiIndex{0, 0}) == 1);
    }
    SUBCASE("linear sign read-off") {
        Polynomial Q = Polynomial::variable(3, 0) - Polynomial::variable(3, 1);
        NewtonDiagram D = diagram_of(Q, 2);
        CHECK(D.sign_at(MultiIndex{0, 0}) == 1);
        CHECK(D.sign_at(MultiIndex{1, 0}) == -1);
    }
    SUBCASE("wrong degree is rejected") {
        CHECK_THROWS_AS(diagram_of(Polynomial::hyperplane_sum(3), 3), PreconditionError);
    }
}

TEST_CASE("realize is a section") {
    SUBCASE("single point") {
        NewtonDiagram D(2, 1);
        D.set(MultiIndex{0, 0}, Sign::P);
        CHECK(realize(D) == Polynomial::constant(3, Rational(1)));
    }
    SUBCASE("two points") {
        NewtonDiagram D(2, 2);
        D.set(MultiIndex{1, 0}, Sign::P);
        D.set(MultiIndex{0, 1}, Sign::N);
        Polynomial Q = Polynomial::variable(3, 1) - Polynomial::variable(3, 2);
        CHECK(realize(D) == Q);
    }
    SUBCASE("round trip on random diagrams") {
        std::mt19937_64 rng(2024);
        for (int t = 0; t < 60; ++t) {
            NewtonDiagram D = random_diagram(rng, 2 + static_cast<int>(rng() % 2), 1 + static_cast<int>(rng() % 4));
            CHECK(diagram_of(realize(D), D.d()) == D);
        }
    }
}

TEST_CASE("node enumeration and classification") {
    SUBCASE("figure-one nodes") {
        NewtonDiagram D = fig1_diagram();
        auto ns = nodes(D);
        CHECK(ns.size() == 4);
        CHECK(node_count(D) == 4);
        int bottoms = 0, vertices = 0, interiors = 0;
        for (const NodeSite& s : ns) {
            if (s.kind == NodeKind::Bottom) {
                ++bottoms;
                CHECK(s.alpha == MultiIndex{3, 0, 0});
            }
            if (s.kind == NodeKind::Vertex) ++vertices;
            if (s.kind == NodeKind::Interior) {
                ++interiors;
                CHECK(s.alpha == MultiIndex{1, 1, 1});
            }
        }
        CHECK(bottoms == 1);
        CHECK(vertices == 2);
        CHECK(interiors == 1);
        CHECK(testing::oracle_node_count(D) == 4);
    }
    SUBCASE("single point has three nodes") {
        NewtonDiagram D(2, 1);
        D.set(MultiIndex{0, 0}, Sign::P);
        CHECK(node_count(D) == 3);
        CHECK(testing::oracle_node_count(D) == 3);
    }
    SUBCASE("opposite pair has four nodes") {
        NewtonDiagram D(2, 2);
        D.set(MultiIndex{0, 0}, Sign::P);
        D.set(MultiIndex{1, 0}, Sign::N);
        CHECK(node_count(D) == 4);
        CHECK(testing::oracle_node_count(D) == 4);
    }
    SUBCASE("enumeration matches the full-sweep oracle") {
        std::mt19937_64 rng(555);
        for (int t = 0; t < 80; ++t) {
            int n = 2 + static_cast<int>(rng() % 2);
            NewtonDiagram D = random_diagram(rng, n, 1 + static_cast<int>(rng() % 4));
            CHECK(node_count(D) == testing::oracle_node_count(D));
        }
    }
    SUBCASE("every node forces a monomial of the product") {
        std::mt19937_64 rng(808);
        for (int t = 0; t < 200; ++t) {
            NewtonDiagram D = random_diagram(rng, 2, 1 + static_cast<int>(rng() % 4));
            Polynomial P = Polynomial::hyperplane_sum(3) * realize(D);
            CHECK(node_count(D) <= static_cast<int>(P.term_count()));
        }
    }
}

TEST_CASE("weighted surface count") {
    SUBCASE("figure one") { CHECK(weighted_surface_count_2d(fig1_diagram()) == Rational(2)); }
    SUBCASE("single point") {
        NewtonDiagram D(2, 1);
        D.set(MultiIndex{0, 0}, Sign::P);
        CHECK(weighted_surface_count_2d(D) == Rational(1));
    }
    SUBCASE("empty diagram") { CHECK(weighted_surface_count_2d(NewtonDiagram(2, 3)) == Rational(0)); }
    SUBCASE("matches the oracle and the bottom-node inequality") {
        std::mt19937_64 rng(61);
        for (int t = 0; t < 100; ++t) {
            NewtonDiagram D = random_diagram(rng, 2, 1 + static_cast<int>(rng() % 5));
            Rational sc = weighted_surface_count_2d(D);
            CHECK(sc == testing::oracle_sc_2d(D));
            int bottoms = 0;
            for (const NodeSite& s : nodes(D))
                if (s.kind == NodeKind::Bottom) ++bottoms;
            CHECK(sc <= Rational(node_count(D) - bottoms));
        }
    }
}

TEST_CASE("support geometry") {
    SUBCASE("adjacent pair") {
        Support K{2, {MultiIndex{0, 0}, MultiIndex{1, 0}}};
        auto g = support_geometry(K);
        CHECK(g.connected);
        CHECK(g.size == 2);
    }
    SUBCASE("diagonal gap is disconnected") {
        Support K{2, {MultiIndex{0, 0}, MultiIndex{1, 1}}};
        CHECK_FALSE(support_geometry(K).connected);
    }
    SUBCASE("full triangle") {
        Support K = Support::of(fig1_diagram());
        auto g = support_geometry(K);
        CHECK(g.connected);
        CHECK(g.size == 3);
    }
    SUBCASE("distance closed form against breadth-first search") {
        std::mt19937_64 rng(99);
        for (int t = 0; t < 30; ++t) {
            MultiIndex a{int(rng() % 4), int(rng() % 4)};
            MultiIndex b{int(rng() % 4), int(rng() % 4)};
            // breadth-first in a bounded window
            std::map<MultiIndex, int, GradedLexAsc> dist;
            std::vector<MultiIndex> frontier{a};
            dist[a] = 0;
            int found = -1;
            for (int step = 0; step < 10 && found < 0; ++step) {
                std::vector<MultiIndex> next;
                for (const MultiIndex& m : frontier) {
                    if (m == b) {
                        found = dist[m];
                        break;
                    }
                    for (const MultiIndex& q : lattice_neighbors(m)) {
                        if (q[0] < -8 || q[1] < -8 || q[0] > 8 || q[1] > 8) continue;
                        if (dist.count(q)) continue;
                        dist[q] = dist[m] + 1;
                        next.push_back(q);
                    }
                }
                frontier = std::move(next);
            }
            if (a == b) found = 0;
            if (found >= 0) CHECK(lattice_distance(a, b) == found);
        }
    }
    SUBCASE("size equals the p-degree of the product") {
        std::mt19937_64 rng(1212);
        for (int t = 0; t < 60; ++t) {
            NewtonDiagram D = random_diagram(rng, 2, 1 + static_cast<int>(rng() % 4));
            if (D.empty()) continue;
            Polynomial P = Polynomial::hyperplane_sum(3) * realize(D);
            CHECK(support_geometry(Support::of(D)).size == p_degree_and_count(P).p_degree);
        }
    }
}

TEST_CASE("adjacency matches the raw monomial relation") {
    // raw: m ~ m' when X_j X^gamma(m) = X_k X^gamma(m') for some j, k
    const int d = 5;
    auto gamma = [&](const MultiIndex& m) {
        return MultiIndex{d - 1 - m.degree(), m[0], m[1]};
    };
    for (int a = 0; a <= 3; ++a)
        for (int b = 0; a + b <= 3; ++b)
            for (int u = 0; u <= 3; ++u)
                for (int v = 0; u + v <= 3; ++v) {
                    MultiIndex m{a, b}, q{u, v};
                    if (m == q) continue;
                    bool raw = false;
                    for (std::size_t j = 0; j < 3; ++j)
                        for (std::size_t k = 0; k < 3; ++k)
                            if (gamma(m).plus(j) == gamma(q).plus(k)) raw = true;
                    auto nbrs = lattice_neighbors(m);
                    bool derived = std::find(nbrs.begin(), nbrs.end(), q) != nbrs.end();
                    CHECK(raw == derived);
                }
}

TEST_CASE("overhang detection") {
    SUBCASE("staircase has none") {
        Support K{2, {MultiIndex{0, 0}, MultiIndex{1, 0}, MultiIndex{0, 1}}};
        CHECK_FALSE(has_overhang(K).found);
    }
    SUBCASE("diagonal point is an overhang") {
        Support K{2, {MultiIndex{0, 0}, MultiIndex{1, 1}}};
        auto w = has_overhang(K);
        CHECK(w.found);
        CHECK(w.where == MultiIndex{1, 1});
    }
    SUBCASE("origin alone is fine") {
        Support K{2, {MultiIndex{0, 0}}};
        CHECK_FALSE(has_overhang(K).found);
    }
    SUBCASE("class members have no overhang") {
        for (const Polynomial& p :
             {dkr_sharp_2d(5), faran_cubics().first, faran_cubics().second, whitney(3, 4)}) {
            NewtonDiagram D = diagram_of_member(p);
            CHECK_FALSE(has_overhang(Support::of(D)).found);
        }
    }
    SUBCASE("members contain the origin with connected support of size d") {
        for (const Polynomial& p : {whitney(2, 3), whitney(3, 5), faran_cubics().second,
                                    dkr_sharp_2d(7), sharp_extend(faran_cubics().second,
                                                                  MultiIndex{0, 0, 3},
                                                                  Polynomial::hyperplane_sum(3))}) {
            NewtonDiagram D = diagram_of_member(p);
            auto g = support_geometry(Support::of(D));
            CHECK(g.connected);
            CHECK(g.size == p.degree());
            CHECK(D.sign_at(MultiIndex(std::vector<int>(static_cast<std::size_t>(D.n()), 0))) != 0);
        }
    }
}

TEST_CASE("three-dimensional faces") {
    SUBCASE("full simplex") {
        Support K{3, {}};
        for (int a = 0; a < 3; ++a)
            for (int b = 0; a + b < 3; ++b)
                for (int c = 0; a + b + c < 3; ++c) K.points.insert(MultiIndex{a, b, c});
        auto fs = faces_3d(K);
        // the three boundary planes carry (d+1)/2 each, the top level
        // (d-1)/2; interior planes exist but their nodes are all cancelled
        // by support points behind them
        int big_vertical = 0, top_horizontal = 0;
        for (const Face& f : fs) {
            Rational m = face_sc_min(f, K);
            if (f.kind == Face::Kind::Vertical && f.level == 0) {
                ++big_vertical;
                CHECK(f.points.size() == 6);
                CHECK(m == Rational(2));  // (d+1)/2
            } else if (f.kind == Face::Kind::Horizontal && f.level == 2) {
                ++top_horizontal;
                CHECK(m == Rational(1));  // (d-1)/2
            } else {
                CHECK(m == Rational(0));
            }
        }
        CHECK(big_vertical == 3);
        CHECK(top_horizontal == 1);
        CHECK(support_sc_3d(K) == Rational(7));  // 2d+1 at d = 3
    }
    SUBCASE("single point lies on four faces") {
        Support K{3, {MultiIndex{0, 0, 0}}};
        auto fs = faces_3d(K);
        CHECK(fs.size() == 4);
        for (const Face& f : fs) CHECK(f.points.size() == 1);
    }
    SUBCASE("path support has width-one faces") {
        NewtonDiagram D = diagram_of_member(whitney(3, 3));
        Support K = Support::of(D);
        auto fs = faces_3d(K);
        CHECK(fs.size() >= 4);
        for (const Face& f : fs) CHECK(f.points.size() <= 3);
        // every support point is a face point of some face
        std::set<MultiIndex, GradedLexAsc> covered;
        for (const Face& f : fs)
            for (const MultiIndex& m : f.points) covered.insert(m);
        CHECK(covered == K.points);
    }
    SUBCASE("full simplex support count for other sizes") {
        for (int d = 2; d <= 4; ++d) {
            Support K{3, {}};
            for (int a = 0; a < d; ++a)
                for (int b = 0; a + b < d; ++b)
                    for (int c = 0; a + b + c < d; ++c) K.points.insert(MultiIndex{a, b, c});
            CHECK(support_sc_3d(K) == Rational(2 * d + 1));
        }
    }
    SUBCASE("face cap is enforced") {
        Support K{3, {}};
        for (int a = 0; a < 7; ++a)
            for (int b = 0; a + b < 7; ++b)
                for (int c = 0; a + b + c < 7; ++c) K.points.insert(MultiIndex{a, b, c});
        auto fs = faces_3d(K);
        CHECK_THROWS_AS(face_sc_min(fs.front(), K), CapExceededError);
    }
}
