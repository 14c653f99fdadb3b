#ifndef SHARPDEG_TESTS_ORACLES_HPP
#define SHARPDEG_TESTS_ORACLES_HPP

// Independent recomputations used to pin expected values.  These stay away
// from the library's candidate-site enumeration on purpose: nodes are read
// straight off the quotient's coefficients over a full exponent sweep.

#include <sharpdeg/diagram.hpp>
#include <sharpdeg/polynomial.hpp>

#include <functional>
#include <vector>

namespace sharpdeg::testing {

// Quotient built directly from the sign map via gamma, unit magnitudes.
inline Polynomial quotient_of(const NewtonDiagram& D) {
    Polynomial Q(D.n() + 1);
    for (const auto& [m, s] : D.signs()) {
        MultiIndex g(static_cast<std::size_t>(D.n() + 1));
        g[0] = D.d() - 1 - m.degree();
        for (int i = 0; i < D.n(); ++i) g[static_cast<std::size_t>(i + 1)] = m[static_cast<std::size_t>(i)];
        Q.add_term(g, Rational(static_cast<int>(s)));
    }
    return Q;
}

struct OracleNode {
    MultiIndex alpha;
    int zeros = 0;
    bool zeros_all_low = false;
};

// Sweep every alpha in N_0^(n+1) with |alpha| = d and test the sign pattern
// of the quotient coefficients on E(alpha).
inline std::vector<OracleNode> oracle_nodes(const NewtonDiagram& D) {
    const int n = D.n(), d = D.d();
    Polynomial Q = quotient_of(D);
    std::vector<OracleNode> out;
    std::vector<int> alpha(static_cast<std::size_t>(n + 1), 0);
    std::function<void(int, int)> rec = [&](int pos, int left) {
        if (pos == n) {
            alpha[static_cast<std::size_t>(n)] = left;
            bool has_p = false, has_n = false;
            int zeros = 0;
            bool top_zero = false;
            for (int k = 0; k <= n; ++k) {
                // coefficient of X^(alpha - e_k) in Q, zero when any entry
                // goes negative
                std::vector<int> g(alpha.begin(), alpha.end());
                g[static_cast<std::size_t>(k)] -= 1;
                bool neg = false;
                for (int v : g)
                    if (v < 0) neg = true;
                int sign = 0;
                if (!neg) sign = sgn(Q.coeff(MultiIndex(g)));
                if (sign > 0) has_p = true;
                else if (sign < 0) has_n = true;
                else {
                    ++zeros;
                    if (k == 0) top_zero = true;
                }
            }
            if (has_p != has_n) {
                OracleNode node;
                node.alpha = MultiIndex(alpha);
                node.zeros = zeros;
                node.zeros_all_low = !top_zero;
                out.push_back(std::move(node));
            }
            return;
        }
        for (int v = 0; v <= left; ++v) {
            alpha[static_cast<std::size_t>(pos)] = v;
            rec(pos + 1, left - v);
        }
    };
    rec(0, d);
    return out;
}

inline int oracle_node_count(const NewtonDiagram& D) {
    return static_cast<int>(oracle_nodes(D).size());
}

inline Rational oracle_sc_2d(const NewtonDiagram& D) {
    int twice = 0;
    for (const OracleNode& node : oracle_nodes(D)) {
        if (node.zeros == 0) twice += 2;
        else if (node.zeros == 1) twice += 1;
        else if (node.zeros == 2 && !node.zeros_all_low) twice += 1;
    }
    return rat(twice, 2);
}

// Polynomial identity test on the hyperplane: P restricted to
// X_0 = -(X_1 + ... + X_n) vanishes on a (d+1)^n grid iff it vanishes
// identically there.
inline bool oracle_vanishes_on_hyperplane(const Polynomial& P) {
    const int n = P.nvars() - 1;
    const int d = std::max(P.degree(), 0);
    std::vector<Rational> point(static_cast<std::size_t>(n + 1), Rational(0));
    std::vector<int> v(static_cast<std::size_t>(n), 0);
    std::function<bool(int)> rec = [&](int pos) -> bool {
        if (pos == n) {
            Rational sum(0);
            for (int i = 0; i < n; ++i) {
                point[static_cast<std::size_t>(i + 1)] = Rational(v[static_cast<std::size_t>(i)]);
                sum += point[static_cast<std::size_t>(i + 1)];
            }
            point[0] = -sum;
            return sgn(P.evaluate(point)) == 0;
        }
        for (int x = 0; x <= d; ++x) {
            v[static_cast<std::size_t>(pos)] = x;
            if (!rec(pos + 1)) return false;
        }
        return true;
    };
    return rec(0);
}

} // namespace sharpdeg::testing

#endif
