#ifndef SHARPDEG_DIAGRAM_HPP
#define SHARPDEG_DIAGRAM_HPP

#include <map>
#include <optional>
#include <set>
#include <vector>

#include "sharpdeg/polynomial.hpp"

namespace sharpdeg {

enum class Sign : int { N = -1, P = 1 };

inline Sign flip(Sign s) { return s == Sign::P ? Sign::N : Sign::P; }

// Sign pattern of the quotient Q = P/S on the integer lattice.  A point
// m in N_0^n carries the sign of the coefficient of X^gamma(m) in Q, where
// gamma(m) = (d-1-|m|, m).  Points never stored read as zero.
class NewtonDiagram {
public:
    using SignMap = std::map<MultiIndex, Sign, GradedLexAsc>;

    NewtonDiagram(int n, int d);

    int n() const { return n_; }
    int d() const { return d_; }

    void set(const MultiIndex& m, Sign s);
    void clear(const MultiIndex& m) { signs_.erase(m); }

    // -1, 0, +1 for any lattice point, negative coordinates included.
    int sign_at(const MultiIndex& m) const;

    bool empty() const { return signs_.empty(); }
    const SignMap& signs() const { return signs_; }
    std::set<MultiIndex, GradedLexAsc> support_points() const;

    friend bool operator==(const NewtonDiagram& a, const NewtonDiagram& b) {
        return a.n_ == b.n_ && a.d_ == b.d_ && a.signs_ == b.signs_;
    }

private:
    int n_, d_;
    SignMap signs_;
};

// Read the diagram off a homogeneous Q of degree d-1 in n+1 variables.
NewtonDiagram diagram_of(const Polynomial& Q, int d);

// Section with unit magnitudes: +1 at P-points, -1 at N-points.
Polynomial realize(const NewtonDiagram& D);

enum class NodeKind { Interior, Edge, Vertex, Bottom, Plain };

// A degree-d multi-index alpha whose contributing lattice points carry only
// one sign (zeros allowed).  `points` lists E(alpha): first the top point,
// then the n lower points alpha' - e_k.
struct NodeSite {
    MultiIndex alpha;                 // length n+1, |alpha| = d
    std::vector<MultiIndex> points;   // n+1 lattice points, may go negative
    NodeKind kind;                    // 2D classification; Plain otherwise
};

std::vector<NodeSite> nodes(const NewtonDiagram& D);
int node_count(const NewtonDiagram& D);

// Interior nodes count 1, edge and vertex nodes 1/2, bottom nodes 0.
Rational weighted_surface_count_2d(const NewtonDiagram& D);

struct Support {
    int n = 0;
    std::set<MultiIndex, GradedLexAsc> points;

    static Support of(const NewtonDiagram& D) { return Support{D.n(), D.support_points()}; }
};

// Neighbors under the monomial adjacency X_j X^a = X_k X^b: the same-level
// exchanges m + e_k - e_j plus the single-coordinate steps m +- e_j.
std::vector<MultiIndex> lattice_neighbors(const MultiIndex& m);

struct SupportGeometry {
    bool connected = false;
    int size = 0;              // diameter of the hull simplex plus one
    MultiIndex hull_base;      // componentwise minima
    int hull_level = 0;        // max |m|
};

SupportGeometry support_geometry(const Support& K);

std::vector<std::vector<MultiIndex>> connected_components(const Support& K);

struct OverhangWitness {
    bool found = false;
    MultiIndex where;     // point of K (original coordinates)
    int projection = 0;   // 1..3 for n=3, 0 for n=2
};

// Left/right overhang for n=2; for n=3 a point is an overhang when one of
// the three collapse projections maps it onto a 2D overhang.
OverhangWitness has_overhang(const Support& K);

struct Face {
    enum class Kind { Vertical, Horizontal };
    Kind kind;
    int axis = 0;    // fixed coordinate for vertical faces
    int level = 0;   // the constant: m_axis = level, or |m| = level
    std::vector<MultiIndex> points;  // 3D coordinates, graded-lex sorted
};

// Boundary faces of a 3D support: a vertical face in {m_j = C} collects the
// points whose m_j-down neighbor is a zero point, a horizontal face in
// {|m| = C} the points with a missing up neighbor.  Each face is a maximal
// connected family.
std::vector<Face> faces_3d(const Support& K);

// Minimum over all sign assignments of the face of the weighted count of
// nodes that involve only points of the face and points outside K.  Vertical
// faces use the 2D weights; horizontal faces give vertex nodes weight zero.
Rational face_sc_min(const Face& F, const Support& K, std::size_t cap = 22);

// Sum of face_sc_min over all faces; a lower bound for node counts that
// depends only on the support.
Rational support_sc_3d(const Support& K, std::size_t cap = 22);

// Defined here because it needs the diagram machinery.
// (declared in polynomial.hpp) ClassReport class_membership(const Polynomial&);

} // namespace sharpdeg

#endif
