#ifndef SHARPDEG_TRANSFORMS_HPP
#define SHARPDEG_TRANSFORMS_HPP

#include <optional>
#include <string>
#include <utility>

#include "sharpdeg/diagram.hpp"

namespace sharpdeg {

enum class Metric { NodeCount, SurfaceCount };

// Before/after record of a diagram surgery.  delta_actual is measured on the
// stated metric and must satisfy delta_actual <= delta_bound; a violation
// raises ContradictionError, because each bound is a proved inequality.
struct TransformReceipt {
    std::string transform;
    Metric metric = Metric::NodeCount;
    bool support_metric = false;  // measured on support_sc_3d instead of signs
    NewtonDiagram before;
    NewtonDiagram after;
    Rational delta_bound;
    Rational delta_actual;

    TransformReceipt(NewtonDiagram b, NewtonDiagram a)
        : before(std::move(b)), after(std::move(a)) {}
};

// Extend the support to cover level k completely without increasing the
// chosen metric.  Requires every point below level k present and at least
// one nonzero point at level k.
TransformReceipt fill_level_2d(const NewtonDiagram& D, int k, Metric metric);

// Drop the bottom row and shift the rest down one step; the weighted surface
// count decreases by at least 1/2.  Requires the full triangle below level k
// and empty columns a=0 above level k and a=1 above level k-1.
TransformReceipt slice_column_2d(const NewtonDiagram& D, int k);

// Attach a full triangle below a diagram supported on levels >= k, paying at
// most k/2 in weighted surface count.
TransformReceipt triangle_glue_2d(const NewtonDiagram& D, int k);

// Maximal-support diagram with the given top level whose weighted surface
// count is exactly (d+1)/2.  top_row[i] is the sign of (d-1-i, i).
NewtonDiagram prescribed_minimal_2d(const std::vector<Sign>& top_row, int d);

struct Reduce3dResult {
    enum class Kind { SliceOffFace, FillLevel, Terminal };
    Kind kind;
    NewtonDiagram result;
    int axis = -1;  // removed coordinate plane for SliceOffFace
    std::optional<TransformReceipt> receipt;
};

// One step of the 3D reduction: if the filled part reaches the top, the
// diagram is terminal; otherwise the first incomplete level either loses a
// coordinate plane (empty edge) or gets filled in.  Receipts are measured on
// the support surface count.
Reduce3dResult reduce_3d_step(const NewtonDiagram& D);

// The two 2-variable diagrams seen when collapsing the last two coordinates,
// keeping the first (respectively last) nonzero entry of each fiber.
std::pair<NewtonDiagram, NewtonDiagram> view_diagrams_3d(const NewtonDiagram& D);

} // namespace sharpdeg

#endif
