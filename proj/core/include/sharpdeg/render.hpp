#ifndef SHARPDEG_RENDER_HPP
#define SHARPDEG_RENDER_HPP

#include <string>

#include "sharpdeg/diagram.hpp"

namespace sharpdeg {

enum class RenderFormat { Ascii, Svg };

// Triangular-lattice picture of a diagram: light markers for positive
// points, dark for negative, with adjacency segments between nonzero
// neighbors.  Three-variable diagrams render as the three collapse
// projections plus a level-by-level stack.  Output is deterministic byte for
// byte.
std::string render_diagram(const NewtonDiagram& D, RenderFormat format);

} // namespace sharpdeg

#endif
