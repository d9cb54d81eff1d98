#pragma once

#include "cosetlab/chambers.hpp"

#include <string>

namespace cosetlab {

// Stereographic picture of a rank-3 chamber complex on the unit sphere,
// projected from the antipode of rho.  Reflecting great circles are drawn in
// black, the cut hyperplane in red, positive facets shaded (the fundamental
// chamber darker).  Rendering is the only floating-point code in the
// library; all membership decisions come from the exact layer.
std::string render_rank3_svg(const PositiveComplex& complex);

}  // namespace cosetlab
