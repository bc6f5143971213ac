#pragma once

#include <string>
#include <vector>

#include "moduli_atlas/tf_components.hpp"

namespace moduli_atlas {

/// Static SVG overlaying the HN polygons of all non-absorbed components.
/// Vertices are exact integers in (rank * x_scale, deg_H) model coordinates,
/// mapped to the canvas by the inner viewBox. Types sharing m share one
/// polygon; the legend lists their (m, ell1, ell2) triples.
[[nodiscard]] std::string render_polygon_svg(const Surface& s, const MukaiVector& v, Int m_max,
                                             const std::vector<TfComponent>& components);

}  // namespace moduli_atlas
