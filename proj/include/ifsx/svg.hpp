#pragma once

#include "ifsx/separation.hpp"

#include <cstdint>
#include <string>

namespace ifsx {

// Deterministic SVG rendering of the depth-k cylinder cover.  Dimension 1
// draws one horizontal bar per cylinder interval (class "bar"); dimension 2
// draws one disk per cylinder ball (class "cyl").  Pieces are colored by the
// component of their first symbol under the given partition.  Coordinates
// are produced by exact rational arithmetic and fixed 4-decimal floor
// rounding, so identical inputs give byte-identical output.  Throws
// std::invalid_argument for ambient dimension 3 or higher.
std::string render_svg(const IfsSystem& sys, int depth, const ComponentPartition& partition,
                       std::uint64_t budget = 1'000'000);

} // namespace ifsx
