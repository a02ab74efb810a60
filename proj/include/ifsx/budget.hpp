#pragma once

#include <cstdint>

namespace ifsx {

// Work limits for refinement searches.  `max_nodes` counts node expansions in
// branch-and-bound (or leaves in cover refinement); `max_depth` caps cylinder
// word length per side.
struct Budget {
    std::uint64_t max_nodes = 1'000'000;
    int max_depth = 40;
};

} // namespace ifsx
