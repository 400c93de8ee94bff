#pragma once

#include <array>
#include <optional>
#include <string>

#include "orbitpart/partition.hpp"

namespace orbitpart {

struct Rendering {
    std::string format;  // "svg" or "obj"
    std::string content;
};

/// Points coloured by subset with hull outlines and the witness polygon.
std::string render_svg(const Configuration& config, const OrbitPartition& partition);

/// Point cloud, one hull mesh per subset and the witness polytope edges.
std::string render_obj(const Configuration& config, const OrbitPartition& partition);

/// SVG in the plane, OBJ in space. Higher dimensions need three
/// coordinate indices (0-based) to project onto.
Rendering render(const Configuration& config, const OrbitPartition& partition,
                 std::optional<std::array<int, 3>> projection = std::nullopt);

}  // namespace orbitpart
