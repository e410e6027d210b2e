#pragma once

#include <optional>
#include <string>

#include "vramsey/constructions.hpp"
#include "vramsey/lattice.hpp"

namespace vramsey {

// Graphviz text for the Hasse diagram of a domain: one rank per set size,
// cover relations as edges. A coloring fills nodes from a small palette and
// prints the color id in the label.
std::string hasse_dot(const domain& d, const std::optional<coloring>& c = std::nullopt);

// Self-contained SVG of the same diagram: levels as rows, covers as lines.
std::string hasse_svg(const domain& d, const std::optional<coloring>& c = std::nullopt);

}  // namespace vramsey
