#pragma once

#include <string>

#include "exotic/cup_diagram.hpp"
#include "exotic/homology.hpp"

namespace exotic {

// Static figures in the paper's drawing conventions: dotted bounding
// rectangle, filled vertex dots, cups below the vertex line, half-cups
// exiting the right edge, enrichment dots as open circles. Circle diagrams
// show the first diagram reflected above the dotted middle line.

std::string renderTikz(const CupDiagram& diagram);
std::string renderTikz(const EnrichedCupDiagram& diagram);
std::string renderCircleTikz(const CupDiagram& a, const CupDiagram& b);

std::string renderSvg(const CupDiagram& diagram);
std::string renderSvg(const EnrichedCupDiagram& diagram);
std::string renderCircleSvg(const CupDiagram& a, const CupDiagram& b);

} // namespace exotic
