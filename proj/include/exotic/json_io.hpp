#pragma once

#include <json.hpp>

#include "exotic/circle_diagram.hpp"
#include "exotic/cohomology.hpp"
#include "exotic/cup_diagram.hpp"
#include "exotic/homology.hpp"

namespace exotic {

nlohmann::json toJson(const CupDiagram& diagram);
CupDiagram cupDiagramFromJson(const nlohmann::json& j);

nlohmann::json toJson(const EnrichedCupDiagram& diagram);
EnrichedCupDiagram enrichedFromJson(const nlohmann::json& j);

nlohmann::json toJson(const IntersectionReport& report);

// "num/den" with an explicit denominator, e.g. "0/1", "-1/2".
std::string rationalToString(const mpq_class& value);
mpq_class rationalFromString(const std::string& text);

nlohmann::json toJson(const std::vector<SpherePoint>& points);
std::vector<SpherePoint> spherePointsFromJson(const nlohmann::json& j);

nlohmann::json toJson(const LineDiagramVector& v);
LineDiagramVector lineDiagramVectorFromJson(const nlohmann::json& j);

nlohmann::json toJson(const RingElement& element);
RingElement ringElementFromJson(const nlohmann::json& j);

} // namespace exotic
