#include "exotic/json_io.hpp"

namespace exotic {

using nlohmann::json;

json toJson(const CupDiagram& diagram) {
    json cups = json::array();
    for (const Cup& cup : diagram.cups()) cups.push_back({cup.left, cup.right});
    return json{{"m", diagram.vertexCount()},
                {"word", diagram.word()},
                {"openers", diagram.openers()},
                {"cups", cups},
                {"rays", diagram.rays()},
                {"halfcups", diagram.halfCups()}};
}

CupDiagram cupDiagramFromJson(const json& j) {
    if (j.contains("word")) return CupDiagram::parse(j.at("word").get<std::string>());
    return CupDiagram::fromOpeners(j.at("m").get<int>(), j.at("openers").get<std::vector<int>>());
}

json toJson(const EnrichedCupDiagram& diagram) {
    return json{{"m", diagram.base.vertexCount()},
                {"word", diagram.word()},
                {"base", diagram.base.word()},
                {"dotted", std::vector<int>(diagram.dotted.begin(), diagram.dotted.end())},
                {"degree", diagram.degree()}};
}

EnrichedCupDiagram enrichedFromJson(const json& j) {
    if (j.contains("word")) return EnrichedCupDiagram::parse(j.at("word").get<std::string>());
    auto dotted = j.at("dotted").get<std::vector<int>>();
    return EnrichedCupDiagram::make(CupDiagram::parse(j.at("base").get<std::string>()),
                                    std::set<int>(dotted.begin(), dotted.end()));
}

json toJson(const IntersectionReport& report) {
    json out{{"nonempty", report.nonempty}, {"circles", report.circles},
             {"hhLines", report.hhLines},   {"K", report.K},
             {"offending", report.offendingLines}};
    if (report.cohomologyDim.fits_slong_p()) out["dim"] = report.cohomologyDim.get_si();
    else out["dim"] = report.cohomologyDim.get_str();
    return out;
}

std::string rationalToString(const mpq_class& value) {
    return value.get_num().get_str() + "/" + value.get_den().get_str();
}

mpq_class rationalFromString(const std::string& text) {
    mpq_class value;
    if (value.set_str(text, 10) != 0 || value.get_den() == 0)
        fail(ErrorKind::ParseError, "bad rational '" + text + "'");
    value.canonicalize();
    return value;
}

json toJson(const std::vector<SpherePoint>& points) {
    json list = json::array();
    for (const SpherePoint& point : points)
        list.push_back({rationalToString(point.x()), rationalToString(point.y()),
                        rationalToString(point.z())});
    return list;
}

std::vector<SpherePoint> spherePointsFromJson(const json& j) {
    std::vector<SpherePoint> points;
    for (const auto& entry : j) {
        points.emplace_back(rationalFromString(entry.at(0).get<std::string>()),
                            rationalFromString(entry.at(1).get<std::string>()),
                            rationalFromString(entry.at(2).get<std::string>()));
    }
    return points;
}

json toJson(const LineDiagramVector& v) {
    json terms = json::array();
    for (const auto& [U, c] : v.terms()) {
        json term{{"U", U}};
        if (c.fits_slong_p()) term["c"] = c.get_si();
        else term["c"] = c.get_str();
        terms.push_back(std::move(term));
    }
    return json{{"m", v.lineCount()}, {"terms", terms}};
}

LineDiagramVector lineDiagramVectorFromJson(const json& j) {
    LineDiagramVector v(j.at("m").get<int>());
    for (const auto& term : j.at("terms")) {
        mpz_class c;
        const auto& raw = term.at("c");
        if (raw.is_string()) c = mpz_class(raw.get<std::string>());
        else c = mpz_class(raw.get<long>());
        v.add(term.at("U").get<std::vector<int>>(), c);
    }
    return v;
}

json toJson(const RingElement& element) {
    json terms = json::array();
    for (const auto& [indices, c] : element.terms())
        terms.push_back({{"I", indices}, {"c", rationalToString(c)}});
    return json{{"m", element.varCount()}, {"k", element.degreeCapK()}, {"terms", terms}};
}

RingElement ringElementFromJson(const json& j) {
    RingElement element(j.at("m").get<int>(), j.at("k").get<int>());
    for (const auto& term : j.at("terms")) {
        element = element + RingElement::monomial(element.varCount(), element.degreeCapK(),
                                                  term.at("I").get<std::vector<int>>(),
                                                  rationalFromString(term.at("c").get<std::string>()));
    }
    return element;
}

} // namespace exotic
