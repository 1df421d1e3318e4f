#include <CLI11.hpp>
#include <json.hpp>

#include <iostream>
#include <string>
#include <vector>

#include "exotic/acceptance.hpp"
#include "exotic/circle_diagram.hpp"
#include "exotic/cohomology.hpp"
#include "exotic/cup_diagram.hpp"
#include "exotic/homology.hpp"
#include "exotic/json_io.hpp"
#include "exotic/numeric.hpp"
#include "exotic/render.hpp"
#include "exotic/weyl.hpp"

using nlohmann::json;

namespace {

bool wantJson(const std::string& format) {
    if (format == "json") return true;
    if (format == "text") return false;
    exotic::fail(exotic::ErrorKind::BadParameters, "unknown format '" + format + "'");
}

void runEnumerate(int m, int k, const std::string& format) {
    std::vector<exotic::CupDiagram> diagrams = exotic::enumerateDiagrams(m, k);
    if (wantJson(format)) {
        json out = json::array();
        for (const auto& d : diagrams) out.push_back(exotic::toJson(d));
        std::cout << out.dump(2) << "\n";
    } else {
        for (const auto& d : diagrams) std::cout << d.word() << "\n";
        std::cout << "# " << diagrams.size() << " diagrams, C(" << m << "," << (m - k) << ") = "
                  << exotic::binomial(m, m - k).get_str() << "\n";
    }
}

void runConstraints(const std::string& word, const std::string& format) {
    exotic::CupDiagram a = exotic::CupDiagram::parse(word);
    std::vector<exotic::FlagConstraint> constraints = exotic::componentConstraints(a);
    if (wantJson(format)) {
        json out = json::array();
        for (const auto& c : constraints) {
            if (c.type == exotic::FlagConstraint::Type::CupRelation)
                out.push_back({{"type", "cup"}, {"i", c.i}, {"j", c.j}, {"power", c.power}});
            else
                out.push_back({{"type", "ray"}, {"i", c.i}, {"basisIndex", c.basisIndex}});
        }
        std::cout << json{{"diagram", exotic::toJson(a)}, {"constraints", out}}.dump(2) << "\n";
    } else {
        for (const auto& c : constraints) std::cout << exotic::toString(c) << "\n";
    }
}

void runIntersect(const std::string& wordA, const std::string& wordB, bool withWitness,
                  bool withOrientations, const std::string& format) {
    exotic::CupDiagram a = exotic::CupDiagram::parse(wordA);
    exotic::CupDiagram b = exotic::CupDiagram::parse(wordB);
    exotic::IntersectionReport report = exotic::intersect(a, b);

    if (wantJson(format)) {
        json out = exotic::toJson(report);
        if (withWitness) {
            exotic::WitnessResult witness = exotic::witnessPoint(a, b);
            if (witness.found) out["witness"] = exotic::toJson(witness.points);
            else out["witness"] = nullptr;
        }
        if (withOrientations) {
            exotic::CircleDiagram glued = exotic::glue(a, b);
            json list = json::array();
            for (const exotic::Weight& gamma : exotic::orientations(a, b)) {
                std::vector<bool> cw = exotic::componentClockwise(glued, gamma);
                list.push_back({{"weight", gamma.text()}, {"clockwise", cw}});
            }
            out["orientations"] = list;
        }
        std::cout << out.dump(2) << "\n";
        return;
    }

    std::cout << (report.nonempty ? "nonempty" : "empty") << ", circles=" << report.circles
              << ", hh-lines=" << report.hhLines << ", K=" << report.K << ", dim H* = "
              << report.cohomologyDim.get_str() << "\n";
    for (const auto& line : report.offendingLines) {
        std::cout << "offending ray-ray line:";
        for (int v : line) std::cout << " " << v;
        std::cout << "\n";
    }
    if (withWitness) {
        exotic::WitnessResult witness = exotic::witnessPoint(a, b);
        if (witness.found) {
            std::cout << "witness:";
            for (const auto& point : witness.points)
                std::cout << " (" << point.x() << "," << point.y() << "," << point.z() << ")";
            std::cout << "\n";
        } else {
            std::cout << "witness: none\n";
        }
    }
    if (withOrientations) {
        exotic::CircleDiagram glued = exotic::glue(a, b);
        for (const exotic::Weight& gamma : exotic::orientations(a, b)) {
            std::cout << "orientation " << gamma.text() << " [";
            std::vector<bool> cw = exotic::componentClockwise(glued, gamma);
            for (std::size_t i = 0; i < cw.size(); ++i) std::cout << (i ? " " : "") << (cw[i] ? "cw" : "ccw");
            std::cout << "]\n";
        }
    }
}

void runCells(int m, int k, const std::string& format) {
    std::vector<exotic::Weight> weights = exotic::enumerateWeights(m, k);
    std::vector<mpz_class> gf = exotic::cellGeneratingFunction(m, k);
    std::vector<mpz_class> poincare = exotic::poincarePolynomial(m, k);
    if (wantJson(format)) {
        json cells = json::array();
        for (const auto& alpha : weights) {
            exotic::CupDiagram c = exotic::cupFromWeight(alpha);
            cells.push_back({{"weight", alpha.text()},
                             {"cup", c.word()},
                             {"dimension", c.cupsPlusHalfCups()}});
        }
        json coefficients = json::array();
        for (const auto& c : gf) coefficients.push_back(c.get_str());
        std::cout << json{{"cells", cells},
                          {"generatingFunction", coefficients},
                          {"matchesPoincare", gf == poincare}}
                         .dump(2)
                  << "\n";
        return;
    }
    for (const auto& alpha : weights) {
        exotic::CupDiagram c = exotic::cupFromWeight(alpha);
        std::cout << alpha.text() << "  C(α)=" << c.word() << "  cell dim " << c.cupsPlusHalfCups()
                  << "\n";
    }
    std::cout << "cell generating function: " << exotic::polynomialToString(gf) << "\n";
    std::cout << "Poincaré polynomial:      " << exotic::polynomialToString(poincare) << "\n";
    std::cout << (gf == poincare ? "paving consistent" : "PAVING INCONSISTENT") << "\n";
}

void runCohomology(int m, int k, bool poincare, const std::vector<std::string>& mul,
                   const std::string& format) {
    if (!mul.empty()) {
        exotic::RingElement u = exotic::RingElement::parse(m, k, mul[0]);
        exotic::RingElement v = exotic::RingElement::parse(m, k, mul[1]);
        exotic::RingElement product = u * v;
        if (wantJson(format)) {
            std::cout << json{{"lhs", exotic::toJson(u)},
                              {"rhs", exotic::toJson(v)},
                              {"product", exotic::toJson(product)}}
                             .dump(2)
                      << "\n";
        } else {
            std::cout << "(" << u << ") * (" << v << ") = " << product << "\n";
        }
        return;
    }
    (void)poincare;  // default output is the Poincaré polynomial
    std::vector<mpz_class> coefficients = exotic::poincarePolynomial(m, k);
    if (wantJson(format)) {
        json list = json::array();
        for (const auto& c : coefficients) list.push_back(c.get_str());
        std::cout << json{{"m", m}, {"k", k}, {"poincare", list}}.dump(2) << "\n";
    } else {
        std::cout << exotic::polynomialToString(coefficients) << "\n";
    }
}

void runHomology(int m, int k, bool standard, const std::string& lm, int rankDegree,
                 const std::string& format) {
    if (standard) {
        std::vector<exotic::EnrichedCupDiagram> diagrams = exotic::standardEnriched(m, k);
        if (wantJson(format)) {
            json out = json::array();
            for (const auto& M : diagrams) out.push_back(exotic::toJson(M));
            std::cout << out.dump(2) << "\n";
        } else {
            for (const auto& M : diagrams)
                std::cout << M.word() << "  degree " << M.degree() << "\n";
            std::cout << "# " << diagrams.size() << " standard enriched diagrams\n";
        }
        return;
    }
    if (!lm.empty()) {
        exotic::EnrichedCupDiagram M = exotic::EnrichedCupDiagram::parse(lm);
        exotic::LineDiagramVector sum = exotic::lineDiagramSum(M);
        if (wantJson(format)) {
            std::cout << json{{"diagram", exotic::toJson(M)}, {"LM", exotic::toJson(sum)}}.dump(2)
                      << "\n";
        } else {
            std::cout << "L_M = " << sum.toString() << "\n";
        }
        return;
    }
    if (rankDegree >= 0) {
        int rank = exotic::rankCheck(m, k, rankDegree);
        if (wantJson(format)) {
            std::cout << json{{"m", m},
                              {"k", k},
                              {"l", rankDegree},
                              {"rank", rank},
                              {"expected", exotic::binomial(m, rankDegree).get_str()}}
                             .dump(2)
                      << "\n";
        } else {
            std::cout << "rank " << rank << " (expected C(" << m << "," << rankDegree
                      << ") = " << exotic::binomial(m, rankDegree).get_str() << ")\n";
        }
        return;
    }
    std::vector<mpz_class> betti = exotic::bettiNumbers(m, k);
    if (wantJson(format)) {
        json list = json::array();
        for (const auto& b : betti) list.push_back(b.get_str());
        std::cout << json{{"m", m}, {"k", k}, {"betti", list}}.dump(2) << "\n";
    } else {
        std::cout << "Betti numbers b_0, b_2, ...: ";
        for (std::size_t i = 0; i < betti.size(); ++i) std::cout << (i ? " " : "") << betti[i].get_str();
        std::cout << "\n";
    }
}

void runCharacter(int m, int k, int degree, const std::string& element, const std::string& format) {
    if (degree % 2 != 0)
        exotic::fail(exotic::ErrorKind::BadParameters, "cohomological degree must be even");
    const int l = degree / 2;
    if (!element.empty()) {
        exotic::SignedPermutation w = exotic::SignedPermutation::parse(m, element);
        long long chi = exotic::characterValue(m, k, l, w);
        if (wantJson(format)) {
            std::cout << json{{"degree", degree}, {"w", w.windowText()}, {"chi", chi}}.dump(2) << "\n";
        } else {
            std::cout << "chi_" << degree << "(" << w.windowText() << ") = " << chi << "\n";
        }
        return;
    }
    // no element given: tabulate the identity and every generator
    json values = json::array();
    std::vector<std::pair<std::string, exotic::SignedPermutation>> elements;
    elements.emplace_back("e", exotic::SignedPermutation::identity(m));
    for (int i = 0; i <= m - 1; ++i)
        elements.emplace_back("s" + std::to_string(i), exotic::SignedPermutation::generator(m, i));
    for (const auto& [name, w] : elements) {
        long long chi = exotic::characterValue(m, k, l, w);
        if (wantJson(format)) values.push_back({{"w", name}, {"chi", chi}});
        else std::cout << "chi_" << degree << "(" << name << ") = " << chi << "\n";
    }
    if (wantJson(format))
        std::cout << json{{"degree", degree}, {"values", values}}.dump(2) << "\n";
}

void runKmDim(int m, int k, const std::string& format) {
    mpz_class dim = exotic::kmDimension(m, k);
    if (wantJson(format)) {
        std::cout << json{{"m", m}, {"k", k}, {"dim", dim.get_str()}}.dump(2) << "\n";
    } else {
        std::cout << "dim K_" << m << " (k=" << k << ") = " << dim.get_str() << "\n";
    }
}

void runRender(const std::string& word, const std::string& glueWord, const std::string& format) {
    const bool tikz = format == "tikz";
    if (!tikz && format != "svg")
        exotic::fail(exotic::ErrorKind::BadParameters, "render format must be svg or tikz");
    if (!glueWord.empty()) {
        exotic::CupDiagram a = exotic::CupDiagram::parse(word);
        exotic::CupDiagram b = exotic::CupDiagram::parse(glueWord);
        std::cout << (tikz ? exotic::renderCircleTikz(a, b) : exotic::renderCircleSvg(a, b));
        return;
    }
    if (word.find('.') != std::string::npos) {
        exotic::EnrichedCupDiagram M = exotic::EnrichedCupDiagram::parse(word);
        std::cout << (tikz ? exotic::renderTikz(M) : exotic::renderSvg(M));
    } else {
        exotic::CupDiagram a = exotic::CupDiagram::parse(word);
        std::cout << (tikz ? exotic::renderTikz(a) : exotic::renderSvg(a));
    }
}

} // namespace

int main(int argc, char** argv) {
    CLI::App app{"exact diagram calculus for exotic Springer fibers of one-row bipartitions"};
    app.require_subcommand(1);

    int m = 0, k = 0;
    std::string format = "text";
    std::string wordA, wordB;

    auto* enumerateCmd = app.add_subcommand("enumerate", "list the cup diagrams of B^((k),(m-k))");
    enumerateCmd->add_option("--m", m, "number of vertices")->required();
    enumerateCmd->add_option("--k", k, "type parameter k")->required();
    enumerateCmd->add_option("--format", format, "text|json");
    enumerateCmd->callback([&] { runEnumerate(m, k, format); });

    auto* constraintsCmd = app.add_subcommand("constraints", "print the flag relations of a component");
    constraintsCmd->add_option("--a", wordA, "cup diagram word")->required();
    constraintsCmd->add_option("--format", format, "text|json");
    constraintsCmd->callback([&] { runConstraints(wordA, format); });

    bool witness = false, orient = false;
    auto* intersectCmd = app.add_subcommand("intersect", "analyze the intersection of two components");
    intersectCmd->add_option("--a", wordA, "first cup diagram word")->required();
    intersectCmd->add_option("--b", wordB, "second cup diagram word")->required();
    intersectCmd->add_flag("--witness", witness, "also construct an exact witness point");
    intersectCmd->add_flag("--orientations", orient, "also list the orienting weights");
    intersectCmd->add_option("--format", format, "text|json");
    intersectCmd->callback([&] { runIntersect(wordA, wordB, witness, orient, format); });

    auto* cellsCmd = app.add_subcommand("cells", "list attracting cells by weight");
    cellsCmd->add_option("--m", m, "number of vertices")->required();
    cellsCmd->add_option("--k", k, "type parameter k")->required();
    cellsCmd->add_option("--format", format, "text|json");
    cellsCmd->callback([&] { runCells(m, k, format); });

    bool poincare = false;
    std::vector<std::string> mulArgs;
    auto* cohomologyCmd = app.add_subcommand("cohomology", "cohomology ring computations");
    cohomologyCmd->add_option("--m", m, "number of vertices")->required();
    cohomologyCmd->add_option("--k", k, "type parameter k")->required();
    cohomologyCmd->add_flag("--poincare", poincare, "print the Poincaré polynomial (default)");
    cohomologyCmd->add_option("--mul", mulArgs, "multiply two ring elements")->expected(2);
    cohomologyCmd->add_option("--format", format, "text|json");
    cohomologyCmd->callback([&] { runCohomology(m, k, poincare, mulArgs, format); });

    bool standard = false;
    std::string lmWord;
    int rankDegree = -1;
    auto* homologyCmd = app.add_subcommand("homology", "homology bases and rank checks");
    homologyCmd->add_option("--m", m, "number of vertices")->required();
    homologyCmd->add_option("--k", k, "type parameter k")->required();
    homologyCmd->add_flag("--standard", standard, "list the standard enriched cup diagrams");
    homologyCmd->add_option("--lm", lmWord, "print L_M for an enriched diagram word");
    homologyCmd->add_option("--rank", rankDegree, "rank of the degree-2l line diagram sums");
    homologyCmd->add_option("--format", format, "text|json");
    homologyCmd->callback([&] { runHomology(m, k, standard, lmWord, rankDegree, format); });

    int degree = 0;
    std::string element;
    auto* characterCmd = app.add_subcommand("character", "characters of the Weyl group action");
    characterCmd->add_option("--m", m, "number of vertices")->required();
    characterCmd->add_option("--k", k, "type parameter k")->required();
    characterCmd->add_option("--degree", degree, "cohomological degree 2l")->required();
    characterCmd->add_option("--element", element, "generator word like 's0 s1' or window '2 -1 3'");
    characterCmd->add_option("--format", format, "text|json");
    characterCmd->callback([&] { runCharacter(m, k, degree, element, format); });

    auto* kmDimCmd = app.add_subcommand("km-dim", "dimension of the oriented circle diagram space");
    kmDimCmd->add_option("--m", m, "number of vertices")->required();
    kmDimCmd->add_option("--k", k, "type parameter k")->required();
    kmDimCmd->add_option("--format", format, "text|json");
    kmDimCmd->callback([&] { runKmDim(m, k, format); });

    std::string glueWord;
    std::string renderFormat = "svg";
    auto* renderCmd = app.add_subcommand("render", "draw a cup or circle diagram");
    renderCmd->add_option("--a", wordA, "cup diagram word (enriched words with '.' allowed)")->required();
    renderCmd->add_option("--glue", glueWord, "second diagram; renders the glued circle diagram");
    renderCmd->add_option("--format", renderFormat, "svg|tikz");
    renderCmd->callback([&] { runRender(wordA, glueWord, renderFormat); });

    int mMax = 6;
    auto* checkCmd = app.add_subcommand("check", "run the verification suite");
    checkCmd->add_option("--m-max", mMax, "cap on the per-criterion size bounds");
    checkCmd->callback([&] {
        std::vector<exotic::CriterionResult> results = exotic::runAcceptanceSuite(mMax);
        exotic::printResults(results, std::cout);
        if (!exotic::allPassed(results)) throw exotic::Error(exotic::ErrorKind::BadParameters, "criteria failed");
    });

    try {
        app.parse(argc, argv);
    } catch (const CLI::CallForHelp& e) {
        return app.exit(e);
    } catch (const CLI::CallForAllHelp& e) {
        return app.exit(e);
    } catch (const CLI::ParseError& e) {
        app.exit(e);
        return 2;
    } catch (const exotic::Error& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 1;
    }
    return 0;
}
