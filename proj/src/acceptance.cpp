#include "exotic/acceptance.hpp"

#include <algorithm>
#include <chrono>
#include <iomanip>
#include <ostream>
#include <random>
#include <sstream>

#include "exotic/circle_diagram.hpp"
#include "exotic/cohomology.hpp"
#include "exotic/cup_diagram.hpp"
#include "exotic/homology.hpp"
#include "exotic/numeric.hpp"
#include "exotic/weyl.hpp"

namespace exotic {

namespace {

// All diagrams on m vertices regardless of the number of cups plus
// half-cups, i.e. the union of 𝔹^{((k),(m-k))} over k.
std::vector<CupDiagram> allDiagrams(int m) {
    std::vector<CupDiagram> all;
    for (int k = m; k >= 0; --k) {
        std::vector<CupDiagram> layer = enumerateDiagrams(m, k);
        all.insert(all.end(), layer.begin(), layer.end());
    }
    return all;
}

// Independent oracle for Thm-5.9 orientations: filter every weight against
// the raw cup and ray constraints of both diagrams, never touching the
// glued-component machinery.
std::vector<Weight> bruteOrientations(const CupDiagram& a, const CupDiagram& b) {
    const int m = a.vertexCount();
    std::vector<Weight> result;
    for (long mask = 0; mask < (1L << m); ++mask) {
        std::string symbols(static_cast<std::size_t>(m), '^');
        for (int i = 0; i < m; ++i)
            if (mask & (1L << i)) symbols[static_cast<std::size_t>(i)] = 'v';
        bool ok = true;
        for (const CupDiagram* d : {&a, &b}) {
            for (const Cup& cup : d->cups())
                if (symbols[static_cast<std::size_t>(cup.left - 1)] ==
                    symbols[static_cast<std::size_t>(cup.right - 1)])
                    ok = false;
            for (int ray : d->rays())
                if (symbols[static_cast<std::size_t>(ray - 1)] != '^') ok = false;
            if (!ok) break;
        }
        if (ok) result.emplace_back(std::move(symbols));
    }
    std::sort(result.begin(), result.end());
    return result;
}

mpq_class randomRational(std::mt19937_64& rng) {
    std::uniform_int_distribution<int> numDist(-20, 20);
    std::uniform_int_distribution<int> denDist(1, 20);
    mpq_class value(numDist(rng), denDist(rng));
    value.canonicalize();
    return value;
}

SpherePoint randomSpherePoint(std::mt19937_64& rng) {
    return SpherePoint::fromStereographic(randomRational(rng), randomRational(rng));
}

// Random point of S_a: rays pinned to the north pole, cup partners
// opposite, everything else free.
std::vector<SpherePoint> randomMemberOf(const CupDiagram& a, std::mt19937_64& rng) {
    std::vector<SpherePoint> x(static_cast<std::size_t>(a.vertexCount()), SpherePoint::northPole());
    for (const Cup& cup : a.cups()) {
        SpherePoint value = randomSpherePoint(rng);
        x[static_cast<std::size_t>(cup.left - 1)] = value;
        x[static_cast<std::size_t>(cup.right - 1)] = -value;
    }
    for (int v : a.halfCups()) x[static_cast<std::size_t>(v - 1)] = randomSpherePoint(rng);
    return x;
}

// Random point of S_a ∩ S_b built from the component decomposition with
// random seeds on the free components; empty when the pair is.
bool randomWitnessFamilyMember(const CupDiagram& a, const CupDiagram& b, std::mt19937_64& rng,
                               std::vector<SpherePoint>& out) {
    CircleDiagram diagram = glue(a, b);
    std::vector<SpherePoint> x(static_cast<std::size_t>(a.vertexCount()), SpherePoint::northPole());
    for (const Component& comp : diagram.components()) {
        int forcedBase = -1;
        if (!comp.circle) {
            for (const LooseEnd& end : comp.ends) {
                if (end.kind != EndKind::Ray) continue;
                auto it = std::lower_bound(comp.vertices.begin(), comp.vertices.end(), end.vertex);
                int par = comp.parity[static_cast<std::size_t>(it - comp.vertices.begin())];
                if (forcedBase == -1) forcedBase = par;
                else if (forcedBase != par) return false;
            }
        }
        SpherePoint base = forcedBase >= 0 ? SpherePoint::northPole() : randomSpherePoint(rng);
        int basePar = forcedBase >= 0 ? forcedBase : comp.parity.front();
        for (std::size_t i = 0; i < comp.vertices.size(); ++i)
            x[static_cast<std::size_t>(comp.vertices[i] - 1)] =
                comp.parity[i] == basePar ? base : -base;
    }
    out = std::move(x);
    return true;
}

struct Check {
    bool ok = true;
    std::string detail;
    long long count = 0;

    void expect(bool condition, const std::string& description) {
        ++count;
        if (ok && !condition) {
            ok = false;
            detail = description;
        }
    }
};

std::string summary(const Check& check, const std::string& what) {
    if (!check.ok) return check.detail;
    return std::to_string(check.count) + " " + what + " verified";
}

// 1. |𝔹^{((k),(m-k))}| = C(m, m-k) and the bitableau bijection round-trips.
CriterionResult componentCounts(int mMax) {
    Check check;
    for (int m = 0; m <= mMax; ++m) {
        for (int k = 0; k <= m; ++k) {
            std::vector<CupDiagram> diagrams = enumerateDiagrams(m, k);
            check.expect(mpz_class(static_cast<long>(diagrams.size())) == binomial(m, m - k),
                         "count mismatch at m=" + std::to_string(m) + " k=" + std::to_string(k));
            for (const CupDiagram& a : diagrams) {
                Bitableau t = toBitableau(a);
                check.expect(fromBitableau(t, k) == a, "round trip failed for " + a.word());
                CupDiagram rebuilt = fromBitableau(t);
                check.expect(toBitableau(rebuilt) == t, "tableau round trip failed for " + a.word());
            }
        }
    }
    return {1, "component counts and bijection round-trip", check.ok, summary(check, "checks"), 0};
}

// 2. Example 2.6: the four diagrams of 𝔹^{((3),(1))} in order.
CriterionResult exampleDiagrams(int) {
    Check check;
    std::vector<CupDiagram> diagrams = enumerateDiagrams(4, 3);
    std::vector<std::string> expected{"()||", "|()|", "||()", "|||>"};
    check.expect(diagrams.size() == expected.size(), "wrong count for (4,3)");
    for (std::size_t i = 0; i < diagrams.size() && i < expected.size(); ++i)
        check.expect(diagrams[i].word() == expected[i],
                     "diagram " + std::to_string(i) + " is " + diagrams[i].word() + ", expected " +
                         expected[i]);
    return {2, "golden enumeration of B^((3),(1))", check.ok, summary(check, "diagrams"), 0};
}

// 3. + 5. Intersection triple agreement and orientation counts, all pairs
// across all (k,l) for m <= 6, with the exhaustive weight filter as oracle.
void intersectionAgreement(int mMax, bool orientationCriterion, Check& check) {
    for (int m = 1; m <= std::min(mMax, 6); ++m) {
        std::vector<CupDiagram> diagrams = allDiagrams(m);
        for (const CupDiagram& a : diagrams) {
            for (const CupDiagram& b : diagrams) {
                IntersectionReport report = intersect(a, b);
                std::vector<Weight> oriented = orientations(a, b);
                std::vector<Weight> oracle = bruteOrientations(a, b);
                WitnessResult witness = witnessPoint(a, b);
                const std::string pair = a.word() + " / " + b.word();

                if (orientationCriterion) {
                    check.expect(oriented.size() == oracle.size() && std::equal(oriented.begin(), oriented.end(), oracle.begin()),
                                 "orientation list differs from oracle for " + pair);
                    mpz_class expected = report.nonempty ? report.cohomologyDim : mpz_class(0);
                    check.expect(mpz_class(static_cast<long>(oriented.size())) == expected,
                                 "|orientations| != 0 or 2^K for " + pair);
                } else {
                    check.expect(report.nonempty == !oriented.empty(),
                                 "criterion vs orientations disagree for " + pair);
                    check.expect(report.nonempty == witness.found,
                                 "criterion vs witness disagree for " + pair);
                    check.expect(!oracle.empty() == report.nonempty,
                                 "criterion vs oracle disagree for " + pair);
                    if (witness.found) {
                        check.expect(memberOf(witness.points, a) && memberOf(witness.points, b),
                                     "witness fails membership for " + pair);
                    }
                    IntersectionReport reversed = intersect(b, a);
                    check.expect(report.nonempty == reversed.nonempty && report.K == reversed.K,
                                 "intersection is not symmetric for " + pair);
                }
            }
        }
    }
}

CriterionResult intersectionTheorem(int mMax) {
    Check check;
    intersectionAgreement(mMax, false, check);
    return {3, "intersection theorem triple agreement (m<=6)", check.ok, summary(check, "pair checks"), 0};
}

// 4. Example 4.5 golden values.
CriterionResult exampleIntersections(int) {
    Check check;
    CupDiagram a = CupDiagram::parse("()||");
    CupDiagram b = CupDiagram::parse("|()|");
    CupDiagram c = CupDiagram::parse("||()");

    IntersectionReport ab = intersect(a, b);
    check.expect(ab.nonempty && ab.K == 0 && ab.cohomologyDim == 1, "S_a∩S_b should be a point");
    WitnessResult witness = witnessPoint(a, b);
    const SpherePoint p = SpherePoint::northPole();
    std::vector<SpherePoint> expected{p, -p, p, p};
    check.expect(witness.found && witness.points == expected, "witness should be (p,-p,p,p)");

    IntersectionReport ac = intersect(a, c);
    check.expect(!ac.nonempty && ac.cohomologyDim == 0, "S_a∩S_c should be empty");
    check.expect(!witnessPoint(a, c).found, "no witness should exist for S_a∩S_c");
    check.expect(orientations(a, c).empty(), "no orientation should exist for S_a∩S_c");
    return {4, "golden intersections of Example 4.5", check.ok, summary(check, "checks"), 0};
}

// 5. Orientation counts and the K_m dimension against the pairwise oracle.
CriterionResult orientationCounts(int mMax) {
    Check check;
    intersectionAgreement(mMax, true, check);

    mpz_class oracleSum = 0;
    std::vector<CupDiagram> diagrams = enumerateDiagrams(4, 3);
    for (const CupDiagram& a : diagrams)
        for (const CupDiagram& b : diagrams)
            oracleSum += static_cast<long>(bruteOrientations(a, b).size());
    check.expect(oracleSum == 14, "pairwise oracle gives " + oracleSum.get_str() + " for (4,3)");
    check.expect(kmDimension(4, 3) == 14,
                 "kmDimension(4,3) = " + kmDimension(4, 3).get_str() + ", expected 14");
    check.expect(kmDimension(4, 3) == oracleSum, "kmDimension disagrees with the oracle");
    return {5, "orientation counts and dim K_m", check.ok, summary(check, "checks"), 0};
}

// 6. Cells, Poincaré polynomial and Betti numbers coincide.
CriterionResult pavingConsistency(int mMax) {
    Check check;
    for (int m = 0; m <= mMax; ++m) {
        for (int k = 0; k <= m; ++k) {
            std::vector<mpz_class> cells = cellGeneratingFunction(m, k);
            std::vector<mpz_class> poincare = poincarePolynomial(m, k);
            std::vector<mpz_class> betti = bettiNumbers(m, k);
            check.expect(cells == poincare,
                         "cells vs Poincaré differ at m=" + std::to_string(m) + " k=" + std::to_string(k));
            check.expect(poincare == betti,
                         "Poincaré vs Betti differ at m=" + std::to_string(m) + " k=" + std::to_string(k));
        }
    }
    std::vector<mpz_class> expected{1, 4};
    check.expect(cellGeneratingFunction(4, 3) == expected && poincarePolynomial(4, 3) == expected,
                 "(4,3) generating function should be 1 + 4q^2");
    return {6, "paving consistency (cells = Poincaré = Betti)", check.ok, summary(check, "checks"), 0};
}

// 7. The worked L_M example on nine vertices.
CriterionResult lineDiagramGolden(int) {
    Check check;
    EnrichedCupDiagram M = EnrichedCupDiagram::parse("(.)|.()>()>.");
    check.expect(M.degree() == 6, "degree should be 6");
    LineDiagramVector sum = lineDiagramSum(M);
    LineDiagramVector expected(9);
    expected.add({4, 6, 7}, 1);
    expected.add({4, 6, 8}, -1);
    expected.add({5, 6, 7}, -1);
    expected.add({5, 6, 8}, 1);
    check.expect(sum == expected, "L_M = " + sum.toString());
    return {7, "golden line diagram sum L_M", check.ok, summary(check, "checks"), 0};
}

// 8. β-map worked examples and the five standard enriched diagrams.
CriterionResult betaGolden(int) {
    Check check;
    check.expect(betaMap(CupDiagram::parse("|||||"), 3).word() == "|.|.|.>.>.",
                 "β of the all-ray diagram is wrong");
    check.expect(betaMap(CupDiagram::parse("||()|"), 3).word() == "|.|.()>.",
                 "β of ||()| is wrong");
    check.expect(betaMap(CupDiagram::parse("(())|"), 3).word() == "(())|.",
                 "β of (())| is wrong");

    std::vector<std::string> expected{"|.|.|.>.", "()|.|.", "|.()|.", "|.|.()", "|.|.|.>"};
    std::vector<EnrichedCupDiagram> standard = standardEnriched(4, 3);
    check.expect(standard.size() == expected.size(), "s𝔹̃^((3),(1)) should have five diagrams");
    for (std::size_t i = 0; i < standard.size() && i < expected.size(); ++i)
        check.expect(standard[i].word() == expected[i],
                     "standard diagram " + std::to_string(i) + " is " + standard[i].word() +
                         ", expected " + expected[i]);
    return {8, "golden β-map images", check.ok, summary(check, "checks"), 0};
}

// 9. Lemma 6.9 as exact rank computations.
CriterionResult linearIndependence(int mMax) {
    Check check;
    for (int m = 0; m <= std::min(mMax, 8); ++m) {
        for (int k = 0; k <= m; ++k) {
            for (int l = 0; l <= m - k; ++l) {
                int rank = rankCheck(m, k, l);
                check.expect(mpz_class(rank) == binomial(m, l),
                             "rank " + std::to_string(rank) + " != C(" + std::to_string(m) + "," +
                                 std::to_string(l) + ") at k=" + std::to_string(k));
            }
        }
    }
    return {9, "linear independence ranks (m<=8)", check.ok, summary(check, "ranks"), 0};
}

// 10. Ring axioms, exhaustively on monomials.
CriterionResult ringAxioms(int mMax) {
    Check check;
    for (int m = 1; m <= std::min(mMax, 6); ++m) {
        for (int k = 0; k <= m; ++k) {
            std::vector<std::vector<int>> monomials;
            for (int l = 0; l <= m - k; ++l)
                for (const std::vector<int>& I : subsetsOfSize(m, l)) monomials.push_back(I);

            std::vector<RingElement> basis;
            basis.reserve(monomials.size());
            for (const auto& I : monomials) basis.push_back(RingElement::monomial(m, k, I));

            for (std::size_t i = 0; i < basis.size() && check.ok; ++i) {
                for (std::size_t j = 0; j < basis.size() && check.ok; ++j) {
                    RingElement ij = basis[i] * basis[j];
                    check.expect(ij == basis[j] * basis[i], "commutativity fails");
                    for (std::size_t t = 0; t < basis.size() && check.ok; ++t)
                        check.expect((ij * basis[t]) == (basis[i] * (basis[j] * basis[t])),
                                     "associativity fails");
                }
            }
            for (int i = 1; i <= m; ++i) {
                RingElement xi = RingElement::generator(m, k, i);
                check.expect((xi * xi).isZero(), "X_" + std::to_string(i) + "^2 != 0");
            }
            if (m - k + 1 <= m) {
                for (const std::vector<int>& I : subsetsOfSize(m, m - k + 1)) {
                    RingElement product = RingElement::one(m, k);
                    for (int i : I) product = product * RingElement::generator(m, k, i);
                    check.expect(product.isZero(), "X_I != 0 at the degree cap");
                }
            }
        }
    }
    return {10, "ring axioms on monomials (m<=6)", check.ok, summary(check, "checks"), 0};
}

// 11. Generator relations and character orthonormality by full-group sums.
CriterionResult representationTheory(int mMax) {
    Check check;
    for (int m = 1; m <= std::min(mMax, 6); ++m) {
        std::string report;
        check.expect(verifyGeneratorRelations(m, &report), report);
        std::vector<std::vector<mpq_class>> gram = innerProductMatrix(m, m);
        for (int l = 0; l <= m; ++l) {
            for (int lp = 0; lp <= m; ++lp) {
                mpq_class expected = (l == lp) ? 1 : 0;
                check.expect(gram[static_cast<std::size_t>(l)][static_cast<std::size_t>(lp)] == expected,
                             "<chi_" + std::to_string(2 * l) + ",chi_" + std::to_string(2 * lp) +
                                 "> != " + expected.get_str() + " at m=" + std::to_string(m));
            }
        }
    }
    return {11, "Weyl relations and character orthonormality (m<=6)", check.ok, summary(check, "checks"), 0};
}

// 12. Randomized exact-point cross-checks.
CriterionResult randomizedCrossCheck(int mMax) {
    Check check;
    std::mt19937_64 rng(0x5eed5eedULL);
    for (int m = 1; m <= std::min(mMax, 5); ++m) {
        for (const CupDiagram& a : allDiagrams(m)) {
            for (int trial = 0; trial < 500; ++trial) {
                std::vector<SpherePoint> x = randomMemberOf(a, rng);
                check.expect(memberOf(x, a), "sampled point rejected on " + a.word());
            }
            // a corrupted coordinate must be rejected
            if (!a.cups().empty() || !a.rays().empty()) {
                std::vector<SpherePoint> x = randomMemberOf(a, rng);
                int v = a.cups().empty() ? a.rays().front() : a.cups().front().right;
                x[static_cast<std::size_t>(v - 1)] =
                    SpherePoint::fromStereographic(mpq_class(21), mpq_class(0));
                check.expect(!memberOf(x, a), "corrupted point accepted on " + a.word());
            }
        }
    }
    for (int m = 1; m <= std::min(mMax, 4); ++m) {
        std::vector<CupDiagram> diagrams = allDiagrams(m);
        for (const CupDiagram& a : diagrams) {
            for (const CupDiagram& b : diagrams) {
                std::vector<SpherePoint> x;
                for (int trial = 0; trial < 20; ++trial) {
                    if (!randomWitnessFamilyMember(a, b, rng, x)) break;
                    check.expect(memberOf(x, a) && memberOf(x, b),
                                 "witness family point escapes " + a.word() + " / " + b.word());
                }
            }
        }
    }
    return {12, "randomized exact membership cross-checks", check.ok, summary(check, "checks"), 0};
}

} // namespace

std::vector<CriterionResult> runAcceptanceSuite(int mMax) {
    using Clock = std::chrono::steady_clock;
    std::vector<CriterionResult (*)(int)> criteria{
        componentCounts,    exampleDiagrams, intersectionTheorem, exampleIntersections,
        orientationCounts,  pavingConsistency, lineDiagramGolden, betaGolden,
        linearIndependence, ringAxioms,      representationTheory, randomizedCrossCheck,
    };
    std::vector<CriterionResult> results;
    for (auto* criterion : criteria) {
        auto start = Clock::now();
        CriterionResult result = criterion(mMax);
        result.seconds = std::chrono::duration<double>(Clock::now() - start).count();
        results.push_back(std::move(result));
    }
    return results;
}

bool allPassed(const std::vector<CriterionResult>& results) {
    return std::all_of(results.begin(), results.end(),
                       [](const CriterionResult& r) { return r.passed; });
}

void printResults(const std::vector<CriterionResult>& results, std::ostream& os) {
    for (const CriterionResult& result : results) {
        std::ostringstream line;
        line << (result.passed ? "PASS" : "FAIL") << "  " << result.index << ". " << result.name
             << " [" << result.detail << "] (" << std::fixed << std::setprecision(2)
             << result.seconds << "s)";
        os << line.str() << "\n";
    }
    os << (allPassed(results) ? "all criteria passed" : "SOME CRITERIA FAILED") << "\n";
}

} // namespace exotic
