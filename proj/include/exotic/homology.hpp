#pragma once

#include <gmpxx.h>

#include <map>
#include <set>
#include <string>
#include <vector>

#include "exotic/cup_diagram.hpp"

namespace exotic {

/*
 * A cup diagram decorated with dots: cups and half-cups optionally, rays
 * always. Each component is addressed by its defining vertex (left cup
 * endpoint, ray vertex, or half-cup vertex). Homological degree is twice
 * the number of undotted cups plus undotted half-cups.
 *
 * Text format: the base word with '.' appended at each dotted component's
 * defining vertex, e.g. "()|.|." is the cup (1,2) with dotted rays 3, 4.
 */
struct EnrichedCupDiagram {
    CupDiagram base;
    std::set<int> dotted;  // defining vertices of dotted components

    // Throws BadIndex for non-defining vertices and NotStandard when a
    // ray is left undotted.
    static EnrichedCupDiagram make(CupDiagram base, std::set<int> dotted);
    static EnrichedCupDiagram parse(const std::string& word);

    bool dottedAt(int definingVertex) const { return dotted.count(definingVertex) > 0; }
    int undottedCups() const;
    int undottedHalfCups() const;
    int degree() const { return 2 * (undottedCups() + undottedHalfCups()); }

    std::string word() const;

    friend bool operator==(const EnrichedCupDiagram&, const EnrichedCupDiagram&) = default;
};

std::ostream& operator<<(std::ostream& os, const EnrichedCupDiagram& diagram);

// Integer combination of line diagrams l_U, U ⊆ {1..m}. Zero coefficients
// are never stored.
class LineDiagramVector {
public:
    explicit LineDiagramVector(int m) : m_(m) {}

    int lineCount() const { return m_; }
    void add(const std::vector<int>& U, const mpz_class& coefficient);
    const mpz_class& coefficient(const std::vector<int>& U) const;  // 0 if absent
    const std::map<std::vector<int>, mpz_class>& terms() const { return terms_; }
    bool empty() const { return terms_.empty(); }

    // 2|U| when every stored U has the same size, -1 otherwise.
    int homogeneousDegree() const;

    std::string toString() const;

    friend bool operator==(const LineDiagramVector&, const LineDiagramVector&) = default;

private:
    int m_;
    std::map<std::vector<int>, mpz_class> terms_;
};

std::ostream& operator<<(std::ostream& os, const LineDiagramVector& v);

// L_M = Σ_{U ∈ 𝒰_M} (-1)^{Λ_M(U)} l_U, where 𝒰_M picks one endpoint per
// undotted cup and always contains every undotted half-cup vertex, and
// Λ_M(U) counts right cup endpoints in U.
LineDiagramVector lineDiagramSum(const EnrichedCupDiagram& M);

// β^{((k),(m-k))} on a ∈ 𝔹^{((m-l),(l))}: move the m-l-k largest left-row
// entries of the bitableau of `a` into the opener set, rebuild, dot all
// rays and every component headed by a moved vertex. Throws DegreeTooLarge
// when a has more than m-k cups plus half-cups.
EnrichedCupDiagram betaMap(const CupDiagram& a, int k);

// The image of β over l = 0..m-k, i.e. all standard enriched cup diagrams;
// ordered by degree, then by the enumeration order of the preimages.
// Cardinality Σ_l C(m,l).
std::vector<EnrichedCupDiagram> standardEnriched(int m, int k);

// Exact rank of the matrix of {L_M : M standard of degree 2l} expressed in
// the basis of size-l subsets (lexicographic columns). Always C(m,l).
int rankCheck(int m, int k, int l);

// [b_0, b_2, ..., b_{2(m-k)}] = [C(m,0), ..., C(m,m-k)]; odd Betti numbers
// vanish and are not stored.
std::vector<mpz_class> bettiNumbers(int m, int k);

} // namespace exotic
