#pragma once

#include <cstdint>
#include <iosfwd>
#include <string>
#include <vector>

#include "exotic/error.hpp"

namespace exotic {

enum class VertexKind : std::uint8_t { Cup, Ray, HalfCup };

// Unvalidated per-vertex connection data. `partner` is the 1-based cup
// partner and is ignored unless kind == Cup.
struct RawConnection {
    VertexKind kind = VertexKind::Ray;
    int partner = 0;
    friend bool operator==(const RawConnection&, const RawConnection&) = default;
};

struct Cup {
    int left = 0;
    int right = 0;
    friend bool operator==(const Cup&, const Cup&) = default;
};

/*
 * A one-boundary cup diagram on m vertices. Every vertex is the endpoint of
 * exactly one cup, ray or half-cup, the cups are noncrossing, no ray or
 * half-cup sits strictly inside a cup span, and no ray lies to the right of
 * a half-cup. Diagrams compare equal by connection data alone.
 *
 * Text format, one character per vertex:
 *   '('  left cup endpoint      ')'  right cup endpoint
 *   '|'  ray                    '>'  half-cup
 * Noncrossing makes bracket matching unambiguous, so the word determines
 * the diagram.
 */
class CupDiagram {
public:
    // Checks all invariants and throws Error (Crossing, DanglingCup,
    // RayInsideCup, HalfCupInsideCup, RayRightOfHalfCup, BadIndex) naming
    // the first violated one.
    static CupDiagram validate(const std::vector<RawConnection>& table);

    static CupDiagram parse(const std::string& word);

    // Bracket matching against an opener set: scanning left to right, an
    // opener is pushed; a non-opener closes the innermost open opener (cup)
    // or becomes a ray if none is open; openers never closed are half-cups.
    static CupDiagram fromOpeners(int m, const std::vector<int>& openers);

    int vertexCount() const { return m_; }
    VertexKind kindAt(int vertex) const;
    // Partner vertex of a cup endpoint, 0 otherwise.
    int cupPartner(int vertex) const;

    const std::vector<Cup>& cups() const { return cups_; }           // by left endpoint
    const std::vector<int>& rays() const { return rays_; }           // ascending
    const std::vector<int>& halfCups() const { return halfCups_; }   // ascending

    // Left cup endpoints plus half-cup vertices, ascending.
    std::vector<int> openers() const;

    int cupsPlusHalfCups() const { return static_cast<int>(cups_.size() + halfCups_.size()); }

    std::string word() const;

    friend bool operator==(const CupDiagram&, const CupDiagram&) = default;
    bool operator<(const CupDiagram& other) const;

private:
    CupDiagram() = default;

    int m_ = 0;
    std::vector<RawConnection> connection_;  // index v-1
    std::vector<Cup> cups_;
    std::vector<int> rays_;
    std::vector<int> halfCups_;
};

std::ostream& operator<<(std::ostream& os, const CupDiagram& diagram);

// A word over {∧,∨}, stored as '^' and 'v'. Indexes torus fixed points.
class Weight {
public:
    explicit Weight(std::string symbols);
    static Weight parse(const std::string& text) { return Weight(text); }

    int length() const { return static_cast<int>(symbols_.size()); }
    bool up(int vertex) const;    // true iff ∧ at the 1-based position
    int upCount() const;
    // Membership in W^{((k),(m-k))}: at least k ∧'s.
    bool hasType(int k) const { return upCount() >= k; }

    const std::string& text() const { return symbols_; }

    friend bool operator==(const Weight&, const Weight&) = default;
    bool operator<(const Weight& other) const { return symbols_ < other.symbols_; }

private:
    std::string symbols_;
};

std::ostream& operator<<(std::ostream& os, const Weight& weight);

// One-row bitableau: a set partition of {1..m} into two strictly
// increasing rows.
struct Bitableau {
    std::vector<int> left;
    std::vector<int> right;

    // Throws NotStandard unless the rows are strictly increasing and
    // together partition {1..m}.
    static Bitableau standard(std::vector<int> left, std::vector<int> right);

    int size() const { return static_cast<int>(left.size() + right.size()); }
    friend bool operator==(const Bitableau&, const Bitableau&) = default;
};

// Symbolic relation a cup diagram imposes on the flags of its component.
//   CupRelation  (cup i—j):  F_j = z^{-power} F_{i-1},  power = (j-i+1)/2
//   RayRelation  (ray at i): F_i = F_{i-1} + span(e_basisIndex),
//                            basisIndex = (i + rho_a(i))/2
// Half-cups impose nothing.
struct FlagConstraint {
    enum class Type { CupRelation, RayRelation };
    Type type = Type::RayRelation;
    int i = 0;
    int j = 0;           // cup right endpoint; unused for rays
    int power = 0;       // cup relations only
    int basisIndex = 0;  // ray relations only
    friend bool operator==(const FlagConstraint&, const FlagConstraint&) = default;
};

std::string toString(const FlagConstraint& constraint);

// All of 𝔹^{((k),(m-k))}: diagrams with m-k cups plus half-cups, in
// lexicographic order of the opener set. Cardinality C(m, m-k).
std::vector<CupDiagram> enumerateDiagrams(int m, int k);

// All weights of length m with at least k ∧'s, lexicographic ('^' < 'v').
std::vector<Weight> enumerateWeights(int m, int k);

// Bijection with standard bitableaux: right row = opener set.
Bitableau toBitableau(const CupDiagram& a);
// Inverse via bracket matching. If expectedK >= 0, throws ShapeMismatch
// unless the left row has exactly expectedK entries.
CupDiagram fromBitableau(const Bitableau& t, int expectedK = -1);

// C(α): match ∨∧ pairs into cups, leftover ∧ become rays, leftover ∨
// become half-cups.
CupDiagram cupFromWeight(const Weight& alpha);

// ρ_a(i): number of rays at positions <= i. Throws NotARay unless vertex i
// carries a ray.
int rayCount(const CupDiagram& a, int vertex);

// One CupRelation per cup and one RayRelation per ray, in vertex order of
// the defining endpoint. The parities (j-i+1 even, i+rho even) always hold
// for valid diagrams and are asserted.
std::vector<FlagConstraint> componentConstraints(const CupDiagram& a);

// 2·Σ_{i≥1}(i-1)(λ_i+μ_i) + |μ| for a bipartition (λ,μ). Rows must be
// weakly decreasing and nonnegative; trailing zeros are ignored.
long long springerFiberDimension(const std::vector<long long>& lambda,
                                 const std::vector<long long>& mu);

} // namespace exotic
