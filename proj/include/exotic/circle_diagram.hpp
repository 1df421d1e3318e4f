#pragma once

#include <gmpxx.h>

#include <array>
#include <cstdint>
#include <vector>

#include "exotic/cup_diagram.hpp"

namespace exotic {

enum class Side : std::uint8_t { Top, Bottom };
enum class EndKind : std::uint8_t { Ray, HalfCup };

struct LooseEnd {
    int vertex = 0;
    Side side = Side::Top;
    EndKind kind = EndKind::Ray;
    friend bool operator==(const LooseEnd&, const LooseEnd&) = default;
};

// One traversal component of a glued diagram: a closed circle or a line
// segment with exactly two loose ends.
struct Component {
    std::vector<int> vertices;        // ascending
    std::vector<int> parity;          // parity[i]: 2-coloring class of vertices[i]
    bool circle = false;
    std::array<LooseEnd, 2> ends{};   // valid iff !circle

    int leftmost() const { return vertices.front(); }
    bool propagating() const { return ends[0].side != ends[1].side; }
    bool rayRay() const { return ends[0].kind == EndKind::Ray && ends[1].kind == EndKind::Ray; }
    bool halfHalf() const {
        return ends[0].kind == EndKind::HalfCup && ends[1].kind == EndKind::HalfCup;
    }
};

// The diagram ā b: the reflection of `a` glued on top of `b`. Every vertex
// carries one top connection (from a) and one bottom connection (from b);
// cup arcs chain the vertices into circles and lines, half-cup and ray
// loose ends stay open.
class CircleDiagram {
public:
    CircleDiagram(CupDiagram top, CupDiagram bottom);  // throws SizeMismatch

    const CupDiagram& top() const { return top_; }
    const CupDiagram& bottom() const { return bottom_; }
    int vertexCount() const { return top_.vertexCount(); }

    // Sorted by leftmost vertex; forms a partition of {1..m}.
    const std::vector<Component>& components() const { return components_; }

    int circleCount() const;
    int halfHalfLineCount() const;

private:
    CupDiagram top_;
    CupDiagram bottom_;
    std::vector<Component> components_;
};

struct IntersectionReport {
    bool nonempty = false;
    int circles = 0;
    int hhLines = 0;  // lines whose two loose ends are both half-cups
    int K = 0;        // circles + hhLines
    mpz_class cohomologyDim;
    std::vector<std::vector<int>> offendingLines;  // non-propagating ray-ray lines
};

// Exact rational point on the unit sphere.
class SpherePoint {
public:
    SpherePoint(mpq_class a, mpq_class b, mpq_class c);  // throws BadPoint unless a²+b²+c²=1

    static SpherePoint northPole() { return {0, 0, 1}; }
    // Deterministic seed for free components, the simplest rational unit
    // point distinct from ±p.
    static SpherePoint seed() { return {1, 0, 0}; }
    // Inverse stereographic projection of a rational point (u,v); never
    // yields the north pole.
    static SpherePoint fromStereographic(const mpq_class& u, const mpq_class& v);

    SpherePoint operator-() const { return {-a_, -b_, -c_}; }
    friend bool operator==(const SpherePoint&, const SpherePoint&) = default;

    const mpq_class& x() const { return a_; }
    const mpq_class& y() const { return b_; }
    const mpq_class& z() const { return c_; }

private:
    mpq_class a_, b_, c_;
};

CircleDiagram glue(const CupDiagram& a, const CupDiagram& b);

// Thm-4.8 criterion: nonempty iff every ray-ray line propagates; then the
// intersection is (S²)^K.
IntersectionReport intersect(const CupDiagram& a, const CupDiagram& b);

// All weights orienting both diagrams: opposite symbols across every cup
// of either diagram, ∧ at every ray of either diagram, free at vertices
// carrying only half-cups. Sorted lexicographically ('^' < 'v'); size is
// 2^K when the intersection is nonempty and 0 otherwise.
std::vector<Weight> orientations(const CupDiagram& a, const CupDiagram& b);

// Per component (in CircleDiagram order): oriented clockwise iff the
// leftmost vertex of the component carries ∧.
std::vector<bool> componentClockwise(const CircleDiagram& diagram, const Weight& gamma);

// dim K_m = Σ over ordered pairs (a,b) of 𝔹^{((k),(m-k))}² of the number
// of weights orienting both.
mpz_class kmDimension(int m, int k);

struct WitnessResult {
    bool found = false;
    std::vector<SpherePoint> points;   // size m when found
    std::vector<int> offendingLine;    // first inconsistent ray-ray line otherwise
};

// Exact rational point of S_a ∩ S_b built by sign propagation: north pole
// at ray-forced components, seed (1,0,0) at the leftmost vertex of each
// free component. The result is checked against both membership relations
// before it is returned.
WitnessResult witnessPoint(const CupDiagram& a, const CupDiagram& b);

// x ∈ S_a: x_j = -x_i for every cup i—j and x_i = north pole for every ray.
bool memberOf(const std::vector<SpherePoint>& x, const CupDiagram& a);

} // namespace exotic
