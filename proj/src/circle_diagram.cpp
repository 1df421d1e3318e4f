#include "exotic/circle_diagram.hpp"

#include <algorithm>
#include <cassert>
#include <map>

namespace exotic {

namespace {

struct PortEdge {
    bool loose = false;
    int partner = 0;      // when !loose
    EndKind kind = EndKind::Ray;  // when loose
};

PortEdge portEdge(const CupDiagram& d, int vertex) {
    switch (d.kindAt(vertex)) {
        case VertexKind::Cup: return {false, d.cupPartner(vertex), EndKind::Ray};
        case VertexKind::Ray: return {true, 0, EndKind::Ray};
        case VertexKind::HalfCup: return {true, 0, EndKind::HalfCup};
    }
    return {};
}

} // namespace

CircleDiagram::CircleDiagram(CupDiagram top, CupDiagram bottom)
    : top_(std::move(top)), bottom_(std::move(bottom)) {
    if (top_.vertexCount() != bottom_.vertexCount())
        fail(ErrorKind::SizeMismatch, "cannot glue diagrams on " + std::to_string(top_.vertexCount()) +
                                          " and " + std::to_string(bottom_.vertexCount()) + " vertices");
    const int m = top_.vertexCount();
    std::vector<bool> visited(m + 1, false);
    std::vector<int> parity(m + 1, 0);

    // Walk from (v, side); each cup arc moves to its partner vertex and
    // flips the working side, alternating the 2-coloring parity.
    auto walk = [&](int v0, Side side0, std::vector<int>& out, std::array<LooseEnd, 2>& ends,
                    int& endCount) -> bool {
        int cur = v0;
        Side side = side0;
        while (true) {
            PortEdge edge = portEdge(side == Side::Top ? top_ : bottom_, cur);
            if (edge.loose) {
                ends[endCount++] = LooseEnd{cur, side, edge.kind};
                return false;
            }
            int next = edge.partner;
            Side nextSide = (side == Side::Top) ? Side::Bottom : Side::Top;
            if (next == v0 && nextSide == side0) return true;  // closed up: circle
            parity[next] = parity[cur] ^ 1;
            visited[next] = true;
            out.push_back(next);
            cur = next;
            side = nextSide;
        }
    };

    for (int v = 1; v <= m; ++v) {
        if (visited[v]) continue;
        visited[v] = true;
        parity[v] = 0;
        std::vector<int> vertices{v};
        std::array<LooseEnd, 2> ends{};
        int endCount = 0;
        Component comp;
        if (walk(v, Side::Top, vertices, ends, endCount)) {
            comp.circle = true;
        } else {
            bool closed = walk(v, Side::Bottom, vertices, ends, endCount);
            assert(!closed && endCount == 2);
            (void)closed;
            comp.ends = ends;
            auto endKey = [](const LooseEnd& e) { return std::make_pair(e.vertex, e.side == Side::Bottom); };
            if (endKey(comp.ends[1]) < endKey(comp.ends[0])) std::swap(comp.ends[0], comp.ends[1]);
        }
        std::sort(vertices.begin(), vertices.end());
        vertices.erase(std::unique(vertices.begin(), vertices.end()), vertices.end());
        comp.vertices = vertices;
        comp.parity.reserve(vertices.size());
        for (int u : vertices) comp.parity.push_back(parity[u]);
        assert(!comp.circle || comp.vertices.size() % 2 == 0);
        components_.push_back(std::move(comp));
    }
    std::sort(components_.begin(), components_.end(),
              [](const Component& lhs, const Component& rhs) { return lhs.leftmost() < rhs.leftmost(); });
}

int CircleDiagram::circleCount() const {
    int n = 0;
    for (const Component& c : components_) n += c.circle ? 1 : 0;
    return n;
}

int CircleDiagram::halfHalfLineCount() const {
    int n = 0;
    for (const Component& c : components_) n += (!c.circle && c.halfHalf()) ? 1 : 0;
    return n;
}

SpherePoint::SpherePoint(mpq_class a, mpq_class b, mpq_class c)
    : a_(std::move(a)), b_(std::move(b)), c_(std::move(c)) {
    a_.canonicalize();
    b_.canonicalize();
    c_.canonicalize();
    if (a_ * a_ + b_ * b_ + c_ * c_ != 1)
        fail(ErrorKind::BadPoint, "(" + a_.get_str() + "," + b_.get_str() + "," + c_.get_str() +
                                      ") is not on the unit sphere");
}

SpherePoint SpherePoint::fromStereographic(const mpq_class& u, const mpq_class& v) {
    mpq_class n = u * u + v * v;
    mpq_class den = n + 1;
    return SpherePoint(2 * u / den, 2 * v / den, (n - 1) / den);
}

CircleDiagram glue(const CupDiagram& a, const CupDiagram& b) {
    return CircleDiagram(a, b);
}

IntersectionReport intersect(const CupDiagram& a, const CupDiagram& b) {
    CircleDiagram diagram = glue(a, b);
    IntersectionReport report;
    for (const Component& comp : diagram.components()) {
        if (comp.circle) {
            ++report.circles;
        } else if (comp.halfHalf()) {
            ++report.hhLines;
        } else if (comp.rayRay() && !comp.propagating()) {
            report.offendingLines.push_back(comp.vertices);
        }
    }
    report.nonempty = report.offendingLines.empty();
    report.K = report.circles + report.hhLines;
    if (report.nonempty) {
        report.cohomologyDim = 1;
        mpz_mul_2exp(report.cohomologyDim.get_mpz_t(), report.cohomologyDim.get_mpz_t(),
                     static_cast<unsigned long>(report.K));
    } else {
        report.cohomologyDim = 0;
    }
    return report;
}

namespace {

// Per component, the admissible symbols at its parity-0 vertices:
// rays pin the coloring, otherwise both choices remain.
struct ComponentChoices {
    bool consistent = true;
    std::vector<char> baseSymbols;  // symbol at parity-0 vertices, '^' or 'v'
};

ComponentChoices componentChoices(const Component& comp) {
    ComponentChoices result;
    if (comp.circle) {
        result.baseSymbols = {'^', 'v'};
        return result;
    }
    int forcedBase = -1;  // 0: parity-0 carries '^', 1: parity-1 carries '^'
    for (const LooseEnd& end : comp.ends) {
        if (end.kind != EndKind::Ray) continue;
        auto it = std::lower_bound(comp.vertices.begin(), comp.vertices.end(), end.vertex);
        int par = comp.parity[static_cast<std::size_t>(it - comp.vertices.begin())];
        if (forcedBase == -1) {
            forcedBase = par;
        } else if (forcedBase != par) {
            result.consistent = false;
            return result;
        }
    }
    if (forcedBase == -1) {
        result.baseSymbols = {'^', 'v'};
    } else {
        result.baseSymbols = {forcedBase == 0 ? '^' : 'v'};
    }
    return result;
}

} // namespace

std::vector<Weight> orientations(const CupDiagram& a, const CupDiagram& b) {
    CircleDiagram diagram = glue(a, b);
    const int m = diagram.vertexCount();

    std::vector<ComponentChoices> choices;
    for (const Component& comp : diagram.components()) {
        choices.push_back(componentChoices(comp));
        if (!choices.back().consistent) return {};
    }

    std::vector<Weight> result;
    std::string symbols(static_cast<std::size_t>(m), '^');
    auto emit = [&](auto&& self, std::size_t idx) -> void {
        if (idx == choices.size()) {
            result.emplace_back(symbols);
            return;
        }
        const Component& comp = diagram.components()[idx];
        for (char base : choices[idx].baseSymbols) {
            for (std::size_t i = 0; i < comp.vertices.size(); ++i) {
                bool sameAsBase = comp.parity[i] == 0;
                char symbol = sameAsBase ? base : (base == '^' ? 'v' : '^');
                symbols[static_cast<std::size_t>(comp.vertices[i] - 1)] = symbol;
            }
            self(self, idx + 1);
        }
    };
    emit(emit, 0);
    std::sort(result.begin(), result.end());
    return result;
}

std::vector<bool> componentClockwise(const CircleDiagram& diagram, const Weight& gamma) {
    if (gamma.length() != diagram.vertexCount())
        fail(ErrorKind::SizeMismatch, "weight length does not match diagram");
    std::vector<bool> clockwise;
    clockwise.reserve(diagram.components().size());
    for (const Component& comp : diagram.components())
        clockwise.push_back(gamma.up(comp.leftmost()));
    return clockwise;
}

mpz_class kmDimension(int m, int k) {
    std::vector<CupDiagram> diagrams = enumerateDiagrams(m, k);
    mpz_class total = 0;
    for (const CupDiagram& a : diagrams) {
        for (const CupDiagram& b : diagrams) {
            total += intersect(a, b).cohomologyDim;
        }
    }
    return total;
}

WitnessResult witnessPoint(const CupDiagram& a, const CupDiagram& b) {
    CircleDiagram diagram = glue(a, b);
    const int m = diagram.vertexCount();
    WitnessResult result;

    const SpherePoint p = SpherePoint::northPole();
    const SpherePoint q = SpherePoint::seed();
    std::vector<SpherePoint> points(static_cast<std::size_t>(m), p);

    for (const Component& comp : diagram.components()) {
        int forcedBase = -1;
        if (!comp.circle) {
            for (const LooseEnd& end : comp.ends) {
                if (end.kind != EndKind::Ray) continue;
                auto it = std::lower_bound(comp.vertices.begin(), comp.vertices.end(), end.vertex);
                int par = comp.parity[static_cast<std::size_t>(it - comp.vertices.begin())];
                if (forcedBase == -1) {
                    forcedBase = par;
                } else if (forcedBase != par) {
                    result.found = false;
                    result.offendingLine = comp.vertices;
                    return result;
                }
            }
        }
        // forced components alternate ±p from the ray; free ones ±q from
        // their leftmost vertex
        SpherePoint base = (forcedBase >= 0) ? p : q;
        int basePar = (forcedBase >= 0) ? forcedBase : comp.parity.front();
        for (std::size_t i = 0; i < comp.vertices.size(); ++i) {
            SpherePoint value = (comp.parity[i] == basePar) ? base : -base;
            points[static_cast<std::size_t>(comp.vertices[i] - 1)] = value;
        }
    }

    if (!memberOf(points, a) || !memberOf(points, b))
        fail(ErrorKind::BadPoint, "constructed witness fails membership; internal invariant broken");

    result.found = true;
    result.points = std::move(points);
    return result;
}

bool memberOf(const std::vector<SpherePoint>& x, const CupDiagram& a) {
    if (static_cast<int>(x.size()) != a.vertexCount())
        fail(ErrorKind::SizeMismatch, "point tuple has " + std::to_string(x.size()) +
                                          " entries for a diagram on " +
                                          std::to_string(a.vertexCount()) + " vertices");
    for (const Cup& cup : a.cups()) {
        if (!(x[static_cast<std::size_t>(cup.right - 1)] == -x[static_cast<std::size_t>(cup.left - 1)]))
            return false;
    }
    const SpherePoint p = SpherePoint::northPole();
    for (int ray : a.rays()) {
        if (!(x[static_cast<std::size_t>(ray - 1)] == p)) return false;
    }
    return true;
}

} // namespace exotic
