#include "exotic/render.hpp"

#include <algorithm>
#include <cmath>
#include <iomanip>
#include <sstream>

namespace exotic {

namespace {

std::string num(double value) {
    std::ostringstream os;
    os << std::fixed << std::setprecision(2) << value;
    std::string s = os.str();
    // trim trailing zeros for stable, compact output
    while (s.find('.') != std::string::npos && (s.back() == '0' || s.back() == '.')) {
        bool dot = s.back() == '.';
        s.pop_back();
        if (dot) break;
    }
    return s.empty() || s == "-0" ? "0" : s;
}

double cupDepth(const Cup& cup, double height) {
    return std::min(0.35 + 0.2 * (cup.right - cup.left), height - 0.2);
}

// exit height of the r-th half-cup from the left, counted from the open
// edge of the rectangle: earlier half-cups pass lower
double halfCupExit(std::size_t index, std::size_t count, double height) {
    double step = count > 1 ? std::min(0.3, (height - 0.5) / static_cast<double>(count - 1)) : 0.0;
    return -height + 0.25 + step * static_cast<double>(index);
}

struct Dots {
    bool enabled = false;
    const EnrichedCupDiagram* diagram = nullptr;
    bool at(int vertex) const { return enabled && diagram->dottedAt(vertex); }
};

void tikzHalf(std::ostringstream& os, const CupDiagram& d, double ySign, double height, const Dots& dots) {
    // ySign +1 draws below the vertex line (a bottom diagram), -1 above
    const int m = d.vertexCount();
    const double right = m + 0.5;
    for (const Cup& cup : d.cups()) {
        double depth = cupDepth(cup, height) * ySign;
        os << "\\draw[thick] (" << cup.left << ",0) .. controls +(0," << num(-depth)
           << ") and +(0," << num(-depth) << ") .. (" << cup.right << ",0);\n";
        if (dots.at(cup.left)) {
            double mid = (cup.left + cup.right) / 2.0;
            os << "\\draw (" << num(mid) << "," << num(-0.75 * depth) << ") circle (3pt);\n";
        }
    }
    for (int ray : d.rays()) {
        os << "\\draw[thick] (" << ray << ",0) -- (" << ray << "," << num(-height * ySign) << ");\n";
        if (dots.at(ray))
            os << "\\draw (" << ray << "," << num(-height * ySign / 2.0) << ") circle (3pt);\n";
    }
    const auto& halves = d.halfCups();
    for (std::size_t r = 0; r < halves.size(); ++r) {
        double exitY = halfCupExit(r, halves.size(), height) * ySign;
        os << "\\draw[thick] (" << halves[r] << ",0) to[out=" << (ySign > 0 ? 270 : 90)
           << ",in=180] (" << num(right) << "," << num(exitY) << ");\n";
        if (dots.at(halves[r]))
            os << "\\draw (" << num(halves[r] + 0.45) << "," << num(exitY * 0.7) << ") circle (3pt);\n";
    }
}

std::string tikzDiagram(const CupDiagram& d, const Dots& dots) {
    const int m = d.vertexCount();
    const double height = 1.2;
    std::ostringstream os;
    os << "\\begin{tikzpicture}[scale=0.8,baseline={(0,-0.5)}]\n";
    os << "\\draw[dotted] (0.5," << num(-height) << ") -- (" << num(m + 0.5) << "," << num(-height)
       << ") -- (" << num(m + 0.5) << ",0) -- (0.5,0) -- cycle;\n";
    for (int v = 1; v <= m; ++v) {
        os << "\\node[above] at (" << v << ",0) {$" << v << "$};\n";
        os << "\\fill (" << v << ",0) circle (2pt);\n";
    }
    tikzHalf(os, d, +1.0, height, dots);
    os << "\\end{tikzpicture}\n";
    return os.str();
}

void svgHalf(std::ostringstream& os, const CupDiagram& d, double yBase, double ySign, double height,
             double unit, const Dots& dots) {
    const int m = d.vertexCount();
    auto X = [&](double x) { return num(unit * x); };
    auto Y = [&](double y) { return num(yBase + ySign * unit * y); };
    for (const Cup& cup : d.cups()) {
        double depth = cupDepth(cup, height);
        os << "  <path d=\"M " << X(cup.left) << " " << Y(0) << " C " << X(cup.left) << " " << Y(depth)
           << ", " << X(cup.right) << " " << Y(depth) << ", " << X(cup.right) << " " << Y(0)
           << "\" fill=\"none\" stroke=\"black\" stroke-width=\"2\"/>\n";
        if (dots.at(cup.left)) {
            double mid = (cup.left + cup.right) / 2.0;
            os << "  <circle cx=\"" << X(mid) << "\" cy=\"" << Y(0.75 * depth)
               << "\" r=\"4\" fill=\"white\" stroke=\"black\" stroke-width=\"1.5\"/>\n";
        }
    }
    for (int ray : d.rays()) {
        os << "  <line x1=\"" << X(ray) << "\" y1=\"" << Y(0) << "\" x2=\"" << X(ray) << "\" y2=\""
           << Y(height) << "\" stroke=\"black\" stroke-width=\"2\"/>\n";
        if (dots.at(ray))
            os << "  <circle cx=\"" << X(ray) << "\" cy=\"" << Y(height / 2.0)
               << "\" r=\"4\" fill=\"white\" stroke=\"black\" stroke-width=\"1.5\"/>\n";
    }
    const auto& halves = d.halfCups();
    for (std::size_t r = 0; r < halves.size(); ++r) {
        double exitY = -halfCupExit(r, halves.size(), height);
        os << "  <path d=\"M " << X(halves[r]) << " " << Y(0) << " C " << X(halves[r]) << " "
           << Y(exitY) << ", " << X(halves[r] + 0.4) << " " << Y(exitY) << ", " << X(m + 0.5) << " "
           << Y(exitY) << "\" fill=\"none\" stroke=\"black\" stroke-width=\"2\"/>\n";
        if (dots.at(halves[r]))
            os << "  <circle cx=\"" << X(halves[r] + 0.45) << "\" cy=\"" << Y(exitY * 0.8)
               << "\" r=\"4\" fill=\"white\" stroke=\"black\" stroke-width=\"1.5\"/>\n";
    }
}

std::string svgDiagram(const CupDiagram& d, const Dots& dots) {
    const int m = d.vertexCount();
    const double unit = 40.0;
    const double height = 1.2;
    const double width = unit * (m + 1);
    const double top = 30.0;
    const double bottom = top + unit * height;
    std::ostringstream os;
    os << "<svg xmlns=\"http://www.w3.org/2000/svg\" width=\"" << num(width + 10) << "\" height=\""
       << num(bottom + 10) << "\" viewBox=\"0 0 " << num(width + 10) << " " << num(bottom + 10)
       << "\">\n";
    os << "  <rect x=\"" << num(unit * 0.5) << "\" y=\"" << num(top) << "\" width=\"" << num(unit * m)
       << "\" height=\"" << num(unit * height)
       << "\" fill=\"none\" stroke=\"black\" stroke-dasharray=\"2,3\"/>\n";
    for (int v = 1; v <= m; ++v) {
        os << "  <text x=\"" << num(unit * v) << "\" y=\"" << num(top - 8)
           << "\" text-anchor=\"middle\" font-size=\"14\">" << v << "</text>\n";
        os << "  <circle cx=\"" << num(unit * v) << "\" cy=\"" << num(top) << "\" r=\"3\" fill=\"black\"/>\n";
    }
    svgHalf(os, d, top, +1.0, height, unit, dots);
    os << "</svg>\n";
    return os.str();
}

} // namespace

std::string renderTikz(const CupDiagram& diagram) {
    return tikzDiagram(diagram, Dots{});
}

std::string renderTikz(const EnrichedCupDiagram& diagram) {
    return tikzDiagram(diagram.base, Dots{true, &diagram});
}

std::string renderCircleTikz(const CupDiagram& a, const CupDiagram& b) {
    if (a.vertexCount() != b.vertexCount())
        fail(ErrorKind::SizeMismatch, "cannot glue diagrams of different sizes");
    const int m = a.vertexCount();
    const double height = 1.2;
    std::ostringstream os;
    os << "\\begin{tikzpicture}[scale=0.8,baseline={(0,0)}]\n";
    os << "\\draw[dotted] (0.5," << num(-height) << ") -- (" << num(m + 0.5) << "," << num(-height)
       << ") -- (" << num(m + 0.5) << "," << num(height) << ") -- (0.5," << num(height)
       << ") -- cycle;\n";
    os << "\\draw[dotted] (0.5,0) -- (" << num(m + 0.5) << ",0);\n";
    for (int v = 1; v <= m; ++v) os << "\\fill (" << v << ",0) circle (2pt);\n";
    tikzHalf(os, a, -1.0, height, Dots{});  // reflected copy of a on top
    tikzHalf(os, b, +1.0, height, Dots{});
    os << "\\end{tikzpicture}\n";
    return os.str();
}

std::string renderSvg(const CupDiagram& diagram) {
    return svgDiagram(diagram, Dots{});
}

std::string renderSvg(const EnrichedCupDiagram& diagram) {
    return svgDiagram(diagram.base, Dots{true, &diagram});
}

std::string renderCircleSvg(const CupDiagram& a, const CupDiagram& b) {
    if (a.vertexCount() != b.vertexCount())
        fail(ErrorKind::SizeMismatch, "cannot glue diagrams of different sizes");
    const int m = a.vertexCount();
    const double unit = 40.0;
    const double height = 1.2;
    const double width = unit * (m + 1);
    const double middle = 20.0 + unit * height;
    std::ostringstream os;
    os << "<svg xmlns=\"http://www.w3.org/2000/svg\" width=\"" << num(width + 10) << "\" height=\""
       << num(2 * middle) << "\" viewBox=\"0 0 " << num(width + 10) << " " << num(2 * middle)
       << "\">\n";
    os << "  <rect x=\"" << num(unit * 0.5) << "\" y=\"" << num(middle - unit * height) << "\" width=\""
       << num(unit * m) << "\" height=\"" << num(2 * unit * height)
       << "\" fill=\"none\" stroke=\"black\" stroke-dasharray=\"2,3\"/>\n";
    os << "  <line x1=\"" << num(unit * 0.5) << "\" y1=\"" << num(middle) << "\" x2=\""
       << num(unit * 0.5 + unit * m) << "\" y2=\"" << num(middle)
       << "\" stroke=\"black\" stroke-dasharray=\"2,3\"/>\n";
    for (int v = 1; v <= m; ++v)
        os << "  <circle cx=\"" << num(unit * v) << "\" cy=\"" << num(middle)
           << "\" r=\"3\" fill=\"black\"/>\n";
    svgHalf(os, a, middle, -1.0, height, unit, Dots{});
    svgHalf(os, b, middle, +1.0, height, unit, Dots{});
    os << "</svg>\n";
    return os.str();
}

} // namespace exotic
