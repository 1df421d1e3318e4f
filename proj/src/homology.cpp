#include "exotic/homology.hpp"

#include <algorithm>
#include <ostream>
#include <sstream>

#include "exotic/exact_linalg.hpp"
#include "exotic/numeric.hpp"

namespace exotic {

namespace {

bool isDefiningVertex(const CupDiagram& d, int vertex) {
    switch (d.kindAt(vertex)) {
        case VertexKind::Cup: return d.cupPartner(vertex) > vertex;  // left endpoint
        case VertexKind::Ray:
        case VertexKind::HalfCup: return true;
    }
    return false;
}

} // namespace

EnrichedCupDiagram EnrichedCupDiagram::make(CupDiagram base, std::set<int> dotted) {
    for (int v : dotted) {
        if (v < 1 || v > base.vertexCount() || !isDefiningVertex(base, v))
            fail(ErrorKind::BadIndex, "vertex " + std::to_string(v) + " does not head a component");
    }
    for (int ray : base.rays()) {
        if (dotted.count(ray) == 0)
            fail(ErrorKind::NotStandard, "ray " + std::to_string(ray) + " must carry a dot");
    }
    return EnrichedCupDiagram{std::move(base), std::move(dotted)};
}

EnrichedCupDiagram EnrichedCupDiagram::parse(const std::string& word) {
    std::string bare;
    std::set<int> dotted;
    for (std::size_t pos = 0; pos < word.size(); ++pos) {
        if (word[pos] == '.') {
            if (bare.empty())
                fail(ErrorKind::ParseError, "'.' with no preceding vertex");
            char prev = bare.back();
            if (prev != '(' && prev != '|' && prev != '>')
                fail(ErrorKind::ParseError,
                     "'.' may only follow a component's defining vertex ('(', '|' or '>')");
            if (!dotted.insert(static_cast<int>(bare.size())).second)
                fail(ErrorKind::ParseError, "repeated '.' on one vertex");
        } else {
            bare.push_back(word[pos]);
        }
    }
    return make(CupDiagram::parse(bare), std::move(dotted));
}

int EnrichedCupDiagram::undottedCups() const {
    int n = 0;
    for (const Cup& cup : base.cups()) n += dottedAt(cup.left) ? 0 : 1;
    return n;
}

int EnrichedCupDiagram::undottedHalfCups() const {
    int n = 0;
    for (int v : base.halfCups()) n += dottedAt(v) ? 0 : 1;
    return n;
}

std::string EnrichedCupDiagram::word() const {
    std::string bare = base.word();
    std::string result;
    for (int v = 1; v <= base.vertexCount(); ++v) {
        result.push_back(bare[static_cast<std::size_t>(v - 1)]);
        if (dottedAt(v)) result.push_back('.');
    }
    return result;
}

std::ostream& operator<<(std::ostream& os, const EnrichedCupDiagram& diagram) {
    return os << diagram.word();
}

void LineDiagramVector::add(const std::vector<int>& U, const mpz_class& coefficient) {
    if (coefficient == 0) return;
    for (int v : U) {
        if (v < 1 || v > m_)
            fail(ErrorKind::BadIndex, "line " + std::to_string(v) + " is outside 1.." + std::to_string(m_));
    }
    auto [it, inserted] = terms_.try_emplace(U, coefficient);
    if (!inserted) {
        it->second += coefficient;
        if (it->second == 0) terms_.erase(it);
    }
}

const mpz_class& LineDiagramVector::coefficient(const std::vector<int>& U) const {
    static const mpz_class zero = 0;
    auto it = terms_.find(U);
    return it == terms_.end() ? zero : it->second;
}

int LineDiagramVector::homogeneousDegree() const {
    int size = -1;
    for (const auto& [U, c] : terms_) {
        if (size == -1) size = static_cast<int>(U.size());
        else if (size != static_cast<int>(U.size())) return -1;
    }
    return size < 0 ? -1 : 2 * size;
}

std::string LineDiagramVector::toString() const {
    if (terms_.empty()) return "0";
    std::ostringstream os;
    bool first = true;
    for (const auto& [U, c] : terms_) {
        if (first) {
            if (c == -1) os << "-";
            else if (c != 1) os << c.get_str() << "*";
        } else {
            os << (c < 0 ? " - " : " + ");
            mpz_class abs = c < 0 ? mpz_class(-c) : c;
            if (abs != 1) os << abs.get_str() << "*";
        }
        os << "l{";
        for (std::size_t i = 0; i < U.size(); ++i) os << (i ? "," : "") << U[i];
        os << "}";
        first = false;
    }
    return os.str();
}

std::ostream& operator<<(std::ostream& os, const LineDiagramVector& v) {
    return os << v.toString();
}

LineDiagramVector lineDiagramSum(const EnrichedCupDiagram& M) {
    std::vector<Cup> freeCups;
    for (const Cup& cup : M.base.cups())
        if (!M.dottedAt(cup.left)) freeCups.push_back(cup);

    std::vector<int> fixed;
    for (int v : M.base.halfCups())
        if (!M.dottedAt(v)) fixed.push_back(v);

    LineDiagramVector sum(M.base.vertexCount());
    const std::size_t count = freeCups.size();
    for (std::size_t mask = 0; mask < (std::size_t{1} << count); ++mask) {
        std::vector<int> U = fixed;
        int rightEndpoints = 0;
        for (std::size_t c = 0; c < count; ++c) {
            if (mask & (std::size_t{1} << c)) {
                U.push_back(freeCups[c].right);
                ++rightEndpoints;
            } else {
                U.push_back(freeCups[c].left);
            }
        }
        std::sort(U.begin(), U.end());
        sum.add(U, (rightEndpoints % 2 == 0) ? 1 : -1);
    }
    return sum;
}

EnrichedCupDiagram betaMap(const CupDiagram& a, int k) {
    const int m = a.vertexCount();
    const int l = a.cupsPlusHalfCups();
    if (k < 0 || k > m)
        fail(ErrorKind::BadParameters, "need 0 <= k <= m, got k=" + std::to_string(k));
    if (l > m - k)
        fail(ErrorKind::DegreeTooLarge, "diagram has " + std::to_string(l) +
                                            " cups plus half-cups, more than m-k=" + std::to_string(m - k));

    Bitableau t = toBitableau(a);
    const int moveCount = m - l - k;
    std::vector<int> moved(t.left.end() - moveCount, t.left.end());

    std::vector<int> newOpeners = t.right;
    newOpeners.insert(newOpeners.end(), moved.begin(), moved.end());
    std::sort(newOpeners.begin(), newOpeners.end());

    CupDiagram rebuilt = CupDiagram::fromOpeners(m, newOpeners);

    std::set<int> dotted(rebuilt.rays().begin(), rebuilt.rays().end());
    // moved entries are openers of the rebuilt diagram, so they head their
    // components
    dotted.insert(moved.begin(), moved.end());
    return EnrichedCupDiagram::make(std::move(rebuilt), std::move(dotted));
}

std::vector<EnrichedCupDiagram> standardEnriched(int m, int k) {
    if (k < 0 || k > m)
        fail(ErrorKind::BadParameters, "need 0 <= k <= m, got m=" + std::to_string(m) +
                                           " k=" + std::to_string(k));
    std::vector<EnrichedCupDiagram> all;
    for (int l = 0; l <= m - k; ++l) {
        for (const CupDiagram& a : enumerateDiagrams(m, m - l))
            all.push_back(betaMap(a, k));
    }
    return all;
}

int rankCheck(int m, int k, int l) {
    if (k < 0 || k > m || l < 0 || l > m - k)
        fail(ErrorKind::BadParameters, "need 0 <= k <= m and 0 <= l <= m-k");

    std::vector<LineDiagramVector> rows;
    for (const CupDiagram& a : enumerateDiagrams(m, m - l))
        rows.push_back(lineDiagramSum(betaMap(a, k)));

    // columns follow the lexicographic order on size-l subsets, the total
    // order used for the leading-term argument
    std::vector<std::vector<int>> columns = subsetsOfSize(m, l);
    std::map<std::vector<int>, std::size_t> columnIndex;
    for (std::size_t j = 0; j < columns.size(); ++j) columnIndex[columns[j]] = j;

    IntegerMatrix matrix(rows.size(), std::vector<mpz_class>(columns.size(), 0));
    for (std::size_t i = 0; i < rows.size(); ++i) {
        for (const auto& [U, c] : rows[i].terms()) {
            matrix[i][columnIndex.at(U)] = c;
        }
    }
    return fractionFreeRank(std::move(matrix));
}

std::vector<mpz_class> bettiNumbers(int m, int k) {
    if (k < 0 || k > m)
        fail(ErrorKind::BadParameters, "need 0 <= k <= m, got m=" + std::to_string(m) +
                                           " k=" + std::to_string(k));
    std::vector<mpz_class> betti;
    for (int l = 0; l <= m - k; ++l) betti.push_back(binomial(m, l));
    return betti;
}

} // namespace exotic
