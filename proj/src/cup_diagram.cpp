#include "exotic/cup_diagram.hpp"

#include <algorithm>
#include <ostream>
#include <sstream>

#include "exotic/numeric.hpp"

namespace exotic {

namespace {

std::string vertexStr(int v) {
    return std::to_string(v);
}

} // namespace

CupDiagram CupDiagram::validate(const std::vector<RawConnection>& table) {
    const int m = static_cast<int>(table.size());
    CupDiagram d;
    d.m_ = m;
    d.connection_ = table;
    // equality is by connection data alone, so clear meaningless partners
    for (RawConnection& c : d.connection_)
        if (c.kind != VertexKind::Cup) c.partner = 0;

    // symmetry and index checks
    for (int v = 1; v <= m; ++v) {
        const RawConnection& c = table[v - 1];
        if (c.kind != VertexKind::Cup) continue;
        if (c.partner < 1 || c.partner > m)
            fail(ErrorKind::BadIndex,
                 "cup partner " + vertexStr(c.partner) + " of vertex " + vertexStr(v) +
                     " is outside 1.." + vertexStr(m));
        if (c.partner == v)
            fail(ErrorKind::DanglingCup, "vertex " + vertexStr(v) + " is paired with itself");
        const RawConnection& back = table[c.partner - 1];
        if (back.kind != VertexKind::Cup || back.partner != v)
            fail(ErrorKind::DanglingCup,
                 "vertex " + vertexStr(v) + " claims a cup to " + vertexStr(c.partner) +
                     " but is not claimed back");
    }

    for (int v = 1; v <= m; ++v) {
        switch (table[v - 1].kind) {
            case VertexKind::Cup:
                if (table[v - 1].partner > v)
                    d.cups_.push_back({v, table[v - 1].partner});
                break;
            case VertexKind::Ray:
                d.rays_.push_back(v);
                break;
            case VertexKind::HalfCup:
                d.halfCups_.push_back(v);
                break;
        }
    }

    // noncrossing: cups sorted by left endpoint must be disjoint or nested
    for (std::size_t a = 0; a < d.cups_.size(); ++a) {
        for (std::size_t b = a + 1; b < d.cups_.size(); ++b) {
            const Cup& outer = d.cups_[a];
            const Cup& inner = d.cups_[b];
            if (inner.left < outer.right && outer.right < inner.right)
                fail(ErrorKind::Crossing,
                     "cups (" + vertexStr(outer.left) + "," + vertexStr(outer.right) + ") and (" +
                         vertexStr(inner.left) + "," + vertexStr(inner.right) + ") cross");
        }
    }

    // nothing but cup endpoints strictly inside a cup span
    for (const Cup& cup : d.cups_) {
        for (int v = cup.left + 1; v < cup.right; ++v) {
            if (table[v - 1].kind == VertexKind::Ray)
                fail(ErrorKind::RayInsideCup, "ray " + vertexStr(v) + " lies inside cup (" +
                                                  vertexStr(cup.left) + "," + vertexStr(cup.right) + ")");
            if (table[v - 1].kind == VertexKind::HalfCup)
                fail(ErrorKind::HalfCupInsideCup,
                     "half-cup " + vertexStr(v) + " lies inside cup (" + vertexStr(cup.left) + "," +
                         vertexStr(cup.right) + ")");
        }
    }

    if (!d.halfCups_.empty() && !d.rays_.empty()) {
        const int firstHalf = d.halfCups_.front();
        for (int ray : d.rays_) {
            if (ray > firstHalf)
                fail(ErrorKind::RayRightOfHalfCup, "ray " + vertexStr(ray) + " lies right of half-cup " +
                                                       vertexStr(firstHalf));
        }
    }

    return d;
}

CupDiagram CupDiagram::parse(const std::string& word) {
    const int m = static_cast<int>(word.size());
    std::vector<RawConnection> table(m);
    std::vector<int> stack;
    for (int v = 1; v <= m; ++v) {
        switch (word[v - 1]) {
            case '(':
                stack.push_back(v);
                table[v - 1].kind = VertexKind::Cup;
                break;
            case ')': {
                if (stack.empty())
                    fail(ErrorKind::ParseError, "')' at vertex " + vertexStr(v) + " has no matching '('");
                int open = stack.back();
                stack.pop_back();
                table[v - 1] = {VertexKind::Cup, open};
                table[open - 1] = {VertexKind::Cup, v};
                break;
            }
            case '|':
                table[v - 1].kind = VertexKind::Ray;
                break;
            case '>':
                table[v - 1].kind = VertexKind::HalfCup;
                break;
            default:
                fail(ErrorKind::ParseError,
                     std::string("unexpected character '") + word[v - 1] + "' at vertex " + vertexStr(v));
        }
    }
    if (!stack.empty())
        fail(ErrorKind::ParseError, "'(' at vertex " + vertexStr(stack.back()) + " is never closed");
    return validate(table);
}

CupDiagram CupDiagram::fromOpeners(int m, const std::vector<int>& openers) {
    if (m < 0) fail(ErrorKind::BadParameters, "negative vertex count " + vertexStr(m));
    std::vector<bool> isOpener(m + 1, false);
    for (int v : openers) {
        if (v < 1 || v > m)
            fail(ErrorKind::BadIndex, "opener " + vertexStr(v) + " is outside 1.." + vertexStr(m));
        if (isOpener[v]) fail(ErrorKind::BadIndex, "duplicate opener " + vertexStr(v));
        isOpener[v] = true;
    }

    std::vector<RawConnection> table(m);
    std::vector<int> stack;
    for (int v = 1; v <= m; ++v) {
        if (isOpener[v]) {
            stack.push_back(v);
            table[v - 1].kind = VertexKind::HalfCup;  // until closed
        } else if (!stack.empty()) {
            int open = stack.back();
            stack.pop_back();
            table[v - 1] = {VertexKind::Cup, open};
            table[open - 1] = {VertexKind::Cup, v};
        } else {
            table[v - 1].kind = VertexKind::Ray;
        }
    }
    return validate(table);
}

VertexKind CupDiagram::kindAt(int vertex) const {
    if (vertex < 1 || vertex > m_)
        fail(ErrorKind::BadIndex, "vertex " + vertexStr(vertex) + " is outside 1.." + vertexStr(m_));
    return connection_[vertex - 1].kind;
}

int CupDiagram::cupPartner(int vertex) const {
    if (vertex < 1 || vertex > m_)
        fail(ErrorKind::BadIndex, "vertex " + vertexStr(vertex) + " is outside 1.." + vertexStr(m_));
    const RawConnection& c = connection_[vertex - 1];
    return c.kind == VertexKind::Cup ? c.partner : 0;
}

std::vector<int> CupDiagram::openers() const {
    std::vector<int> result;
    for (const Cup& cup : cups_) result.push_back(cup.left);
    result.insert(result.end(), halfCups_.begin(), halfCups_.end());
    std::sort(result.begin(), result.end());
    return result;
}

std::string CupDiagram::word() const {
    std::string w(static_cast<std::size_t>(m_), '|');
    for (const Cup& cup : cups_) {
        w[cup.left - 1] = '(';
        w[cup.right - 1] = ')';
    }
    for (int v : halfCups_) w[v - 1] = '>';
    return w;
}

bool CupDiagram::operator<(const CupDiagram& other) const {
    if (m_ != other.m_) return m_ < other.m_;
    return openers() < other.openers();
}

std::ostream& operator<<(std::ostream& os, const CupDiagram& diagram) {
    return os << diagram.word();
}

Weight::Weight(std::string symbols) : symbols_(std::move(symbols)) {
    for (char c : symbols_) {
        if (c != '^' && c != 'v')
            fail(ErrorKind::ParseError, std::string("weight symbol '") + c + "' is not '^' or 'v'");
    }
}

bool Weight::up(int vertex) const {
    if (vertex < 1 || vertex > length())
        fail(ErrorKind::BadIndex,
             "vertex " + vertexStr(vertex) + " is outside 1.." + vertexStr(length()));
    return symbols_[vertex - 1] == '^';
}

int Weight::upCount() const {
    return static_cast<int>(std::count(symbols_.begin(), symbols_.end(), '^'));
}

std::ostream& operator<<(std::ostream& os, const Weight& weight) {
    return os << weight.text();
}

Bitableau Bitableau::standard(std::vector<int> left, std::vector<int> right) {
    Bitableau t{std::move(left), std::move(right)};
    const int m = t.size();
    std::vector<int> seen(m + 1, 0);
    for (const std::vector<int>* row : {&t.left, &t.right}) {
        for (std::size_t i = 0; i < row->size(); ++i) {
            int entry = (*row)[i];
            if (entry < 1 || entry > m)
                fail(ErrorKind::NotStandard, "entry " + vertexStr(entry) + " is outside 1.." + vertexStr(m));
            if (++seen[entry] > 1)
                fail(ErrorKind::NotStandard, "entry " + vertexStr(entry) + " appears twice");
            if (i > 0 && (*row)[i - 1] >= entry)
                fail(ErrorKind::NotStandard, "row is not strictly increasing at entry " + vertexStr(entry));
        }
    }
    return t;
}

std::vector<CupDiagram> enumerateDiagrams(int m, int k) {
    if (k < 0 || k > m)
        fail(ErrorKind::BadParameters,
             "need 0 <= k <= m, got m=" + vertexStr(m) + " k=" + vertexStr(k));
    std::vector<CupDiagram> all;
    forEachSubset(m, m - k, [&](const std::vector<int>& openerSet) {
        all.push_back(CupDiagram::fromOpeners(m, openerSet));
    });
    return all;
}

std::vector<Weight> enumerateWeights(int m, int k) {
    if (k < 0 || k > m)
        fail(ErrorKind::BadParameters,
             "need 0 <= k <= m, got m=" + vertexStr(m) + " k=" + vertexStr(k));
    std::vector<Weight> all;
    for (long mask = 0; mask < (1L << m); ++mask) {
        std::string symbols(static_cast<std::size_t>(m), '^');
        int downs = 0;
        for (int i = 0; i < m; ++i) {
            if (mask & (1L << i)) {
                symbols[i] = 'v';
                ++downs;
            }
        }
        if (m - downs >= k) all.emplace_back(std::move(symbols));
    }
    std::sort(all.begin(), all.end());
    return all;
}

Bitableau toBitableau(const CupDiagram& a) {
    std::vector<int> right = a.openers();
    std::vector<int> left;
    std::vector<bool> isOpener(a.vertexCount() + 1, false);
    for (int v : right) isOpener[v] = true;
    for (int v = 1; v <= a.vertexCount(); ++v)
        if (!isOpener[v]) left.push_back(v);
    return Bitableau{std::move(left), std::move(right)};
}

CupDiagram fromBitableau(const Bitableau& t, int expectedK) {
    Bitableau checked = Bitableau::standard(t.left, t.right);
    if (expectedK >= 0 && static_cast<int>(checked.left.size()) != expectedK)
        fail(ErrorKind::ShapeMismatch, "left row has " + vertexStr(static_cast<int>(checked.left.size())) +
                                           " entries, expected " + vertexStr(expectedK));
    return CupDiagram::fromOpeners(checked.size(), checked.right);
}

CupDiagram cupFromWeight(const Weight& alpha) {
    const int m = alpha.length();
    std::vector<RawConnection> table(m);
    std::vector<int> openDowns;
    for (int v = 1; v <= m; ++v) {
        if (!alpha.up(v)) {
            openDowns.push_back(v);
            table[v - 1].kind = VertexKind::HalfCup;  // unmatched ∨
        } else if (!openDowns.empty()) {
            int open = openDowns.back();
            openDowns.pop_back();
            table[v - 1] = {VertexKind::Cup, open};
            table[open - 1] = {VertexKind::Cup, v};
        } else {
            table[v - 1].kind = VertexKind::Ray;  // unmatched ∧
        }
    }
    return CupDiagram::validate(table);
}

int rayCount(const CupDiagram& a, int vertex) {
    if (a.kindAt(vertex) != VertexKind::Ray)
        fail(ErrorKind::NotARay, "vertex " + vertexStr(vertex) + " does not carry a ray");
    int count = 0;
    for (int ray : a.rays())
        if (ray <= vertex) ++count;
    return count;
}

std::vector<FlagConstraint> componentConstraints(const CupDiagram& a) {
    std::vector<FlagConstraint> constraints;
    for (int v = 1; v <= a.vertexCount(); ++v) {
        switch (a.kindAt(v)) {
            case VertexKind::Cup: {
                int j = a.cupPartner(v);
                if (j < v) break;  // emit once per cup, at the left endpoint
                FlagConstraint c;
                c.type = FlagConstraint::Type::CupRelation;
                c.i = v;
                c.j = j;
                // the span interior holds only matched cup endpoints, so
                // j - i + 1 is even
                if ((j - v + 1) % 2 != 0)
                    fail(ErrorKind::BadParameters, "cup span parity violated at (" + vertexStr(v) + "," +
                                                       vertexStr(j) + ")");
                c.power = (j - v + 1) / 2;
                constraints.push_back(c);
                break;
            }
            case VertexKind::Ray: {
                FlagConstraint c;
                c.type = FlagConstraint::Type::RayRelation;
                c.i = v;
                int rho = rayCount(a, v);
                if ((v + rho) % 2 != 0)
                    fail(ErrorKind::BadParameters, "ray parity violated at vertex " + vertexStr(v));
                c.basisIndex = (v + rho) / 2;
                constraints.push_back(c);
                break;
            }
            case VertexKind::HalfCup:
                break;  // no relation
        }
    }
    return constraints;
}

std::string toString(const FlagConstraint& constraint) {
    std::ostringstream os;
    if (constraint.type == FlagConstraint::Type::CupRelation) {
        os << "cup(" << constraint.i << "," << constraint.j << "): F_" << constraint.j << " = z^-"
           << constraint.power << " F_" << (constraint.i - 1);
    } else {
        os << "ray(" << constraint.i << "): F_" << constraint.i << " = F_" << (constraint.i - 1)
           << " + span(e_" << constraint.basisIndex << ")";
    }
    return os.str();
}

long long springerFiberDimension(const std::vector<long long>& lambda,
                                 const std::vector<long long>& mu) {
    for (const std::vector<long long>* row : {&lambda, &mu}) {
        for (std::size_t i = 0; i < row->size(); ++i) {
            if ((*row)[i] < 0)
                fail(ErrorKind::NotAPartition, "negative part " + std::to_string((*row)[i]));
            if (i > 0 && (*row)[i - 1] < (*row)[i])
                fail(ErrorKind::NotAPartition, "parts are not weakly decreasing");
        }
    }
    long long twiceM = 0;
    const std::size_t rows = std::max(lambda.size(), mu.size());
    for (std::size_t i = 0; i < rows; ++i) {
        long long part = (i < lambda.size() ? lambda[i] : 0) + (i < mu.size() ? mu[i] : 0);
        twiceM += 2 * static_cast<long long>(i) * part;
    }
    long long muSize = 0;
    for (long long part : mu) muSize += part;
    return twiceM + muSize;
}

} // namespace exotic
