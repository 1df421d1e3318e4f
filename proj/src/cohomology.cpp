#include "exotic/cohomology.hpp"

#include <algorithm>
#include <cctype>
#include <ostream>
#include <sstream>

#include "exotic/cup_diagram.hpp"
#include "exotic/numeric.hpp"

namespace exotic {

RingElement::RingElement(int m, int k) : m_(m), k_(k) {
    if (m < 0 || k < 0 || k > m)
        fail(ErrorKind::BadParameters, "need 0 <= k <= m, got m=" + std::to_string(m) +
                                           " k=" + std::to_string(k));
}

RingElement RingElement::one(int m, int k) {
    RingElement e(m, k);
    e.addTerm({}, 1);
    return e;
}

RingElement RingElement::generator(int m, int k, int i) {
    if (i < 1 || i > m)
        fail(ErrorKind::IndexOutOfRange, "X_" + std::to_string(i) + " is outside X_1..X_" + std::to_string(m));
    return monomial(m, k, {i});
}

RingElement RingElement::monomial(int m, int k, std::vector<int> indices, mpq_class coefficient) {
    RingElement e(m, k);
    std::sort(indices.begin(), indices.end());
    for (std::size_t i = 0; i < indices.size(); ++i) {
        if (indices[i] < 1 || indices[i] > m)
            fail(ErrorKind::IndexOutOfRange,
                 "X_" + std::to_string(indices[i]) + " is outside X_1..X_" + std::to_string(m));
        if (i > 0 && indices[i] == indices[i - 1])
            fail(ErrorKind::IndexOutOfRange, "repeated index " + std::to_string(indices[i]) +
                                                 " in a square-free monomial");
    }
    e.addTerm(std::move(indices), coefficient);
    return e;
}

void RingElement::addTerm(std::vector<int> indices, const mpq_class& coefficient) {
    if (coefficient == 0) return;
    if (static_cast<int>(indices.size()) > m_ - k_) return;  // killed by the ideal
    auto [it, inserted] = terms_.try_emplace(std::move(indices), coefficient);
    if (!inserted) {
        it->second += coefficient;
        if (it->second == 0) terms_.erase(it);
    }
}

void RingElement::requireSameRing(const RingElement& other) const {
    if (m_ != other.m_ || k_ != other.k_)
        fail(ErrorKind::ParameterMismatch,
             "ring (m=" + std::to_string(m_) + ",k=" + std::to_string(k_) + ") vs (m=" +
                 std::to_string(other.m_) + ",k=" + std::to_string(other.k_) + ")");
}

RingElement RingElement::operator+(const RingElement& other) const {
    requireSameRing(other);
    RingElement result = *this;
    for (const auto& [indices, c] : other.terms_) result.addTerm(indices, c);
    return result;
}

RingElement RingElement::operator-(const RingElement& other) const {
    requireSameRing(other);
    RingElement result = *this;
    for (const auto& [indices, c] : other.terms_) result.addTerm(indices, -c);
    return result;
}

RingElement RingElement::operator*(const RingElement& other) const {
    requireSameRing(other);
    RingElement result(m_, k_);
    for (const auto& [lhs, c] : terms_) {
        for (const auto& [rhs, d] : other.terms_) {
            // X_I · X_J = X_{I∪J} when disjoint, 0 otherwise (X_i² = 0)
            std::vector<int> merged;
            merged.reserve(lhs.size() + rhs.size());
            std::merge(lhs.begin(), lhs.end(), rhs.begin(), rhs.end(), std::back_inserter(merged));
            bool repeated = std::adjacent_find(merged.begin(), merged.end()) != merged.end();
            if (repeated) continue;
            result.addTerm(std::move(merged), c * d);
        }
    }
    return result;
}

RingElement RingElement::operator*(const mpq_class& scalar) const {
    RingElement result(m_, k_);
    for (const auto& [indices, c] : terms_) result.addTerm(indices, c * scalar);
    return result;
}

mpq_class RingElement::coefficient(const std::vector<int>& indices) const {
    auto it = terms_.find(indices);
    return it == terms_.end() ? mpq_class(0) : it->second;
}

namespace {

void skipSpaces(const std::string& text, std::size_t& pos) {
    while (pos < text.size() && std::isspace(static_cast<unsigned char>(text[pos]))) ++pos;
}

mpq_class parseRational(const std::string& text, std::size_t& pos) {
    std::size_t start = pos;
    while (pos < text.size() &&
           (std::isdigit(static_cast<unsigned char>(text[pos])) || text[pos] == '/'))
        ++pos;
    if (start == pos) fail(ErrorKind::ParseError, "expected a number at position " + std::to_string(start));
    mpq_class value;
    if (value.set_str(text.substr(start, pos - start), 10) != 0 || value.get_den() == 0)
        fail(ErrorKind::ParseError, "bad rational '" + text.substr(start, pos - start) + "'");
    value.canonicalize();
    return value;
}

std::vector<int> parseIndexSet(const std::string& text, std::size_t& pos) {
    // "X{1,3}" with pos at 'X'
    if (pos >= text.size() || text[pos] != 'X')
        fail(ErrorKind::ParseError, "expected 'X' at position " + std::to_string(pos));
    ++pos;
    if (pos >= text.size() || text[pos] != '{')
        fail(ErrorKind::ParseError, "expected '{' after 'X'");
    ++pos;
    std::vector<int> indices;
    skipSpaces(text, pos);
    while (pos < text.size() && text[pos] != '}') {
        std::size_t start = pos;
        while (pos < text.size() && std::isdigit(static_cast<unsigned char>(text[pos]))) ++pos;
        if (start == pos) fail(ErrorKind::ParseError, "expected an index in X{...}");
        indices.push_back(std::stoi(text.substr(start, pos - start)));
        skipSpaces(text, pos);
        if (pos < text.size() && text[pos] == ',') {
            ++pos;
            skipSpaces(text, pos);
        }
    }
    if (pos >= text.size()) fail(ErrorKind::ParseError, "unterminated X{...}");
    ++pos;  // consume '}'
    return indices;
}

} // namespace

RingElement RingElement::parse(int m, int k, const std::string& text) {
    RingElement result(m, k);
    std::size_t pos = 0;
    skipSpaces(text, pos);
    if (pos == text.size()) fail(ErrorKind::ParseError, "empty ring element");
    bool first = true;
    while (pos < text.size()) {
        int sign = 1;
        if (!first || text[pos] == '+' || text[pos] == '-') {
            if (pos >= text.size() || (text[pos] != '+' && text[pos] != '-'))
                fail(ErrorKind::ParseError, "expected '+' or '-' at position " + std::to_string(pos));
            sign = text[pos] == '-' ? -1 : 1;
            ++pos;
            skipSpaces(text, pos);
        }
        mpq_class coefficient = 1;
        if (pos < text.size() && std::isdigit(static_cast<unsigned char>(text[pos]))) {
            coefficient = parseRational(text, pos);
            skipSpaces(text, pos);
            if (pos < text.size() && text[pos] == '*') {
                ++pos;
                skipSpaces(text, pos);
            } else if (pos < text.size() && text[pos] == 'X') {
                // implicit product like "2X{1}"
            } else {
                result.addTerm({}, sign * coefficient);
                skipSpaces(text, pos);
                first = false;
                continue;
            }
        }
        std::vector<int> indices = parseIndexSet(text, pos);
        RingElement term = monomial(m, k, std::move(indices), sign * coefficient);
        result = result + term;
        skipSpaces(text, pos);
        first = false;
    }
    return result;
}

std::string RingElement::toString() const {
    if (terms_.empty()) return "0";
    // order terms by degree, then lexicographically
    std::vector<const std::pair<const std::vector<int>, mpq_class>*> ordered;
    for (const auto& term : terms_) ordered.push_back(&term);
    std::stable_sort(ordered.begin(), ordered.end(), [](const auto* lhs, const auto* rhs) {
        if (lhs->first.size() != rhs->first.size()) return lhs->first.size() < rhs->first.size();
        return lhs->first < rhs->first;
    });

    std::ostringstream os;
    bool first = true;
    for (const auto* term : ordered) {
        mpq_class c = term->second;
        if (first) {
            if (c < 0) os << "-";
        } else {
            os << (c < 0 ? " - " : " + ");
        }
        mpq_class abs = c < 0 ? mpq_class(-c) : c;
        if (abs != 1 || term->first.empty()) {
            os << abs.get_str();
            if (!term->first.empty()) os << "*";
        }
        if (!term->first.empty()) {
            os << "X{";
            for (std::size_t i = 0; i < term->first.size(); ++i)
                os << (i ? "," : "") << term->first[i];
            os << "}";
        }
        first = false;
    }
    return os.str();
}

std::ostream& operator<<(std::ostream& os, const RingElement& element) {
    return os << element.toString();
}

std::vector<mpz_class> poincarePolynomial(int m, int k) {
    if (k < 0 || k > m)
        fail(ErrorKind::BadParameters, "need 0 <= k <= m, got m=" + std::to_string(m) +
                                           " k=" + std::to_string(k));
    std::vector<mpz_class> coefficients;
    for (int l = 0; l <= m - k; ++l) coefficients.push_back(binomial(m, l));
    return coefficients;
}

std::vector<mpz_class> cellGeneratingFunction(int m, int k) {
    if (k < 0 || k > m)
        fail(ErrorKind::BadParameters, "need 0 <= k <= m, got m=" + std::to_string(m) +
                                           " k=" + std::to_string(k));
    std::vector<mpz_class> coefficients(static_cast<std::size_t>(m - k) + 1, 0);
    for (const Weight& alpha : enumerateWeights(m, k)) {
        int cell = cupFromWeight(alpha).cupsPlusHalfCups();
        if (cell > m - k)
            fail(ErrorKind::BadParameters, "cell dimension " + std::to_string(cell) +
                                               " exceeds m-k for weight " + alpha.text());
        ++coefficients[static_cast<std::size_t>(cell)];
    }
    return coefficients;
}

std::string polynomialToString(const std::vector<mpz_class>& coefficients) {
    std::ostringstream os;
    bool first = true;
    for (std::size_t l = 0; l < coefficients.size(); ++l) {
        if (coefficients[l] == 0) continue;
        if (!first) os << " + ";
        if (l == 0) {
            os << coefficients[l].get_str();
        } else {
            if (coefficients[l] != 1) os << coefficients[l].get_str();
            os << "q^" << 2 * l;
        }
        first = false;
    }
    if (first) os << "0";
    return os.str();
}

} // namespace exotic
