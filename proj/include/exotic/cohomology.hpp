#pragma once

#include <gmpxx.h>

#include <map>
#include <string>
#include <vector>

#include "exotic/error.hpp"

namespace exotic {

/*
 * Element of C[X_1..X_m] / <X_i², X_I : |I| = m-k+1> in the square-free
 * monomial basis {X_I : I ⊆ {1..m}, |I| <= m-k}. Index sets are kept
 * sorted; coefficients are exact rationals; terms over the degree cap are
 * reduced to zero on the spot and never stored. deg(X_I) = 2|I|.
 */
class RingElement {
public:
    RingElement(int m, int k);

    static RingElement zero(int m, int k) { return RingElement(m, k); }
    static RingElement one(int m, int k);
    static RingElement generator(int m, int k, int i);  // X_i
    static RingElement monomial(int m, int k, std::vector<int> indices, mpq_class coefficient = 1);

    // Syntax: "3*X{1,3} - 1/2*X{2} + X{}", X{} is the unit.
    static RingElement parse(int m, int k, const std::string& text);

    int varCount() const { return m_; }
    int degreeCapK() const { return k_; }

    RingElement operator+(const RingElement& other) const;
    RingElement operator-(const RingElement& other) const;
    RingElement operator*(const RingElement& other) const;
    RingElement operator*(const mpq_class& scalar) const;

    const std::map<std::vector<int>, mpq_class>& terms() const { return terms_; }
    mpq_class coefficient(const std::vector<int>& indices) const;
    bool isZero() const { return terms_.empty(); }

    std::string toString() const;

    friend bool operator==(const RingElement&, const RingElement&) = default;

private:
    void addTerm(std::vector<int> indices, const mpq_class& coefficient);
    void requireSameRing(const RingElement& other) const;

    int m_;
    int k_;
    std::map<std::vector<int>, mpq_class> terms_;
};

std::ostream& operator<<(std::ostream& os, const RingElement& element);

// Coefficient of q^{2l} is C(m,l), 0 <= l <= m-k.
std::vector<mpz_class> poincarePolynomial(int m, int k);

// Σ over weights α ∈ W^{((k),(m-k))} of q^{2·cupsPlusHalfCups(C(α))},
// the cell census of the attracting-cell paving. Always agrees with the
// Poincaré polynomial.
std::vector<mpz_class> cellGeneratingFunction(int m, int k);

std::string polynomialToString(const std::vector<mpz_class>& coefficients);

} // namespace exotic
