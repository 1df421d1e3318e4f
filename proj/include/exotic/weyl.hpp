#pragma once

#include <gmpxx.h>

#include <cstdint>
#include <functional>
#include <string>
#include <vector>

#include "exotic/error.hpp"

namespace exotic {

/*
 * Element of the type-C Weyl group 𝒲_{C_m} (signed permutations of
 * {1..m}): a permutation pi together with a sign at each source index.
 * Acting on monomials, X_i ↦ eps_i · X_{pi(i)}; the Coxeter generators are
 * s_0 (X_1 ↦ -X_1) and s_i = the transposition of i and i+1.
 *
 * Composition matches operator composition: (w·w')(x) = w(w'(x)), i.e.
 * pi'' = pi ∘ pi' and eps''_i = eps'_i · eps_{pi'(i)}.
 */
class SignedPermutation {
public:
    static SignedPermutation identity(int m);
    static SignedPermutation generator(int m, int i);  // s_i, 0 <= i <= m-1
    // Window notation: entry at position i is the signed image of i.
    static SignedPermutation fromWindow(const std::vector<int>& window);
    // Accepts a generator word ("s0 s1 s3", possibly empty = identity) or
    // window notation ("2 -1 3 4").
    static SignedPermutation parse(int m, const std::string& text);

    int size() const { return m_; }
    int imageOf(int i) const;   // pi(i)
    int signAt(int i) const;    // eps_i

    SignedPermutation operator*(const SignedPermutation& other) const;
    SignedPermutation inverse() const;

    std::vector<int> window() const;  // signed images
    std::string windowText() const;

    friend bool operator==(const SignedPermutation&, const SignedPermutation&) = default;

private:
    SignedPermutation(int m) : m_(m), pi_(static_cast<std::size_t>(m)), eps_(static_cast<std::size_t>(m), 1) {}

    int m_ = 0;
    std::vector<int> pi_;        // pi_[i-1] = pi(i)
    std::vector<std::int8_t> eps_;  // eps_[i-1] = sign at source i
};

std::ostream& operator<<(std::ostream& os, const SignedPermutation& w);

struct MonomialImage {
    int sign = 1;
    std::vector<int> indices;  // sorted
    friend bool operator==(const MonomialImage&, const MonomialImage&) = default;
};

// w · X_I = sign · X_J with J = pi(I) and sign = Π_{i∈I} eps_i.
MonomialImage actOnMonomial(const SignedPermutation& w, const std::vector<int>& indices);

// Trace of w on span{X_I : |I| = l} = Σ_{pi(I)=I} Π_{i∈I} eps_i.
// Requires 0 <= l <= m-k.
long long characterValue(int m, int k, int l, const SignedPermutation& w);

// ⟨χ_{2l}, χ_{2l'}⟩ = (1/|W|) Σ_w χ_{2l}(w) χ_{2l'}(w) over all 2^m·m!
// group elements. Throws GroupTooLarge above the brute-force bound.
mpq_class innerProduct(int m, int k, int l, int lPrime);

// All pairwise inner products ⟨χ_{2l}, χ_{2l'}⟩ for 0 <= l,l' <= lMax in
// a single sweep over the group.
std::vector<std::vector<mpq_class>> innerProductMatrix(int m, int lMax);

// Checks every defining Coxeter relation (s_i² = e, the commuting and
// braid relations, and s_0s_1s_0s_1 = s_1s_0s_1s_0) both in the group and
// as operators on each monomial graded piece. On failure writes a
// counterexample description to `report` when given.
bool verifyGeneratorRelations(int m, std::string* report = nullptr);

// Group order 2^m · m!.
mpz_class hyperoctahedralOrder(int m);

// Default 7; the EXOTIC_BRUTE_BOUND environment variable overrides it.
int bruteForceBound();

// Visits every element of 𝒲_{C_m} exactly once.
void forEachGroupElement(int m, const std::function<void(const SignedPermutation&)>& visit);

} // namespace exotic
