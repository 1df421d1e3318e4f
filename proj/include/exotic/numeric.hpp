#pragma once

#include <gmpxx.h>

#include <functional>
#include <vector>

namespace exotic {

mpz_class binomial(int n, int r);

// All r-element subsets of {1,...,n} as sorted vectors, in lexicographic
// order of the sorted element lists (the order used throughout for opener
// sets and monomial index sets).
std::vector<std::vector<int>> subsetsOfSize(int n, int r);

// Visit every subset of {1,...,n} of size r without materializing the list.
void forEachSubset(int n, int r, const std::function<void(const std::vector<int>&)>& visit);

} // namespace exotic
