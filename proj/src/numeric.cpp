#include "exotic/numeric.hpp"

#include "exotic/error.hpp"

namespace exotic {

mpz_class binomial(int n, int r) {
    if (n < 0 || r < 0 || r > n) return 0;
    mpz_class result;
    mpz_bin_uiui(result.get_mpz_t(), static_cast<unsigned long>(n), static_cast<unsigned long>(r));
    return result;
}

void forEachSubset(int n, int r, const std::function<void(const std::vector<int>&)>& visit) {
    if (r < 0 || r > n) return;
    std::vector<int> current(r);
    for (int i = 0; i < r; ++i) current[i] = i + 1;
    while (true) {
        visit(current);
        // advance to the lexicographic successor
        int pos = r - 1;
        while (pos >= 0 && current[pos] == n - (r - 1 - pos)) --pos;
        if (pos < 0) break;
        ++current[pos];
        for (int i = pos + 1; i < r; ++i) current[i] = current[i - 1] + 1;
    }
}

std::vector<std::vector<int>> subsetsOfSize(int n, int r) {
    std::vector<std::vector<int>> all;
    forEachSubset(n, r, [&](const std::vector<int>& s) { all.push_back(s); });
    return all;
}

} // namespace exotic
