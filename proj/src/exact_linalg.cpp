#include "exotic/exact_linalg.hpp"

#include <cstddef>
#include <utility>

namespace exotic {

int fractionFreeRank(IntegerMatrix matrix) {
    const std::size_t rows = matrix.size();
    const std::size_t cols = rows == 0 ? 0 : matrix[0].size();

    mpz_class previousPivot = 1;
    std::size_t rank = 0;

    for (std::size_t col = 0; col < cols && rank < rows; ++col) {
        // any nonzero entry works as pivot in exact arithmetic
        std::size_t pivotRow = rank;
        while (pivotRow < rows && matrix[pivotRow][col] == 0) ++pivotRow;
        if (pivotRow == rows) continue;
        if (pivotRow != rank) std::swap(matrix[pivotRow], matrix[rank]);

        const mpz_class pivot = matrix[rank][col];
        for (std::size_t i = rank + 1; i < rows; ++i) {
            for (std::size_t j = col + 1; j < cols; ++j) {
                mpz_class value = matrix[i][j] * pivot - matrix[i][col] * matrix[rank][j];
                mpz_divexact(value.get_mpz_t(), value.get_mpz_t(), previousPivot.get_mpz_t());
                matrix[i][j] = std::move(value);
            }
            matrix[i][col] = 0;
        }
        previousPivot = pivot;
        ++rank;
    }
    return static_cast<int>(rank);
}

} // namespace exotic
