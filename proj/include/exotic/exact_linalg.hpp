#pragma once

#include <gmpxx.h>

#include <vector>

namespace exotic {

using IntegerMatrix = std::vector<std::vector<mpz_class>>;

/*
 * Rank over the rationals by fraction-free (Bareiss) elimination on
 * arbitrary-precision integers. Intermediate entries stay minors of the
 * input matrix, so no rounding and no rational arithmetic is involved;
 * a zero pivot search over the remaining block detects rank deficiency
 * exactly.
 */
int fractionFreeRank(IntegerMatrix matrix);

} // namespace exotic
