#pragma once

#include <cstdint>
#include <vector>

namespace frobcode {

/// Integer polynomial, coefficient of t^i at index i. Trailing zeros trimmed.
using IntPoly = std::vector<std::int64_t>;

void trim(IntPoly& p);

/// Phi_e(t), via t^e - 1 = prod_{d | e} Phi_d(t).
IntPoly cyclotomic_polynomial(unsigned e);

/// Remainder of `a` modulo a monic polynomial.
IntPoly remainder_monic(IntPoly a, const IntPoly& monic);

/// Exact quotient a / b for monic b; throws if the division is not exact.
IntPoly divide_exact_monic(const IntPoly& a, const IntPoly& b);

}  // namespace frobcode
