#include "frobcode/cyclotomic.hpp"

#include "frobcode/errors.hpp"

#include <map>

namespace frobcode {

void trim(IntPoly& p) {
    while (!p.empty() && p.back() == 0) p.pop_back();
}

IntPoly divide_exact_monic(const IntPoly& a, const IntPoly& b) {
    IntPoly rem = a;
    trim(rem);
    if (b.empty() || b.back() != 1) throw InconsistencyError("divisor is not monic");
    const std::size_t db = b.size() - 1;
    if (rem.size() < b.size()) {
        if (!rem.empty()) throw InconsistencyError("polynomial division is not exact");
        return {};
    }
    IntPoly quot(rem.size() - db, 0);
    for (std::size_t d = rem.size(); d-- > db;) {
        const std::int64_t c = rem[d];
        if (c == 0) continue;
        quot[d - db] = c;
        for (std::size_t i = 0; i <= db; ++i) rem[d - db + i] -= c * b[i];
    }
    trim(rem);
    if (!rem.empty()) throw InconsistencyError("polynomial division is not exact");
    trim(quot);
    return quot;
}

IntPoly cyclotomic_polynomial(unsigned e) {
    if (e == 0) throw PreconditionError("cyclotomic_polynomial: e must be positive");
    // Bottom-up over the divisors of e so each Phi_d is built once.
    std::map<unsigned, IntPoly> phi;
    for (unsigned d = 1; d <= e; ++d) {
        if (e % d != 0) continue;
        IntPoly p(d + 1, 0);
        p[0] = -1;
        p[d] = 1;
        for (const auto& [f, phi_f] : phi)
            if (d % f == 0) p = divide_exact_monic(p, phi_f);
        phi.emplace(d, std::move(p));
    }
    return phi.at(e);
}

IntPoly remainder_monic(IntPoly a, const IntPoly& monic) {
    trim(a);
    if (monic.empty() || monic.back() != 1) throw InconsistencyError("modulus is not monic");
    const std::size_t deg = monic.size() - 1;
    // Only the nonzero terms of the modulus take part in each elimination step.
    std::vector<std::pair<std::size_t, std::int64_t>> terms;
    for (std::size_t i = 0; i < deg; ++i)
        if (monic[i] != 0) terms.emplace_back(i, monic[i]);
    for (std::size_t d = a.size(); d-- > deg;) {
        const std::int64_t c = a[d];
        if (c == 0) continue;
        a[d] = 0;
        for (const auto& [i, m] : terms) a[d - deg + i] -= c * m;
    }
    trim(a);
    return a;
}

}  // namespace frobcode
