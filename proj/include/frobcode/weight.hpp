#pragma once

#include "frobcode/finite_ring.hpp"
#include "frobcode/module.hpp"
#include "frobcode/rational.hpp"

#include <cstdint>
#include <memory>
#include <string>
#include <vector>

namespace frobcode {

/// Outcome of an exhaustive identity check; `witness` describes the first
/// failing instance.
struct CheckResult {
    bool passed = true;
    std::string witness;

    explicit operator bool() const { return passed; }
    static CheckResult fail(std::string witness) { return {false, std::move(witness)}; }
};

/// Both sides of an identity, evaluated independently.
struct IdentityValues {
    Rational lhs;
    Rational rhs;
    bool holds() const { return lhs == rhs; }
};

class WeightTable;
using WeightTablePtr = std::shared_ptr<const WeightTable>;

/// Homogeneous weight of every ring element, computed once from the
/// generating character. Every weight is an integer multiple of
/// 1/|R^x|, so hot loops work with the scaled integers |R^x| * w(x).
class WeightTable {
public:
    static WeightTablePtr build(RingPtr ring);

    const RingPtr& ring() const { return ring_; }
    const Rational& weight(Elem x) const { return weights_[x]; }
    const std::vector<Rational>& weights() const { return weights_; }

    std::int64_t scale() const { return scale_; }
    std::int64_t scaled(Elem x) const { return scaled_[x]; }
    std::int64_t scaled_word(const Word& w) const;
    Rational word(const Word& w) const { return Rational(scaled_word(w), scale_); }

    /// value / scale^power as an exact rational.
    Rational unscale(__int128 value, int power = 1) const;

    /// Test hook: a copy with w(x) shifted by `delta`.
    WeightTablePtr with_fault(Elem x, long long delta) const;

private:
    WeightTable() = default;

    RingPtr ring_;
    std::int64_t scale_ = 1;
    std::vector<Rational> weights_;
    std::vector<std::int64_t> scaled_;
};

/// w(x) = 1 - (1/|R^x|) sum_{u in R^x} chi(ux), evaluated exactly by
/// reducing sum_u t^{c(ux)} modulo the e-th cyclotomic polynomial.
/// Throws InconsistencyError when the remainder is not a constant.
Rational whom(const FiniteRing& R, Elem x);

/// Coordinate sum of weights.
Rational whom_word(const WeightTable& W, const Word& v);

/// Closed form for products of matrix rings over fields:
/// 1 - prod_i (-1)^{r_i} / ((q_i^{m_i} - 1)(q_i^{m_i-1} - 1)...(q_i^{m_i-r_i+1} - 1)).
/// Throws PreconditionError when a rank is out of range.
Rational whom_semisimple(const std::vector<SimpleFactor>& factors, const std::vector<unsigned>& ranks);

/// Zero set equals S0, weights are nonnegative and w(x+y) = w(x) for y in S0.
CheckResult verify_zero_set(const WeightTable& W);

struct CosetSumOptions {
    bool include_right_ideals = true;
    /// Upper bound on how many sums Rx + Ry of two distinct principal left
    /// ideals are checked in addition to the principal ones.
    std::size_t max_pair_sums = 256;
};

/// sum_{x in I} w(x + c) = |I| for principal left and right ideals I,
/// sums of two principal left ideals, and every c in R.
CheckResult verify_coset_sum(const WeightTable& W, const CosetSumOptions& options = {});

/// lhs = sum_{x in I} w(x) w(xr + s); rhs = |I| + |I| (|R^x cap (1 + I^perp)| / |R^x|)(1 - w(s))
/// when |Ir| = |I|, |I| when 0 < |Ir| < |I|, and |I| w(s) when Ir = {0}.
IdentityValues correlation_ideal(const WeightTable& W, const RingModuleSpan& I, Elem r, Elem s);

/// lhs = sum_{x in R^k} w(x.g) w(x.h + s); rhs = |R|^k + (|R|^k / |gR^x|)(1 - w(s))
/// when gR = hR, else |R|^k. Requires g, h != 0.
IdentityValues correlation_vectors(const WeightTable& W, const Word& g, const Word& h, Elem s);

/// Same identity for every s in R at once (index s of the result).
std::vector<IdentityValues> correlation_vectors_all(const WeightTable& W, const Word& g, const Word& h);

struct OrbitAndPoint {
    std::vector<Word> orbit;  ///< gR^x, sorted
    std::vector<Word> point;  ///< gR, sorted
    Word id;                  ///< smallest element of the orbit
};

/// Throws PreconditionError for the zero vector.
OrbitAndPoint orbit_and_point(const FiniteRing& R, const Word& g);

/// Smallest element of gR^x.
Word canonical_point_id(const FiniteRing& R, const Word& g);

/// gR = hR.
bool same_point(const FiniteRing& R, const Word& g, const Word& h);

}  // namespace frobcode
