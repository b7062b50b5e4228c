#include "frobcode/weight.hpp"

#include "frobcode/cyclotomic.hpp"
#include "frobcode/errors.hpp"

#include <algorithm>
#include <set>

namespace frobcode {

namespace {

// Character sum sum_{u in R^x} chi(ux) as an integer, via reduction mod Phi_e.
std::int64_t character_sum(const FiniteRing& R, Elem x, const IntPoly& phi, std::vector<std::int64_t>& counts) {
    const std::uint32_t e = R.additive_exponent();
    counts.assign(e, 0);
    for (Elem u : R.units()) ++counts[R.char_exponent(R.mul(u, x))];
    IntPoly rem = remainder_monic(IntPoly(counts.begin(), counts.end()), phi);
    if (rem.size() > 1)
        throw InconsistencyError("character sum at " + R.format(x) + " in " + R.name() +
                                 " is not rational; the character is not generating");
    return rem.empty() ? 0 : rem[0];
}

std::string ideal_name(const FiniteRing& R, const RingModuleSpan& I) {
    std::string gens;
    for (const auto& g : I.generators()) gens += (gens.empty() ? "" : ",") + R.format(g.at(0));
    if (I.side() == Side::Left) return "R{" + gens + "} (left, size " + std::to_string(I.size()) + ")";
    return "{" + gens + "}R (right, size " + std::to_string(I.size()) + ")";
}

}  // namespace

WeightTablePtr WeightTable::build(RingPtr ring) {
    auto table = std::shared_ptr<WeightTable>(new WeightTable());
    const FiniteRing& R = *ring;
    const IntPoly phi = cyclotomic_polynomial(R.additive_exponent());
    const auto units = static_cast<std::int64_t>(R.units().size());
    table->scale_ = units;
    table->weights_.resize(R.order());
    table->scaled_.resize(R.order());
    std::vector<std::int64_t> counts;
    for (std::size_t x = 0; x < R.order(); ++x) {
        const std::int64_t k = character_sum(R, static_cast<Elem>(x), phi, counts);
        table->scaled_[x] = units - k;
        table->weights_[x] = Rational(units - k, units);
    }
    table->ring_ = std::move(ring);
    return table;
}

std::int64_t WeightTable::scaled_word(const Word& w) const {
    std::int64_t acc = 0;
    for (Elem e : w) acc += scaled_[e];
    return acc;
}

Rational WeightTable::unscale(__int128 value, int power) const {
    __int128 den = 1;
    for (int i = 0; i < power; ++i) den *= scale_;
    return Rational::from_int128(value, den);
}

WeightTablePtr WeightTable::with_fault(Elem x, long long delta) const {
    auto table = std::shared_ptr<WeightTable>(new WeightTable(*this));
    table->weights_[x] += Rational(delta);
    table->scaled_[x] += delta * scale_;
    return table;
}

Rational whom(const FiniteRing& R, Elem x) {
    const IntPoly phi = cyclotomic_polynomial(R.additive_exponent());
    std::vector<std::int64_t> counts;
    const std::int64_t k = character_sum(R, x, phi, counts);
    const auto units = static_cast<long long>(R.units().size());
    return Rational(1) - Rational(k, units);
}

Rational whom_word(const WeightTable& W, const Word& v) { return W.word(v); }

Rational whom_semisimple(const std::vector<SimpleFactor>& factors, const std::vector<unsigned>& ranks) {
    if (factors.size() != ranks.size()) throw PreconditionError("whom_semisimple: one rank per factor required");
    Rational product(1);
    for (std::size_t i = 0; i < factors.size(); ++i) {
        const auto q = static_cast<long long>(factors[i].q);
        const unsigned m = factors[i].m, r = ranks[i];
        if (r > m) throw PreconditionError("whom_semisimple: rank " + std::to_string(r) + " exceeds " + std::to_string(m));
        mpz_class den = 1;
        for (unsigned j = 0; j < r; ++j) {
            mpz_class qpow;
            mpz_ui_pow_ui(qpow.get_mpz_t(), static_cast<unsigned long>(q), m - j);
            den *= qpow - 1;
        }
        product *= Rational(mpz_class(r % 2 == 0 ? 1 : -1), den);
    }
    return Rational(1) - product;
}

CheckResult verify_zero_set(const WeightTable& W) {
    const FiniteRing& R = *W.ring();
    const std::vector<Elem> s0 = order2_socle_part(R).even_sums;
    std::vector<Elem> zeros;
    for (std::size_t x = 0; x < R.order(); ++x) {
        if (W.scaled(static_cast<Elem>(x)) < 0)
            return CheckResult::fail("negative weight w(" + R.format(static_cast<Elem>(x)) + ") = " +
                                     W.weight(static_cast<Elem>(x)).to_string());
        if (W.scaled(static_cast<Elem>(x)) == 0) zeros.push_back(static_cast<Elem>(x));
    }
    if (zeros != s0) {
        std::string z, s;
        for (Elem e : zeros) z += (z.empty() ? "" : ",") + R.format(e);
        for (Elem e : s0) s += (s.empty() ? "" : ",") + R.format(e);
        return CheckResult::fail("zero set {" + z + "} differs from S0 {" + s + "}");
    }
    for (std::size_t x = 0; x < R.order(); ++x)
        for (Elem y : s0)
            if (W.scaled(R.add(static_cast<Elem>(x), y)) != W.scaled(static_cast<Elem>(x)))
                return CheckResult::fail("w(x+y) != w(x) for x = " + R.format(static_cast<Elem>(x)) +
                                         ", y = " + R.format(y));
    return {};
}

CheckResult verify_coset_sum(const WeightTable& W, const CosetSumOptions& options) {
    const RingPtr& ring = W.ring();
    const FiniteRing& R = *ring;
    std::vector<RingModuleSpan> ideals = principal_ideals(ring, Side::Left);
    const std::size_t left_count = ideals.size();
    if (options.include_right_ideals)
        for (auto& I : principal_ideals(ring, Side::Right)) ideals.push_back(std::move(I));

    std::set<std::vector<Word>> seen;
    for (const auto& I : ideals) seen.insert(I.elements());
    std::size_t added = 0;
    for (std::size_t i = 0; i < left_count && added < options.max_pair_sums; ++i)
        for (std::size_t j = i + 1; j < left_count && added < options.max_pair_sums; ++j) {
            RingModuleSpan sum =
                span(ring, {ideals[i].generators().front(), ideals[j].generators().front()}, Side::Left, 1);
            if (!seen.insert(sum.elements()).second) continue;
            ideals.push_back(std::move(sum));
            ++added;
        }

    for (const auto& I : ideals) {
        const std::vector<Elem> members = I.scalars();
        const std::int64_t expected = static_cast<std::int64_t>(members.size()) * W.scale();
        for (std::size_t c = 0; c < R.order(); ++c) {
            std::int64_t total = 0;
            for (Elem x : members) total += W.scaled(R.add(x, static_cast<Elem>(c)));
            if (total != expected)
                return CheckResult::fail("ideal " + ideal_name(R, I) + ", c = " + R.format(static_cast<Elem>(c)) +
                                         ": sum = " + W.unscale(total).to_string() + ", expected " +
                                         std::to_string(members.size()));
        }
    }
    return {};
}

IdentityValues correlation_ideal(const WeightTable& W, const RingModuleSpan& I, Elem r, Elem s) {
    const FiniteRing& R = *W.ring();
    if (I.dimension() != 1 || I.size() <= 1) throw PreconditionError("correlation_ideal: I must be a nonzero ideal");
    const std::vector<Elem> members = I.scalars();

    __int128 lhs = 0;
    std::set<Elem> image;
    for (Elem x : members) {
        lhs += static_cast<__int128>(W.scaled(x)) * W.scaled(R.add(R.mul(x, r), s));
        image.insert(R.mul(x, r));
    }

    const auto size = static_cast<long long>(members.size());
    Rational rhs(size);
    if (image.size() == 1) {
        // Ir = {0}: every term is w(x) w(s).
        rhs *= W.weight(s);
    } else if (image.size() == members.size()) {
        // R^x cap (1 + I^perp) = {u : xu = x for all x in I}.
        long long fixing = 0;
        for (Elem u : R.units())
            if (std::all_of(members.begin(), members.end(), [&](Elem x) { return R.mul(x, u) == x; })) ++fixing;
        rhs += Rational(size) * Rational(fixing, static_cast<long long>(R.units().size())) *
               (Rational(1) - W.weight(s));
    }
    return {W.unscale(lhs, 2), rhs};
}

std::vector<IdentityValues> correlation_vectors_all(const WeightTable& W, const Word& g, const Word& h) {
    const FiniteRing& R = *W.ring();
    if (g.size() != h.size()) throw PreconditionError("correlation_vectors: g and h differ in length");
    if (is_zero(g) || is_zero(h)) throw PreconditionError("correlation_vectors: g and h must be nonzero");
    const std::size_t n = R.order(), k = g.size();

    // Joint distribution of (x.g, x.h) over x in R^k.
    std::vector<std::int64_t> joint(n * n, 0);
    for_each_word(n, k, std::uint64_t{1} << 24, [&](const Word& x) { ++joint[dot(R, x, g) * n + dot(R, x, h)]; });

    const std::uint64_t total = checked_power(n, k, std::uint64_t{1} << 24);
    const bool related = same_point(R, g, h);
    const std::size_t orbit = orbit_and_point(R, g).orbit.size();

    std::vector<IdentityValues> out;
    out.reserve(n);
    for (std::size_t s = 0; s < n; ++s) {
        __int128 lhs = 0;
        for (std::size_t a = 0; a < n; ++a) {
            const std::int64_t wa = W.scaled(static_cast<Elem>(a));
            if (wa == 0) continue;
            for (std::size_t b = 0; b < n; ++b) {
                const std::int64_t cnt = joint[a * n + b];
                if (cnt == 0) continue;
                lhs += static_cast<__int128>(cnt) * wa * W.scaled(R.add(static_cast<Elem>(b), static_cast<Elem>(s)));
            }
        }
        Rational rhs(static_cast<unsigned long long>(total));
        if (related)
            rhs += Rational(static_cast<long long>(total), static_cast<long long>(orbit)) *
                   (Rational(1) - W.weight(static_cast<Elem>(s)));
        out.push_back({W.unscale(lhs, 2), rhs});
    }
    return out;
}

IdentityValues correlation_vectors(const WeightTable& W, const Word& g, const Word& h, Elem s) {
    return correlation_vectors_all(W, g, h).at(s);
}

OrbitAndPoint orbit_and_point(const FiniteRing& R, const Word& g) {
    if (is_zero(g)) throw PreconditionError("orbit_and_point: zero vector has no point");
    std::set<Word> orbit, point;
    for (Elem u : R.units()) orbit.insert(scale_right(R, g, u));
    for (std::size_t r = 0; r < R.order(); ++r) point.insert(scale_right(R, g, static_cast<Elem>(r)));
    OrbitAndPoint out;
    out.orbit.assign(orbit.begin(), orbit.end());
    out.point.assign(point.begin(), point.end());
    out.id = out.orbit.front();
    return out;
}

Word canonical_point_id(const FiniteRing& R, const Word& g) {
    Word best = g;
    for (Elem u : R.units()) {
        Word cand = scale_right(R, g, u);
        if (cand < best) best = std::move(cand);
    }
    return best;
}

bool same_point(const FiniteRing& R, const Word& g, const Word& h) {
    std::set<Word> gR, hR;
    for (std::size_t r = 0; r < R.order(); ++r) {
        gR.insert(scale_right(R, g, static_cast<Elem>(r)));
        hR.insert(scale_right(R, h, static_cast<Elem>(r)));
    }
    return gR == hR;
}

}  // namespace frobcode
