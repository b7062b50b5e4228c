#include "frobcode/errors.hpp"
#include "frobcode/verify.hpp"
#include "frobcode/weight.hpp"

#include <gtest/gtest.h>

#include <cmath>
#include <complex>
#include <random>

using namespace frobcode;

namespace {

// Floating-point character sum over the unit group, used only as an oracle.
double whom_float(const FiniteRing& R, Elem x) {
    const auto& chi = R.character();
    std::complex<double> sum = 0;
    for (Elem u : R.units()) {
        const double angle = 2 * M_PI * chi.exponent[R.mul(u, x)] / chi.modulus;
        sum += std::polar(1.0, angle);
    }
    return 1.0 - sum.real() / static_cast<double>(R.units().size());
}

double as_double(const Rational& r) { return r.raw().get_d(); }

const std::vector<std::string> kRings = {"Z2",        "Z4",          "Z6",          "Z8",      "Z9",
                                         "Z12",       "GF(2^2)",     "GF(2^3)",     "GF(3^2)", "GF(5)",
                                         "M2(GF(2))", "prod(Z2,Z2)", "prod(Z2,Z3)", "prod(Z4,Z2)"};

Rational q(long long a, long long b = 1) { return Rational(a, b); }

}  // namespace

TEST(Whom, MatchesFloatingCharacterSum) {
    for (const auto& text : kRings) {
        const RingPtr R = build_ring(text);
        const WeightTablePtr W = WeightTable::build(R);
        for (Elem x : R->all_elements())
            EXPECT_NEAR(as_double(W->weight(x)), whom_float(*R, x), 1e-9) << text << " x=" << R->format(x);
    }
}

TEST(Whom, LeeWeightOnZ4) {
    const WeightTablePtr W = WeightTable::build(build_ring("Z4"));
    EXPECT_EQ(W->weights(), (std::vector<Rational>{q(0), q(1), q(2), q(1)}));
}

TEST(Whom, ScaledHammingOnFields) {
    for (unsigned qq : {2u, 3u, 4u, 5u, 8u, 9u}) {
        const std::string text = qq == 4 ? "GF(2^2)" : qq == 8 ? "GF(2^3)" : qq == 9 ? "GF(3^2)" : "GF(" + std::to_string(qq) + ")";
        const WeightTablePtr W = WeightTable::build(build_ring(text));
        EXPECT_EQ(W->weight(0), q(0));
        for (Elem x = 1; x < qq; ++x) EXPECT_EQ(W->weight(x), q(qq, qq - 1)) << text;
    }
}

TEST(Whom, Z9AndZ6Values) {
    const WeightTablePtr z9 = WeightTable::build(build_ring("Z9"));
    for (Elem x = 1; x < 9; ++x) EXPECT_EQ(z9->weight(x), x % 3 == 0 ? q(3, 2) : q(1));
    const WeightTablePtr z6 = WeightTable::build(build_ring("Z6"));
    EXPECT_EQ(z6->weights(), (std::vector<Rational>{q(0), q(1, 2), q(3, 2), q(2), q(3, 2), q(1, 2)}));
}

TEST(Whom, ZeroSetOfF2xF2) {
    const RingPtr R = build_ring("prod(Z2,Z2)");
    const WeightTablePtr W = WeightTable::build(R);
    EXPECT_EQ(W->weight(R->parse_element("(1,1)")), q(0));
    EXPECT_EQ(W->weight(R->parse_element("(1,0)")), q(2));
    EXPECT_TRUE(verify_zero_set(*W).passed);
}

TEST(Whom, Mat2F2ByRank) {
    // rank 1 -> 4/3, rank 2 -> 2/3; rank computed from the entries directly.
    const RingPtr R = build_ring("M2(GF(2))");
    const WeightTablePtr W = WeightTable::build(R);
    for (int bits = 1; bits < 16; ++bits) {
        const int a = bits >> 3 & 1, b = bits >> 2 & 1, c = bits >> 1 & 1, d = bits & 1;
        const std::string text = "[" + std::to_string(a) + "," + std::to_string(b) + ";" + std::to_string(c) + "," +
                                 std::to_string(d) + "]";
        const bool full_rank = (a * d + b * c) % 2 == 1;
        EXPECT_EQ(W->weight(R->parse_element(text)), full_rank ? q(2, 3) : q(4, 3)) << text;
    }
}

TEST(Whom, SemisimpleClosedForm) {
    EXPECT_EQ(whom_semisimple({{2, 2}}, {1}), q(4, 3));
    EXPECT_EQ(whom_semisimple({{2, 2}}, {2}), q(2, 3));
    EXPECT_EQ(whom_semisimple({{2, 1}, {3, 1}}, {1, 1}), q(1, 2));
    EXPECT_EQ(whom_semisimple({{2, 1}, {3, 1}}, {1, 0}), q(2));
    EXPECT_EQ(whom_semisimple({{2, 1}, {3, 1}}, {0, 0}), q(0));
    EXPECT_THROW(whom_semisimple({{2, 2}}, {3}), PreconditionError);
}

TEST(Whom, SemisimpleViewAgreesOnProducts) {
    for (const char* text : {"prod(Z2,Z3)", "prod(GF(2^2),Z2)", "M2(GF(2))", "prod(M2(GF(2)),Z2)", "GF(2^3)"}) {
        const RingPtr R = build_ring(text);
        const WeightTablePtr W = WeightTable::build(R);
        SemisimpleView view(R);
        for (Elem x : R->all_elements())
            EXPECT_EQ(whom_semisimple(view.factors(), view.ranks(x)), W->weight(x)) << text;
    }
}

TEST(Whom, OneOutsideSocle) {
    for (const char* text : {"Z8", "Z9", "prod(Z4,Z2)", "Z12"}) {
        const RingPtr R = build_ring(text);
        const WeightTablePtr W = WeightTable::build(R);
        const auto soc = socle(R);
        for (Elem x : R->all_elements())
            if (!std::binary_search(soc.begin(), soc.end(), x)) EXPECT_EQ(W->weight(x), q(1)) << text;
    }
}

TEST(Identities, CosetSumExamples) {
    const RingPtr R = build_ring("Z4");
    const WeightTablePtr W = WeightTable::build(R);
    EXPECT_EQ(W->weight(1) + W->weight(3), q(2));  // I = {0, 2}, c = 1
    Rational total;
    for (const Rational& w : W->weights()) total += w;
    EXPECT_EQ(total, q(4));
}

TEST(Identities, CorrelationIdealBranches) {
    const RingPtr R = build_ring("Z4");
    const WeightTablePtr W = WeightTable::build(R);
    const RingModuleSpan whole = principal_ideal(R, 1, Side::Left);
    const IdentityValues sq = correlation_ideal(*W, whole, 1, 0);
    EXPECT_EQ(sq.lhs, q(6));
    EXPECT_TRUE(sq.holds());
    const IdentityValues killed = correlation_ideal(*W, whole, 0, 2);
    EXPECT_EQ(killed.lhs, q(8));
    EXPECT_TRUE(killed.holds());
    const IdentityValues halved = correlation_ideal(*W, whole, 2, 1);
    EXPECT_EQ(halved.rhs, q(4));
    EXPECT_TRUE(halved.holds());
}

TEST(Identities, CorrelationVectorsExamples) {
    const RingPtr f2 = build_ring("GF(2)");
    const WeightTablePtr W2 = WeightTable::build(f2);
    const IdentityValues v = correlation_vectors(*W2, {1}, {1}, 0);
    EXPECT_EQ(v.lhs, q(4));
    EXPECT_EQ(v.rhs, q(4));

    const WeightTablePtr W4 = WeightTable::build(build_ring("Z4"));
    const IdentityValues u = correlation_vectors(*W4, {1, 0}, {0, 1}, 0);
    EXPECT_EQ(u.lhs, q(16));
    EXPECT_TRUE(u.holds());
    EXPECT_THROW(correlation_vectors(*W4, {0, 0}, {0, 1}, 0), PreconditionError);
}

TEST(Identities, OrbitAndPoint) {
    const RingPtr R = build_ring("Z4");
    const OrbitAndPoint op = orbit_and_point(*R, {1, 0});
    EXPECT_EQ(op.orbit, (std::vector<Word>{{1, 0}, {3, 0}}));
    EXPECT_EQ(op.point.size(), 4u);
    EXPECT_EQ(op.id, (Word{1, 0}));
    EXPECT_THROW(orbit_and_point(*R, {0, 0}), PreconditionError);
    EXPECT_TRUE(same_point(*R, {1, 2}, {3, 2}));
    EXPECT_FALSE(same_point(*R, {1, 0}, {2, 0}));
}

TEST(Identities, OrbitsAgreeWithPointsExhaustively) {
    for (const char* text : {"Z4", "GF(3)", "prod(Z2,Z2)"}) {
        const RingPtr R = build_ring(text);
        std::vector<Word> words;
        for_each_word(R->order(), 2, 1u << 10, [&](const Word& g) {
            if (!is_zero(g)) words.push_back(g);
        });
        for (const auto& g : words)
            for (const auto& h : words)
                EXPECT_EQ(canonical_point_id(*R, g) == canonical_point_id(*R, h), same_point(*R, g, h)) << text;
    }
}

// Property: for random x and units u, w(ux) = w(xu) = w(x), and the
// coset sum over a random principal ideal is |I|.
TEST(Properties, RandomUnitOrbitsAndCosets) {
    std::mt19937_64 rng(2024);
    for (const auto& text : kRings) {
        const RingPtr R = build_ring(text);
        const WeightTablePtr W = WeightTable::build(R);
        const auto ideals = principal_ideals(R, Side::Left);
        std::uniform_int_distribution<std::size_t> pick(0, R->order() - 1), pu(0, R->units().size() - 1),
            pi(0, ideals.size() - 1);
        for (int t = 0; t < 200; ++t) {
            const Elem x = static_cast<Elem>(pick(rng)), u = R->units()[pu(rng)], c = static_cast<Elem>(pick(rng));
            EXPECT_EQ(W->weight(R->mul(u, x)), W->weight(x));
            EXPECT_EQ(W->weight(R->mul(x, u)), W->weight(x));
            const RingModuleSpan& I = ideals[pi(rng)];
            Rational sum;
            for (Elem y : I.scalars()) sum += W->weight(R->add(y, c));
            EXPECT_EQ(sum, Rational(static_cast<unsigned long long>(I.size()))) << text;
        }
    }
}

TEST(Properties, SumOfSquares) {
    for (const auto& text : kRings) {
        const RingPtr R = build_ring(text);
        const WeightTablePtr W = WeightTable::build(R);
        Rational sum;
        for (const Rational& w : W->weights()) sum += w * w;
        const Rational order(static_cast<unsigned long long>(R->order()));
        EXPECT_EQ(sum, order + order / Rational(static_cast<unsigned long long>(R->units().size()))) << text;
    }
}

TEST(Verify, SuitePassesExhaustively) {
    for (const char* text : {"Z4", "Z6", "Z8", "Z9", "prod(Z2,Z2)", "prod(Z2,Z3)", "GF(2^2)", "M2(GF(2))"}) {
        VerifyOptions opt;
        opt.full = true;
        const VerifyReport r = run_verify(WeightTable::build(build_ring(text)), opt);
        EXPECT_TRUE(r.passed()) << text;
        EXPECT_FALSE(r.sampled()) << text;
    }
}

TEST(Verify, FaultIsDetectedWithWitness) {
    VerifyOptions opt;
    opt.fault = 1;
    const VerifyReport r = run_verify(WeightTable::build(build_ring("Z4")), opt);
    EXPECT_FALSE(r.passed());
    const auto it = std::find_if(r.checks.begin(), r.checks.end(), [](const VerifyCheck& c) { return c.name == "coset sums"; });
    ASSERT_NE(it, r.checks.end());
    EXPECT_FALSE(it->passed);
    EXPECT_NE(it->witness.find("ideal"), std::string::npos);
}

TEST(Verify, LargeRingIsFlaggedAsSampled) {
    VerifyOptions opt;
    opt.samples = 20;
    const VerifyReport r = run_verify(WeightTable::build(build_ring("Z64")), opt);
    EXPECT_TRUE(r.passed());
    EXPECT_TRUE(r.sampled());
}
