#include "frobcode/errors.hpp"
#include "frobcode/finite_ring.hpp"
#include "frobcode/module.hpp"
#include "frobcode/rational.hpp"

#include <gtest/gtest.h>

#include <array>
#include <numeric>
#include <random>
#include <set>

using namespace frobcode;

namespace {

using Mat2 = std::array<int, 4>;

Mat2 mat_mul(const Mat2& a, const Mat2& b) {
    return {(a[0] * b[0] + a[1] * b[2]) % 2, (a[0] * b[1] + a[1] * b[3]) % 2, (a[2] * b[0] + a[3] * b[2]) % 2,
            (a[2] * b[1] + a[3] * b[3]) % 2};
}

std::string mat_text(const Mat2& a) {
    return "[" + std::to_string(a[0]) + "," + std::to_string(a[1]) + ";" + std::to_string(a[2]) + "," +
           std::to_string(a[3]) + "]";
}

std::vector<Mat2> all_mat2() {
    std::vector<Mat2> out;
    for (int bits = 0; bits < 16; ++bits) out.push_back({bits >> 3 & 1, bits >> 2 & 1, bits >> 1 & 1, bits & 1});
    return out;
}

}  // namespace

TEST(RingSpec, OrdersOfConstructors) {
    EXPECT_EQ(build_ring("Z4")->order(), 4u);
    EXPECT_EQ(build_ring("GF(2^3)")->order(), 8u);
    EXPECT_EQ(build_ring("GF(3^2)")->order(), 9u);
    EXPECT_EQ(build_ring("M2(GF(2))")->order(), 16u);
    EXPECT_EQ(build_ring("prod(Z2,Z3)")->order(), 6u);
    EXPECT_EQ(build_ring("prod(Z2,GF(2^2),Z3)")->order(), 24u);
}

TEST(RingSpec, RoundTripText) {
    for (const char* text : {"Z4", "GF(2^2)", "M2(GF(3))", "prod(Z2,Z2)"}) {
        const RingSpec spec = parse_ring_spec(text);
        EXPECT_EQ(parse_ring_spec(to_string(spec)).kind.index(), spec.kind.index());
        EXPECT_EQ(build_ring(to_string(spec))->order(), build_ring(text)->order());
    }
}

TEST(RingSpec, ParseErrorsCarryOffset) {
    try {
        parse_ring_spec("GF(2^2");
        FAIL() << "no error";
    } catch (const ParseError& e) {
        EXPECT_GE(e.position(), 5u);
    }
    EXPECT_THROW(parse_ring_spec("Q7"), ParseError);
    EXPECT_THROW(parse_ring_spec("Z4x"), ParseError);
    EXPECT_THROW(parse_ring_spec(""), ParseError);
}

TEST(RingSpec, StructuralErrors) {
    EXPECT_THROW(build_ring("GF(4)"), SpecError);
    EXPECT_THROW(build_ring("Z1"), SpecError);
    EXPECT_THROW(build_ring("GF(2^2,poly=1,0,1)"), SpecError);  // x^2+1 = (x+1)^2
}

TEST(RingSpec, OrderCap) {
    EXPECT_THROW(build_ring("Z5000"), CapError);
    BuildOptions small;
    small.order_cap = 8;
    EXPECT_THROW(build_ring("M2(GF(2))", small), CapError);
}

TEST(FiniteRing, ZmMatchesModularArithmetic) {
    for (unsigned m : {4u, 6u, 9u, 12u}) {
        const RingPtr R = build_ring("Z" + std::to_string(m));
        for (unsigned a = 0; a < m; ++a)
            for (unsigned b = 0; b < m; ++b) {
                const Elem x = R->parse_element(std::to_string(a)), y = R->parse_element(std::to_string(b));
                EXPECT_EQ(R->format(R->add(x, y)), std::to_string((a + b) % m));
                EXPECT_EQ(R->format(R->mul(x, y)), std::to_string(a * b % m));
            }
        std::size_t coprime = 0;
        for (unsigned a = 1; a < m; ++a) coprime += std::gcd(a, m) == 1;
        EXPECT_EQ(R->units().size(), coprime);
    }
}

TEST(FiniteRing, Mat2F2MatchesIntegerMatrices) {
    const RingPtr R = build_ring("M2(GF(2))");
    std::size_t invertible = 0;
    for (const Mat2& a : all_mat2()) {
        const Elem x = R->parse_element(mat_text(a));
        EXPECT_EQ(R->format(x), mat_text(a));
        const int det = (a[0] * a[3] + a[1] * a[2]) % 2;
        EXPECT_EQ(R->is_unit(x), det == 1) << mat_text(a);
        invertible += det;
        for (const Mat2& b : all_mat2())
            EXPECT_EQ(R->format(R->mul(x, R->parse_element(mat_text(b)))), mat_text(mat_mul(a, b)));
    }
    EXPECT_EQ(invertible, 6u);
    EXPECT_EQ(R->units().size(), 6u);
    EXPECT_FALSE(R->is_commutative());
    EXPECT_EQ(R->format(R->one()), "[1,0;0,1]");
}

TEST(FiniteRing, Gf4MatchesPolynomials) {
    // index = c0 + 2 c1, modulus x^2 + x + 1
    const RingPtr R = build_ring("GF(2^2)");
    auto mul = [](unsigned a, unsigned b) {
        unsigned p = 0;
        for (int i = 0; i < 2; ++i)
            if (b >> i & 1) p ^= a << i;
        if (p & 4) p ^= 0b111;
        return p;
    };
    for (unsigned a = 0; a < 4; ++a)
        for (unsigned b = 0; b < 4; ++b) {
            EXPECT_EQ(R->add(a, b), a ^ b);
            EXPECT_EQ(R->mul(a, b), mul(a, b));
        }
    EXPECT_EQ(R->units().size(), 3u);
}

TEST(FiniteRing, OppositeReversesProducts) {
    const RingPtr R = build_ring("M2(GF(2))");
    const RingPtr op = opposite(*R);
    EXPECT_TRUE(op->is_opposite());
    for (Elem a : R->all_elements())
        for (Elem b : R->all_elements()) EXPECT_EQ(op->mul(a, b), R->mul(b, a));
}

TEST(FiniteRing, CharacterIsGeneratingAndAdditive) {
    for (const char* text : {"Z4", "Z6", "GF(3^2)", "M2(GF(2))", "prod(Z2,Z2)"}) {
        const RingPtr R = build_ring(text);
        EXPECT_TRUE(is_additive_character(*R, R->character())) << text;
        EXPECT_TRUE(is_generating_character(*R, R->character())) << text;
    }
}

TEST(FiniteRing, NonGeneratingCharacterRejected) {
    const RingPtr R = build_ring("Z4");
    GeneratingCharacter c = R->character();
    for (auto& x : c.exponent) x = x * 2 % c.modulus;  // kills the ideal {0, 2}
    EXPECT_FALSE(is_generating_character(*R, c));
    EXPECT_THROW(with_character(*R, c), CharacterError);
}

TEST(FiniteRing, TrivialCharacterOnGf4Rejected) {
    const RingPtr R = build_ring("GF(2^2)");
    GeneratingCharacter c = R->character();
    std::fill(c.exponent.begin(), c.exponent.end(), 0u);
    EXPECT_THROW(with_character(*R, c), CharacterError);
}

TEST(Module, RowAndColumnSpacesAgree) {
    // Fixed-seed random matrices; sizes are compared against a brute-force count.
    std::mt19937_64 rng(7);
    for (const char* text : {"Z4", "Z6", "M2(GF(2))", "prod(Z2,Z3)"}) {
        const RingPtr R = build_ring(text);
        std::uniform_int_distribution<std::size_t> dim(1, 3), pick(0, R->order() - 1);
        for (int t = 0; t < 20; ++t) {
            const std::size_t m = dim(rng), n = dim(rng);
            Matrix A(m, Word(n));
            for (auto& row : A)
                for (auto& e : row) e = static_cast<Elem>(pick(rng));
            std::set<Word> rows, cols;
            for_each_word(R->order(), m, 1u << 20, [&](const Word& x) { rows.insert(row_times(*R, x, A)); });
            for_each_word(R->order(), n, 1u << 20, [&](const Word& y) { cols.insert(times_column(*R, A, y)); });
            const RowColumnCheck c = check_row_column_cardinality(R, A);
            EXPECT_EQ(c.row_space, rows.size());
            EXPECT_EQ(c.column_space, cols.size());
            EXPECT_EQ(rows.size(), cols.size()) << text;
        }
    }
}

TEST(Module, AnnihilatorSizesMultiplyToWholeSpace) {
    const RingPtr R = build_ring("M2(GF(2))");
    const RingModuleSpan S = span(R, {Word{R->parse_element("[1,0;0,0]"), R->parse_element("[0,1;0,0]")}},
                                  Side::Left, 2);
    const RingModuleSpan A = annihilator(S, Side::Right);
    EXPECT_EQ(S.size() * A.size(), 256u);
}

TEST(Module, SocleOfZ8AndS0OfProduct) {
    const RingPtr z8 = build_ring("Z8");
    EXPECT_EQ(socle(z8), (std::vector<Elem>{0, 4}));
    const RingPtr p = build_ring("prod(Z2,Z2)");
    const Order2SoclePart s = order2_socle_part(*p);
    EXPECT_EQ(s.generators.size(), 2u);
    EXPECT_EQ(s.even_sums.size(), 2u);
}

TEST(Module, PrincipalIdealsOfZ4) {
    const auto ideals = principal_ideals(build_ring("Z4"), Side::Left);
    ASSERT_EQ(ideals.size(), 2u);
    EXPECT_EQ(ideals[0].size(), 4u);
    EXPECT_EQ(ideals[1].size(), 2u);
}

TEST(Module, CheckedPowerCaps) {
    EXPECT_EQ(checked_power(4, 3, 64), 64u);
    EXPECT_THROW(checked_power(4, 4, 64), CapError);
}

TEST(Rational, ArithmeticAndText) {
    const Rational a(3, 2), b(-4, 6);
    EXPECT_EQ((a + b).to_string(), "5/6");
    EXPECT_EQ((a * b).to_string(), "-1");
    EXPECT_EQ(Rational::parse("10/4"), Rational(5, 2));
    EXPECT_TRUE(Rational(6, 3).is_integer());
    EXPECT_EQ(Rational(6, 3).to_integer(), 2);
    EXPECT_THROW(Rational::parse("1/0"), ParseError);
    EXPECT_THROW(Rational::parse("x"), ParseError);
}
