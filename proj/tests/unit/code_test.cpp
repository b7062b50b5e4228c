#include "frobcode/code.hpp"
#include "frobcode/errors.hpp"

#include <gtest/gtest.h>

#include <algorithm>
#include <random>

using namespace frobcode;

namespace {

Rational q(long long a, long long b = 1) { return Rational(a, b); }

LinearCode code(const char* ring, Matrix G) { return build_code(build_ring(ring), std::move(G)); }

// Brute-force weight histogram straight from the weight table.
WeightHistogram brute_histogram(const WeightTable& W, const Matrix& G) {
    const FiniteRing& R = *W.ring();
    std::set<Word> words;
    for_each_word(R.order(), G.size(), 1u << 20, [&](const Word& x) { words.insert(row_times(R, x, G)); });
    WeightHistogram h;
    for (const auto& w : words) {
        Rational sum;
        for (Elem e : w) sum += W.weight(e);
        ++h[sum];
    }
    return h;
}

}  // namespace

TEST(Code, F3IdentityProfile) {
    const LinearCode c = code("GF(3)", {{1, 0}, {0, 1}});
    EXPECT_EQ(c.size(), 9u);
    EXPECT_EQ(c.zero_class().size(), 1u);
    EXPECT_EQ(weight_distribution(c), (WeightHistogram{{q(0), 1}, {q(3, 2), 4}, {q(3), 4}}));
    EXPECT_EQ(modular_index(c), q(1, 2));
    const auto p = two_weight_profile(c);
    ASSERT_TRUE(p);
    EXPECT_EQ(p->w1, q(3, 2));
    EXPECT_EQ(p->w2, q(3));
    EXPECT_EQ(p->b1, 4u);
    EXPECT_EQ(p->b2, 4u);
    EXPECT_EQ(p->index, q(1, 2));
}

TEST(Code, FrequenciesMatchClosedForms) {
    // b1 = ((w2-n)|C| - w2|C0|)/(w2-w1), b2 = ((n-w1)|C| + w1|C0|)/(w2-w1)
    for (const auto& [ring, G] : std::vector<std::pair<const char*, Matrix>>{
             {"GF(3)", {{1, 0}, {0, 1}}},
             {"Z4", {{1, 1, 0, 1}, {0, 1, 1, 3}}},
             {"GF(2^2)", {{1, 0, 1}, {0, 1, 1}}}}) {
        const LinearCode c = code(ring, G);
        const auto p = two_weight_profile(c);
        if (!p) continue;
        const Rational n(static_cast<unsigned long long>(p->n)), C(static_cast<unsigned long long>(p->size)),
            C0(static_cast<unsigned long long>(p->zero_count));
        EXPECT_EQ(Rational(static_cast<unsigned long long>(p->b1)), ((p->w2 - n) * C - p->w2 * C0) / (p->w2 - p->w1));
        EXPECT_EQ(Rational(static_cast<unsigned long long>(p->b2)), ((n - p->w1) * C + p->w1 * C0) / (p->w2 - p->w1));
    }
}

TEST(Code, HistogramMatchesBruteForce) {
    std::mt19937_64 rng(11);
    for (const char* ring : {"Z4", "GF(3)", "prod(Z2,Z2)", "Z6"}) {
        const WeightTablePtr W = WeightTable::build(build_ring(ring));
        std::uniform_int_distribution<std::size_t> pick(0, W->ring()->order() - 1);
        for (int t = 0; t < 10; ++t) {
            Matrix G(2, Word(3));
            for (auto& row : G)
                for (auto& e : row) e = static_cast<Elem>(pick(rng));
            for (std::size_t j = 0; j < 3; ++j)
                if (G[0][j] == 0 && G[1][j] == 0) G[0][j] = W->ring()->one();
            EXPECT_EQ(weight_distribution(build_code(W, G)), brute_histogram(*W, G)) << ring;
        }
    }
}

TEST(Code, SpanAgreesWithEnumeration) {
    const WeightTablePtr W = WeightTable::build(build_ring("Z4"));
    const Matrix G = {{1, 2, 3}, {0, 2, 2}, {2, 0, 2}};
    EXPECT_EQ(build_code(W, G).codewords(), build_code_by_span(W, G).codewords());
}

TEST(Code, InvalidGenerators) {
    const RingPtr R = build_ring("GF(3)");
    EXPECT_THROW(build_code(R, {{1, 0}, {0, 0}}), CodeError);
    EXPECT_THROW(build_code(R, {{1, 0}, {0}}), CodeError);
    EXPECT_THROW(build_code(R, {}), CodeError);
    EXPECT_THROW(build_code(R, {{1, 5}}), CodeError);
    EXPECT_THROW(build_code(R, Matrix(12, Word{1}), 1000), CapError);
}

TEST(Code, NonModularCode) {
    // Column multiplicities 2 and 1 on two points with orbit size 2.
    const LinearCode c = code("GF(3)", {{1, 1, 0}, {0, 0, 1}});
    EXPECT_FALSE(modular_index(c));
    EXPECT_THROW(lemma_corr_code(c, {0, 0, 0}), PreconditionError);
}

TEST(Code, OneWeightCharacterization) {
    // All points of PG(F_2^2): the simplex code, one nonzero weight.
    const LinearCode simplex = code("GF(2)", {{1, 0, 1}, {0, 1, 1}});
    const OneWeightCheck s = one_weight_characterization(simplex);
    EXPECT_TRUE(s.is_one_weight);
    EXPECT_TRUE(s.rhs_holds);
    EXPECT_TRUE(s.agree);
    const OneWeightCheck f = one_weight_characterization(code("GF(3)", {{1, 0}, {0, 1}}));
    EXPECT_FALSE(f.is_one_weight);
    EXPECT_TRUE(f.agree);
}

TEST(Code, LemmaIdentitiesOnF3Identity) {
    const LinearCode c = code("GF(3)", {{1, 0}, {0, 1}});
    const auto p = two_weight_profile(c);
    ASSERT_TRUE(p);
    const LemmaReport r = check_lemmas(c, p);
    EXPECT_TRUE(r.exhaustive);
    EXPECT_EQ(r.words_tested, 9u);
    EXPECT_TRUE(r.all()) << r.witness;
    // |C|(n^2 + rn - r w(d)) at d = 0: 9 (4 + 1) = 45
    const IdentityValues v = lemma_corr_code(c, {0, 0});
    EXPECT_EQ(v.lhs, q(45));
    EXPECT_TRUE(v.holds());
}

// Property: the index does not change under column permutations, right
// multiplication of a column by a unit, or an added zero row.
TEST(Properties, IndexInvariantUnderMonomialMaps) {
    std::mt19937_64 rng(99);
    for (const char* ring : {"Z4", "GF(3)", "GF(2^2)"}) {
        const RingPtr R = build_ring(ring);
        const LinearCode base = code(ring, {{1, 0, 1, 1, 0, 1}, {0, 1, 1, static_cast<Elem>(3 % R->order()), 1, 0}});
        const auto r0 = modular_index(base);
        std::uniform_int_distribution<std::size_t> pu(0, R->units().size() - 1);
        for (int t = 0; t < 20; ++t) {
            Matrix G = base.generator();
            std::vector<std::size_t> perm(base.n());
            std::iota(perm.begin(), perm.end(), 0);
            std::shuffle(perm.begin(), perm.end(), rng);
            Matrix H(G.size(), Word(base.n()));
            for (std::size_t j = 0; j < base.n(); ++j) {
                const Elem u = R->units()[pu(rng)];
                for (std::size_t i = 0; i < G.size(); ++i) H[i][perm[j]] = R->mul(G[i][j], u);
            }
            H.push_back(Word(base.n(), 0));
            const LinearCode moved = build_code(R, H);
            EXPECT_EQ(modular_index(moved), r0) << ring;
            EXPECT_EQ(weight_distribution(moved), weight_distribution(base)) << ring;
        }
    }
}

TEST(CodeFile, ParsesAndReportsErrors) {
    const CodeFile f = parse_code_file("# comment\nring: GF(3)\nk: 2 n: 2\n1 0\n\n0 1 # row two\n");
    EXPECT_EQ(f.ring->order(), 3u);
    EXPECT_EQ(f.generator, (Matrix{{1, 0}, {0, 1}}));
    try {
        parse_code_file("ring: GF(3)\nk: 2 n: 2\n1 0\n0 9\n");
        FAIL() << "no error";
    } catch (const ParseError& e) {
        EXPECT_EQ(e.line(), 4u);
    }
    EXPECT_THROW(parse_code_file("ring: GF(3)\nk: 2 n: 3\n1 0\n0 1\n"), ParseError);
    EXPECT_THROW(parse_code_file("k: 2 n: 2\n"), ParseError);
    EXPECT_THROW(parse_code_file("ring: GF(6)\nk: 1 n: 1\n1\n"), SpecError);
}

TEST(CodeFile, FormatWord) {
    const RingPtr R = build_ring("Z4");
    EXPECT_EQ(format_word(*R, {1, 0, 3}), "(1 0 3)");
}
