#include "frobcode/errors.hpp"
#include "frobcode/report.hpp"

#include <gtest/gtest.h>

#include <sstream>

using namespace frobcode;

namespace {

Rational q(long long a, long long b = 1) { return Rational(a, b); }

LinearCode f3_identity() { return build_code(build_ring("GF(3)"), {{1, 0}, {0, 1}}); }

}  // namespace

TEST(Dual, F3IdentityWeights) {
    const LinearCode c = f3_identity();
    const auto p = two_weight_profile(c);
    ASSERT_TRUE(p);
    const DualWeights w = predicted_dual_weights(*p);
    EXPECT_EQ(w.w1, q(3));
    EXPECT_EQ(w.w2, q(6));
    const DualCode d = build_dual(c, *p);
    EXPECT_EQ(d.m1.size(), 4u);
    EXPECT_EQ(d.histogram, (WeightHistogram{{q(0), 1}, {q(3), 4}, {q(6), 4}}));
}

TEST(Dual, F3IdentityPipeline) {
    const DualReport r = dual_pipeline(f3_identity());
    EXPECT_TRUE(r.all()) << r.failure;
    ASSERT_TRUE(r.dual_index);
    EXPECT_EQ(*r.dual_index, q(1));
    ASSERT_TRUE(r.measured);
    EXPECT_EQ(*r.measured, (SrgParams{9, 4, 1, 2, false}));
    EXPECT_EQ(r.predicted_srg, (SrgParams{9, 4, 1, 2, false}));
    EXPECT_TRUE(r.sweep_exhaustive);
}

TEST(Dual, PreconditionsChecked) {
    // Non-two-weight code.
    EXPECT_THROW(dual_pipeline(build_code(build_ring("GF(2)"), {{1, 0, 1}, {0, 1, 1}})), PreconditionError);
}

TEST(Search, Gf3FindsPaleyHit) {
    SearchSpec spec;
    spec.ring = "GF(3)";
    spec.k = 2;
    spec.n_max = 4;
    spec.threads = 1;
    const SearchResult r = run_search(spec);
    EXPECT_EQ(r.point_count, 4u);
    EXPECT_TRUE(r.all_passed());
    bool found = false;
    for (const auto& c : r.results)
        if (c.two_weight() && c.analysis.profile->w1 == q(3, 2) && c.analysis.profile->w2 == q(3))
            found = found || c.analysis.measured == SrgParams{9, 4, 1, 2, false};
    EXPECT_TRUE(found);
}

TEST(Search, Gf2HitsAreTrivialOrOneWeight) {
    SearchSpec spec;
    spec.ring = "GF(2)";
    spec.n_max = 3;
    const SearchResult r = run_search(spec);
    EXPECT_TRUE(r.all_passed());
    EXPECT_EQ(r.nontrivial_hits(), 0u);
    for (const auto& c : r.results) {
        if (!c.two_weight()) continue;
        ASSERT_TRUE(c.analysis.measured);
        EXPECT_TRUE(c.analysis.measured->trivial);
        EXPECT_EQ(c.analysis.profile->w1, Rational(static_cast<unsigned long long>(c.candidate.n)));
    }
}

TEST(Search, DeterministicAcrossThreadCounts) {
    SearchSpec spec;
    spec.ring = "Z4";
    spec.n_max = 4;
    spec.threads = 1;
    const RingPtr R = build_ring("Z4");
    const std::string one = to_json(run_search(spec), *R).dump();
    spec.threads = 3;
    const std::string three = to_json(run_search(spec), *R).dump();
    EXPECT_EQ(one, three);
    EXPECT_EQ(one, to_json(run_search(spec), *R).dump());
}

TEST(Search, Index1OnlyUsesFullOrbits) {
    SearchSpec spec;
    spec.ring = "Z4";
    spec.n_max = 8;
    spec.index1 = true;
    const SearchResult r = run_search(spec);
    for (const auto& c : r.results) {
        EXPECT_EQ(c.candidate.index, q(1));
        for (std::size_t i = 0; i < c.candidate.points.size(); ++i)
            EXPECT_EQ(c.candidate.multiplicity[i], r.points[c.candidate.points[i]].orbit_size);
    }
    EXPECT_TRUE(r.all_passed());
}

TEST(Search, BadSpecs) {
    SearchSpec spec;
    spec.ring = "Z4";
    spec.k = 0;
    EXPECT_THROW(run_search(spec), PreconditionError);
    spec.k = 3;
    spec.cap = 16;
    EXPECT_THROW(run_search(spec), CapError);
}

TEST(Report, LeafRoundTrips) {
    const LinearCode c = f3_identity();
    const auto p = two_weight_profile(c);
    ASSERT_TRUE(p);
    const Json pj = to_json(*p);
    const TwoWeightProfile back = profile_from_json(Json::parse(pj.dump()));
    EXPECT_EQ(to_json(back).dump(), pj.dump());
    EXPECT_EQ(back.w1, q(3, 2));

    const WeightHistogram h = weight_distribution(c);
    EXPECT_EQ(histogram_from_json(Json::parse(to_json(h).dump())), h);

    const SrgParams s{9, 4, 1, 2, false};
    EXPECT_EQ(srg_from_json(Json::parse(to_json(s).dump())), s);
    EXPECT_EQ(rational_from_json(to_json(q(-7, 3))), q(-7, 3));
    EXPECT_EQ(to_json(q(3, 2)).get<std::string>(), "3/2");
    EXPECT_THROW(rational_from_json(Json(3)), ParseError);
    EXPECT_THROW(srg_from_json(Json::parse("{\"N\": 1}")), ParseError);
}

TEST(Report, RingReportForZ4) {
    const RingReport r = ring_report(WeightTable::build(build_ring("Z4")));
    EXPECT_EQ(r.units, 2u);
    EXPECT_EQ(r.exponent, 4u);
    EXPECT_EQ(r.weights, (std::vector<Rational>{q(0), q(1), q(2), q(1)}));
    EXPECT_EQ(r.s0, (std::vector<std::string>{"0"}));
    EXPECT_TRUE(r.passed());
    const Json j = to_json(r);
    EXPECT_EQ(j["weights"][2]["weight"], "2");
}

TEST(Report, DotOutput) {
    const LinearCode c = f3_identity();
    const CosetGraph g = build_gamma(c, *two_weight_profile(c));
    std::ostringstream os;
    write_dot(os, g, c.R());
    const std::string dot = os.str();
    EXPECT_EQ(dot.rfind("graph gamma {", 0), 0u);
    std::size_t edges = 0;
    for (std::size_t pos = dot.find(" -- "); pos != std::string::npos; pos = dot.find(" -- ", pos + 1)) ++edges;
    EXPECT_EQ(edges, 18u);
    EXPECT_NE(dot.find("label=\"(0 0)\""), std::string::npos);
}
