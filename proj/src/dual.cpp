#include "frobcode/dual.hpp"

#include "frobcode/errors.hpp"

#include <algorithm>

namespace frobcode {

namespace {

Rational num(std::size_t v) { return Rational(static_cast<unsigned long long>(v)); }

void require_theorem_hypotheses(const TwoWeightProfile& p) {
    if (!p.index) throw PreconditionError("the code is not modular");
    if (p.zero_count != 1) throw PreconditionError("C_0 != {0}");
}

}  // namespace

DualCode build_dual(const LinearCode& code, const TwoWeightProfile& profile, std::uint64_t cap) {
    if (profile.size != code.size()) throw PreconditionError("build_dual: profile does not belong to this code");
    const WeightTable& W = *code.weights();
    const std::int64_t w1 = (profile.w1 * Rational(W.scale())).to_integer();

    DualCode out;
    out.source = profile;
    for (std::size_t i = 0; i < code.size(); ++i)
        if (code.scaled_weight(i) == w1) out.m1.push_back(code.codewords()[i]);

    auto op_weights = WeightTable::build(opposite(code.R()));
    Matrix gen = transpose(out.m1);
    bool small = true;
    try {
        checked_power(code.R().order(), code.n(), cap);
    } catch (const CapError&) {
        small = false;
    }
    out.code = small ? build_code(op_weights, std::move(gen), cap) : build_code_by_span(op_weights, std::move(gen));
    out.histogram = weight_distribution(out.code);
    return out;
}

DualWeights predicted_dual_weights(const TwoWeightProfile& p) {
    require_theorem_hypotheses(p);
    const Rational& r = *p.index;
    const Rational n = num(p.n), C = num(p.size);
    DualWeights out;
    out.w1 = (p.w2 - n - r) * C / (p.w2 - p.w1);
    out.w2 = (p.w2 - n) * C / (p.w2 - p.w1);
    if (out.w1 != num(p.b1) * p.w1 / n)
        throw InconsistencyError("predicted_dual_weights: the two forms of w1' disagree");
    return out;
}

SrgParams predicted_dual_srg(const TwoWeightProfile& p) {
    require_theorem_hypotheses(p);
    const Rational& r = *p.index;
    const Rational n = num(p.n), C = num(p.size);
    const Rational K = n / r;
    const Rational mu = p.w1 * p.w2 / (r * r * C);
    const Rational lambda = (Rational(2) * n - p.w1 - p.w2) / r + mu;
    for (const auto* v : {&K, &lambda, &mu})
        if (!v->is_integer() || v->sign() < 0)
            throw InconsistencyError("predicted_dual_srg: parameter " + v->to_string() +
                                     " is not a nonnegative integer");
    SrgParams s;
    s.N = static_cast<long long>(p.size);
    s.K = K.to_integer();
    s.lambda = lambda.to_integer();
    s.mu = mu.to_integer();
    s.trivial = p.w1 == n;
    return s;
}

DualReport dual_pipeline(const LinearCode& code, std::uint64_t seed, std::uint64_t sweep_limit, bool second_dual) {
    const auto profile = two_weight_profile(code);
    if (!profile) throw PreconditionError("dual_pipeline: not a two-weight code");
    require_theorem_hypotheses(*profile);
    const FiniteRing& R = code.R();
    const WeightTable& W = *code.weights();
    const Rational r = *profile->index;
    const Rational n = num(code.n()), C = num(code.size());

    DualReport out;
    out.profile = *profile;
    out.predicted = predicted_dual_weights(*profile);
    out.predicted_srg = predicted_dual_srg(*profile);
    auto fail = [&](bool& flag, const std::string& what) {
        flag = false;
        if (out.failure.empty()) out.failure = what;
    };

    const DualCode dual = build_dual(code, *profile);
    out.histogram = dual.histogram;
    out.dual_profile = two_weight_profile(dual.code);
    out.dual_index = modular_index(dual.code);
    out.op_weights_agree = dual.code.weights()->weights() == W.weights();

    {
        std::vector<Rational> support;
        for (const auto& [w, c] : out.histogram) support.push_back(w);
        out.support_ok = support == std::vector<Rational>{Rational(0), out.predicted.w1, out.predicted.w2};
    }
    out.dual_zero_trivial = dual.code.zero_class().size() == 1;
    out.size_ok = dual.code.size() == code.size();
    out.index_one = out.dual_index && *out.dual_index == Rational(1);
    if (out.dual_profile) {
        const auto& d = *out.dual_profile;
        out.frequencies_ok = d.b1 + d.b2 == code.size() - 1 &&
                             num(d.b1) * out.predicted.w1 + num(d.b2) * out.predicted.w2 == num(profile->b1) * C;
        out.degree_ok = num(d.b1) == n / r;
    }

    // Measured SRG of Gamma(C') against both closed forms.
    if (out.dual_profile) {
        const CosetGraph gamma = build_gamma(dual.code, *out.dual_profile);
        out.measured = measure_srg(gamma.graph);
        bool generic_ok = false;
        try {
            generic_ok = out.measured && out.dual_profile->modular() && predicted_srg(*out.dual_profile) == *out.measured;
        } catch (const InconsistencyError&) {
            generic_ok = false;
        }
        out.srg_match = out.measured && *out.measured == out.predicted_srg && generic_ok;
        const CosetGraph source_gamma = build_gamma(code, *profile);
        const auto source = measure_srg(source_gamma.graph);
        out.trivial_match = out.measured && source && out.measured->trivial == source->trivial;
    }

    // y-sweep over R^n.
    const std::vector<Word> omega = column_orbit_union(code);
    std::vector<Word> ys;
    try {
        checked_power(R.order(), code.n(), sweep_limit);
        out.sweep_exhaustive = true;
        for_each_word(R.order(), code.n(), sweep_limit, [&](const Word& y) { ys.push_back(y); });
    } catch (const CapError&) {
        ys = lemma_test_words(R, code.n(), seed, 0, 200);
    }
    out.sweep_size = ys.size();
    std::size_t kernel_size = 0;
    for (const auto& y : ys) {
        const Word gy = times_column(R, code.generator(), y);
        const Word m1y = times_column(R, dual.m1, y);
        const bool perp = is_zero(gy);
        if (perp) ++kernel_size;
        if (perp != is_zero(m1y)) {
            fail(out.kernel_ok, "kernel mismatch at y=" + format_word(R, y));
            continue;
        }
        __int128 s1 = 0, s2 = 0;
        for (std::size_t i = 0; i < code.size(); ++i) {
            const std::int64_t wy = W.scaled(dot(R, code.codewords()[i], y));
            s1 += wy;
            s2 += static_cast<__int128>(code.scaled_weight(i)) * wy;
        }
        const bool in_omega = std::binary_search(omega.begin(), omega.end(), gy);
        Rational e1(0), e2(0);
        Rational expected_weight(0);
        if (!perp) {
            e1 = C;
            e2 = (in_omega ? n + r : n) * C;
            expected_weight = in_omega ? out.predicted.w1 : out.predicted.w2;
            if (!in_omega && !out.existence_witness) {
                out.existence_witness = true;
                out.witness_y = format_word(R, y);
            }
        }
        if (W.unscale(s1) != e1 || W.unscale(s2, 2) != e2)
            fail(out.sweep_sums_ok, "weight sums at y=" + format_word(R, y) + ": " + W.unscale(s1).to_string() + ", " +
                                        W.unscale(s2, 2).to_string());
        if (W.word(m1y) != expected_weight)
            fail(out.sweep_weights_ok, "w(M_1 y) at y=" + format_word(R, y) + " is " + W.word(m1y).to_string());
    }
    if (out.sweep_exhaustive) {
        // |C^perp| = |R|^n / |C|.
        const std::uint64_t total = checked_power(R.order(), code.n(), sweep_limit);
        if (kernel_size * code.size() != total) fail(out.kernel_ok, "|C^perp| |C| != |R|^n");
    }
    if (!out.existence_witness && out.failure.empty()) out.failure = "no y with 0 != Gy outside Omega";

    {
        const RingModuleSpan generated = span(code.ring(), dual.m1, Side::Left, code.n());
        out.generated_by_w1 = generated.elements() == code.codewords();
        if (!out.generated_by_w1 && out.failure.empty()) out.failure = "C is not generated by its weight-w1 words";
    }

    if (second_dual && out.dual_profile && out.dual_profile->modular() && out.dual_profile->zero_count == 1) {
        const DualCode again = build_dual(dual.code, *out.dual_profile);
        if (auto p2 = two_weight_profile(again.code)) {
            SecondDual s;
            s.n = p2->n;
            s.size = p2->size;
            s.w1 = p2->w1;
            s.w2 = p2->w2;
            s.matches_source = s.n == profile->n && s.size == profile->size && s.w1 == profile->w1 && s.w2 == profile->w2;
            out.second_dual = s;
        }
    }
    auto mark = [&](bool ok, const char* what) {
        if (!ok && out.failure.empty()) out.failure = what;
    };
    mark(out.support_ok, "dual histogram support differs from {0, w1', w2'}");
    mark(out.dual_zero_trivial, "C'_0 != {0}");
    mark(out.size_ok, "|C'| != |C|");
    mark(out.frequencies_ok, "dual frequencies violate their linear system");
    mark(out.degree_ok, "b1' != n/r");
    mark(out.index_one, "C' is not modular of index 1");
    mark(out.srg_match, "measured SRG of Gamma(C') differs from the prediction");
    mark(out.trivial_match, "triviality of Gamma(C') and Gamma(C) differ");
    mark(out.op_weights_agree, "homogeneous weights of R and R^op differ");
    return out;
}

}  // namespace frobcode
