#include "frobcode/search.hpp"

#include "frobcode/errors.hpp"

#include <algorithm>
#include <atomic>
#include <functional>
#include <map>
#include <set>
#include <thread>

namespace frobcode {

std::vector<Point> enumerate_points(const FiniteRing& R, std::size_t k) {
    std::map<Word, std::size_t> ids;
    for_each_word(R.order(), k, std::uint64_t{1} << 20, [&](const Word& g) {
        if (is_zero(g)) return;
        const Word id = canonical_point_id(R, g);
        if (id == g) ids[id] = orbit_and_point(R, g).orbit.size();
    });
    std::vector<Point> out;
    for (auto& [id, size] : ids) out.push_back({id, size});
    return out;
}

std::vector<Candidate> enumerate_candidates(const std::vector<Point>& points, const SearchSpec& spec) {
    const std::size_t mult_cap = spec.mult_cap == 0 ? spec.n_max : spec.mult_cap;
    std::set<Rational> grid;
    if (spec.index1) {
        grid.insert(Rational(1));
    } else {
        std::set<std::size_t> sizes;
        for (const auto& p : points) sizes.insert(p.orbit_size);
        for (std::size_t o : sizes)
            for (std::size_t m = 1; m <= mult_cap; ++m)
                grid.insert(Rational(static_cast<long long>(m), static_cast<long long>(o)));
    }

    std::vector<Candidate> out;
    std::set<std::vector<std::pair<std::size_t, std::size_t>>> seen;
    for (const Rational& r : grid) {
        std::vector<std::size_t> eligible, mult;
        for (std::size_t i = 0; i < points.size(); ++i) {
            const Rational m = r * Rational(static_cast<unsigned long long>(points[i].orbit_size));
            if (!m.is_integer()) continue;
            const long long v = m.to_integer();
            if (v < 1 || static_cast<std::size_t>(v) > mult_cap || static_cast<std::size_t>(v) > spec.n_max) continue;
            eligible.push_back(i);
            mult.push_back(static_cast<std::size_t>(v));
        }
        Candidate current;
        current.index = r;
        std::function<void(std::size_t)> extend = [&](std::size_t from) {
            for (std::size_t e = from; e < eligible.size(); ++e) {
                if (current.n + mult[e] > spec.n_max) continue;
                current.points.push_back(eligible[e]);
                current.multiplicity.push_back(mult[e]);
                current.n += mult[e];
                std::vector<std::pair<std::size_t, std::size_t>> key;
                for (std::size_t i = 0; i < current.points.size(); ++i)
                    key.emplace_back(current.points[i], current.multiplicity[i]);
                if (!spec.dedupe || seen.insert(key).second) out.push_back(current);
                extend(e + 1);
                current.points.pop_back();
                current.multiplicity.pop_back();
                current.n -= mult[e];
            }
        };
        extend(0);
    }
    return out;
}

Matrix candidate_generator(const std::vector<Point>& points, const Candidate& c, std::size_t k) {
    Matrix G(k);
    for (std::size_t i = 0; i < c.points.size(); ++i)
        for (std::size_t m = 0; m < c.multiplicity[i]; ++m)
            for (std::size_t row = 0; row < k; ++row) G[row].push_back(points[c.points[i]].id[row]);
    return G;
}

bool CodeAnalysis::passed() const {
    if (!one_weight.agree) return false;
    if (lemmas && !lemmas->all()) return false;
    if (profile && measured_index) {
        if (!srg_match || !trivial_criterion) return false;
        if (!measured || !measured->feasible() || !predicted || !predicted->feasible()) return false;
        if (coclique && !*coclique) return false;
        if (dual && !dual->all()) return false;
    }
    if (equivalence) {
        const auto& e = *equivalence;
        if (!e.equivalent || !e.remark_one_weight || !e.remark_trivial || !e.cayley_consistent) return false;
    }
    return true;
}

bool CandidateResult::passed() const {
    return error.empty() && analysis.passed() && analysis.measured_index == candidate.index;
}

CodeAnalysis analyze_code(const LinearCode& code, std::uint64_t seed, bool with_dual) {
    CodeAnalysis out;
    out.size = code.size();
    out.zero_count = code.zero_class().size();
    out.histogram = weight_distribution(code);
    out.measured_index = modular_index(code);
    out.one_weight = one_weight_characterization(code);
    out.profile = two_weight_profile(code);
    if (out.measured_index) out.lemmas = check_lemmas(code, out.profile, seed);
    if (out.profile) out.measured = measure_srg(build_gamma(code, *out.profile).graph);
    if (out.profile && out.measured_index) {
        const TwoWeightProfile& p = *out.profile;
        out.predicted = predicted_srg(p);
        out.srg_match = out.measured && *out.measured == *out.predicted;
        const bool w1_is_n = p.w1 == Rational(static_cast<unsigned long long>(p.n));
        out.trivial_criterion = out.measured && w1_is_n == (out.measured->mu == out.measured->K);
        if (w1_is_n) out.coclique = coclique_structure(code, p);
        if (with_dual && p.zero_count == 1) out.dual = dual_pipeline(code, seed);
    }
    if (out.zero_count == 1 && out.measured_index) out.equivalence = equivalence_check(code);
    return out;
}

CandidateResult evaluate_candidate(const WeightTablePtr& W, const std::vector<Point>& points, const Candidate& c,
                                   const SearchSpec& spec) {
    CandidateResult out;
    out.candidate = c;
    out.generator = candidate_generator(points, c, spec.k);
    try {
        const LinearCode code =
            build_code(W, out.generator, spec.cap == 0 ? default_enumeration_cap() : spec.cap);
        out.analysis = analyze_code(code, spec.seed);
    } catch (const Error& e) {
        out.error = e.what();
    }
    return out;
}

std::size_t SearchResult::hits() const {
    return static_cast<std::size_t>(std::count_if(results.begin(), results.end(),
                                                  [](const CandidateResult& r) { return r.two_weight(); }));
}

std::size_t SearchResult::nontrivial_hits() const {
    return static_cast<std::size_t>(std::count_if(results.begin(), results.end(), [](const CandidateResult& r) {
        return r.two_weight() && r.analysis.measured && !r.analysis.measured->trivial;
    }));
}

bool SearchResult::all_passed() const {
    return std::all_of(results.begin(), results.end(), [](const CandidateResult& r) { return r.passed(); });
}

SearchResult run_search(const SearchSpec& spec) {
    if (spec.k == 0) throw PreconditionError("search: k must be positive");
    if (spec.n_max == 0) throw PreconditionError("search: n_max must be positive");
    SearchResult out;
    out.spec = spec;
    const RingPtr ring = build_ring(spec.ring);
    out.ring_name = ring->name();
    checked_power(ring->order(), spec.k, spec.cap == 0 ? default_enumeration_cap() : spec.cap);
    const WeightTablePtr W = WeightTable::build(ring);
    out.points = enumerate_points(*ring, spec.k);
    out.point_count = out.points.size();

    const std::vector<Candidate> candidates = enumerate_candidates(out.points, spec);
    out.results.resize(candidates.size());
    unsigned threads = spec.threads != 0 ? spec.threads : std::max(1u, std::thread::hardware_concurrency());
    threads = static_cast<unsigned>(std::min<std::size_t>(threads, std::max<std::size_t>(1, candidates.size())));

    // Each worker fills its own slots, so the merged order is the candidate order.
    std::atomic<std::size_t> next{0};
    auto work = [&] {
        for (std::size_t i = next++; i < candidates.size(); i = next++)
            out.results[i] = evaluate_candidate(W, out.points, candidates[i], spec);
    };
    if (threads == 1) {
        work();
    } else {
        std::vector<std::thread> pool;
        for (unsigned t = 0; t < threads; ++t) pool.emplace_back(work);
        for (auto& t : pool) t.join();
    }
    return out;
}

}  // namespace frobcode
