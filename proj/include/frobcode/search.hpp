#pragma once

#include "frobcode/code.hpp"
#include "frobcode/dual.hpp"
#include "frobcode/graph.hpp"

#include <optional>
#include <string>
#include <vector>

namespace frobcode {

struct SearchSpec {
    std::string ring;
    std::size_t k = 2;
    std::size_t n_max = 4;
    /// Only multiplicities alpha(P) = |P's unit orbit| (index 1).
    bool index1 = false;
    /// Largest multiplicity of a single point; 0 means n_max.
    std::size_t mult_cap = 0;
    /// Drop candidates whose alpha-multiset was already seen.
    bool dedupe = true;
    std::uint64_t seed = 0;
    unsigned threads = 0;  ///< 0: hardware concurrency
    std::uint64_t cap = 0; ///< enumeration cap; 0: default_enumeration_cap()
};

/// A point of PG(R^k_R), keyed by the smallest element of its unit orbit.
struct Point {
    Word id;
    std::size_t orbit_size = 0;
};

/// All points, sorted by id.
std::vector<Point> enumerate_points(const FiniteRing& R, std::size_t k);

struct Candidate {
    Rational index;
    std::vector<std::size_t> points;        ///< indices into the point list
    std::vector<std::size_t> multiplicity;  ///< parallel to points
    std::size_t n = 0;
};

/// Modular candidates in canonical order: by index, then by point subset.
std::vector<Candidate> enumerate_candidates(const std::vector<Point>& points, const SearchSpec& spec);

/// Generator matrix with alpha(P) copies of each chosen point id as columns.
Matrix candidate_generator(const std::vector<Point>& points, const Candidate& c, std::size_t k);

/// Everything measured about one code. Checks that do not apply stay empty.
struct CodeAnalysis {
    std::size_t size = 0;
    std::size_t zero_count = 0;
    WeightHistogram histogram;
    std::optional<Rational> measured_index;
    OneWeightCheck one_weight;
    std::optional<TwoWeightProfile> profile;

    // Two-weight codes.
    std::optional<SrgParams> measured;
    std::optional<SrgParams> predicted;
    bool srg_match = false;
    bool trivial_criterion = false;  ///< (w1 = n) <=> (mu = K)
    std::optional<bool> coclique;
    std::optional<LemmaReport> lemmas;
    std::optional<DualReport> dual;
    /// Present for modular codes with C_0 = {0}.
    std::optional<EquivalenceReport> equivalence;

    bool two_weight() const { return profile.has_value(); }
    bool passed() const;
};

/// Runs the code, graph, lemma, equivalence and (optionally) dual checks.
/// Library errors propagate.
CodeAnalysis analyze_code(const LinearCode& code, std::uint64_t seed = 0, bool with_dual = true);

struct CandidateResult {
    Candidate candidate;
    Matrix generator;
    CodeAnalysis analysis;
    std::string error;

    bool two_weight() const { return analysis.two_weight(); }
    /// Every check that applies passed and the measured index is the candidate's.
    bool passed() const;
};

CandidateResult evaluate_candidate(const WeightTablePtr& W, const std::vector<Point>& points, const Candidate& c,
                                   const SearchSpec& spec);

struct SearchResult {
    SearchSpec spec;
    std::string ring_name;
    std::size_t point_count = 0;
    std::vector<Point> points;
    std::vector<CandidateResult> results;  ///< canonical candidate order

    std::size_t hits() const;
    std::size_t nontrivial_hits() const;
    bool all_passed() const;
};

/// Throws CapError if |R|^k exceeds the enumeration cap.
SearchResult run_search(const SearchSpec& spec);

}  // namespace frobcode
