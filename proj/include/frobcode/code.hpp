#pragma once

#include "frobcode/module.hpp"
#include "frobcode/rational.hpp"
#include "frobcode/weight.hpp"

#include <cstdint>
#include <map>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

namespace frobcode {

/// 2^20 unless FROBCODE_CAP is set to a positive integer.
std::uint64_t default_enumeration_cap();

/// Left linear code {xG : x in R^k}. Codewords are stored sorted and
/// deduplicated, with their scaled weights (see WeightTable) alongside.
class LinearCode {
public:
    const WeightTablePtr& weights() const { return weights_; }
    const RingPtr& ring() const { return weights_->ring(); }
    const FiniteRing& R() const { return *weights_->ring(); }

    std::size_t k() const { return generator_.size(); }
    std::size_t n() const { return n_; }
    const Matrix& generator() const { return generator_; }
    /// Column j of G as a vector in R^k.
    Word column(std::size_t j) const;

    const std::vector<Word>& codewords() const { return codewords_; }
    std::size_t size() const { return codewords_.size(); }
    std::int64_t scaled_weight(std::size_t i) const { return scaled_[i]; }
    Rational weight(std::size_t i) const { return Rational(scaled_[i], weights_->scale()); }

    /// Indices of the weight-zero codewords (C_0), ascending.
    const std::vector<std::size_t>& zero_class() const { return zero_class_; }
    std::optional<std::size_t> index_of(const Word& w) const;
    bool contains(const Word& w) const { return index_of(w).has_value(); }

private:
    friend LinearCode make_code(WeightTablePtr, Matrix, std::size_t, std::vector<Word>);

    WeightTablePtr weights_;
    Matrix generator_;
    std::size_t n_ = 0;
    std::vector<Word> codewords_;
    std::vector<std::int64_t> scaled_;
    std::vector<std::size_t> zero_class_;
};

/// Enumerates xG over all x in R^k. Throws CodeError on an all-zero column
/// or ragged rows and CapError when |R|^k exceeds `cap`.
LinearCode build_code(WeightTablePtr W, Matrix G, std::uint64_t cap = default_enumeration_cap());
LinearCode build_code(const RingPtr& R, Matrix G, std::uint64_t cap = default_enumeration_cap());

/// Same code obtained as the left span of the rows of G; used when k is
/// large but the code is small.
LinearCode build_code_by_span(WeightTablePtr W, Matrix G);

/// alpha(gR) keyed by the canonical point id (smallest element of gR^x).
struct PointMultiset {
    std::size_t k = 0;
    std::map<Word, std::size_t> multiplicity;
    std::map<Word, std::size_t> orbit_size;

    std::size_t total() const;
};

PointMultiset alpha_multiset(const LinearCode& code);
PointMultiset alpha_multiset(const FiniteRing& R, const Matrix& G);

/// r with alpha(gR) = r |gR^x| on every stored point, if one exists.
std::optional<Rational> modular_index(const PointMultiset& alpha);
std::optional<Rational> modular_index(const LinearCode& code);

/// Omega = union of the column orbits g_j R^x, sorted.
std::vector<Word> column_orbit_union(const LinearCode& code);

using WeightHistogram = std::map<Rational, std::size_t>;

WeightHistogram weight_distribution(const LinearCode& code);
WeightHistogram weight_distribution(const WeightTable& W, const std::vector<Word>& words);

struct TwoWeightProfile {
    std::size_t n = 0;
    std::size_t size = 0;
    std::size_t zero_count = 0;
    Rational w1;
    Rational w2;
    std::size_t b0 = 0;
    std::size_t b1 = 0;
    std::size_t b2 = 0;
    std::optional<Rational> index;

    bool modular() const { return index.has_value(); }
};

/// Present iff exactly two nonzero weights occur. The frequencies are
/// cross-checked against their closed forms and, for modular codes, the
/// weight relation (w1+w2) n|C| = (n^2+rn)|C| + w1 w2 (|C|-|C0|);
/// a mismatch throws InconsistencyError.
std::optional<TwoWeightProfile> two_weight_profile(const LinearCode& code);

struct OneWeightCheck {
    bool is_one_weight = false;
    bool rhs_holds = false;  ///< modular and Omega u {0} a right submodule
    bool agree = false;
};

OneWeightCheck one_weight_characterization(const LinearCode& code);

/// lhs = sum_{c in C} w(c) w(c+d); rhs = |C| (n^2 + rn - r w(d)).
/// Throws PreconditionError for non-modular codes.
IdentityValues lemma_corr_code(const LinearCode& code, const Word& d);

/// Class 1: lhs = sum_{c in C_1} w(c+d), rhs = b1 w1 + (b1 - b1 w1/n) w(d).
/// Class 2: rhs = n|C| - |C_0| w(d) - (class 1 rhs).
IdentityValues coset_weight_sum(const LinearCode& code, const TwoWeightProfile& profile, const Word& d, int cls);

/// sum_{c in C} w(c) w(c_j + dj) = |C| (n + r - r w(dj)).
IdentityValues coordinate_corr(const LinearCode& code, std::size_t j, Elem dj);

/// sum_{c in C_1} w(c_j + dj) = b1 w1/n + (b1 - b1 w1/n) w(dj).
IdentityValues coordinate_coset_sum(const LinearCode& code, const TwoWeightProfile& profile, std::size_t j, Elem dj);

/// Words d used by the lemma checks: all of R^n when |R|^n <= limit,
/// otherwise `samples` words drawn with a fixed seed.
std::vector<Word> lemma_test_words(const FiniteRing& R, std::size_t n, std::uint64_t seed,
                                   std::uint64_t limit = 4096, std::size_t samples = 200);

struct LemmaReport {
    bool exhaustive = false;
    std::size_t words_tested = 0;
    bool corr_code = true;          ///< lemma_corr_code for every d
    bool weight_relation = true;    ///< relation between w1, w2 and r
    bool coset_class1 = true;
    bool coset_class2 = true;
    bool coordinate_corr = true;
    bool coordinate_coset = true;   ///< includes sum_{C_1} w(c_j) = b1 w1/n
    std::string witness;

    bool all() const {
        return corr_code && weight_relation && coset_class1 && coset_class2 && coordinate_corr && coordinate_coset;
    }
};

/// Runs every lemma check that applies. Requires a modular code; the
/// two-weight checks run only when `profile` is given.
LemmaReport check_lemmas(const LinearCode& code, const std::optional<TwoWeightProfile>& profile,
                         std::uint64_t seed = 0);

/// Parsed code file:
///   ring: <spec>
///   k: <int> n: <int>
///   k lines of n elements
/// Blank lines and text after '#' are ignored.
struct CodeFile {
    RingPtr ring;
    Matrix generator;
};

CodeFile parse_code_file(std::string_view text, const BuildOptions& options = {});
CodeFile read_code_file(const std::string& path, const BuildOptions& options = {});

std::string format_word(const FiniteRing& R, const Word& w);

}  // namespace frobcode
