#pragma once

#include "frobcode/code.hpp"
#include "frobcode/graph.hpp"

#include <optional>
#include <string>

namespace frobcode {

/// C' = {M_1 y^T : y in R^n}, the right code spanned by the columns of M_1
/// (rows of M_1: the weight-w1 codewords in ascending order). It is stored
/// as the left code over R^op generated by M_1^T, which has the same
/// codewords.
struct DualCode {
    TwoWeightProfile source;
    Matrix m1;
    LinearCode code;
    WeightHistogram histogram;
};

/// Throws PreconditionError when `profile` does not match `code`.
DualCode build_dual(const LinearCode& code, const TwoWeightProfile& profile,
                    std::uint64_t cap = default_enumeration_cap());

struct DualWeights {
    Rational w1;
    Rational w2;
};

/// w1' = (w2-n-r)|C|/(w2-w1) = b1 w1/n and w2' = (w2-n)|C|/(w2-w1).
/// Requires a modular profile with C_0 = {0}; throws InconsistencyError if
/// the two forms of w1' differ.
DualWeights predicted_dual_weights(const TwoWeightProfile& profile);

/// (|C|, n/r, (2n-w1-w2)/r + w1w2/(r^2|C|), w1w2/(r^2|C|)), trivial iff w1 = n.
SrgParams predicted_dual_srg(const TwoWeightProfile& profile);

struct SecondDual {
    std::size_t n = 0;
    std::size_t size = 0;
    Rational w1;
    Rational w2;
    bool matches_source = false;
};

struct DualReport {
    TwoWeightProfile profile;
    DualWeights predicted;
    std::optional<TwoWeightProfile> dual_profile;
    WeightHistogram histogram;
    std::optional<Rational> dual_index;
    std::optional<SrgParams> measured;
    SrgParams predicted_srg;

    bool support_ok = false;        ///< histogram support is {0, w1', w2'}
    bool dual_zero_trivial = false; ///< C'_0 = {0}
    bool size_ok = false;           ///< |C'| = |C|
    bool frequencies_ok = false;    ///< b1'+b2' = |C|-1, b1'w1'+b2'w2' = b1|C|
    bool degree_ok = false;         ///< b1' = n/r
    bool index_one = false;
    bool srg_match = false;         ///< measured = predicted (both closed forms)
    bool trivial_match = false;
    bool op_weights_agree = false;  ///< w_hom on R^op equals w_hom on R

    bool sweep_exhaustive = false;
    std::size_t sweep_size = 0;
    bool sweep_sums_ok = true;      ///< sum w(c.y) and sum w(c)w(c.y)
    bool sweep_weights_ok = true;   ///< w(M_1 y^T) in {0, w1', w2'} as predicted
    bool kernel_ok = true;          ///< C^perp = {y : M_1 y^T = 0}
    bool existence_witness = false; ///< some y with 0 != Gy^T outside Omega
    std::string witness_y;
    bool generated_by_w1 = false;

    std::optional<SecondDual> second_dual;  ///< exploratory, never asserted
    std::string failure;

    bool all() const {
        return support_ok && dual_zero_trivial && size_ok && frequencies_ok && degree_ok && index_one && srg_match &&
               trivial_match && op_weights_agree && sweep_sums_ok && sweep_weights_ok && kernel_ok &&
               existence_witness && generated_by_w1;
    }
};

/// Full check of the dual construction for a modular two-weight code with
/// C_0 = {0}; PreconditionError otherwise. The y-sweep covers all of R^n
/// when |R|^n <= sweep_limit, else `samples` words drawn with `seed`.
DualReport dual_pipeline(const LinearCode& code, std::uint64_t seed = 0, std::uint64_t sweep_limit = 65536,
                         bool second_dual = true);

}  // namespace frobcode
