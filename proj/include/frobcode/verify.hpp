#pragma once

#include "frobcode/weight.hpp"

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

namespace frobcode {

struct VerifyOptions {
    /// Force exhaustive runs up to the hard budget below.
    bool full = false;
    /// Sample size for checks that run sampled; 0 picks a default of 2000.
    std::size_t samples = 0;
    std::uint64_t seed = 0;
    /// Number of random matrices for the row/column space check.
    std::size_t matrices = 100;
    /// Test hook: add this much to w(one) before running the identities.
    std::optional<long long> fault;
};

struct VerifyCheck {
    std::string name;
    bool passed = true;
    bool sampled = false;
    std::uint64_t cases = 0;
    std::string witness;
};

struct VerifyReport {
    std::string ring;
    std::size_t order = 0;
    std::vector<VerifyCheck> checks;

    bool passed() const;
    bool sampled() const;
};

/// Identity suite for one ring: zero set, coset sums, unit invariance,
/// sum of squares, ideal and vector correlations (k = 1, 2), orbit/point
/// consistency, row/column space sizes, Frobenius duality, the weight
/// outside the socle and, for products of matrix rings, the rank formula.
VerifyReport run_verify(const WeightTablePtr& W, const VerifyOptions& options = {});

}  // namespace frobcode
