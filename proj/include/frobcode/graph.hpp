#pragma once

#include "frobcode/code.hpp"

#include <cstdint>
#include <optional>
#include <string>
#include <utility>
#include <vector>

namespace frobcode {

/// Simple undirected graph on 0..N-1 with bitset adjacency rows.
class Graph {
public:
    explicit Graph(std::size_t vertices = 0);

    std::size_t size() const { return n_; }
    void connect(std::size_t a, std::size_t b);
    bool adjacent(std::size_t a, std::size_t b) const { return rows_[a][b / 64] >> (b % 64) & 1; }
    std::size_t degree(std::size_t a) const;
    std::size_t common_neighbours(std::size_t a, std::size_t b) const;
    std::size_t edge_count() const;
    /// Edges (a, b) with a < b in lexicographic order.
    std::vector<std::pair<std::size_t, std::size_t>> edges() const;

private:
    std::size_t n_;
    std::size_t words_;
    std::vector<std::vector<std::uint64_t>> rows_;
};

struct SrgParams {
    long long N = 0;
    long long K = 0;
    long long lambda = 0;
    long long mu = 0;
    bool trivial = false;

    /// K(K - lambda - 1) = (N - K - 1) mu.
    bool feasible() const { return K * (K - lambda - 1) == (N - K - 1) * mu; }
    bool operator==(const SrgParams&) const = default;
    std::string to_string() const;
};

/// Vertices are the cosets c + C_0, represented by their smallest codeword;
/// two cosets are adjacent iff their difference has weight w1.
struct CosetGraph {
    Graph graph;
    std::vector<Word> representatives;
    /// Codeword index -> vertex.
    std::vector<std::size_t> coset_of;
};

/// Throws PreconditionError when `profile` does not describe `code`, and
/// InconsistencyError if adjacency depends on the coset representative.
CosetGraph build_gamma(const LinearCode& code, const TwoWeightProfile& profile);

/// Parameters of a strongly regular graph, or none. A graph without
/// adjacent pairs gets lambda = 0, one without distinct nonadjacent pairs
/// gets mu = 0; trivial means mu = 0 or mu = K.
std::optional<SrgParams> measure_srg(const Graph& g);

/// Closed-form parameters of Gamma(C) for a modular two-weight profile.
/// Throws PreconditionError for non-modular profiles and InconsistencyError
/// for non-integral parameters or when the two forms of mu disagree.
SrgParams predicted_srg(const TwoWeightProfile& profile);

/// For w1 = n: the words of weight 0 or w2 form a subcode H, and two
/// vertices of Gamma(C) are adjacent iff their difference is outside H,
/// so the cosets of H are the cocliques. Throws PreconditionError if w1 != n.
bool coclique_structure(const LinearCode& code, const TwoWeightProfile& profile);

struct PdsCertificate {
    std::size_t N = 0;
    std::size_t K = 0;
    long long lambda = 0;
    long long mu = 0;
    bool regular = true;
};

/// `group` must be closed under addition (PreconditionError otherwise) and
/// contain D. Returns the certificate iff D is a regular partial difference
/// set; an empty D is rejected.
std::optional<PdsCertificate> pds_check(const FiniteRing& R, const std::vector<Word>& group, const std::vector<Word>& D);

/// Cayley graph on `group` with x ~ y iff x - y in D.
Graph cayley_graph(const FiniteRing& R, const std::vector<Word>& group, const std::vector<Word>& D);

struct EquivalenceReport {
    bool two_weight = false;          ///< side (i)
    std::optional<PdsCertificate> pds;
    bool omega_submodule = false;     ///< Omega u {0} is a right submodule
    bool side_ii = false;             ///< PDS and not a submodule
    bool equivalent = false;

    bool one_weight = false;
    bool remark_one_weight = false;   ///< Omega u {0} submodule <=> one-weight
    bool complement_submodule = false;
    /// D \ Omega submodule <=> two-weight with w1 = n, checked when
    /// Omega u {0} is not a submodule (vacuously true otherwise).
    bool remark_trivial = false;

    std::optional<SrgParams> cayley_srg;
    bool cayley_consistent = true;    ///< PDS parameters equal the Cayley graph's SRG parameters
    std::size_t column_space_size = 0;
    std::size_t omega_size = 0;
};

/// Requires a modular code with C_0 = {0} (PreconditionError otherwise).
EquivalenceReport equivalence_check(const LinearCode& code);

}  // namespace frobcode
