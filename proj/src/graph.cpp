#include "frobcode/graph.hpp"

#include "frobcode/errors.hpp"

#include <algorithm>
#include <set>

namespace frobcode {

Graph::Graph(std::size_t vertices)
    : n_(vertices), words_((vertices + 63) / 64), rows_(vertices, std::vector<std::uint64_t>(words_, 0)) {}

void Graph::connect(std::size_t a, std::size_t b) {
    if (a == b) throw PreconditionError("graph: loops are not allowed");
    rows_[a][b / 64] |= std::uint64_t{1} << (b % 64);
    rows_[b][a / 64] |= std::uint64_t{1} << (a % 64);
}

std::size_t Graph::degree(std::size_t a) const {
    std::size_t d = 0;
    for (std::uint64_t w : rows_[a]) d += static_cast<std::size_t>(__builtin_popcountll(w));
    return d;
}

std::size_t Graph::common_neighbours(std::size_t a, std::size_t b) const {
    std::size_t c = 0;
    for (std::size_t i = 0; i < words_; ++i) c += static_cast<std::size_t>(__builtin_popcountll(rows_[a][i] & rows_[b][i]));
    return c;
}

std::size_t Graph::edge_count() const {
    std::size_t total = 0;
    for (std::size_t a = 0; a < n_; ++a) total += degree(a);
    return total / 2;
}

std::vector<std::pair<std::size_t, std::size_t>> Graph::edges() const {
    std::vector<std::pair<std::size_t, std::size_t>> out;
    for (std::size_t a = 0; a < n_; ++a)
        for (std::size_t b = a + 1; b < n_; ++b)
            if (adjacent(a, b)) out.emplace_back(a, b);
    return out;
}

std::string SrgParams::to_string() const {
    return "(" + std::to_string(N) + "," + std::to_string(K) + "," + std::to_string(lambda) + "," +
           std::to_string(mu) + ")";
}

CosetGraph build_gamma(const LinearCode& code, const TwoWeightProfile& profile) {
    if (profile.size != code.size() || profile.zero_count != code.zero_class().size())
        throw PreconditionError("build_gamma: profile does not belong to this code");
    const FiniteRing& R = code.R();
    const WeightTable& W = *code.weights();
    const std::int64_t w1 = (profile.w1 * Rational(W.scale())).to_integer();

    CosetGraph out;
    constexpr std::size_t unassigned = static_cast<std::size_t>(-1);
    out.coset_of.assign(code.size(), unassigned);
    std::vector<std::size_t> rep_index;
    for (std::size_t i = 0; i < code.size(); ++i) {
        if (out.coset_of[i] != unassigned) continue;
        const std::size_t v = rep_index.size();
        rep_index.push_back(i);
        out.representatives.push_back(code.codewords()[i]);
        for (std::size_t z : code.zero_class()) {
            auto idx = code.index_of(add(R, code.codewords()[i], code.codewords()[z]));
            if (!idx) throw InconsistencyError("C_0 coset leaves the code");
            out.coset_of[*idx] = v;
        }
    }

    const std::size_t N = rep_index.size();
    out.graph = Graph(N);
    auto diff_weight = [&](const Word& a, const Word& b) {
        auto idx = code.index_of(sub(R, a, b));
        if (!idx) throw InconsistencyError("difference of codewords is not a codeword");
        return code.scaled_weight(*idx);
    };
    for (std::size_t a = 0; a < N; ++a)
        for (std::size_t b = a + 1; b < N; ++b) {
            const bool edge = diff_weight(out.representatives[a], out.representatives[b]) == w1;
            if (edge) out.graph.connect(a, b);
            // Moving a within its coset must not change adjacency.
            for (std::size_t z : code.zero_class()) {
                const Word alt = add(R, out.representatives[a], code.codewords()[z]);
                if ((diff_weight(alt, out.representatives[b]) == w1) != edge)
                    throw InconsistencyError("adjacency in Gamma(C) depends on the coset representative");
            }
        }
    return out;
}

std::optional<SrgParams> measure_srg(const Graph& g) {
    const std::size_t N = g.size();
    if (N == 0) return std::nullopt;
    SrgParams p;
    p.N = static_cast<long long>(N);
    p.K = static_cast<long long>(g.degree(0));
    for (std::size_t a = 1; a < N; ++a)
        if (static_cast<long long>(g.degree(a)) != p.K) return std::nullopt;

    std::optional<long long> lambda, mu;
    for (std::size_t a = 0; a < N; ++a)
        for (std::size_t b = a + 1; b < N; ++b) {
            const auto c = static_cast<long long>(g.common_neighbours(a, b));
            auto& slot = g.adjacent(a, b) ? lambda : mu;
            if (!slot) slot = c;
            else if (*slot != c) return std::nullopt;
        }
    p.lambda = lambda.value_or(0);
    p.mu = mu.value_or(0);
    p.trivial = p.mu == 0 || p.mu == p.K;
    return p;
}

SrgParams predicted_srg(const TwoWeightProfile& profile) {
    if (!profile.index) throw PreconditionError("predicted_srg: the code is not modular");
    const Rational n(static_cast<unsigned long long>(profile.n));
    const Rational& w1 = profile.w1;
    const Rational& w2 = profile.w2;
    if (w2 <= n) throw InconsistencyError("predicted_srg: w2 <= n contradicts the weight relation");

    const Rational N = Rational(static_cast<unsigned long long>(profile.size)) /
                       Rational(static_cast<unsigned long long>(profile.zero_count));
    const Rational K = ((w2 - n) * N - w2) / (w2 - w1);
    const Rational lambda = (K * (w1 * w1 / n - Rational(2) * w1) + w2 * (K - Rational(1))) / (w2 - w1);
    const Rational mu = K * (w1 * w2 / n - w1) / (w2 - w1);
    const Rational mu_long = (K * (w1 * w2 / n - w1 - w2) + w2 * K) / (w2 - w1);
    if (mu != mu_long) throw InconsistencyError("predicted_srg: the two forms of mu disagree");

    for (const auto* v : {&N, &K, &lambda, &mu})
        if (!v->is_integer() || v->sign() < 0)
            throw InconsistencyError("predicted_srg: parameter " + v->to_string() + " is not a nonnegative integer");
    SrgParams p;
    p.N = N.to_integer();
    p.K = K.to_integer();
    p.lambda = lambda.to_integer();
    p.mu = mu.to_integer();
    p.trivial = w1 == n;
    return p;
}

bool coclique_structure(const LinearCode& code, const TwoWeightProfile& profile) {
    if (profile.w1 != Rational(static_cast<unsigned long long>(profile.n)))
        throw PreconditionError("coclique_structure: Gamma(C) is not trivial (w1 != n)");
    const FiniteRing& R = code.R();
    const std::int64_t w1 = (profile.w1 * Rational(code.weights()->scale())).to_integer();

    std::vector<Word> H;
    for (std::size_t i = 0; i < code.size(); ++i)
        if (code.scaled_weight(i) != w1) H.push_back(code.codewords()[i]);
    if (!is_submodule(R, H, Side::Left)) return false;

    const CosetGraph gamma = build_gamma(code, profile);
    const std::size_t N = gamma.representatives.size();
    for (std::size_t a = 0; a < N; ++a)
        for (std::size_t b = a + 1; b < N; ++b) {
            const Word d = sub(R, gamma.representatives[a], gamma.representatives[b]);
            const bool in_h = std::binary_search(H.begin(), H.end(), d);
            if (gamma.graph.adjacent(a, b) == in_h) return false;
        }
    return true;
}

namespace {

std::size_t position_in(const std::vector<Word>& sorted, const Word& w) {
    auto it = std::lower_bound(sorted.begin(), sorted.end(), w);
    if (it == sorted.end() || *it != w) return static_cast<std::size_t>(-1);
    return static_cast<std::size_t>(it - sorted.begin());
}

std::vector<Word> sorted_unique(std::vector<Word> v) {
    std::sort(v.begin(), v.end());
    v.erase(std::unique(v.begin(), v.end()), v.end());
    return v;
}

}  // namespace

std::optional<PdsCertificate> pds_check(const FiniteRing& R, const std::vector<Word>& group_in,
                                        const std::vector<Word>& D_in) {
    const std::vector<Word> group = sorted_unique(group_in);
    const std::vector<Word> D = sorted_unique(D_in);
    if (group.empty()) throw PreconditionError("pds_check: empty group");
    const std::size_t missing = static_cast<std::size_t>(-1);
    for (const auto& a : group)
        for (const auto& b : group)
            if (position_in(group, add(R, a, b)) == missing)
                throw PreconditionError("pds_check: group is not closed under addition");
    for (const auto& d : D)
        if (position_in(group, d) == missing) throw PreconditionError("pds_check: D is not contained in the group");

    if (D.empty()) return std::nullopt;
    if (is_zero(D.front())) return std::nullopt;
    for (const auto& d : D)
        if (!std::binary_search(D.begin(), D.end(), neg(R, d))) return std::nullopt;

    std::vector<long long> count(group.size(), 0);
    for (const auto& a : D)
        for (const auto& b : D) ++count[position_in(group, sub(R, a, b))];

    std::optional<long long> lambda, mu;
    for (std::size_t i = 0; i < group.size(); ++i) {
        if (is_zero(group[i])) continue;
        auto& slot = std::binary_search(D.begin(), D.end(), group[i]) ? lambda : mu;
        if (!slot) slot = count[i];
        else if (*slot != count[i]) return std::nullopt;
    }
    PdsCertificate cert;
    cert.N = group.size();
    cert.K = D.size();
    cert.lambda = lambda.value_or(0);
    cert.mu = mu.value_or(0);
    cert.regular = true;
    return cert;
}

Graph cayley_graph(const FiniteRing& R, const std::vector<Word>& group_in, const std::vector<Word>& D_in) {
    const std::vector<Word> group = sorted_unique(group_in);
    const std::vector<Word> D = sorted_unique(D_in);
    Graph g(group.size());
    for (std::size_t a = 0; a < group.size(); ++a)
        for (std::size_t b = a + 1; b < group.size(); ++b)
            if (std::binary_search(D.begin(), D.end(), sub(R, group[a], group[b]))) g.connect(a, b);
    return g;
}

EquivalenceReport equivalence_check(const LinearCode& code) {
    if (!modular_index(code)) throw PreconditionError("equivalence_check: the code is not modular");
    if (code.zero_class().size() != 1) throw PreconditionError("equivalence_check: C_0 != {0}");
    const FiniteRing& R = code.R();

    EquivalenceReport out;
    const auto profile = two_weight_profile(code);
    out.two_weight = profile.has_value();
    std::size_t nonzero_weights = 0;
    for (const auto& [w, c] : weight_distribution(code))
        if (!w.is_zero()) ++nonzero_weights;
    out.one_weight = nonzero_weights == 1;

    Matrix columns;
    for (std::size_t j = 0; j < code.n(); ++j) columns.push_back(code.column(j));
    const std::vector<Word> D = span(code.ring(), columns, Side::Right, code.k()).elements();
    const std::vector<Word> omega = column_orbit_union(code);
    out.column_space_size = D.size();
    out.omega_size = omega.size();

    std::vector<Word> omega0 = omega;
    omega0.push_back(Word(code.k(), 0));
    out.omega_submodule = is_submodule(R, omega0, Side::Right);
    out.pds = pds_check(R, D, omega);
    out.side_ii = out.pds.has_value() && !out.omega_submodule;
    out.equivalent = out.two_weight == out.side_ii;

    std::vector<Word> complement;
    std::set_difference(D.begin(), D.end(), omega.begin(), omega.end(), std::back_inserter(complement));
    out.complement_submodule = is_submodule(R, complement, Side::Right);
    out.remark_one_weight = out.omega_submodule == out.one_weight;
    const bool trivial_two_weight = profile && profile->w1 == Rational(static_cast<unsigned long long>(code.n()));
    // For one-weight codes D \ Omega = {0} is always a submodule; the clause
    // is only meaningful once Omega u {0} is not.
    out.remark_trivial = out.omega_submodule || out.complement_submodule == trivial_two_weight;

    if (out.pds) {
        out.cayley_srg = measure_srg(cayley_graph(R, D, omega));
        out.cayley_consistent = out.cayley_srg && out.cayley_srg->N == static_cast<long long>(out.pds->N) &&
                                out.cayley_srg->K == static_cast<long long>(out.pds->K) &&
                                out.cayley_srg->lambda == out.pds->lambda && out.cayley_srg->mu == out.pds->mu;
    }
    return out;
}

}  // namespace frobcode
