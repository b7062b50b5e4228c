#include "frobcode/code.hpp"

#include "frobcode/errors.hpp"

#include <algorithm>
#include <cstdlib>
#include <fstream>
#include <random>
#include <regex>
#include <set>
#include <sstream>
#include <unordered_set>

namespace frobcode {

std::uint64_t default_enumeration_cap() {
    if (const char* env = std::getenv("FROBCODE_CAP")) {
        char* end = nullptr;
        const unsigned long long v = std::strtoull(env, &end, 10);
        if (end != env && *end == '\0' && v > 0) return v;
    }
    return std::uint64_t{1} << 20;
}

Word LinearCode::column(std::size_t j) const {
    Word out(k());
    for (std::size_t i = 0; i < k(); ++i) out[i] = generator_[i][j];
    return out;
}

std::optional<std::size_t> LinearCode::index_of(const Word& w) const {
    auto it = std::lower_bound(codewords_.begin(), codewords_.end(), w);
    if (it == codewords_.end() || *it != w) return std::nullopt;
    return static_cast<std::size_t>(it - codewords_.begin());
}

namespace {

void validate_generator(const FiniteRing& R, const Matrix& G) {
    if (G.empty()) throw CodeError("generator matrix has no rows");
    const std::size_t n = G.front().size();
    if (n == 0) throw CodeError("generator matrix has no columns");
    for (const auto& row : G) {
        if (row.size() != n) throw CodeError("generator matrix rows differ in length");
        for (Elem e : row)
            if (e >= R.order()) throw CodeError("generator entry out of range");
    }
    for (std::size_t j = 0; j < n; ++j) {
        bool zero = true;
        for (const auto& row : G) zero = zero && row[j] == 0;
        if (zero) throw CodeError("column " + std::to_string(j + 1) + " of the generator matrix is zero");
    }
}

}  // namespace

LinearCode make_code(WeightTablePtr W, Matrix G, std::size_t n, std::vector<Word> words) {
    const FiniteRing& R = *W->ring();
    std::sort(words.begin(), words.end());
    words.erase(std::unique(words.begin(), words.end()), words.end());

    LinearCode code;
    code.weights_ = std::move(W);
    code.generator_ = std::move(G);
    code.n_ = n;
    code.codewords_ = std::move(words);
    code.scaled_.reserve(code.codewords_.size());
    for (std::size_t i = 0; i < code.codewords_.size(); ++i) {
        code.scaled_.push_back(code.weights_->scaled_word(code.codewords_[i]));
        if (code.scaled_.back() == 0) code.zero_class_.push_back(i);
    }

    for (std::size_t a : code.zero_class_)
        for (std::size_t b : code.zero_class_) {
            auto idx = code.index_of(add(R, code.codewords_[a], code.codewords_[b]));
            if (!idx || code.scaled_[*idx] != 0)
                throw InconsistencyError("the weight-zero codewords are not closed under addition");
        }

    mpz_class total, size = static_cast<unsigned long>(code.codewords_.size());
    mpz_ui_pow_ui(total.get_mpz_t(), R.order(), code.k());
    if (total % size != 0) throw InconsistencyError("|C| does not divide |R|^k");
    return code;
}

LinearCode build_code(WeightTablePtr W, Matrix G, std::uint64_t cap) {
    const FiniteRing& R = *W->ring();
    validate_generator(R, G);
    const std::size_t n = G.front().size();
    std::unordered_set<Word, WordHash> seen;
    for_each_word(R.order(), G.size(), cap, [&](const Word& x) { seen.insert(row_times(R, x, G)); });
    return make_code(std::move(W), std::move(G), n, std::vector<Word>(seen.begin(), seen.end()));
}

LinearCode build_code(const RingPtr& R, Matrix G, std::uint64_t cap) {
    return build_code(WeightTable::build(R), std::move(G), cap);
}

LinearCode build_code_by_span(WeightTablePtr W, Matrix G) {
    validate_generator(*W->ring(), G);
    const std::size_t n = G.front().size();
    std::vector<Word> words = span(W->ring(), G, Side::Left, n).elements();
    return make_code(std::move(W), std::move(G), n, std::move(words));
}

std::size_t PointMultiset::total() const {
    std::size_t t = 0;
    for (const auto& [id, m] : multiplicity) t += m;
    return t;
}

PointMultiset alpha_multiset(const FiniteRing& R, const Matrix& G) {
    PointMultiset out;
    out.k = G.size();
    const std::size_t n = G.empty() ? 0 : G.front().size();
    for (std::size_t j = 0; j < n; ++j) {
        Word g(G.size());
        for (std::size_t i = 0; i < G.size(); ++i) g[i] = G[i][j];
        const OrbitAndPoint op = orbit_and_point(R, g);
        ++out.multiplicity[op.id];
        out.orbit_size[op.id] = op.orbit.size();
    }
    return out;
}

PointMultiset alpha_multiset(const LinearCode& code) { return alpha_multiset(code.R(), code.generator()); }

std::optional<Rational> modular_index(const PointMultiset& alpha) {
    std::optional<Rational> r;
    for (const auto& [id, m] : alpha.multiplicity) {
        Rational ratio(static_cast<long long>(m), static_cast<long long>(alpha.orbit_size.at(id)));
        if (!r) r = ratio;
        else if (*r != ratio) return std::nullopt;
    }
    return r;
}

std::optional<Rational> modular_index(const LinearCode& code) { return modular_index(alpha_multiset(code)); }

std::vector<Word> column_orbit_union(const LinearCode& code) {
    std::set<Word> omega;
    for (std::size_t j = 0; j < code.n(); ++j)
        for (Word& g : orbit_and_point(code.R(), code.column(j)).orbit) omega.insert(std::move(g));
    return {omega.begin(), omega.end()};
}

WeightHistogram weight_distribution(const LinearCode& code) {
    std::map<std::int64_t, std::size_t> scaled;
    for (std::size_t i = 0; i < code.size(); ++i) ++scaled[code.scaled_weight(i)];
    WeightHistogram out;
    for (const auto& [w, count] : scaled) out[code.weights()->unscale(w)] = count;
    return out;
}

WeightHistogram weight_distribution(const WeightTable& W, const std::vector<Word>& words) {
    WeightHistogram out;
    for (const auto& w : words) ++out[W.word(w)];
    return out;
}

std::optional<TwoWeightProfile> two_weight_profile(const LinearCode& code) {
    const WeightHistogram hist = weight_distribution(code);
    std::vector<std::pair<Rational, std::size_t>> nonzero;
    std::size_t zero = 0;
    for (const auto& [w, count] : hist) {
        if (w.is_zero()) zero = count;
        else nonzero.emplace_back(w, count);
    }
    if (nonzero.size() != 2) return std::nullopt;

    TwoWeightProfile p;
    p.n = code.n();
    p.size = code.size();
    p.zero_count = zero;
    p.w1 = nonzero[0].first;
    p.w2 = nonzero[1].first;
    p.b0 = zero;
    p.b1 = nonzero[0].second;
    p.b2 = nonzero[1].second;
    p.index = modular_index(code);

    const Rational n(static_cast<unsigned long long>(p.n));
    const Rational C(static_cast<unsigned long long>(p.size));
    const Rational C0(static_cast<unsigned long long>(p.zero_count));
    const Rational b1 = ((p.w2 - n) * C - p.w2 * C0) / (p.w2 - p.w1);
    const Rational b2 = ((n - p.w1) * C + p.w1 * C0) / (p.w2 - p.w1);
    if (b1 != Rational(static_cast<unsigned long long>(p.b1)) || b2 != Rational(static_cast<unsigned long long>(p.b2)))
        throw InconsistencyError("weight frequencies (" + std::to_string(p.b1) + ", " + std::to_string(p.b2) +
                                 ") differ from the closed forms (" + b1.to_string() + ", " + b2.to_string() + ")");
    if (p.index) {
        const Rational& r = *p.index;
        if ((p.w1 + p.w2) * n * C != (n * n + r * n) * C + p.w1 * p.w2 * (C - C0))
            throw InconsistencyError("weights of a modular two-weight code violate the weight relation");
    }
    return p;
}

OneWeightCheck one_weight_characterization(const LinearCode& code) {
    OneWeightCheck out;
    std::size_t nonzero = 0;
    for (const auto& [w, count] : weight_distribution(code))
        if (!w.is_zero()) ++nonzero;
    out.is_one_weight = nonzero == 1;
    if (modular_index(code)) {
        std::vector<Word> omega = column_orbit_union(code);
        omega.push_back(Word(code.k(), 0));
        out.rhs_holds = is_submodule(code.R(), omega, Side::Right);
    }
    out.agree = out.is_one_weight == out.rhs_holds;
    return out;
}

namespace {

Rational require_index(const LinearCode& code) {
    auto r = modular_index(code);
    if (!r) throw PreconditionError("the code is not modular");
    return *r;
}

Rational as_rational(std::size_t v) { return Rational(static_cast<unsigned long long>(v)); }

IdentityValues corr_code_with(const LinearCode& code, const Rational& r, const Word& d) {
    const WeightTable& W = *code.weights();
    const FiniteRing& R = code.R();
    __int128 lhs = 0;
    for (std::size_t i = 0; i < code.size(); ++i) {
        if (code.scaled_weight(i) == 0) continue;
        lhs += static_cast<__int128>(code.scaled_weight(i)) * W.scaled_word(add(R, code.codewords()[i], d));
    }
    const Rational n = as_rational(code.n());
    return {W.unscale(lhs, 2), as_rational(code.size()) * (n * n + r * n - r * W.word(d))};
}

IdentityValues coordinate_corr_with(const LinearCode& code, const Rational& r, std::size_t j, Elem dj) {
    const WeightTable& W = *code.weights();
    const FiniteRing& R = code.R();
    __int128 lhs = 0;
    for (std::size_t i = 0; i < code.size(); ++i)
        lhs += static_cast<__int128>(code.scaled_weight(i)) * W.scaled(R.add(code.codewords()[i][j], dj));
    const Rational n = as_rational(code.n());
    return {W.unscale(lhs, 2), as_rational(code.size()) * (n + r - r * W.weight(dj))};
}

}  // namespace

IdentityValues lemma_corr_code(const LinearCode& code, const Word& d) {
    return corr_code_with(code, require_index(code), d);
}

IdentityValues coset_weight_sum(const LinearCode& code, const TwoWeightProfile& profile, const Word& d, int cls) {
    if (cls != 1 && cls != 2) throw PreconditionError("coset_weight_sum: class must be 1 or 2");
    const WeightTable& W = *code.weights();
    const FiniteRing& R = code.R();
    const std::int64_t target =
        ((cls == 1 ? profile.w1 : profile.w2) * Rational(W.scale())).to_integer();
    std::int64_t lhs = 0;
    for (std::size_t i = 0; i < code.size(); ++i)
        if (code.scaled_weight(i) == target) lhs += W.scaled_word(add(R, code.codewords()[i], d));

    const Rational n = as_rational(profile.n);
    const Rational b1 = as_rational(profile.b1);
    const Rational wd = W.word(d);
    const Rational class1 = b1 * profile.w1 + (b1 - b1 * profile.w1 / n) * wd;
    Rational rhs = class1;
    if (cls == 2) rhs = n * as_rational(profile.size) - as_rational(profile.zero_count) * wd - class1;
    return {W.unscale(lhs), rhs};
}

IdentityValues coordinate_corr(const LinearCode& code, std::size_t j, Elem dj) {
    return coordinate_corr_with(code, require_index(code), j, dj);
}

IdentityValues coordinate_coset_sum(const LinearCode& code, const TwoWeightProfile& profile, std::size_t j, Elem dj) {
    const WeightTable& W = *code.weights();
    const FiniteRing& R = code.R();
    const std::int64_t target = (profile.w1 * Rational(W.scale())).to_integer();
    std::int64_t lhs = 0;
    for (std::size_t i = 0; i < code.size(); ++i)
        if (code.scaled_weight(i) == target) lhs += W.scaled(R.add(code.codewords()[i][j], dj));
    const Rational n = as_rational(profile.n);
    const Rational b1 = as_rational(profile.b1);
    const Rational base = b1 * profile.w1 / n;
    return {W.unscale(lhs), base + (b1 - base) * W.weight(dj)};
}

std::vector<Word> lemma_test_words(const FiniteRing& R, std::size_t n, std::uint64_t seed, std::uint64_t limit,
                                   std::size_t samples) {
    std::vector<Word> out;
    bool small = true;
    try {
        checked_power(R.order(), n, limit);
    } catch (const CapError&) {
        small = false;
    }
    if (small) {
        for_each_word(R.order(), n, limit, [&](const Word& w) { out.push_back(w); });
        return out;
    }
    std::mt19937_64 rng(seed);
    std::uniform_int_distribution<std::size_t> pick(0, R.order() - 1);
    out.reserve(samples);
    for (std::size_t s = 0; s < samples; ++s) {
        Word w(n);
        for (auto& e : w) e = static_cast<Elem>(pick(rng));
        out.push_back(std::move(w));
    }
    return out;
}

LemmaReport check_lemmas(const LinearCode& code, const std::optional<TwoWeightProfile>& profile, std::uint64_t seed) {
    const Rational r = require_index(code);
    const FiniteRing& R = code.R();
    LemmaReport out;

    const std::vector<Word> words = lemma_test_words(R, code.n(), seed);
    out.words_tested = words.size();
    try {
        out.exhaustive = words.size() == checked_power(R.order(), code.n(), 4096);
    } catch (const CapError&) {
        out.exhaustive = false;
    }

    auto note = [&](bool& flag, const std::string& what) {
        if (flag) {
            flag = false;
            if (out.witness.empty()) out.witness = what;
        }
    };

    for (const auto& d : words) {
        const IdentityValues v = corr_code_with(code, r, d);
        if (!v.holds()) {
            note(out.corr_code, "corr_code d=" + format_word(R, d) + ": " + v.lhs.to_string() + " != " + v.rhs.to_string());
            break;
        }
    }
    for (std::size_t j = 0; j < code.n() && out.coordinate_corr; ++j)
        for (std::size_t dj = 0; dj < R.order(); ++dj) {
            const IdentityValues v = coordinate_corr_with(code, r, j, static_cast<Elem>(dj));
            if (!v.holds()) {
                note(out.coordinate_corr, "coordinate_corr j=" + std::to_string(j + 1) + " dj=" +
                                              R.format(static_cast<Elem>(dj)) + ": " + v.lhs.to_string() +
                                              " != " + v.rhs.to_string());
                break;
            }
        }

    if (!profile) return out;
    const TwoWeightProfile& p = *profile;
    {
        const Rational n = as_rational(p.n), C = as_rational(p.size), C0 = as_rational(p.zero_count);
        if ((p.w1 + p.w2) * n * C != (n * n + r * n) * C + p.w1 * p.w2 * (C - C0))
            note(out.weight_relation, "weight relation fails");
    }
    for (const auto& d : words) {
        for (int cls = 1; cls <= 2; ++cls) {
            const IdentityValues v = coset_weight_sum(code, p, d, cls);
            if (!v.holds())
                note(cls == 1 ? out.coset_class1 : out.coset_class2,
                     "coset sum class " + std::to_string(cls) + " d=" + format_word(R, d) + ": " + v.lhs.to_string() +
                         " != " + v.rhs.to_string());
        }
        if (!out.coset_class1 && !out.coset_class2) break;
    }
    for (std::size_t j = 0; j < code.n() && out.coordinate_coset; ++j)
        for (std::size_t dj = 0; dj < R.order(); ++dj) {
            const IdentityValues v = coordinate_coset_sum(code, p, j, static_cast<Elem>(dj));
            if (!v.holds()) {
                note(out.coordinate_coset, "coordinate coset sum j=" + std::to_string(j + 1) + " dj=" +
                                               R.format(static_cast<Elem>(dj)) + ": " + v.lhs.to_string() +
                                               " != " + v.rhs.to_string());
                break;
            }
        }
    return out;
}

std::string format_word(const FiniteRing& R, const Word& w) {
    std::string out = "(";
    for (std::size_t i = 0; i < w.size(); ++i) out += (i ? " " : "") + R.format(w[i]);
    return out + ")";
}

namespace {

std::string strip_comment(const std::string& line) {
    const auto hash = line.find('#');
    return hash == std::string::npos ? line : line.substr(0, hash);
}

bool blank(const std::string& s) {
    return std::all_of(s.begin(), s.end(), [](unsigned char c) { return std::isspace(c); });
}

}  // namespace

CodeFile parse_code_file(std::string_view text, const BuildOptions& options) {
    std::vector<std::pair<std::size_t, std::string>> lines;
    {
        std::istringstream in{std::string(text)};
        std::string line;
        std::size_t number = 0;
        while (std::getline(in, line)) {
            ++number;
            if (!line.empty() && line.back() == '\r') line.pop_back();
            std::string body = strip_comment(line);
            if (!blank(body)) lines.emplace_back(number, std::move(body));
        }
    }
    if (lines.empty()) throw ParseError("empty code file", 0, 1);

    CodeFile out;
    {
        const auto& [number, line] = lines[0];
        static const std::regex ring_re(R"(^\s*ring\s*:\s*)");
        std::smatch m;
        if (!std::regex_search(line, m, ring_re)) throw ParseError("expected 'ring: <spec>'", 0, number);
        const std::size_t start = static_cast<std::size_t>(m.length(0));
        try {
            out.ring = build_ring(std::string_view(line).substr(start), options);
        } catch (const ParseError& e) {
            throw ParseError(e.message(), start + e.position(), number);
        }
    }

    std::size_t k = 0, n = 0;
    if (lines.size() < 2) throw ParseError("expected 'k: <int> n: <int>'", 0, lines[0].first + 1);
    {
        const auto& [number, line] = lines[1];
        static const std::regex dims_re(R"(^\s*k\s*:\s*(\d+)\s+n\s*:\s*(\d+)\s*$)");
        std::smatch m;
        if (!std::regex_match(line, m, dims_re)) throw ParseError("expected 'k: <int> n: <int>'", 0, number);
        k = std::stoul(m[1]);
        n = std::stoul(m[2]);
        if (k == 0 || n == 0) throw ParseError("k and n must be positive", 0, number);
    }
    if (lines.size() != k + 2)
        throw ParseError("expected " + std::to_string(k) + " matrix rows, found " + std::to_string(lines.size() - 2), 0,
                         lines.back().first);

    for (std::size_t i = 0; i < k; ++i) {
        const auto& [number, line] = lines[i + 2];
        Word row;
        std::size_t pos = 0;
        while (pos < line.size()) {
            while (pos < line.size() && std::isspace(static_cast<unsigned char>(line[pos]))) ++pos;
            if (pos >= line.size()) break;
            std::size_t end = pos;
            while (end < line.size() && !std::isspace(static_cast<unsigned char>(line[end]))) ++end;
            try {
                row.push_back(out.ring->parse_element(std::string_view(line).substr(pos, end - pos)));
            } catch (const ParseError& e) {
                throw ParseError(e.message(), pos + e.position(), number);
            }
            pos = end;
        }
        if (row.size() != n)
            throw ParseError("row has " + std::to_string(row.size()) + " entries, expected " + std::to_string(n), 0,
                             number);
        out.generator.push_back(std::move(row));
    }
    return out;
}

CodeFile read_code_file(const std::string& path, const BuildOptions& options) {
    std::ifstream in(path);
    if (!in) throw ParseError("cannot open " + path, 0);
    std::ostringstream buf;
    buf << in.rdbuf();
    return parse_code_file(buf.str(), options);
}

}  // namespace frobcode
