#include "frobcode/module.hpp"

#include "frobcode/errors.hpp"

#include <algorithm>
#include <unordered_set>

namespace frobcode {

std::size_t WordHash::operator()(const Word& w) const noexcept {
    std::size_t h = 1469598103934665603ull;
    for (Elem e : w) {
        h ^= e;
        h *= 1099511628211ull;
    }
    return h;
}

Word add(const FiniteRing& R, const Word& a, const Word& b) {
    Word out(a.size());
    for (std::size_t i = 0; i < a.size(); ++i) out[i] = R.add(a[i], b[i]);
    return out;
}

Word sub(const FiniteRing& R, const Word& a, const Word& b) {
    Word out(a.size());
    for (std::size_t i = 0; i < a.size(); ++i) out[i] = R.sub(a[i], b[i]);
    return out;
}

Word neg(const FiniteRing& R, const Word& a) {
    Word out(a.size());
    for (std::size_t i = 0; i < a.size(); ++i) out[i] = R.neg(a[i]);
    return out;
}

Word scale_left(const FiniteRing& R, Elem r, const Word& a) {
    Word out(a.size());
    for (std::size_t i = 0; i < a.size(); ++i) out[i] = R.mul(r, a[i]);
    return out;
}

Word scale_right(const FiniteRing& R, const Word& a, Elem r) {
    Word out(a.size());
    for (std::size_t i = 0; i < a.size(); ++i) out[i] = R.mul(a[i], r);
    return out;
}

Elem dot(const FiniteRing& R, const Word& x, const Word& y) {
    Elem acc = 0;
    for (std::size_t i = 0; i < x.size(); ++i) acc = R.add(acc, R.mul(x[i], y[i]));
    return acc;
}

bool is_zero(const Word& w) {
    return std::all_of(w.begin(), w.end(), [](Elem e) { return e == 0; });
}

Word row_times(const FiniteRing& R, const Word& x, const Matrix& G) {
    const std::size_t n = G.empty() ? 0 : G.front().size();
    Word out(n, 0);
    for (std::size_t i = 0; i < G.size(); ++i) {
        if (x[i] == 0) continue;
        for (std::size_t j = 0; j < n; ++j) out[j] = R.add(out[j], R.mul(x[i], G[i][j]));
    }
    return out;
}

Word times_column(const FiniteRing& R, const Matrix& G, const Word& y) {
    Word out(G.size(), 0);
    for (std::size_t i = 0; i < G.size(); ++i) out[i] = dot(R, G[i], y);
    return out;
}

Matrix transpose(const Matrix& M) {
    if (M.empty()) return {};
    Matrix out(M.front().size(), Word(M.size()));
    for (std::size_t i = 0; i < M.size(); ++i)
        for (std::size_t j = 0; j < M[i].size(); ++j) out[j][i] = M[i][j];
    return out;
}

std::uint64_t checked_power(std::size_t base, std::size_t exponent, std::uint64_t cap) {
    std::uint64_t total = 1;
    for (std::size_t i = 0; i < exponent; ++i) {
        if (base != 0 && total > cap / base)
            throw CapError(std::to_string(base) + "^" + std::to_string(exponent) + " words exceed the enumeration cap " +
                           std::to_string(cap));
        total *= base;
    }
    if (total > cap)
        throw CapError(std::to_string(base) + "^" + std::to_string(exponent) + " words exceed the enumeration cap " +
                       std::to_string(cap));
    return total;
}

RingModuleSpan::RingModuleSpan(RingPtr ring, std::size_t dimension, Side side, std::vector<Word> generators,
                               std::vector<Word> elements)
    : ring_(std::move(ring)),
      dimension_(dimension),
      side_(side),
      generators_(std::move(generators)),
      elements_(std::move(elements)) {}

bool RingModuleSpan::contains(const Word& w) const { return std::binary_search(elements_.begin(), elements_.end(), w); }

std::vector<Elem> RingModuleSpan::scalars() const {
    std::vector<Elem> out;
    out.reserve(elements_.size());
    for (const auto& w : elements_) out.push_back(w.at(0));
    return out;
}

RingModuleSpan span(const RingPtr& R, const std::vector<Word>& generators, Side side, std::size_t dimension) {
    for (const auto& g : generators)
        if (g.size() != dimension) throw PreconditionError("span: generator has the wrong length");

    // S <- S + Rg for each generator g; every element of the span is a sum
    // of one element from each cyclic module.
    std::unordered_set<Word, WordHash> current{Word(dimension, 0)};
    for (const auto& g : generators) {
        std::unordered_set<Word, WordHash> cyclic;
        for (std::size_t r = 0; r < R->order(); ++r)
            cyclic.insert(side == Side::Left ? scale_left(*R, static_cast<Elem>(r), g)
                                             : scale_right(*R, g, static_cast<Elem>(r)));
        if (cyclic.size() == 1) continue;
        std::unordered_set<Word, WordHash> next;
        next.reserve(current.size() * cyclic.size());
        for (const auto& s : current)
            for (const auto& t : cyclic) next.insert(add(*R, s, t));
        current = std::move(next);
    }
    std::vector<Word> elements(current.begin(), current.end());
    std::sort(elements.begin(), elements.end());
    return RingModuleSpan(R, dimension, side, generators, std::move(elements));
}

RingModuleSpan principal_ideal(const RingPtr& R, Elem x, Side side) { return span(R, {Word{x}}, side, 1); }

std::vector<RingModuleSpan> principal_ideals(const RingPtr& R, Side side) {
    std::vector<RingModuleSpan> out;
    std::vector<std::vector<Word>> seen;
    for (std::size_t x = 1; x < R->order(); ++x) {
        RingModuleSpan I = principal_ideal(R, static_cast<Elem>(x), side);
        if (std::find(seen.begin(), seen.end(), I.elements()) != seen.end()) continue;
        seen.push_back(I.elements());
        out.push_back(std::move(I));
    }
    return out;
}

RingModuleSpan annihilator(const RingModuleSpan& S, Side side, std::uint64_t cap) {
    const RingPtr& R = S.ring();
    // For a left module S the right annihilator only needs the generators
    // (s.(x) is left-linear in s); symmetrically for right modules.
    const bool generators_suffice = (side == Side::Right && S.side() == Side::Left) ||
                                    (side == Side::Left && S.side() == Side::Right);
    const std::vector<Word>& tests =
        generators_suffice && !S.generators().empty() ? S.generators() : S.elements();
    std::vector<Word> elements;
    for_each_word(R->order(), S.dimension(), cap, [&](const Word& x) {
        for (const auto& s : tests) {
            const Elem v = side == Side::Left ? dot(*R, x, s) : dot(*R, s, x);
            if (v != 0) return;
        }
        elements.push_back(x);
    });
    // Left annihilators are left submodules and vice versa.
    return RingModuleSpan(R, S.dimension(), side, {}, std::move(elements));
}

RowColumnCheck check_row_column_cardinality(const RingPtr& R, const Matrix& A) {
    RowColumnCheck out;
    const std::size_t n = A.empty() ? 0 : A.front().size();
    out.row_space = span(R, A, Side::Left, n).size();
    out.column_space = span(R, transpose(A), Side::Right, A.size()).size();
    out.equal = out.row_space == out.column_space;
    return out;
}

Order2SoclePart order2_socle_part(const FiniteRing& R) {
    Order2SoclePart out;
    const std::size_t n = R.order();
    for (std::size_t x = 1; x < n; ++x) {
        bool order_two = true;
        for (std::size_t r = 0; r < n && order_two; ++r) {
            const Elem v = R.mul(static_cast<Elem>(r), static_cast<Elem>(x));
            order_two = v == 0 || v == x;
        }
        if (order_two) out.generators.push_back(static_cast<Elem>(x));
    }
    const std::size_t tau = out.generators.size();
    if (tau > 24) throw CapError("too many order-2 ideals to enumerate S0");
    std::vector<std::uint8_t> member(n, 0);
    for (std::uint64_t mask = 0; mask < (std::uint64_t{1} << tau); ++mask) {
        if (__builtin_popcountll(mask) % 2 != 0) continue;
        Elem s = 0;
        for (std::size_t i = 0; i < tau; ++i)
            if (mask >> i & 1) s = R.add(s, out.generators[i]);
        member[s] = 1;
    }
    for (std::size_t x = 0; x < n; ++x)
        if (member[x]) out.even_sums.push_back(static_cast<Elem>(x));
    return out;
}

std::vector<Elem> socle(const RingPtr& R) {
    std::vector<Word> minimal_generators;
    for (const auto& I : principal_ideals(R, Side::Left)) {
        bool minimal = true;
        for (Elem y : I.scalars()) {
            if (y == 0) continue;
            if (principal_ideal(R, y, Side::Left).size() != I.size()) {
                minimal = false;
                break;
            }
        }
        if (minimal) minimal_generators.push_back(I.generators().front());
    }
    std::vector<Elem> out = span(R, minimal_generators, Side::Left, 1).scalars();
    return out;
}

bool is_submodule(const FiniteRing& R, const std::vector<Word>& set, Side side) {
    if (set.empty()) return false;
    std::unordered_set<Word, WordHash> members(set.begin(), set.end());
    if (!members.count(Word(set.front().size(), 0))) return false;
    for (const auto& a : set) {
        for (std::size_t r = 0; r < R.order(); ++r) {
            const Word scaled =
                side == Side::Left ? scale_left(R, static_cast<Elem>(r), a) : scale_right(R, a, static_cast<Elem>(r));
            if (!members.count(scaled)) return false;
        }
        for (const auto& b : set)
            if (!members.count(add(R, a, b))) return false;
    }
    return true;
}

}  // namespace frobcode
