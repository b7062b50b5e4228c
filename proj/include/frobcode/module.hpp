#pragma once

#include "frobcode/finite_ring.hpp"

#include <cstddef>
#include <cstdint>
#include <vector>

namespace frobcode {

/// A vector in R^n, one element index per coordinate.
using Word = std::vector<Elem>;
/// Row-major matrix; each entry of the outer vector is a row.
using Matrix = std::vector<Word>;

enum class Side { Left, Right };

struct WordHash {
    std::size_t operator()(const Word& w) const noexcept;
};

Word add(const FiniteRing& R, const Word& a, const Word& b);
Word sub(const FiniteRing& R, const Word& a, const Word& b);
Word neg(const FiniteRing& R, const Word& a);
/// r * a (coordinatewise left multiplication).
Word scale_left(const FiniteRing& R, Elem r, const Word& a);
/// a * r (coordinatewise right multiplication).
Word scale_right(const FiniteRing& R, const Word& a, Elem r);
/// x . y = x_1 y_1 + ... + x_n y_n.
Elem dot(const FiniteRing& R, const Word& x, const Word& y);
bool is_zero(const Word& w);

/// x G for a row vector x and a k x n matrix G.
Word row_times(const FiniteRing& R, const Word& x, const Matrix& G);
/// G y^T for a k x n matrix G and y in R^n.
Word times_column(const FiniteRing& R, const Matrix& G, const Word& y);
Matrix transpose(const Matrix& M);

/// Calls f(word) for every word of R^n in lexicographic index order.
/// Throws CapError when |R|^n exceeds `cap`.
template <typename F>
void for_each_word(std::size_t ring_order, std::size_t n, std::uint64_t cap, F&& f);

std::uint64_t checked_power(std::size_t base, std::size_t exponent, std::uint64_t cap);

/// Finite set of words closed under addition and the scalar action of the
/// given side. `elements` is sorted lexicographically and contains zero.
class RingModuleSpan {
public:
    RingModuleSpan(RingPtr ring, std::size_t dimension, Side side, std::vector<Word> generators,
                   std::vector<Word> elements);

    const RingPtr& ring() const { return ring_; }
    std::size_t dimension() const { return dimension_; }
    Side side() const { return side_; }
    const std::vector<Word>& generators() const { return generators_; }
    const std::vector<Word>& elements() const { return elements_; }
    std::size_t size() const { return elements_.size(); }
    bool contains(const Word& w) const;

    /// Sorted scalar elements; only meaningful for dimension 1.
    std::vector<Elem> scalars() const;

private:
    RingPtr ring_;
    std::size_t dimension_;
    Side side_;
    std::vector<Word> generators_;
    std::vector<Word> elements_;
};

/// Smallest submodule of R^dimension containing the generators, closed
/// under the scalar action of `side`.
RingModuleSpan span(const RingPtr& R, const std::vector<Word>& generators, Side side, std::size_t dimension);

/// Rx (left) or xR (right), as a span in R^1.
RingModuleSpan principal_ideal(const RingPtr& R, Elem x, Side side);

/// All distinct nonzero principal ideals of the given side, ordered by
/// their smallest generator.
std::vector<RingModuleSpan> principal_ideals(const RingPtr& R, Side side);

/// Left: {x : x . s = 0 for all s in S}. Right: {x : s . x = 0 for all s}.
/// Enumerates R^n; throws CapError above `cap`.
RingModuleSpan annihilator(const RingModuleSpan& S, Side side, std::uint64_t cap = std::uint64_t{1} << 20);

struct RowColumnCheck {
    std::size_t row_space = 0;
    std::size_t column_space = 0;
    bool equal = false;
};

/// Sizes of the left row space {xA} and the right column space {Ay}.
RowColumnCheck check_row_column_cardinality(const RingPtr& R, const Matrix& A);

struct Order2SoclePart {
    /// All x != 0 with Rx = {0, x}, ascending.
    std::vector<Elem> generators;
    /// Sums of an even number of generators, ascending.
    std::vector<Elem> even_sums;
};

Order2SoclePart order2_socle_part(const FiniteRing& R);

/// Sum of the minimal left ideals, ascending. Minimal left ideals are found
/// as nonzero principal ideals Rx with Ry = Rx for every nonzero y in Rx.
std::vector<Elem> socle(const RingPtr& R);

/// True iff `set` contains zero and is closed under addition and the
/// scalar action of `side`.
bool is_submodule(const FiniteRing& R, const std::vector<Word>& set, Side side);

// ---------------------------------------------------------------------------

template <typename F>
void for_each_word(std::size_t ring_order, std::size_t n, std::uint64_t cap, F&& f) {
    const std::uint64_t total = checked_power(ring_order, n, cap);
    Word w(n, 0);
    for (std::uint64_t i = 0; i < total; ++i) {
        f(static_cast<const Word&>(w));
        for (std::size_t pos = n; pos-- > 0;) {
            if (++w[pos] < ring_order) break;
            w[pos] = 0;
        }
    }
}

}  // namespace frobcode
