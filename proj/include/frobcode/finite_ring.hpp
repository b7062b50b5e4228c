#pragma once

#include "frobcode/ring_spec.hpp"

#include <cstddef>
#include <cstdint>
#include <memory>
#include <string>
#include <string_view>
#include <vector>

namespace frobcode {

/// Ring elements are indices into the operation tables. Index 0 is always
/// zero; the index of one depends on the canonical order (see one()).
using Elem = std::uint16_t;

/// Additive character chi(x) = exp(2 pi i c(x) / e), stored as the exponent
/// map c with values in [0, e).
struct GeneratingCharacter {
    std::vector<std::uint32_t> exponent;
    std::uint32_t modulus = 1;
};

struct BuildOptions {
    std::size_t order_cap = 4096;
    /// Orders up to this bound get exhaustive associativity/distributivity
    /// checks; larger rings are checked on a fixed-seed sample of triples.
    std::size_t exhaustive_axiom_limit = 256;
};

class FiniteRing;
using RingPtr = std::shared_ptr<const FiniteRing>;

/// Finite unital ring given by explicit operation tables. Immutable once
/// built; safe to share across threads.
class FiniteRing {
public:
    std::size_t order() const { return order_; }
    Elem zero() const { return 0; }
    Elem one() const { return one_; }

    Elem add(Elem a, Elem b) const { return add_[static_cast<std::size_t>(a) * order_ + b]; }
    Elem mul(Elem a, Elem b) const { return mul_[static_cast<std::size_t>(a) * order_ + b]; }
    Elem neg(Elem a) const { return neg_[a]; }
    Elem sub(Elem a, Elem b) const { return add(a, neg(b)); }

    const std::vector<Elem>& units() const { return units_; }
    bool is_unit(Elem a) const { return unit_mask_[a] != 0; }

    std::uint32_t additive_exponent() const { return character_.modulus; }
    const GeneratingCharacter& character() const { return character_; }
    std::uint32_t char_exponent(Elem a) const { return character_.exponent[a]; }

    const RingSpec& spec() const { return spec_; }
    bool is_opposite() const { return opposite_; }
    bool is_commutative() const { return commutative_; }

    /// Spec text, with "^op" appended for opposite rings.
    std::string name() const;

    /// Canonical element notation: Z_m and GF(q) elements are decimal
    /// indices, matrices are "[a,b;c,d]" row-major, products "(x,y,...)".
    std::string format(Elem a) const;
    Elem parse_element(std::string_view text) const;

    std::vector<Elem> all_elements() const;

private:
    friend struct RingFactory;
    FiniteRing() = default;

    std::size_t order_ = 0;
    Elem one_ = 0;
    std::vector<Elem> add_, mul_, neg_;
    std::vector<Elem> units_;
    std::vector<std::uint8_t> unit_mask_;
    GeneratingCharacter character_;
    RingSpec spec_;
    bool opposite_ = false;
    bool commutative_ = false;
};

/// Builds the ring described by `spec` and verifies the ring axioms and the
/// structural character. Throws SpecError, CapError or CharacterError.
RingPtr build_ring(const RingSpec& spec, const BuildOptions& options = {});
RingPtr build_ring(std::string_view spec_text, const BuildOptions& options = {});

/// R^op: same elements, addition and character; a*b := b*a.
RingPtr opposite(const FiniteRing& ring);

/// Copy of `ring` carrying a different character. Throws CharacterError if
/// the character is not additive or not generating.
RingPtr with_character(const FiniteRing& ring, GeneratingCharacter character);

/// True iff the kernel of the character contains no nonzero left ideal,
/// i.e. for every x != 0 some r has c(rx) != 0 mod e.
bool is_generating_character(const FiniteRing& ring, const GeneratingCharacter& character);

/// True iff c(x+y) = c(x)+c(y) mod e for all x, y and every value is in [0, e).
bool is_additive_character(const FiniteRing& ring, const GeneratingCharacter& character);

/// Matrix ranks of the components of an element of a product of matrix
/// rings over fields (see semisimple_factors).
class SemisimpleView {
public:
    /// Throws PreconditionError unless the ring is such a product.
    explicit SemisimpleView(RingPtr ring);

    const std::vector<SimpleFactor>& factors() const { return factors_; }
    std::vector<unsigned> ranks(Elem x) const;

private:
    struct Component {
        SimpleFactor factor;
        RingPtr field;
        std::size_t size = 0;  // order of this factor
    };
    RingPtr ring_;
    std::vector<SimpleFactor> factors_;
    std::vector<Component> components_;
};

}  // namespace frobcode
