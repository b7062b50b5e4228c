#pragma once

#include <cstddef>
#include <optional>
#include <string>
#include <string_view>
#include <variant>
#include <vector>

namespace frobcode {

struct RingSpec;

/// Z/mZ, m >= 2.
struct ZmSpec {
    unsigned m = 2;
};

/// GF(p^r) realized as F_p[x]/(f). `modulus` holds the monic modulus f as
/// coefficients c_0..c_r (c_r == 1).
struct GfSpec {
    unsigned p = 2;
    unsigned r = 1;
    std::vector<unsigned> modulus;
};

/// Full matrix ring Mat(m, GF(q)).
struct MatSpec {
    unsigned m = 2;
    GfSpec field;
};

struct ProductSpec {
    std::vector<RingSpec> factors;
};

/// Construction recipe for a finite ring. Text form:
///   Z<m> | GF(<p>[^<r>][,poly=<c0,c1,...>]) | M<m>(GF(...)) | prod(<spec>,<spec>,...)
struct RingSpec {
    std::variant<ZmSpec, GfSpec, MatSpec, ProductSpec> kind;

    static RingSpec zm(unsigned m) { return RingSpec{ZmSpec{m}}; }
    static RingSpec gf(unsigned p, unsigned r = 1, std::vector<unsigned> poly = {});
    static RingSpec mat(unsigned m, const RingSpec& field);
    static RingSpec product(std::vector<RingSpec> factors);
};

/// Parses the text form. Throws ParseError (with offset) on bad syntax and
/// SpecError on structurally invalid parameters.
RingSpec parse_ring_spec(std::string_view text);

/// Canonical text form; round-trips through parse_ring_spec.
std::string to_string(const RingSpec& spec);

/// Number of elements. Throws CapError if the value would exceed `cap`.
std::size_t ring_order(const RingSpec& spec, std::size_t cap);

/// Fills in the default modulus (built-in table for p^r <= 16) and checks
/// the GF invariants that do not need the multiplication table.
GfSpec normalize_gf(GfSpec gf);

/// Built-in default moduli, or nullopt when p^r > 16 and r > 1.
std::optional<std::vector<unsigned>> default_modulus(unsigned p, unsigned r);

bool is_prime(unsigned p);

/// (q, m) for each simple factor when the spec is a product of matrix rings
/// over fields (fields and Z_p count as m = 1); nullopt otherwise.
struct SimpleFactor {
    std::size_t q = 0;
    unsigned m = 1;
};
std::optional<std::vector<SimpleFactor>> semisimple_factors(const RingSpec& spec);

}  // namespace frobcode
