#include "frobcode/finite_ring.hpp"

#include "frobcode/errors.hpp"

#include <algorithm>
#include <cctype>
#include <numeric>
#include <random>

namespace frobcode {

namespace {

// Raw operation tables before validation.
struct Tables {
    std::size_t order = 0;
    Elem one = 0;
    std::vector<Elem> add, mul;
    std::vector<std::uint32_t> chi;
    std::uint32_t e = 1;
};

constexpr std::size_t kUnboundedCap = std::size_t{1} << 40;

Tables zm_tables(const ZmSpec& z) {
    Tables t;
    const std::size_t n = z.m;
    t.order = n;
    t.one = 1;
    t.add.resize(n * n);
    t.mul.resize(n * n);
    for (std::size_t a = 0; a < n; ++a)
        for (std::size_t b = 0; b < n; ++b) {
            t.add[a * n + b] = static_cast<Elem>((a + b) % n);
            t.mul[a * n + b] = static_cast<Elem>((a * b) % n);
        }
    t.chi.resize(n);
    std::iota(t.chi.begin(), t.chi.end(), 0u);
    t.e = z.m;
    return t;
}

// Element index of a coefficient vector a_0..a_{r-1} is sum a_i p^i, so the
// constant polynomial c has index c and lexicographic order of the tuples
// written highest degree first matches index order.
Tables gf_tables(const GfSpec& gf) {
    const unsigned p = gf.p, r = gf.r;
    std::size_t q = 1;
    for (unsigned i = 0; i < r; ++i) q *= p;
    Tables t;
    t.order = q;
    t.one = 1;
    t.add.resize(q * q);
    t.mul.resize(q * q);

    std::vector<std::vector<unsigned>> coeffs(q, std::vector<unsigned>(r));
    for (std::size_t x = 0; x < q; ++x) {
        std::size_t v = x;
        for (unsigned i = 0; i < r; ++i) {
            coeffs[x][i] = static_cast<unsigned>(v % p);
            v /= p;
        }
    }
    auto encode = [&](const std::vector<unsigned>& c) {
        std::size_t idx = 0;
        for (unsigned i = r; i-- > 0;) idx = idx * p + c[i];
        return static_cast<Elem>(idx);
    };

    std::vector<unsigned> sum(r), prod(2 * r);
    for (std::size_t a = 0; a < q; ++a)
        for (std::size_t b = 0; b < q; ++b) {
            for (unsigned i = 0; i < r; ++i) sum[i] = (coeffs[a][i] + coeffs[b][i]) % p;
            t.add[a * q + b] = encode(sum);

            std::fill(prod.begin(), prod.end(), 0u);
            for (unsigned i = 0; i < r; ++i)
                for (unsigned j = 0; j < r; ++j) prod[i + j] = (prod[i + j] + coeffs[a][i] * coeffs[b][j]) % p;
            // x^r = -(c_0 + ... + c_{r-1} x^{r-1}) for the monic modulus.
            for (std::size_t d = 2 * r - 1; d-- > r;) {
                const unsigned lead = prod[d];
                if (lead == 0) continue;
                prod[d] = 0;
                for (unsigned i = 0; i < r; ++i)
                    prod[d - r + i] = (prod[d - r + i] + (p - lead) * gf.modulus[i]) % p;
            }
            t.mul[a * q + b] = encode(std::vector<unsigned>(prod.begin(), prod.begin() + r));
        }

    // F_p[x]/(f) is a field iff f is irreducible.
    for (std::size_t a = 1; a < q; ++a) {
        bool invertible = false;
        for (std::size_t b = 1; b < q && !invertible; ++b) invertible = t.mul[a * q + b] == 1;
        if (!invertible) {
            std::string poly;
            for (std::size_t i = 0; i < gf.modulus.size(); ++i) poly += (i ? "," : "") + std::to_string(gf.modulus[i]);
            throw SpecError("polynomial (" + poly + ") is reducible over F_" + std::to_string(p));
        }
    }

    // Absolute trace x + x^p + ... + x^{p^{r-1}} lands in the prime field.
    t.chi.resize(q);
    for (std::size_t x = 0; x < q; ++x) {
        Elem power = static_cast<Elem>(x), trace = 0;
        for (unsigned i = 0; i < r; ++i) {
            trace = t.add[trace * q + power];
            Elem next = 1;
            for (unsigned k = 0; k < p; ++k) next = t.mul[next * q + power];
            power = next;
        }
        if (trace >= p) throw InconsistencyError("GF trace left the prime field");
        t.chi[x] = trace;
    }
    t.e = p;
    return t;
}

Tables mat_tables(const MatSpec& ms) {
    const Tables base = gf_tables(ms.field);
    const std::size_t q = base.order, m = ms.m, cells = m * m;
    std::size_t n = 1;
    for (std::size_t i = 0; i < cells; ++i) n *= q;

    // Row-major entries, first entry most significant.
    std::vector<Elem> entries(n * cells);
    for (std::size_t x = 0; x < n; ++x) {
        std::size_t v = x;
        for (std::size_t c = cells; c-- > 0;) {
            entries[x * cells + c] = static_cast<Elem>(v % q);
            v /= q;
        }
    }
    auto encode = [&](const Elem* cell) {
        std::size_t idx = 0;
        for (std::size_t c = 0; c < cells; ++c) idx = idx * q + cell[c];
        return static_cast<Elem>(idx);
    };

    Tables t;
    t.order = n;
    t.add.resize(n * n);
    t.mul.resize(n * n);
    std::vector<Elem> buf(cells);
    for (std::size_t a = 0; a < n; ++a) {
        const Elem* A = &entries[a * cells];
        for (std::size_t b = 0; b < n; ++b) {
            const Elem* B = &entries[b * cells];
            for (std::size_t c = 0; c < cells; ++c) buf[c] = base.add[A[c] * q + B[c]];
            t.add[a * n + b] = encode(buf.data());
            for (std::size_t i = 0; i < m; ++i)
                for (std::size_t j = 0; j < m; ++j) {
                    Elem acc = 0;
                    for (std::size_t k = 0; k < m; ++k)
                        acc = base.add[acc * q + base.mul[A[i * m + k] * q + B[k * m + j]]];
                    buf[i * m + j] = acc;
                }
            t.mul[a * n + b] = encode(buf.data());
        }
    }
    std::fill(buf.begin(), buf.end(), Elem{0});
    for (std::size_t i = 0; i < m; ++i) buf[i * m + i] = base.one;
    t.one = encode(buf.data());

    t.chi.resize(n);
    for (std::size_t x = 0; x < n; ++x) {
        Elem trace = 0;
        for (std::size_t i = 0; i < m; ++i) trace = base.add[trace * q + entries[x * cells + i * m + i]];
        t.chi[x] = base.chi[trace];
    }
    t.e = base.e;
    return t;
}

Tables spec_tables(const RingSpec& spec);

Tables product_tables(const ProductSpec& ps) {
    std::vector<Tables> parts;
    parts.reserve(ps.factors.size());
    for (const auto& f : ps.factors) parts.push_back(spec_tables(f));

    std::size_t n = 1;
    std::uint32_t e = 1;
    for (const auto& p : parts) {
        n *= p.order;
        e = std::lcm(e, p.e);
    }
    const std::size_t k = parts.size();

    // Mixed radix, first component most significant.
    std::vector<Elem> comps(n * k);
    for (std::size_t x = 0; x < n; ++x) {
        std::size_t v = x;
        for (std::size_t i = k; i-- > 0;) {
            comps[x * k + i] = static_cast<Elem>(v % parts[i].order);
            v /= parts[i].order;
        }
    }
    auto encode = [&](const std::vector<Elem>& c) {
        std::size_t idx = 0;
        for (std::size_t i = 0; i < k; ++i) idx = idx * parts[i].order + c[i];
        return static_cast<Elem>(idx);
    };

    Tables t;
    t.order = n;
    t.e = e;
    t.add.resize(n * n);
    t.mul.resize(n * n);
    std::vector<Elem> sum(k), prod(k);
    for (std::size_t a = 0; a < n; ++a)
        for (std::size_t b = 0; b < n; ++b) {
            for (std::size_t i = 0; i < k; ++i) {
                const std::size_t ni = parts[i].order;
                const Elem ai = comps[a * k + i], bi = comps[b * k + i];
                sum[i] = parts[i].add[ai * ni + bi];
                prod[i] = parts[i].mul[ai * ni + bi];
            }
            t.add[a * n + b] = encode(sum);
            t.mul[a * n + b] = encode(prod);
        }
    for (std::size_t i = 0; i < k; ++i) sum[i] = parts[i].one;
    t.one = encode(sum);

    t.chi.resize(n);
    for (std::size_t x = 0; x < n; ++x) {
        std::uint64_t c = 0;
        for (std::size_t i = 0; i < k; ++i) c += std::uint64_t{parts[i].chi[comps[x * k + i]]} * (e / parts[i].e);
        t.chi[x] = static_cast<std::uint32_t>(c % e);
    }
    return t;
}

Tables spec_tables(const RingSpec& spec) {
    return std::visit(
        [](const auto& s) -> Tables {
            using T = std::decay_t<decltype(s)>;
            if constexpr (std::is_same_v<T, ZmSpec>) return zm_tables(s);
            else if constexpr (std::is_same_v<T, GfSpec>) return gf_tables(s);
            else if constexpr (std::is_same_v<T, MatSpec>) return mat_tables(s);
            else return product_tables(s);
        },
        spec.kind);
}

}  // namespace

struct RingFactory {
    static RingPtr from_tables(Tables t, const RingSpec& spec, const BuildOptions& options) {
        auto ring = std::shared_ptr<FiniteRing>(new FiniteRing());
        FiniteRing& R = *ring;
        R.order_ = t.order;
        R.one_ = t.one;
        R.add_ = std::move(t.add);
        R.mul_ = std::move(t.mul);
        R.spec_ = spec;
        R.character_ = GeneratingCharacter{std::move(t.chi), t.e};
        finish(R, options);
        if (!is_additive_character(R, R.character_))
            throw CharacterError("structural character of " + R.name() + " is not additive");
        if (!is_generating_character(R, R.character_))
            throw CharacterError("structural character of " + R.name() + " is not generating");
        return ring;
    }

    // Derives negation, units and commutativity; verifies the ring axioms.
    static void finish(FiniteRing& R, const BuildOptions& options) {
        const std::size_t n = R.order_;
        R.neg_.assign(n, 0);
        for (std::size_t a = 0; a < n; ++a) {
            if (R.add(0, static_cast<Elem>(a)) != a || R.add(static_cast<Elem>(a), 0) != a)
                throw InconsistencyError(R.name() + ": 0 is not an additive identity");
            bool found = false;
            for (std::size_t b = 0; b < n && !found; ++b)
                if (R.add(static_cast<Elem>(a), static_cast<Elem>(b)) == 0) {
                    R.neg_[a] = static_cast<Elem>(b);
                    found = true;
                }
            if (!found) throw InconsistencyError(R.name() + ": missing additive inverse");
            if (R.mul(R.one_, static_cast<Elem>(a)) != a || R.mul(static_cast<Elem>(a), R.one_) != a)
                throw InconsistencyError(R.name() + ": one is not a multiplicative identity");
        }
        R.commutative_ = true;
        for (std::size_t a = 0; a < n; ++a)
            for (std::size_t b = a + 1; b < n; ++b) {
                if (R.add(static_cast<Elem>(a), static_cast<Elem>(b)) != R.add(static_cast<Elem>(b), static_cast<Elem>(a)))
                    throw InconsistencyError(R.name() + ": addition is not commutative");
                if (R.mul(static_cast<Elem>(a), static_cast<Elem>(b)) != R.mul(static_cast<Elem>(b), static_cast<Elem>(a)))
                    R.commutative_ = false;
            }

        auto check_triple = [&R](Elem a, Elem b, Elem c) {
            if (R.add(R.add(a, b), c) != R.add(a, R.add(b, c)))
                throw InconsistencyError(R.name() + ": addition is not associative");
            if (R.mul(R.mul(a, b), c) != R.mul(a, R.mul(b, c)))
                throw InconsistencyError(R.name() + ": multiplication is not associative");
            if (R.mul(a, R.add(b, c)) != R.add(R.mul(a, b), R.mul(a, c)) ||
                R.mul(R.add(a, b), c) != R.add(R.mul(a, c), R.mul(b, c)))
                throw InconsistencyError(R.name() + ": distributivity fails");
        };
        if (n <= options.exhaustive_axiom_limit) {
            for (std::size_t a = 0; a < n; ++a)
                for (std::size_t b = 0; b < n; ++b)
                    for (std::size_t c = 0; c < n; ++c)
                        check_triple(static_cast<Elem>(a), static_cast<Elem>(b), static_cast<Elem>(c));
        } else {
            std::mt19937_64 rng(0);
            std::uniform_int_distribution<std::size_t> pick(0, n - 1);
            for (int i = 0; i < 200000; ++i)
                check_triple(static_cast<Elem>(pick(rng)), static_cast<Elem>(pick(rng)), static_cast<Elem>(pick(rng)));
        }

        R.units_.clear();
        R.unit_mask_.assign(n, 0);
        for (std::size_t a = 0; a < n; ++a)
            for (std::size_t b = 0; b < n; ++b)
                if (R.mul(static_cast<Elem>(a), static_cast<Elem>(b)) == R.one_ &&
                    R.mul(static_cast<Elem>(b), static_cast<Elem>(a)) == R.one_) {
                    R.units_.push_back(static_cast<Elem>(a));
                    R.unit_mask_[a] = 1;
                    break;
                }

        // The character modulus must be the exponent of (R,+).
        std::uint64_t exponent = 1;
        for (std::size_t a = 1; a < n; ++a) {
            std::uint64_t order = 1;
            for (Elem x = static_cast<Elem>(a); x != 0; x = R.add(x, static_cast<Elem>(a))) ++order;
            exponent = std::lcm(exponent, order);
        }
        if (exponent != R.character_.modulus)
            throw CharacterError(R.name() + ": character modulus " + std::to_string(R.character_.modulus) +
                                 " differs from the additive exponent " + std::to_string(exponent));
    }

    static RingPtr opposite(const FiniteRing& src) {
        auto ring = std::shared_ptr<FiniteRing>(new FiniteRing(src));
        const std::size_t n = src.order_;
        for (std::size_t a = 0; a < n; ++a)
            for (std::size_t b = 0; b < n; ++b) ring->mul_[a * n + b] = src.mul_[b * n + a];
        ring->opposite_ = !src.opposite_;
        if (!is_generating_character(*ring, ring->character_))
            throw CharacterError("character of " + ring->name() + " is not generating");
        return ring;
    }

    static RingPtr with_character(const FiniteRing& src, GeneratingCharacter character) {
        if (character.exponent.size() != src.order_ || character.modulus == 0)
            throw CharacterError("character table has the wrong shape");
        auto ring = std::shared_ptr<FiniteRing>(new FiniteRing(src));
        ring->character_ = std::move(character);
        if (!is_additive_character(*ring, ring->character_))
            throw CharacterError("character of " + ring->name() + " is not additive");
        if (!is_generating_character(*ring, ring->character_))
            throw CharacterError("character of " + ring->name() + " is not generating");
        return ring;
    }
};

namespace {

std::size_t spec_order(const RingSpec& spec) { return ring_order(spec, kUnboundedCap); }

std::size_t gf_order(const GfSpec& gf) {
    std::size_t q = 1;
    for (unsigned i = 0; i < gf.r; ++i) q *= gf.p;
    return q;
}

std::string format_in(const RingSpec& spec, std::size_t idx) {
    if (const auto* mat = std::get_if<MatSpec>(&spec.kind)) {
        const std::size_t q = gf_order(mat->field), m = mat->m, cells = m * m;
        std::vector<std::size_t> cell(cells);
        for (std::size_t c = cells; c-- > 0;) {
            cell[c] = idx % q;
            idx /= q;
        }
        std::string out = "[";
        for (std::size_t i = 0; i < m; ++i) {
            if (i) out += ";";
            for (std::size_t j = 0; j < m; ++j) {
                if (j) out += ",";
                out += std::to_string(cell[i * m + j]);
            }
        }
        return out + "]";
    }
    if (const auto* prod = std::get_if<ProductSpec>(&spec.kind)) {
        const std::size_t k = prod->factors.size();
        std::vector<std::size_t> comp(k);
        for (std::size_t i = k; i-- > 0;) {
            const std::size_t ni = spec_order(prod->factors[i]);
            comp[i] = idx % ni;
            idx /= ni;
        }
        std::string out = "(";
        for (std::size_t i = 0; i < k; ++i) {
            if (i) out += ",";
            out += format_in(prod->factors[i], comp[i]);
        }
        return out + ")";
    }
    return std::to_string(idx);
}

class ElementParser {
public:
    ElementParser(std::string_view text) : text_(text) {}

    std::size_t parse_all(const RingSpec& spec) {
        const std::size_t v = parse(spec);
        skip_ws();
        if (pos_ != text_.size()) fail("trailing characters");
        return v;
    }

private:
    [[noreturn]] void fail(const std::string& what) const {
        throw ParseError("element '" + std::string(text_) + "': " + what, pos_);
    }
    void skip_ws() {
        while (pos_ < text_.size() && std::isspace(static_cast<unsigned char>(text_[pos_]))) ++pos_;
    }
    void expect(char c) {
        skip_ws();
        if (pos_ >= text_.size() || text_[pos_] != c) fail(std::string("expected '") + c + "'");
        ++pos_;
    }
    std::size_t parse_uint(std::size_t bound) {
        skip_ws();
        const std::size_t start = pos_;
        std::size_t v = 0;
        while (pos_ < text_.size() && std::isdigit(static_cast<unsigned char>(text_[pos_]))) {
            v = v * 10 + static_cast<std::size_t>(text_[pos_] - '0');
            if (v >= bound) {
                pos_ = start;
                fail("value out of range (must be < " + std::to_string(bound) + ")");
            }
            ++pos_;
        }
        if (pos_ == start) fail("expected a number");
        return v;
    }

    std::size_t parse(const RingSpec& spec) {
        if (const auto* mat = std::get_if<MatSpec>(&spec.kind)) {
            const std::size_t q = gf_order(mat->field), m = mat->m;
            expect('[');
            std::size_t idx = 0;
            for (std::size_t i = 0; i < m; ++i) {
                if (i) expect(';');
                for (std::size_t j = 0; j < m; ++j) {
                    if (j) expect(',');
                    idx = idx * q + parse_uint(q);
                }
            }
            expect(']');
            return idx;
        }
        if (const auto* prod = std::get_if<ProductSpec>(&spec.kind)) {
            expect('(');
            std::size_t idx = 0;
            for (std::size_t i = 0; i < prod->factors.size(); ++i) {
                if (i) expect(',');
                idx = idx * spec_order(prod->factors[i]) + parse(prod->factors[i]);
            }
            expect(')');
            return idx;
        }
        return parse_uint(spec_order(spec));
    }

    std::string_view text_;
    std::size_t pos_ = 0;
};

}  // namespace

std::string FiniteRing::name() const { return to_string(spec_) + (opposite_ ? "^op" : ""); }

std::string FiniteRing::format(Elem a) const { return format_in(spec_, a); }

Elem FiniteRing::parse_element(std::string_view text) const {
    return static_cast<Elem>(ElementParser(text).parse_all(spec_));
}

std::vector<Elem> FiniteRing::all_elements() const {
    std::vector<Elem> out(order_);
    std::iota(out.begin(), out.end(), Elem{0});
    return out;
}

RingPtr build_ring(const RingSpec& spec, const BuildOptions& options) {
    if (options.order_cap > 65536) throw CapError("order cap above 65536 is not supported");
    ring_order(spec, options.order_cap);
    return RingFactory::from_tables(spec_tables(spec), spec, options);
}

RingPtr build_ring(std::string_view spec_text, const BuildOptions& options) {
    return build_ring(parse_ring_spec(spec_text), options);
}

RingPtr opposite(const FiniteRing& ring) { return RingFactory::opposite(ring); }

RingPtr with_character(const FiniteRing& ring, GeneratingCharacter character) {
    return RingFactory::with_character(ring, std::move(character));
}

bool is_additive_character(const FiniteRing& ring, const GeneratingCharacter& character) {
    const std::size_t n = ring.order();
    const std::uint32_t e = character.modulus;
    if (character.exponent.size() != n || e == 0) return false;
    if (character.exponent[0] % e != 0) return false;
    for (std::size_t a = 0; a < n; ++a) {
        if (character.exponent[a] >= e) return false;
        for (std::size_t b = a; b < n; ++b) {
            const std::uint32_t lhs = character.exponent[ring.add(static_cast<Elem>(a), static_cast<Elem>(b))];
            if (lhs != (character.exponent[a] + character.exponent[b]) % e) return false;
        }
    }
    return true;
}

bool is_generating_character(const FiniteRing& ring, const GeneratingCharacter& character) {
    const std::size_t n = ring.order();
    const std::uint32_t e = character.modulus;
    for (std::size_t x = 1; x < n; ++x) {
        bool escapes_kernel = false;
        for (std::size_t r = 0; r < n && !escapes_kernel; ++r)
            escapes_kernel = character.exponent[ring.mul(static_cast<Elem>(r), static_cast<Elem>(x))] % e != 0;
        if (!escapes_kernel) return false;
    }
    return true;
}

SemisimpleView::SemisimpleView(RingPtr ring) : ring_(std::move(ring)) {
    auto factors = semisimple_factors(ring_->spec());
    if (!factors) throw PreconditionError(ring_->name() + " is not a product of matrix rings over fields");
    factors_ = *factors;

    auto collect = [&](const RingSpec& s, auto&& self) -> void {
        if (const auto* prod = std::get_if<ProductSpec>(&s.kind)) {
            for (const auto& f : prod->factors) self(f, self);
            return;
        }
        Component c;
        c.size = spec_order(s);
        if (const auto* mat = std::get_if<MatSpec>(&s.kind)) {
            c.factor = {gf_order(mat->field), mat->m};
            c.field = build_ring(RingSpec{mat->field});
        } else {
            c.factor = {c.size, 1};
        }
        components_.push_back(std::move(c));
    };
    collect(ring_->spec(), collect);
}

std::vector<unsigned> SemisimpleView::ranks(Elem x) const {
    // Leaves in order; split the index by nested mixed radix.
    std::vector<std::size_t> leaf_index;
    auto split = [&](const RingSpec& s, std::size_t idx, auto&& self) -> void {
        if (const auto* prod = std::get_if<ProductSpec>(&s.kind)) {
            const std::size_t k = prod->factors.size();
            std::vector<std::size_t> comp(k);
            for (std::size_t i = k; i-- > 0;) {
                const std::size_t ni = spec_order(prod->factors[i]);
                comp[i] = idx % ni;
                idx /= ni;
            }
            for (std::size_t i = 0; i < k; ++i) self(prod->factors[i], comp[i], self);
            return;
        }
        leaf_index.push_back(idx);
    };
    split(ring_->spec(), x, split);

    std::vector<unsigned> out;
    out.reserve(components_.size());
    for (std::size_t c = 0; c < components_.size(); ++c) {
        const Component& comp = components_[c];
        std::size_t idx = leaf_index[c];
        if (!comp.field) {
            out.push_back(idx == 0 ? 0u : 1u);
            continue;
        }
        const FiniteRing& F = *comp.field;
        const std::size_t q = comp.factor.q, m = comp.factor.m;
        std::vector<Elem> a(m * m);
        for (std::size_t cell = m * m; cell-- > 0;) {
            a[cell] = static_cast<Elem>(idx % q);
            idx /= q;
        }
        // Gaussian elimination over the field.
        unsigned rank = 0;
        for (std::size_t col = 0; col < m && rank < m; ++col) {
            std::size_t pivot = m;
            for (std::size_t row = rank; row < m; ++row)
                if (a[row * m + col] != 0) {
                    pivot = row;
                    break;
                }
            if (pivot == m) continue;
            for (std::size_t j = 0; j < m; ++j) std::swap(a[pivot * m + j], a[rank * m + j]);
            Elem inv = 0;
            for (Elem cand = 1; cand < q; ++cand)
                if (F.mul(a[rank * m + col], cand) == F.one()) inv = cand;
            for (std::size_t j = 0; j < m; ++j) a[rank * m + j] = F.mul(inv, a[rank * m + j]);
            for (std::size_t row = 0; row < m; ++row) {
                if (row == rank || a[row * m + col] == 0) continue;
                const Elem factor = a[row * m + col];
                for (std::size_t j = 0; j < m; ++j)
                    a[row * m + j] = F.sub(a[row * m + j], F.mul(factor, a[rank * m + j]));
            }
            ++rank;
        }
        out.push_back(rank);
    }
    return out;
}

}  // namespace frobcode
