#include "frobcode/verify.hpp"

#include "frobcode/errors.hpp"

#include <algorithm>
#include <map>
#include <random>
#include <set>

namespace frobcode {

bool VerifyReport::passed() const {
    return std::all_of(checks.begin(), checks.end(), [](const VerifyCheck& c) { return c.passed; });
}

bool VerifyReport::sampled() const {
    return std::any_of(checks.begin(), checks.end(), [](const VerifyCheck& c) { return c.sampled; });
}

namespace {

VerifyCheck from_result(std::string name, const CheckResult& r, std::uint64_t cases) {
    VerifyCheck c;
    c.name = std::move(name);
    c.passed = r.passed;
    c.witness = r.witness;
    c.cases = cases;
    return c;
}

std::string word_text(const FiniteRing& R, const Word& w) {
    std::string out = "(";
    for (std::size_t i = 0; i < w.size(); ++i) out += (i ? " " : "") + R.format(w[i]);
    return out + ")";
}

VerifyCheck unit_invariance(const WeightTable& W) {
    const FiniteRing& R = *W.ring();
    VerifyCheck c{"unit invariance", true, false, 0, ""};
    for (std::size_t x = 0; x < R.order() && c.passed; ++x)
        for (Elem u : R.units()) {
            ++c.cases;
            const Elem e = static_cast<Elem>(x);
            if (W.scaled(R.mul(u, e)) != W.scaled(e) || W.scaled(R.mul(e, u)) != W.scaled(e)) {
                c.passed = false;
                c.witness = "u = " + R.format(u) + ", x = " + R.format(e);
                break;
            }
        }
    return c;
}

VerifyCheck sum_of_squares(const WeightTable& W) {
    const FiniteRing& R = *W.ring();
    __int128 total = 0;
    for (std::size_t x = 0; x < R.order(); ++x)
        total += static_cast<__int128>(W.scaled(static_cast<Elem>(x))) * W.scaled(static_cast<Elem>(x));
    const Rational lhs = W.unscale(total, 2);
    const Rational units(static_cast<unsigned long long>(R.units().size()));
    const Rational rhs = Rational(static_cast<unsigned long long>(R.order())) * (Rational(1) + Rational(1) / units);
    VerifyCheck c{"sum of squares", lhs == rhs, false, 1, ""};
    if (!c.passed) c.witness = "sum w^2 = " + lhs.to_string() + ", expected " + rhs.to_string();
    return c;
}

VerifyCheck ideal_correlation(const WeightTable& W, const VerifyOptions& opt, std::size_t samples) {
    const RingPtr& ring = W.ring();
    const FiniteRing& R = *ring;
    const auto ideals = principal_ideals(ring, Side::Left);
    VerifyCheck c{"ideal correlation", true, false, 0, ""};
    const std::uint64_t total = static_cast<std::uint64_t>(ideals.size()) * R.order() * R.order();
    const std::uint64_t budget = opt.full ? (std::uint64_t{1} << 22) : (std::uint64_t{1} << 18);
    auto run = [&](std::size_t i, Elem r, Elem s) {
        ++c.cases;
        const IdentityValues v = correlation_ideal(W, ideals[i], r, s);
        if (v.holds()) return true;
        c.passed = false;
        c.witness = "I = R" + R.format(ideals[i].generators().front().at(0)) + ", r = " + R.format(r) + ", s = " +
                    R.format(s) + ": " + v.lhs.to_string() + " != " + v.rhs.to_string();
        return false;
    };
    if (total <= budget) {
        for (std::size_t i = 0; i < ideals.size(); ++i)
            for (std::size_t r = 0; r < R.order(); ++r)
                for (std::size_t s = 0; s < R.order(); ++s)
                    if (!run(i, static_cast<Elem>(r), static_cast<Elem>(s))) return c;
    } else {
        c.sampled = true;
        std::mt19937_64 rng(opt.seed);
        std::uniform_int_distribution<std::size_t> pick_i(0, ideals.size() - 1), pick_e(0, R.order() - 1);
        for (std::size_t t = 0; t < samples; ++t)
            if (!run(pick_i(rng), static_cast<Elem>(pick_e(rng)), static_cast<Elem>(pick_e(rng)))) return c;
    }
    return c;
}

// sum_x w(x.g) w(x.h + s) against |R|^k + [g~h] (|R|^k/|gR^x|)(1 - w(s)), all s at once.
VerifyCheck vector_correlation(const WeightTable& W, std::size_t k, const VerifyOptions& opt, std::size_t samples) {
    const FiniteRing& R = *W.ring();
    const std::size_t q = R.order();
    VerifyCheck c{"vector correlation k=" + std::to_string(k), true, false, 0, ""};

    std::vector<Word> xs;
    for_each_word(q, k, std::uint64_t{1} << 16, [&](const Word& x) { xs.push_back(x); });
    const std::size_t total = xs.size();
    std::vector<Word> gs(xs.begin() + 1, xs.end());

    // Per vector: x.g for every x, point class and orbit size.
    std::vector<std::vector<Elem>> images(gs.size(), std::vector<Elem>(total));
    std::vector<std::size_t> point_class(gs.size()), orbit(gs.size());
    std::map<std::vector<Word>, std::size_t> classes;
    for (std::size_t i = 0; i < gs.size(); ++i) {
        for (std::size_t x = 0; x < total; ++x) images[i][x] = dot(R, xs[x], gs[i]);
        const OrbitAndPoint op = orbit_and_point(R, gs[i]);
        point_class[i] = classes.emplace(op.point, classes.size()).first->second;
        orbit[i] = op.orbit.size();
    }

    const __int128 scale = W.scale();
    auto run = [&](std::size_t gi, std::size_t hi) {
        const bool related = point_class[gi] == point_class[hi];
        for (std::size_t s = 0; s < q; ++s) {
            __int128 lhs = 0;
            for (std::size_t x = 0; x < total; ++x) {
                const std::int64_t a = W.scaled(images[gi][x]);
                if (a != 0) lhs += static_cast<__int128>(a) * W.scaled(R.add(images[hi][x], static_cast<Elem>(s)));
            }
            // Multiply through by |gR^x| scale^2.
            const __int128 o = static_cast<__int128>(orbit[gi]);
            __int128 rhs = static_cast<__int128>(total) * scale * scale * o;
            if (related) rhs += static_cast<__int128>(total) * (scale - W.scaled(static_cast<Elem>(s))) * scale;
            ++c.cases;
            if (lhs * o != rhs) {
                c.passed = false;
                c.witness = "g = " + word_text(R, gs[gi]) + ", h = " + word_text(R, gs[hi]) + ", s = " +
                            R.format(static_cast<Elem>(s)) + ": lhs = " + W.unscale(lhs, 2).to_string();
                return false;
            }
        }
        return true;
    };

    const std::uint64_t pairs = static_cast<std::uint64_t>(gs.size()) * gs.size();
    const std::uint64_t work = pairs * total * q;
    const std::uint64_t budget = opt.full ? (std::uint64_t{1} << 33) : (std::uint64_t{1} << 29);
    if (work <= budget) {
        for (std::size_t gi = 0; gi < gs.size(); ++gi)
            for (std::size_t hi = 0; hi < gs.size(); ++hi)
                if (!run(gi, hi)) return c;
    } else {
        c.sampled = true;
        std::mt19937_64 rng(opt.seed);
        std::uniform_int_distribution<std::size_t> pick(0, gs.size() - 1);
        for (std::size_t t = 0; t < samples; ++t) {
            const std::size_t gi = pick(rng);
            // Every other sample uses a related pair so both branches are exercised.
            std::size_t hi = pick(rng);
            if (t % 2 == 0) {
                Word gu = scale_right(R, gs[gi], R.units()[t / 2 % R.units().size()]);
                hi = static_cast<std::size_t>(std::lower_bound(gs.begin(), gs.end(), gu) - gs.begin());
            }
            if (!run(gi, hi)) return c;
        }
    }
    return c;
}

VerifyCheck orbit_point_consistency(const FiniteRing& R, std::size_t k) {
    VerifyCheck c{"orbit/point consistency k=" + std::to_string(k), true, false, 0, ""};
    std::map<Word, std::vector<Word>> point_of_orbit;
    std::map<std::vector<Word>, Word> orbit_of_point;
    for_each_word(R.order(), k, std::uint64_t{1} << 16, [&](const Word& g) {
        if (is_zero(g) || !c.passed) return;
        ++c.cases;
        const OrbitAndPoint op = orbit_and_point(R, g);
        auto [it1, fresh1] = point_of_orbit.emplace(op.id, op.point);
        auto [it2, fresh2] = orbit_of_point.emplace(op.point, op.id);
        if (it1->second != op.point || it2->second != op.id) {
            c.passed = false;
            c.witness = "g = " + word_text(R, g);
        }
    });
    return c;
}

VerifyCheck row_column(const WeightTable& W, const VerifyOptions& opt) {
    const RingPtr& ring = W.ring();
    const FiniteRing& R = *ring;
    VerifyCheck c{"row/column space", true, false, 0, ""};
    std::mt19937_64 rng(opt.seed);
    std::uniform_int_distribution<std::size_t> dim(1, 3), pick(0, R.order() - 1);
    for (std::size_t t = 0; t < opt.matrices; ++t) {
        const std::size_t m = dim(rng), n = dim(rng);
        Matrix A(m, Word(n));
        for (auto& row : A)
            for (auto& e : row) e = static_cast<Elem>(pick(rng));
        ++c.cases;
        const RowColumnCheck r = check_row_column_cardinality(ring, A);
        if (!r.equal) {
            c.passed = false;
            std::string text;
            for (const auto& row : A) text += word_text(R, row);
            c.witness = "A = " + text + ": " + std::to_string(r.row_space) + " != " + std::to_string(r.column_space);
            break;
        }
    }
    return c;
}

VerifyCheck frobenius_duality(const WeightTable& W, const VerifyOptions& opt) {
    const RingPtr& ring = W.ring();
    const FiniteRing& R = *ring;
    VerifyCheck c{"frobenius duality", true, false, 0, ""};
    auto check = [&](const RingModuleSpan& S) {
        if (!c.passed) return;
        ++c.cases;
        const Side other = S.side() == Side::Left ? Side::Right : Side::Left;
        const RingModuleSpan A = annihilator(S, other);
        const std::uint64_t full = checked_power(R.order(), S.dimension(), std::uint64_t{1} << 20);
        if (static_cast<std::uint64_t>(S.size()) * A.size() != full) {
            c.passed = false;
            c.witness = "span of " + std::to_string(S.generators().size()) + " generator(s) in R^" +
                        std::to_string(S.dimension()) + ": " + std::to_string(S.size()) + " * " +
                        std::to_string(A.size()) + " != " + std::to_string(full);
        }
    };
    for (std::size_t n = 1; n <= 2; ++n) {
        if (checked_power(R.order(), n, std::uint64_t{1} << 20) > 4096) break;
        std::vector<Word> words;
        for_each_word(R.order(), n, 4096, [&](const Word& g) { words.push_back(g); });
        std::set<std::vector<Word>> seen;
        for (Side side : {Side::Left, Side::Right})
            for (const auto& g : words) {
                RingModuleSpan S = span(ring, {g}, side, n);
                if (seen.insert(S.elements()).second) check(S);
            }
        std::mt19937_64 rng(opt.seed + n);
        std::uniform_int_distribution<std::size_t> pick(0, words.size() - 1);
        for (std::size_t t = 0; t < 50; ++t) check(span(ring, {words[pick(rng)], words[pick(rng)]}, Side::Left, n));
    }
    return c;
}

VerifyCheck outside_socle(const WeightTable& W) {
    const RingPtr& ring = W.ring();
    const FiniteRing& R = *ring;
    VerifyCheck c{"weight outside socle", true, false, 0, ""};
    const std::vector<Elem> soc = socle(ring);
    for (std::size_t x = 0; x < R.order(); ++x) {
        if (std::binary_search(soc.begin(), soc.end(), static_cast<Elem>(x))) continue;
        ++c.cases;
        if (W.scaled(static_cast<Elem>(x)) != W.scale()) {
            c.passed = false;
            c.witness = "w(" + R.format(static_cast<Elem>(x)) + ") = " + W.weight(static_cast<Elem>(x)).to_string();
            break;
        }
    }
    return c;
}

std::optional<VerifyCheck> rank_formula(const WeightTable& W) {
    const FiniteRing& R = *W.ring();
    if (!semisimple_factors(R.spec())) return std::nullopt;
    SemisimpleView view(W.ring());
    VerifyCheck c{"rank formula", true, false, 0, ""};
    for (std::size_t x = 0; x < R.order(); ++x) {
        ++c.cases;
        const Rational expected = whom_semisimple(view.factors(), view.ranks(static_cast<Elem>(x)));
        if (expected != W.weight(static_cast<Elem>(x))) {
            c.passed = false;
            c.witness = "x = " + R.format(static_cast<Elem>(x)) + ": " + W.weight(static_cast<Elem>(x)).to_string() +
                        " != " + expected.to_string();
            break;
        }
    }
    return c;
}

}  // namespace

VerifyReport run_verify(const WeightTablePtr& table, const VerifyOptions& opt) {
    WeightTablePtr W = table;
    const FiniteRing& R = *W->ring();
    if (opt.fault) W = W->with_fault(R.one(), *opt.fault);
    const std::size_t samples = opt.samples == 0 ? 2000 : opt.samples;

    VerifyReport out;
    out.ring = R.name();
    out.order = R.order();
    out.checks.push_back(from_result("zero set", verify_zero_set(*W), R.order()));
    out.checks.push_back(from_result("coset sums", verify_coset_sum(*W), R.order()));
    out.checks.push_back(unit_invariance(*W));
    out.checks.push_back(sum_of_squares(*W));
    out.checks.push_back(ideal_correlation(*W, opt, samples));
    out.checks.push_back(vector_correlation(*W, 1, opt, samples));
    out.checks.push_back(vector_correlation(*W, 2, opt, samples));
    out.checks.push_back(orbit_point_consistency(R, 1));
    out.checks.push_back(orbit_point_consistency(R, 2));
    out.checks.push_back(row_column(*W, opt));
    out.checks.push_back(frobenius_duality(*W, opt));
    out.checks.push_back(outside_socle(*W));
    if (auto c = rank_formula(*W)) out.checks.push_back(*c);
    return out;
}

}  // namespace frobcode
