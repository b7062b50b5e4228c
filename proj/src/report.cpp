#include "frobcode/report.hpp"

#include "frobcode/errors.hpp"

namespace frobcode {

RingReport ring_report(const WeightTablePtr& W) {
    const RingPtr& ring = W->ring();
    const FiniteRing& R = *ring;
    RingReport out;
    out.name = R.name();
    out.order = R.order();
    out.units = R.units().size();
    out.exponent = R.additive_exponent();
    out.one = R.format(R.one());
    out.commutative = R.is_commutative();
    for (std::size_t x = 0; x < R.order(); ++x) {
        out.elements.push_back(R.format(static_cast<Elem>(x)));
        out.weights.push_back(W->weight(static_cast<Elem>(x)));
    }
    for (Elem s : order2_socle_part(R).even_sums) out.s0.push_back(R.format(s));
    out.socle_size = socle(ring).size();
    out.zero_set = verify_zero_set(*W);
    out.coset_sums = verify_coset_sum(*W);
    return out;
}

namespace {

Json check_json(const CheckResult& c) {
    Json j;
    j["passed"] = c.passed;
    if (!c.passed) j["witness"] = c.witness;
    return j;
}

template <typename T, typename F>
Json optional_json(const std::optional<T>& v, F&& f) {
    return v ? f(*v) : Json(nullptr);
}

Json matrix_json(const FiniteRing& R, const Matrix& G) {
    Json rows = Json::array();
    for (const auto& row : G) {
        Json r = Json::array();
        for (Elem e : row) r.push_back(R.format(e));
        rows.push_back(r);
    }
    return rows;
}

long long get_int(const Json& j, const char* key) {
    if (!j.is_object() || !j.contains(key) || !j[key].is_number_integer())
        throw ParseError(std::string("report: missing integer field '") + key + "'", 0);
    return j[key].get<long long>();
}

}  // namespace

Json to_json(const Rational& r) { return r.to_string(); }

Json to_json(const WeightHistogram& h) {
    Json j = Json::object();
    for (const auto& [w, count] : h) j[w.to_string()] = count;
    return j;
}

Json to_json(const SrgParams& p) {
    return Json{{"N", p.N}, {"K", p.K}, {"lambda", p.lambda}, {"mu", p.mu}, {"trivial", p.trivial}};
}

Json to_json(const TwoWeightProfile& p) {
    Json j;
    j["n"] = p.n;
    j["size"] = p.size;
    j["zero_count"] = p.zero_count;
    j["w1"] = to_json(p.w1);
    j["w2"] = to_json(p.w2);
    j["b0"] = p.b0;
    j["b1"] = p.b1;
    j["b2"] = p.b2;
    j["index"] = optional_json(p.index, [](const Rational& r) { return to_json(r); });
    return j;
}

Json to_json(const PdsCertificate& p) {
    return Json{{"N", p.N}, {"K", p.K}, {"lambda", p.lambda}, {"mu", p.mu}, {"regular", p.regular}};
}

Json to_json(const LemmaReport& r) {
    Json j;
    j["exhaustive"] = r.exhaustive;
    j["words_tested"] = r.words_tested;
    j["corr_code"] = r.corr_code;
    j["weight_relation"] = r.weight_relation;
    j["coset_class1"] = r.coset_class1;
    j["coset_class2"] = r.coset_class2;
    j["coordinate_corr"] = r.coordinate_corr;
    j["coordinate_coset"] = r.coordinate_coset;
    if (!r.witness.empty()) j["witness"] = r.witness;
    return j;
}

Json to_json(const EquivalenceReport& r) {
    Json j;
    j["two_weight"] = r.two_weight;
    j["pds"] = optional_json(r.pds, [](const PdsCertificate& p) { return to_json(p); });
    j["omega_submodule"] = r.omega_submodule;
    j["side_ii"] = r.side_ii;
    j["equivalent"] = r.equivalent;
    j["one_weight"] = r.one_weight;
    j["remark_one_weight"] = r.remark_one_weight;
    j["complement_submodule"] = r.complement_submodule;
    j["remark_trivial"] = r.remark_trivial;
    j["cayley_srg"] = optional_json(r.cayley_srg, [](const SrgParams& p) { return to_json(p); });
    j["cayley_consistent"] = r.cayley_consistent;
    j["column_space_size"] = r.column_space_size;
    j["omega_size"] = r.omega_size;
    return j;
}

Json to_json(const DualReport& r) {
    Json j;
    j["predicted_weights"] = {to_json(r.predicted.w1), to_json(r.predicted.w2)};
    j["profile"] = optional_json(r.dual_profile, [](const TwoWeightProfile& p) { return to_json(p); });
    j["histogram"] = to_json(r.histogram);
    j["index"] = optional_json(r.dual_index, [](const Rational& x) { return to_json(x); });
    j["measured_srg"] = optional_json(r.measured, [](const SrgParams& p) { return to_json(p); });
    j["predicted_srg"] = to_json(r.predicted_srg);
    Json c;
    c["support"] = r.support_ok;
    c["dual_zero_trivial"] = r.dual_zero_trivial;
    c["size"] = r.size_ok;
    c["frequencies"] = r.frequencies_ok;
    c["degree"] = r.degree_ok;
    c["index_one"] = r.index_one;
    c["srg_match"] = r.srg_match;
    c["trivial_match"] = r.trivial_match;
    c["op_weights_agree"] = r.op_weights_agree;
    c["sweep_sums"] = r.sweep_sums_ok;
    c["sweep_weights"] = r.sweep_weights_ok;
    c["kernel"] = r.kernel_ok;
    c["existence_witness"] = r.existence_witness;
    c["generated_by_w1"] = r.generated_by_w1;
    j["checks"] = c;
    j["sweep"] = {{"exhaustive", r.sweep_exhaustive}, {"size", r.sweep_size}};
    if (!r.witness_y.empty()) j["witness_y"] = r.witness_y;
    if (r.second_dual) {
        const SecondDual& s = *r.second_dual;
        j["second_dual"] = {{"n", s.n},
                            {"size", s.size},
                            {"w1", to_json(s.w1)},
                            {"w2", to_json(s.w2)},
                            {"matches_source", s.matches_source}};
    }
    if (!r.failure.empty()) j["failure"] = r.failure;
    j["passed"] = r.all();
    return j;
}

Json to_json(const CodeAnalysis& a) {
    Json j;
    j["size"] = a.size;
    j["zero_count"] = a.zero_count;
    j["histogram"] = to_json(a.histogram);
    j["index"] = optional_json(a.measured_index, [](const Rational& r) { return to_json(r); });
    j["one_weight"] = {{"is_one_weight", a.one_weight.is_one_weight},
                       {"criterion", a.one_weight.rhs_holds},
                       {"agree", a.one_weight.agree}};
    j["profile"] = optional_json(a.profile, [](const TwoWeightProfile& p) { return to_json(p); });
    if (a.profile) {
        j["measured_srg"] = optional_json(a.measured, [](const SrgParams& p) { return to_json(p); });
        j["predicted_srg"] = optional_json(a.predicted, [](const SrgParams& p) { return to_json(p); });
        j["srg_match"] = a.srg_match;
        j["trivial_criterion"] = a.trivial_criterion;
        if (a.coclique) j["coclique_structure"] = *a.coclique;
    }
    if (a.lemmas) j["lemmas"] = to_json(*a.lemmas);
    if (a.dual) j["dual"] = to_json(*a.dual);
    if (a.equivalence) j["equivalence"] = to_json(*a.equivalence);
    j["passed"] = a.passed();
    return j;
}

Json to_json(const RingReport& r) {
    Json j;
    j["ring"] = r.name;
    j["order"] = r.order;
    j["units"] = r.units;
    j["exponent"] = r.exponent;
    j["one"] = r.one;
    j["commutative"] = r.commutative;
    Json table = Json::array();
    for (std::size_t i = 0; i < r.elements.size(); ++i)
        table.push_back({{"element", r.elements[i]}, {"weight", to_json(r.weights[i])}});
    j["weights"] = table;
    j["s0"] = r.s0;
    j["socle_size"] = r.socle_size;
    j["zero_set"] = check_json(r.zero_set);
    j["coset_sums"] = check_json(r.coset_sums);
    j["passed"] = r.passed();
    return j;
}

Json to_json(const VerifyReport& r) {
    Json j;
    j["ring"] = r.ring;
    j["order"] = r.order;
    Json checks = Json::array();
    for (const auto& c : r.checks) {
        Json e{{"name", c.name}, {"passed", c.passed}, {"sampled", c.sampled}, {"cases", c.cases}};
        if (!c.passed) e["witness"] = c.witness;
        checks.push_back(e);
    }
    j["checks"] = checks;
    j["sampled"] = r.sampled();
    j["passed"] = r.passed();
    return j;
}

Json to_json(const SearchResult& r, const FiniteRing& R) {
    Json j;
    j["ring"] = r.ring_name;
    j["k"] = r.spec.k;
    j["n_max"] = r.spec.n_max;
    j["index1"] = r.spec.index1;
    j["seed"] = r.spec.seed;
    Json points = Json::array();
    for (const auto& p : r.points) points.push_back({{"id", format_word(R, p.id)}, {"orbit_size", p.orbit_size}});
    j["points"] = points;
    j["candidates"] = r.results.size();
    j["hits"] = r.hits();
    j["nontrivial_hits"] = r.nontrivial_hits();
    Json results = Json::array();
    for (const auto& c : r.results) {
        Json e;
        e["n"] = c.candidate.n;
        e["index"] = to_json(c.candidate.index);
        Json alpha = Json::array();
        for (std::size_t i = 0; i < c.candidate.points.size(); ++i)
            alpha.push_back({format_word(R, r.points[c.candidate.points[i]].id), c.candidate.multiplicity[i]});
        e["alpha"] = alpha;
        e["generator"] = matrix_json(R, c.generator);
        if (c.error.empty())
            e["analysis"] = to_json(c.analysis);
        else
            e["error"] = c.error;
        e["passed"] = c.passed();
        results.push_back(e);
    }
    j["results"] = results;
    j["passed"] = r.all_passed();
    return j;
}

Json code_json(const LinearCode& code) {
    return Json{{"ring", code.R().name()},
                {"k", code.k()},
                {"n", code.n()},
                {"generator", matrix_json(code.R(), code.generator())}};
}

Rational rational_from_json(const Json& j) {
    if (!j.is_string()) throw ParseError("report: rational must be a string", 0);
    try {
        return Rational::parse(j.get<std::string>());
    } catch (const std::exception&) {
        throw ParseError("report: bad rational '" + j.get<std::string>() + "'", 0);
    }
}

WeightHistogram histogram_from_json(const Json& j) {
    if (!j.is_object()) throw ParseError("report: histogram must be an object", 0);
    WeightHistogram h;
    for (const auto& [key, value] : j.items()) {
        if (!value.is_number_unsigned()) throw ParseError("report: histogram count must be a count", 0);
        h[rational_from_json(Json(key))] = value.get<std::size_t>();
    }
    return h;
}

SrgParams srg_from_json(const Json& j) {
    SrgParams p;
    p.N = get_int(j, "N");
    p.K = get_int(j, "K");
    p.lambda = get_int(j, "lambda");
    p.mu = get_int(j, "mu");
    if (!j.contains("trivial") || !j["trivial"].is_boolean()) throw ParseError("report: missing 'trivial'", 0);
    p.trivial = j["trivial"].get<bool>();
    return p;
}

TwoWeightProfile profile_from_json(const Json& j) {
    TwoWeightProfile p;
    p.n = static_cast<std::size_t>(get_int(j, "n"));
    p.size = static_cast<std::size_t>(get_int(j, "size"));
    p.zero_count = static_cast<std::size_t>(get_int(j, "zero_count"));
    if (!j.contains("w1") || !j.contains("w2") || !j.contains("index"))
        throw ParseError("report: profile is missing a weight or the index", 0);
    p.w1 = rational_from_json(j["w1"]);
    p.w2 = rational_from_json(j["w2"]);
    p.b0 = static_cast<std::size_t>(get_int(j, "b0"));
    p.b1 = static_cast<std::size_t>(get_int(j, "b1"));
    p.b2 = static_cast<std::size_t>(get_int(j, "b2"));
    if (!j["index"].is_null()) p.index = rational_from_json(j["index"]);
    return p;
}

void write_dot(std::ostream& os, const CosetGraph& g, const FiniteRing& R, const std::string& name) {
    os << "graph " << name << " {\n";
    for (std::size_t v = 0; v < g.graph.size(); ++v)
        os << "  " << v << " [label=\"" << format_word(R, g.representatives[v]) << "\"];\n";
    for (const auto& [a, b] : g.graph.edges()) os << "  " << a << " -- " << b << ";\n";
    os << "}\n";
}

}  // namespace frobcode
