#include "frobcode/errors.hpp"
#include "frobcode/report.hpp"

#include <CLI11.hpp>

#include <chrono>
#include <fstream>
#include <iostream>
#include <sstream>

using namespace frobcode;

namespace {

enum Exit { kOk = 0, kFailed = 1, kUsage = 2 };

struct Globals {
    std::string json_path;
    std::streambuf* stdout_buf = nullptr;
    std::uint64_t cap = 0;
    bool timing = false;
    long long char_scale = 1;
};

std::uint64_t enumeration_cap(const Globals& g) { return g.cap == 0 ? default_enumeration_cap() : g.cap; }

BuildOptions build_options(const Globals& g) {
    BuildOptions opt;
    if (g.cap != 0) opt.order_cap = static_cast<std::size_t>(g.cap);
    return opt;
}

// Test hook: multiply every character exponent by `scale`.
RingPtr rescale_character(const RingPtr& ring, long long scale) {
    if (scale == 1) return ring;
    GeneratingCharacter c = ring->character();
    const long long e = c.modulus;
    for (auto& x : c.exponent) x = static_cast<std::uint32_t>(((static_cast<long long>(x) * scale) % e + e) % e);
    return with_character(*ring, std::move(c));
}

RingPtr load_ring(const std::string& spec, const Globals& g) {
    return rescale_character(build_ring(spec, build_options(g)), g.char_scale);
}

LinearCode load_code(const std::string& path, const Globals& g) {
    CodeFile file = read_code_file(path, build_options(g));
    RingPtr ring = rescale_character(file.ring, g.char_scale);
    return build_code(WeightTable::build(ring), file.generator, enumeration_cap(g));
}

void emit_json(const Json& j, const Globals& g) {
    if (g.json_path.empty()) return;
    const std::string text = j.dump(2) + "\n";
    if (g.json_path == "-") {
        std::ostream(g.stdout_buf) << text;
        return;
    }
    std::ofstream out(g.json_path);
    if (!out) throw PreconditionError("cannot write " + g.json_path);
    out << text;
}

std::string pass(bool ok) { return ok ? "pass" : "FAIL"; }

std::string histogram_text(const WeightHistogram& h) {
    std::string out;
    for (const auto& [w, count] : h) out += (out.empty() ? "" : " ") + w.to_string() + ":" + std::to_string(count);
    return out;
}

std::string optional_srg(const std::optional<SrgParams>& p) { return p ? p->to_string() : "not strongly regular"; }

void print_profile(std::ostream& os, const TwoWeightProfile& p) {
    os << "two-weight: w1=" << p.w1 << " w2=" << p.w2 << " b=(" << p.b0 << "," << p.b1 << "," << p.b2 << ")\n";
}

int cmd_ring(const std::string& spec, const Globals& g) {
    const RingReport r = ring_report(WeightTable::build(load_ring(spec, g)));
    std::cout << "ring " << r.name << "\n";
    std::cout << "order " << r.order << ", units " << r.units << ", exponent " << r.exponent << ", one " << r.one
              << (r.commutative ? ", commutative" : ", noncommutative") << "\n";
    std::cout << "weights:";
    for (std::size_t i = 0; i < r.elements.size(); ++i) std::cout << " " << r.elements[i] << ":" << r.weights[i];
    std::cout << "\nS0 (" << r.s0.size() << "):";
    for (const auto& s : r.s0) std::cout << " " << s;
    std::cout << "\nsocle size " << r.socle_size << "\n";
    std::cout << "zero set: " << pass(r.zero_set.passed) << (r.zero_set.passed ? "" : " " + r.zero_set.witness) << "\n";
    std::cout << "coset sums: " << pass(r.coset_sums.passed)
              << (r.coset_sums.passed ? "" : " " + r.coset_sums.witness) << "\n";
    emit_json(to_json(r), g);
    return r.passed() ? kOk : kFailed;
}

int cmd_weights(const std::string& spec, const std::vector<std::string>& elements, const Globals& g) {
    const WeightTablePtr W = WeightTable::build(load_ring(spec, g));
    const FiniteRing& R = *W->ring();
    std::vector<Elem> xs;
    if (elements.empty())
        xs = R.all_elements();
    else
        for (const auto& e : elements) xs.push_back(R.parse_element(e));
    Json table = Json::array();
    for (Elem x : xs) {
        std::cout << R.format(x) << " " << W->weight(x) << "\n";
        table.push_back({{"element", R.format(x)}, {"weight", to_json(W->weight(x))}});
    }
    emit_json(Json{{"ring", R.name()}, {"weights", table}}, g);
    return kOk;
}

int cmd_verify(const std::string& spec, const VerifyOptions& opt, const Globals& g) {
    const VerifyReport r = run_verify(WeightTable::build(load_ring(spec, g)), opt);
    std::cout << "verify " << r.ring << " (order " << r.order << ")\n";
    for (const auto& c : r.checks) {
        std::cout << "  " << pass(c.passed) << " " << c.name << " [" << c.cases << (c.sampled ? " sampled" : "")
                  << "]";
        if (!c.passed) std::cout << " witness: " << c.witness;
        std::cout << "\n";
    }
    if (r.sampled()) std::cout << "note: budget exceeded, some checks were sampled\n";
    std::cout << (r.passed() ? "all identities hold" : "verification failed") << "\n";
    emit_json(to_json(r), g);
    return r.passed() ? kOk : kFailed;
}

void print_analysis(const LinearCode& code, const CodeAnalysis& a) {
    std::cout << "code over " << code.R().name() << ": k=" << code.k() << " n=" << code.n() << " |C|=" << a.size
              << " |C0|=" << a.zero_count << "\n";
    std::cout << "weights: " << histogram_text(a.histogram) << "\n";
    std::cout << "index: " << (a.measured_index ? a.measured_index->to_string() : "not modular") << "\n";
    std::cout << "one-weight: " << (a.one_weight.is_one_weight ? "yes" : "no") << ", criterion "
              << pass(a.one_weight.agree) << "\n";
    if (a.profile) {
        print_profile(std::cout, *a.profile);
        std::cout << "Gamma(C): measured " << optional_srg(a.measured);
        if (a.predicted) std::cout << ", predicted " << a.predicted->to_string() << " " << pass(a.srg_match);
        std::cout << (a.measured && a.measured->trivial ? ", trivial" : "") << "\n";
        if (a.predicted) std::cout << "triviality criterion: " << pass(a.trivial_criterion) << "\n";
        if (a.coclique) std::cout << "cocliques are cosets: " << pass(*a.coclique) << "\n";
    }
    if (a.lemmas)
        std::cout << "lemmas: " << pass(a.lemmas->all()) << " (" << a.lemmas->words_tested << " words"
                  << (a.lemmas->exhaustive ? ", exhaustive" : ", sampled") << ")"
                  << (a.lemmas->all() ? "" : " " + a.lemmas->witness) << "\n";
    if (a.equivalence) {
        const EquivalenceReport& e = *a.equivalence;
        std::cout << "PDS in column space: " << (e.pds ? "yes" : "no") << ", Omega+0 submodule "
                  << (e.omega_submodule ? "yes" : "no") << ", equivalence " << pass(e.equivalent)
                  << ", remarks " << pass(e.remark_one_weight && e.remark_trivial) << "\n";
    }
}

int cmd_analyze(const std::string& path, std::uint64_t seed, const Globals& g) {
    const LinearCode code = load_code(path, g);
    const CodeAnalysis a = analyze_code(code, seed, false);
    print_analysis(code, a);
    emit_json(Json{{"code", code_json(code)}, {"analysis", to_json(a)}}, g);
    return a.passed() ? kOk : kFailed;
}

int cmd_graph(const std::string& path, const std::string& dot_path, const Globals& g) {
    const LinearCode code = load_code(path, g);
    const auto profile = two_weight_profile(code);
    if (!profile) throw PreconditionError("graph: the code does not have exactly two nonzero weights");
    const CosetGraph gamma = build_gamma(code, *profile);
    const auto measured = measure_srg(gamma.graph);
    std::optional<SrgParams> predicted;
    if (profile->modular()) predicted = predicted_srg(*profile);
    std::cout << "Gamma(C): " << gamma.graph.size() << " vertices, " << gamma.graph.edge_count() << " edges\n";
    std::cout << "SRG: " << optional_srg(measured);
    if (predicted) std::cout << ", predicted " << predicted->to_string();
    std::cout << "\n";
    if (!dot_path.empty()) {
        std::ofstream out(dot_path);
        if (!out) throw PreconditionError("cannot write " + dot_path);
        write_dot(out, gamma, code.R());
    }
    Json j{{"code", code_json(code)},
           {"vertices", gamma.graph.size()},
           {"edges", gamma.graph.edge_count()},
           {"measured_srg", measured ? to_json(*measured) : Json(nullptr)},
           {"predicted_srg", predicted ? to_json(*predicted) : Json(nullptr)}};
    emit_json(j, g);
    const bool ok = !predicted || (measured && *measured == *predicted);
    return ok ? kOk : kFailed;
}

int cmd_dual(const std::string& path, std::uint64_t seed, const Globals& g) {
    const LinearCode code = load_code(path, g);
    const DualReport r = dual_pipeline(code, seed);
    std::cout << "source: ";
    print_profile(std::cout, r.profile);
    std::cout << "dual weights: predicted (" << r.predicted.w1 << ", " << r.predicted.w2 << "), histogram "
              << histogram_text(r.histogram) << "\n";
    std::cout << "dual index: " << (r.dual_index ? r.dual_index->to_string() : "not modular") << "\n";
    std::cout << "Gamma(C'): measured " << optional_srg(r.measured) << ", predicted " << r.predicted_srg.to_string()
              << (r.predicted_srg.trivial ? ", trivial" : "") << "\n";
    if (r.second_dual)
        std::cout << "second dual: n=" << r.second_dual->n << " weights (" << r.second_dual->w1 << ", "
                  << r.second_dual->w2 << ")" << (r.second_dual->matches_source ? ", matches C" : "") << "\n";
    std::cout << "dual checks: " << pass(r.all()) << (r.failure.empty() ? "" : " " + r.failure) << "\n";
    emit_json(Json{{"code", code_json(code)}, {"dual", to_json(r)}}, g);
    return r.all() ? kOk : kFailed;
}

void apply_param(SearchSpec& spec, const std::string& text) {
    const auto eq = text.find('=');
    if (eq == std::string::npos) throw ParseError("search: expected key=value, got '" + text + "'", 0);
    const std::string key = text.substr(0, eq), value = text.substr(eq + 1);
    std::size_t used = 0;
    unsigned long long v = 0;
    try {
        v = std::stoull(value, &used);
    } catch (const std::exception&) {
        used = 0;
    }
    if (used == 0 || used != value.size()) throw ParseError("search: '" + key + "' needs an integer", eq + 1);
    if (key == "k")
        spec.k = v;
    else if (key == "n_max" || key == "n")
        spec.n_max = v;
    else if (key == "mult_cap")
        spec.mult_cap = v;
    else
        throw ParseError("search: unknown parameter '" + key + "'", 0);
}

int cmd_search(SearchSpec spec, const std::vector<std::string>& params, const Globals& g) {
    for (const auto& p : params) apply_param(spec, p);
    spec.cap = g.cap;
    if (g.char_scale != 1) load_ring(spec.ring, g);  // surfaces a bad character before the search
    const SearchResult r = run_search(spec);
    const RingPtr ring = build_ring(spec.ring);
    std::cout << "search " << r.ring_name << " k=" << spec.k << " n_max=" << spec.n_max
              << (spec.index1 ? " index 1" : "") << ": " << r.point_count << " points, " << r.results.size()
              << " candidates, " << r.hits() << " two-weight hits (" << r.nontrivial_hits() << " nontrivial)\n";
    for (const auto& c : r.results) {
        if (!c.two_weight() && c.passed()) continue;
        std::cout << "  n=" << c.candidate.n << " r=" << c.candidate.index << " [";
        for (std::size_t i = 0; i < c.candidate.points.size(); ++i)
            std::cout << (i ? " " : "") << format_word(*ring, r.points[c.candidate.points[i]].id) << "x"
                      << c.candidate.multiplicity[i];
        std::cout << "]";
        if (!c.error.empty()) {
            std::cout << " error: " << c.error << "\n";
            continue;
        }
        const CodeAnalysis& a = c.analysis;
        if (a.profile)
            std::cout << " w=(" << a.profile->w1 << "," << a.profile->w2 << ") SRG " << optional_srg(a.measured)
                      << (a.measured && a.measured->trivial ? " trivial" : "");
        std::cout << " " << pass(c.passed()) << "\n";
    }
    std::cout << (r.all_passed() ? "every candidate passed" : "some candidates failed") << "\n";
    emit_json(to_json(r, *ring), g);
    return r.all_passed() ? kOk : kFailed;
}

std::string error_class(const std::exception& e) {
    if (dynamic_cast<const frobcode::ParseError*>(&e)) return "ParseError";
    if (dynamic_cast<const SpecError*>(&e)) return "SpecError";
    if (dynamic_cast<const CapError*>(&e)) return "CapError";
    if (dynamic_cast<const CharacterError*>(&e)) return "CharacterError";
    if (dynamic_cast<const CodeError*>(&e)) return "CodeError";
    if (dynamic_cast<const PreconditionError*>(&e)) return "PreconditionError";
    if (dynamic_cast<const InconsistencyError*>(&e)) return "InconsistencyError";
    return "error";
}

int exit_code_for(const std::exception& e) {
    if (dynamic_cast<const CharacterError*>(&e) || dynamic_cast<const InconsistencyError*>(&e)) return kFailed;
    if (dynamic_cast<const Error*>(&e)) return kUsage;
    return kFailed;
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"Homogeneous weights, two-weight codes and strongly regular graphs over finite Frobenius rings"};
    app.require_subcommand(1);
    app.fallthrough();
    Globals g;
    app.add_option("--json", g.json_path, "Write a JSON report to PATH ('-' for stdout)");
    app.add_option("--cap", g.cap, "Enumeration cap (default 2^20 or FROBCODE_CAP)");
    app.add_flag("--timing", g.timing, "Print the elapsed time");
    app.add_option("--inject-char-scale", g.char_scale)->group("");

    std::string spec, path, dot;
    std::uint64_t seed = 0;
    std::vector<std::string> extra;

    auto* ring = app.add_subcommand("ring", "Ring invariants, weight table and S0");
    ring->add_option("spec", spec, "Ring spec, e.g. Z4, GF(2^2), M2(GF(2)), prod(Z2,Z3)")->required();

    auto* weights = app.add_subcommand("weights", "Homogeneous weights of all or selected elements");
    weights->add_option("spec", spec)->required();
    weights->add_option("elements", extra, "Elements in canonical notation");

    VerifyOptions vopt;
    long long fault = 0;
    auto* verify = app.add_subcommand("verify", "Run the weight identity suite");
    verify->add_option("spec", spec)->required();
    auto* full = verify->add_flag("--full", vopt.full, "Exhaustive up to the larger budget");
    verify->add_option("--sample", vopt.samples, "Sample size for checks over budget")->excludes(full);
    verify->add_option("--seed", vopt.seed, "Seed for sampled checks");
    verify->add_option("--inject-fault", fault)->group("");

    auto* analyze = app.add_subcommand("analyze", "Weights, index, profile, graph and lemma checks of a code file");
    analyze->add_option("file", path)->required()->check(CLI::ExistingFile);
    analyze->add_option("--seed", seed);

    auto* graph = app.add_subcommand("graph", "Gamma(C) of a two-weight code file");
    graph->add_option("file", path)->required()->check(CLI::ExistingFile);
    graph->add_option("--dot", dot, "Write the graph in DOT format");

    auto* dual = app.add_subcommand("dual", "Dual two-weight code of a code file");
    dual->add_option("file", path)->required()->check(CLI::ExistingFile);
    dual->add_option("--seed", seed);

    SearchSpec sspec;
    auto* search = app.add_subcommand("search", "Search modular codes for two-weight hits");
    search->add_option("spec", sspec.ring)->required();
    search->add_option("params", extra, "k=<int> n_max=<int> mult_cap=<int>");
    search->add_flag("--index1", sspec.index1, "Only index-1 candidates");
    search->add_option("--seed", sspec.seed);
    search->add_option("--threads", sspec.threads, "Worker threads (0: all cores)");
    search->add_option("--mult-cap", sspec.mult_cap, "Largest multiplicity of a point");

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        const int code = app.exit(e);
        return code == 0 ? kOk : kUsage;
    }

    // With --json -, stdout carries only the JSON report.
    g.stdout_buf = std::cout.rdbuf();
    std::ostringstream discard;
    if (g.json_path == "-") std::cout.rdbuf(discard.rdbuf());

    const auto start = std::chrono::steady_clock::now();
    int code = kOk;
    try {
        if (*ring) code = cmd_ring(spec, g);
        if (*weights) code = cmd_weights(spec, extra, g);
        if (*verify) {
            if (verify->count("--inject-fault") != 0) vopt.fault = fault;
            code = cmd_verify(spec, vopt, g);
        }
        if (*analyze) code = cmd_analyze(path, seed, g);
        if (*graph) code = cmd_graph(path, dot, g);
        if (*dual) code = cmd_dual(path, seed, g);
        if (*search) code = cmd_search(sspec, extra, g);
    } catch (const std::exception& e) {
        std::cerr << "error: " << error_class(e) << ": " << e.what() << "\n";
        code = exit_code_for(e);
    }
    std::cout.rdbuf(g.stdout_buf);
    if (g.timing && code != kUsage)
        std::cerr << "time: " << std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count()
                  << " s\n";
    return code;
}
