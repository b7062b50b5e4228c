#pragma once

#include "frobcode/search.hpp"
#include "frobcode/verify.hpp"

#include <json.hpp>

#include <ostream>
#include <string>
#include <vector>

namespace frobcode {

using Json = nlohmann::ordered_json;

/// What `ring` prints: basic invariants, the weight table and S0.
struct RingReport {
    std::string name;
    std::size_t order = 0;
    std::size_t units = 0;
    std::uint32_t exponent = 1;
    std::string one;
    bool commutative = false;
    std::vector<std::string> elements;
    std::vector<Rational> weights;
    std::vector<std::string> s0;
    std::size_t socle_size = 0;
    CheckResult zero_set;
    CheckResult coset_sums;

    bool passed() const { return zero_set.passed && coset_sums.passed; }
};

RingReport ring_report(const WeightTablePtr& W);

// Rationals are written as "p/q" strings, integers as "p".
Json to_json(const Rational& r);
Json to_json(const WeightHistogram& h);
Json to_json(const SrgParams& p);
Json to_json(const TwoWeightProfile& p);
Json to_json(const PdsCertificate& p);
Json to_json(const LemmaReport& r);
Json to_json(const EquivalenceReport& r);
Json to_json(const DualReport& r);
Json to_json(const CodeAnalysis& a);
Json to_json(const RingReport& r);
Json to_json(const VerifyReport& r);
Json to_json(const SearchResult& r, const FiniteRing& R);
Json code_json(const LinearCode& code);

// Inverses for the leaf types; throw ParseError on malformed input.
Rational rational_from_json(const Json& j);
WeightHistogram histogram_from_json(const Json& j);
SrgParams srg_from_json(const Json& j);
TwoWeightProfile profile_from_json(const Json& j);

/// Undirected DOT graph; vertex labels are the coset representatives.
void write_dot(std::ostream& os, const CosetGraph& g, const FiniteRing& R, const std::string& name = "gamma");

}  // namespace frobcode
