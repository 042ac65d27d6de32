#pragma once

#include <string>

#include "json.hpp"

#include "analysis.hpp"
#include "charsums.hpp"
#include "codes.hpp"

// JSON forms. Counts are decimal strings so big integers survive any JSON reader.
namespace ocyc {

using nlohmann::json;

inline json to_json(const WeightDistribution& w) {
    json weights = json::object();
    for (int j = 0; j <= w.n; ++j)
        if (w.counts[j] != 0) weights[std::to_string(j)] = w.counts[j].str();
    return {{"n", w.n}, {"k", w.k}, {"q", w.q}, {"weights", weights}};
}

inline WeightDistribution weight_distribution_from_json(const json& j) {
    WeightDistribution w(j.at("q").get<std::int64_t>(), j.at("n").get<int>(), j.at("k").get<int>());
    for (const auto& [key, value] : j.at("weights").items()) {
        const int weight = std::stoi(key);
        if (weight < 0 || weight > w.n) throw ConfigError("weight " + key + " out of range");
        w.counts[weight] = BigInt(value.get<std::string>());
    }
    return w;
}

inline json to_json(const CompleteWeightDistribution& c) {
    json entries = json::array();
    for (const auto& [t, v] : c.counts) entries.push_back({{"composition", t}, {"count", v.str()}});
    return {{"n", c.n}, {"k", c.k}, {"q", c.q}, {"symbols", c.symbols}, {"enumerator", entries}};
}

inline CompleteWeightDistribution complete_weight_distribution_from_json(const json& j) {
    CompleteWeightDistribution c;
    c.q = j.at("q").get<std::int64_t>();
    c.n = j.at("n").get<int>();
    c.k = j.at("k").get<int>();
    c.symbols = j.at("symbols").get<std::vector<std::int64_t>>();
    for (const auto& e : j.at("enumerator")) {
        auto t = e.at("composition").get<Composition>();
        if (static_cast<std::int64_t>(t.size()) != c.q) throw ConfigError("composition length differs from q");
        c.counts[std::move(t)] = BigInt(e.at("count").get<std::string>());
    }
    return c;
}

inline json to_json(const ValueDistribution& d) {
    json out = json::object();
    for (const auto& [v, n] : d) out[std::to_string(v)] = n;
    return out;
}

inline ValueDistribution value_distribution_from_json(const json& j) {
    ValueDistribution d;
    for (const auto& [key, value] : j.items()) d[std::stoll(key)] = value.get<std::int64_t>();
    return d;
}

inline json to_json(const VerificationReport& r) {
    json checks = json::array();
    for (const auto& c : r.checks)
        checks.push_back({{"name", c.name}, {"passed", c.passed}, {"expected", c.expected}, {"computed", c.computed}});
    json out = {{"claim", r.claim},   {"q", r.q},           {"params", r.params},
                {"status", to_string(r.status)}, {"checks", checks}, {"elapsed_ms", r.elapsed_ms}};
    if (!r.reason.empty()) out["reason"] = r.reason;
    if (!r.notes.empty()) out["notes"] = r.notes;
    return out;
}

inline json to_json(const FamilyCount& c) {
    return {{"q", c.q},
            {"family", c.family},
            {"admissible_tuples", c.admissible_tuples},
            {"distinct_codes", c.distinct_codes},
            {"formula", c.formula},
            {"representatives", c.representatives},
            {"signatures", c.signatures}};
}

inline json to_json(const CensusResult& c) {
    json classes = json::array();
    for (const auto& k : c.classes)
        classes.push_back({{"cwe", to_json(k.cwe)}, {"polynomial", k.cwe.to_string()}, {"codes", k.codes}});
    return {{"q", c.q},
            {"search_space", c.search_space},
            {"examined", c.examined},
            {"qualifying", c.qualifying},
            {"distinct_cwes", c.classes.size()},
            {"conjectured_distinct_cwes", c.conjectured},
            {"classes", classes}};
}

}  // namespace ocyc
