#pragma once

#include <cstdint>
#include <cstdio>
#include <string>

#include <json.hpp>

#include "domlab/catalog.hpp"
#include "domlab/invariants.hpp"
#include "domlab/simulate.hpp"
#include "domlab/version.hpp"

namespace domlab {

using json = nlohmann::json;

inline std::string hash_hex(std::uint64_t h) {
    char buf[17];
    std::snprintf(buf, sizeof buf, "%016llx", static_cast<unsigned long long>(h));
    return buf;
}

inline json vertex_set_to_json(const VertexSet& s) {
    json arr = json::array();
    for (int v = s.first(); v >= 0; v = s.next(v)) arr.push_back(v);
    return arr;
}

inline json certificate_to_json(const InvariantReport& r) {
    json cert;
    switch (r.kind) {
        case CertificateKind::Witness:
            cert["type"] = "witness";
            cert["set"] = vertex_set_to_json(r.witness);
            break;
        case CertificateKind::Family:
            cert["type"] = "family";
            cert["k"] = r.family.k;
            cert["components"] = r.family.components;
            cert["representative"] = vertex_set_to_json(r.family.representative);
            cert["family_size"] = r.family.family_size;
            break;
        case CertificateKind::FixedPoint:
            cert["type"] = "fixed_point";
            cert["size"] = r.fixed_point_size;
            break;
        case CertificateKind::Formula:
            cert["type"] = "formula";
            cert["formula"] = r.formula;
            break;
    }
    return cert;
}

/// FNV-1a over the serialized certificate; stored in result records so a
/// cache hit can be checked against the original certificate cheaply.
inline std::string certificate_digest(const InvariantReport& r) {
    std::string dump = certificate_to_json(r).dump();
    std::uint64_t h = 0xcbf29ce484222325ull;
    for (unsigned char ch : dump) {
        h ^= ch;
        h *= 0x100000001b3ull;
    }
    return hash_hex(h);
}

/// The published result-record schema (schema_version 1): spec, hash,
/// invariant, optional k, value/outcome, certificate + digest, engine
/// version and wall time.
inline json result_record(const InvariantReport& r) {
    json rec;
    rec["schema_version"] = kSchemaVersion;
    rec["spec"] = r.spec;
    rec["hash"] = hash_hex(r.graph_hash);
    rec["invariant"] = r.invariant;
    rec["k"] = nullptr;
    rec["outcome"] = r.known ? "ok" : "unknown";
    if (r.known)
        rec["value"] = r.value;
    else
        rec["value"] = nullptr;
    rec["certificate"] = certificate_to_json(r);
    rec["certificate_digest"] = certificate_digest(r);
    if (!r.infeasible_below.empty()) rec["infeasible_below"] = r.infeasible_below;
    if (!r.note.empty()) rec["note"] = r.note;
    rec["engine_version"] = kEngineVersion;
    rec["wall_seconds"] = r.wall_seconds;
    return rec;
}

inline json move_to_json(const Move& m) { return json{{"from", m.from}, {"to", m.to}}; }

/// Trajectory export: one JSON object per line with round (1-based),
/// configuration (sorted vertex list), attack, move or null, verdict.
inline std::string trajectory_to_jsonl(const std::vector<TrajectoryStep>& steps,
                                       bool survived_suffix = false) {
    std::string out;
    for (std::size_t i = 0; i < steps.size(); ++i) {
        json line;
        line["round"] = i + 1;
        line["configuration"] = vertex_set_to_json(steps[i].configuration);
        line["attack"] = steps[i].attack;
        if (steps[i].move)
            line["move"] = move_to_json(*steps[i].move);
        else
            line["move"] = nullptr;
        bool last = i + 1 == steps.size();
        line["verdict"] = !steps[i].move ? "FAILED" : (last && survived_suffix ? "survived" : "ok");
        out += line.dump();
        out += '\n';
    }
    return out;
}

inline json sim_outcome_to_json(const SimOutcome& o) {
    json j;
    j["verdict"] = o.verdict == Verdict::Failed ? "FAILED" : "survived";
    j["rounds"] = o.rounds;
    if (o.verdict == Verdict::Failed) j["failing_attack"] = o.failing_attack;
    j["final_configuration"] = vertex_set_to_json(o.final_configuration);
    json steps = json::array();
    for (std::size_t i = 0; i < o.steps.size(); ++i) {
        const auto& s = o.steps[i];
        json line;
        line["round"] = i + 1;
        line["configuration"] = vertex_set_to_json(s.configuration);
        line["attack"] = s.attack;
        line["move"] = s.move ? move_to_json(*s.move) : json(nullptr);
        steps.push_back(line);
    }
    j["steps"] = steps;
    return j;
}

inline json monte_carlo_to_json(const MonteCarloStats& s) {
    json j;
    j["trials"] = s.trials;
    j["failures"] = s.failures;
    j["mean_failure_round"] = s.mean_failure_round;
    if (s.example_failure) j["example_failure"] = sim_outcome_to_json(*s.example_failure);
    return j;
}

inline json profile_to_json(const FeasibilityProfile& p) {
    json rows = json::array();
    for (const auto& r : p.rows) {
        json row;
        row["k"] = r.k;
        row["outcome"] = r.known ? "ok" : "unknown";
        row["feasible"] = r.feasible;
        row["components"] = r.component_count;
        row["all_secure_components"] = r.all_secure_components;
        row["nodes"] = r.node_count;
        rows.push_back(row);
    }
    return json{{"spec", p.spec}, {"gamma", p.gamma}, {"rows", rows}};
}

inline json verify_report_to_json(const VerifyReport& rep) {
    json rows = json::array();
    for (const auto& e : rep.entries) {
        json row;
        row["spec"] = e.spec;
        row["source"] = e.source;
        row["expected"] = {e.expected_gamma, e.expected_eternal, e.expected_autonomous};
        row["outcome"] = e.known ? (e.pass ? "pass" : "fail") : "unknown";
        if (e.known) row["computed"] = {e.gamma, e.eternal, e.autonomous};
        row["seconds"] = e.seconds;
        rows.push_back(row);
    }
    return json{{"passed", rep.passed},
                {"failed", rep.failed},
                {"unknown", rep.unknown},
                {"entries", rows}};
}

inline json realize_rows_to_json(const std::vector<RealizeVerifyEntry>& rows) {
    json arr = json::array();
    for (const auto& r : rows) {
        json row;
        row["triple"] = {r.a, r.b, r.c};
        row["spec"] = r.spec;
        row["case"] = r.case_label;
        row["outcome"] = r.known ? (r.pass ? "pass" : "fail") : "unknown";
        if (r.known) row["computed"] = {r.gamma, r.eternal, r.autonomous};
        arr.push_back(row);
    }
    return arr;
}

inline json bounds_to_json(const BoundsReport& b) {
    return json{{"gamma", b.gamma},         {"eternal", b.eternal},
                {"autonomous", b.autonomous}, {"n_minus_delta", b.n_minus_delta},
                {"alpha", b.alpha},           {"chain_holds", b.chain_holds}};
}

}  // namespace domlab
