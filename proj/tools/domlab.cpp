// domlab: exact computation of graph-protection invariants.
//
// Subcommands: compute, profile, refute, realize, simulate, verify-paper,
// export-dot. Exit codes: 0 success / all pass, 1 verification mismatch,
// 2 usage error, 3 resource cap exceeded.

#include <cstdio>
#include <fstream>
#include <iostream>
#include <sstream>
#include <string>
#include <vector>

#include <CLI11.hpp>

#include "domlab/cache.hpp"
#include "domlab/catalog.hpp"
#include "domlab/graph_spec.hpp"
#include "domlab/invariants.hpp"
#include "domlab/io.hpp"
#include "domlab/report_json.hpp"
#include "domlab/simulate.hpp"
#include "domlab/version.hpp"

namespace {

using namespace domlab;

constexpr int kExitOk = 0;
constexpr int kExitMismatch = 1;
constexpr int kExitUsage = 2;
constexpr int kExitCap = 3;

// "b1,a3,a4" or "4,2,3": labels and raw ids may be mixed.
VertexSet parse_vertex_set(const Graph& g, const std::string& text) {
    VertexSet s(g.order());
    std::string token;
    std::istringstream in(text);
    while (std::getline(in, token, ',')) {
        while (!token.empty() && std::isspace(static_cast<unsigned char>(token.front())))
            token.erase(token.begin());
        while (!token.empty() && std::isspace(static_cast<unsigned char>(token.back())))
            token.pop_back();
        if (token.empty()) continue;
        bool numeric = token.find_first_not_of("0123456789") == std::string::npos;
        if (numeric) {
            std::size_t v = std::stoull(token);
            if (v >= g.order()) throw std::invalid_argument("vertex id out of range: " + token);
            s.set(v);
        } else if (auto v = g.vertex_named(token)) {
            s.set(static_cast<std::size_t>(*v));
        } else {
            throw std::invalid_argument("unknown vertex label: " + token);
        }
    }
    if (s.empty()) throw std::invalid_argument("empty vertex set: '" + text + "'");
    return s;
}

std::vector<int> parse_attack_file(const Graph& g, const std::string& path) {
    std::ifstream in(path);
    if (!in) throw std::invalid_argument("cannot open attack script: " + path);
    std::vector<int> attacks;
    std::string token;
    while (in >> token) {
        bool numeric = token.find_first_not_of("0123456789") == std::string::npos;
        if (numeric) {
            std::size_t v = std::stoull(token);
            if (v >= g.order())
                throw std::invalid_argument("scripted attack out of range: " + token);
            attacks.push_back(static_cast<int>(v));
        } else if (auto v = g.vertex_named(token)) {
            attacks.push_back(*v);
        } else {
            throw std::invalid_argument("unknown vertex label in script: " + token);
        }
    }
    if (attacks.empty()) throw std::invalid_argument("attack script is empty: " + path);
    return attacks;
}

struct CommonOpts {
    bool json = false;
    bool no_cache = false;
    std::uint64_t cap = EngineLimits{}.node_cap;
    unsigned threads = 0;
};

EngineLimits limits_of(const CommonOpts& o) {
    EngineLimits l;
    l.node_cap = o.cap;
    l.threads = o.threads;
    return l;
}

void print_report_human(const Graph& g, const InvariantReport& r, bool cached) {
    if (!r.known) {
        std::cout << r.spec << "  " << r.invariant << " = unknown (cap exceeded)\n";
        if (!r.note.empty()) std::cout << "  " << r.note << "\n";
        return;
    }
    std::cout << r.spec << "  " << r.invariant << " = " << r.value << "\n";
    switch (r.kind) {
        case CertificateKind::Witness:
            std::cout << "  certificate: witness " << g.set_to_string(r.witness) << "\n";
            break;
        case CertificateKind::Family:
            std::cout << "  certificate: all-secure component " << r.family.components[0] << " at k="
                      << r.family.k << ", " << r.family.family_size
                      << " configurations, representative "
                      << g.set_to_string(r.family.representative) << "\n";
            break;
        case CertificateKind::FixedPoint:
            std::cout << "  certificate: eternal fixed point of " << r.fixed_point_size
                      << " configurations at k=" << r.value << "\n";
            break;
        case CertificateKind::Formula:
            std::cout << "  certificate: " << r.formula << "\n";
            break;
    }
    if (!r.infeasible_below.empty()) {
        std::cout << "  infeasible at k =";
        for (std::size_t k : r.infeasible_below) std::cout << " " << k;
        std::cout << "\n";
    }
    std::printf("  time: %.3fs%s\n", r.wall_seconds, cached ? "  [cached]" : "");
}

int cmd_compute(const std::string& spec_text, const std::string& invariant, const CommonOpts& o) {
    std::string spec = canonical_spec(spec_text);
    Graph g = generate(spec);
    std::string hash = hash_hex(canonical_hash(g));

    ResultCache cache;
    if (!o.no_cache) {
        if (auto line = cache.lookup(hash, invariant, nullptr)) {
            if (o.json) {
                std::cout << *line << "\n";
            } else {
                json rec = json::parse(*line);
                InvariantReport r;
                r.spec = spec;
                r.invariant = invariant;
                r.known = rec["outcome"] == "ok";
                if (r.known) r.value = rec["value"].get<std::size_t>();
                r.kind = CertificateKind::Formula;
                r.formula = rec["certificate"].dump();
                r.wall_seconds = rec.value("wall_seconds", 0.0);
                if (!r.known) return kExitCap;
                std::cout << spec << "  " << invariant << " = " << r.value << "\n";
                std::cout << "  certificate: " << r.formula << "\n";
                std::printf("  time: %.3fs  [cached]\n", r.wall_seconds);
                return kExitOk;
            }
            json rec = json::parse(*line);
            return rec["outcome"] == "ok" ? kExitOk : kExitCap;
        }
    }

    EngineLimits limits = limits_of(o);
    InvariantReport r;
    if (invariant == "gamma")
        r = domination_number(g, limits);
    else if (invariant == "eternal")
        r = eternal_domination_number(g, limits);
    else if (invariant == "foolproof")
        r = foolproof_number(g, limits);
    else if (invariant == "autonomous")
        r = autonomous_number(g, limits);
    else
        throw std::invalid_argument("unknown invariant: " + invariant);
    r.spec = spec;

    json rec = result_record(r);
    if (!o.no_cache) cache.append(rec.dump());
    if (o.json)
        std::cout << rec.dump() << "\n";
    else
        print_report_human(g, r, false);
    return r.known ? kExitOk : kExitCap;
}

int cmd_profile(const std::string& spec_text, std::size_t k_max, const CommonOpts& o) {
    std::string spec = canonical_spec(spec_text);
    Graph g = generate(spec);
    if (k_max == 0) k_max = g.order();
    FeasibilityProfile p = feasibility_profile(g, k_max, limits_of(o));
    p.spec = spec;
    if (o.json) {
        std::cout << profile_to_json(p).dump() << "\n";
        return kExitOk;
    }
    std::cout << spec << "  gamma = " << p.gamma << "\n";
    std::printf("  %4s %-12s %10s %12s %10s\n", "k", "feasible", "components", "all-secure",
                "nodes");
    for (const auto& row : p.rows) {
        if (!row.known) {
            std::printf("  %4zu %-12s\n", row.k, "unknown(cap)");
            continue;
        }
        std::printf("  %4zu %-12s %10zu %12zu %10zu\n", row.k, row.feasible ? "yes" : "no",
                    row.component_count, row.all_secure_components, row.node_count);
    }
    return kExitOk;
}

int cmd_refute(const std::string& spec_text, std::size_t k, const std::string& start_text,
               const CommonOpts& o) {
    std::string spec = canonical_spec(spec_text);
    Graph g = generate(spec);
    VertexSet start = parse_vertex_set(g, start_text);
    Trajectory trj = refute(g, k, start, limits_of(o));
    if (o.json) {
        std::cout << trajectory_to_jsonl(trj.steps);
        return kExitOk;
    }
    std::cout << spec << "  refutation at k=" << k << " from " << g.set_to_string(start) << "\n";
    for (std::size_t i = 0; i < trj.steps.size(); ++i) {
        const auto& st = trj.steps[i];
        std::cout << "  round " << i + 1 << ": " << g.set_to_string(st.configuration)
                  << "  attack " << g.label(static_cast<std::size_t>(st.attack));
        if (st.move)
            std::cout << "  move " << g.label(static_cast<std::size_t>(st.move->from)) << "->"
                      << g.label(static_cast<std::size_t>(st.move->to)) << "\n";
        else
            std::cout << "  NO LEGAL RESPONSE\n";
    }
    return kExitOk;
}

int cmd_realize(std::size_t a, std::size_t b, std::size_t c, const CommonOpts& o) {
    RealizeResult r = realize(a, b, c);
    EngineLimits limits = limits_of(o);
    std::size_t gam = domination_number(r.graph, limits).value;
    std::size_t ete = eternal_domination_number(r.graph, limits).value;
    std::size_t aut = autonomous_number(r.graph, limits).value;
    bool pass = gam == a && ete == b && aut == c;
    if (o.json) {
        json j;
        j["triple"] = {a, b, c};
        j["spec"] = r.spec;
        j["case"] = r.case_label;
        j["computed"] = {gam, ete, aut};
        j["pass"] = pass;
        if (r.spec.empty()) j["edge_list"] = write_edge_list(r.graph);
        std::cout << j.dump() << "\n";
    } else {
        std::cout << "realize(" << a << "," << b << "," << c << ")  [" << r.case_label << "]\n";
        if (!r.spec.empty())
            std::cout << "  spec: " << r.spec << "\n";
        else
            std::cout << "  direct construction; edge list:\n" << write_edge_list(r.graph);
        std::cout << "  verified triple: (" << gam << "," << ete << "," << aut << ")  "
                  << (pass ? "pass" : "MISMATCH") << "\n";
    }
    return pass ? kExitOk : kExitMismatch;
}

int cmd_simulate(const std::string& spec_text, const std::string& start_text,
                 const std::string& adversary, std::uint64_t seed, std::size_t rounds,
                 std::size_t trials, const CommonOpts& o) {
    std::string spec = canonical_spec(spec_text);
    Graph g = generate(spec);
    VertexSet start = parse_vertex_set(g, start_text);

    ProtocolConfig cfg;
    cfg.seed = seed;
    cfg.max_rounds = rounds;
    if (adversary.rfind("scripted:", 0) == 0) {
        cfg.adversary = AdversaryKind::Scripted;
        cfg.script = parse_attack_file(g, adversary.substr(9));
    } else {
        cfg.adversary = adversary_from_string(adversary);
        if (cfg.adversary == AdversaryKind::Scripted)
            throw std::invalid_argument("scripted adversary needs scripted:FILE");
    }

    EngineLimits limits = limits_of(o);
    if (trials > 1) {
        MonteCarloStats stats = monte_carlo(g, start, cfg, trials, limits);
        if (o.json) {
            std::cout << monte_carlo_to_json(stats).dump() << "\n";
        } else {
            std::cout << spec << "  " << trials << " trials x " << rounds << " rounds, adversary "
                      << adversary << "\n";
            std::cout << "  failures: " << stats.failures << "/" << stats.trials << "\n";
            if (stats.failures)
                std::printf("  mean failure round: %.2f\n", stats.mean_failure_round);
        }
        return kExitOk;
    }
    SimOutcome out = simulate(g, start, cfg, limits);
    if (o.json) {
        std::cout << sim_outcome_to_json(out).dump() << "\n";
    } else {
        for (std::size_t i = 0; i < out.steps.size(); ++i) {
            const auto& st = out.steps[i];
            std::cout << "  round " << i + 1 << ": " << g.set_to_string(st.configuration)
                      << "  attack " << g.label(static_cast<std::size_t>(st.attack));
            if (st.move)
                std::cout << "  move " << g.label(static_cast<std::size_t>(st.move->from)) << "->"
                          << g.label(static_cast<std::size_t>(st.move->to)) << "\n";
            else
                std::cout << "  NO LEGAL RESPONSE\n";
        }
        std::cout << (out.verdict == Verdict::Failed
                          ? "  FAILED at round " + std::to_string(out.rounds)
                          : "  survived " + std::to_string(out.rounds) + " rounds")
                  << "\n";
    }
    return kExitOk;
}

int cmd_verify_paper(const std::string& scope, std::size_t max_n, const CommonOpts& o) {
    EngineLimits limits = limits_of(o);
    bool include_catalog = scope != "realizability";
    bool include_realize = scope == "default" || scope == "all" || scope == "realizability";

    VerifyReport rep;
    if (include_catalog) rep = verify_entries(catalog_scope(scope, max_n), limits);
    std::vector<RealizeVerifyEntry> realize_rows;
    if (include_realize) realize_rows = verify_realizability(6, limits);

    bool all_pass = rep.all_pass();
    for (const auto& r : realize_rows)
        if (!r.pass) all_pass = false;

    if (o.json) {
        json j = verify_report_to_json(rep);
        if (include_realize) j["realizability"] = realize_rows_to_json(realize_rows);
        j["all_pass"] = all_pass;
        std::cout << j.dump() << "\n";
    } else {
        for (const auto& e : rep.entries) {
            const char* outcome = !e.known ? "UNKNOWN" : e.pass ? "pass" : "FAIL";
            std::printf("  %-34s expected (%zu,%zu,%zu)", e.spec.c_str(), e.expected_gamma,
                        e.expected_eternal, e.expected_autonomous);
            if (e.known) std::printf(" computed (%zu,%zu,%zu)", e.gamma, e.eternal, e.autonomous);
            std::printf("  %s\n", outcome);
        }
        for (const auto& r : realize_rows) {
            std::printf("  realize(%zu,%zu,%zu) -> %-22s", r.a, r.b, r.c,
                        r.spec.empty() ? "(direct)" : r.spec.c_str());
            if (r.known) std::printf(" computed (%zu,%zu,%zu)", r.gamma, r.eternal, r.autonomous);
            std::printf("  %s\n", !r.known ? "UNKNOWN" : r.pass ? "pass" : "FAIL");
        }
        std::size_t total = rep.entries.size() + realize_rows.size();
        std::printf("%s: %zu entries, %zu failed, %zu unknown\n", all_pass ? "PASS" : "FAIL",
                    total, rep.failed, rep.unknown);
    }
    return all_pass ? kExitOk : kExitMismatch;
}

int cmd_export_dot(const std::string& spec_text, const std::string& highlight_text,
                   const std::string& out_path) {
    std::string spec = canonical_spec(spec_text);
    Graph g = generate(spec);
    VertexSet highlight(g.order());
    if (!highlight_text.empty()) highlight = parse_vertex_set(g, highlight_text);
    std::string dot = to_dot(g, highlight);
    if (out_path.empty() || out_path == "-") {
        std::cout << dot;
    } else {
        std::ofstream out(out_path);
        if (!out) throw std::invalid_argument("cannot write " + out_path);
        out << dot;
    }
    return kExitOk;
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"domlab: exact graph-protection invariants"};
    app.require_subcommand(1);

    CommonOpts common;
    std::string spec, invariant, start, highlight, out_path;
    std::string adversary = "uniform";
    std::string scope = "default";
    std::size_t k = 0, k_max = 0, rounds = 100, trials = 1, max_n = 0;
    std::size_t ra = 0, rb = 0, rc = 0;
    std::uint64_t seed = 0;

    auto add_common = [&](CLI::App* cmd) {
        cmd->add_flag("--json", common.json, "emit JSON instead of human output");
        cmd->add_option("--cap", common.cap, "move-graph node cap");
        cmd->add_option("--threads", common.threads, "worker threads (0 = hardware)");
        cmd->add_flag("--no-cache", common.no_cache, "bypass the result cache");
    };

    CLI::App* compute = app.add_subcommand("compute", "compute one invariant of a graph");
    compute->add_option("spec", spec, "graph constructor expression")->required();
    compute->add_option("invariant", invariant, "gamma|eternal|foolproof|autonomous")->required();
    add_common(compute);

    CLI::App* profile = app.add_subcommand("profile", "per-size feasibility profile");
    profile->add_option("spec", spec)->required();
    profile->add_option("--kmax", k_max, "largest size to examine (default n)");
    add_common(profile);

    CLI::App* refute_cmd = app.add_subcommand("refute", "shortest path to a non-secure set");
    refute_cmd->add_option("spec", spec)->required();
    refute_cmd->add_option("k", k, "configuration size")->required();
    refute_cmd->add_option("start", start, "start set, e.g. b1,a3,a4 or 4,2,3")->required();
    add_common(refute_cmd);

    CLI::App* realize_cmd = app.add_subcommand("realize", "construct a graph with a given triple");
    realize_cmd->add_option("a", ra, "domination number")->required();
    realize_cmd->add_option("b", rb, "eternal domination number")->required();
    realize_cmd->add_option("c", rc, "autonomous domination number")->required();
    add_common(realize_cmd);

    CLI::App* simulate_cmd = app.add_subcommand("simulate", "run the guard protocol");
    simulate_cmd->add_option("spec", spec)->required();
    simulate_cmd->add_option("start", start, "start configuration")->required();
    simulate_cmd->add_option("--seed", seed, "random stream seed");
    simulate_cmd->add_option("--rounds", rounds, "attack rounds per trial");
    simulate_cmd->add_option("--trials", trials, "independent trials (statistics mode when > 1)");
    simulate_cmd->add_option("--adversary", adversary, "uniform|greedy|scripted:FILE|oracle");
    add_common(simulate_cmd);

    CLI::App* verify = app.add_subcommand("verify-paper", "re-check the expected-value catalog");
    verify->add_option("--scope", scope,
                       "default|paths|cycles|products|ladders|counterexamples|families|realizability");
    verify->add_option("--max-n", max_n, "bound the trailing size parameter (0 = unbounded)");
    add_common(verify);

    CLI::App* dot = app.add_subcommand("export-dot", "emit Graphviz");
    dot->add_option("spec", spec)->required();
    dot->add_option("--highlight", highlight, "vertex set to fill");
    dot->add_option("-o,--out", out_path, "output file (default stdout)");

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        int code = app.exit(e);
        return code == 0 ? 0 : kExitUsage;
    }

    try {
        if (compute->parsed()) return cmd_compute(spec, invariant, common);
        if (profile->parsed()) return cmd_profile(spec, k_max, common);
        if (refute_cmd->parsed()) return cmd_refute(spec, k, start, common);
        if (realize_cmd->parsed()) return cmd_realize(ra, rb, rc, common);
        if (simulate_cmd->parsed())
            return cmd_simulate(spec, start, adversary, seed, rounds, trials, common);
        if (verify->parsed()) return cmd_verify_paper(scope, max_n, common);
        if (dot->parsed()) return cmd_export_dot(spec, highlight, out_path);
    } catch (const domlab::CapExceeded& e) {
        std::cerr << "error: " << e.what() << "\n";
        return kExitCap;
    } catch (const domlab::NoRefutation& e) {
        std::cerr << "error: " << e.what() << "\n";
        return kExitMismatch;
    } catch (const std::invalid_argument& e) {
        std::cerr << "error: " << e.what() << "\n";
        return kExitUsage;
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << "\n";
        return kExitUsage;
    }
    return kExitUsage;
}
