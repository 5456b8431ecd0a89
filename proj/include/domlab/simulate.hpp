#pragma once

#include <algorithm>
#include <cstdint>
#include <deque>
#include <optional>
#include <stdexcept>
#include <string>
#include <thread>
#include <vector>

#include "domlab/invariants.hpp"
#include "domlab/move_graph.hpp"
#include "domlab/trajectory.hpp"

namespace domlab {

/// The protocol's pinned random stream. Stream state for trial t is
/// splitmix64(seed ^ (GOLDEN * (t+1))); round r (0-based) consumes
/// splitmix64(state + 2r) for the adversary's draw and
/// splitmix64(state + 2r + 1) for the defender's tie-break. Selection is
/// draw mod count. Identical (graph, start, config) therefore reproduce
/// byte-identical outcomes, and trials are independent by construction.
inline std::uint64_t splitmix64(std::uint64_t x) {
    x += 0x9e3779b97f4a7c15ull;
    x = (x ^ (x >> 30)) * 0xbf58476d1ce4e5b9ull;
    x = (x ^ (x >> 27)) * 0x94d049bb133111ebull;
    return x ^ (x >> 31);
}

enum class AdversaryKind { Uniform, Greedy, Scripted, Oracle };

inline AdversaryKind adversary_from_string(const std::string& s) {
    if (s == "uniform") return AdversaryKind::Uniform;
    if (s == "greedy") return AdversaryKind::Greedy;
    if (s == "scripted") return AdversaryKind::Scripted;
    if (s == "oracle") return AdversaryKind::Oracle;
    throw std::invalid_argument("unknown adversary: " + s);
}

struct ProtocolConfig {
    std::uint64_t seed = 0;
    std::size_t max_rounds = 100;
    AdversaryKind adversary = AdversaryKind::Uniform;
    std::vector<int> script;  // Scripted only; the run ends when exhausted
};

enum class Verdict { Survived, Failed };

struct SimOutcome {
    std::vector<TrajectoryStep> steps;
    Verdict verdict = Verdict::Survived;
    std::size_t rounds = 0;         // rounds executed (a failed attack counts)
    int failing_attack = -1;        // set when verdict == Failed
    VertexSet final_configuration;
};

namespace detail {

/// Attack planner for the oracle adversary. It solves the alternating
/// attack/defense game on the move graph: nodes deleted by the eternal
/// fixed point are attacker-winning, and replaying attacks whose
/// surviving responses all died earlier drives the play downhill until
/// an unanswerable attack appears. From defender-winning nodes it steers
/// along a shortest path toward a non-secure node when the component has
/// one.
class OracleBrain {
public:
    OracleBrain(const Graph& g, std::size_t k, const EngineLimits& limits)
        : graph_(g), mg_(build_move_graph(g, k, limits)) {
        const std::size_t count = mg_.nodes.size();
        const std::size_t n = g.order();
        std::vector<std::vector<std::uint32_t>> responses(count,
                                                          std::vector<std::uint32_t>(n, 0));
        for (std::size_t i = 0; i < count; ++i)
            for (std::int32_t j : mg_.adj[i]) {
                int v = (mg_.nodes[j] - mg_.nodes[i]).first();
                ++responses[i][static_cast<std::size_t>(v)];
            }
        death_seq_.assign(count, -1);
        std::deque<std::int32_t> worklist;
        std::int64_t seq = 0;
        for (std::size_t i = 0; i < count; ++i)
            if (!mg_.secure[i]) {
                death_seq_[i] = seq++;
                worklist.push_back(static_cast<std::int32_t>(i));
            }
        while (!worklist.empty()) {
            std::int32_t dead = worklist.front();
            worklist.pop_front();
            for (std::int32_t i : mg_.adj[dead]) {
                if (death_seq_[i] >= 0) continue;
                int v = (mg_.nodes[dead] - mg_.nodes[i]).first();
                if (--responses[i][static_cast<std::size_t>(v)] == 0) {
                    death_seq_[i] = seq++;
                    worklist.push_back(i);
                }
            }
        }
        // Distance to the nearest non-secure node, for steering inside
        // defender-winning territory.
        dist_.assign(count, -1);
        std::deque<std::int32_t> bfs;
        for (std::size_t i = 0; i < count; ++i)
            if (!mg_.secure[i]) {
                dist_[i] = 0;
                bfs.push_back(static_cast<std::int32_t>(i));
            }
        while (!bfs.empty()) {
            std::int32_t u = bfs.front();
            bfs.pop_front();
            for (std::int32_t v : mg_.adj[u])
                if (dist_[v] < 0) {
                    dist_[v] = dist_[u] + 1;
                    bfs.push_back(v);
                }
        }
    }

    int choose_attack(const VertexSet& s) const {
        auto idx = mg_.find(s);
        if (!idx) return s.complement().first();
        std::size_t i = static_cast<std::size_t>(*idx);

        if (death_seq_[i] >= 0) {
            // Attacker-winning: pick the attack all of whose responses died
            // before this node; play then descends in death order.
            int best_v = -1;
            std::int64_t best_rank = 0;
            VertexSet outside = s.complement();
            for (int v = outside.first(); v >= 0; v = outside.next(v)) {
                std::int64_t rank = -1;
                bool all_dead = true;
                for (std::int32_t j : mg_.adj[i]) {
                    if (!mg_.nodes[j].test(static_cast<std::size_t>(v))) continue;
                    if (death_seq_[j] < 0 || death_seq_[j] >= death_seq_[i]) {
                        all_dead = false;
                        break;
                    }
                    rank = std::max(rank, death_seq_[j]);
                }
                if (all_dead && (best_v < 0 || rank < best_rank)) {
                    best_v = v;
                    best_rank = rank;
                }
            }
            if (best_v >= 0) return best_v;
        }
        // Defender-winning: steer toward the nearest non-secure node.
        int best_v = -1, best_dist = -1;
        for (std::int32_t j : mg_.adj[i]) {
            if (dist_[j] < 0) continue;
            if (best_v < 0 || dist_[j] < best_dist) {
                best_dist = dist_[j];
                best_v = (mg_.nodes[j] - s).first();
            }
        }
        if (best_v >= 0) return best_v;
        return s.complement().first();
    }

private:
    const Graph& graph_;
    MoveGraph mg_;
    std::vector<std::int64_t> death_seq_;
    std::vector<std::int32_t> dist_;
};

inline SimOutcome simulate_trial(const Graph& g, const VertexSet& start,
                                 const ProtocolConfig& cfg, std::size_t trial_index,
                                 const OracleBrain* oracle) {
    if (!is_dominating(g, start))
        throw std::invalid_argument("simulate: start configuration is not dominating");
    for (int v : cfg.script)
        if (v < 0 || static_cast<std::size_t>(v) >= g.order())
            throw std::invalid_argument("simulate: scripted attack vertex out of range");

    std::uint64_t stream = splitmix64(cfg.seed ^ (0x9e3779b97f4a7c15ull * (trial_index + 1)));
    SimOutcome out;
    VertexSet s = start;

    std::size_t horizon = cfg.max_rounds;
    if (cfg.adversary == AdversaryKind::Scripted)
        horizon = std::min(horizon, cfg.script.size());

    for (std::size_t round = 0; round < horizon; ++round) {
        VertexSet outside = s.complement();
        if (outside.empty()) break;  // all vertices guarded, nothing to attack

        int attack = -1;
        switch (cfg.adversary) {
            case AdversaryKind::Uniform: {
                std::uint64_t draw = splitmix64(stream + 2 * round);
                auto open = outside.to_vector();
                attack = open[static_cast<std::size_t>(draw % open.size())];
                break;
            }
            case AdversaryKind::Greedy: {
                std::size_t best = SIZE_MAX;
                for (int v = outside.first(); v >= 0; v = outside.next(v)) {
                    std::size_t options = legal_moves(g, s, v).size();
                    if (options < best) {
                        best = options;
                        attack = v;
                    }
                }
                break;
            }
            case AdversaryKind::Scripted:
                attack = cfg.script[round];
                if (s.test(static_cast<std::size_t>(attack)))
                    throw std::invalid_argument("simulate: scripted attack at occupied vertex " +
                                                std::to_string(attack));
                break;
            case AdversaryKind::Oracle:
                attack = oracle->choose_attack(s);
                break;
        }

        auto moves = legal_moves(g, s, attack);
        ++out.rounds;
        if (moves.empty()) {
            out.steps.push_back({s, attack, std::nullopt});
            out.verdict = Verdict::Failed;
            out.failing_attack = attack;
            out.final_configuration = s;
            return out;
        }
        std::uint64_t draw = splitmix64(stream + 2 * round + 1);
        Move chosen = moves[static_cast<std::size_t>(draw % moves.size())];
        out.steps.push_back({s, attack, chosen});
        s.reset(static_cast<std::size_t>(chosen.from));
        s.set(static_cast<std::size_t>(chosen.to));
    }
    out.verdict = Verdict::Survived;
    out.final_configuration = s;
    return out;
}

}  // namespace detail

/// Runs the guard protocol: each round the adversary names an unoccupied
/// vertex; a uniformly random legal responder moves there; an attack
/// with no legal response is a failure. Deterministic given the config.
inline SimOutcome simulate(const Graph& g, const VertexSet& start, const ProtocolConfig& cfg,
                           const EngineLimits& limits = {}) {
    if (cfg.adversary == AdversaryKind::Oracle) {
        detail::OracleBrain brain(g, start.count(), limits);
        return detail::simulate_trial(g, start, cfg, 0, &brain);
    }
    return detail::simulate_trial(g, start, cfg, 0, nullptr);
}

struct MonteCarloStats {
    std::size_t trials = 0;
    std::size_t failures = 0;
    double mean_failure_round = 0.0;
    std::optional<SimOutcome> example_failure;  // lowest failing trial index
};

/// Independent seeded trials; trial t uses the stream derived from
/// (seed, t), so the statistics do not depend on the thread count.
inline MonteCarloStats monte_carlo(const Graph& g, const VertexSet& start,
                                   const ProtocolConfig& cfg, std::size_t trials,
                                   const EngineLimits& limits = {}) {
    MonteCarloStats stats;
    stats.trials = trials;
    if (trials == 0) return stats;

    std::optional<detail::OracleBrain> brain;
    if (cfg.adversary == AdversaryKind::Oracle) brain.emplace(g, start.count(), limits);
    const detail::OracleBrain* brain_ptr = brain ? &*brain : nullptr;

    std::vector<SimOutcome> outcomes(trials);
    unsigned threads = limits.threads ? limits.threads : std::thread::hardware_concurrency();
    threads = std::max(1u, std::min<unsigned>(threads, static_cast<unsigned>(trials)));
    if (threads == 1) {
        for (std::size_t t = 0; t < trials; ++t)
            outcomes[t] = detail::simulate_trial(g, start, cfg, t, brain_ptr);
    } else {
        std::vector<std::thread> pool;
        for (unsigned w = 0; w < threads; ++w)
            pool.emplace_back([&, w] {
                for (std::size_t t = w; t < trials; t += threads)
                    outcomes[t] = detail::simulate_trial(g, start, cfg, t, brain_ptr);
            });
        for (auto& th : pool) th.join();
    }

    std::size_t round_sum = 0;
    for (std::size_t t = 0; t < trials; ++t) {
        if (outcomes[t].verdict != Verdict::Failed) continue;
        ++stats.failures;
        round_sum += outcomes[t].rounds;
        if (!stats.example_failure) stats.example_failure = outcomes[t];
    }
    if (stats.failures) stats.mean_failure_round = double(round_sum) / double(stats.failures);
    return stats;
}

}  // namespace domlab
