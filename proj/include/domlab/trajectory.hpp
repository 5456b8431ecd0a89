#pragma once

#include <optional>
#include <vector>

#include "domlab/domination.hpp"

namespace domlab {

/// One step of an attack/response record. A step without a move is a
/// failure: the attack had no legal response from that configuration.
struct TrajectoryStep {
    VertexSet configuration;  // before the attack
    int attack;
    std::optional<Move> move;
};

struct Trajectory {
    std::vector<TrajectoryStep> steps;

    bool failed() const { return !steps.empty() && !steps.back().move.has_value(); }
};

}  // namespace domlab
