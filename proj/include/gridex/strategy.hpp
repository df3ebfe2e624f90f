#pragma once

#include <functional>
#include <memory>
#include <optional>
#include <string>
#include <vector>

#include "gridex/engine.hpp"

namespace gridex {

// Deterministic online agent: identical Knowledge histories must yield
// identical moves. A strategy may keep private state across calls within a
// single run; a fresh value is constructed per run.
class Strategy {
public:
    virtual ~Strategy() = default;
    virtual Move decide(const Knowledge& knowledge) = 0;
    virtual std::string name() const = 0;
};

using StrategyFactory = std::function<std::unique_ptr<Strategy>()>;

void register_strategy(const std::string& name, StrategyFactory factory);
std::unique_ptr<Strategy> make_strategy(const std::string& name);  // throws NotFound
std::vector<std::string> strategy_names();

struct PathResult {
    std::vector<Vertex> vertices;  // src first, target last
    Weight cost = 0;
};

// Cheapest walk from src to any target over revealed, traversable edges.
// Ties: cheapest target with smallest (col, row); among equal-cost paths the
// lexicographically smallest move sequence under the Down,Right,Up,Left
// neighbor order. nullopt when no target is reachable.
std::optional<PathResult> known_shortest_path(const Knowledge& knowledge, Vertex src,
                                              const std::vector<Vertex>& targets);

// Same search restricted to revealed edges of weight exactly 1.
std::optional<PathResult> known_weight1_path(const Knowledge& knowledge, Vertex src,
                                             const std::vector<Vertex>& targets);

// First move of a cheapest revealed path to the nearest unvisited vertex,
// recomputed from scratch every step. Throws StrategyStuck when no unvisited
// vertex is reachable over revealed edges.
Move greedy_decide(const Knowledge& knowledge);

// A left/right cut of a ladder whose crossing edges are all revealed k-edges.
// Covers the same-boundary pair and the staircase forms: the cut consists of
// the top-row edge over `top_boundary`, the bottom-row edge over
// `bot_boundary`, and the rungs strictly between the two boundaries.
struct KSeparator {
    int top_boundary = 0;  // edge (1,b)-(1,b+1)
    int bot_boundary = 0;  // edge (2,b)-(2,b+1)
    std::vector<EdgeId> edges;
};

// Minimal fully-revealed all-k column cut, if any. Boundaries with any
// weight-1 or unrevealed crossing edge do not qualify.
std::optional<KSeparator> detect_k_separator(const Knowledge& knowledge, Weight k);

// Covering plan for every unvisited vertex in columns <= frontier: iterated
// cheapest-known-path to the rightmost unvisited vertex. Ladder only.
std::optional<PathResult> sweep_back_plan(const Knowledge& knowledge);

enum class SweepPhase { Advance, SweepBack, Cross };

struct SweepState {
    SweepPhase phase = SweepPhase::Advance;
    int frontier = 1;  // max column containing a visited vertex; nondecreasing
};

// One decision of the Theorem-3 ladder sweep; exposed for white-box tests.
Move ladder_sweep_decide(const Knowledge& knowledge, SweepState& state);

class GreedyStrategy final : public Strategy {
public:
    Move decide(const Knowledge& knowledge) override { return greedy_decide(knowledge); }
    std::string name() const override { return "greedy"; }
};

// Three-phase 4-competitive ladder agent: advance right over weight-1 edges,
// sweep back to cover the explored prefix when blocked, then cross into the
// next column on the cheapest known path.
class LadderSweepStrategy final : public Strategy {
public:
    Move decide(const Knowledge& knowledge) override;
    std::string name() const override { return "sweep"; }

private:
    SweepState state_;
};

}  // namespace gridex
