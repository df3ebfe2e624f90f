#pragma once

#include <array>
#include <memory>
#include <optional>
#include <string>
#include <vector>

#include "gridex/error.hpp"
#include "gridex/grid.hpp"
#include "gridex/rational.hpp"

namespace gridex {

// Free edge indexing over the canonical order, usable without an Instance.
int edge_index(const GridSpec& spec, EdgeId e);

// Neighbor probe order used by every deterministic tie-break in the repo:
// Down, Right, Up, Left.
inline constexpr std::array<std::pair<int, int>, 4> kNeighborOrder{
    {{1, 0}, {0, 1}, {-1, 0}, {0, -1}}};

std::vector<Vertex> grid_neighbors(const GridSpec& spec, Vertex v);

struct Move {
    Vertex to;
    friend bool operator==(const Move&, const Move&) = default;
};

// The agent-visible projection of an instance: what has been revealed so far
// plus position and cost bookkeeping. Strategies see nothing else.
class Knowledge {
public:
    Knowledge() = default;
    Knowledge(GridSpec spec, Vertex start);

    const GridSpec& spec() const { return spec_; }
    Vertex position() const { return position_; }
    bool visited(Vertex v) const { return visited_[spec_.vertex_index(v)]; }
    int visited_count() const { return visited_count_; }
    bool all_visited() const { return visited_count_ == spec_.vertex_count(); }
    long long move_count() const { return move_count_; }
    Weight cum_cost() const { return cum_cost_; }

    std::optional<Weight> revealed_weight(EdgeId e) const {
        Weight w = weights_[edge_index(spec_, e)];
        return w < 0 ? std::nullopt : std::optional<Weight>(w);
    }
    std::optional<Orientation> revealed_orientation(EdgeId e) const {
        int8_t o = orientations_[edge_index(spec_, e)];
        return o < 0 ? std::nullopt : std::optional<Orientation>(static_cast<Orientation>(o));
    }

    // A move u -> v is plannable when the edge weight is revealed and, for
    // directed grids, the revealed orientation permits it.
    bool traversable_known(Vertex from, Vertex to) const;

private:
    friend class Engine;
    GridSpec spec_;
    Vertex position_{};
    std::vector<char> visited_;
    int visited_count_ = 0;
    std::vector<Weight> weights_;       // -1 = unrevealed, indexed canonically
    std::vector<int8_t> orientations_;  // -1 = unrevealed
    long long move_count_ = 0;
    Weight cum_cost_ = 0;
};

// One edge's worth of information handed out on a first visit.
struct IncidentInfo {
    EdgeId edge;
    std::optional<Orientation> orientation;  // directed grids only
    std::optional<Weight> weight;            // absent when the rules withhold it
};

// Where revelations come from. A static instance is the trivial source; the
// Theorem-2 adaptive adversary commits weights lazily behind this interface.
class RevelationSource {
public:
    virtual ~RevelationSource() = default;
    virtual GridSpec spec() const = 0;
    // Called once per first visit of v: info for every edge incident to v,
    // following the GEP-UW/GEP-DW revelation rules.
    virtual std::vector<IncidentInfo> incident_info(Vertex v) = 0;
    // The fully committed ground truth; must agree with every answer given.
    virtual Instance commit() = 0;
};

class StaticSource final : public RevelationSource {
public:
    explicit StaticSource(Instance inst) : inst_(std::move(inst)) {}
    GridSpec spec() const override { return inst_.spec(); }
    std::vector<IncidentInfo> incident_info(Vertex v) override;
    Instance commit() override { return inst_; }

private:
    Instance inst_;
};

struct TraceMove {
    Vertex from, to;
    Weight weight;
};

struct Trace {
    std::string instance_id;
    std::vector<TraceMove> moves;
    Weight total_cost = 0;
    bool complete = false;
};

// Trace CSV: header row, one row per move, step starting at 1.
std::string trace_csv(const Trace& trace);

// The fog-of-war state machine. Enforces legality, revelation exactness and
// cost accounting; detects inconsistent adversaries.
class Engine {
public:
    Engine(RevelationSource& source, Vertex start);

    const Knowledge& knowledge() const { return know_; }
    bool complete() const { return know_.all_visited(); }

    std::vector<Move> legal_moves() const;
    void apply_move(Move move);

    const std::vector<TraceMove>& moves() const { return moves_; }
    Trace trace(std::string instance_id, bool complete) const;

private:
    void reveal_at(Vertex v);
    RevelationSource& source_;
    Knowledge know_;
    std::vector<TraceMove> moves_;
};

class Strategy;

struct RunResult {
    Trace trace;
    Instance committed;
};

// Drives `strategy` against `source` until all vertices are visited or the
// step budget runs out (complete=false). The strategy only ever sees
// Knowledge. Throws StrategyStuck/DeadEnd per the engine contract.
RunResult run(RevelationSource& source, Vertex start, Strategy& strategy, long long step_budget,
              const std::string& instance_id = "");

long long default_step_budget(Weight k, const GridSpec& spec);

// Exact strict ratio total_cost / opt_cost. Throws IncompleteTrace.
Rational trace_ratio(const Trace& trace, Weight opt_cost);

}  // namespace gridex
