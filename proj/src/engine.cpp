#include "gridex/engine.hpp"

#include <cstdlib>
#include <sstream>

#include "gridex/strategy.hpp"

namespace gridex {

int edge_index(const GridSpec& spec, EdgeId e) {
    const int m = spec.rows, n = spec.cols;
    const int r = e.a.row, c = e.a.col;
    const bool horizontal = e.b.row == r;
    int idx = (r - 1) * (2 * n - 1);
    idx += (c - 1) * (r < m ? 2 : 1);
    if (!horizontal && c < n) idx += 1;
    return idx;
}

std::vector<Vertex> grid_neighbors(const GridSpec& spec, Vertex v) {
    std::vector<Vertex> out;
    out.reserve(4);
    for (auto [dr, dc] : kNeighborOrder) {
        Vertex u{v.row + dr, v.col + dc};
        if (spec.contains(u)) out.push_back(u);
    }
    return out;
}

Knowledge::Knowledge(GridSpec spec, Vertex start) : spec_(spec), position_(start) {
    visited_.assign(spec.vertex_count(), 0);
    weights_.assign(edge_count(spec), -1);
    orientations_.assign(edge_count(spec), -1);
    visited_[spec.vertex_index(start)] = 1;
    visited_count_ = 1;
}

bool Knowledge::traversable_known(Vertex from, Vertex to) const {
    if (!adjacent(from, to)) return false;
    EdgeId e = make_edge(from, to);
    if (!revealed_weight(e)) return false;
    if (!spec_.directed) return true;
    auto o = revealed_orientation(e);
    if (!o) return false;
    Vertex tail = *o == Orientation::Forward ? e.a : e.b;
    return tail == from;
}

std::vector<IncidentInfo> StaticSource::incident_info(Vertex v) {
    std::vector<IncidentInfo> out;
    for (Vertex u : grid_neighbors(inst_.spec(), v)) {
        EdgeId e = make_edge(v, u);
        IncidentInfo info{e, std::nullopt, std::nullopt};
        if (inst_.spec().directed) {
            info.orientation = inst_.orientation(e);
            if (inst_.tail_of(e) == v) info.weight = inst_.weight(e);
        } else {
            info.weight = inst_.weight(e);
        }
        out.push_back(info);
    }
    return out;
}

Engine::Engine(RevelationSource& source, Vertex start) : source_(source) {
    GridSpec spec = source.spec();
    if (!spec.contains(start)) throw Error(Errc::IllegalMove, "start vertex out of bounds");
    know_ = Knowledge(spec, start);
    reveal_at(start);
}

void Engine::reveal_at(Vertex v) {
    for (const IncidentInfo& info : source_.incident_info(v)) {
        int idx = edge_index(know_.spec_, info.edge);
        if (info.orientation) {
            int8_t o = static_cast<int8_t>(*info.orientation);
            if (know_.orientations_[idx] >= 0 && know_.orientations_[idx] != o)
                throw Error(Errc::AdversaryInconsistent, "orientation answer changed");
            know_.orientations_[idx] = o;
        }
        if (info.weight) {
            if (know_.weights_[idx] >= 0 && know_.weights_[idx] != *info.weight)
                throw Error(Errc::AdversaryInconsistent, "weight answer changed");
            if (*info.weight <= 0) throw Error(Errc::AdversaryInconsistent, "non-positive weight");
            know_.weights_[idx] = *info.weight;
        }
    }
}

std::vector<Move> Engine::legal_moves() const {
    std::vector<Move> out;
    Vertex pos = know_.position_;
    for (Vertex u : grid_neighbors(know_.spec_, pos)) {
        if (know_.spec_.directed) {
            if (know_.traversable_known(pos, u)) out.push_back({u});
        } else {
            out.push_back({u});
        }
    }
    return out;
}

void Engine::apply_move(Move move) {
    Vertex pos = know_.position_;
    Vertex to = move.to;
    if (!adjacent(pos, to) || !know_.spec_.contains(to))
        throw Error(Errc::IllegalMove, "destination is not a grid neighbor");
    EdgeId e = make_edge(pos, to);
    int idx = edge_index(know_.spec_, e);
    if (know_.spec_.directed) {
        if (!know_.traversable_known(pos, to))
            throw Error(Errc::IllegalMove, "move against the revealed orientation");
    }
    // Undirected traversal always has a revealed weight (the edge is incident
    // to the visited current position); directed traversal is along an
    // outgoing arc whose weight was revealed with the tail.
    Weight w = know_.weights_[idx];
    if (w < 0) throw Error(Errc::AdversaryInconsistent, "traversed edge has no revealed weight");
    know_.position_ = to;
    know_.cum_cost_ += w;
    know_.move_count_ += 1;
    moves_.push_back({pos, to, w});
    int vidx = know_.spec_.vertex_index(to);
    if (!know_.visited_[vidx]) {
        know_.visited_[vidx] = 1;
        know_.visited_count_ += 1;
        reveal_at(to);
    }
}

Trace Engine::trace(std::string instance_id, bool complete) const {
    Trace t;
    t.instance_id = std::move(instance_id);
    t.moves = moves_;
    t.total_cost = know_.cum_cost_;
    t.complete = complete;
    return t;
}

std::string trace_csv(const Trace& trace) {
    std::ostringstream os;
    os << "step,from_row,from_col,to_row,to_col,weight,cum_cost\n";
    Weight cum = 0;
    int step = 1;
    for (const TraceMove& m : trace.moves) {
        cum += m.weight;
        os << step++ << "," << m.from.row << "," << m.from.col << "," << m.to.row << ","
           << m.to.col << "," << m.weight << "," << cum << "\n";
    }
    return os.str();
}

RunResult run(RevelationSource& source, Vertex start, Strategy& strategy, long long step_budget,
              const std::string& instance_id) {
    Engine engine(source, start);
    while (!engine.complete() && engine.knowledge().move_count() < step_budget) {
        if (source.spec().directed && engine.legal_moves().empty())
            throw Error(Errc::DeadEnd, "no legal move from current position");
        Move move = strategy.decide(engine.knowledge());
        engine.apply_move(move);
    }
    RunResult result;
    result.trace = engine.trace(instance_id, engine.complete());
    result.committed = source.commit();
    // The committed ground truth must agree with everything the run saw.
    const Knowledge& know = engine.knowledge();
    for (const EdgeId& e : result.committed.edges()) {
        if (auto w = know.revealed_weight(e); w && *w != result.committed.weight(e))
            throw Error(Errc::AdversaryInconsistent, "commit() contradicts a revealed weight");
        if (result.committed.spec().directed) {
            if (auto o = know.revealed_orientation(e); o && *o != result.committed.orientation(e))
                throw Error(Errc::AdversaryInconsistent, "commit() contradicts an orientation");
        }
    }
    for (const TraceMove& m : result.trace.moves) {
        if (result.committed.weight(make_edge(m.from, m.to)) != m.weight)
            throw Error(Errc::AdversaryInconsistent, "trace weight differs from committed instance");
    }
    return result;
}

long long default_step_budget(Weight k, const GridSpec& spec) {
    return 10LL * std::max<Weight>(k, 1) * spec.rows * spec.cols;
}

Rational trace_ratio(const Trace& trace, Weight opt_cost) {
    if (!trace.complete) throw Error(Errc::IncompleteTrace, "ratio of an incomplete trace");
    return Rational(trace.total_cost, opt_cost);
}

}  // namespace gridex
