#include "gridex/strategy.hpp"

#include <algorithm>
#include <limits>
#include <map>
#include <queue>

namespace gridex {

namespace {

constexpr Weight kInf = std::numeric_limits<Weight>::max() / 4;

// Filtered edge predicate: which revealed edges the search may use.
using EdgeFilter = std::function<bool(Weight)>;

// Dijkstra over revealed traversable edges from src; dist indexed by vertex.
std::vector<Weight> revealed_dijkstra(const Knowledge& k, Vertex src, bool reversed,
                                      const EdgeFilter& admit) {
    const GridSpec& spec = k.spec();
    std::vector<Weight> dist(spec.vertex_count(), kInf);
    using QItem = std::pair<Weight, int>;
    std::priority_queue<QItem, std::vector<QItem>, std::greater<>> pq;
    dist[spec.vertex_index(src)] = 0;
    pq.push({0, spec.vertex_index(src)});
    while (!pq.empty()) {
        auto [d, vi] = pq.top();
        pq.pop();
        if (d != dist[vi]) continue;
        Vertex v = spec.vertex_at(vi);
        for (Vertex u : grid_neighbors(spec, v)) {
            bool ok = reversed ? k.traversable_known(u, v) : k.traversable_known(v, u);
            if (!ok) continue;
            Weight w = *k.revealed_weight(make_edge(v, u));
            if (!admit(w)) continue;
            int ui = spec.vertex_index(u);
            if (d + w < dist[ui]) {
                dist[ui] = d + w;
                pq.push({d + w, ui});
            }
        }
    }
    return dist;
}

std::optional<PathResult> shortest_path_filtered(const Knowledge& k, Vertex src,
                                                 const std::vector<Vertex>& targets,
                                                 const EdgeFilter& admit) {
    const GridSpec& spec = k.spec();
    auto dist = revealed_dijkstra(k, src, false, admit);
    // Cheapest target; ties by smallest (col, row).
    std::optional<Vertex> best;
    Weight best_cost = kInf;
    for (Vertex t : targets) {
        Weight d = dist[spec.vertex_index(t)];
        if (d >= kInf) continue;
        auto key = std::pair(t.col, t.row);
        if (d < best_cost || (d == best_cost && best && key < std::pair(best->col, best->row))) {
            best = t;
            best_cost = d;
        }
    }
    if (!best) return std::nullopt;
    if (*best == src) return PathResult{{src}, 0};
    // Lexicographically smallest optimal move sequence: walk forward choosing
    // the first neighbor (Down,Right,Up,Left) that stays on a cheapest path,
    // guided by distances to the target over reversed edges.
    auto rdist = revealed_dijkstra(k, *best, true, admit);
    PathResult result;
    result.vertices.push_back(src);
    result.cost = best_cost;
    Vertex cur = src;
    Weight remaining = rdist[spec.vertex_index(src)];
    while (cur != *best) {
        bool stepped = false;
        for (auto [dr, dc] : kNeighborOrder) {
            Vertex u{cur.row + dr, cur.col + dc};
            if (!spec.contains(u) || !k.traversable_known(cur, u)) continue;
            Weight w = *k.revealed_weight(make_edge(cur, u));
            if (!admit(w)) continue;
            if (w + rdist[spec.vertex_index(u)] == remaining) {
                result.vertices.push_back(u);
                remaining -= w;
                cur = u;
                stepped = true;
                break;
            }
        }
        if (!stepped) return std::nullopt;  // defensive; cannot happen when dist agreed
    }
    return result;
}

}  // namespace

std::optional<PathResult> known_shortest_path(const Knowledge& knowledge, Vertex src,
                                              const std::vector<Vertex>& targets) {
    return shortest_path_filtered(knowledge, src, targets, [](Weight) { return true; });
}

std::optional<PathResult> known_weight1_path(const Knowledge& knowledge, Vertex src,
                                             const std::vector<Vertex>& targets) {
    return shortest_path_filtered(knowledge, src, targets, [](Weight w) { return w == 1; });
}

Move greedy_decide(const Knowledge& knowledge) {
    const GridSpec& spec = knowledge.spec();
    std::vector<Vertex> unvisited;
    for (int i = 0; i < spec.vertex_count(); ++i) {
        Vertex v = spec.vertex_at(i);
        if (!knowledge.visited(v)) unvisited.push_back(v);
    }
    auto path = known_shortest_path(knowledge, knowledge.position(), unvisited);
    if (!path || path->vertices.size() < 2)
        throw Error(Errc::StrategyStuck, "greedy: no unvisited vertex reachable over revealed edges");
    return {path->vertices[1]};
}

std::optional<KSeparator> detect_k_separator(const Knowledge& knowledge, Weight k) {
    const GridSpec& spec = knowledge.spec();
    if (spec.rows != 2) return std::nullopt;
    const int n = spec.cols;
    auto all_k = [&](const std::vector<EdgeId>& edges) {
        for (const EdgeId& e : edges) {
            auto w = knowledge.revealed_weight(e);
            if (!w || *w != k) return false;
        }
        return true;
    };
    std::optional<KSeparator> best;
    for (int bt = 1; bt < n; ++bt) {
        for (int bb = 1; bb < n; ++bb) {
            KSeparator sep;
            sep.top_boundary = bt;
            sep.bot_boundary = bb;
            sep.edges.push_back(make_edge({1, bt}, {1, bt + 1}));
            sep.edges.push_back(make_edge({2, bb}, {2, bb + 1}));
            for (int c = std::min(bt, bb) + 1; c <= std::max(bt, bb); ++c)
                sep.edges.push_back(make_edge({1, c}, {2, c}));
            if (!all_k(sep.edges)) continue;
            auto key = std::tuple(std::abs(bt - bb), std::min(bt, bb), bt);
            auto best_key = best ? std::tuple(std::abs(best->top_boundary - best->bot_boundary),
                                              std::min(best->top_boundary, best->bot_boundary),
                                              best->top_boundary)
                                 : std::tuple(n + 1, n + 1, n + 1);
            if (key < best_key) best = sep;
        }
    }
    return best;
}

namespace {

int frontier_col(const Knowledge& k) {
    int f = 1;
    for (int i = 0; i < k.spec().vertex_count(); ++i) {
        Vertex v = k.spec().vertex_at(i);
        if (k.visited(v)) f = std::max(f, v.col);
    }
    return f;
}

std::vector<Vertex> unvisited_in_prefix(const Knowledge& k, int frontier) {
    std::vector<Vertex> out;
    for (int i = 0; i < k.spec().vertex_count(); ++i) {
        Vertex v = k.spec().vertex_at(i);
        if (v.col <= frontier && !k.visited(v)) out.push_back(v);
    }
    return out;
}

}  // namespace

std::optional<PathResult> sweep_back_plan(const Knowledge& knowledge) {
    const GridSpec& spec = knowledge.spec();
    if (spec.rows != 2) throw Error(Errc::NotALadder, "sweep_back_plan requires a 2xN grid");
    int frontier = frontier_col(knowledge);
    std::vector<Vertex> remaining = unvisited_in_prefix(knowledge, frontier);
    PathResult plan;
    plan.vertices.push_back(knowledge.position());
    Vertex pos = knowledge.position();
    auto covered = [&](Vertex v) {
        for (const Vertex& u : plan.vertices)
            if (u == v) return true;
        return false;
    };
    while (true) {
        std::erase_if(remaining, covered);
        if (remaining.empty()) break;
        int rightmost = 0;
        for (const Vertex& v : remaining) rightmost = std::max(rightmost, v.col);
        std::vector<Vertex> targets;
        for (const Vertex& v : remaining)
            if (v.col == rightmost) targets.push_back(v);
        auto leg = known_shortest_path(knowledge, pos, targets);
        if (!leg) return std::nullopt;
        plan.vertices.insert(plan.vertices.end(), leg->vertices.begin() + 1, leg->vertices.end());
        plan.cost += leg->cost;
        pos = plan.vertices.back();
    }
    return plan;
}

Move ladder_sweep_decide(const Knowledge& knowledge, SweepState& state) {
    const GridSpec& spec = knowledge.spec();
    if (spec.rows != 2 || spec.directed)
        throw Error(Errc::Unsupported, "sweep strategy requires an undirected ladder");
    const int n = spec.cols;
    int f = frontier_col(knowledge);
    if (f > state.frontier) {
        state.frontier = f;
        state.phase = SweepPhase::Advance;
    }
    Vertex pos = knowledge.position();
    std::vector<Vertex> next_col;
    if (f < n) next_col = {{1, f + 1}, {2, f + 1}};

    if (state.phase == SweepPhase::Advance) {
        if (f < n) {
            if (auto p = known_weight1_path(knowledge, pos, next_col); p && p->vertices.size() >= 2)
                return {p->vertices[1]};
        }
        state.phase = SweepPhase::SweepBack;
    }
    if (state.phase == SweepPhase::SweepBack) {
        std::vector<Vertex> behind = unvisited_in_prefix(knowledge, f);
        if (!behind.empty()) {
            int rightmost = 0;
            for (const Vertex& v : behind) rightmost = std::max(rightmost, v.col);
            std::vector<Vertex> targets;
            for (const Vertex& v : behind)
                if (v.col == rightmost) targets.push_back(v);
            auto p = known_shortest_path(knowledge, pos, targets);
            if (!p || p->vertices.size() < 2)
                throw Error(Errc::Unreachable, "sweep-back target unreachable");
            return {p->vertices[1]};
        }
        state.phase = SweepPhase::Cross;
    }
    // Cross: cheapest known way into the next column, k-edges allowed.
    auto p = known_shortest_path(knowledge, pos, next_col);
    if (!p || p->vertices.size() < 2)
        throw Error(Errc::StrategyStuck, "sweep: next column unreachable");
    return {p->vertices[1]};
}

Move LadderSweepStrategy::decide(const Knowledge& knowledge) {
    return ladder_sweep_decide(knowledge, state_);
}

namespace {

std::map<std::string, StrategyFactory>& registry() {
    static std::map<std::string, StrategyFactory> reg = {
        {"greedy", [] { return std::unique_ptr<Strategy>(new GreedyStrategy()); }},
        {"sweep", [] { return std::unique_ptr<Strategy>(new LadderSweepStrategy()); }},
    };
    return reg;
}

}  // namespace

void register_strategy(const std::string& name, StrategyFactory factory) {
    registry()[name] = std::move(factory);
}

std::unique_ptr<Strategy> make_strategy(const std::string& name) {
    auto it = registry().find(name);
    if (it == registry().end()) throw Error(Errc::NotFound, "unknown strategy '" + name + "'");
    return it->second();
}

std::vector<std::string> strategy_names() {
    std::vector<std::string> names;
    for (const auto& [name, _] : registry()) names.push_back(name);
    return names;
}

}  // namespace gridex
