#include "gridex/grid.hpp"

#include <algorithm>
#include <cstdlib>
#include <deque>
#include <istream>
#include <sstream>
#include <unordered_map>
#include <unordered_set>

namespace gridex {

bool adjacent(Vertex u, Vertex v) {
    int dr = std::abs(u.row - v.row);
    int dc = std::abs(u.col - v.col);
    return dr + dc == 1;
}

EdgeId make_edge(Vertex u, Vertex v) {
    if (v < u) std::swap(u, v);
    return EdgeId{u, v};
}

std::vector<EdgeId> canonical_edges(const GridSpec& spec) {
    std::vector<EdgeId> edges;
    edges.reserve(edge_count(spec));
    for (int r = 1; r <= spec.rows; ++r) {
        for (int c = 1; c <= spec.cols; ++c) {
            if (c < spec.cols) edges.push_back({{r, c}, {r, c + 1}});
            if (r < spec.rows) edges.push_back({{r, c}, {r + 1, c}});
        }
    }
    return edges;
}

int edge_count(const GridSpec& spec) {
    return spec.rows * (spec.cols - 1) + (spec.rows - 1) * spec.cols;
}

Instance::Instance(GridSpec spec, Vertex start, Weight k)
    : spec_(spec), start_(start), k_(k), edges_(canonical_edges(spec)) {
    weights_.assign(edges_.size(), 1);
    orientations_.assign(edges_.size(), Orientation::Forward);
}

int Instance::edge_index(EdgeId e) const {
    // Canonical order groups edges by anchor vertex (row-major); within an
    // anchor the horizontal edge precedes the vertical one. Rows before the
    // anchor each hold (n-1) horizontals and n verticals.
    const int m = spec_.rows, n = spec_.cols;
    const int r = e.a.row, c = e.a.col;
    const bool horizontal = e.b.row == r;
    int idx = (r - 1) * (2 * n - 1);
    idx += (c - 1) * (r < m ? 2 : 1);
    if (!horizontal && c < n) idx += 1;
    return idx;
}

void Instance::orient(Vertex tail, Vertex head) {
    EdgeId e = make_edge(tail, head);
    set_orientation(e, tail == e.a ? Orientation::Forward : Orientation::Backward);
}

bool Instance::traversable(Vertex from, Vertex to) const {
    if (!adjacent(from, to)) return false;
    if (!spec_.directed) return true;
    return tail_of(make_edge(from, to)) == from;
}

namespace {

std::vector<std::string> tokenize(const std::string& line) {
    std::vector<std::string> tokens;
    std::istringstream ss(line);
    std::string tok;
    while (ss >> tok) tokens.push_back(tok);
    return tokens;
}

bool parse_int(const std::string& s, long long& out) {
    if (s.empty()) return false;
    size_t pos = 0;
    try {
        out = std::stoll(s, &pos);
    } catch (...) {
        return false;
    }
    return pos == s.size();
}

}  // namespace

Instance parse_instance(std::istream& in) {
    std::string line;
    int lineno = 0;
    bool have_grid = false, have_start = false;
    GridSpec spec;
    Vertex start;
    std::optional<Weight> k;
    struct EdgeDecl {
        Vertex u, v;
        Weight w;
        int line;
    };
    std::vector<EdgeDecl> decls;

    while (std::getline(in, line)) {
        ++lineno;
        if (auto hash = line.find('#'); hash != std::string::npos) line.resize(hash);
        auto tokens = tokenize(line);
        if (tokens.empty()) continue;
        const std::string& kw = tokens[0];
        if (kw == "grid") {
            long long m, n;
            if (tokens.size() != 4 || !parse_int(tokens[1], m) || !parse_int(tokens[2], n) ||
                (tokens[3] != "UNDIRECTED" && tokens[3] != "DIRECTED"))
                throw ParseError(ParseErrorCode::BadHeader, lineno, "malformed grid line");
            if (m < 1 || n < 1)
                throw ParseError(ParseErrorCode::BadHeader, lineno, "grid dimensions must be >= 1");
            spec = {static_cast<int>(m), static_cast<int>(n), tokens[3] == "DIRECTED"};
            have_grid = true;
        } else if (kw == "start") {
            long long r, c;
            if (tokens.size() != 3 || !parse_int(tokens[1], r) || !parse_int(tokens[2], c))
                throw ParseError(ParseErrorCode::BadHeader, lineno, "malformed start line");
            start = {static_cast<int>(r), static_cast<int>(c)};
            have_start = true;
        } else if (kw == "k") {
            long long v;
            if (tokens.size() != 2 || !parse_int(tokens[1], v))
                throw ParseError(ParseErrorCode::BadHeader, lineno, "malformed k line");
            k = v;
        } else if (kw == "edge") {
            long long r1, c1, r2, c2, w;
            if (tokens.size() != 6 || !parse_int(tokens[1], r1) || !parse_int(tokens[2], c1) ||
                !parse_int(tokens[3], r2) || !parse_int(tokens[4], c2) || !parse_int(tokens[5], w))
                throw ParseError(ParseErrorCode::BadHeader, lineno, "malformed edge line");
            decls.push_back({{static_cast<int>(r1), static_cast<int>(c1)},
                             {static_cast<int>(r2), static_cast<int>(c2)},
                             w,
                             lineno});
        } else {
            throw ParseError(ParseErrorCode::BadHeader, lineno, "unknown keyword '" + kw + "'");
        }
    }
    if (!have_grid) throw ParseError(ParseErrorCode::BadHeader, 0, "missing grid line");
    if (!have_start) throw ParseError(ParseErrorCode::BadHeader, 0, "missing start line");
    if (!spec.contains(start))
        throw ParseError(ParseErrorCode::StartOutOfBounds, 0, "start vertex out of bounds");

    Weight max_w = 1;
    Instance inst(spec, start, 1);
    std::vector<bool> declared(inst.edges().size(), false);
    for (const auto& d : decls) {
        if (!spec.contains(d.u) || !spec.contains(d.v))
            throw ParseError(ParseErrorCode::EndpointOutOfBounds, d.line, "edge endpoint out of bounds");
        if (!adjacent(d.u, d.v))
            throw ParseError(ParseErrorCode::NonAdjacentEndpoints, d.line, "endpoints not grid-adjacent");
        if (!spec.directed && !(d.u < d.v))
            throw ParseError(ParseErrorCode::BadHeader, d.line,
                             "undirected edge must list the canonical endpoint first");
        if (d.w <= 0) throw ParseError(ParseErrorCode::BadWeight, d.line, "edge weight must be positive");
        EdgeId e = make_edge(d.u, d.v);
        int idx = inst.edge_index(e);
        if (declared[idx]) throw ParseError(ParseErrorCode::DuplicateEdge, d.line, "edge declared twice");
        declared[idx] = true;
        inst.set_weight(e, d.w);
        if (spec.directed) inst.orient(d.u, d.v);
        max_w = std::max(max_w, d.w);
    }
    for (size_t i = 0; i < declared.size(); ++i) {
        if (!declared[i]) {
            const EdgeId& e = inst.edges()[i];
            std::ostringstream os;
            os << "edge (" << e.a.row << "," << e.a.col << ")-(" << e.b.row << "," << e.b.col
               << ") not declared";
            throw ParseError(ParseErrorCode::MissingEdge, 0, os.str());
        }
    }
    inst.set_k(k.value_or(max_w >= 2 ? max_w : 5));
    return inst;
}

Instance parse_instance(const std::string& text) {
    std::istringstream ss(text);
    return parse_instance(ss);
}

std::string serialize_instance(const Instance& inst) {
    std::ostringstream os;
    const GridSpec& spec = inst.spec();
    os << "grid " << spec.rows << " " << spec.cols << " "
       << (spec.directed ? "DIRECTED" : "UNDIRECTED") << "\n";
    os << "start " << inst.start().row << " " << inst.start().col << "\n";
    os << "k " << inst.k() << "\n";
    for (const EdgeId& e : inst.edges()) {
        Vertex u = e.a, v = e.b;
        if (spec.directed && inst.orientation(e) == Orientation::Backward) std::swap(u, v);
        os << "edge " << u.row << " " << u.col << " " << v.row << " " << v.col << " "
           << inst.weight(e) << "\n";
    }
    return os.str();
}

std::vector<Violation> validate_instance(const Instance& inst, bool onek_profile) {
    std::vector<Violation> out;
    const GridSpec& spec = inst.spec();
    if (spec.rows < 1 || spec.cols < 1) {
        out.push_back({ViolationCode::BadDimensions, "grid dimensions must be >= 1"});
        return out;
    }
    if (!spec.contains(inst.start()))
        out.push_back({ViolationCode::StartOutOfBounds, "start vertex out of bounds"});
    for (size_t i = 0; i < inst.edges().size(); ++i) {
        Weight w = inst.weights()[i];
        if (w <= 0) {
            out.push_back({ViolationCode::NonPositiveWeight, "non-positive weight"});
            break;
        }
    }
    if (onek_profile) {
        if (inst.k() < 5)
            out.push_back({ViolationCode::KBelowMinimum, "k < 5 under the {1,k} profile"});
        for (size_t i = 0; i < inst.edges().size(); ++i) {
            Weight w = inst.weights()[i];
            if (w != 1 && w != inst.k()) {
                out.push_back({ViolationCode::WeightOutsideAlphabet, "weight outside {1,k}"});
                break;
            }
        }
    }
    if (spec.directed && spec.contains(inst.start())) {
        // Necessary feasibility condition for GEP-DW: every vertex reachable
        // from the start in the oriented graph.
        std::vector<bool> seen(spec.vertex_count(), false);
        std::deque<Vertex> queue{inst.start()};
        seen[spec.vertex_index(inst.start())] = true;
        int reached = 1;
        const int dr[] = {1, 0, -1, 0};
        const int dc[] = {0, 1, 0, -1};
        while (!queue.empty()) {
            Vertex v = queue.front();
            queue.pop_front();
            for (int d = 0; d < 4; ++d) {
                Vertex u{v.row + dr[d], v.col + dc[d]};
                if (!spec.contains(u) || !inst.traversable(v, u)) continue;
                int idx = spec.vertex_index(u);
                if (!seen[idx]) {
                    seen[idx] = true;
                    ++reached;
                    queue.push_back(u);
                }
            }
        }
        if (reached != spec.vertex_count()) {
            out.push_back({ViolationCode::UnreachableVertices,
                           std::to_string(spec.vertex_count() - reached) +
                               " vertices unreachable from start"});
        }
    }
    return out;
}

const char* violation_name(ViolationCode code) {
    switch (code) {
        case ViolationCode::BadDimensions: return "BadDimensions";
        case ViolationCode::StartOutOfBounds: return "StartOutOfBounds";
        case ViolationCode::NonPositiveWeight: return "NonPositiveWeight";
        case ViolationCode::WeightOutsideAlphabet: return "WeightOutsideAlphabet";
        case ViolationCode::KBelowMinimum: return "KBelowMinimum";
        case ViolationCode::UnreachableVertices: return "UnreachableVertices";
    }
    return "?";
}

const char* parse_error_name(ParseErrorCode code) {
    switch (code) {
        case ParseErrorCode::BadHeader: return "BadHeader";
        case ParseErrorCode::MissingEdge: return "MissingEdge";
        case ParseErrorCode::DuplicateEdge: return "DuplicateEdge";
        case ParseErrorCode::NonAdjacentEndpoints: return "NonAdjacentEndpoints";
        case ParseErrorCode::BadWeight: return "BadWeight";
        case ParseErrorCode::StartOutOfBounds: return "StartOutOfBounds";
        case ParseErrorCode::OrientationOnUndirected: return "OrientationOnUndirected";
        case ParseErrorCode::EndpointOutOfBounds: return "EndpointOutOfBounds";
    }
    return "?";
}

}  // namespace gridex
