#pragma once

#include <cstdint>
#include <functional>
#include <iosfwd>
#include <optional>
#include <stdexcept>
#include <string>
#include <vector>

namespace gridex {

// 1-based grid coordinates, row 1 at the top.
struct Vertex {
    int row = 0;
    int col = 0;

    friend bool operator==(const Vertex&, const Vertex&) = default;
    friend auto operator<=>(const Vertex&, const Vertex&) = default;
};

struct GridSpec {
    int rows = 0;
    int cols = 0;
    bool directed = false;

    bool contains(Vertex v) const {
        return v.row >= 1 && v.row <= rows && v.col >= 1 && v.col <= cols;
    }
    int vertex_count() const { return rows * cols; }
    int vertex_index(Vertex v) const { return (v.row - 1) * cols + (v.col - 1); }
    Vertex vertex_at(int idx) const { return {idx / cols + 1, idx % cols + 1}; }

    friend bool operator==(const GridSpec&, const GridSpec&) = default;
};

// Undirected edge in canonical order: endpoints adjacent in the grid,
// `a` lexicographically smaller than `b` by (row, col).
struct EdgeId {
    Vertex a, b;

    friend bool operator==(const EdgeId&, const EdgeId&) = default;
    friend auto operator<=>(const EdgeId&, const EdgeId&) = default;
};

// Returns the canonical edge for an adjacent pair, whatever order given.
EdgeId make_edge(Vertex u, Vertex v);
bool adjacent(Vertex u, Vertex v);

// For directed instances: the single traversable direction of an edge.
// Forward means a -> b in canonical order.
enum class Orientation : std::uint8_t { Forward, Backward };

using Weight = long long;

// All grid edges, each once, sorted by (a.row, a.col, b.row, b.col).
std::vector<EdgeId> canonical_edges(const GridSpec& spec);
int edge_count(const GridSpec& spec);  // m(n-1) + (m-1)n

// Fully specified ground-truth instance. Weights (and orientations when
// directed) are stored in canonical_edges order.
class Instance {
public:
    Instance() = default;
    Instance(GridSpec spec, Vertex start, Weight k);

    const GridSpec& spec() const { return spec_; }
    Vertex start() const { return start_; }
    Weight k() const { return k_; }
    void set_k(Weight k) { k_ = k; }

    const std::vector<EdgeId>& edges() const { return edges_; }
    int edge_index(EdgeId e) const;

    Weight weight(EdgeId e) const { return weights_[edge_index(e)]; }
    void set_weight(EdgeId e, Weight w) { weights_[edge_index(e)] = w; }
    const std::vector<Weight>& weights() const { return weights_; }

    Orientation orientation(EdgeId e) const { return orientations_[edge_index(e)]; }
    void set_orientation(EdgeId e, Orientation o) { orientations_[edge_index(e)] = o; }
    // Convenience: orient the edge so travel goes from `tail` to `head`.
    void orient(Vertex tail, Vertex head);
    Vertex tail_of(EdgeId e) const { return orientation(e) == Orientation::Forward ? e.a : e.b; }
    Vertex head_of(EdgeId e) const { return orientation(e) == Orientation::Forward ? e.b : e.a; }
    // True if the instance permits moving from u to v over edge {u,v}.
    bool traversable(Vertex from, Vertex to) const;

    friend bool operator==(const Instance&, const Instance&) = default;

private:
    GridSpec spec_;
    Vertex start_{1, 1};
    Weight k_ = 5;
    std::vector<EdgeId> edges_;
    std::vector<Weight> weights_;
    std::vector<Orientation> orientations_;
};

enum class ParseErrorCode {
    BadHeader,
    MissingEdge,
    DuplicateEdge,
    NonAdjacentEndpoints,
    BadWeight,
    StartOutOfBounds,
    OrientationOnUndirected,
    EndpointOutOfBounds,
};

struct ParseError : std::runtime_error {
    ParseError(ParseErrorCode c, int ln, const std::string& msg)
        : std::runtime_error(msg), code(c), line(ln) {}
    ParseErrorCode code;
    int line;  // 1-based line number, 0 when not tied to a line
};

// Instance file format (see serialize_instance for the canonical form):
//   grid <m> <n> <UNDIRECTED|DIRECTED>
//   start <row> <col>
//   k <value>            (optional)
//   edge <r1> <c1> <r2> <c2> <weight>   one line per canonical edge
// '#' starts a comment, blank lines are ignored.
Instance parse_instance(std::istream& in);
Instance parse_instance(const std::string& text);
std::string serialize_instance(const Instance& inst);

enum class ViolationCode {
    BadDimensions,
    StartOutOfBounds,
    NonPositiveWeight,
    WeightOutsideAlphabet,
    KBelowMinimum,
    UnreachableVertices,
};

struct Violation {
    ViolationCode code;
    std::string detail;
};

// Empty result means valid. When `onek_profile` is set, additionally checks
// the {1,k} weight restriction with k >= 5. Directed instances are checked
// for reachability of every vertex from the start.
std::vector<Violation> validate_instance(const Instance& inst, bool onek_profile = false);

const char* violation_name(ViolationCode code);
const char* parse_error_name(ParseErrorCode code);

}  // namespace gridex

template <>
struct std::hash<gridex::Vertex> {
    size_t operator()(const gridex::Vertex& v) const noexcept {
        return std::hash<int>()(v.row * 131071 + v.col);
    }
};

template <>
struct std::hash<gridex::EdgeId> {
    size_t operator()(const gridex::EdgeId& e) const noexcept {
        size_t h1 = std::hash<gridex::Vertex>()(e.a);
        size_t h2 = std::hash<gridex::Vertex>()(e.b);
        return h1 * 1000003u ^ h2;
    }
};
