#pragma once

#include <optional>
#include <span>
#include <stdexcept>
#include <string>
#include <string_view>
#include <vector>

namespace stemtree {

using Vertex = int;

/// Undirected edge, stored with u < v.
struct Edge {
    Vertex u = 0;
    Vertex v = 0;

    Edge() = default;
    Edge(Vertex a, Vertex b) : u(a < b ? a : b), v(a < b ? b : a) {}

    friend bool operator==(const Edge&, const Edge&) = default;
    friend auto operator<=>(const Edge&, const Edge&) = default;
};

class GraphError : public std::runtime_error {
public:
    explicit GraphError(const std::string& what) : std::runtime_error(what) {}
};

/// Parse failure for text inputs; `line` is 1-based, 0 when not line-specific.
class ParseError : public std::runtime_error {
public:
    ParseError(const std::string& what, int line_no = 0)
        : std::runtime_error(what), line(line_no) {}
    int line;
};

/// Immutable simple undirected graph on vertices 0..n-1 with sorted
/// adjacency lists. No self-loops, no parallel edges.
class Graph {
public:
    /// Zero-vertex placeholder so aggregates can hold a Graph before
    /// assignment; every factory below requires n >= 1.
    Graph() = default;

    /// Builds a graph from an edge list. Throws GraphError on out-of-range
    /// vertices or self-loops; duplicate edges are collapsed silently
    /// (parse_edge_list reports them, construction just dedupes).
    static Graph from_edges(int n, std::span<const Edge> edges);
    static Graph from_edges(int n, std::initializer_list<Edge> edges);

    int vertex_count() const { return n_; }
    int edge_count() const { return edge_count_; }

    const std::vector<Vertex>& neighbors(Vertex v) const { return adj_[v]; }
    int degree(Vertex v) const { return static_cast<int>(adj_[v].size()); }
    bool has_edge(Vertex u, Vertex v) const;
    int max_degree() const;

    /// All edges in lexicographic order.
    std::vector<Edge> edges() const;

private:
    int n_ = 0;
    int edge_count_ = 0;
    std::vector<std::vector<Vertex>> adj_;
};

/// Result of edge-list parsing; duplicate edges in the input are collapsed
/// and counted rather than rejected.
struct EdgeListGraph {
    Graph graph;
    int duplicate_edges = 0;
};

/// Parses the "n m" header plus m lines "u v". Throws ParseError with the
/// offending line number on malformed input, out-of-range vertex indices,
/// or self-loops. Tolerates CRLF and trailing blank lines.
EdgeListGraph parse_edge_list(std::string_view text);

/// Serializes a graph in the same edge-list format (header plus one line
/// per edge, lexicographic order).
std::string format_edge_list(const Graph& g);

/// Decodes one graph6 line (optionally prefixed with ">>graph6<<").
/// Throws ParseError on invalid characters, bad length, or nonzero padding.
Graph parse_graph6(std::string_view line);

/// Encodes a graph in graph6 format (bit-exact, no header, no newline).
std::string encode_graph6(const Graph& g);

/// All-pairs hop distances computed by BFS from every vertex. Unreachable
/// pairs carry the sentinel value n (strictly above any achievable
/// distance); threshold queries must go through at_least so that
/// unreachable counts as "at least m" for every m.
class DistanceMatrix {
public:
    explicit DistanceMatrix(const Graph& g);

    int size() const { return n_; }
    int unreachable() const { return n_; }
    int at(Vertex u, Vertex v) const { return d_[static_cast<size_t>(u) * n_ + v]; }
    bool reachable(Vertex u, Vertex v) const { return at(u, v) < n_; }

    /// True when d(u,v) >= m, treating unreachable as +infinity.
    bool at_least(Vertex u, Vertex v, int m) const {
        int d = at(u, v);
        return d >= m || d == n_;
    }

private:
    int n_;
    std::vector<int> d_;
};

/// True iff every vertex is reachable from vertex 0 (n >= 1).
bool is_connected(const Graph& g);

/// An induced K_{1,t} witness: `leaves` are t pairwise non-adjacent
/// neighbors of `center`.
struct InducedStar {
    Vertex center = 0;
    std::vector<Vertex> leaves;
};

/// Finds an induced K_{1,t}, scanning centers in increasing vertex order
/// and neighbor t-subsets lexicographically; returns the first witness, or
/// nullopt when the graph is K_{1,t}-free. Requires t >= 3.
std::optional<InducedStar> find_induced_star(const Graph& g, int t);

}  // namespace stemtree
