#include "stemtree/graph.hpp"

#include <algorithm>
#include <charconv>
#include <queue>
#include <set>
#include <sstream>

namespace stemtree {

Graph Graph::from_edges(int n, std::span<const Edge> edges) {
    if (n < 1) throw GraphError("vertex count must be positive");
    Graph g;
    g.n_ = n;
    g.adj_.assign(n, {});
    std::set<Edge> seen;
    for (const Edge& e : edges) {
        if (e.u < 0 || e.v >= n)
            throw GraphError("edge endpoint out of range: " + std::to_string(e.u) + " " +
                             std::to_string(e.v));
        if (e.u == e.v) throw GraphError("self-loop at vertex " + std::to_string(e.u));
        if (!seen.insert(e).second) continue;
        g.adj_[e.u].push_back(e.v);
        g.adj_[e.v].push_back(e.u);
    }
    for (auto& nbrs : g.adj_) std::sort(nbrs.begin(), nbrs.end());
    g.edge_count_ = static_cast<int>(seen.size());
    return g;
}

Graph Graph::from_edges(int n, std::initializer_list<Edge> edges) {
    return from_edges(n, std::span<const Edge>(edges.begin(), edges.size()));
}

bool Graph::has_edge(Vertex u, Vertex v) const {
    if (u < 0 || v < 0 || u >= n_ || v >= n_ || u == v) return false;
    const auto& nbrs = adj_[u];
    return std::binary_search(nbrs.begin(), nbrs.end(), v);
}

int Graph::max_degree() const {
    int d = 0;
    for (const auto& nbrs : adj_) d = std::max(d, static_cast<int>(nbrs.size()));
    return d;
}

std::vector<Edge> Graph::edges() const {
    std::vector<Edge> out;
    out.reserve(edge_count_);
    for (Vertex u = 0; u < n_; ++u)
        for (Vertex v : adj_[u])
            if (u < v) out.emplace_back(u, v);
    return out;
}

namespace {

// Splits into lines, tolerating CRLF; keeps empty lines so numbering matches.
std::vector<std::string_view> split_lines(std::string_view text) {
    std::vector<std::string_view> lines;
    size_t pos = 0;
    while (pos <= text.size()) {
        size_t nl = text.find('\n', pos);
        if (nl == std::string_view::npos) {
            lines.push_back(text.substr(pos));
            break;
        }
        std::string_view line = text.substr(pos, nl - pos);
        if (!line.empty() && line.back() == '\r') line.remove_suffix(1);
        lines.push_back(line);
        pos = nl + 1;
    }
    if (!lines.empty() && lines.back().empty()) lines.pop_back();
    return lines;
}

bool parse_int(std::string_view token, int& out) {
    auto [ptr, ec] = std::from_chars(token.data(), token.data() + token.size(), out);
    return ec == std::errc{} && ptr == token.data() + token.size();
}

std::vector<std::string_view> split_ws(std::string_view line) {
    std::vector<std::string_view> tokens;
    size_t i = 0;
    while (i < line.size()) {
        while (i < line.size() && (line[i] == ' ' || line[i] == '\t')) ++i;
        size_t start = i;
        while (i < line.size() && line[i] != ' ' && line[i] != '\t') ++i;
        if (i > start) tokens.push_back(line.substr(start, i - start));
    }
    return tokens;
}

}  // namespace

EdgeListGraph parse_edge_list(std::string_view text) {
    auto lines = split_lines(text);
    if (lines.empty()) throw ParseError("empty input", 0);

    auto header = split_ws(lines[0]);
    int n = 0, m = 0;
    if (header.size() != 2 || !parse_int(header[0], n) || !parse_int(header[1], m))
        throw ParseError("expected header \"n m\"", 1);
    if (n < 1) throw ParseError("vertex count must be positive", 1);
    if (m < 0) throw ParseError("negative edge count in header", 1);

    std::vector<Edge> edges;
    edges.reserve(m);
    int read = 0;
    for (size_t i = 1; i < lines.size() && read < m; ++i) {
        if (lines[i].empty()) continue;
        int line_no = static_cast<int>(i) + 1;
        auto tokens = split_ws(lines[i]);
        int u = 0, v = 0;
        if (tokens.size() != 2 || !parse_int(tokens[0], u) || !parse_int(tokens[1], v))
            throw ParseError("expected edge \"u v\"", line_no);
        if (u < 0 || u >= n || v < 0 || v >= n)
            throw ParseError("vertex index out of range", line_no);
        if (u == v) throw ParseError("self-loop", line_no);
        edges.emplace_back(u, v);
        ++read;
    }
    if (read < m)
        throw ParseError("expected " + std::to_string(m) + " edges, got " + std::to_string(read),
                         static_cast<int>(lines.size()));

    std::set<Edge> unique(edges.begin(), edges.end());
    EdgeListGraph result;
    result.duplicate_edges = static_cast<int>(edges.size() - unique.size());
    std::vector<Edge> deduped(unique.begin(), unique.end());
    result.graph = Graph::from_edges(n, deduped);
    return result;
}

std::string format_edge_list(const Graph& g) {
    std::ostringstream out;
    out << g.vertex_count() << ' ' << g.edge_count() << '\n';
    for (const Edge& e : g.edges()) out << e.u << ' ' << e.v << '\n';
    return out.str();
}

DistanceMatrix::DistanceMatrix(const Graph& g) : n_(g.vertex_count()) {
    d_.assign(static_cast<size_t>(n_) * n_, n_);
    std::vector<int> queue(n_);
    for (Vertex s = 0; s < n_; ++s) {
        int* row = d_.data() + static_cast<size_t>(s) * n_;
        row[s] = 0;
        int head = 0, tail = 0;
        queue[tail++] = s;
        while (head < tail) {
            Vertex u = queue[head++];
            for (Vertex w : g.neighbors(u)) {
                if (row[w] == n_) {
                    row[w] = row[u] + 1;
                    queue[tail++] = w;
                }
            }
        }
    }
}

bool is_connected(const Graph& g) {
    int n = g.vertex_count();
    if (n == 0) return false;
    std::vector<char> seen(n, 0);
    std::vector<Vertex> stack = {0};
    seen[0] = 1;
    int visited = 1;
    while (!stack.empty()) {
        Vertex u = stack.back();
        stack.pop_back();
        for (Vertex w : g.neighbors(u)) {
            if (!seen[w]) {
                seen[w] = 1;
                ++visited;
                stack.push_back(w);
            }
        }
    }
    return visited == n;
}

namespace {

// Lexicographic search for t pairwise non-adjacent vertices inside the
// sorted neighbor list of a fixed center.
bool find_independent_subset(const Graph& g, const std::vector<Vertex>& candidates, int t,
                             std::vector<Vertex>& picked, size_t from) {
    if (static_cast<int>(picked.size()) == t) return true;
    for (size_t i = from; i < candidates.size(); ++i) {
        Vertex c = candidates[i];
        if (candidates.size() - i < static_cast<size_t>(t) - picked.size()) return false;
        bool ok = true;
        for (Vertex p : picked) {
            if (g.has_edge(p, c)) {
                ok = false;
                break;
            }
        }
        if (!ok) continue;
        picked.push_back(c);
        if (find_independent_subset(g, candidates, t, picked, i + 1)) return true;
        picked.pop_back();
    }
    return false;
}

}  // namespace

std::optional<InducedStar> find_induced_star(const Graph& g, int t) {
    if (t < 3) throw GraphError("find_induced_star requires t >= 3");
    for (Vertex c = 0; c < g.vertex_count(); ++c) {
        if (g.degree(c) < t) continue;
        std::vector<Vertex> picked;
        picked.reserve(t);
        if (find_independent_subset(g, g.neighbors(c), t, picked, 0))
            return InducedStar{c, picked};
    }
    return std::nullopt;
}

}  // namespace stemtree
