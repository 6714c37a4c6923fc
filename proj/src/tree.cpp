#include "stemtree/tree.hpp"

#include <algorithm>
#include <set>

namespace stemtree {

namespace {

// BFS over an edge list restricted to its own endpoints; true iff the
// endpoint set is connected by those edges.
bool edges_connected(int n, const std::vector<Edge>& edges, int covered_count) {
    if (edges.empty()) return covered_count <= 1;
    std::vector<std::vector<Vertex>> adj(n);
    for (const Edge& e : edges) {
        adj[e.u].push_back(e.v);
        adj[e.v].push_back(e.u);
    }
    std::vector<char> seen(n, 0);
    std::vector<Vertex> stack = {edges[0].u};
    seen[edges[0].u] = 1;
    int visited = 1;
    while (!stack.empty()) {
        Vertex u = stack.back();
        stack.pop_back();
        for (Vertex w : adj[u]) {
            if (!seen[w]) {
                seen[w] = 1;
                ++visited;
                stack.push_back(w);
            }
        }
    }
    return visited == covered_count;
}

}  // namespace

struct TreeStateBuilder {
    // Assembles a TreeState from a deduplicated sorted edge list, returning
    // an empty optional when the edges do not form a tree.
    static std::optional<TreeState> build(const Graph& host, std::vector<Edge> edges,
                                          Vertex fallback_root) {
        TreeState t;
        t.host_ = &host;
        int n = host.vertex_count();
        t.in_tree_.assign(n, 0);
        t.deg_.assign(n, 0);
        for (const Edge& e : edges) {
            if (!t.in_tree_[e.u]) {
                t.in_tree_[e.u] = 1;
                ++t.covered_count_;
            }
            if (!t.in_tree_[e.v]) {
                t.in_tree_[e.v] = 1;
                ++t.covered_count_;
            }
            ++t.deg_[e.u];
            ++t.deg_[e.v];
        }
        if (edges.empty()) {
            t.root_ = fallback_root;
            t.in_tree_[fallback_root] = 1;
            t.covered_count_ = 1;
        } else {
            t.root_ = edges[0].u;
        }
        if (static_cast<int>(edges.size()) != t.covered_count_ - 1) return std::nullopt;
        if (!edges_connected(n, edges, t.covered_count_)) return std::nullopt;
        t.edges_ = std::move(edges);
        return t;
    }
};

TreeState TreeState::single_vertex(const Graph& host, Vertex root) {
    if (root < 0 || root >= host.vertex_count())
        throw GraphError("tree root out of range: " + std::to_string(root));
    return *TreeStateBuilder::build(host, {}, root);
}

TreeState TreeState::from_edges(const Graph& host, std::span<const Edge> edges) {
    std::set<Edge> unique(edges.begin(), edges.end());
    if (unique.size() != edges.size()) throw GraphError("duplicate tree edge");
    for (const Edge& e : unique)
        if (!host.has_edge(e.u, e.v))
            throw GraphError("tree edge not in host: " + std::to_string(e.u) + " " +
                             std::to_string(e.v));
    auto t = TreeStateBuilder::build(host, std::vector<Edge>(unique.begin(), unique.end()), 0);
    if (!t) throw GraphError("edge set is not a tree");
    return *t;
}

TreeState TreeState::from_edges(const Graph& host, std::initializer_list<Edge> edges) {
    return from_edges(host, std::span<const Edge>(edges.begin(), edges.size()));
}

bool TreeState::has_edge(Vertex u, Vertex v) const {
    if (u == v) return false;
    return std::binary_search(edges_.begin(), edges_.end(), Edge(u, v));
}

std::vector<Vertex> TreeState::covered() const {
    std::vector<Vertex> out;
    out.reserve(covered_count_);
    for (Vertex v = 0; v < static_cast<Vertex>(in_tree_.size()); ++v)
        if (in_tree_[v]) out.push_back(v);
    return out;
}

bool operator==(const TreeState& a, const TreeState& b) {
    if (a.edges_ != b.edges_) return false;
    if (a.edges_.empty() && b.edges_.empty()) return a.root_ == b.root_;
    return true;
}

StemDecomposition decompose(const TreeState& tree) {
    StemDecomposition d;
    auto covered = tree.covered();
    for (Vertex v : covered) {
        if (tree.tree_degree(v) == 1)
            d.leaves.push_back(v);
        else
            d.stem.push_back(v);
    }
    // A single covered vertex has degree 0 and lands in `stem`, which is
    // what the one-vertex conventions below expect.
    if (d.stem.size() <= 1) {
        d.stem_leaves = d.stem;  // one extremity, or none for the empty stem
        d.stem_leaf_count = static_cast<int>(d.stem.size());
        return d;
    }
    // Degree within the stem-induced subtree: tree degree minus leaf
    // neighbors.
    for (Vertex v : d.stem) {
        int stem_deg = tree.tree_degree(v);
        for (const Edge& e : tree.edges()) {
            Vertex other;
            if (e.u == v)
                other = e.v;
            else if (e.v == v)
                other = e.u;
            else
                continue;
            if (tree.tree_degree(other) == 1) --stem_deg;
        }
        if (stem_deg <= 1)
            d.stem_leaves.push_back(v);
        else
            d.core.push_back(v);
    }
    d.stem_leaf_count = static_cast<int>(d.stem_leaves.size());
    return d;
}

bool has_l_ended_stem(const TreeState& tree, int l) {
    if (l < 1) throw GraphError("l must be >= 1");
    return decompose(tree).stem_leaf_count <= l;
}

bool is_spanning(const TreeState& tree) {
    return tree.vertex_count() == tree.host().vertex_count();
}

ExchangeResult apply_exchange(const TreeState& tree, std::span<const Edge> add,
                              std::span<const Edge> remove) {
    const Graph& host = tree.host();
    for (const Edge& e : remove)
        if (!tree.has_edge(e.u, e.v))
            return ExchangeRejected{"remove-not-in-tree", {e}};

    std::set<Edge> removed(remove.begin(), remove.end());
    std::set<Edge> next;
    for (const Edge& e : tree.edges())
        if (!removed.count(e)) next.insert(e);

    for (const Edge& e : add) {
        if (!host.has_edge(e.u, e.v)) return ExchangeRejected{"add-not-host-edge", {e}};
        if (tree.has_edge(e.u, e.v) && !removed.count(e))
            return ExchangeRejected{"add-already-in-tree", {e}};
        next.insert(e);
    }

    if (next.empty()) {
        if (tree.edge_count() == 0) return tree;  // identity on a single vertex
        std::vector<Edge> offending(remove.begin(), remove.end());
        return ExchangeRejected{"result-empty", offending};
    }

    auto result = TreeStateBuilder::build(host, std::vector<Edge>(next.begin(), next.end()),
                                          tree.root());
    if (!result) {
        std::vector<Edge> offending(add.begin(), add.end());
        offending.insert(offending.end(), remove.begin(), remove.end());
        return ExchangeRejected{"result-not-a-tree", offending};
    }
    return *result;
}

}  // namespace stemtree
