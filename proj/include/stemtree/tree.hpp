#pragma once

#include <span>
#include <string>
#include <variant>
#include <vector>

#include "stemtree/graph.hpp"

namespace stemtree {

/// A tree living inside a host graph: a connected acyclic subset of host
/// edges. Value type — exchanges build new states rather than mutating.
/// When the tree has no edges it consists of a single designated root.
class TreeState {
public:
    static TreeState single_vertex(const Graph& host, Vertex root);

    /// Validates that `edges` are host edges forming a tree on their
    /// endpoint set; throws GraphError otherwise.
    static TreeState from_edges(const Graph& host, std::span<const Edge> edges);
    static TreeState from_edges(const Graph& host, std::initializer_list<Edge> edges);

    const Graph& host() const { return *host_; }
    int vertex_count() const { return covered_count_; }
    int edge_count() const { return static_cast<int>(edges_.size()); }

    bool contains(Vertex v) const { return in_tree_[v] != 0; }
    int tree_degree(Vertex v) const { return deg_[v]; }
    bool has_edge(Vertex u, Vertex v) const;

    /// Tree edges in lexicographic order.
    const std::vector<Edge>& edges() const { return edges_; }

    /// Covered vertices in increasing order (materialized on call).
    std::vector<Vertex> covered() const;

    /// Root vertex; meaningful only for the edgeless single-vertex state.
    Vertex root() const { return root_; }

    /// Same covered set and same edge set (hosts assumed compatible).
    friend bool operator==(const TreeState& a, const TreeState& b);

private:
    TreeState() = default;
    const Graph* host_ = nullptr;
    std::vector<Edge> edges_;     // sorted
    std::vector<char> in_tree_;   // indexed by host vertex
    std::vector<int> deg_;        // tree degree per host vertex
    int covered_count_ = 0;
    Vertex root_ = 0;

    friend struct TreeStateBuilder;
};

/// Leaf/stem/core split of a tree. Sets are sorted vertex lists.
/// Conventions for degenerate stems (the definitions below are silent
/// there): a one-vertex stem counts as one stem leaf (it is the only
/// extremity); a two-vertex stem counts both; an empty stem counts zero.
struct StemDecomposition {
    std::vector<Vertex> leaves;       // degree-1 vertices of the tree
    std::vector<Vertex> stem;         // covered minus leaves
    std::vector<Vertex> stem_leaves;  // extremities of the stem subtree
    std::vector<Vertex> core;         // stem minus stem_leaves
    int stem_leaf_count = 0;
};

StemDecomposition decompose(const TreeState& tree);

/// True iff the stem of `tree` has at most l leaves (l >= 1).
bool has_l_ended_stem(const TreeState& tree, int l);

bool is_spanning(const TreeState& tree);

/// Why apply_exchange refused to produce a tree.
struct ExchangeRejected {
    std::string reason;
    std::vector<Edge> offending;
};

using ExchangeResult = std::variant<TreeState, ExchangeRejected>;

/// Rewrites the edge set: result = (tree_edges - remove) + add. Rejects
/// (never throws) when a removed edge is not a tree edge, an added edge is
/// not an unused host edge, or the resulting edge set is not a tree.
ExchangeResult apply_exchange(const TreeState& tree, std::span<const Edge> add,
                              std::span<const Edge> remove);

}  // namespace stemtree
