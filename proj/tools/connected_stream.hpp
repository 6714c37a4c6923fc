// Exhaustive connected simple graphs, one isomorphism class each, built by
// vertex augmentation with canonical-form deduplication. The canonical form
// is exact: color refinement plus full individualization branching, taking
// the lexicographically smallest graph6 encoding over all branches. Sized
// for n <= 9 or so; everything is brute-force on purpose.

#pragma once

#include <algorithm>
#include <map>
#include <set>
#include <string>
#include <vector>

#include "stemtree/graph.hpp"

namespace stemtree::connstream {

namespace detail {

// Stable partition refinement: a vertex's signature is its own color
// followed by the sorted colors of its neighbors; new colors are dense
// ranks of the sorted distinct signatures. Label-independent by
// construction, so isomorphic graphs refine identically.
inline void refine(const Graph& g, std::vector<int>& color) {
    const int n = g.vertex_count();
    while (true) {
        std::vector<std::vector<int>> sig(n);
        for (Vertex v = 0; v < n; ++v) {
            sig[v].push_back(color[v]);
            std::vector<int> around;
            for (Vertex w : g.neighbors(v)) around.push_back(color[w]);
            std::sort(around.begin(), around.end());
            sig[v].insert(sig[v].end(), around.begin(), around.end());
        }
        std::map<std::vector<int>, int> rank;
        for (Vertex v = 0; v < n; ++v) rank.emplace(sig[v], 0);
        int next = 0;
        for (auto& [s, r] : rank) r = next++;
        bool changed = false;
        for (Vertex v = 0; v < n; ++v) {
            int c = rank[sig[v]];
            if (c != color[v]) changed = true;
            color[v] = c;
        }
        if (!changed) break;
    }
}

inline void canon_rec(const Graph& g, std::vector<int> color, std::string& best) {
    const int n = g.vertex_count();
    refine(g, color);
    // smallest color owned by two or more vertices, if any
    std::vector<int> count(n + 1, 0);
    for (Vertex v = 0; v < n; ++v) ++count[color[v]];
    int split = -1;
    for (int c = 0; c <= n; ++c) {
        if (count[c] >= 2) {
            split = c;
            break;
        }
    }
    if (split < 0) {
        // discrete: color is a permutation; relabel and encode
        std::vector<Edge> edges;
        for (Vertex v = 0; v < n; ++v)
            for (Vertex w : g.neighbors(v))
                if (v < w) edges.emplace_back(color[v], color[w]);
        std::string s = encode_graph6(Graph::from_edges(n, edges));
        if (best.empty() || s < best) best = s;
        return;
    }
    for (Vertex v = 0; v < n; ++v) {
        if (color[v] != split) continue;
        std::vector<int> child = color;
        child[v] = n;  // fresh color; refine re-densifies
        canon_rec(g, std::move(child), best);
    }
}

}  // namespace detail

/// Canonical graph6 line for g's isomorphism class.
inline std::string canonical_graph6(const Graph& g) {
    std::string best;
    detail::canon_rec(g, std::vector<int>(g.vertex_count(), 0), best);
    return best;
}

/// All connected simple graphs on exactly n vertices, one canonical graph6
/// line per isomorphism class, sorted. Grows level by level: every
/// connected graph on n vertices arises from a connected graph on n-1
/// vertices by adding one vertex joined to a nonempty neighbor subset.
inline std::vector<std::string> connected_graphs(int n) {
    std::vector<std::string> level{canonical_graph6(Graph::from_edges(1, {}))};
    for (int size = 2; size <= n; ++size) {
        std::set<std::string> next;
        for (const std::string& line : level) {
            Graph parent = parse_graph6(line);
            std::vector<Edge> base = parent.edges();
            for (unsigned mask = 1; mask < (1u << (size - 1)); ++mask) {
                std::vector<Edge> edges = base;
                for (int i = 0; i < size - 1; ++i)
                    if (mask & (1u << i)) edges.emplace_back(i, size - 1);
                next.insert(canonical_graph6(Graph::from_edges(size, edges)));
            }
        }
        level.assign(next.begin(), next.end());
    }
    return level;
}

}  // namespace stemtree::connstream
