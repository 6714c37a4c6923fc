#include "stemtree/stem_search.hpp"

#include <algorithm>
#include <chrono>
#include <numeric>
#include <set>

namespace stemtree {

namespace {

// ---------------------------------------------------------------------
// Exact solver: binary edge inclusion/exclusion over the lex-sorted edge
// list, include branch first, with a connectivity check before every
// exclusion so dead subtrees are never entered.
// ---------------------------------------------------------------------

// Union-find with union by size and O(1) rollback (no path compression).
struct RollbackDsu {
    std::vector<int> parent, size;
    struct Op {
        int child, root;
    };
    std::vector<Op> log;

    explicit RollbackDsu(int n) : parent(n), size(n, 1) {
        std::iota(parent.begin(), parent.end(), 0);
    }
    int find(int x) const {
        while (parent[x] != x) x = parent[x];
        return x;
    }
    bool unite(int a, int b) {
        a = find(a);
        b = find(b);
        if (a == b) return false;
        if (size[a] < size[b]) std::swap(a, b);
        parent[b] = a;
        size[a] += size[b];
        log.push_back({b, a});
        return true;
    }
    size_t mark() const { return log.size(); }
    void rollback(size_t m) {
        while (log.size() > m) {
            Op op = log.back();
            log.pop_back();
            size[op.root] -= size[op.child];
            parent[op.child] = op.child;
        }
    }
};

// Stem leaf count of a spanning tree on vertices 0..n-1 given as an edge
// list. Must agree with decompose(): one-vertex stem counts 1, empty stem
// (the 2-vertex tree) counts 0.
int spanning_stem_leaves(int n, const std::vector<Edge>& edges, std::vector<int>& deg,
                         std::vector<int>& sdeg) {
    if (n == 1) return 1;
    deg.assign(n, 0);
    for (const Edge& e : edges) {
        ++deg[e.u];
        ++deg[e.v];
    }
    int stem_size = 0;
    for (int v = 0; v < n; ++v)
        if (deg[v] >= 2) ++stem_size;
    if (stem_size == 0) return 0;
    if (stem_size == 1) return 1;
    sdeg.assign(n, 0);
    for (const Edge& e : edges)
        if (deg[e.u] >= 2 && deg[e.v] >= 2) {
            ++sdeg[e.u];
            ++sdeg[e.v];
        }
    int count = 0;
    for (int v = 0; v < n; ++v)
        if (deg[v] >= 2 && sdeg[v] == 1) ++count;
    return count;
}

struct ExactSearch {
    const Graph& g;
    int n;
    int l;
    long long limit;
    std::vector<Edge> edges;
    std::vector<Edge> chosen;
    RollbackDsu dsu;
    long long trees = 0;
    std::optional<std::vector<Edge>> found;
    bool limit_hit = false;
    std::vector<int> scratch_parent, scratch_deg, scratch_sdeg;

    ExactSearch(const Graph& graph, int leaves, long long budget)
        : g(graph), n(graph.vertex_count()), l(leaves), limit(budget), edges(graph.edges()),
          dsu(n) {
        chosen.reserve(n > 0 ? n - 1 : 0);
    }

    int scratch_find(int x) {
        while (scratch_parent[x] != x) {
            scratch_parent[x] = scratch_parent[scratch_parent[x]];
            x = scratch_parent[x];
        }
        return x;
    }

    // Can edges[from..] still merge all current components into one?
    bool can_connect(size_t from) {
        scratch_parent.resize(n);
        std::iota(scratch_parent.begin(), scratch_parent.end(), 0);
        for (size_t i = from; i < edges.size(); ++i) {
            int a = scratch_find(dsu.find(edges[i].u));
            int b = scratch_find(dsu.find(edges[i].v));
            if (a != b) scratch_parent[a] = b;
        }
        int root = scratch_find(dsu.find(0));
        for (int v = 1; v < n; ++v)
            if (scratch_find(dsu.find(v)) != root) return false;
        return true;
    }

    // Returns true when the search should stop (found or budget).
    bool run(size_t idx) {
        if (static_cast<int>(chosen.size()) == n - 1) {
            ++trees;
            if (spanning_stem_leaves(n, chosen, scratch_deg, scratch_sdeg) <= l) {
                found = chosen;
                return true;
            }
            if (trees >= limit) {
                limit_hit = true;
                return true;
            }
            return false;
        }
        if (idx == edges.size()) return false;
        if (edges.size() - idx < static_cast<size_t>(n - 1) - chosen.size()) return false;

        const Edge& e = edges[idx];
        if (dsu.find(e.u) == dsu.find(e.v)) return run(idx + 1);  // forced exclusion

        size_t m = dsu.mark();
        dsu.unite(e.u, e.v);
        chosen.push_back(e);
        if (run(idx + 1)) return true;
        chosen.pop_back();
        dsu.rollback(m);

        if (can_connect(idx + 1)) return run(idx + 1);
        return false;
    }
};

}  // namespace

SearchOutcome exact_solve(const Graph& g, int l, long long tree_limit) {
    if (l < 1) throw GraphError("exact_solve requires l >= 1");
    if (tree_limit < 1) throw GraphError("exact_solve requires a positive tree budget");
    if (!is_connected(g)) throw GraphError("exact_solve requires a connected graph");

    auto start = std::chrono::steady_clock::now();
    ExactSearch search(g, l, tree_limit);
    search.run(0);

    SearchOutcome out;
    out.stats.trees_enumerated = search.trees;
    if (search.found) {
        out.status = SearchStatus::found;
        out.tree = TreeState::from_edges(g, *search.found);
    } else if (search.limit_hit) {
        out.status = SearchStatus::limit;
    } else {
        out.status = SearchStatus::exhausted;
    }
    out.stats.elapsed_seconds =
        std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
    return out;
}

namespace {

// ---------------------------------------------------------------------
// Local search: the move engine. Probes are pure (they return the next
// state without mutating), scan candidates in lexicographic vertex order,
// and every candidate passes through apply_exchange, the l-ended-stem
// predicate, and a strict potential increase before being offered.
// ---------------------------------------------------------------------

struct MoveEngine {
    const Graph& g;
    int t;
    int l;
    int n;
    TreeState tree;
    StemDecomposition dec;
    std::vector<char> is_leaf, is_stem, in_tree;
    std::vector<std::vector<Vertex>> tadj;  // tree adjacency, sorted

    MoveEngine(const Graph& graph, int star, int leaves, TreeState initial)
        : g(graph), t(star), l(leaves), n(graph.vertex_count()), tree(std::move(initial)) {
        refresh();
    }

    void refresh() {
        dec = decompose(tree);
        is_leaf.assign(n, 0);
        is_stem.assign(n, 0);
        in_tree.assign(n, 0);
        for (Vertex v : dec.leaves) is_leaf[v] = 1;
        for (Vertex v : dec.stem) is_stem[v] = 1;
        for (Vertex v : tree.covered()) in_tree[v] = 1;
        tadj.assign(n, {});
        for (const Edge& e : tree.edges()) {
            tadj[e.u].push_back(e.v);
            tadj[e.v].push_back(e.u);
        }
        for (auto& nbrs : tadj) std::sort(nbrs.begin(), nbrs.end());
    }

    std::pair<int, int> phi() const {
        return {tree.vertex_count(), static_cast<int>(dec.leaves.size())};
    }

    Vertex support(Vertex leaf) const { return tadj[leaf][0]; }

    std::vector<Vertex> leaf_children(Vertex x) const {
        std::vector<Vertex> out;
        for (Vertex y : tadj[x])
            if (is_leaf[y]) out.push_back(y);
        return out;
    }

    // Leaves with at least one outside neighbor, paired with the smallest
    // such neighbor; ascending by leaf.
    std::vector<std::pair<Vertex, Vertex>> frontier_leaves() const {
        std::vector<std::pair<Vertex, Vertex>> out;
        for (Vertex v2 : dec.leaves)
            for (Vertex v1 : g.neighbors(v2))
                if (!in_tree[v1]) {
                    out.emplace_back(v2, v1);
                    break;
                }
        return out;
    }

    std::optional<TreeState> try_apply(const std::vector<Edge>& add,
                                       const std::vector<Edge>& remove) const {
        auto res = apply_exchange(tree, add, remove);
        auto* next = std::get_if<TreeState>(&res);
        if (!next) return std::nullopt;
        StemDecomposition nd = decompose(*next);
        if (nd.stem_leaf_count > l) return std::nullopt;
        std::pair<int, int> cur{tree.vertex_count(), static_cast<int>(dec.leaves.size())};
        std::pair<int, int> nxt{next->vertex_count(), static_cast<int>(nd.leaves.size())};
        if (nxt <= cur) return std::nullopt;
        return std::move(*next);
    }

    // Shortest path from `start` whose interior satisfies `interior`,
    // ending at the first vertex satisfying `target`; BFS over sorted
    // neighbor lists keeps it deterministic.
    template <class InteriorFn, class TargetFn>
    std::optional<std::vector<Vertex>> bfs_path(Vertex start, InteriorFn interior,
                                                TargetFn target) const {
        std::vector<Vertex> parent(n, -1);
        parent[start] = start;
        std::vector<Vertex> queue = {start};
        for (size_t head = 0; head < queue.size(); ++head) {
            Vertex u = queue[head];
            for (Vertex w : g.neighbors(u)) {
                if (parent[w] != -1) continue;
                if (target(w)) {
                    std::vector<Vertex> path = {w, u};
                    while (path.back() != start) path.push_back(parent[path.back()]);
                    std::reverse(path.begin(), path.end());
                    return path;
                }
                if (interior(w)) {
                    parent[w] = u;
                    queue.push_back(w);
                }
            }
        }
        return std::nullopt;
    }

    // Shared splice plumbing for M3/M4: add the path's missing edges,
    // re-hang every leaf lying on the path by dropping its stem-support
    // edge unless that edge is part of the path (or explicitly kept).
    void splice_sets(const std::vector<Vertex>& path, std::optional<Edge> keep,
                     std::vector<Edge>& add, std::vector<Edge>& remove) const {
        std::set<Edge> path_edges;
        for (size_t i = 0; i + 1 < path.size(); ++i) path_edges.insert(Edge(path[i], path[i + 1]));
        for (const Edge& e : path_edges)
            if (!tree.has_edge(e.u, e.v)) add.push_back(e);
        for (Vertex p : path) {
            if (!is_leaf[p]) continue;
            Edge sup(p, support(p));
            if (keep && sup == *keep) continue;
            if (path_edges.count(sup)) continue;
            remove.push_back(sup);
        }
    }

    // M1: attach one outside vertex.
    std::optional<TreeState> probe_m1() const {
        for (Vertex u = 0; u < n; ++u) {
            if (!in_tree[u]) continue;
            for (Vertex v : g.neighbors(u)) {
                if (in_tree[v]) continue;
                if (auto next = try_apply({Edge(u, v)}, {})) return next;
            }
        }
        return std::nullopt;
    }

    // M2: when every leaf hanging on a stem leaf x can be re-hung on some
    // other stem vertex, move them all; x itself becomes a leaf.
    std::optional<TreeState> probe_m2() const {
        for (Vertex x : dec.stem_leaves) {
            auto ys = leaf_children(x);
            if (ys.empty()) continue;
            std::vector<Edge> add, remove;
            bool ok = true;
            for (Vertex y : ys) {
                Vertex z = -1;
                for (Vertex cand : g.neighbors(y)) {
                    if (is_stem[cand] && cand != x) {
                        z = cand;
                        break;
                    }
                }
                if (z < 0) {
                    ok = false;
                    break;
                }
                add.emplace_back(y, z);
                remove.emplace_back(y, x);
            }
            if (!ok) continue;
            if (auto next = try_apply(add, remove)) return next;
        }
        return std::nullopt;
    }

    // M3: splice a path running from a leaf y of stem leaf x through other
    // leaves (or x itself) to an outside vertex; y keeps its edge to x.
    std::optional<TreeState> probe_m3() const {
        for (Vertex x : dec.stem_leaves) {
            for (Vertex y : leaf_children(x)) {
                auto path = bfs_path(
                    y, [&](Vertex w) { return (is_leaf[w] && w != y) || w == x; },
                    [&](Vertex w) { return !in_tree[w]; });
                if (!path) continue;
                std::vector<Edge> add, remove;
                splice_sets(*path, Edge(y, x), add, remove);
                if (auto next = try_apply(add, remove)) return next;
            }
        }
        return std::nullopt;
    }

    // M4: splice a path from the stem leaf x itself through leaves to an
    // outside vertex.
    std::optional<TreeState> probe_m4() const {
        for (Vertex x : dec.stem_leaves) {
            auto path = bfs_path(x, [&](Vertex w) { return is_leaf[w] != 0; },
                                 [&](Vertex w) { return !in_tree[w]; });
            if (!path) continue;
            std::vector<Edge> add, remove;
            splice_sets(*path, std::nullopt, add, remove);
            if (auto next = try_apply(add, remove)) return next;
        }
        return std::nullopt;
    }

    // Tree path between two stem vertices (stays inside the stem).
    std::vector<Edge> stem_tree_path(Vertex a, Vertex b) const {
        std::vector<Vertex> parent(n, -1);
        parent[a] = a;
        std::vector<Vertex> queue = {a};
        for (size_t head = 0; head < queue.size() && parent[b] == -1; ++head) {
            Vertex u = queue[head];
            for (Vertex w : tadj[u]) {
                if (parent[w] == -1) {
                    parent[w] = u;
                    queue.push_back(w);
                }
            }
        }
        std::vector<Edge> path;
        for (Vertex v = b; v != a; v = parent[v]) path.emplace_back(v, parent[v]);
        return path;
    }

    // M5: connect leaves of two different stem leaves by a path through
    // leaves/outside, creating one cycle through the stem; break the cycle
    // at a stem edge (branch-incident edges first) and extend by a
    // frontier edge when the path alone does not grow the tree.
    std::optional<TreeState> probe_m5() const {
        if (dec.stem_leaves.size() < 2) return std::nullopt;
        auto riders = frontier_leaves();
        std::vector<int> stem_deg(n, 0);
        for (Vertex v : dec.stem)
            for (Vertex w : tadj[v])
                if (is_stem[w]) ++stem_deg[v];

        for (size_t i = 0; i < dec.stem_leaves.size(); ++i) {
            for (size_t j = i + 1; j < dec.stem_leaves.size(); ++j) {
                Vertex xi = dec.stem_leaves[i], xj = dec.stem_leaves[j];
                for (Vertex y : leaf_children(xi)) {
                    auto path = bfs_path(
                        y,
                        [&](Vertex w) {
                            return (!in_tree[w] || is_leaf[w]) &&
                                   !(is_leaf[w] && support(w) == xj);
                        },
                        [&](Vertex w) { return is_leaf[w] && support(w) == xj && w != y; });
                    if (!path) continue;
                    Vertex z = path->back();
                    std::vector<Edge> add_base, remove_base;
                    std::set<Edge> path_edges;
                    for (size_t p = 0; p + 1 < path->size(); ++p)
                        path_edges.insert(Edge((*path)[p], (*path)[p + 1]));
                    for (const Edge& e : path_edges)
                        if (!tree.has_edge(e.u, e.v)) add_base.push_back(e);
                    for (Vertex p : *path) {
                        if (!is_leaf[p]) continue;
                        Edge sup(p, support(p));
                        if (sup == Edge(y, xi) || sup == Edge(z, xj)) continue;
                        if (path_edges.count(sup)) continue;
                        remove_base.push_back(sup);
                    }

                    auto cycle = stem_tree_path(xi, xj);
                    std::stable_sort(cycle.begin(), cycle.end(),
                                     [&](const Edge& a, const Edge& b) {
                                         bool ba = stem_deg[a.u] >= 3 || stem_deg[a.v] >= 3;
                                         bool bb = stem_deg[b.u] >= 3 || stem_deg[b.v] >= 3;
                                         return ba > bb;
                                     });
                    for (const Edge& e : cycle) {
                        std::vector<Edge> remove = remove_base;
                        remove.push_back(e);
                        if (auto next = try_apply(add_base, remove)) return next;
                        for (auto [v2, v1] : riders) {
                            std::vector<Edge> add = add_base;
                            add.emplace_back(v1, v2);
                            if (auto next = try_apply(add, remove)) return next;
                        }
                    }
                }
            }
        }
        return std::nullopt;
    }

    // M6: swaps around the stem core. Remove a core edge s-v3 and
    // reconnect either through a leaf adjacent to s or through a stem leaf
    // adjacent to s or v3, always riding a frontier edge to grow the tree.
    std::optional<TreeState> probe_m6() const {
        if (dec.core.size() < 2) return std::nullopt;
        auto riders = frontier_leaves();
        if (riders.empty()) return std::nullopt;
        std::vector<char> is_core(n, 0);
        for (Vertex v : dec.core) is_core[v] = 1;

        for (Vertex v3 : dec.core) {
            for (Vertex s : tadj[v3]) {
                if (!is_core[s]) continue;
                Edge cut(s, v3);
                for (auto [v2, v1] : riders) {
                    if (!g.has_edge(s, v2)) continue;
                    if (auto next = try_apply({Edge(s, v2), Edge(v1, v2)}, {cut})) return next;
                }
                for (Vertex xj : dec.stem_leaves) {
                    if (g.has_edge(xj, s) && !tree.has_edge(xj, s)) {
                        for (auto [v2, v1] : riders) {
                            if (auto next = try_apply({Edge(xj, s), Edge(v1, v2)}, {cut}))
                                return next;
                        }
                    }
                    if (g.has_edge(xj, v3) && !tree.has_edge(xj, v3)) {
                        for (auto [v2, v1] : riders) {
                            if (auto next = try_apply({Edge(xj, v3), Edge(v1, v2)}, {cut}))
                                return next;
                        }
                    }
                }
            }
        }
        return std::nullopt;
    }

    // M7: last-resort growth. Attach one outside vertex, then repair the
    // stem-leaf overflow with an exhaustive one- or two-edge swap whose
    // added edges stay inside the covered set. The structural moves above
    // are only guaranteed to make progress while the degree-sum condition
    // holds; this step keeps the solver a complete-in-practice decision
    // procedure on inputs that violate it (a spine sometimes has to be
    // rerouted around a high-degree vertex, which no single exchange
    // does). Every acceptance grows the tree, so termination is
    // unaffected. The two-swap scan is O(|E|^2 |T|^2) validations and
    // only runs at states where M1-M6 all failed.
    std::optional<TreeState> probe_m7() const {
        std::vector<Edge> tre = tree.edges();
        for (Vertex u = 0; u < n; ++u) {
            if (!in_tree[u]) continue;
            for (Vertex v : g.neighbors(u)) {
                if (in_tree[v]) continue;
                Edge grow(u, v);
                std::vector<Edge> spare;
                for (const Edge& e : g.edges()) {
                    if (e == grow || tree.has_edge(e.u, e.v)) continue;
                    bool cu = in_tree[e.u] || e.u == v;
                    bool cv = in_tree[e.v] || e.v == v;
                    if (cu && cv) spare.push_back(e);
                }
                for (const Edge& f : spare)
                    for (const Edge& e : tre)
                        if (auto next = try_apply({grow, f}, {e})) return next;
                for (size_t a = 0; a < spare.size(); ++a)
                    for (size_t b = a + 1; b < spare.size(); ++b)
                        for (size_t c = 0; c < tre.size(); ++c)
                            for (size_t d = c + 1; d < tre.size(); ++d)
                                if (auto next = try_apply({grow, spare[a], spare[b]},
                                                          {tre[c], tre[d]}))
                                    return next;
            }
        }
        return std::nullopt;
    }

    std::optional<TreeState> step() const {
        if (auto next = probe_m1()) return next;
        if (auto next = probe_m2()) return next;
        if (auto next = probe_m3()) return next;
        if (auto next = probe_m4()) return next;
        if (auto next = probe_m5()) return next;
        if (auto next = probe_m6()) return next;
        if (auto next = probe_m7()) return next;
        return std::nullopt;
    }
};

// Start tree: BFS from vertex 0, then repeatedly strip the leaves hanging
// on the highest stem leaf until the stem fits the budget; the main loop
// regrows through M1.
TreeState initial_tree(const Graph& g, int l) {
    int n = g.vertex_count();
    std::vector<Vertex> parent(n, -1);
    parent[0] = 0;
    std::vector<Vertex> queue = {0};
    std::vector<Edge> edges;
    for (size_t head = 0; head < queue.size(); ++head) {
        Vertex u = queue[head];
        for (Vertex w : g.neighbors(u)) {
            if (parent[w] != -1) continue;
            parent[w] = u;
            edges.emplace_back(u, w);
            queue.push_back(w);
        }
    }
    TreeState t = edges.empty() ? TreeState::single_vertex(g, 0) : TreeState::from_edges(g, edges);
    while (true) {
        StemDecomposition dec = decompose(t);
        if (dec.stem_leaf_count <= l) return t;
        Vertex x = dec.stem_leaves.back();
        std::vector<Edge> remove;
        std::vector<char> leaf(n, 0);
        for (Vertex v : dec.leaves) leaf[v] = 1;
        for (const Edge& e : t.edges()) {
            Vertex other = (e.u == x) ? e.v : (e.v == x ? e.u : -1);
            if (other >= 0 && leaf[other]) remove.push_back(e);
        }
        auto res = apply_exchange(t, {}, remove);
        auto* next = std::get_if<TreeState>(&res);
        if (!next) return TreeState::single_vertex(g, 0);
        t = std::move(*next);
    }
}

}  // namespace

Certificate extract_certificate(const Graph& g, int t, int l, const TreeState& stuck,
                                SearchStats* stats) {
    if (is_spanning(stuck)) throw ExtractionError("tree is spanning; nothing to certify");
    MoveEngine eng(g, t, l, stuck);
    if (eng.probe_m1()) throw ExtractionError("a move was still applicable: M1");
    if (eng.probe_m2()) throw ExtractionError("a move was still applicable: M2");

    int n = g.vertex_count();
    const StemDecomposition& dec = eng.dec;
    int stem_size = static_cast<int>(dec.stem.size());
    long long bound = static_cast<long long>(n) - stem_size - 1;

    // Distance-set attempt: v1 outside next to a leaf, one insulated leaf
    // y_i per stem leaf, all pairwise far apart.
    if (dec.stem_leaf_count == l) {
        Vertex v1 = -1;
        for (const auto& [leaf, out] : eng.frontier_leaves()) {
            (void)leaf;
            v1 = out;
            break;
        }
        std::vector<Vertex> ys;
        bool selection_ok = v1 >= 0;
        for (Vertex x : dec.stem_leaves) {
            if (!selection_ok) break;
            Vertex pick = -1;
            for (Vertex y : eng.leaf_children(x)) {
                bool insulated = true;
                for (Vertex w : g.neighbors(y)) {
                    if (!eng.in_tree[w] || (eng.is_stem[w] && w != x)) {
                        insulated = false;
                        break;
                    }
                }
                if (insulated) {
                    pick = y;
                    break;
                }
            }
            if (pick < 0)
                selection_ok = false;
            else
                ys.push_back(pick);
        }
        if (selection_ok) {
            std::vector<Vertex> witness = ys;
            witness.push_back(v1);
            std::sort(witness.begin(), witness.end());
            DistanceMatrix dm(g);
            bool far = true;
            for (size_t i = 0; i < witness.size() && far; ++i)
                for (size_t j = i + 1; j < witness.size(); ++j)
                    if (!dm.at_least(witness[i], witness[j], 4)) {
                        far = false;
                        break;
                    }
            long long degree_sum = 0;
            for (Vertex v : witness) degree_sum += g.degree(v);
            if (far && degree_sum <= bound) {
                if (stats) {
                    std::vector<char> in_y(n, 0);
                    for (Vertex y : ys) in_y[y] = 1;
                    stats->q = 0;
                    for (Vertex w : g.neighbors(v1))
                        if (eng.in_tree[w] && eng.is_leaf[w] && !in_y[w]) ++stats->q;
                }
                Certificate c;
                c.kind = CertificateKind::distance_set;
                c.witness_set = std::move(witness);
                c.degree_sum = degree_sum;
                c.stem_size = stem_size;
                c.bound = bound;
                c.stuck_tree = stuck;
                return c;
            }
        }
    }

    // The distance shape failed: either the star-freeness premise is
    // false, or we are in the excluded l = t-2 regime.
    if (auto star = find_induced_star(g, t)) {
        Certificate c;
        c.kind = CertificateKind::induced_star;
        c.star = *star;
        c.witness_set = star->leaves;
        c.witness_set.push_back(star->center);
        std::sort(c.witness_set.begin(), c.witness_set.end());
        c.stem_size = stem_size;
        c.bound = bound;
        c.stuck_tree = stuck;
        return c;
    }
    if (l == t - 2) {
        Certificate c;
        c.kind = CertificateKind::exception_case;
        c.stem_size = stem_size;
        c.bound = bound;
        c.stuck_tree = stuck;
        return c;
    }
    throw ExtractionError(
        "no certificate shape fits: distance-set selection failed, no induced star, l != t-2");
}

SearchOutcome local_search_solve(const Graph& g, int t, int l, long long move_budget) {
    if (t < 3) throw GraphError("local_search_solve requires t >= 3");
    if (l < 1) throw GraphError("local_search_solve requires l >= 1");
    if (move_budget < 0) throw GraphError("move budget must be non-negative");
    if (!is_connected(g)) throw GraphError("local_search_solve requires a connected graph");

    auto start = std::chrono::steady_clock::now();
    SearchOutcome out;
    auto finish = [&](SearchStatus status) -> SearchOutcome& {
        out.status = status;
        out.stats.elapsed_seconds =
            std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
        return out;
    };

    MoveEngine eng(g, t, l, initial_tree(g, l));
    out.stats.phi_trace.push_back(eng.phi());

    while (true) {
        if (is_spanning(eng.tree)) {
            out.tree = eng.tree;
            return finish(SearchStatus::found);
        }
        if (out.stats.moves_applied >= move_budget) return finish(SearchStatus::limit);
        auto next = eng.step();
        if (!next) break;
        eng.tree = std::move(*next);
        eng.refresh();
        ++out.stats.moves_applied;
        out.stats.phi_trace.push_back(eng.phi());
    }

    Certificate cert = extract_certificate(g, t, l, eng.tree, &out.stats);
    CheckResult check = validate_certificate(g, t, l, cert);
    if (!check.ok)
        throw ExtractionError("extracted certificate failed validation: " + check.failed_check);
    out.certificate = std::move(cert);
    return finish(SearchStatus::certified_fail);
}

CheckResult validate_certificate(const Graph& g, int t, int l, const Certificate& c) {
    auto fail = [](std::string name) { return CheckResult{false, std::move(name)}; };
    int n = g.vertex_count();

    switch (c.kind) {
        case CertificateKind::distance_set: {
            if (static_cast<int>(c.witness_set.size()) != l + 1) return fail("witness-size");
            for (Vertex v : c.witness_set)
                if (v < 0 || v >= n) return fail("witness-vertex-range");
            DistanceMatrix dm(g);
            for (size_t i = 0; i < c.witness_set.size(); ++i)
                for (size_t j = i + 1; j < c.witness_set.size(); ++j) {
                    if (c.witness_set[i] == c.witness_set[j]) return fail("witness-duplicate");
                    if (!dm.at_least(c.witness_set[i], c.witness_set[j], 4))
                        return fail("pairwise-distance");
                }
            long long sum = 0;
            for (Vertex v : c.witness_set) sum += g.degree(v);
            if (sum != c.degree_sum) return fail("degree-sum-mismatch");
            if (c.bound != static_cast<long long>(n) - c.stem_size - 1)
                return fail("bound-arithmetic");
            if (c.degree_sum > c.bound) return fail("degree-bound");
            if (c.stuck_tree) {
                StemDecomposition dec = decompose(*c.stuck_tree);
                if (static_cast<int>(dec.stem.size()) != c.stem_size)
                    return fail("stem-size-mismatch");
            }
            return {};
        }
        case CertificateKind::induced_star: {
            if (!c.star) return fail("star-not-induced/absent");
            const InducedStar& s = *c.star;
            if (static_cast<int>(s.leaves.size()) != t) return fail("star-size");
            if (s.center < 0 || s.center >= n) return fail("star-vertex-range");
            for (Vertex v : s.leaves) {
                if (v < 0 || v >= n) return fail("star-vertex-range");
                if (!g.has_edge(s.center, v)) return fail("star-not-induced/absent");
            }
            for (size_t i = 0; i < s.leaves.size(); ++i)
                for (size_t j = i + 1; j < s.leaves.size(); ++j) {
                    if (s.leaves[i] == s.leaves[j]) return fail("star-duplicate-leaf");
                    if (g.has_edge(s.leaves[i], s.leaves[j]))
                        return fail("star-not-induced/absent");
                }
            return {};
        }
        case CertificateKind::exception_case: {
            if (l != t - 2) return fail("exception-l-neq-t-2");
            return {};
        }
    }
    return fail("unknown-kind");
}

CheckResult verify_tree(const Graph& g, int l, const TreeState& tree) {
    auto fail = [](std::string name) { return CheckResult{false, std::move(name)}; };
    int n = g.vertex_count();
    for (const Edge& e : tree.edges())
        if (!g.has_edge(e.u, e.v)) return fail("edge-not-in-host");
    if (tree.vertex_count() != n) return fail("not-spanning");
    // |E| = |V| - 1 plus connectivity rules out cycles; both are recomputed
    // here instead of trusting the TreeState invariants.
    if (tree.edge_count() != tree.vertex_count() - 1) return fail("not-acyclic");
    {
        std::vector<std::vector<Vertex>> adj(n);
        for (const Edge& e : tree.edges()) {
            adj[e.u].push_back(e.v);
            adj[e.v].push_back(e.u);
        }
        auto covered = tree.covered();
        if (covered.empty()) return fail("not-connected");
        std::vector<char> seen(n, 0);
        std::vector<Vertex> stack = {covered[0]};
        seen[covered[0]] = 1;
        int visited = 1;
        while (!stack.empty()) {
            Vertex u = stack.back();
            stack.pop_back();
            for (Vertex w : adj[u])
                if (!seen[w]) {
                    seen[w] = 1;
                    ++visited;
                    stack.push_back(w);
                }
        }
        if (visited != tree.vertex_count()) return fail("not-connected");
    }
    if (l < 1) return fail("stem-leaves");
    if (decompose(tree).stem_leaf_count > l) return fail("stem-leaves");
    return {};
}

}  // namespace stemtree
