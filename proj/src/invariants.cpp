#include "stemtree/invariants.hpp"

#include <algorithm>
#include <bit>
#include <cstdint>
#include <numeric>

namespace stemtree {

Graph power_graph(const Graph& g, int k) {
    if (k < 1) throw GraphError("power_graph requires k >= 1");
    DistanceMatrix dm(g);
    std::vector<Edge> edges;
    int n = g.vertex_count();
    for (Vertex u = 0; u < n; ++u)
        for (Vertex v = u + 1; v < n; ++v)
            if (dm.reachable(u, v) && dm.at(u, v) <= k) edges.emplace_back(u, v);
    return Graph::from_edges(n, edges);
}

namespace {

// Bitset over vertices, as 64-bit words.
using Words = std::vector<std::uint64_t>;

int popcount(const Words& w) {
    int c = 0;
    for (std::uint64_t x : w) c += std::popcount(x);
    return c;
}

bool test_bit(const Words& w, int i) { return (w[i >> 6] >> (i & 63)) & 1; }
void set_bit(Words& w, int i) { w[i >> 6] |= std::uint64_t{1} << (i & 63); }
void clear_bit(Words& w, int i) { w[i >> 6] &= ~(std::uint64_t{1} << (i & 63)); }

struct MisSolver {
    std::vector<Words> adj;  // open neighborhoods in the power graph
    int n = 0;
    int words = 0;
    int best = 0;
    long long nodes = 0;
    long long limit = 0;

    void run(Words p, int current) {
        if (++nodes > limit) throw WorkLimitError("independent-set search exceeded work limit");
        int remaining = popcount(p);
        if (current + remaining <= best) return;
        // Pivot: densest vertex of the candidate set; an edgeless remainder
        // is all independent.
        int pivot = -1, pivot_deg = -1;
        for (int v = 0; v < n; ++v) {
            if (!test_bit(p, v)) continue;
            int d = 0;
            for (int w = 0; w < words; ++w) d += std::popcount(p[w] & adj[v][w]);
            if (d > pivot_deg) {
                pivot_deg = d;
                pivot = v;
            }
        }
        if (pivot < 0) {
            best = std::max(best, current);
            return;
        }
        if (pivot_deg == 0) {
            best = std::max(best, current + remaining);
            return;
        }
        Words with = p;
        clear_bit(with, pivot);
        for (int w = 0; w < words; ++w) with[w] &= ~adj[pivot][w];
        run(std::move(with), current + 1);
        clear_bit(p, pivot);
        run(std::move(p), current);
    }
};

}  // namespace

int alpha_m(const Graph& g, int m, long long work_limit) {
    if (m < 2) throw GraphError("alpha_m requires m >= 2");
    int n = g.vertex_count();
    if (n < 1) throw GraphError("alpha_m requires a non-empty graph");

    Graph power = power_graph(g, m - 1);
    MisSolver solver;
    solver.n = n;
    solver.words = (n + 63) / 64;
    solver.limit = work_limit;
    solver.adj.assign(n, Words(solver.words, 0));
    for (Vertex u = 0; u < n; ++u)
        for (Vertex v : power.neighbors(u)) set_bit(solver.adj[u], v);

    Words all(solver.words, 0);
    for (int v = 0; v < n; ++v) set_bit(all, v);
    solver.run(std::move(all), 0);
    return solver.best;
}

namespace {

struct SigmaSolver {
    // Vertices sorted by (degree, index); compat[i] marks, per sorted
    // position, which later positions stay pairwise-far.
    std::vector<int> order;        // sorted position -> vertex
    std::vector<long long> deg;    // by sorted position
    std::vector<Words> compat;     // by sorted position
    int n = 0;
    int words = 0;
    int p = 0;
    bool found = false;
    long long best = 0;
    long long nodes = 0;
    long long limit = 0;

    void run(const Words& cands, int first, int chosen, long long sum) {
        if (++nodes > limit) throw WorkLimitError("degree-sum search exceeded work limit");
        if (chosen == p) {
            if (!found || sum < best) {
                found = true;
                best = sum;
            }
            return;
        }
        int need = p - chosen;
        // Optimistic completion: the `need` smallest candidate degrees.
        std::vector<long long> smallest;
        for (int i = first; i < n && static_cast<int>(smallest.size()) < need; ++i)
            if (test_bit(cands, i)) smallest.push_back(deg[i]);
        if (static_cast<int>(smallest.size()) < need) return;
        long long optimistic = sum + std::accumulate(smallest.begin(), smallest.end(), 0LL);
        if (found && optimistic >= best) return;

        for (int i = first; i < n; ++i) {
            if (!test_bit(cands, i)) continue;
            Words next = cands;
            for (int w = 0; w < words; ++w) next[w] &= compat[i][w];
            run(next, i + 1, chosen + 1, sum + deg[i]);
        }
    }
};

}  // namespace

Sigma sigma_m_p(const Graph& g, int m, int p, long long work_limit) {
    if (m < 2) throw GraphError("sigma_m_p requires m >= 2");
    if (p < 1) throw GraphError("sigma_m_p requires p >= 1");
    int n = g.vertex_count();
    if (p > n) return Sigma::infinity();

    DistanceMatrix dm(g);
    SigmaSolver solver;
    solver.n = n;
    solver.words = (n + 63) / 64;
    solver.p = p;
    solver.limit = work_limit;
    solver.order.resize(n);
    std::iota(solver.order.begin(), solver.order.end(), 0);
    std::sort(solver.order.begin(), solver.order.end(), [&](Vertex a, Vertex b) {
        return std::pair(g.degree(a), a) < std::pair(g.degree(b), b);
    });
    solver.deg.resize(n);
    for (int i = 0; i < n; ++i) solver.deg[i] = g.degree(solver.order[i]);
    solver.compat.assign(n, Words(solver.words, 0));
    for (int i = 0; i < n; ++i)
        for (int j = i + 1; j < n; ++j)
            if (dm.at_least(solver.order[i], solver.order[j], m)) set_bit(solver.compat[i], j);

    Words all(solver.words, 0);
    for (int i = 0; i < n; ++i) set_bit(all, i);
    solver.run(all, 0, 0, 0);
    return solver.found ? Sigma::finite(solver.best) : Sigma::infinity();
}

std::vector<DistanceSet> enumerate_distance_sets(const Graph& g, int m, int p,
                                                 long long work_limit) {
    if (m < 2) throw GraphError("enumerate_distance_sets requires m >= 2");
    if (p < 1) throw GraphError("enumerate_distance_sets requires p >= 1");
    int n = g.vertex_count();
    DistanceMatrix dm(g);

    std::vector<DistanceSet> out;
    std::vector<Vertex> chosen;
    long long nodes = 0;
    // Plain lexicographic DFS, deliberately free of the degree pruning the
    // solver route uses.
    auto rec = [&](auto&& self, Vertex from) -> void {
        if (++nodes > work_limit)
            throw WorkLimitError("distance-set enumeration exceeded work limit");
        if (static_cast<int>(chosen.size()) == p) {
            long long sum = 0;
            for (Vertex v : chosen) sum += g.degree(v);
            out.push_back({chosen, m, sum});
            return;
        }
        int need = p - static_cast<int>(chosen.size());
        for (Vertex v = from; v <= n - need; ++v) {
            bool ok = true;
            for (Vertex c : chosen) {
                if (!dm.at_least(c, v, m)) {
                    ok = false;
                    break;
                }
            }
            if (!ok) continue;
            chosen.push_back(v);
            self(self, v + 1);
            chosen.pop_back();
        }
    };
    rec(rec, 0);
    return out;
}

ConditionReport evaluate_condition(const Graph& g, int t, int l, long long work_limit) {
    if (t < 3) throw GraphError("evaluate_condition requires t >= 3");
    if (l < 1) throw GraphError("evaluate_condition requires l >= 1");

    ConditionReport r;
    r.t = t;
    r.l = l;
    r.n = g.vertex_count();
    r.rhs = r.n - static_cast<long long>(l) * (t - 1) / (t - 2) - 1;
    r.sigma4 = sigma_m_p(g, 4, l + 1, work_limit);
    r.alpha4 = alpha_m(g, 4, work_limit);
    r.hypothesis_holds = r.sigma4.at_least(r.rhs);
    r.l_equals_t_minus_2 = (l == t - 2);
    r.k1t_free = !find_induced_star(g, t).has_value();
    r.connected = is_connected(g);
    return r;
}

}  // namespace stemtree
