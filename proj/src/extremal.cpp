#include "stemtree/extremal.hpp"

#include <algorithm>

namespace stemtree {

namespace {

void add_clique(std::vector<Edge>& edges, const std::vector<Vertex>& vs) {
    for (size_t i = 0; i < vs.size(); ++i)
        for (size_t j = i + 1; j < vs.size(); ++j) edges.emplace_back(vs[i], vs[j]);
}

void join(std::vector<Edge>& edges, Vertex v, const std::vector<Vertex>& block) {
    for (Vertex b : block) edges.emplace_back(v, b);
}

}  // namespace

LabeledGraph build_g(const ExtremalParamsG& p) {
    if (p.t < 3 || p.k < 1 || p.m < 1)
        throw GraphError("build_g requires t >= 3, k >= 1, m >= 1");

    int blocks = p.k * (p.t - 2) + 1;
    int n = (p.k + 1) + blocks * (p.m + 1);
    LabeledGraph out;
    std::vector<Edge> edges;

    for (Vertex u = 0; u <= p.k; ++u) out.hubs.push_back(u);
    add_clique(edges, out.hubs);

    Vertex next = p.k + 1;
    for (int j = 0; j < blocks; ++j) {
        std::vector<Vertex> block;
        for (int i = 0; i < p.m; ++i) block.push_back(next++);
        Vertex pendant = next++;
        add_clique(edges, block);
        join(edges, pendant, block);
        // Blocks 0..t-3 belong to hub u_1, the next t-2 to u_2, ..., and the
        // final block to hub u_{k+1}.
        Vertex hub = (j == blocks - 1) ? p.k : j / (p.t - 2);
        join(edges, hub, block);
        out.cliques.push_back(std::move(block));
        out.pendants.push_back(pendant);
    }

    out.graph = Graph::from_edges(n, edges);
    return out;
}

LabeledGraph build_h(const ExtremalParamsH& p) {
    if (p.t < 3 || p.m < 1) throw GraphError("build_h requires t >= 3, m >= 1");

    int blocks = p.l() + 1;  // t - 1
    int n = 1 + blocks * (p.m + 1);
    LabeledGraph out;
    std::vector<Edge> edges;
    out.hubs.push_back(0);  // w

    Vertex next = 1;
    for (int j = 0; j < blocks; ++j) {
        std::vector<Vertex> block;
        for (int i = 0; i < p.m; ++i) block.push_back(next++);
        Vertex pendant = next++;
        add_clique(edges, block);
        join(edges, pendant, block);
        join(edges, 0, block);
        out.cliques.push_back(std::move(block));
        out.pendants.push_back(pendant);
    }

    out.graph = Graph::from_edges(n, edges);
    return out;
}

namespace {

IdentityReport check_family(const LabeledGraph& built, int t, int l, long long offset,
                            bool outside_range) {
    IdentityReport r;
    r.n = built.graph.vertex_count();
    r.l = l;
    r.outside_stated_range = outside_range;

    auto fail = [&r](const std::string& name) { r.failures.push_back(name); };

    long long blocks = static_cast<long long>(built.cliques.size());
    long long m = built.cliques.empty() ? 0 : static_cast<long long>(built.cliques[0].size());
    r.product_form = blocks * m;
    r.order_form = r.n - static_cast<long long>(l) * (t - 1) / (t - 2) - offset;

    r.sigma4 = sigma_m_p(built.graph, 4, l + 1);
    for (Vertex v : built.pendants) r.pendant_degree_sum += built.graph.degree(v);

    if (static_cast<long long>(built.pendants.size()) != l + 1)
        fail("pendant-count = l+1");
    if (r.sigma4.is_infinite() || r.sigma4.value() != r.product_form)
        fail("sigma4 = blocks*m");
    if (r.product_form != r.order_form) fail("blocks*m = order-form");
    if (r.pendant_degree_sum != r.product_form) fail("pendant-degree-sum = blocks*m");

    // The optimum must be attained at the pendant set itself.
    DistanceMatrix dm(built.graph);
    bool pendants_far = true;
    for (size_t i = 0; i < built.pendants.size() && pendants_far; ++i)
        for (size_t j = i + 1; j < built.pendants.size(); ++j)
            if (!dm.at_least(built.pendants[i], built.pendants[j], 4)) {
                pendants_far = false;
                break;
            }
    if (!pendants_far) fail("pendants pairwise distance >= 4");

    r.k1t_free = !find_induced_star(built.graph, t).has_value();
    if (!r.k1t_free) fail("K_{1,t}-free");
    r.connected = is_connected(built.graph);
    if (!r.connected) fail("connected");

    r.ok = r.failures.empty();
    return r;
}

}  // namespace

IdentityReport check_identities_g(const ExtremalParamsG& p) {
    LabeledGraph built = build_g(p);
    IdentityReport r = check_family(built, p.t, p.l(), 2, p.k == 1);
    long long expected_n = (p.k + 1) + static_cast<long long>(p.k * (p.t - 2) + 1) * (p.m + 1);
    if (r.n != expected_n) r.failures.push_back("order formula");
    r.ok = r.failures.empty();
    return r;
}

IdentityReport check_identities_h(const ExtremalParamsH& p) {
    LabeledGraph built = build_h(p);
    IdentityReport r = check_family(built, p.t, p.l(), 1, false);
    long long expected_n = 1 + static_cast<long long>(p.l() + 1) * (p.m + 1);
    if (r.n != expected_n) r.failures.push_back("order formula");
    r.ok = r.failures.empty();
    return r;
}

}  // namespace stemtree
