#pragma once

#include <string>
#include <vector>

#include "stemtree/graph.hpp"
#include "stemtree/invariants.hpp"

namespace stemtree {

/// Parameters of the G(t,k,m) family: a (k+1)-clique of hubs, k(t-2)+1
/// m-cliques partitioned among the first k hubs (the last clique belongs
/// to hub k+1), and one pendant-attachment vertex per clique. The target
/// stem-leaf budget is l = k(t-2).
struct ExtremalParamsG {
    int t = 3;  // >= 3
    int k = 1;  // >= 1; the sharpness argument needs k >= 2
    int m = 1;  // >= 1
    int l() const { return k * (t - 2); }
};

/// Parameters of the H(t,m) family: center w joined to l+1 = t-1 m-cliques,
/// each clique carrying one pendant-attachment vertex; l = t-2.
struct ExtremalParamsH {
    int t = 3;  // >= 3
    int m = 1;  // >= 1
    int l() const { return t - 2; }
};

/// A constructed graph plus the role of every special vertex, so callers
/// never depend on the numbering scheme.
struct LabeledGraph {
    Graph graph;
    std::vector<Vertex> hubs;                  // u_1..u_{k+1}, or {w}
    std::vector<std::vector<Vertex>> cliques;  // D_1, D_2, ... blocks
    std::vector<Vertex> pendants;              // v_j, aligned with cliques
};

LabeledGraph build_g(const ExtremalParamsG& p);
LabeledGraph build_h(const ExtremalParamsH& p);

/// Result of re-deriving the family's closed forms from the built graph.
struct IdentityReport {
    bool ok = false;
    std::vector<std::string> failures;  // named failed equations, empty when ok
    int n = 0;
    int l = 0;
    Sigma sigma4;                  // computed sigma^4_{l+1}
    long long product_form = 0;    // (#cliques) * m
    long long order_form = 0;      // |G| - floor(l(t-1)/(t-2)) - offset
    long long pendant_degree_sum = 0;
    bool k1t_free = false;
    bool connected = false;
    bool outside_stated_range = false;  // k = 1 instances of the G family
};

/// Builds G(p) and checks sigma^4_{l+1} = (k(t-2)+1)m = |G| - floor(.) - 2,
/// that the optimum is attained at the pendants, K_{1,t}-freeness, and
/// connectivity. Failures are named, not thrown.
IdentityReport check_identities_g(const ExtremalParamsG& p);

/// Same for H: sigma^4_{l+1} = (l+1)m = |H| - floor(.) - 1.
IdentityReport check_identities_h(const ExtremalParamsH& p);

}  // namespace stemtree
