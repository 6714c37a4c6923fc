#include "stemtree/json_io.hpp"

namespace stemtree {

using nlohmann::json;

std::string status_name(SearchStatus s) {
    switch (s) {
        case SearchStatus::found: return "found";
        case SearchStatus::certified_fail: return "certified_fail";
        case SearchStatus::exhausted: return "exhausted";
        case SearchStatus::limit: return "limit";
    }
    return "unknown";
}

std::string kind_name(CertificateKind k) {
    switch (k) {
        case CertificateKind::distance_set: return "distance_set";
        case CertificateKind::induced_star: return "induced_star";
        case CertificateKind::exception_case: return "exception_case";
    }
    return "unknown";
}

std::string solver_name(SolverChoice s) {
    switch (s) {
        case SolverChoice::exact: return "exact";
        case SolverChoice::local: return "local";
        case SolverChoice::both: return "both";
    }
    return "unknown";
}

std::string gate_name(GateResult g) {
    switch (g) {
        case GateResult::checked: return "checked";
        case GateResult::not_connected: return "not_connected";
        case GateResult::not_k1t_free: return "not_k1t_free";
        case GateResult::l_equals_t_minus_2: return "l_equals_t_minus_2";
        case GateResult::hypothesis_fails: return "hypothesis_fails";
    }
    return "unknown";
}

json to_json(const Sigma& s) {
    if (s.is_infinite()) return json("infinity");
    return json(s.value());
}

json to_json(const ConditionReport& r) {
    return json{
        {"t", r.t},
        {"l", r.l},
        {"n", r.n},
        {"sigma4", to_json(r.sigma4)},
        {"alpha4", r.alpha4},
        {"rhs", r.rhs},
        {"hypothesis_holds", r.hypothesis_holds},
        {"l_equals_t_minus_2", r.l_equals_t_minus_2},
        {"k1t_free", r.k1t_free},
        {"connected", r.connected},
    };
}

json to_json(const TreeState& t) {
    json edges = json::array();
    for (const Edge& e : t.edges()) edges.push_back(json::array({e.u, e.v}));
    return edges;
}

json to_json(const Certificate& c) {
    json j{
        {"kind", kind_name(c.kind)},
        {"witness_set", c.witness_set},
        {"degree_sum", c.degree_sum},
        {"stem_size", c.stem_size},
        {"bound", c.bound},
    };
    if (c.star) {
        j["star"] = json{{"center", c.star->center}, {"leaves", c.star->leaves}};
    }
    if (c.stuck_tree) j["stuck_tree"] = to_json(*c.stuck_tree);
    return j;
}

json to_json(const SearchOutcome& o) {
    json stats{
        {"trees_enumerated", o.stats.trees_enumerated},
        {"moves_applied", o.stats.moves_applied},
        {"elapsed_seconds", o.stats.elapsed_seconds},
        {"q", o.stats.q},
    };
    json trace = json::array();
    for (const auto& [order, leaves] : o.stats.phi_trace)
        trace.push_back(json::array({order, leaves}));
    stats["phi_trace"] = trace;

    json j{{"status", status_name(o.status)}, {"stats", stats}};
    if (o.tree) j["tree"] = to_json(*o.tree);
    if (o.certificate) j["certificate"] = to_json(*o.certificate);
    return j;
}

json to_json(const IdentityReport& r) {
    return json{
        {"ok", r.ok},
        {"failures", r.failures},
        {"n", r.n},
        {"l", r.l},
        {"sigma4", to_json(r.sigma4)},
        {"product_form", r.product_form},
        {"order_form", r.order_form},
        {"pendant_degree_sum", r.pendant_degree_sum},
        {"k1t_free", r.k1t_free},
        {"connected", r.connected},
        {"outside_stated_range", r.outside_stated_range},
    };
}

namespace {

json outcome_pair(const std::optional<SearchOutcome>& exact,
                  const std::optional<SearchOutcome>& local, json base) {
    if (exact) base["exact"] = to_json(*exact);
    if (local) base["local"] = to_json(*local);
    return base;
}

}  // namespace

json to_json(const SweepReport& r) {
    json j{
        {"t", r.t},
        {"l", r.l},
        {"solver", solver_name(r.solver)},
        {"total", r.total},
        {"skipped",
         json{
             {"not_connected", r.skipped_not_connected},
             {"not_k1t_free", r.skipped_not_k1t_free},
             {"l_equals_t_minus_2", r.skipped_l_equals_t_minus_2},
             {"hypothesis_fails", r.skipped_hypothesis_fails},
         }},
        {"checked", r.checked},
        {"found", r.found},
    };
    json cex = json::array();
    for (const Counterexample& c : r.counterexamples) {
        cex.push_back(outcome_pair(c.exact_outcome, c.local_outcome,
                                   json{{"line", c.line}, {"graph6", c.graph6}}));
    }
    j["counterexamples"] = cex;
    json errs = json::array();
    for (const SweepError& e : r.errors)
        errs.push_back(json{{"line", e.line}, {"message", e.message}});
    j["errors"] = errs;
    if (r.solver == SolverChoice::both) {
        j["agreement"] = json{{"agreements", r.agreements}, {"disagreements", r.disagreements}};
    }
    if (!r.per_instance.empty()) {
        json rows = json::array();
        for (const InstanceRecord& rec : r.per_instance) {
            rows.push_back(outcome_pair(
                rec.exact_outcome, rec.local_outcome,
                json{{"line", rec.line}, {"graph6", rec.graph6}, {"gate", gate_name(rec.gate)}}));
        }
        j["per_instance"] = rows;
    }
    return j;
}

json labeling_to_json(const LabeledGraph& lg) {
    json cliques = json::array();
    for (const auto& block : lg.cliques) cliques.push_back(block);
    return json{
        {"n", lg.graph.vertex_count()},
        {"hubs", lg.hubs},
        {"cliques", cliques},
        {"pendants", lg.pendants},
    };
}

}  // namespace stemtree
