#pragma once

#include <string>

#include "json.hpp"
#include "stemtree/extremal.hpp"
#include "stemtree/harness.hpp"
#include "stemtree/invariants.hpp"
#include "stemtree/stem_search.hpp"
#include "stemtree/tree.hpp"

namespace stemtree {

// All serializers use snake_case keys. Trees appear as sorted [u, v] edge
// pairs; a sigma value is either a number or the string "infinity".

std::string status_name(SearchStatus s);
std::string kind_name(CertificateKind k);
std::string solver_name(SolverChoice s);
std::string gate_name(GateResult g);

nlohmann::json to_json(const Sigma& s);
nlohmann::json to_json(const ConditionReport& r);
nlohmann::json to_json(const TreeState& t);
nlohmann::json to_json(const Certificate& c);
nlohmann::json to_json(const SearchOutcome& o);
nlohmann::json to_json(const IdentityReport& r);
nlohmann::json to_json(const SweepReport& r);

/// Role labels for a constructed family instance (hubs, cliques, pendants),
/// emitted next to the graph itself.
nlohmann::json labeling_to_json(const LabeledGraph& lg);

}  // namespace stemtree
