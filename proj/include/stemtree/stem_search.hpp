#pragma once

#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "stemtree/graph.hpp"
#include "stemtree/tree.hpp"

namespace stemtree {

enum class SearchStatus { found, certified_fail, exhausted, limit };

enum class CertificateKind { distance_set, induced_star, exception_case };

/// Machine-checkable witness explaining a failed local search. A
/// distance_set certificate exhibits l+1 vertices pairwise at distance
/// >= 4 whose total degree is at most |G| - |stem| - 1, which caps
/// sigma^4_{l+1}(G) from above. An induced_star certificate shows the
/// K_{1,t}-freeness premise was false. exception_case marks the excluded
/// l = t-2 regime.
struct Certificate {
    CertificateKind kind = CertificateKind::distance_set;
    std::vector<Vertex> witness_set;  // distance_set: {v1, y_1..y_l}, sorted
    long long degree_sum = 0;
    int stem_size = 0;
    long long bound = 0;  // |G| - stem_size - 1
    std::optional<InducedStar> star;
    std::optional<TreeState> stuck_tree;
};

struct SearchStats {
    long long trees_enumerated = 0;
    long long moves_applied = 0;
    double elapsed_seconds = 0.0;
    // |N_G(v1) ∩ (Leaf(T) - Y)| observed during certificate extraction;
    // -1 when no extraction happened.
    long long q = -1;
    // Potential (tree order, leaf count) after the initial tree and after
    // every applied move; strictly lexicographically increasing.
    std::vector<std::pair<int, int>> phi_trace;
};

struct SearchOutcome {
    SearchStatus status = SearchStatus::limit;
    std::optional<TreeState> tree;          // status == found
    std::optional<Certificate> certificate;  // status == certified_fail
    SearchStats stats;
};

inline constexpr long long kDefaultTreeLimit = 10'000'000;
inline constexpr long long kDefaultMoveBudget = 1'000'000;

/// Ground truth: enumerates spanning trees (edge inclusion/exclusion with
/// connectivity pruning, lexicographic include-first order) and stops at
/// the first one whose stem has at most l leaves. `exhausted` after a full
/// enumeration without a hit; `limit` when tree_limit trees were built
/// first. Requires g connected.
SearchOutcome exact_solve(const Graph& g, int l, long long tree_limit = kDefaultTreeLimit);

/// Local search. Maintains a tree with l-ended stem and applies the first
/// applicable move from the ordered set M1..M7 (extend; relocate leaves;
/// splice paths onto a stem leaf's leaf or onto the stem leaf itself;
/// leaf-to-leaf cycle swap; core edge swaps; last-resort grow-and-repair),
/// each validated through apply_exchange plus the stem predicate and
/// required to raise the potential. When no move applies to a
/// non-spanning tree, extracts a failure certificate. Requires g
/// connected and t >= 3.
SearchOutcome local_search_solve(const Graph& g, int t, int l,
                                 long long move_budget = kDefaultMoveBudget);

/// Extraction error: the claimed stuck state still had an applicable move,
/// or no certificate shape fits (a diagnostic, not an assertion).
class ExtractionError : public std::runtime_error {
public:
    explicit ExtractionError(const std::string& what) : std::runtime_error(what) {}
};

/// Builds a failure certificate from a stuck tree: picks the outside
/// vertex v1 next to a leaf, one far leaf y_i per stem leaf, and tries the
/// distance-set shape first; falls back to an induced-star search, then to
/// exception_case when l = t-2. Throws ExtractionError when a move was
/// still applicable or nothing fits.
Certificate extract_certificate(const Graph& g, int t, int l, const TreeState& stuck,
                                SearchStats* stats = nullptr);

/// Outcome of an independent re-check; `failed_check` names the first
/// property that did not hold.
struct CheckResult {
    bool ok = true;
    std::string failed_check;
};

CheckResult validate_certificate(const Graph& g, int t, int l, const Certificate& c);

/// True iff `tree` uses only host edges, spans g, is a tree, and its stem
/// has at most l leaves.
CheckResult verify_tree(const Graph& g, int l, const TreeState& tree);

}  // namespace stemtree
