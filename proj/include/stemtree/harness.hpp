#pragma once

#include <cstdint>
#include <iosfwd>
#include <optional>
#include <string>
#include <vector>

#include "stemtree/graph.hpp"
#include "stemtree/invariants.hpp"
#include "stemtree/stem_search.hpp"

namespace stemtree {

enum class SolverChoice { exact, local, both };

struct SweepOptions {
    int t = 3;
    int l = 2;
    SolverChoice solver = SolverChoice::exact;
    int jobs = 1;
    long long tree_limit = kDefaultTreeLimit;
    long long move_budget = kDefaultMoveBudget;
    long long work_limit = kDefaultWorkLimit;
    bool per_instance = false;
};

/// Why an input graph never reached a solver. `checked` means it passed
/// every gate; the other values name the first gate that failed, in the
/// fixed order connectivity, K_{1,t}-freeness, l != t-2, degree-sum
/// hypothesis.
enum class GateResult {
    checked,
    not_connected,
    not_k1t_free,
    l_equals_t_minus_2,
    hypothesis_fails,
};

struct InstanceRecord {
    int line = 0;  // 1-based input line
    std::string graph6;
    GateResult gate = GateResult::checked;
    std::optional<SearchOutcome> exact_outcome;
    std::optional<SearchOutcome> local_outcome;
};

/// A gated-in graph where some requested solver did not end in `found`.
/// On a correct build this list stays empty for hypothesis-satisfying
/// inputs; anything here is either a solver bug or a genuine refutation.
struct Counterexample {
    int line = 0;
    std::string graph6;
    std::optional<SearchOutcome> exact_outcome;
    std::optional<SearchOutcome> local_outcome;
};

struct SweepError {
    int line = 0;
    std::string message;
};

struct SweepReport {
    int t = 0;
    int l = 0;
    SolverChoice solver = SolverChoice::exact;
    long long total = 0;  // graphs parsed (errors and blank lines excluded)
    long long skipped_not_connected = 0;
    long long skipped_not_k1t_free = 0;
    long long skipped_l_equals_t_minus_2 = 0;
    long long skipped_hypothesis_fails = 0;
    long long checked = 0;  // total == checked + sum of the skip counters
    long long found = 0;    // checked == found + counterexamples.size()
    std::vector<Counterexample> counterexamples;
    std::vector<SweepError> errors;
    // solver == both only: instances where exact and local agreed on
    // found-ness. agreements + disagreements == checked in that mode.
    long long agreements = 0;
    long long disagreements = 0;
    std::vector<InstanceRecord> per_instance;  // filled when requested
};

/// Reads one graph6 graph per line from `in` (blank lines ignored) and
/// checks the spanning-tree consequence on every graph that passes the
/// gates. Unparsable lines become error records and the sweep continues.
/// jobs > 1 distributes instances over threads; the report is
/// index-merged, so output is identical for any job count.
SweepReport sweep(std::istream& in, const SweepOptions& opts);

struct SamplerConfig {
    int n = 8;
    int t = 3;
    double density = 0.3;
    std::uint64_t seed = 1;
    int count = 1;
};

struct SampleResult {
    std::vector<Graph> graphs;
    // attempts abandoned because the star-repair loop hit its cap
    long long repair_skipped = 0;
    // true when the overall attempt budget ran out before `count` graphs
    bool attempt_cap_hit = false;
};

/// Random connected K_{1,t}-free graphs: G(n, density) edges, resampled
/// until connected, then induced stars are repaired by joining two of the
/// star's leaves until none remain. Driven by a single mt19937_64 stream,
/// so a fixed seed reproduces the exact graph sequence on any platform.
SampleResult sample_k1t_free(const SamplerConfig& cfg);

}  // namespace stemtree
