#pragma once

#include <vector>

#include "stemtree/graph.hpp"

namespace stemtree {

/// Degree-sum value that may be +infinity (no qualifying set exists).
/// Tagged on purpose: comparisons against bounds must spell out the
/// infinite case instead of relying on a large sentinel.
class Sigma {
public:
    static Sigma infinity() {
        Sigma s;
        s.infinite_ = true;
        return s;
    }
    static Sigma finite(long long v) {
        Sigma s;
        s.value_ = v;
        return s;
    }

    bool is_infinite() const { return infinite_; }
    long long value() const {
        if (infinite_) throw GraphError("sigma value is infinite");
        return value_;
    }
    bool at_least(long long rhs) const { return infinite_ || value_ >= rhs; }

    friend bool operator==(const Sigma&, const Sigma&) = default;

private:
    bool infinite_ = false;
    long long value_ = 0;
};

/// Search exceeded its node budget; results would be incomplete, so the
/// computation aborts instead of returning a bound.
class WorkLimitError : public std::runtime_error {
public:
    explicit WorkLimitError(const std::string& what) : std::runtime_error(what) {}
};

inline constexpr long long kDefaultWorkLimit = 50'000'000;

/// Graph on the same vertices with an edge between every pair at distance
/// <= k in g (unreachable pairs stay non-adjacent). Requires k >= 1.
Graph power_graph(const Graph& g, int k);

/// Maximum size of a vertex set with pairwise distance >= m, i.e. the
/// independence number of the (m-1)-th power graph. Requires m >= 2, n >= 1.
int alpha_m(const Graph& g, int m, long long work_limit = kDefaultWorkLimit);

/// Minimum total degree over size-p sets with pairwise distance >= m;
/// Sigma::infinity() when no such set exists. Requires m >= 2, p >= 1.
Sigma sigma_m_p(const Graph& g, int m, int p, long long work_limit = kDefaultWorkLimit);

/// One size-p set with pairwise distance >= m, plus its degree sum.
struct DistanceSet {
    std::vector<Vertex> vertices;  // increasing
    int m = 0;
    long long degree_sum = 0;
};

/// All size-p pairwise-distance->=m sets in lexicographic order. Kept as a
/// deliberately unpruned second route: sigma_m_p must equal the minimum
/// degree_sum over this list (infinity iff empty).
std::vector<DistanceSet> enumerate_distance_sets(const Graph& g, int m, int p,
                                                 long long work_limit = kDefaultWorkLimit);

/// Everything the main degree-sum condition needs, reported in one shot:
/// sigma4 >= n - floor(l(t-1)/(t-2)) - 1, with the l = t-2 exclusion and
/// the structural gates recorded alongside.
struct ConditionReport {
    int t = 0;
    int l = 0;
    int n = 0;
    Sigma sigma4;
    int alpha4 = 0;
    long long rhs = 0;
    bool hypothesis_holds = false;
    bool l_equals_t_minus_2 = false;
    bool k1t_free = false;
    bool connected = false;
};

/// Requires t >= 3, l >= 1; works on disconnected inputs too (connected is
/// just reported).
ConditionReport evaluate_condition(const Graph& g, int t, int l,
                                   long long work_limit = kDefaultWorkLimit);

}  // namespace stemtree
