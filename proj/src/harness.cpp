#include "stemtree/harness.hpp"

#include <algorithm>
#include <atomic>
#include <istream>
#include <random>
#include <thread>
#include <utility>

namespace stemtree {

namespace {

struct Slot {
    bool failed = false;       // parse or evaluation error; excluded from total
    std::string error_message;
    InstanceRecord rec;
    bool all_found = false;    // meaningful when rec.gate == checked
    bool agree = false;        // meaningful in both mode
};

long long condition_rhs(int n, int t, int l) {
    return static_cast<long long>(n) - static_cast<long long>(l) * (t - 1) / (t - 2) - 1;
}

void process_one(const std::string& line, int line_no, const SweepOptions& opts, Slot& slot) {
    slot.rec.line = line_no;
    slot.rec.graph6 = line;
    try {
        Graph g = parse_graph6(line);
        if (!is_connected(g)) {
            slot.rec.gate = GateResult::not_connected;
            return;
        }
        if (find_induced_star(g, opts.t)) {
            slot.rec.gate = GateResult::not_k1t_free;
            return;
        }
        if (opts.l == opts.t - 2) {
            slot.rec.gate = GateResult::l_equals_t_minus_2;
            return;
        }
        Sigma s = sigma_m_p(g, 4, opts.l + 1, opts.work_limit);
        if (!s.at_least(condition_rhs(g.vertex_count(), opts.t, opts.l))) {
            slot.rec.gate = GateResult::hypothesis_fails;
            return;
        }
        slot.rec.gate = GateResult::checked;
        bool exact_found = true;
        bool local_found = true;
        if (opts.solver == SolverChoice::exact || opts.solver == SolverChoice::both) {
            slot.rec.exact_outcome = exact_solve(g, opts.l, opts.tree_limit);
            exact_found = slot.rec.exact_outcome->status == SearchStatus::found;
        }
        if (opts.solver == SolverChoice::local || opts.solver == SolverChoice::both) {
            slot.rec.local_outcome = local_search_solve(g, opts.t, opts.l, opts.move_budget);
            local_found = slot.rec.local_outcome->status == SearchStatus::found;
        }
        slot.all_found = exact_found && local_found;
        slot.agree = exact_found == local_found;
    } catch (const std::exception& e) {
        slot.failed = true;
        slot.error_message = e.what();
    }
}

}  // namespace

SweepReport sweep(std::istream& in, const SweepOptions& opts) {
    if (opts.t < 3) throw GraphError("sweep requires t >= 3");
    if (opts.l < 1) throw GraphError("sweep requires l >= 1");
    if (opts.jobs < 1) throw GraphError("sweep requires jobs >= 1");

    std::vector<std::pair<std::string, int>> lines;  // text, 1-based line
    {
        std::string raw;
        int line_no = 0;
        while (std::getline(in, raw)) {
            ++line_no;
            if (!raw.empty() && raw.back() == '\r') raw.pop_back();
            if (raw.empty()) continue;
            lines.emplace_back(raw, line_no);
        }
    }

    std::vector<Slot> slots(lines.size());
    auto run_range = [&](std::atomic<size_t>& next) {
        for (size_t i = next.fetch_add(1); i < lines.size(); i = next.fetch_add(1))
            process_one(lines[i].first, lines[i].second, opts, slots[i]);
    };
    std::atomic<size_t> next{0};
    size_t nthreads = std::min<size_t>(static_cast<size_t>(opts.jobs), lines.size());
    if (nthreads <= 1) {
        run_range(next);
    } else {
        std::vector<std::thread> pool;
        pool.reserve(nthreads);
        for (size_t i = 0; i < nthreads; ++i) pool.emplace_back([&] { run_range(next); });
        for (std::thread& th : pool) th.join();
    }

    SweepReport report;
    report.t = opts.t;
    report.l = opts.l;
    report.solver = opts.solver;
    for (Slot& slot : slots) {
        if (slot.failed) {
            report.errors.push_back(SweepError{slot.rec.line, slot.error_message});
            continue;
        }
        ++report.total;
        switch (slot.rec.gate) {
            case GateResult::not_connected: ++report.skipped_not_connected; break;
            case GateResult::not_k1t_free: ++report.skipped_not_k1t_free; break;
            case GateResult::l_equals_t_minus_2: ++report.skipped_l_equals_t_minus_2; break;
            case GateResult::hypothesis_fails: ++report.skipped_hypothesis_fails; break;
            case GateResult::checked: {
                ++report.checked;
                if (slot.all_found) {
                    ++report.found;
                } else {
                    report.counterexamples.push_back(Counterexample{
                        slot.rec.line, slot.rec.graph6, slot.rec.exact_outcome,
                        slot.rec.local_outcome});
                }
                if (opts.solver == SolverChoice::both) {
                    if (slot.agree)
                        ++report.agreements;
                    else
                        ++report.disagreements;
                }
                break;
            }
        }
        if (opts.per_instance) report.per_instance.push_back(std::move(slot.rec));
    }
    return report;
}

SampleResult sample_k1t_free(const SamplerConfig& cfg) {
    if (cfg.n < 1) throw GraphError("sampler requires n >= 1");
    if (cfg.t < 3) throw GraphError("sampler requires t >= 3");
    if (!(cfg.density > 0.0) || cfg.density > 1.0)
        throw GraphError("sampler requires density in (0, 1]");
    if (cfg.count < 0) throw GraphError("sampler requires count >= 0");

    std::mt19937_64 rng(cfg.seed);
    // 53-bit mantissa draw; bit-identical across platforms, unlike
    // std::uniform_real_distribution.
    auto coin = [&rng]() { return static_cast<double>(rng() >> 11) * 0x1.0p-53; };

    SampleResult out;
    const long long repair_cap = static_cast<long long>(cfg.n) * (cfg.n - 1) / 2 + 1;
    const long long attempt_cap = 1000LL * std::max(cfg.count, 1);
    long long attempts = 0;
    std::vector<Edge> edges;
    while (static_cast<int>(out.graphs.size()) < cfg.count) {
        if (attempts >= attempt_cap) {
            out.attempt_cap_hit = true;
            break;
        }
        ++attempts;
        edges.clear();
        for (Vertex u = 0; u < cfg.n; ++u)
            for (Vertex v = u + 1; v < cfg.n; ++v)
                if (coin() < cfg.density) edges.emplace_back(u, v);
        Graph g = Graph::from_edges(cfg.n, edges);
        if (!is_connected(g)) continue;
        bool repaired = true;
        long long repairs = 0;
        // Joining two leaves of an induced star kills that witness and only
        // adds edges, so the loop ends within one edge-count's worth of steps.
        while (auto star = find_induced_star(g, cfg.t)) {
            if (++repairs > repair_cap) {
                ++out.repair_skipped;
                repaired = false;
                break;
            }
            edges.emplace_back(star->leaves[0], star->leaves[1]);
            g = Graph::from_edges(cfg.n, edges);
        }
        if (!repaired) continue;
        out.graphs.push_back(std::move(g));
    }
    return out;
}

}  // namespace stemtree
