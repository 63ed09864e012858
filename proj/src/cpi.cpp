#include "rwrank/cpi.hpp"

#include <algorithm>
#include <cmath>
#include <numeric>
#include <stdexcept>
#include <string>

namespace rwrank {

void CpiParams::validate() const {
    if (!(restart_prob > 0.0 && restart_prob < 1.0))
        throw std::invalid_argument("restart probability must be in (0, 1)");
    if (!(tolerance > 0.0)) throw std::invalid_argument("tolerance must be positive");
    if (terminal_iter && *terminal_iter < start_iter)
        throw std::invalid_argument("terminal iteration precedes start iteration");
}

SeedSet::SeedSet(std::vector<NodeId> ids) : ids_(std::move(ids)) {
    if (ids_.empty()) throw std::invalid_argument("seed set must not be empty");
    std::sort(ids_.begin(), ids_.end());
    if (std::adjacent_find(ids_.begin(), ids_.end()) != ids_.end())
        throw std::invalid_argument("seed set contains duplicate ids");
}

SeedSet SeedSet::single(NodeId id) { return SeedSet(std::vector<NodeId>{id}); }

SeedSet SeedSet::all_nodes(NodeId node_count) {
    std::vector<NodeId> ids(node_count);
    std::iota(ids.begin(), ids.end(), NodeId{0});
    return SeedSet(std::move(ids));
}

void SeedSet::validate_against(NodeId node_count) const {
    if (!ids_.empty() && ids_.back() >= node_count)
        throw std::out_of_range("seed id " + std::to_string(ids_.back()) +
                                " out of range for graph with " + std::to_string(node_count) +
                                " nodes");
}

namespace {

double l1_sum(const ScoreVector& v) {
    double s = 0.0;
    for (double e : v) s += std::abs(e);
    return s;
}

void add_into(ScoreVector& acc, const ScoreVector& x) {
    for (std::size_t i = 0; i < acc.size(); ++i) acc[i] += x[i];
}

// Shared iteration core. sink(i, x) is called for every interim vector x^(i)
// starting at i = 0; returning false stops the run before convergence.
template <typename Sink>
CpiResult run_series(const Graph& g, const SeedSet& seeds, double c, double eps, int threads,
                     Sink&& sink) {
    seeds.validate_against(g.node_count());
    const NodeId n = g.node_count();

    ScoreVector x(n, 0.0);
    const double weight = c / static_cast<double>(seeds.size());
    for (NodeId id : seeds.ids()) x[id] = weight;

    CpiResult res;
    res.residual_l1 = l1_sum(x);
    if (!sink(std::uint32_t{0}, x)) return res;

    ScoreVector next(n);
    for (std::uint32_t i = 1;; ++i) {
        propagation_sweep(g, x, std::span<double>(next), c, threads);
        x.swap(next);
        res.iterations_run = i;
        res.residual_l1 = l1_sum(x);
        const bool keep_going = sink(i, x);
        if (res.residual_l1 < eps) {
            res.converged = true;
            break;
        }
        if (!keep_going) break;
    }
    return res;
}

}  // namespace

CpiResult cpi_run(const Graph& g, const SeedSet& seeds, const CpiParams& params) {
    params.validate();
    const std::uint32_t start = params.start_iter;
    ScoreVector acc(g.node_count(), 0.0);

    CpiResult res = run_series(
        g, seeds, params.restart_prob, params.tolerance, params.threads,
        [&](std::uint32_t i, const ScoreVector& x) {
            if (i >= start && (!params.terminal_iter || i <= *params.terminal_iter))
                add_into(acc, x);
            return !params.terminal_iter || i < *params.terminal_iter;
        });
    res.scores = std::move(acc);
    return res;
}

ScoreVector exact_rwr(const Graph& g, NodeId seed, double c, double eps, int threads) {
    CpiParams params;
    params.restart_prob = c;
    params.tolerance = eps;
    params.threads = threads;
    return cpi_run(g, SeedSet::single(seed), params).scores;
}

CpiResult pagerank(const Graph& g, const CpiParams& params) {
    return cpi_run(g, SeedSet::all_nodes(g.node_count()), params);
}

std::vector<ScoreVector> cpi_partition(const Graph& g, const SeedSet& seeds, double c, double eps,
                                       std::span<const std::uint32_t> boundaries, int threads) {
    CpiParams check;
    check.restart_prob = c;
    check.tolerance = eps;
    check.validate();
    for (std::size_t k = 0; k < boundaries.size(); ++k) {
        const std::uint32_t lo = k == 0 ? 1 : boundaries[k - 1] + 1;
        if (boundaries[k] < lo)
            throw std::invalid_argument("partition boundaries must be strictly increasing and >= 1");
    }

    std::vector<ScoreVector> segments(boundaries.size() + 1,
                                      ScoreVector(g.node_count(), 0.0));
    run_series(g, seeds, c, eps, threads, [&](std::uint32_t i, const ScoreVector& x) {
        const std::size_t seg =
            std::upper_bound(boundaries.begin(), boundaries.end(), i) - boundaries.begin();
        add_into(segments[seg], x);
        return true;
    });
    return segments;
}

}  // namespace rwrank
