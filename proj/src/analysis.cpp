#include "rwrank/analysis.hpp"

#include <algorithm>
#include <numeric>
#include <random>
#include <stdexcept>

#include "rwrank/cpi.hpp"
#include "rwrank/metrics.hpp"

namespace rwrank {

namespace {

// col = M^power * e_node via repeated undamped sweeps, with snapshots pushed
// through `visit(power_index, column)` at each requested power.
template <typename Visit>
void walk_column(const Graph& g, NodeId node, std::span<const std::uint32_t> powers,
                 ScoreVector& x, ScoreVector& next, Visit&& visit) {
    std::fill(x.begin(), x.end(), 0.0);
    x[node] = 1.0;
    std::size_t pi = 0;
    for (std::uint32_t step = 1; step <= powers.back(); ++step) {
        propagation_sweep(g, x, std::span<double>(next), 0.0);
        x.swap(next);
        if (step == powers[pi]) {
            visit(pi, x);
            ++pi;
        }
    }
}

std::vector<NodeId> sample_columns(NodeId n, NodeId seed, std::size_t sample_size,
                                   std::uint64_t rng_seed) {
    std::vector<NodeId> candidates;
    candidates.reserve(n - 1);
    for (NodeId j = 0; j < n; ++j)
        if (j != seed) candidates.push_back(j);
    if (sample_size >= candidates.size()) return candidates;

    std::mt19937_64 rng(rng_seed);
    for (std::size_t i = 0; i < sample_size; ++i) {
        std::uniform_int_distribution<std::size_t> pick(i, candidates.size() - 1);
        std::swap(candidates[i], candidates[pick(rng)]);
    }
    candidates.resize(sample_size);
    return candidates;
}

}  // namespace

std::vector<ColumnDifferenceStat> column_difference_profile(const Graph& g, NodeId seed,
                                                            std::span<const std::uint32_t> powers,
                                                            std::size_t sample_size,
                                                            std::uint64_t rng_seed) {
    const NodeId n = g.node_count();
    if (seed >= n) throw std::out_of_range("seed id out of range");
    if (n < 2) throw std::invalid_argument("graph needs at least two nodes");
    if (powers.empty()) throw std::invalid_argument("at least one power required");
    for (std::size_t k = 0; k < powers.size(); ++k) {
        const std::uint32_t lo = k == 0 ? 1 : powers[k - 1] + 1;
        if (powers[k] < lo)
            throw std::invalid_argument("powers must be strictly increasing and >= 1");
    }
    if (sample_size < 1) throw std::invalid_argument("sample_size must be at least 1");

    const std::vector<NodeId> columns = sample_columns(n, seed, sample_size, rng_seed);

    ScoreVector x(n), next(n);
    std::vector<ScoreVector> seed_columns(powers.size());
    walk_column(g, seed, powers, x, next,
                [&](std::size_t pi, const ScoreVector& col) { seed_columns[pi] = col; });

    std::vector<double> diff_sums(powers.size(), 0.0);
    std::vector<std::uint64_t> nnz_sums(powers.size(), 0);
    for (NodeId j : columns) {
        walk_column(g, j, powers, x, next, [&](std::size_t pi, const ScoreVector& col) {
            diff_sums[pi] += l1_error(seed_columns[pi], col);
            std::uint64_t nnz = 0;
            for (double e : col)
                if (e > 0.0) ++nnz;
            nnz_sums[pi] += nnz;
        });
    }

    const bool exhaustive = columns.size() == static_cast<std::size_t>(n) - 1;
    std::vector<ColumnDifferenceStat> stats(powers.size());
    for (std::size_t pi = 0; pi < powers.size(); ++pi) {
        auto& s = stats[pi];
        s.power = powers[pi];
        s.sampled_columns = columns.size();
        s.exhaustive = exhaustive;
        // Estimate of sum over all j != seed, scaled by 1/n.
        const double scale =
            exhaustive ? 1.0 : static_cast<double>(n - 1) / static_cast<double>(columns.size());
        s.c_i_estimate = diff_sums[pi] * scale / static_cast<double>(n);
        s.mean_nnz_per_column =
            static_cast<double>(nnz_sums[pi]) / static_cast<double>(columns.size());
    }
    return stats;
}

ColumnDifferenceStat column_difference_stat(const Graph& g, NodeId seed, std::uint32_t power,
                                            std::size_t sample_size, std::uint64_t rng_seed) {
    const std::uint32_t powers[] = {power};
    return column_difference_profile(g, seed, powers, sample_size, rng_seed)[0];
}

double block_structure_stat(const Graph& g, NodeId seed, std::uint32_t family_end, double c,
                            double eps, int threads) {
    if (family_end < 1) throw std::invalid_argument("family_end (S) must be at least 1");
    CpiParams params;
    params.restart_prob = c;
    params.tolerance = eps;
    params.terminal_iter = family_end - 1;
    params.threads = threads;
    const ScoreVector family = cpi_run(g, SeedSet::single(seed), params).scores;

    ScoreVector x = family, next(g.node_count());
    for (std::uint32_t step = 0; step < family_end; ++step) {
        propagation_sweep(g, x, std::span<double>(next), 0.0, threads);
        x.swap(next);
    }
    return l1_error(x, family);
}

}  // namespace rwrank
