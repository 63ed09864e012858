#pragma once

#include "rwrank/graph.hpp"

namespace rwrank {

// Sampled estimate of (1/n) * sum over j != seed of ||col_seed - col_j||_1,
// where col_j is the j-th column of the i-th power of the transition matrix,
// plus the mean nonzero count of the sampled columns.
struct ColumnDifferenceStat {
    std::uint32_t power = 0;  // i
    double c_i_estimate = 0.0;
    double mean_nnz_per_column = 0.0;
    std::size_t sampled_columns = 0;
    bool exhaustive = false;  // every column j != seed was visited
};

// Columns are computed as `power` undamped sweeps applied to unit vectors.
// sample_size >= n-1 enumerates all columns; otherwise sample_size distinct
// columns j != seed are drawn uniformly (deterministic for a fixed rng_seed).
ColumnDifferenceStat column_difference_stat(const Graph& g, NodeId seed, std::uint32_t power,
                                            std::size_t sample_size, std::uint64_t rng_seed);

// Same statistic for several powers in one progressive pass over the sampled
// columns. powers must be strictly increasing, each >= 1.
std::vector<ColumnDifferenceStat> column_difference_profile(const Graph& g, NodeId seed,
                                                            std::span<const std::uint32_t> powers,
                                                            std::size_t sample_size,
                                                            std::uint64_t rng_seed);

// ||A^S f - f||_1 where f is the family part from the seed and A^S f applies
// S undamped sweeps to it. Small values mean the score distribution is
// already stable after the family iterations (block-wise structure).
double block_structure_stat(const Graph& g, NodeId seed, std::uint32_t family_end, double c,
                            double eps, int threads = 1);

}  // namespace rwrank
