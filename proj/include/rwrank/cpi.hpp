#pragma once

#include <optional>

#include "rwrank/graph.hpp"

namespace rwrank {

inline constexpr double kDefaultRestartProb = 0.15;
inline constexpr double kDefaultTolerance = 1e-9;

struct CpiParams {
    double restart_prob = kDefaultRestartProb;  // c
    double tolerance = kDefaultTolerance;       // epsilon
    std::uint32_t start_iter = 0;
    std::optional<std::uint32_t> terminal_iter;  // nullopt: run until convergence
    int threads = 1;

    void validate() const;  // throws std::invalid_argument
};

struct CpiResult {
    ScoreVector scores;
    std::uint32_t iterations_run = 0;  // index of the last interim vector computed
    bool converged = false;            // the tolerance break fired
    double residual_l1 = 0.0;          // L1 norm of the last interim vector
};

// Non-empty set of restart nodes. Stored sorted; rejects duplicates.
class SeedSet {
public:
    explicit SeedSet(std::vector<NodeId> ids);
    static SeedSet single(NodeId id);
    static SeedSet all_nodes(NodeId node_count);

    std::span<const NodeId> ids() const noexcept { return ids_; }
    std::size_t size() const noexcept { return ids_.size(); }
    void validate_against(NodeId node_count) const;  // throws std::out_of_range

private:
    std::vector<NodeId> ids_;
};

// Cumulative power iteration: starting from x^(0) = c*q with q uniform over
// the seeds, repeatedly applies the propagation sweep and accumulates the
// interim vectors x^(i) for start_iter <= i <= terminal_iter (i = 0
// included). Stops early once ||x^(i)||_1 < tolerance, after accumulating
// that vector.
CpiResult cpi_run(const Graph& g, const SeedSet& seeds, const CpiParams& params);

// Full-window single-seed run; the exact random-walk-with-restart scores.
ScoreVector exact_rwr(const Graph& g, NodeId seed, double c = kDefaultRestartProb,
                      double eps = kDefaultTolerance, int threads = 1);

// Same iteration with all nodes as seeds (q = (1/n)*1) over the given window.
CpiResult pagerank(const Graph& g, const CpiParams& params);

// One pass that splits the accumulated series at the given iteration
// boundaries (strictly increasing, each >= 1). Returns boundaries.size()+1
// segment sums: [0, b0), [b0, b1), ..., [b_last, convergence).
std::vector<ScoreVector> cpi_partition(const Graph& g, const SeedSet& seeds, double c, double eps,
                                       std::span<const std::uint32_t> boundaries, int threads = 1);

}  // namespace rwrank
