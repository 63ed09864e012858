#pragma once

#include "rwrank/cpi.hpp"

namespace rwrank {

struct TpaParams {
    std::uint32_t family_end = 5;       // S: first iteration of the neighbor part
    std::uint32_t stranger_start = 10;  // T: first iteration of the stranger part
    double restart_prob = kDefaultRestartProb;
    double tolerance = kDefaultTolerance;

    void validate() const;  // requires 1 <= family_end < stranger_start
};

// Seed-independent tail of the score series, precomputed once per graph.
struct StrangerArtifact {
    ScoreVector stranger_scores;  // global-seed iterations [stranger_start, convergence)
    std::uint64_t graph_fingerprint = 0;
    double restart_prob = kDefaultRestartProb;
    double tolerance = kDefaultTolerance;
    std::uint32_t stranger_start = 0;  // T
};

// Offline phase: runs the all-node iteration over [stranger_start, convergence)
// and packages it with the graph fingerprint for staleness detection.
StrangerArtifact preprocess(const Graph& g, double c, double eps, std::uint32_t stranger_start,
                            int threads = 1);

// ((1-c)^S - (1-c)^T) / (1 - (1-c)^S): the ratio of the neighbor part's L1
// mass to the family part's, used to rescale the family scores.
double neighbor_scale_factor(double c, std::uint32_t family_end, std::uint32_t stranger_start);

// Online phase: computes the family part from the seed, scales it into the
// neighbor estimate, and adds the precomputed stranger tail. Throws on a
// fingerprint mismatch and on family_end >= artifact.stranger_start.
ScoreVector query(const Graph& g, const StrangerArtifact& artifact, NodeId seed,
                  std::uint32_t family_end, int threads = 1);

// Ablation variant: family + scaled neighbor estimate, no stranger tail.
ScoreVector query_na(const Graph& g, NodeId seed, const TpaParams& params, int threads = 1);

}  // namespace rwrank
