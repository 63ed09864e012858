#include "rwrank/tpa.hpp"

#include <cmath>
#include <stdexcept>

namespace rwrank {

void TpaParams::validate() const {
    if (family_end < 1)
        throw std::invalid_argument("family_end (S) must be at least 1");
    if (stranger_start <= family_end)
        throw std::invalid_argument("stranger_start (T) must exceed family_end (S)");
    CpiParams base;
    base.restart_prob = restart_prob;
    base.tolerance = tolerance;
    base.validate();
}

StrangerArtifact preprocess(const Graph& g, double c, double eps, std::uint32_t stranger_start,
                            int threads) {
    if (stranger_start < 1)
        throw std::invalid_argument("stranger_start (T) must be at least 1");
    CpiParams params;
    params.restart_prob = c;
    params.tolerance = eps;
    params.start_iter = stranger_start;
    params.threads = threads;
    CpiResult tail = pagerank(g, params);

    StrangerArtifact artifact;
    artifact.stranger_scores = std::move(tail.scores);
    artifact.graph_fingerprint = g.fingerprint();
    artifact.restart_prob = c;
    artifact.tolerance = eps;
    artifact.stranger_start = stranger_start;
    return artifact;
}

double neighbor_scale_factor(double c, std::uint32_t family_end, std::uint32_t stranger_start) {
    const double keep = 1.0 - c;
    const double family_mass = 1.0 - std::pow(keep, family_end);
    const double neighbor_mass = std::pow(keep, family_end) - std::pow(keep, stranger_start);
    return neighbor_mass / family_mass;
}

namespace {

ScoreVector family_part(const Graph& g, NodeId seed, double c, double eps,
                        std::uint32_t family_end, int threads) {
    CpiParams params;
    params.restart_prob = c;
    params.tolerance = eps;
    params.start_iter = 0;
    params.terminal_iter = family_end - 1;
    params.threads = threads;
    return cpi_run(g, SeedSet::single(seed), params).scores;
}

}  // namespace

ScoreVector query(const Graph& g, const StrangerArtifact& artifact, NodeId seed,
                  std::uint32_t family_end, int threads) {
    if (artifact.graph_fingerprint != g.fingerprint())
        throw std::runtime_error("stale artifact: graph fingerprint mismatch");
    if (family_end < 1 || family_end >= artifact.stranger_start)
        throw std::invalid_argument("family_end (S) must satisfy 1 <= S < T");

    ScoreVector family =
        family_part(g, seed, artifact.restart_prob, artifact.tolerance, family_end, threads);
    const double scale =
        1.0 + neighbor_scale_factor(artifact.restart_prob, family_end, artifact.stranger_start);
    ScoreVector out(g.node_count());
    for (NodeId v = 0; v < g.node_count(); ++v)
        out[v] = scale * family[v] + artifact.stranger_scores[v];
    return out;
}

ScoreVector query_na(const Graph& g, NodeId seed, const TpaParams& params, int threads) {
    params.validate();
    ScoreVector family = family_part(g, seed, params.restart_prob, params.tolerance,
                                     params.family_end, threads);
    const double scale =
        1.0 + neighbor_scale_factor(params.restart_prob, params.family_end, params.stranger_start);
    for (double& v : family) v *= scale;
    return family;
}

}  // namespace rwrank
