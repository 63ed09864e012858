#pragma once

#include <iosfwd>
#include <map>
#include <optional>

#include "rwrank/tpa.hpp"

namespace rwrank {

double l1_norm(std::span<const double> v);

// Sum of |a_i - b_i|. Throws on length mismatch.
double l1_error(std::span<const double> a, std::span<const double> b);

// Indices of the k largest scores, descending; ties broken by ascending id.
std::vector<NodeId> top_k_nodes(const ScoreVector& scores, std::size_t k);

// |topk(exact) ∩ topk(approx)| / k. Throws if k is outside [1, n].
double recall_at_k(const ScoreVector& exact, const ScoreVector& approx, std::size_t k);

// Pearson correlation of the two rank vectors, with tied scores assigned
// average ranks. nullopt when either vector has zero rank variance.
std::optional<double> spearman(const ScoreVector& exact, const ScoreVector& approx);

struct ApproximationError {
    double theoretical_bound = 0.0;
    double l1_error = 0.0;
    double bound_ratio = 0.0;
};

struct ErrorReport {
    ApproximationError neighbor;
    ApproximationError stranger;
    ApproximationError total;
    std::map<std::size_t, double> recall;  // k -> recall@k of the final approximation
    std::optional<double> spearman;
};

// Computes the exact family/neighbor/stranger parts for the seed, both
// approximations, and the (bound, error, ratio) triple for each part plus
// ranking metrics of the final approximation against the exact scores.
ErrorReport bound_report(const Graph& g, NodeId seed, const TpaParams& params,
                         std::span<const std::size_t> recall_ks = {}, int threads = 1);

// Variant reusing an existing preprocessed artifact (must match g and params).
ErrorReport bound_report(const Graph& g, const StrangerArtifact& artifact, NodeId seed,
                         std::uint32_t family_end, std::span<const std::size_t> recall_ks = {},
                         int threads = 1);

void write_csv(const ErrorReport& report, std::ostream& out);
void write_table(const ErrorReport& report, std::ostream& out);

}  // namespace rwrank
