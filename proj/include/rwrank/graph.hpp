#pragma once

#include <cstdint>
#include <filesystem>
#include <span>
#include <string_view>
#include <unordered_map>
#include <utility>
#include <vector>

namespace rwrank {

using NodeId = std::uint32_t;
using ScoreVector = std::vector<double>;

// What to do with nodes that have no out-edges. SelfLoop and Uniform keep the
// transition matrix column-stochastic; Drop lets their score leak away.
enum class DanglingPolicy { SelfLoop, Uniform, Drop };

std::string_view to_string(DanglingPolicy policy);
DanglingPolicy dangling_policy_from_string(std::string_view name);

// Immutable directed graph stored as CSR over out-edges. Out-neighbor lists
// are sorted and deduplicated. The row-normalized matrix is never
// materialized; propagation divides by out_degree on the fly.
class Graph {
public:
    // Takes ownership of an edge list (may contain duplicates, in any order)
    // and builds the CSR form. Throws std::invalid_argument on node_count == 0
    // and std::out_of_range on an endpoint >= node_count.
    Graph(NodeId node_count, std::vector<std::pair<NodeId, NodeId>> edges, DanglingPolicy policy);

    NodeId node_count() const noexcept { return node_count_; }
    std::uint64_t edge_count() const noexcept { return out_targets_.size(); }
    DanglingPolicy dangling_policy() const noexcept { return policy_; }

    std::uint32_t out_degree(NodeId u) const {
        return static_cast<std::uint32_t>(out_offsets_[u + 1] - out_offsets_[u]);
    }
    std::span<const NodeId> out_neighbors(NodeId u) const {
        return {out_targets_.data() + out_offsets_[u],
                out_targets_.data() + out_offsets_[u + 1]};
    }

    const std::vector<std::uint64_t>& out_offsets() const noexcept { return out_offsets_; }
    const std::vector<NodeId>& out_targets() const noexcept { return out_targets_; }

    // Nodes that had no out-edges before the dangling policy was applied.
    // Under SelfLoop these carry a synthetic self-loop; under Uniform they
    // spread their mass over all nodes at propagation time.
    const std::vector<NodeId>& dangling_nodes() const noexcept { return dangling_; }

    // 64-bit hash over (n, m, out_offsets, out_targets, dangling_policy);
    // used to detect stale preprocessed artifacts.
    std::uint64_t fingerprint() const noexcept { return fingerprint_; }

    bool operator==(const Graph& other) const noexcept;

private:
    NodeId node_count_ = 0;
    std::vector<std::uint64_t> out_offsets_;
    std::vector<NodeId> out_targets_;
    std::vector<NodeId> dangling_;
    DanglingPolicy policy_ = DanglingPolicy::SelfLoop;
    std::uint64_t fingerprint_ = 0;
};

// Mapping between raw input labels and the dense internal ids. Bijective;
// internal ids follow ascending label order.
struct NodeIdMap {
    std::unordered_map<std::uint64_t, NodeId> external_to_internal;
    std::vector<std::uint64_t> internal_to_external;
};

struct LoadedGraph {
    Graph graph;
    NodeIdMap ids;
};

// Reads a whitespace-separated "src dst" edge list. Lines starting with '#'
// and blank lines are ignored. Duplicate edges are removed. Throws
// std::runtime_error with the offending line number on malformed input and
// on an empty graph.
LoadedGraph load_edge_list(const std::filesystem::path& path, DanglingPolicy policy);

// Writes the graph back out in the same edge-list format, with internal ids,
// one edge per line in CSR order. load(dump(g)) reproduces g exactly.
void dump_edge_list(const Graph& g, const std::filesystem::path& path);

// Samples edge_count distinct directed edges (no self-loops) uniformly at
// random. Deterministic for a fixed rng_seed. The dangling policy is applied
// afterward, so under SelfLoop the final edge count may exceed edge_count.
Graph generate_random_graph(NodeId node_count, std::uint64_t edge_count, std::uint64_t rng_seed,
                            DanglingPolicy policy = DanglingPolicy::SelfLoop);

// One score-propagation step: y[v] = (1-c) * sum over edges u->v of
// x[u]/out_degree(u), plus whatever the dangling policy prescribes for
// zero-out-degree mass. c = 0 gives an undamped stochastic sweep.
// threads > 1 splits source nodes into ranges with a deterministic merge;
// threads == 1 is the reference output.
void propagation_sweep(const Graph& g, std::span<const double> x, std::span<double> y,
                       double c, int threads = 1);
ScoreVector propagation_sweep(const Graph& g, const ScoreVector& x, double c, int threads = 1);

}  // namespace rwrank
