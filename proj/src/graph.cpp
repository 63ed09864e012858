#include "rwrank/graph.hpp"

#include <algorithm>
#include <charconv>
#include <fstream>
#include <random>
#include <stdexcept>
#include <string>
#include <thread>
#include <unordered_set>

namespace rwrank {

namespace {

// FNV-1a, fed with little-endian encodings so the value is platform-stable.
class Fnv1a {
public:
    void add_u32(std::uint32_t v) {
        for (int i = 0; i < 4; ++i) add_byte(static_cast<unsigned char>(v >> (8 * i)));
    }
    void add_u64(std::uint64_t v) {
        for (int i = 0; i < 8; ++i) add_byte(static_cast<unsigned char>(v >> (8 * i)));
    }
    std::uint64_t value() const noexcept { return hash_; }

private:
    void add_byte(unsigned char b) {
        hash_ ^= b;
        hash_ *= 0x100000001b3ULL;
    }
    std::uint64_t hash_ = 0xcbf29ce484222325ULL;
};

}  // namespace

std::string_view to_string(DanglingPolicy policy) {
    switch (policy) {
        case DanglingPolicy::SelfLoop: return "selfloop";
        case DanglingPolicy::Uniform: return "uniform";
        case DanglingPolicy::Drop: return "drop";
    }
    return "unknown";
}

DanglingPolicy dangling_policy_from_string(std::string_view name) {
    if (name == "selfloop") return DanglingPolicy::SelfLoop;
    if (name == "uniform") return DanglingPolicy::Uniform;
    if (name == "drop") return DanglingPolicy::Drop;
    throw std::invalid_argument("unknown dangling policy: " + std::string(name));
}

Graph::Graph(NodeId node_count, std::vector<std::pair<NodeId, NodeId>> edges,
             DanglingPolicy policy)
    : node_count_(node_count), policy_(policy) {
    if (node_count == 0) throw std::invalid_argument("graph must have at least one node");
    for (const auto& [u, v] : edges) {
        if (u >= node_count || v >= node_count)
            throw std::out_of_range("edge endpoint out of range: " + std::to_string(u) + " -> " +
                                    std::to_string(v));
    }

    std::sort(edges.begin(), edges.end());
    edges.erase(std::unique(edges.begin(), edges.end()), edges.end());

    // Find pre-policy dangling nodes, then repair if requested.
    std::vector<bool> has_out(node_count, false);
    for (const auto& [u, v] : edges) has_out[u] = true;
    for (NodeId u = 0; u < node_count; ++u)
        if (!has_out[u]) dangling_.push_back(u);

    if (policy == DanglingPolicy::SelfLoop && !dangling_.empty()) {
        for (NodeId u : dangling_) edges.emplace_back(u, u);
        std::sort(edges.begin(), edges.end());
    }

    out_offsets_.assign(node_count + 1, 0);
    for (const auto& [u, v] : edges) ++out_offsets_[u + 1];
    for (NodeId u = 0; u < node_count; ++u) out_offsets_[u + 1] += out_offsets_[u];

    out_targets_.resize(edges.size());
    for (std::size_t i = 0; i < edges.size(); ++i) out_targets_[i] = edges[i].second;

    Fnv1a h;
    h.add_u32(node_count_);
    h.add_u64(out_targets_.size());
    for (std::uint64_t off : out_offsets_) h.add_u64(off);
    for (NodeId t : out_targets_) h.add_u32(t);
    h.add_u32(static_cast<std::uint32_t>(policy_));
    fingerprint_ = h.value();
}

bool Graph::operator==(const Graph& other) const noexcept {
    return node_count_ == other.node_count_ && policy_ == other.policy_ &&
           out_offsets_ == other.out_offsets_ && out_targets_ == other.out_targets_;
}

LoadedGraph load_edge_list(const std::filesystem::path& path, DanglingPolicy policy) {
    std::ifstream in(path);
    if (!in) throw std::runtime_error("cannot open edge list: " + path.string());

    std::vector<std::pair<std::uint64_t, std::uint64_t>> raw_edges;
    std::string line;
    std::size_t line_no = 0;
    while (std::getline(in, line)) {
        ++line_no;
        std::size_t pos = line.find_first_not_of(" \t\r");
        if (pos == std::string::npos || line[pos] == '#') continue;

        std::uint64_t labels[2];
        for (int k = 0; k < 2; ++k) {
            std::size_t end = line.find_first_of(" \t\r", pos);
            if (end == std::string::npos) end = line.size();
            auto [ptr, ec] = std::from_chars(line.data() + pos, line.data() + end, labels[k]);
            if (ec != std::errc{} || ptr != line.data() + end)
                throw std::runtime_error("parse error at line " + std::to_string(line_no) +
                                         ": expected non-negative integer, got '" +
                                         line.substr(pos, end - pos) + "'");
            pos = line.find_first_not_of(" \t\r", end);
            if (k == 0 && pos == std::string::npos)
                throw std::runtime_error("parse error at line " + std::to_string(line_no) +
                                         ": expected \"src dst\", got a single token");
        }
        if (pos != std::string::npos)
            throw std::runtime_error("parse error at line " + std::to_string(line_no) +
                                     ": trailing tokens after \"src dst\"");
        raw_edges.emplace_back(labels[0], labels[1]);
    }
    if (in.bad()) throw std::runtime_error("I/O error while reading " + path.string());
    if (raw_edges.empty()) throw std::runtime_error("empty graph: no edges in " + path.string());

    // Dense ids in ascending label order, so dumping and reloading a graph
    // whose labels are already dense 0..n-1 is the identity.
    NodeIdMap ids;
    ids.internal_to_external.reserve(raw_edges.size());
    for (const auto& [src, dst] : raw_edges) {
        ids.internal_to_external.push_back(src);
        ids.internal_to_external.push_back(dst);
    }
    std::sort(ids.internal_to_external.begin(), ids.internal_to_external.end());
    ids.internal_to_external.erase(
        std::unique(ids.internal_to_external.begin(), ids.internal_to_external.end()),
        ids.internal_to_external.end());
    ids.external_to_internal.reserve(ids.internal_to_external.size());
    for (std::size_t i = 0; i < ids.internal_to_external.size(); ++i)
        ids.external_to_internal.emplace(ids.internal_to_external[i], static_cast<NodeId>(i));

    std::vector<std::pair<NodeId, NodeId>> edges;
    edges.reserve(raw_edges.size());
    for (const auto& [src, dst] : raw_edges)
        edges.emplace_back(ids.external_to_internal.at(src), ids.external_to_internal.at(dst));

    Graph g(static_cast<NodeId>(ids.internal_to_external.size()), std::move(edges), policy);
    return LoadedGraph{std::move(g), std::move(ids)};
}

void dump_edge_list(const Graph& g, const std::filesystem::path& path) {
    std::ofstream out(path, std::ios::trunc);
    if (!out) throw std::runtime_error("cannot open for writing: " + path.string());
    for (NodeId u = 0; u < g.node_count(); ++u)
        for (NodeId v : g.out_neighbors(u)) out << u << ' ' << v << '\n';
    out.flush();
    if (!out) throw std::runtime_error("I/O error while writing " + path.string());
}

Graph generate_random_graph(NodeId node_count, std::uint64_t edge_count, std::uint64_t rng_seed,
                            DanglingPolicy policy) {
    if (node_count == 0) throw std::invalid_argument("graph must have at least one node");
    const std::uint64_t n = node_count;
    const std::uint64_t max_edges = n * (n - 1);
    if (edge_count > max_edges)
        throw std::invalid_argument("edge_count " + std::to_string(edge_count) +
                                    " exceeds n*(n-1) = " + std::to_string(max_edges));

    std::mt19937_64 rng(rng_seed);
    std::vector<std::pair<NodeId, NodeId>> edges;
    edges.reserve(edge_count);

    if (edge_count > max_edges / 4) {
        // Dense request: partial Fisher-Yates over all ordered pairs.
        std::vector<std::uint64_t> pairs;
        pairs.reserve(max_edges);
        for (std::uint64_t u = 0; u < n; ++u)
            for (std::uint64_t v = 0; v < n; ++v)
                if (u != v) pairs.push_back(u * n + v);
        for (std::uint64_t i = 0; i < edge_count; ++i) {
            std::uniform_int_distribution<std::uint64_t> pick(i, pairs.size() - 1);
            std::swap(pairs[i], pairs[pick(rng)]);
            edges.emplace_back(static_cast<NodeId>(pairs[i] / n), static_cast<NodeId>(pairs[i] % n));
        }
    } else {
        std::unordered_set<std::uint64_t> seen;
        seen.reserve(edge_count * 2);
        std::uniform_int_distribution<std::uint64_t> pick_u(0, n - 1);
        std::uniform_int_distribution<std::uint64_t> pick_v(0, n - 2);
        while (edges.size() < edge_count) {
            const std::uint64_t u = pick_u(rng);
            std::uint64_t v = pick_v(rng);
            if (v >= u) ++v;  // skip the diagonal
            if (seen.insert(u * n + v).second)
                edges.emplace_back(static_cast<NodeId>(u), static_cast<NodeId>(v));
        }
    }
    return Graph(node_count, std::move(edges), policy);
}

namespace {

// Accumulates the contribution of sources [begin, end) into y (assumed
// zeroed); returns the dangling mass encountered in that range.
double sweep_range(const Graph& g, std::span<const double> x, std::span<double> y,
                   double keep, NodeId begin, NodeId end) {
    double dangling_mass = 0.0;
    for (NodeId u = begin; u < end; ++u) {
        const double xu = x[u];
        if (xu == 0.0) continue;
        const std::uint32_t deg = g.out_degree(u);
        if (deg == 0) {
            dangling_mass += xu;
            continue;
        }
        const double share = keep * xu / deg;
        for (NodeId v : g.out_neighbors(u)) y[v] += share;
    }
    return dangling_mass;
}

}  // namespace

void propagation_sweep(const Graph& g, std::span<const double> x, std::span<double> y,
                       double c, int threads) {
    const NodeId n = g.node_count();
    if (x.size() != n || y.size() != n)
        throw std::invalid_argument("score vector length does not match node count");
    if (c < 0.0 || c >= 1.0) throw std::invalid_argument("restart probability must be in [0, 1)");

    const double keep = 1.0 - c;
    std::fill(y.begin(), y.end(), 0.0);
    double dangling_mass = 0.0;

    if (threads <= 1 || n < 4096) {
        dangling_mass = sweep_range(g, x, y, keep, 0, n);
    } else {
        const int t = std::min<int>(threads, 64);
        std::vector<std::vector<double>> partial(t, std::vector<double>(n, 0.0));
        std::vector<double> partial_dangling(t, 0.0);
        std::vector<std::thread> workers;
        workers.reserve(t);
        for (int k = 0; k < t; ++k) {
            const NodeId begin = static_cast<NodeId>(std::uint64_t(n) * k / t);
            const NodeId end = static_cast<NodeId>(std::uint64_t(n) * (k + 1) / t);
            workers.emplace_back([&, k, begin, end] {
                partial_dangling[k] = sweep_range(g, x, partial[k], keep, begin, end);
            });
        }
        for (auto& w : workers) w.join();
        // Merge in fixed thread order so a given thread count is reproducible.
        for (int k = 0; k < t; ++k) {
            const auto& p = partial[k];
            for (NodeId v = 0; v < n; ++v) y[v] += p[v];
            dangling_mass += partial_dangling[k];
        }
    }

    if (dangling_mass != 0.0 && g.dangling_policy() == DanglingPolicy::Uniform) {
        const double spread = keep * dangling_mass / n;
        for (NodeId v = 0; v < n; ++v) y[v] += spread;
    }
    // Under Drop the dangling mass vanishes; under SelfLoop it never occurs.
}

ScoreVector propagation_sweep(const Graph& g, const ScoreVector& x, double c, int threads) {
    ScoreVector y(x.size());
    propagation_sweep(g, std::span<const double>(x), std::span<double>(y), c, threads);
    return y;
}

}  // namespace rwrank
