// Command-line front end: preprocess / query / evaluate / sweep / analyze.

#include <algorithm>
#include <chrono>
#include <cmath>
#include <cstdio>
#include <fstream>
#include <iostream>
#include <numeric>
#include <optional>
#include <random>
#include <sstream>
#include <string>
#include <vector>

#include "CLI11.hpp"
#include "rwrank/analysis.hpp"
#include "rwrank/cpi.hpp"
#include "rwrank/metrics.hpp"
#include "rwrank/persistence.hpp"
#include "rwrank/tpa.hpp"

using namespace rwrank;

namespace {

using Clock = std::chrono::steady_clock;

double ms_since(Clock::time_point start) {
    return std::chrono::duration<double, std::milli>(Clock::now() - start).count();
}

std::string fmt(double v) {
    char buf[64];
    std::snprintf(buf, sizeof(buf), "%.9g", v);
    return buf;
}

struct GraphOpts {
    std::string path;
    std::string dangling = "selfloop";
    int threads = 1;

    void attach(CLI::App* cmd) {
        cmd->add_option("--graph", path, "edge-list file (\"src dst\" per line)")->required();
        cmd->add_option("--dangling", dangling, "dangling-node policy: selfloop|uniform|drop")
            ->check(CLI::IsMember({"selfloop", "uniform", "drop"}));
        cmd->add_option("--threads", threads, "worker threads; 1 is the deterministic reference")
            ->check(CLI::PositiveNumber);
    }

    LoadedGraph load() const {
        auto start = Clock::now();
        LoadedGraph lg = load_edge_list(path, dangling_policy_from_string(dangling));
        std::cout << "loaded " << path << ": n=" << lg.graph.node_count()
                  << " m=" << lg.graph.edge_count()
                  << " dangling=" << lg.graph.dangling_nodes().size() << " ("
                  << fmt(ms_since(start)) << " ms)\n";
        return lg;
    }
};

// Uniform sample, without replacement, of nodes that had out-edges in the
// input (dangling nodes are never drawn as seeds).
std::vector<NodeId> sample_seeds(const Graph& g, std::size_t count, std::uint64_t rng_seed) {
    std::vector<bool> dangling(g.node_count(), false);
    for (NodeId u : g.dangling_nodes()) dangling[u] = true;
    std::vector<NodeId> pool;
    pool.reserve(g.node_count());
    for (NodeId u = 0; u < g.node_count(); ++u)
        if (!dangling[u]) pool.push_back(u);
    if (pool.size() < count)
        throw std::runtime_error("graph has only " + std::to_string(pool.size()) +
                                 " non-dangling nodes; cannot draw " + std::to_string(count) +
                                 " seeds");
    std::mt19937_64 rng(rng_seed);
    for (std::size_t i = 0; i < count; ++i) {
        std::uniform_int_distribution<std::size_t> pick(i, pool.size() - 1);
        std::swap(pool[i], pool[pick(rng)]);
    }
    pool.resize(count);
    return pool;
}

struct Welford {
    std::size_t n = 0;
    double sum = 0.0, sum_sq = 0.0;
    void add(double v) {
        ++n;
        sum += v;
        sum_sq += v * v;
    }
    double mean() const { return n ? sum / n : 0.0; }
    double stddev() const {
        if (n < 2) return 0.0;
        const double m = mean();
        return std::sqrt(std::max(0.0, sum_sq / n - m * m));
    }
};

void write_text_file(const std::string& path, const std::string& contents) {
    std::ofstream out(path, std::ios::trunc);
    if (!out) throw std::runtime_error("cannot open for writing: " + path);
    out << contents;
    if (!out.flush()) throw std::runtime_error("I/O error while writing " + path);
}

std::vector<std::uint32_t> parse_u32_list(const std::string& csv) {
    std::vector<std::uint32_t> values;
    std::stringstream ss(csv);
    std::string token;
    while (std::getline(ss, token, ',')) values.push_back(std::stoul(token));
    if (values.empty()) throw std::runtime_error("expected a comma-separated list, got: " + csv);
    return values;
}

// ---------------------------------------------------------------- preprocess

int run_preprocess(const GraphOpts& gopts, double c, double eps, std::uint32_t t_start,
                   const std::string& out_path) {
    LoadedGraph lg = gopts.load();
    auto start = Clock::now();
    StrangerArtifact artifact = preprocess(lg.graph, c, eps, t_start, gopts.threads);
    const double elapsed = ms_since(start);
    save_artifact(artifact, out_path);
    std::cout << "preprocess_ms " << fmt(elapsed) << "\n"
              << "artifact_bytes " << std::filesystem::file_size(out_path) << "\n"
              << "artifact_l1_norm " << fmt(l1_norm(artifact.stranger_scores)) << "\n";
    return 0;
}

// --------------------------------------------------------------------- query

int run_query(const GraphOpts& gopts, const std::string& artifact_path, std::uint64_t seed_label,
              std::uint32_t family_end, std::size_t top_k, bool with_exact, bool na) {
    LoadedGraph lg = gopts.load();
    const Graph& g = lg.graph;
    StrangerArtifact artifact = load_artifact(artifact_path);

    auto it = lg.ids.external_to_internal.find(seed_label);
    if (it == lg.ids.external_to_internal.end())
        throw std::runtime_error("seed node " + std::to_string(seed_label) +
                                 " not present in the graph");
    const NodeId seed = it->second;

    TpaParams params;
    params.family_end = family_end;
    params.stranger_start = artifact.stranger_start;
    params.restart_prob = artifact.restart_prob;
    params.tolerance = artifact.tolerance;
    params.validate();

    auto start = Clock::now();
    ScoreVector approx = na ? query_na(g, seed, params, gopts.threads)
                            : query(g, artifact, seed, family_end, gopts.threads);
    const double online_ms = ms_since(start);

    const std::size_t k =
        top_k == 0 ? g.node_count() : std::min<std::size_t>(top_k, g.node_count());
    std::cout << "method " << (na ? "tpa-na" : "tpa") << "\nrank,node,score\n";
    std::vector<NodeId> top = top_k_nodes(approx, k);
    for (std::size_t rank = 0; rank < top.size(); ++rank)
        std::cout << rank + 1 << "," << lg.ids.internal_to_external[top[rank]] << ","
                  << fmt(approx[top[rank]]) << "\n";
    std::cout << "online_ms " << fmt(online_ms) << "\n";

    if (with_exact) {
        auto exact_start = Clock::now();
        ScoreVector exact =
            exact_rwr(g, seed, artifact.restart_prob, artifact.tolerance, gopts.threads);
        std::cout << "exact_ms " << fmt(ms_since(exact_start)) << "\n";
        std::cout << "l1_error_vs_exact " << fmt(l1_error(exact, approx)) << "\n";
        std::vector<std::size_t> ks;
        for (std::size_t cand : {std::size_t{100}, std::size_t{500}, std::size_t{1000}})
            if (cand <= g.node_count()) ks.push_back(cand);
        ErrorReport report = bound_report(g, artifact, seed, family_end, ks, gopts.threads);
        write_table(report, std::cout);
    }
    return 0;
}

// ------------------------------------------------------------------ evaluate

int run_evaluate(const GraphOpts& gopts, std::uint32_t s, std::uint32_t t, double c, double eps,
                 std::size_t num_seeds, std::uint64_t rng_seed, const std::string& recall_list,
                 const std::string& out_path) {
    TpaParams params;
    params.family_end = s;
    params.stranger_start = t;
    params.restart_prob = c;
    params.tolerance = eps;
    params.validate();

    LoadedGraph lg = gopts.load();
    const Graph& g = lg.graph;
    std::vector<NodeId> seeds = sample_seeds(g, num_seeds, rng_seed);

    std::vector<std::size_t> ks;
    for (std::uint32_t k : parse_u32_list(recall_list))
        if (k >= 1 && k <= g.node_count()) ks.push_back(k);

    auto pre_start = Clock::now();
    StrangerArtifact artifact = preprocess(g, c, eps, t, gopts.threads);
    const double pre_ms = ms_since(pre_start);

    Welford nb_err, st_err, total_err, spear, online_ms, exact_ms;
    std::vector<Welford> recall(ks.size());
    ErrorReport first{};
    for (std::size_t i = 0; i < seeds.size(); ++i) {
        const NodeId seed = seeds[i];
        auto q_start = Clock::now();
        ScoreVector approx = query(g, artifact, seed, s, gopts.threads);
        online_ms.add(ms_since(q_start));
        auto e_start = Clock::now();
        ScoreVector exact = exact_rwr(g, seed, c, eps, gopts.threads);
        exact_ms.add(ms_since(e_start));

        ErrorReport report = bound_report(g, artifact, seed, s, ks, gopts.threads);
        if (i == 0) first = report;
        nb_err.add(report.neighbor.l1_error);
        st_err.add(report.stranger.l1_error);
        total_err.add(report.total.l1_error);
        if (report.spearman) spear.add(*report.spearman);
        for (std::size_t j = 0; j < ks.size(); ++j) recall[j].add(report.recall.at(ks[j]));
    }

    std::string csv = "metric,part,bound,mean,stddev,ratio\n";
    const std::tuple<const char*, double, const Welford*> parts[] = {
        {"neighbor", first.neighbor.theoretical_bound, &nb_err},
        {"stranger", first.stranger.theoretical_bound, &st_err},
        {"total", first.total.theoretical_bound, &total_err},
    };
    for (const auto& [name, bound, w] : parts)
        csv += std::string("l1_error,") + name + "," + fmt(bound) + "," + fmt(w->mean()) + "," +
               fmt(w->stddev()) + "," + fmt(w->mean() / bound) + "\n";
    for (std::size_t j = 0; j < ks.size(); ++j)
        csv += "recall," + std::to_string(ks[j]) + ",," + fmt(recall[j].mean()) + "," +
               fmt(recall[j].stddev()) + ",\n";
    csv += "spearman,,," + fmt(spear.mean()) + "," + fmt(spear.stddev()) + ",\n";
    write_text_file(out_path, csv);

    std::cout << "seeds " << seeds.size() << "\npreprocess_ms " << fmt(pre_ms)
              << "\nmean_online_ms " << fmt(online_ms.mean()) << "\nmean_exact_ms "
              << fmt(exact_ms.mean()) << "\nspeedup "
              << fmt(exact_ms.mean() / std::max(online_ms.mean(), 1e-9)) << "\nwrote " << out_path
              << "\n";
    return 0;
}

// --------------------------------------------------------------------- sweep

struct SweepRow {
    std::uint32_t value;
    double online_ms, l1, na, sa;
};

int run_sweep(const GraphOpts& gopts, const std::string& vary, std::uint32_t range_lo,
              std::uint32_t range_hi, std::uint32_t fixed, double c, double eps,
              std::size_t num_seeds, std::uint64_t rng_seed, const std::string& out_path) {
    if (range_lo > range_hi) throw std::runtime_error("--range lower bound exceeds upper bound");
    const bool vary_s = vary == "S";
    if (vary_s) {
        if (range_lo < 1 || range_hi >= fixed)
            throw std::runtime_error("varying S requires 1 <= S < T for the whole range");
    } else {
        if (range_lo <= fixed) throw std::runtime_error("varying T requires T > S for the whole range");
    }

    LoadedGraph lg = gopts.load();
    const Graph& g = lg.graph;
    std::vector<NodeId> seeds = sample_seeds(g, num_seeds, rng_seed);

    // One boundary list covering every window the sweep needs.
    std::vector<std::uint32_t> boundaries;
    for (std::uint32_t v = range_lo; v <= range_hi; ++v) boundaries.push_back(v);
    boundaries.push_back(fixed);
    std::sort(boundaries.begin(), boundaries.end());
    boundaries.erase(std::unique(boundaries.begin(), boundaries.end()), boundaries.end());

    // Global-seed segments once: tails for every candidate T.
    auto pagerank_segments =
        cpi_partition(g, SeedSet::all_nodes(g.node_count()), c, eps, boundaries, gopts.threads);
    auto tail_after = [&](std::uint32_t boundary) {
        const std::size_t idx =
            std::lower_bound(boundaries.begin(), boundaries.end(), boundary) - boundaries.begin();
        ScoreVector tail(g.node_count(), 0.0);
        for (std::size_t seg = idx + 1; seg < pagerank_segments.size(); ++seg)
            for (NodeId v = 0; v < g.node_count(); ++v) tail[v] += pagerank_segments[seg][v];
        return tail;
    };

    std::vector<SweepRow> rows;
    for (std::uint32_t value = range_lo; value <= range_hi; ++value)
        rows.push_back({value, 0.0, 0.0, 0.0, 0.0});

    std::vector<ScoreVector> tails;  // per sweep value
    std::vector<StrangerArtifact> artifacts;
    for (const SweepRow& row : rows) {
        const std::uint32_t t_here = vary_s ? fixed : row.value;
        StrangerArtifact a;
        a.stranger_scores = tail_after(t_here);
        a.graph_fingerprint = g.fingerprint();
        a.restart_prob = c;
        a.tolerance = eps;
        a.stranger_start = t_here;
        artifacts.push_back(std::move(a));
    }

    for (NodeId seed : seeds) {
        auto segments = cpi_partition(g, SeedSet::single(seed), c, eps, boundaries, gopts.threads);
        // prefix[i] = sum of iterations [0, boundaries[i]); prefix.back() = everything
        std::vector<ScoreVector> prefix(boundaries.size() + 1);
        prefix[0] = segments[0];
        for (std::size_t i = 1; i <= boundaries.size(); ++i) {
            prefix[i] = prefix[i - 1];
            for (NodeId v = 0; v < g.node_count(); ++v) prefix[i][v] += segments[i][v];
        }
        auto prefix_at = [&](std::uint32_t boundary) -> const ScoreVector& {
            const std::size_t idx =
                std::lower_bound(boundaries.begin(), boundaries.end(), boundary) -
                boundaries.begin();
            return prefix[idx + 1];
        };
        const ScoreVector& full = prefix.back();

        for (std::size_t r = 0; r < rows.size(); ++r) {
            const std::uint32_t s_here = vary_s ? rows[r].value : fixed;
            const std::uint32_t t_here = vary_s ? fixed : rows[r].value;
            const ScoreVector& fam_prefix = prefix_at(s_here);
            const ScoreVector& t_prefix = prefix_at(t_here);
            const double scale = neighbor_scale_factor(c, s_here, t_here);
            const ScoreVector& tail = artifacts[r].stranger_scores;

            double l1 = 0.0, na = 0.0, sa = 0.0;
            for (NodeId v = 0; v < g.node_count(); ++v) {
                const double family = fam_prefix[v];
                const double neighbor = t_prefix[v] - family;
                const double stranger = full[v] - t_prefix[v];
                const double nb_approx = scale * family;
                na += std::abs(neighbor - nb_approx);
                sa += std::abs(stranger - tail[v]);
                l1 += std::abs((neighbor + stranger) - (nb_approx + tail[v]));
            }
            rows[r].l1 += l1;
            rows[r].na += na;
            rows[r].sa += sa;

            auto q_start = Clock::now();
            ScoreVector ignored = query(g, artifacts[r], seed, s_here, gopts.threads);
            rows[r].online_ms += ms_since(q_start);
            (void)ignored;
        }
    }

    std::string csv = "value,mean_online_time_ms,mean_l1_error,na_error,sa_error\n";
    const double inv = 1.0 / static_cast<double>(seeds.size());
    for (const SweepRow& row : rows)
        csv += std::to_string(row.value) + "," + fmt(row.online_ms * inv) + "," +
               fmt(row.l1 * inv) + "," + fmt(row.na * inv) + "," + fmt(row.sa * inv) + "\n";
    write_text_file(out_path, csv);
    std::cout << "wrote " << out_path << "\n";
    return 0;
}

// ------------------------------------------------------------------- analyze

int run_analyze_ci(const GraphOpts& gopts, const std::string& i_values, std::size_t sample_size,
                   std::size_t num_seeds, std::uint64_t rng_seed, const std::string& out_path) {
    LoadedGraph lg = gopts.load();
    const Graph& g = lg.graph;
    std::vector<std::uint32_t> powers = parse_u32_list(i_values);
    std::sort(powers.begin(), powers.end());
    powers.erase(std::unique(powers.begin(), powers.end()), powers.end());
    if (sample_size == 0)
        sample_size = std::min<std::size_t>(g.node_count() - 1, 1000);

    std::vector<NodeId> seeds = sample_seeds(g, num_seeds, rng_seed);
    std::vector<Welford> ci(powers.size()), nnz(powers.size());
    bool exhaustive = true;
    std::size_t columns = 0;
    for (std::size_t si = 0; si < seeds.size(); ++si) {
        auto stats = column_difference_profile(g, seeds[si], powers, sample_size, rng_seed + si);
        for (std::size_t p = 0; p < powers.size(); ++p) {
            ci[p].add(stats[p].c_i_estimate);
            nnz[p].add(stats[p].mean_nnz_per_column);
        }
        exhaustive = exhaustive && stats[0].exhaustive;
        columns = stats[0].sampled_columns;
    }

    std::string csv = "i,c_i,mean_nnz,columns_per_seed,exhaustive\n";
    for (std::size_t p = 0; p < powers.size(); ++p)
        csv += std::to_string(powers[p]) + "," + fmt(ci[p].mean()) + "," + fmt(nnz[p].mean()) +
               "," + std::to_string(columns) + "," + (exhaustive ? "1" : "0") + "\n";
    if (!exhaustive)
        std::cout << "note: sampled estimate (" << columns << " columns per seed)\n";
    if (out_path.empty())
        std::cout << csv;
    else {
        write_text_file(out_path, csv);
        std::cout << "wrote " << out_path << "\n";
    }
    return 0;
}

int run_analyze_block(const GraphOpts& gopts, std::uint32_t s, double c, double eps,
                      std::size_t num_seeds, std::uint64_t rng_seed, bool random_counterpart,
                      const std::string& out_path) {
    LoadedGraph lg = gopts.load();
    const Graph& g = lg.graph;

    auto mean_stat = [&](const Graph& target) {
        std::vector<NodeId> seeds = sample_seeds(target, num_seeds, rng_seed);
        Welford w;
        for (NodeId seed : seeds)
            w.add(block_structure_stat(target, seed, s, c, eps, gopts.threads));
        return w.mean();
    };

    std::string csv = "graph,S,stat\n";
    const std::string label = std::filesystem::path(gopts.path).filename().string();
    csv += label + "," + std::to_string(s) + "," + fmt(mean_stat(g)) + "\n";
    if (random_counterpart) {
        Graph random = generate_random_graph(g.node_count(), g.edge_count(), rng_seed,
                                             g.dangling_policy());
        csv += "random(" + std::to_string(g.node_count()) + "," +
               std::to_string(g.edge_count()) + ")," + std::to_string(s) + "," +
               fmt(mean_stat(random)) + "\n";
    }
    if (out_path.empty())
        std::cout << csv;
    else {
        write_text_file(out_path, csv);
        std::cout << "wrote " << out_path << "\n";
    }
    return 0;
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"random walk with restart scoring via cumulative iteration and "
                 "two-phase approximation"};
    app.require_subcommand(1);

    double c = kDefaultRestartProb, eps = kDefaultTolerance;

    // preprocess
    auto* pre = app.add_subcommand("preprocess", "build the stranger-tail artifact for a graph");
    GraphOpts pre_g;
    pre_g.attach(pre);
    std::uint32_t pre_t = 10;
    std::string pre_out;
    pre->add_option("--c", c, "restart probability")->capture_default_str();
    pre->add_option("--epsilon", eps, "convergence tolerance")->capture_default_str();
    pre->add_option("--T", pre_t, "first stranger iteration")->required();
    pre->add_option("--out", pre_out, "artifact output path")->required();

    // query
    auto* qry = app.add_subcommand("query", "single-seed online query against an artifact");
    GraphOpts qry_g;
    qry_g.attach(qry);
    std::string qry_artifact;
    std::uint64_t qry_seed = 0;
    std::uint32_t qry_s = 5;
    std::size_t qry_topk = 10;
    bool qry_exact = false, qry_na = false;
    qry->add_option("--artifact", qry_artifact, "artifact produced by preprocess")->required();
    qry->add_option("--seed", qry_seed, "seed node (external label)")->required();
    qry->add_option("--S", qry_s, "first neighbor iteration (family window size)")->required();
    qry->add_option("--top-k", qry_topk, "entries to print (0: the full vector)")
        ->capture_default_str();
    qry->add_flag("--exact", qry_exact, "also run the exact computation and report errors");
    qry->add_flag("--na", qry_na, "drop the stranger tail (ablation variant)");

    // evaluate
    auto* ev = app.add_subcommand("evaluate", "error/recall statistics over random seeds");
    GraphOpts ev_g;
    ev_g.attach(ev);
    std::uint32_t ev_s = 5, ev_t = 10;
    std::size_t ev_seeds = 30;
    std::uint64_t ev_rng = 1;
    std::string ev_out, ev_recall = "100,500,1000";
    ev->add_option("--S", ev_s, "first neighbor iteration")->required();
    ev->add_option("--T", ev_t, "first stranger iteration")->required();
    ev->add_option("--c", c, "restart probability")->capture_default_str();
    ev->add_option("--epsilon", eps, "convergence tolerance")->capture_default_str();
    ev->add_option("--num-seeds", ev_seeds, "random seed nodes to average")->capture_default_str();
    ev->add_option("--rng-seed", ev_rng, "seed-sampling RNG state")->capture_default_str();
    ev->add_option("--recall-k", ev_recall, "comma-separated recall cutoffs")
        ->capture_default_str();
    ev->add_option("--out", ev_out, "CSV output path")->required();

    // sweep
    auto* sw = app.add_subcommand("sweep", "vary S or T and record error/time trade-offs");
    GraphOpts sw_g;
    sw_g.attach(sw);
    std::string sw_vary, sw_range, sw_out;
    std::uint32_t sw_fixed = 0;
    std::size_t sw_seeds = 5;
    std::uint64_t sw_rng = 1;
    sw->add_option("--vary", sw_vary, "which parameter to vary: S or T")
        ->required()
        ->check(CLI::IsMember({"S", "T"}));
    sw->add_option("--range", sw_range, "inclusive range A..B")->required();
    sw->add_option("--fixed", sw_fixed, "value of the non-varied parameter")->required();
    sw->add_option("--c", c, "restart probability")->capture_default_str();
    sw->add_option("--epsilon", eps, "convergence tolerance")->capture_default_str();
    sw->add_option("--num-seeds", sw_seeds, "random seed nodes to average")->capture_default_str();
    sw->add_option("--rng-seed", sw_rng, "seed-sampling RNG state")->capture_default_str();
    sw->add_option("--out", sw_out, "CSV output path")->required();

    // analyze
    auto* an = app.add_subcommand("analyze", "structural statistics behind the approximations");
    GraphOpts an_g;
    an_g.attach(an);
    std::string an_mode, an_out, an_ivals = "1,3,5,7";
    std::size_t an_sample = 0, an_seeds = 1;
    std::uint64_t an_rng = 1;
    std::uint32_t an_s = 5;
    bool an_random = false;
    an->add_option("--mode", an_mode, "ci: column differences; block: family-part stability")
        ->required()
        ->check(CLI::IsMember({"ci", "block"}));
    an->add_option("--i-values", an_ivals, "powers for ci mode")->capture_default_str();
    an->add_option("--sample-size", an_sample, "columns per seed (0: min(n-1, 1000))")
        ->capture_default_str();
    an->add_option("--S", an_s, "family window for block mode")->capture_default_str();
    an->add_option("--c", c, "restart probability")->capture_default_str();
    an->add_option("--epsilon", eps, "convergence tolerance")->capture_default_str();
    an->add_option("--num-seeds", an_seeds, "random seed nodes to average")->capture_default_str();
    an->add_option("--rng-seed", an_rng, "seed-sampling RNG state")->capture_default_str();
    an->add_flag("--random-counterpart", an_random,
                 "also measure a random graph with matching n and m");
    an->add_option("--out", an_out, "CSV output path (default: stdout)");

    CLI11_PARSE(app, argc, argv);

    try {
        if (*pre) return run_preprocess(pre_g, c, eps, pre_t, pre_out);
        if (*qry) return run_query(qry_g, qry_artifact, qry_seed, qry_s, qry_topk, qry_exact, qry_na);
        if (*ev)
            return run_evaluate(ev_g, ev_s, ev_t, c, eps, ev_seeds, ev_rng, ev_recall, ev_out);
        if (*sw) {
            const auto dots = sw_range.find("..");
            if (dots == std::string::npos)
                throw std::runtime_error("--range must look like A..B");
            const std::uint32_t lo = std::stoul(sw_range.substr(0, dots));
            const std::uint32_t hi = std::stoul(sw_range.substr(dots + 2));
            return run_sweep(sw_g, sw_vary, lo, hi, sw_fixed, c, eps, sw_seeds, sw_rng, sw_out);
        }
        if (*an) {
            if (an_mode == "ci")
                return run_analyze_ci(an_g, an_ivals, an_sample, an_seeds, an_rng, an_out);
            return run_analyze_block(an_g, an_s, c, eps, an_seeds, an_rng, an_random, an_out);
        }
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 1;
    }
    return 0;
}
