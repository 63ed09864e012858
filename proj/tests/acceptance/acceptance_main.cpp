// Acceptance suite: runs every top-level correctness and reproduction
// criterion and prints one PASS/FAIL line per criterion, with the measured
// values indented below. Exits with the number of failed criteria.
//
// The desk-scale criteria run against the dataset named by
// RWRANK_SLASHDOT_EDGELIST (or --graph PATH). When neither is given, a
// deterministic synthetic social-network stand-in with matching node and
// edge counts is generated; the output labels which one was used.

#include <chrono>
#include <cmath>
#include <cstdio>
#include <cstdlib>
#include <cstring>
#include <fstream>
#include <functional>
#include <iostream>
#include <optional>
#include <random>
#include <sstream>
#include <string>
#include <vector>

#include "rwrank/analysis.hpp"
#include "rwrank/cpi.hpp"
#include "rwrank/metrics.hpp"
#include "rwrank/persistence.hpp"
#include "rwrank/tpa.hpp"
#include "support/dense_oracle.hpp"
#include "support/synthetic.hpp"

using namespace rwrank;

namespace {

using Clock = std::chrono::steady_clock;

double ms_since(Clock::time_point start) {
    return std::chrono::duration<double, std::milli>(Clock::now() - start).count();
}

struct Outcome {
    bool ok = true;
    std::vector<std::string> details;

    void check(bool cond, const std::string& what) {
        ok = ok && cond;
        details.push_back(std::string(cond ? "  ok   " : "  FAIL ") + what);
    }
    void note(const std::string& what) { details.push_back("  note " + what); }
};

std::string fmt(double v) {
    char buf[64];
    std::snprintf(buf, sizeof(buf), "%.6g", v);
    return buf;
}

// Fixed evaluation parameters for the desk-scale dataset.
constexpr double kC = 0.15;
constexpr double kEps = 1e-9;
constexpr std::uint32_t kS = 5;
constexpr std::uint32_t kT = 15;
constexpr std::size_t kNumSeeds = 30;
constexpr std::uint64_t kSeedRng = 9427;

std::vector<NodeId> sample_seeds(const Graph& g, std::size_t count, std::uint64_t rng_seed) {
    std::vector<bool> dangling(g.node_count(), false);
    for (NodeId u : g.dangling_nodes()) dangling[u] = true;
    std::vector<NodeId> pool;
    pool.reserve(g.node_count());
    for (NodeId u = 0; u < g.node_count(); ++u)
        if (!dangling[u]) pool.push_back(u);
    std::mt19937_64 rng(rng_seed);
    for (std::size_t i = 0; i < count && i < pool.size(); ++i) {
        std::uniform_int_distribution<std::size_t> pick(i, pool.size() - 1);
        std::swap(pool[i], pool[pick(rng)]);
    }
    pool.resize(std::min(count, pool.size()));
    return pool;
}

double mean(const std::vector<double>& v) {
    double s = 0.0;
    for (double e : v) s += e;
    return v.empty() ? 0.0 : s / static_cast<double>(v.size());
}

// Everything the desk-scale criteria share, measured single-threaded once.
struct DeskScale {
    Graph graph;
    bool surrogate = true;
    std::string label;
    std::vector<NodeId> seeds;
    StrangerArtifact artifact;

    std::vector<double> nb_err, st_err, tot_err;
    std::vector<double> recall100, recall500, recall1000;
    std::vector<double> online_ms, exact_ms;
    double table_ms = 0.0;  // preprocessing + per-seed error statistics block

    double nb_bound = 0.0, st_bound = 0.0, tot_bound = 0.0;
};

Graph build_surrogate() {
    rwrank::testing::CommunityGraphConfig cfg;
    cfg.node_count = 82144;
    cfg.edge_count = 549202;
    cfg.intra_prob = 0.80;
    cfg.region_prob = 0.10;
    cfg.region_communities = 12;
    cfg.reciprocal_prob = 0.9;
    cfg.target_skew = 2.0;
    cfg.global_skew = 2.0;
    cfg.degree_alpha = 2.2;
    cfg.min_community = 20;
    cfg.max_community = 200;
    cfg.size_alpha = 1.3;
    cfg.rng_seed = 20260808;
    return rwrank::testing::make_community_graph(cfg);
}

DeskScale prepare_desk_scale(const std::string& graph_path) {
    DeskScale ctx{Graph(1, {{0, 0}}, DanglingPolicy::SelfLoop)};
    if (!graph_path.empty()) {
        ctx.graph = load_edge_list(graph_path, DanglingPolicy::SelfLoop).graph;
        ctx.surrogate = false;
        ctx.label = graph_path;
    } else {
        ctx.graph = build_surrogate();
        ctx.surrogate = true;
        ctx.label = "synthetic stand-in (n=82144, m=549202 requested)";
    }
    const Graph& g = ctx.graph;
    std::printf("dataset: %s  [n=%u m=%llu dangling=%zu]\n", ctx.label.c_str(), g.node_count(),
                static_cast<unsigned long long>(g.edge_count()), g.dangling_nodes().size());

    ctx.seeds = sample_seeds(g, kNumSeeds, kSeedRng);

    const double keep = 1.0 - kC;
    ctx.nb_bound = 2.0 * (std::pow(keep, kS) - std::pow(keep, kT));
    ctx.st_bound = 2.0 * std::pow(keep, kT);
    ctx.tot_bound = 2.0 * std::pow(keep, kS);

    const auto table_start = Clock::now();
    ctx.artifact = preprocess(g, kC, kEps, kT, /*threads=*/1);

    const std::size_t ks[] = {100, 500, 1000};
    for (NodeId seed : ctx.seeds) {
        auto q_start = Clock::now();
        ScoreVector approx = query(g, ctx.artifact, seed, kS, 1);
        ctx.online_ms.push_back(ms_since(q_start));

        auto e_start = Clock::now();
        ScoreVector exact = exact_rwr(g, seed, kC, kEps, 1);
        ctx.exact_ms.push_back(ms_since(e_start));

        ErrorReport report = bound_report(g, ctx.artifact, seed, kS, ks, 1);
        ctx.nb_err.push_back(report.neighbor.l1_error);
        ctx.st_err.push_back(report.stranger.l1_error);
        ctx.tot_err.push_back(report.total.l1_error);
        ctx.recall100.push_back(report.recall.at(100));
        ctx.recall500.push_back(report.recall.at(500));
        ctx.recall1000.push_back(report.recall.at(1000));
        (void)approx;
        (void)exact;
    }
    ctx.table_ms = ms_since(table_start);
    return ctx;
}

// 1. Full-window scores match a dense linear solve on small random graphs.
Outcome oracle_equivalence() {
    Outcome out;
    const auto start = Clock::now();
    std::mt19937_64 rng(11);
    double worst = 0.0;
    for (int trial = 0; trial < 50; ++trial) {
        const NodeId n = 2 + static_cast<NodeId>(rng() % 49);
        const std::uint64_t max_m = std::uint64_t(n) * (n - 1);
        const std::uint64_t m = std::min<std::uint64_t>(1 + rng() % (4 * std::uint64_t(n)), max_m);
        Graph g = generate_random_graph(n, m, rng(), DanglingPolicy::SelfLoop);
        auto dense = rwrank::testing::dense_transition(g);
        const NodeId seed = static_cast<NodeId>(rng() % n);
        for (double c : {0.05, 0.15, 0.5}) {
            ScoreVector q(n, 0.0);
            q[seed] = 1.0;
            ScoreVector want = rwrank::testing::dense_rwr_solve(dense, q, c);
            ScoreVector got = exact_rwr(g, seed, c, 1e-12);
            for (NodeId v = 0; v < n; ++v) worst = std::max(worst, std::abs(got[v] - want[v]));
        }
    }
    const double elapsed = ms_since(start);
    out.check(worst < 1e-8, "max entrywise deviation " + fmt(worst) + " < 1e-8 over 50 graphs");
    out.check(elapsed < 10000.0, "runtime " + fmt(elapsed) + " ms < 10 s");
    return out;
}

// 2. Interim norms follow c(1-c)^i; family/neighbor masses match closed forms.
Outcome norm_identities() {
    Outcome out;
    std::mt19937_64 rng(23);
    double worst_iter = 0.0, worst_mass = 0.0;
    for (int trial = 0; trial < 20; ++trial) {
        const NodeId n = 8 + static_cast<NodeId>(rng() % 40);
        const DanglingPolicy policy =
            trial % 2 ? DanglingPolicy::Uniform : DanglingPolicy::SelfLoop;
        Graph g = generate_random_graph(n, 4 * n, rng(), policy);
        const NodeId seed = static_cast<NodeId>(rng() % n);

        ScoreVector x(n, 0.0);
        x[seed] = kC;
        for (std::uint32_t i = 1; i <= 50; ++i) {
            x = propagation_sweep(g, x, kC);
            worst_iter = std::max(worst_iter, std::abs(l1_norm(x) - kC * std::pow(1.0 - kC, i)));
        }

        const std::uint32_t s = 1 + rng() % 6;
        const std::uint32_t t = s + 1 + rng() % 9;
        const std::uint32_t bounds[] = {s, t};
        auto parts = cpi_partition(g, SeedSet::single(seed), kC, 1e-12, bounds);
        const double keep = 1.0 - kC;
        worst_mass = std::max(worst_mass,
                              std::abs(l1_norm(parts[0]) - (1.0 - std::pow(keep, s))));
        worst_mass = std::max(worst_mass, std::abs(l1_norm(parts[1]) -
                                                   (std::pow(keep, s) - std::pow(keep, t))));
    }
    out.check(worst_iter < 1e-12,
              "max |iteration norm - c(1-c)^i| = " + fmt(worst_iter) + " < 1e-12 (i <= 50)");
    out.check(worst_mass < 1e-9,
              "max family/neighbor mass deviation " + fmt(worst_mass) + " < 1e-9");
    return out;
}

// 3. Neighbor/stranger/total errors never exceed their closed-form bounds.
Outcome bound_guarantees() {
    Outcome out;
    std::mt19937_64 rng(31);
    std::size_t violations = 0, trials = 0;
    double tightest = 0.0;
    while (trials < 1000) {
        const NodeId n = 5 + static_cast<NodeId>(rng() % 56);
        const std::uint64_t max_m = std::uint64_t(n) * (n - 1);
        const std::uint64_t m = std::min<std::uint64_t>(n + rng() % (4 * std::uint64_t(n)), max_m);
        const DanglingPolicy policy = static_cast<DanglingPolicy>(rng() % 3);
        Graph g = generate_random_graph(n, m, rng(), policy);
        const std::uint32_t s = 1 + rng() % 8;
        const std::uint32_t t = s + 1 + rng() % 12;
        const double c = 0.05 + 0.90 * static_cast<double>(rng() % 1000) / 1000.0;
        const NodeId seed = static_cast<NodeId>(rng() % n);

        const std::uint32_t bounds[] = {s, t};
        auto parts = cpi_partition(g, SeedSet::single(seed), c, 1e-12, bounds);
        StrangerArtifact artifact = preprocess(g, c, 1e-12, t);
        const double scale = neighbor_scale_factor(c, s, t);
        double nb = 0.0, st = 0.0, tot = 0.0;
        for (NodeId v = 0; v < n; ++v) {
            const double nb_approx = scale * parts[0][v];
            nb += std::abs(parts[1][v] - nb_approx);
            st += std::abs(parts[2][v] - artifact.stranger_scores[v]);
            tot += std::abs(parts[1][v] + parts[2][v] - nb_approx - artifact.stranger_scores[v]);
        }
        const double keep = 1.0 - c;
        const double nb_bound = 2.0 * (std::pow(keep, s) - std::pow(keep, t));
        const double st_bound = 2.0 * std::pow(keep, t);
        const double tot_bound = 2.0 * std::pow(keep, s);
        if (nb > nb_bound + 1e-12 || st > st_bound + 1e-12 || tot > tot_bound + 1e-12)
            ++violations;
        tightest = std::max({tightest, nb / nb_bound, st / st_bound, tot / tot_bound});
        ++trials;
    }
    out.check(violations == 0, "0 violations in " + std::to_string(trials) +
                                   " randomized trials (worst ratio " + fmt(tightest) + ")");
    return out;
}

// 4. Error statistics against the published-target windows.
Outcome error_statistics(const DeskScale& ctx) {
    Outcome out;
    const double nb_ratio = mean(ctx.nb_err) / ctx.nb_bound;
    const double st_ratio = mean(ctx.st_err) / ctx.st_bound;
    const double tot_ratio = mean(ctx.tot_err) / ctx.tot_bound;
    out.note("bounds: neighbor " + fmt(ctx.nb_bound) + ", stranger " + fmt(ctx.st_bound) +
             ", total " + fmt(ctx.tot_bound));
    out.note("mean errors: neighbor " + fmt(mean(ctx.nb_err)) + ", stranger " +
             fmt(mean(ctx.st_err)) + ", total " + fmt(mean(ctx.tot_err)));
    out.check(tot_ratio >= 0.02 && tot_ratio <= 0.12,
              "total error ratio " + fmt(tot_ratio) + " in [0.02, 0.12]");
    out.check(nb_ratio >= 0.25 && nb_ratio <= 0.70,
              "neighbor error ratio " + fmt(nb_ratio) + " in [0.25, 0.70]");
    out.check(st_ratio >= 0.25 && st_ratio <= 0.75,
              "stranger error ratio " + fmt(st_ratio) + " in [0.25, 0.75]");
    out.check(ctx.table_ms < 300000.0,
              "single-threaded statistics block took " + fmt(ctx.table_ms / 1000.0) + " s < 300 s");
    return out;
}

// 5. Top-k recall of the approximation against the exact ranking.
Outcome topk_recall(const DeskScale& ctx) {
    Outcome out;
    const double r100 = mean(ctx.recall100);
    const double r500 = mean(ctx.recall500);
    const double r1000 = mean(ctx.recall1000);
    out.check(r100 >= 0.95, "mean recall@100 = " + fmt(r100) + " >= 0.95");
    out.check(r500 >= 0.95, "mean recall@500 = " + fmt(r500) + " >= 0.95");
    out.check(r1000 >= 0.95, "mean recall@1000 = " + fmt(r1000) + " >= 0.95");
    return out;
}

// 6. Family-part stability: structured graph beats a degree-matched random one.
Outcome block_structure(const DeskScale& ctx) {
    Outcome out;
    const Graph& g = ctx.graph;
    std::vector<double> real_stats;
    for (NodeId seed : ctx.seeds)
        real_stats.push_back(block_structure_stat(g, seed, kS, kC, kEps));

    Graph random = generate_random_graph(g.node_count(), g.edge_count(), 77,
                                         g.dangling_policy());
    std::vector<double> random_stats;
    for (NodeId seed : sample_seeds(random, kNumSeeds, kSeedRng))
        random_stats.push_back(block_structure_stat(random, seed, kS, kC, kEps));

    const double real_mean = mean(real_stats), random_mean = mean(random_stats);
    out.check(real_mean < random_mean, "mean stability statistic " + fmt(real_mean) +
                                           " (structured) < " + fmt(random_mean) + " (random)");
    return out;
}

// 7. Transition-power columns: difference statistic falls, nonzeros grow.
Outcome column_trends(const DeskScale& ctx) {
    Outcome out;
    const std::uint32_t powers[] = {1, 7};
    std::vector<double> c1, c7, n1, n7;
    for (std::size_t i = 0; i < ctx.seeds.size(); ++i) {
        auto stats = column_difference_profile(ctx.graph, ctx.seeds[i], powers, 30, kSeedRng + i);
        c1.push_back(stats[0].c_i_estimate);
        c7.push_back(stats[1].c_i_estimate);
        n1.push_back(stats[0].mean_nnz_per_column);
        n7.push_back(stats[1].mean_nnz_per_column);
    }
    out.check(mean(c7) < mean(c1), "column difference falls: " + fmt(mean(c1)) + " (i=1) -> " +
                                       fmt(mean(c7)) + " (i=7)");
    out.check(mean(n7) > mean(n1), "mean column nonzeros grow: " + fmt(mean(n1)) + " (i=1) -> " +
                                       fmt(mean(n7)) + " (i=7)");
    return out;
}

// 8. Parameter effects: more exact iterations cost time and buy accuracy;
//    the two approximation errors move in opposite directions with T.
Outcome parameter_trends(const DeskScale& ctx) {
    Outcome out;
    const Graph& g = ctx.graph;
    const std::uint32_t boundaries[] = {2, 5, 6, 7, 10, 20};
    auto pagerank_parts =
        cpi_partition(g, SeedSet::all_nodes(g.node_count()), kC, kEps, boundaries, 1);
    auto tail_after = [&](std::uint32_t boundary) {
        const std::size_t idx =
            std::lower_bound(std::begin(boundaries), std::end(boundaries), boundary) -
            std::begin(boundaries);
        ScoreVector tail(g.node_count(), 0.0);
        for (std::size_t seg = idx + 1; seg < pagerank_parts.size(); ++seg)
            for (NodeId v = 0; v < g.node_count(); ++v) tail[v] += pagerank_parts[seg][v];
        return tail;
    };
    StrangerArtifact art10{tail_after(10), g.fingerprint(), kC, kEps, 10};
    StrangerArtifact art6{tail_after(6), g.fingerprint(), kC, kEps, 6};
    StrangerArtifact art20{tail_after(20), g.fingerprint(), kC, kEps, 20};

    double err_s2 = 0.0, err_s7 = 0.0, ms_s2 = 0.0, ms_s7 = 0.0;
    double st_t6 = 0.0, st_t20 = 0.0, nb_t6 = 0.0, nb_t20 = 0.0;
    for (NodeId seed : ctx.seeds) {
        auto parts = cpi_partition(g, SeedSet::single(seed), kC, kEps, boundaries, 1);
        std::vector<ScoreVector> prefix(parts.size());
        prefix[0] = parts[0];
        for (std::size_t i = 1; i < parts.size(); ++i) {
            prefix[i] = prefix[i - 1];
            for (NodeId v = 0; v < g.node_count(); ++v) prefix[i][v] += parts[i][v];
        }
        auto prefix_at = [&](std::uint32_t b) -> const ScoreVector& {
            const std::size_t idx =
                std::lower_bound(std::begin(boundaries), std::end(boundaries), b) -
                std::begin(boundaries);
            return prefix[idx + 1];
        };
        const ScoreVector& full = prefix.back();

        auto tpa_l1 = [&](std::uint32_t s, const StrangerArtifact& art) {
            const ScoreVector& fam = prefix_at(s);
            const double scale = neighbor_scale_factor(kC, s, art.stranger_start);
            double err = 0.0;
            for (NodeId v = 0; v < g.node_count(); ++v)
                err += std::abs(full[v] - ((1.0 + scale) * fam[v] + art.stranger_scores[v]));
            return err;
        };
        err_s2 += tpa_l1(2, art10);
        err_s7 += tpa_l1(7, art10);

        auto part_errors = [&](std::uint32_t t, const StrangerArtifact& art, double& nb_acc,
                               double& st_acc) {
            const ScoreVector& fam = prefix_at(kS);
            const ScoreVector& t_prefix = prefix_at(t);
            const double scale = neighbor_scale_factor(kC, kS, t);
            for (NodeId v = 0; v < g.node_count(); ++v) {
                nb_acc += std::abs((t_prefix[v] - fam[v]) - scale * fam[v]);
                st_acc += std::abs((full[v] - t_prefix[v]) - art.stranger_scores[v]);
            }
        };
        part_errors(6, art6, nb_t6, st_t6);
        part_errors(20, art20, nb_t20, st_t20);

        auto t2 = Clock::now();
        ScoreVector q2 = query(g, art10, seed, 2, 1);
        ms_s2 += ms_since(t2);
        auto t7 = Clock::now();
        ScoreVector q7 = query(g, art10, seed, 7, 1);
        ms_s7 += ms_since(t7);
        (void)q2;
        (void)q7;
    }
    out.check(err_s7 < err_s2, "T=10: mean L1 error falls with S: " + fmt(err_s2 / 30.0) +
                                   " (S=2) -> " + fmt(err_s7 / 30.0) + " (S=7)");
    out.check(ms_s7 > ms_s2, "T=10: mean online time grows with S: " + fmt(ms_s2 / 30.0) +
                                 " ms (S=2) -> " + fmt(ms_s7 / 30.0) + " ms (S=7)");
    out.check(st_t20 < st_t6, "S=5: stranger-approximation error falls with T: " +
                                  fmt(st_t6 / 30.0) + " (T=6) -> " + fmt(st_t20 / 30.0) +
                                  " (T=20)");
    out.check(nb_t20 > nb_t6, "S=5: neighbor-approximation error grows with T: " +
                                  fmt(nb_t6 / 30.0) + " (T=6) -> " + fmt(nb_t20 / 30.0) +
                                  " (T=20)");
    return out;
}

// 9. The online phase beats the full exact computation by a wide margin.
Outcome online_speedup(const DeskScale& ctx) {
    Outcome out;
    const double exact = mean(ctx.exact_ms);
    const double online = mean(ctx.online_ms);
    const double speedup = exact / std::max(online, 1e-9);
    out.note("mean exact " + fmt(exact) + " ms, mean online " + fmt(online) + " ms");
    out.check(speedup >= 5.0, "speedup " + fmt(speedup) + "x >= 5x");
    return out;
}

// 10. Dropping the stranger term never helps ranking, and removes exactly
//     the precomputed tail mass.
Outcome stranger_ablation(const DeskScale& ctx) {
    Outcome out;
    const Graph& g = ctx.graph;
    TpaParams params;
    params.family_end = kS;
    params.stranger_start = kT;
    params.restart_prob = kC;
    params.tolerance = kEps;

    const double tail_norm = std::pow(1.0 - kC, kT);
    double worst_gap = 0.0;
    std::vector<double> na_recall;
    for (std::size_t i = 0; i < ctx.seeds.size(); ++i) {
        const NodeId seed = ctx.seeds[i];
        ScoreVector with = query(g, ctx.artifact, seed, kS, 1);
        ScoreVector without = query_na(g, seed, params, 1);
        worst_gap = std::max(worst_gap, std::abs(l1_error(with, without) - tail_norm));
        ScoreVector exact = exact_rwr(g, seed, kC, kEps, 1);
        na_recall.push_back(recall_at_k(exact, without, 100));
    }
    const double tpa100 = mean(ctx.recall100);
    const double na100 = mean(na_recall);
    out.check(tpa100 >= na100, "mean recall@100 with tail " + fmt(tpa100) +
                                   " >= without " + fmt(na100));
    out.check(worst_gap <= kEps / kC,
              "max |gap - (1-c)^T| = " + fmt(worst_gap) + " <= eps/c");
    return out;
}

// 11. Artifact persistence: bitwise round trip, corruption and staleness.
Outcome persistence_contract() {
    Outcome out;
    Graph g = generate_random_graph(64, 256, 3);
    StrangerArtifact artifact = preprocess(g, kC, kEps, 10);
    const auto path = rwrank::testing::temp_path("acceptance_artifact", ".tpa");
    rwrank::testing::TempFile cleanup(path);

    save_artifact(artifact, path);
    StrangerArtifact loaded = load_artifact(path);
    const bool bitwise =
        loaded.stranger_scores.size() == artifact.stranger_scores.size() &&
        std::memcmp(loaded.stranger_scores.data(), artifact.stranger_scores.data(),
                    artifact.stranger_scores.size() * sizeof(double)) == 0 &&
        loaded.graph_fingerprint == artifact.graph_fingerprint &&
        loaded.stranger_start == artifact.stranger_start;
    out.check(bitwise, "round trip reproduces the artifact bitwise");

    std::ifstream in(path, std::ios::binary);
    std::string bytes((std::istreambuf_iterator<char>(in)), std::istreambuf_iterator<char>());
    in.close();
    bytes[bytes.size() / 2] = static_cast<char>(bytes[bytes.size() / 2] ^ 0x10);
    const auto bad_path = rwrank::testing::temp_path("acceptance_corrupt", ".tpa");
    rwrank::testing::TempFile cleanup2(bad_path);
    std::ofstream outf(bad_path, std::ios::binary);
    outf.write(bytes.data(), static_cast<std::streamsize>(bytes.size()));
    outf.close();
    bool rejected = false;
    try {
        load_artifact(bad_path);
    } catch (const std::exception&) {
        rejected = true;
    }
    out.check(rejected, "corrupted file is rejected");

    bool blocked = false;
    try {
        Graph other = generate_random_graph(64, 256, 4);
        query(other, loaded, 0, 5);
    } catch (const std::exception&) {
        blocked = true;
    }
    out.check(blocked, "fingerprint mismatch blocks queries");
    return out;
}

}  // namespace

int main(int argc, char** argv) {
    std::string graph_path;
    for (int i = 1; i + 1 < argc; ++i)
        if (std::string(argv[i]) == "--graph") graph_path = argv[i + 1];
    if (graph_path.empty())
        if (const char* env = std::getenv("RWRANK_SLASHDOT_EDGELIST")) graph_path = env;

    std::printf("== acceptance suite ==\n");
    DeskScale ctx = prepare_desk_scale(graph_path);

    struct Entry {
        int id;
        const char* name;
        std::function<Outcome()> run;
    };
    const Entry entries[] = {
        {1, "dense-oracle equivalence", [] { return oracle_equivalence(); }},
        {2, "iteration norm identities", [] { return norm_identities(); }},
        {3, "approximation error bounds", [] { return bound_guarantees(); }},
        {4, "error statistics vs published targets", [&] { return error_statistics(ctx); }},
        {5, "top-k recall", [&] { return topk_recall(ctx); }},
        {6, "block-structure stability", [&] { return block_structure(ctx); }},
        {7, "transition-column trends", [&] { return column_trends(ctx); }},
        {8, "parameter trade-off trends", [&] { return parameter_trends(ctx); }},
        {9, "online speedup", [&] { return online_speedup(ctx); }},
        {10, "stranger-term ablation", [&] { return stranger_ablation(ctx); }},
        {11, "artifact persistence", [] { return persistence_contract(); }},
    };

    int failures = 0;
    for (const Entry& entry : entries) {
        const auto start = Clock::now();
        Outcome out = entry.run();
        const double elapsed = ms_since(start);
        if (!out.ok) ++failures;
        std::printf("[%s] %2d. %s (%.1f s)\n", out.ok ? "PASS" : "FAIL", entry.id, entry.name,
                    elapsed / 1000.0);
        for (const std::string& line : out.details) std::printf("%s\n", line.c_str());
        std::fflush(stdout);
    }
    std::printf("== %d/%zu criteria passed ==\n", static_cast<int>(std::size(entries)) - failures,
                std::size(entries));
    return failures;
}
