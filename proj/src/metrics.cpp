#include "rwrank/metrics.hpp"

#include <algorithm>
#include <cmath>
#include <cstdio>
#include <numeric>
#include <ostream>
#include <stdexcept>

namespace rwrank {

double l1_norm(std::span<const double> v) {
    double s = 0.0;
    for (double e : v) s += std::abs(e);
    return s;
}

double l1_error(std::span<const double> a, std::span<const double> b) {
    if (a.size() != b.size()) throw std::invalid_argument("score vector length mismatch");
    double s = 0.0;
    for (std::size_t i = 0; i < a.size(); ++i) s += std::abs(a[i] - b[i]);
    return s;
}

std::vector<NodeId> top_k_nodes(const ScoreVector& scores, std::size_t k) {
    if (k < 1 || k > scores.size())
        throw std::out_of_range("k must be in [1, n], got " + std::to_string(k));
    std::vector<NodeId> idx(scores.size());
    std::iota(idx.begin(), idx.end(), NodeId{0});
    std::partial_sort(idx.begin(), idx.begin() + k, idx.end(), [&scores](NodeId a, NodeId b) {
        if (scores[a] != scores[b]) return scores[a] > scores[b];
        return a < b;
    });
    idx.resize(k);
    return idx;
}

double recall_at_k(const ScoreVector& exact, const ScoreVector& approx, std::size_t k) {
    if (exact.size() != approx.size()) throw std::invalid_argument("score vector length mismatch");
    std::vector<NodeId> top_exact = top_k_nodes(exact, k);
    std::vector<NodeId> top_approx = top_k_nodes(approx, k);
    std::sort(top_exact.begin(), top_exact.end());
    std::sort(top_approx.begin(), top_approx.end());
    std::size_t hits = 0;
    auto it = top_approx.begin();
    for (NodeId id : top_exact) {
        while (it != top_approx.end() && *it < id) ++it;
        if (it != top_approx.end() && *it == id) ++hits;
    }
    return static_cast<double>(hits) / static_cast<double>(k);
}

namespace {

// 1-based ranks by ascending value; runs of equal values get the average
// rank of their positions.
std::vector<double> fractional_ranks(const ScoreVector& v) {
    const std::size_t n = v.size();
    std::vector<std::size_t> order(n);
    std::iota(order.begin(), order.end(), std::size_t{0});
    std::sort(order.begin(), order.end(),
              [&v](std::size_t a, std::size_t b) { return v[a] < v[b]; });

    std::vector<double> ranks(n);
    std::size_t i = 0;
    while (i < n) {
        std::size_t j = i;
        while (j + 1 < n && v[order[j + 1]] == v[order[i]]) ++j;
        const double avg = 0.5 * static_cast<double>(i + j) + 1.0;
        for (std::size_t k = i; k <= j; ++k) ranks[order[k]] = avg;
        i = j + 1;
    }
    return ranks;
}

}  // namespace

std::optional<double> spearman(const ScoreVector& exact, const ScoreVector& approx) {
    if (exact.size() != approx.size()) throw std::invalid_argument("score vector length mismatch");
    const std::size_t n = exact.size();
    if (n < 2) throw std::invalid_argument("spearman requires at least two entries");

    const std::vector<double> ra = fractional_ranks(exact);
    const std::vector<double> rb = fractional_ranks(approx);

    const double mean = 0.5 * static_cast<double>(n + 1);
    double cov = 0.0, var_a = 0.0, var_b = 0.0;
    for (std::size_t i = 0; i < n; ++i) {
        const double da = ra[i] - mean;
        const double db = rb[i] - mean;
        cov += da * db;
        var_a += da * da;
        var_b += db * db;
    }
    if (var_a == 0.0 || var_b == 0.0) return std::nullopt;
    return cov / std::sqrt(var_a * var_b);
}

ErrorReport bound_report(const Graph& g, NodeId seed, const TpaParams& params,
                         std::span<const std::size_t> recall_ks, int threads) {
    params.validate();
    StrangerArtifact artifact =
        preprocess(g, params.restart_prob, params.tolerance, params.stranger_start, threads);
    return bound_report(g, artifact, seed, params.family_end, recall_ks, threads);
}

ErrorReport bound_report(const Graph& g, const StrangerArtifact& artifact, NodeId seed,
                         std::uint32_t family_end, std::span<const std::size_t> recall_ks,
                         int threads) {
    if (artifact.graph_fingerprint != g.fingerprint())
        throw std::runtime_error("stale artifact: graph fingerprint mismatch");
    const double c = artifact.restart_prob;
    const double eps = artifact.tolerance;
    const std::uint32_t s_iter = family_end;
    const std::uint32_t t_iter = artifact.stranger_start;
    if (s_iter < 1 || s_iter >= t_iter)
        throw std::invalid_argument("family_end (S) must satisfy 1 <= S < T");

    const std::uint32_t bounds[] = {s_iter, t_iter};
    std::vector<ScoreVector> parts =
        cpi_partition(g, SeedSet::single(seed), c, eps, bounds, threads);
    const ScoreVector& family = parts[0];
    const ScoreVector& neighbor = parts[1];
    const ScoreVector& stranger = parts[2];

    const NodeId n = g.node_count();
    const double scale = neighbor_scale_factor(c, s_iter, t_iter);
    ScoreVector exact(n), approx(n);
    double nb_err = 0.0, st_err = 0.0, total_err = 0.0;
    for (NodeId v = 0; v < n; ++v) {
        const double nb_approx = scale * family[v];
        const double st_approx = artifact.stranger_scores[v];
        exact[v] = family[v] + neighbor[v] + stranger[v];
        approx[v] = family[v] + nb_approx + st_approx;
        nb_err += std::abs(neighbor[v] - nb_approx);
        st_err += std::abs(stranger[v] - st_approx);
        total_err += std::abs(exact[v] - approx[v]);
    }

    const double keep = 1.0 - c;
    ErrorReport report;
    report.neighbor.theoretical_bound = 2.0 * (std::pow(keep, s_iter) - std::pow(keep, t_iter));
    report.stranger.theoretical_bound = 2.0 * std::pow(keep, t_iter);
    report.total.theoretical_bound = 2.0 * std::pow(keep, s_iter);
    report.neighbor.l1_error = nb_err;
    report.stranger.l1_error = st_err;
    report.total.l1_error = total_err;
    for (auto* part : {&report.neighbor, &report.stranger, &report.total})
        part->bound_ratio = part->l1_error / part->theoretical_bound;

    for (std::size_t k : recall_ks) report.recall[k] = recall_at_k(exact, approx, k);
    report.spearman = spearman(exact, approx);
    return report;
}

namespace {

void append_csv_row(std::string& out, const char* part, const ApproximationError& e) {
    char buf[160];
    std::snprintf(buf, sizeof(buf), "l1_error,%s,%.9g,%.9g,%.9g\n", part, e.theoretical_bound,
                  e.l1_error, e.bound_ratio);
    out += buf;
}

}  // namespace

void write_csv(const ErrorReport& report, std::ostream& out) {
    std::string text = "metric,part,bound,value,ratio\n";
    append_csv_row(text, "neighbor", report.neighbor);
    append_csv_row(text, "stranger", report.stranger);
    append_csv_row(text, "total", report.total);
    char buf[120];
    for (const auto& [k, r] : report.recall) {
        std::snprintf(buf, sizeof(buf), "recall,%zu,,%.9g,\n", k, r);
        text += buf;
    }
    if (report.spearman) {
        std::snprintf(buf, sizeof(buf), "spearman,,,%.9g,\n", *report.spearman);
        text += buf;
    }
    out << text;
}

void write_table(const ErrorReport& report, std::ostream& out) {
    char buf[200];
    out << "part      theoretical bound  actual error  percentage\n";
    const std::pair<const char*, const ApproximationError*> rows[] = {
        {"neighbor", &report.neighbor}, {"stranger", &report.stranger}, {"total", &report.total}};
    for (const auto& [name, e] : rows) {
        std::snprintf(buf, sizeof(buf), "%-9s %17.6f %13.6f %9.2f%%\n", name,
                      e->theoretical_bound, e->l1_error, 100.0 * e->bound_ratio);
        out << buf;
    }
    for (const auto& [k, r] : report.recall) {
        std::snprintf(buf, sizeof(buf), "recall@%-5zu %.6f\n", k, r);
        out << buf;
    }
    if (report.spearman) {
        std::snprintf(buf, sizeof(buf), "spearman     %.6f\n", *report.spearman);
        out << buf;
    }
}

}  // namespace rwrank
