#include "flatcurve/isolation.hpp"

#include <algorithm>
#include <cmath>
#include <stdexcept>

namespace flatcurve {

namespace {

std::optional<GammaParams> try_fit(const DistanceDistribution& dist) {
    try {
        return fit_gamma(dist);
    } catch (const std::runtime_error&) {
        return std::nullopt;
    }
}

std::vector<NodeId> sample_sources(const Graph& g, std::size_t trials, Rng& rng) {
    if (trials == 0)
        throw std::invalid_argument("source_trials must be >= 1");
    const std::size_t k = std::min(trials, g.active_count());
    std::vector<NodeId> sources = sample_without_replacement(rng, g.active_nodes(), k);
    std::sort(sources.begin(), sources.end());
    return sources;
}

FlatteningReport compare_curves(const Graph& before, const Graph& after,
                                std::span<const NodeId> sources) {
    FlatteningReport rep;
    rep.curve_before = averaged_curve(before, sources);
    rep.curve_after = averaged_curve(after, sources);
    rep.gamma_before = try_fit(rep.curve_before);
    rep.gamma_after = try_fit(rep.curve_after);
    rep.peak_drop = curve_peak(rep.curve_after).value / curve_peak(rep.curve_before).value;
    rep.mean_distance_change = mean_distance(rep.curve_after) - mean_distance(rep.curve_before);
    return rep;
}

}  // namespace

IsolationPlan plan_and_isolate(Graph& g, const CentralityScores& scores, std::size_t count) {
    IsolationPlan plan;
    plan.measure = scores.measure;
    if (count == 0)
        return plan;
    const std::vector<NodeId> ranked = rank_top(scores, scores.active.size());
    for (NodeId candidate : ranked) {
        if (plan.targets.size() == count)
            break;
        if (!g.connected_without(candidate)) {
            plan.skipped.push_back(candidate);
            continue;
        }
        g.isolate_node(candidate);
        plan.targets.push_back(candidate);
    }
    return plan;
}

Scenario1Result scenario1(const Graph& g, Measure measure, double fraction,
                          std::size_t source_trials, Rng& rng, double kappa, double damping) {
    if (fraction <= 0.0 || fraction >= 1.0)
        throw std::invalid_argument("scenario1: fraction must be in (0,1)");
    if (!g.is_connected())
        throw std::invalid_argument("scenario1: graph must be connected");
    const auto count = static_cast<std::size_t>(
        std::floor(fraction * static_cast<double>(g.active_count())));
    if (count >= g.active_count() - 1)
        throw std::invalid_argument("would empty graph: fraction removes all but one node");

    const CentralityScores scores = compute_centrality(g, measure, kappa, damping);
    Scenario1Result result;
    result.graph_after = g;
    result.plan = plan_and_isolate(result.graph_after, scores, count);
    result.plan.fraction_or_threshold = fraction;

    const std::vector<NodeId> sources = sample_sources(result.graph_after, source_trials, rng);
    result.report = compare_curves(g, result.graph_after, sources);
    return result;
}

Scenario2Result scenario2(const Graph& g, Measure measure, double threshold,
                          std::size_t source_trials, Rng& rng, bool recompute,
                          double kappa, double damping) {
    if (threshold <= 0.0 || threshold > 1.0)
        throw std::invalid_argument("scenario2: threshold must be in (0,1]");
    if (!g.is_connected())
        throw std::invalid_argument("scenario2: graph must be connected");

    Scenario2Result result;
    result.graph_after = g;
    result.plan.measure = measure;
    result.plan.fraction_or_threshold = threshold;
    Graph& current = result.graph_after;

    // One source draw up front; sources that get isolated later drop out of
    // both curves, so every comparison stays like-for-like.
    std::vector<NodeId> sources = sample_sources(g, source_trials, rng);
    DistanceDistribution curve_before = averaged_curve(g, sources);
    double pre_peak = curve_peak(curve_before).value;
    DistanceDistribution curve_after = curve_before;
    double ratio = 1.0;

    const std::size_t budget = g.active_count() / 2;
    std::vector<NodeId> ranked = rank_top(compute_centrality(g, measure, kappa, damping),
                                          g.active_count());
    std::size_t next_rank = 0;

    result.threshold_reached = ratio <= threshold;
    while (!result.threshold_reached && result.plan.targets.size() < budget) {
        // Pick the best-ranked active node whose removal keeps connectivity.
        NodeId victim = -1;
        if (recompute) {
            const CentralityScores scores = compute_centrality(current, measure, kappa, damping);
            for (NodeId candidate : rank_top(scores, scores.active.size())) {
                if (current.connected_without(candidate)) {
                    victim = candidate;
                    break;
                }
                if (std::find(result.plan.skipped.begin(), result.plan.skipped.end(),
                              candidate) == result.plan.skipped.end())
                    result.plan.skipped.push_back(candidate);
            }
        } else {
            while (next_rank < ranked.size()) {
                const NodeId candidate = ranked[next_rank++];
                if (current.connected_without(candidate)) {
                    victim = candidate;
                    break;
                }
                result.plan.skipped.push_back(candidate);
            }
        }
        if (victim < 0)
            break;  // ranking exhausted

        current.isolate_node(victim);
        result.plan.targets.push_back(victim);
        // A node skipped on an earlier, denser graph may be safe to cut now.
        std::erase(result.plan.skipped, victim);

        const auto as_source = std::find(sources.begin(), sources.end(), victim);
        if (as_source != sources.end()) {
            sources.erase(as_source);
            if (sources.empty())
                throw std::runtime_error("scenario2: every source node was isolated");
            curve_before = averaged_curve(g, sources);
            pre_peak = curve_peak(curve_before).value;
        }
        curve_after = averaged_curve(current, sources);
        ratio = curve_peak(curve_after).value / pre_peak;
        result.threshold_reached = ratio <= threshold;
    }

    result.isolated_count = result.plan.targets.size();
    result.report.curve_before = curve_before;
    result.report.curve_after = curve_after;
    result.report.gamma_before = try_fit(curve_before);
    result.report.gamma_after = try_fit(curve_after);
    result.report.peak_drop = ratio;
    result.report.mean_distance_change = mean_distance(curve_after) - mean_distance(curve_before);
    return result;
}

}  // namespace flatcurve
