#ifndef FLATCURVE_ISOLATION_HPP
#define FLATCURVE_ISOLATION_HPP

#include <optional>
#include <vector>

#include "flatcurve/centrality.hpp"
#include "flatcurve/curve.hpp"
#include "flatcurve/graph.hpp"
#include "flatcurve/rng.hpp"

namespace flatcurve {

// Ordered record of a targeted-isolation run. `targets` were isolated in
// the given order; `skipped` are higher-ranked nodes passed over because
// cutting them would have disconnected the remaining active subgraph.
struct IsolationPlan {
    Measure measure = Measure::degree;
    std::vector<NodeId> targets;
    std::vector<NodeId> skipped;
    double fraction_or_threshold = 0.0;
};

// Before/after comparison on a shared source set. Gamma fits are absent
// when a curve is degenerate (e.g. complete graphs have a single shell).
struct FlatteningReport {
    DistanceDistribution curve_before;
    DistanceDistribution curve_after;
    std::optional<GammaParams> gamma_before;
    std::optional<GammaParams> gamma_after;
    double peak_drop = 1.0;             // post-isolation peak / pre-isolation peak
    double mean_distance_change = 0.0;  // after - before
};

struct Scenario1Result {
    IsolationPlan plan;
    FlatteningReport report;
    Graph graph_after;
};

struct Scenario2Result {
    IsolationPlan plan;
    FlatteningReport report;
    Graph graph_after;
    std::size_t isolated_count = 0;
    // False when the peak never dropped to the threshold within the
    // isolation budget; the report then covers the partial run.
    bool threshold_reached = false;
};

// Isolates up to `count` nodes from g in descending-score order, skipping
// any whose removal would disconnect the active subgraph.
IsolationPlan plan_and_isolate(Graph& g, const CentralityScores& scores, std::size_t count);

// Ranks once on the intact graph, isolates floor(fraction * n_active) nodes
// under the connectivity guard, and compares averaged curves over
// source_trials sources drawn from nodes active in both states.
Scenario1Result scenario1(const Graph& g, Measure measure, double fraction,
                          std::size_t source_trials, Rng& rng,
                          double kappa = kDefaultKappa, double damping = kDefaultDamping);

// Isolates one ranked node at a time until the averaged curve's peak,
// normalized so the pre-isolation peak equals 1, drops to the threshold.
// Gives up (threshold_reached = false) after floor(n_active/2) isolations
// or when the ranking is exhausted. With recompute set, centralities are
// recomputed on the shrunken graph after every isolation.
Scenario2Result scenario2(const Graph& g, Measure measure, double threshold,
                          std::size_t source_trials, Rng& rng, bool recompute = false,
                          double kappa = kDefaultKappa, double damping = kDefaultDamping);

}  // namespace flatcurve

#endif
