#ifndef FLATCURVE_CURVE_HPP
#define FLATCURVE_CURVE_HPP

#include <iosfwd>
#include <string>
#include <vector>

#include "flatcurve/graph.hpp"
#include "flatcurve/rng.hpp"

namespace flatcurve {

// Histogram of BFS shell sizes from a source node: counts[d] is the number
// of nodes at distance d. With one source the counts are integers and
// counts[0] = 1; averaging over several sources gives real-valued shells.
// The shells double as the infection curve: nodes at distance d are the
// d-th wave of new infections from the source.
struct DistanceDistribution {
    std::vector<double> counts;   // indexed by distance, contiguous from 0
    double n_reachable = 0.0;     // sum of counts
    double unreachable = 0.0;     // active nodes excluded per source
    std::size_t n_active = 0;     // active nodes when the curve was taken
    std::string source_info;

    // Shell sizes divided by the active node count.
    std::vector<double> fractions() const;
};

struct CurvePeak {
    int distance = 0;
    double value = 0.0;
};

struct GammaParams {
    double k = 0.0;      // shape
    double theta = 0.0;  // scale
};

DistanceDistribution distance_distribution(const Graph& g, NodeId source);

// Mean shell sizes over an explicit list of sources (all must be active).
DistanceDistribution averaged_curve(const Graph& g, std::span<const NodeId> sources);

// Mean over `trials` distinct sources drawn uniformly from the active set;
// trials == active_count covers every source exactly once.
DistanceDistribution averaged_curve(const Graph& g, std::size_t trials, Rng& rng);

// Exact mean over all active sources; deterministic.
DistanceDistribution averaged_curve_exhaustive(const Graph& g);

// Argmax shell (smallest distance on ties) and its size.
CurvePeak curve_peak(const DistanceDistribution& dist);

// Mean distance from the source to reached nodes, excluding the d=0 shell.
// Returns 0 when the curve has no positive-distance mass.
double mean_distance(const DistanceDistribution& dist);

// Gamma density x^(k-1) exp(-x/theta) / (Gamma(k) theta^k).
// x=0 evaluates the k>1 and k=1 limits; k<1 has a pole there and throws.
double gamma_pdf(double x, const GammaParams& p);

// Method-of-moments fit with population variance: k = mean^2/var,
// theta = var/mean. Throws "degenerate sample" on zero variance.
GammaParams fit_gamma_moments(std::span<const double> values, std::span<const double> weights);

// Fits the shells at distance >= 1 (the Gamma support excludes the source
// itself). Requires at least two distinct positive distances.
GammaParams fit_gamma(const DistanceDistribution& dist);

// CSV form: header "distance,count,fraction", one row per distance.
void write_curve_csv(const DistanceDistribution& dist, std::ostream& out);
void write_curve_csv(const DistanceDistribution& dist, const std::string& path);
DistanceDistribution read_curve_csv(const std::string& path);

}  // namespace flatcurve

#endif
