#ifndef FLATCURVE_CENTRALITY_HPP
#define FLATCURVE_CENTRALITY_HPP

#include <string>
#include <vector>

#include "flatcurve/graph.hpp"

namespace flatcurve {

enum class Measure {
    degree,
    betweenness,
    closeness,
    katz,
    pagerank,
    expected_force,
};

std::string to_string(Measure m);
Measure measure_from_string(const std::string& name);
std::vector<Measure> all_measures();

// Parameters a measure actually used; zero where not applicable.
struct CentralityParams {
    double kappa = 0.0;
    double damping = 0.0;
    double tolerance = 0.0;
    int iterations = 0;
};

// Per-node scores over the active subgraph. `active` lists the node ids the
// scores are defined for; entries of inactive nodes are 0 and never ranked.
struct CentralityScores {
    Measure measure = Measure::degree;
    std::vector<double> scores;
    std::vector<NodeId> active;
    CentralityParams params;
};

inline constexpr double kDefaultKappa = 0.005;
inline constexpr double kDefaultDamping = 0.85;

CentralityScores degree_centrality(const Graph& g);

// Unnormalized shortest-path betweenness (Brandes accumulation): endpoints
// excluded, each unordered pair counted once, equal-length paths share
// credit fractionally. Disconnected pairs contribute nothing.
CentralityScores betweenness_centrality(const Graph& g);

// (n_active - 1) / sum of distances; requires a connected active subgraph.
CentralityScores closeness_centrality(const Graph& g);

// katz(i) = sum_{t>=1} kappa^t (A^t 1)_i, iterated to 1e-10 per entry.
// Requires kappa < 1/lambda_max(A) (power-iteration estimate) to converge.
CentralityScores katz_centrality(const Graph& g, double kappa = kDefaultKappa);

// Power iteration on the undirected random walk with uniform teleport.
// Nodes of effective degree zero pass their mass to the teleport pool.
// Scores sum to 1.
CentralityScores pagerank_centrality(const Graph& g, double damping = kDefaultDamping);

// Entropy of the normalized outward-edge counts over every infected cluster
// reachable from seed i in exactly two transmission events. A cluster is
// identified by its unordered pair of transmission edges, so a triangle
// closes in three ways and a pair of seed edges in one. Zero total outward
// force (the cluster swallowed the component) yields 0.
double expected_force(const Graph& g, NodeId i);

CentralityScores expected_force_centrality(const Graph& g);

CentralityScores compute_centrality(const Graph& g, Measure m,
                                    double kappa = kDefaultKappa,
                                    double damping = kDefaultDamping);

// Top-k node ids by descending score; ties broken by ascending id.
std::vector<NodeId> rank_top(const CentralityScores& scores, std::size_t k);

}  // namespace flatcurve

#endif
