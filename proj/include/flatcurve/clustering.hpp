#ifndef FLATCURVE_CLUSTERING_HPP
#define FLATCURVE_CLUSTERING_HPP

#include <cstdint>
#include <vector>

#include "flatcurve/graph.hpp"

namespace flatcurve {

// Local and global clustering coefficients of the active subgraph.
//
// gcc1 averages the local coefficient over active nodes; gcc2 is the
// transitivity 3*triangles/triplets with triplets = sum_i C(k_i, 2).
// A graph without connected triples has no defined transitivity; gcc2 is
// reported as 0 with gcc2_defined = false.
struct ClusteringReport {
    std::vector<double> local;  // per node; 0 for inactive or degree <= 1
    double gcc1 = 0.0;
    double gcc2 = 0.0;
    bool gcc2_defined = true;
    std::uint64_t triangles = 0;
    std::uint64_t triplets = 0;
};

// Fraction of realized links among the active neighbors of i.
// Nodes with effective degree <= 1 get 0 (the quotient is undefined there,
// and 0 keeps the average meaningful on trees).
double local_clustering(const Graph& g, NodeId i);

double gcc1(const Graph& g);
double gcc2(const Graph& g);

ClusteringReport clustering_report(const Graph& g);

}  // namespace flatcurve

#endif
