#ifndef FLATCURVE_GENERATORS_HPP
#define FLATCURVE_GENERATORS_HPP

#include <cstdint>

#include "flatcurve/graph.hpp"

namespace flatcurve {

// Preferential-attachment growth parameters. Each new node makes m links:
// m0_pa of them by preferential attachment, the remaining m - m0_pa to
// neighbors of the attachment targets (triad formation). m0_pa = m is the
// plain BA model; smaller m0_pa gives the clustered HK variant.
struct GrowthSpec {
    NodeId n = 0;
    int m = 1;
    int m0_pa = 1;
    std::uint64_t seed = 0;

    int triad_links() const { return m - m0_pa; }
};

// Growth starts from a complete graph on max(m, 2) + 1 nodes, which keeps
// every early attachment draw well-defined.
NodeId seed_graph_size(int m);

// Grows the graph described by spec. Deterministic per seed: the same spec
// yields a bit-identical edge set. Resulting graphs are connected and
// simple, with exactly C(s,2) + m*(n - s) edges for seed size s.
Graph generate(const GrowthSpec& spec);

// Pure BA: requires n > m >= 1.
Graph generate_ba(NodeId n, int m, std::uint64_t seed);

// Clustered (triad-forming) growth: requires n > m >= 2 and 1 <= m0_pa < m.
Graph generate_hk(NodeId n, int m, int m0_pa, std::uint64_t seed);

}  // namespace flatcurve

#endif
