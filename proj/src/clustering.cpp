#include "flatcurve/clustering.hpp"

#include <stdexcept>

namespace flatcurve {

namespace {

// Number of edges between the active neighbor sets of u and v, i.e. common
// active neighbors of the endpoints of an edge. Both lists are sorted.
std::uint64_t common_active_neighbors(const Graph& g, NodeId u, NodeId v) {
    auto a = g.neighbors(u);
    auto b = g.neighbors(v);
    std::uint64_t count = 0;
    std::size_t i = 0;
    std::size_t j = 0;
    while (i < a.size() && j < b.size()) {
        if (a[i] == b[j]) {
            if (g.is_active(a[i]))
                ++count;
            ++i;
            ++j;
        } else if (a[i] < b[j]) {
            ++i;
        } else {
            ++j;
        }
    }
    return count;
}

// Links among the active neighbors of i, each counted once.
std::uint64_t links_among_neighbors(const Graph& g, NodeId i) {
    std::uint64_t twice = 0;
    for (NodeId v : g.neighbors(i)) {
        if (!g.is_active(v))
            continue;
        twice += common_active_neighbors(g, i, v);
    }
    return twice / 2;
}

}  // namespace

double local_clustering(const Graph& g, NodeId i) {
    g.check_node(i);
    if (!g.is_active(i))
        throw std::runtime_error("local_clustering: node is inactive");
    const int k = g.effective_degree(i);
    if (k <= 1)
        return 0.0;
    const auto links = static_cast<double>(links_among_neighbors(g, i));
    return 2.0 * links / (static_cast<double>(k) * (k - 1));
}

ClusteringReport clustering_report(const Graph& g) {
    if (g.active_count() == 0)
        throw std::runtime_error("clustering_report: no active nodes");
    ClusteringReport rep;
    rep.local.assign(static_cast<std::size_t>(g.n()), 0.0);
    double local_sum = 0.0;
    std::uint64_t triangle_incidences = 0;  // sum over nodes of links among neighbors
    for (NodeId i = 0; i < g.n(); ++i) {
        if (!g.is_active(i))
            continue;
        const int k = g.effective_degree(i);
        rep.triplets += static_cast<std::uint64_t>(k) * (k - 1) / 2;
        if (k <= 1)
            continue;
        const std::uint64_t links = links_among_neighbors(g, i);
        triangle_incidences += links;
        rep.local[static_cast<std::size_t>(i)] =
            2.0 * static_cast<double>(links) / (static_cast<double>(k) * (k - 1));
        local_sum += rep.local[static_cast<std::size_t>(i)];
    }
    // Each triangle contributes one neighbor-link at each of its corners.
    rep.triangles = triangle_incidences / 3;
    rep.gcc1 = local_sum / static_cast<double>(g.active_count());
    if (rep.triplets == 0) {
        rep.gcc2 = 0.0;
        rep.gcc2_defined = false;
    } else {
        rep.gcc2 = 3.0 * static_cast<double>(rep.triangles) / static_cast<double>(rep.triplets);
    }
    return rep;
}

double gcc1(const Graph& g) {
    return clustering_report(g).gcc1;
}

double gcc2(const Graph& g) {
    return clustering_report(g).gcc2;
}

}  // namespace flatcurve
