#include <doctest.h>

#include "flatcurve/clustering.hpp"
#include "oracles.hpp"
#include "test_util.hpp"

using namespace flatcurve;
using testutil::complete;
using testutil::path;
using testutil::star;

namespace {

// C4 with one diagonal: 0-1, 1-2, 2-3, 3-0, 0-2.
Graph diagonal_square() {
    return from_edge_list(std::vector<Edge>{{0, 1}, {1, 2}, {2, 3}, {3, 0}, {0, 2}});
}

}  // namespace

TEST_CASE("local clustering on named graphs") {
    const Graph k4 = complete(4);
    for (NodeId i = 0; i < 4; ++i)
        CHECK(local_clustering(k4, i) == doctest::Approx(1.0));

    CHECK(local_clustering(star(4), 0) == doctest::Approx(0.0));

    const Graph g = diagonal_square();
    CHECK(local_clustering(g, 1) == doctest::Approx(1.0));
    CHECK(local_clustering(g, 0) == doctest::Approx(2.0 / 3.0));
    CHECK(local_clustering(g, 3) == doctest::Approx(1.0));
}

TEST_CASE("gcc1 averages local coefficients") {
    CHECK(gcc1(complete(4)) == doctest::Approx(1.0));
    CHECK(gcc1(path(3)) == doctest::Approx(0.0));
    CHECK(gcc1(diagonal_square()) == doctest::Approx(5.0 / 6.0));
}

TEST_CASE("gcc2 is triangle-based transitivity") {
    const ClusteringReport k4 = clustering_report(complete(4));
    CHECK(k4.triangles == 4);
    CHECK(k4.triplets == 12);
    CHECK(k4.gcc2 == doctest::Approx(1.0));

    const ClusteringReport s4 = clustering_report(star(4));
    CHECK(s4.triangles == 0);
    CHECK(s4.gcc2 == doctest::Approx(0.0));
    CHECK(s4.gcc2_defined);  // the center provides triples

    // A single edge has no connected triple at all.
    const ClusteringReport p2 = clustering_report(path(2));
    CHECK(p2.triplets == 0);
    CHECK(p2.gcc2 == 0.0);
    CHECK_FALSE(p2.gcc2_defined);
}

TEST_CASE("triangle count matches brute-force enumeration") {
    Rng rng(4242);
    for (int rep = 0; rep < 12; ++rep) {
        const auto n = static_cast<NodeId>(6 + uniform_below(rng, 60));
        Graph g = oracle::random_connected_graph(rng, n, 2 * n);
        CHECK(clustering_report(g).triangles == oracle::triangle_count(g));

        // Also on the masked graph after isolating a node.
        g.isolate_node(static_cast<NodeId>(uniform_below(rng, n)));
        CHECK(clustering_report(g).triangles == oracle::triangle_count(g));
    }
}

TEST_CASE("triplets equal the degree-pair sum") {
    Rng rng(7);
    const Graph g = oracle::random_connected_graph(rng, 40, 80);
    std::uint64_t expected = 0;
    for (NodeId i = 0; i < g.n(); ++i) {
        const auto k = static_cast<std::uint64_t>(g.effective_degree(i));
        expected += k * (k - 1) / 2;
    }
    CHECK(clustering_report(g).triplets == expected);
}
