#include <doctest.h>

#include <cmath>

#include "flatcurve/centrality.hpp"
#include "oracles.hpp"
#include "test_util.hpp"

using namespace flatcurve;
using testutil::complete;
using testutil::cycle;
using testutil::path;
using testutil::relabel;
using testutil::star;

TEST_CASE("degree centrality") {
    const CentralityScores s4 = degree_centrality(star(4));
    CHECK(s4.scores[0] == 4.0);
    CHECK(s4.scores[1] == 1.0);

    const CentralityScores k4 = degree_centrality(complete(4));
    for (NodeId i = 0; i < 4; ++i)
        CHECK(k4.scores[i] == 3.0);

    const CentralityScores p3 = degree_centrality(path(3));
    CHECK(p3.scores == std::vector<double>{1.0, 2.0, 1.0});
}

TEST_CASE("betweenness on named graphs") {
    const CentralityScores p3 = betweenness_centrality(path(3));
    CHECK(p3.scores[1] == doctest::Approx(1.0));
    CHECK(p3.scores[0] == doctest::Approx(0.0));

    const CentralityScores s4 = betweenness_centrality(star(4));
    CHECK(s4.scores[0] == doctest::Approx(6.0));  // C(4,2) pairs bridged
}

TEST_CASE("betweenness matches path enumeration on random graphs") {
    Rng rng(314);
    for (int rep = 0; rep < 10; ++rep) {
        const auto n = static_cast<NodeId>(8 + uniform_below(rng, 52));
        const Graph g = oracle::random_connected_graph(rng, n, n);
        const CentralityScores s = betweenness_centrality(g);
        const std::vector<double> expected = oracle::betweenness(g);
        for (NodeId i = 0; i < n; ++i)
            CHECK(s.scores[i] == doctest::Approx(expected[i]).epsilon(1e-9));
    }
}

TEST_CASE("betweenness ignores disconnected pairs") {
    Graph g = from_edge_list(std::vector<Edge>{{0, 1}, {1, 2}, {3, 4}, {4, 5}});
    const CentralityScores s = betweenness_centrality(g);
    CHECK(s.scores[1] == doctest::Approx(1.0));
    CHECK(s.scores[4] == doctest::Approx(1.0));
}

TEST_CASE("closeness on named graphs") {
    const CentralityScores s4 = closeness_centrality(star(4));
    CHECK(s4.scores[0] == doctest::Approx(1.0));
    CHECK(s4.scores[1] == doctest::Approx(4.0 / 7.0));

    const CentralityScores p3 = closeness_centrality(path(3));
    CHECK(p3.scores[1] == doctest::Approx(1.0));
    CHECK(p3.scores[0] == doctest::Approx(2.0 / 3.0));
}

TEST_CASE("closeness requires connectivity") {
    Graph p3 = path(3);
    p3.isolate_node(1);
    CHECK_THROWS_WITH_AS(closeness_centrality(p3),
                         "closeness: active subgraph is disconnected; "
                         "compute per component via connected_components()",
                         std::runtime_error);
}

TEST_CASE("katz handles the edgeless graph") {
    Graph g(3);
    g.finalize();
    const CentralityScores s = katz_centrality(g, 0.7);
    CHECK(s.scores == std::vector<double>{0.0, 0.0, 0.0});
}

TEST_CASE("katz orders P3 correctly and matches the dense solve") {
    const Graph p3 = path(3);
    const CentralityScores s = katz_centrality(p3, 0.1);
    CHECK(s.scores[1] > s.scores[0]);
    CHECK(s.scores[0] == doctest::Approx(s.scores[2]));
    const std::vector<double> expected = oracle::katz(p3, 0.1);
    for (NodeId i = 0; i < 3; ++i)
        CHECK(s.scores[i] == doctest::Approx(expected[i]).epsilon(1e-8));
}

TEST_CASE("katz matches the dense solve on random graphs") {
    Rng rng(2718);
    for (int rep = 0; rep < 6; ++rep) {
        const auto n = static_cast<NodeId>(6 + uniform_below(rng, 40));
        const Graph g = oracle::random_connected_graph(rng, n, n);
        const CentralityScores s = katz_centrality(g, 0.01);
        const std::vector<double> expected = oracle::katz(g, 0.01);
        for (NodeId i = 0; i < n; ++i)
            CHECK(s.scores[i] == doctest::Approx(expected[i]).epsilon(1e-8));
    }
}

TEST_CASE("katz rejects divergent kappa") {
    // K4 has spectral radius 3.
    CHECK_THROWS_AS(katz_centrality(complete(4), 0.4), std::runtime_error);
    CHECK_THROWS_AS(katz_centrality(complete(4), 1.0 / 3.0), std::runtime_error);
    CHECK_NOTHROW(katz_centrality(complete(4), 0.3));
    CHECK_THROWS_AS(katz_centrality(complete(4), 0.0), std::invalid_argument);
}

TEST_CASE("katz converges geometrically") {
    // Iterate count stays within the geometric-series bound with ratio
    // kappa * lambda_max (= 0.6 on C6 with kappa 0.3).
    const CentralityScores s = katz_centrality(cycle(6), 0.3);
    const double ratio = 0.3 * 2.0;
    const int bound =
        static_cast<int>(std::ceil(std::log(1e-10) / std::log(ratio))) + 5;
    CHECK(s.params.iterations <= bound);
}

TEST_CASE("pagerank on symmetric graphs is uniform") {
    const CentralityScores c5 = pagerank_centrality(cycle(5), 0.85);
    for (NodeId i = 0; i < 5; ++i)
        CHECK(c5.scores[i] == doctest::Approx(0.2).epsilon(1e-9));

    const CentralityScores k4 = pagerank_centrality(complete(4));
    for (NodeId i = 0; i < 4; ++i)
        CHECK(k4.scores[i] == doctest::Approx(0.25).epsilon(1e-9));
}

TEST_CASE("pagerank star matches the two-class fixed point") {
    // With center score c and leaf score l: c = (1-d)/5 + 4 d l and
    // l = (1-d)/5 + d c / 4, so c = (1 + 4d) / (5 (1 + d)).
    const double d = 0.85;
    const double c = (1.0 + 4.0 * d) / (5.0 * (1.0 + d));
    const double l = (1.0 - c) / 4.0;
    const CentralityScores s = pagerank_centrality(star(4), d);
    CHECK(s.scores[0] == doctest::Approx(c).epsilon(1e-8));
    CHECK(s.scores[1] == doctest::Approx(l).epsilon(1e-8));
    CHECK(s.scores[0] > s.scores[1]);
}

TEST_CASE("pagerank is a probability vector even with dangling nodes") {
    Rng rng(55);
    for (int rep = 0; rep < 5; ++rep) {
        Graph g = oracle::random_connected_graph(rng, 30, 20);
        // Isolate two nodes; their still-active neighbors may become dangling.
        g.isolate_node(static_cast<NodeId>(uniform_below(rng, 30)));
        NodeId second;
        do {
            second = static_cast<NodeId>(uniform_below(rng, 30));
        } while (!g.is_active(second));
        g.isolate_node(second);
        const CentralityScores s = pagerank_centrality(g);
        double sum = 0.0;
        for (NodeId i : s.active) {
            CHECK(s.scores[i] >= 0.0);
            sum += s.scores[i];
        }
        CHECK(sum == doctest::Approx(1.0).epsilon(1e-9));
    }
}

TEST_CASE("pagerank rejects bad damping") {
    CHECK_THROWS_AS(pagerank_centrality(path(3), 0.0), std::invalid_argument);
    CHECK_THROWS_AS(pagerank_centrality(path(3), 1.0), std::invalid_argument);
}

TEST_CASE("expected force of the star center is ln 6") {
    CHECK(expected_force(star(4), 0) == doctest::Approx(std::log(6.0)));
    // A leaf has three equal-force clusters through the center.
    CHECK(expected_force(star(4), 1) == doctest::Approx(std::log(3.0)));
}

TEST_CASE("expected force boundary cases") {
    // P3 middle: both two-step clusters cover the whole graph, outward force 0.
    CHECK(expected_force(path(3), 1) == 0.0);
    CHECK(expected_force(path(3), 0) == 0.0);  // single chain, also swallowed
    CHECK(expected_force(path(2), 0) == 0.0);  // stuck two-node cluster

    Graph g(3);
    g.add_edge(0, 1);
    g.finalize();
    CHECK_THROWS_AS(expected_force(g, 2), std::runtime_error);  // degree 0
}

TEST_CASE("expected force is constant on vertex-transitive graphs") {
    for (const Graph& g : {cycle(6), complete(5)}) {
        const double first = expected_force(g, 0);
        for (NodeId i = 1; i < g.n(); ++i)
            CHECK(expected_force(g, i) == doctest::Approx(first).epsilon(1e-12));
    }
}

TEST_CASE("expected force matches the edge-pair enumeration oracle") {
    Rng rng(1618);
    for (int rep = 0; rep < 8; ++rep) {
        const auto n = static_cast<NodeId>(6 + uniform_below(rng, 30));
        const Graph g = oracle::random_connected_graph(rng, n, n);
        for (NodeId i = 0; i < n; ++i)
            CHECK(expected_force(g, i) ==
                  doctest::Approx(oracle::expected_force(g, i)).epsilon(1e-9));
    }
}

TEST_CASE("rank_top orders by score then id") {
    CHECK(rank_top(degree_centrality(star(4)), 1) == std::vector<NodeId>{0});
    CHECK(rank_top(degree_centrality(complete(4)), 2) == std::vector<NodeId>{0, 1});
    CHECK(rank_top(closeness_centrality(path(3)), 1) == std::vector<NodeId>{1});
    CHECK_THROWS_AS(rank_top(degree_centrality(path(3)), 0), std::invalid_argument);
    CHECK_THROWS_AS(rank_top(degree_centrality(path(3)), 4), std::invalid_argument);
}

TEST_CASE("every measure is equivariant under relabeling") {
    Rng rng(9001);
    for (int rep = 0; rep < 4; ++rep) {
        const auto n = static_cast<NodeId>(8 + uniform_below(rng, 42));
        const Graph g = oracle::random_connected_graph(rng, n, n);
        std::vector<NodeId> perm(static_cast<std::size_t>(n));
        for (NodeId i = 0; i < n; ++i)
            perm[i] = i;
        for (std::size_t i = perm.size(); i > 1; --i)
            std::swap(perm[i - 1], perm[uniform_below(rng, i)]);
        const Graph h = relabel(g, perm);
        for (const Measure m : all_measures()) {
            const CentralityScores sg = compute_centrality(g, m, 0.01, 0.85);
            const CentralityScores sh = compute_centrality(h, m, 0.01, 0.85);
            for (NodeId i = 0; i < n; ++i)
                CHECK(sg.scores[i] ==
                      doctest::Approx(sh.scores[perm[i]]).epsilon(1e-9));
        }
    }
}

TEST_CASE("every measure is constant on vertex-transitive graphs") {
    for (const Graph& g : {cycle(8), complete(6)}) {
        for (const Measure m : all_measures()) {
            const CentralityScores s = compute_centrality(g, m, 0.05, 0.85);
            for (NodeId i = 1; i < g.n(); ++i)
                CHECK(s.scores[i] == doctest::Approx(s.scores[0]).epsilon(1e-9));
        }
    }
}

TEST_CASE("measure names round trip") {
    for (const Measure m : all_measures())
        CHECK(measure_from_string(to_string(m)) == m);
    CHECK_THROWS_AS(measure_from_string("nope"), std::invalid_argument);
}
