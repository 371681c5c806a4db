#include "flatcurve/centrality.hpp"

#include <algorithm>
#include <cmath>
#include <queue>
#include <stdexcept>

namespace flatcurve {

std::string to_string(Measure m) {
    switch (m) {
        case Measure::degree: return "degree";
        case Measure::betweenness: return "betweenness";
        case Measure::closeness: return "closeness";
        case Measure::katz: return "katz";
        case Measure::pagerank: return "pagerank";
        case Measure::expected_force: return "expected_force";
    }
    throw std::logic_error("unknown measure");
}

Measure measure_from_string(const std::string& name) {
    for (Measure m : all_measures())
        if (to_string(m) == name)
            return m;
    throw std::invalid_argument("unknown centrality measure '" + name + "'");
}

std::vector<Measure> all_measures() {
    return {Measure::degree,   Measure::betweenness, Measure::closeness,
            Measure::katz,     Measure::pagerank,    Measure::expected_force};
}

namespace {

CentralityScores make_scores(const Graph& g, Measure m) {
    CentralityScores s;
    s.measure = m;
    s.scores.assign(static_cast<std::size_t>(g.n()), 0.0);
    s.active = g.active_nodes();
    return s;
}

// Spectral radius of the active adjacency matrix, estimated by the norm
// ratio of power iteration from the all-ones vector. The ratio converges to
// the radius even on bipartite graphs where the iterate itself oscillates.
double spectral_radius_estimate(const Graph& g) {
    const std::size_t n = static_cast<std::size_t>(g.n());
    std::vector<double> v(n, 0.0);
    std::vector<double> av(n, 0.0);
    for (NodeId i : g.active_nodes())
        v[static_cast<std::size_t>(i)] = 1.0;
    double lambda = 0.0;
    for (int iter = 0; iter < 200; ++iter) {
        double norm_v = 0.0;
        for (double x : v)
            norm_v += x * x;
        norm_v = std::sqrt(norm_v);
        if (norm_v == 0.0)
            return 0.0;  // no edges
        for (double& x : v)
            x /= norm_v;
        std::fill(av.begin(), av.end(), 0.0);
        for (NodeId i : g.active_nodes()) {
            double sum = 0.0;
            for (NodeId j : g.neighbors(i))
                if (g.is_active(j))
                    sum += v[static_cast<std::size_t>(j)];
            av[static_cast<std::size_t>(i)] = sum;
        }
        double norm_av = 0.0;
        for (double x : av)
            norm_av += x * x;
        norm_av = std::sqrt(norm_av);
        if (norm_av == 0.0)
            return 0.0;
        if (iter > 2 && std::abs(norm_av - lambda) <= 1e-12 * std::max(1.0, lambda)) {
            lambda = norm_av;
            break;
        }
        lambda = norm_av;
        std::swap(v, av);
    }
    return lambda;
}

}  // namespace

CentralityScores degree_centrality(const Graph& g) {
    CentralityScores s = make_scores(g, Measure::degree);
    for (NodeId i : s.active)
        s.scores[static_cast<std::size_t>(i)] = g.effective_degree(i);
    return s;
}

CentralityScores betweenness_centrality(const Graph& g) {
    CentralityScores s = make_scores(g, Measure::betweenness);
    const std::size_t n = static_cast<std::size_t>(g.n());
    std::vector<double> sigma(n), delta(n);
    std::vector<int> dist(n);
    std::vector<std::vector<NodeId>> preds(n);
    std::vector<NodeId> order;
    order.reserve(g.active_count());

    for (NodeId source : s.active) {
        std::fill(sigma.begin(), sigma.end(), 0.0);
        std::fill(delta.begin(), delta.end(), 0.0);
        std::fill(dist.begin(), dist.end(), kUnreachable);
        for (auto& p : preds)
            p.clear();
        order.clear();

        sigma[static_cast<std::size_t>(source)] = 1.0;
        dist[static_cast<std::size_t>(source)] = 0;
        std::queue<NodeId> frontier;
        frontier.push(source);
        while (!frontier.empty()) {
            const NodeId u = frontier.front();
            frontier.pop();
            order.push_back(u);
            for (NodeId v : g.neighbors(u)) {
                if (!g.is_active(v))
                    continue;
                const auto ui = static_cast<std::size_t>(u);
                const auto vi = static_cast<std::size_t>(v);
                if (dist[vi] == kUnreachable) {
                    dist[vi] = dist[ui] + 1;
                    frontier.push(v);
                }
                if (dist[vi] == dist[ui] + 1) {
                    sigma[vi] += sigma[ui];
                    preds[vi].push_back(u);
                }
            }
        }
        // Dependency accumulation in reverse BFS order.
        for (auto it = order.rbegin(); it != order.rend(); ++it) {
            const auto wi = static_cast<std::size_t>(*it);
            for (NodeId u : preds[wi]) {
                const auto ui = static_cast<std::size_t>(u);
                delta[ui] += sigma[ui] / sigma[wi] * (1.0 + delta[wi]);
            }
            if (*it != source)
                s.scores[wi] += delta[wi];
        }
    }
    // Each unordered pair was accumulated from both endpoints.
    for (double& x : s.scores)
        x /= 2.0;
    return s;
}

CentralityScores closeness_centrality(const Graph& g) {
    CentralityScores s = make_scores(g, Measure::closeness);
    if (g.active_count() < 2)
        throw std::runtime_error("closeness: need at least two active nodes");
    const double reachable_others = static_cast<double>(g.active_count() - 1);
    for (NodeId i : s.active) {
        const DistanceVector d = g.bfs_distances(i);
        double sum = 0.0;
        for (NodeId v : s.active) {
            const int dv = d.dist[static_cast<std::size_t>(v)];
            if (dv == kUnreachable)
                throw std::runtime_error(
                    "closeness: active subgraph is disconnected; "
                    "compute per component via connected_components()");
            sum += dv;
        }
        s.scores[static_cast<std::size_t>(i)] = reachable_others / sum;
    }
    return s;
}

CentralityScores katz_centrality(const Graph& g, double kappa) {
    if (kappa <= 0.0)
        throw std::invalid_argument("katz: kappa must be positive");
    const double lambda = spectral_radius_estimate(g);
    if (lambda > 0.0 && kappa >= 1.0 / lambda)
        throw std::runtime_error("katz divergent: kappa >= 1/lambda_max (lambda_max ~ " +
                                 std::to_string(lambda) + ")");
    CentralityScores s = make_scores(g, Measure::katz);
    s.params.kappa = kappa;
    s.params.tolerance = 1e-10;

    // x <- kappa * A * (1 + x) sums the series one adjacency power at a time.
    const std::size_t n = static_cast<std::size_t>(g.n());
    std::vector<double> x(n, 0.0);
    std::vector<double> next(n, 0.0);
    int iterations = 0;
    for (;;) {
        ++iterations;
        double max_change = 0.0;
        for (NodeId i : s.active) {
            double sum = 0.0;
            for (NodeId j : g.neighbors(i))
                if (g.is_active(j))
                    sum += 1.0 + x[static_cast<std::size_t>(j)];
            sum *= kappa;
            max_change = std::max(max_change, std::abs(sum - x[static_cast<std::size_t>(i)]));
            next[static_cast<std::size_t>(i)] = sum;
        }
        std::swap(x, next);
        if (max_change < 1e-10)
            break;
        if (iterations > 1000000)
            throw std::runtime_error("katz: failed to converge");
    }
    s.params.iterations = iterations;
    for (NodeId i : s.active)
        s.scores[static_cast<std::size_t>(i)] = x[static_cast<std::size_t>(i)];
    return s;
}

CentralityScores pagerank_centrality(const Graph& g, double damping) {
    if (damping <= 0.0 || damping >= 1.0)
        throw std::invalid_argument("pagerank: damping must be in (0,1)");
    CentralityScores s = make_scores(g, Measure::pagerank);
    s.params.damping = damping;
    s.params.tolerance = 1e-10;

    const std::size_t n = static_cast<std::size_t>(g.n());
    const double n_active = static_cast<double>(g.active_count());
    std::vector<double> deg(n, 0.0);
    for (NodeId i : s.active)
        deg[static_cast<std::size_t>(i)] = g.effective_degree(i);

    std::vector<double> pr(n, 0.0);
    std::vector<double> next(n, 0.0);
    for (NodeId i : s.active)
        pr[static_cast<std::size_t>(i)] = 1.0 / n_active;

    int iterations = 0;
    for (; iterations < 200; ++iterations) {
        double dangling = 0.0;
        for (NodeId i : s.active)
            if (deg[static_cast<std::size_t>(i)] == 0.0)
                dangling += pr[static_cast<std::size_t>(i)];
        const double base = (1.0 - damping) / n_active + damping * dangling / n_active;
        double l1_change = 0.0;
        for (NodeId i : s.active) {
            double sum = 0.0;
            for (NodeId j : g.neighbors(i))
                if (g.is_active(j))
                    sum += pr[static_cast<std::size_t>(j)] / deg[static_cast<std::size_t>(j)];
            const double value = base + damping * sum;
            l1_change += std::abs(value - pr[static_cast<std::size_t>(i)]);
            next[static_cast<std::size_t>(i)] = value;
        }
        std::swap(pr, next);
        if (l1_change < 1e-10)
            break;
    }
    s.params.iterations = iterations;

    double total = 0.0;
    for (NodeId i : s.active)
        total += pr[static_cast<std::size_t>(i)];
    for (NodeId i : s.active)
        s.scores[static_cast<std::size_t>(i)] = pr[static_cast<std::size_t>(i)] / total;
    return s;
}

double expected_force(const Graph& g, NodeId i) {
    g.check_node(i);
    if (!g.is_active(i))
        throw std::runtime_error("expected_force: node is inactive");
    if (g.effective_degree(i) == 0)
        throw std::runtime_error("expected_force: node " + std::to_string(i) + " has degree 0");

    // Active neighbors of the seed, plus a membership mask for O(1) triangle
    // checks while enumerating clusters.
    std::vector<NodeId> seed_nb;
    std::vector<std::uint8_t> is_seed_nb(static_cast<std::size_t>(g.n()), 0);
    for (NodeId a : g.neighbors(i))
        if (g.is_active(a)) {
            seed_nb.push_back(a);
            is_seed_nb[static_cast<std::size_t>(a)] = 1;
        }
    std::vector<int> deg(static_cast<std::size_t>(g.n()), 0);
    deg[static_cast<std::size_t>(i)] = g.effective_degree(i);
    for (NodeId a : seed_nb) {
        deg[static_cast<std::size_t>(a)] = g.effective_degree(a);
        for (NodeId b : g.neighbors(a))
            if (g.is_active(b) && deg[static_cast<std::size_t>(b)] == 0)
                deg[static_cast<std::size_t>(b)] = g.effective_degree(b);
    }

    // A cluster is an unordered pair of transmission edges. The two families
    // below are disjoint and internally duplicate-free: two seed edges
    // {(i,a),(i,b)} with a < b, or a seed edge plus an onward edge
    // {(i,a),(a,b)} with b != i.
    std::vector<double> forces;
    const auto push_force = [&](NodeId a, NodeId b, int internal) {
        forces.push_back(static_cast<double>(deg[static_cast<std::size_t>(i)] +
                                             deg[static_cast<std::size_t>(a)] +
                                             deg[static_cast<std::size_t>(b)] - 2 * internal));
    };
    for (std::size_t x = 0; x < seed_nb.size(); ++x) {
        const NodeId a = seed_nb[x];
        for (std::size_t y = x + 1; y < seed_nb.size(); ++y) {
            const NodeId b = seed_nb[y];
            push_force(a, b, 2 + (g.has_edge(a, b) ? 1 : 0));
        }
        bool expanded = seed_nb.size() > 1;
        for (NodeId b : g.neighbors(a)) {
            if (b == i || !g.is_active(b))
                continue;
            push_force(a, b, 2 + (is_seed_nb[static_cast<std::size_t>(b)] ? 1 : 0));
            expanded = true;
        }
        if (!expanded) {
            // Stuck two-node cluster: {i,a} is an entire component.
            forces.push_back(static_cast<double>(deg[static_cast<std::size_t>(i)] +
                                                 deg[static_cast<std::size_t>(a)] - 2));
        }
    }

    double total = 0.0;
    for (double d : forces)
        total += d;
    if (total <= 0.0)
        return 0.0;
    double entropy = 0.0;
    for (double d : forces) {
        if (d <= 0.0)
            continue;
        const double p = d / total;
        entropy -= p * std::log(p);
    }
    return entropy;
}

CentralityScores expected_force_centrality(const Graph& g) {
    CentralityScores s = make_scores(g, Measure::expected_force);
    for (NodeId i : s.active)
        s.scores[static_cast<std::size_t>(i)] =
            g.effective_degree(i) > 0 ? expected_force(g, i) : 0.0;
    return s;
}

CentralityScores compute_centrality(const Graph& g, Measure m, double kappa, double damping) {
    switch (m) {
        case Measure::degree: return degree_centrality(g);
        case Measure::betweenness: return betweenness_centrality(g);
        case Measure::closeness: return closeness_centrality(g);
        case Measure::katz: return katz_centrality(g, kappa);
        case Measure::pagerank: return pagerank_centrality(g, damping);
        case Measure::expected_force: return expected_force_centrality(g);
    }
    throw std::logic_error("unknown measure");
}

std::vector<NodeId> rank_top(const CentralityScores& scores, std::size_t k) {
    if (k == 0)
        throw std::invalid_argument("rank_top: k must be positive");
    if (k > scores.active.size())
        throw std::invalid_argument("rank_top: k exceeds active node count");
    std::vector<NodeId> ranked = scores.active;
    std::stable_sort(ranked.begin(), ranked.end(), [&](NodeId a, NodeId b) {
        const double sa = scores.scores[static_cast<std::size_t>(a)];
        const double sb = scores.scores[static_cast<std::size_t>(b)];
        if (sa != sb)
            return sa > sb;
        return a < b;
    });
    ranked.resize(k);
    return ranked;
}

}  // namespace flatcurve
