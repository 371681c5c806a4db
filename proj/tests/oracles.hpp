// Test-only reference implementations. Everything here recomputes results
// by a different route than the library (Floyd-Warshall instead of BFS,
// explicit path enumeration instead of Brandes accumulation, dense linear
// solves instead of power series) so the two sides can check each other.

#ifndef FLATCURVE_TESTS_ORACLES_HPP
#define FLATCURVE_TESTS_ORACLES_HPP

#include <algorithm>
#include <cmath>
#include <functional>
#include <stdexcept>
#include <vector>

#include "flatcurve/graph.hpp"
#include "flatcurve/rng.hpp"

namespace oracle {

using flatcurve::Edge;
using flatcurve::Graph;
using flatcurve::NodeId;

constexpr double kInf = 1e18;

// All-pairs distances over active nodes by Floyd-Warshall; kInf = unreachable.
inline std::vector<std::vector<double>> all_pairs_distances(const Graph& g) {
    const std::size_t n = static_cast<std::size_t>(g.n());
    std::vector<std::vector<double>> d(n, std::vector<double>(n, kInf));
    for (NodeId i = 0; i < g.n(); ++i) {
        if (!g.is_active(i))
            continue;
        d[i][i] = 0.0;
        for (NodeId j : g.neighbors(i))
            if (g.is_active(j))
                d[i][j] = 1.0;
    }
    for (std::size_t k = 0; k < n; ++k)
        for (std::size_t i = 0; i < n; ++i) {
            if (d[i][k] >= kInf)
                continue;
            for (std::size_t j = 0; j < n; ++j)
                if (d[i][k] + d[k][j] < d[i][j])
                    d[i][j] = d[i][k] + d[k][j];
        }
    return d;
}

inline int diameter(const Graph& g) {
    const auto d = all_pairs_distances(g);
    double best = 0.0;
    for (NodeId i = 0; i < g.n(); ++i)
        for (NodeId j = 0; j < g.n(); ++j) {
            if (!g.is_active(i) || !g.is_active(j))
                continue;
            if (d[i][j] >= kInf)
                throw std::runtime_error("oracle diameter: disconnected");
            best = std::max(best, d[i][j]);
        }
    return static_cast<int>(best);
}

// Triangle count by brute force over all node triples.
inline std::uint64_t triangle_count(const Graph& g) {
    std::uint64_t t = 0;
    for (NodeId a = 0; a < g.n(); ++a)
        for (NodeId b = a + 1; b < g.n(); ++b)
            for (NodeId c = b + 1; c < g.n(); ++c) {
                if (!g.is_active(a) || !g.is_active(b) || !g.is_active(c))
                    continue;
                if (g.has_edge(a, b) && g.has_edge(b, c) && g.has_edge(a, c))
                    ++t;
            }
    return t;
}

// Betweenness by explicit enumeration of every shortest path. For each pair
// (s,t) a DFS walks only edges that step one unit closer to t.
inline std::vector<double> betweenness(const Graph& g) {
    const auto d = all_pairs_distances(g);
    std::vector<double> score(static_cast<std::size_t>(g.n()), 0.0);
    const auto actives = g.active_nodes();
    for (NodeId s : actives) {
        for (NodeId t : actives) {
            if (t <= s || d[s][t] >= kInf)
                continue;
            std::vector<std::vector<NodeId>> paths;
            std::vector<NodeId> path{s};
            std::function<void(NodeId)> walk = [&](NodeId u) {
                if (u == t) {
                    paths.push_back(path);
                    return;
                }
                for (NodeId v : g.neighbors(u)) {
                    if (!g.is_active(v) || d[v][t] != d[u][t] - 1.0)
                        continue;
                    path.push_back(v);
                    walk(v);
                    path.pop_back();
                }
            };
            walk(s);
            const double credit = 1.0 / static_cast<double>(paths.size());
            for (const auto& p : paths)
                for (std::size_t i = 1; i + 1 < p.size(); ++i)
                    score[static_cast<std::size_t>(p[i])] += credit;
        }
    }
    return score;
}

// Katz by a dense direct solve of (I - kappa A) x = kappa A 1.
inline std::vector<double> katz(const Graph& g, double kappa) {
    const std::size_t n = static_cast<std::size_t>(g.n());
    std::vector<std::vector<double>> m(n, std::vector<double>(n + 1, 0.0));
    for (std::size_t i = 0; i < n; ++i) {
        m[i][i] = 1.0;
        if (!g.is_active(static_cast<NodeId>(i)))
            continue;
        for (NodeId j : g.neighbors(static_cast<NodeId>(i))) {
            if (!g.is_active(j))
                continue;
            m[i][static_cast<std::size_t>(j)] -= kappa;
            m[i][n] += kappa;
        }
    }
    // Gaussian elimination with partial pivoting.
    for (std::size_t col = 0; col < n; ++col) {
        std::size_t pivot = col;
        for (std::size_t r = col + 1; r < n; ++r)
            if (std::abs(m[r][col]) > std::abs(m[pivot][col]))
                pivot = r;
        std::swap(m[col], m[pivot]);
        if (std::abs(m[col][col]) < 1e-14)
            throw std::runtime_error("oracle katz: singular system");
        for (std::size_t r = 0; r < n; ++r) {
            if (r == col)
                continue;
            const double f = m[r][col] / m[col][col];
            if (f == 0.0)
                continue;
            for (std::size_t c = col; c <= n; ++c)
                m[r][c] -= f * m[col][c];
        }
    }
    std::vector<double> x(n, 0.0);
    for (std::size_t i = 0; i < n; ++i)
        x[i] = g.is_active(static_cast<NodeId>(i)) ? m[i][n] / m[i][i] : 0.0;
    return x;
}

// Expected force by scanning every unordered pair of edges and testing
// whether it forms a feasible two-transmission sequence from the seed.
inline double expected_force(const Graph& g, NodeId seed) {
    std::vector<Edge> edges;
    for (NodeId i = 0; i < g.n(); ++i) {
        if (!g.is_active(i))
            continue;
        for (NodeId j : g.neighbors(i))
            if (j > i && g.is_active(j))
                edges.emplace_back(i, j);
    }
    const auto other = [](const Edge& e, NodeId x) { return e.first == x ? e.second : e.first; };
    const auto incident = [](const Edge& e, NodeId x) { return e.first == x || e.second == x; };

    std::vector<double> forces;
    const auto active_degree = [&](NodeId v) {
        int deg = 0;
        for (const Edge& e : edges)
            deg += incident(e, v) ? 1 : 0;
        return deg;
    };
    const auto record_cluster = [&](std::vector<NodeId> nodes) {
        std::sort(nodes.begin(), nodes.end());
        nodes.erase(std::unique(nodes.begin(), nodes.end()), nodes.end());
        int internal = 0;
        for (const Edge& e : edges) {
            const bool a_in = std::find(nodes.begin(), nodes.end(), e.first) != nodes.end();
            const bool b_in = std::find(nodes.begin(), nodes.end(), e.second) != nodes.end();
            internal += (a_in && b_in) ? 1 : 0;
        }
        double total_degree = 0.0;
        for (NodeId v : nodes)
            total_degree += active_degree(v);
        forces.push_back(total_degree - 2.0 * internal);
    };

    for (std::size_t i = 0; i < edges.size(); ++i) {
        for (std::size_t j = i + 1; j < edges.size(); ++j) {
            const Edge& e = edges[i];
            const Edge& f = edges[j];
            bool feasible = false;
            for (const auto& [first, second] : {std::pair{e, f}, std::pair{f, e}}) {
                if (!incident(first, seed))
                    continue;
                const NodeId a = other(first, seed);
                const bool from_seed = incident(second, seed) && !incident(second, a);
                const bool from_a = incident(second, a) && !incident(second, seed);
                if (from_seed || from_a)
                    feasible = true;
            }
            if (feasible)
                record_cluster({seed, e.first, e.second, f.first, f.second});
        }
    }

    double total = 0.0;
    for (double d : forces)
        total += d;
    if (total <= 0.0)
        return 0.0;
    double entropy = 0.0;
    for (double d : forces)
        if (d > 0.0)
            entropy -= (d / total) * std::log(d / total);
    return entropy;
}

// Exact mean shell sizes over all active sources, from the Floyd matrix.
inline std::vector<double> exhaustive_curve(const Graph& g) {
    const auto d = all_pairs_distances(g);
    std::vector<double> counts;
    const auto actives = g.active_nodes();
    for (NodeId s : actives)
        for (NodeId v : actives) {
            if (d[s][v] >= kInf)
                continue;
            const auto dist = static_cast<std::size_t>(d[s][v]);
            if (counts.size() <= dist)
                counts.resize(dist + 1, 0.0);
            counts[dist] += 1.0;
        }
    for (double& c : counts)
        c /= static_cast<double>(actives.size());
    return counts;
}

inline double mean_finite_pairwise_distance(const Graph& g) {
    const auto d = all_pairs_distances(g);
    const auto actives = g.active_nodes();
    double sum = 0.0;
    std::size_t pairs = 0;
    for (NodeId i : actives)
        for (NodeId j : actives) {
            if (j <= i || d[i][j] >= kInf)
                continue;
            sum += d[i][j];
            ++pairs;
        }
    return pairs > 0 ? sum / static_cast<double>(pairs) : 0.0;
}

// --- numeric quadrature -----------------------------------------------------

inline double adaptive_simpson(const std::function<double(double)>& f, double a, double b,
                               double fa, double fm, double fb, double whole, double eps,
                               int depth) {
    const double m = 0.5 * (a + b);
    const double lm = 0.5 * (a + m);
    const double rm = 0.5 * (m + b);
    const double flm = f(lm);
    const double frm = f(rm);
    const double left = (m - a) / 6.0 * (fa + 4.0 * flm + fm);
    const double right = (b - m) / 6.0 * (fm + 4.0 * frm + fb);
    if (depth <= 0 || std::abs(left + right - whole) <= 15.0 * eps)
        return left + right + (left + right - whole) / 15.0;
    return adaptive_simpson(f, a, m, fa, flm, fm, left, eps / 2.0, depth - 1) +
           adaptive_simpson(f, m, b, fm, frm, fb, right, eps / 2.0, depth - 1);
}

inline double integrate(const std::function<double(double)>& f, double a, double b, double eps) {
    const double fa = f(a);
    const double fb = f(b);
    const double fm = f(0.5 * (a + b));
    const double whole = (b - a) / 6.0 * (fa + 4.0 * fm + fb);
    return adaptive_simpson(f, a, b, fa, fm, fb, whole, eps, 50);
}

// Integral of a gamma density over [0, upper], with pdf(x) supplied by the
// caller (evaluated only at x > 0). For k < 1 the integrand has an
// integrable pole at 0; the substitution x = u^2 removes it for k >= 1/2,
// and the u=0 endpoint limit is filled in analytically.
inline double gamma_pdf_mass(const std::function<double(double)>& pdf, double k, double theta,
                             double upper) {
    const double norm = std::exp(-std::lgamma(k) - k * std::log(theta));
    if (k >= 1.0) {
        const auto f = [&](double x) {
            return x <= 0.0 ? (k == 1.0 ? norm : 0.0) : pdf(x);
        };
        return integrate(f, 0.0, upper, 1e-10);
    }
    if (k < 0.5)
        throw std::invalid_argument("gamma_pdf_mass: k below 0.5 not supported");
    const auto f = [&](double u) {
        if (u <= 0.0)
            return k == 0.5 ? 2.0 * norm : 0.0;
        return 2.0 * u * pdf(u * u);
    };
    return integrate(f, 0.0, std::sqrt(upper), 1e-10);
}

// --- random test graphs -----------------------------------------------------

// Connected simple graph: a random attachment tree plus extra random edges.
inline Graph random_connected_graph(flatcurve::Rng& rng, NodeId n, std::size_t extra_edges) {
    std::vector<Edge> edges;
    for (NodeId v = 1; v < n; ++v)
        edges.emplace_back(static_cast<NodeId>(flatcurve::uniform_below(rng, v)), v);
    std::size_t added = 0;
    std::size_t attempts = 0;
    while (added < extra_edges && attempts < extra_edges * 20 + 100) {
        ++attempts;
        const auto a = static_cast<NodeId>(flatcurve::uniform_below(rng, n));
        const auto b = static_cast<NodeId>(flatcurve::uniform_below(rng, n));
        if (a == b)
            continue;
        const Edge e{std::min(a, b), std::max(a, b)};
        if (std::find(edges.begin(), edges.end(), e) != edges.end())
            continue;
        edges.push_back(e);
        ++added;
    }
    return flatcurve::from_edge_list(edges);
}

}  // namespace oracle

#endif
