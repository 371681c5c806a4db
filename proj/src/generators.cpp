#include "flatcurve/generators.hpp"

#include <algorithm>
#include <stdexcept>
#include <vector>

#include "flatcurve/rng.hpp"

namespace flatcurve {

NodeId seed_graph_size(int m) {
    return static_cast<NodeId>(std::max(m, 2) + 1);
}

namespace {

void validate(const GrowthSpec& spec) {
    if (spec.m < 1)
        throw std::invalid_argument("generate: m must be >= 1");
    if (spec.m0_pa < 1 || spec.m0_pa > spec.m)
        throw std::invalid_argument("generate: m0_pa must be in [1, m]");
    if (spec.n <= spec.m)
        throw std::invalid_argument("generate: n must exceed m");
    if (spec.triad_links() > 0 && spec.m < 2)
        throw std::invalid_argument("generate: triad formation needs m >= 2");
}

}  // namespace

Graph generate(const GrowthSpec& spec) {
    validate(spec);
    Rng rng(spec.seed);

    const NodeId s = seed_graph_size(spec.m);
    std::vector<Edge> edges;
    std::vector<std::vector<NodeId>> adj(static_cast<std::size_t>(spec.n));
    // One entry per edge endpoint, so a uniform draw lands on node i with
    // probability proportional to its current degree.
    std::vector<NodeId> pa_pool;

    for (NodeId i = 0; i < s; ++i) {
        for (NodeId j = i + 1; j < s; ++j) {
            edges.emplace_back(i, j);
            adj[static_cast<std::size_t>(i)].push_back(j);
            adj[static_cast<std::size_t>(j)].push_back(i);
            pa_pool.push_back(i);
            pa_pool.push_back(j);
        }
    }

    std::vector<NodeId> targets;
    std::vector<NodeId> eligible;
    const auto linked_this_step = [&](NodeId v) {
        return std::find(targets.begin(), targets.end(), v) != targets.end();
    };

    // Weighted draw among not-yet-linked existing nodes. Rejection sampling
    // against the degree pool is equivalent to the exact conditional draw;
    // after too many rejections we fall back to the explicit enumeration,
    // which has the same distribution and always terminates.
    const auto draw_pa_target = [&](NodeId step_node) -> NodeId {
        for (int attempt = 0; attempt < 64; ++attempt) {
            const NodeId v = pa_pool[uniform_below(rng, pa_pool.size())];
            if (!linked_this_step(v))
                return v;
        }
        std::uint64_t total = 0;
        for (NodeId v = 0; v < step_node; ++v)
            if (!linked_this_step(v))
                total += adj[static_cast<std::size_t>(v)].size();
        std::uint64_t r = uniform_below(rng, total);
        for (NodeId v = 0; v < step_node; ++v) {
            if (linked_this_step(v))
                continue;
            const std::uint64_t w = adj[static_cast<std::size_t>(v)].size();
            if (r < w)
                return v;
            r -= w;
        }
        throw std::logic_error("generate: exhausted attachment pool");
    };

    for (NodeId j = s; j < spec.n; ++j) {
        targets.clear();
        for (int t = 0; t < spec.m0_pa; ++t)
            targets.push_back(draw_pa_target(j));
        const int n_pa = spec.m0_pa;

        for (int t = 0; t < spec.triad_links(); ++t) {
            const NodeId parent = targets[static_cast<std::size_t>(
                uniform_below(rng, static_cast<std::uint64_t>(n_pa)))];
            eligible.clear();
            for (NodeId v : adj[static_cast<std::size_t>(parent)])
                if (v != j && !linked_this_step(v))
                    eligible.push_back(v);
            if (!eligible.empty())
                targets.push_back(eligible[uniform_below(rng, eligible.size())]);
            else
                targets.push_back(draw_pa_target(j));  // triad fallback
        }

        // Commit the step; pool and adjacency reflect pre-step degrees until here.
        for (NodeId v : targets) {
            edges.emplace_back(j, v);
            adj[static_cast<std::size_t>(j)].push_back(v);
            adj[static_cast<std::size_t>(v)].push_back(j);
            pa_pool.push_back(j);
            pa_pool.push_back(v);
        }
    }

    EdgeListStats stats;
    Graph g = from_edge_list(edges, &stats);
    if (stats.duplicate_edges != 0 || stats.self_loops != 0 || g.n() != spec.n)
        throw std::logic_error("generate: produced a non-simple graph");
    return g;
}

Graph generate_ba(NodeId n, int m, std::uint64_t seed) {
    return generate(GrowthSpec{n, m, m, seed});
}

Graph generate_hk(NodeId n, int m, int m0_pa, std::uint64_t seed) {
    if (m < 2)
        throw std::invalid_argument("generate_hk: m must be >= 2");
    if (m0_pa >= m)
        throw std::invalid_argument("generate_hk: m0_pa must be < m (use generate_ba)");
    return generate(GrowthSpec{n, m, m0_pa, seed});
}

}  // namespace flatcurve
