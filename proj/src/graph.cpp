#include "flatcurve/graph.hpp"

#include <algorithm>
#include <queue>
#include <stdexcept>

namespace flatcurve {

Graph::Graph(NodeId n) {
    if (n <= 0)
        throw std::invalid_argument("Graph: node count must be positive");
    adj_.resize(static_cast<std::size_t>(n));
    active_.assign(static_cast<std::size_t>(n), 1);
    active_count_ = static_cast<std::size_t>(n);
}

void Graph::check_node(NodeId i) const {
    if (i < 0 || i >= n())
        throw std::out_of_range("Graph: node id " + std::to_string(i) + " out of range");
}

bool Graph::add_edge(NodeId i, NodeId j) {
    check_node(i);
    check_node(j);
    if (i == j)
        return false;
    // Lists are not sorted yet during construction; scan linearly.
    const auto& a = adj_[static_cast<std::size_t>(i)];
    const auto& b = adj_[static_cast<std::size_t>(j)];
    const auto& shorter = a.size() <= b.size() ? a : b;
    const NodeId target = a.size() <= b.size() ? j : i;
    if (std::find(shorter.begin(), shorter.end(), target) != shorter.end())
        return false;
    adj_[static_cast<std::size_t>(i)].push_back(j);
    adj_[static_cast<std::size_t>(j)].push_back(i);
    ++edge_count_;
    return true;
}

void Graph::finalize() {
    for (auto& list : adj_)
        std::sort(list.begin(), list.end());
}

bool Graph::has_edge(NodeId i, NodeId j) const {
    const auto& a = adj_[static_cast<std::size_t>(i)];
    const auto& b = adj_[static_cast<std::size_t>(j)];
    const auto& shorter = a.size() <= b.size() ? a : b;
    const NodeId target = a.size() <= b.size() ? j : i;
    return std::binary_search(shorter.begin(), shorter.end(), target);
}

int Graph::effective_degree(NodeId i) const {
    check_node(i);
    if (!is_active(i))
        return 0;
    int deg = 0;
    for (NodeId v : adj_[static_cast<std::size_t>(i)])
        deg += active_[static_cast<std::size_t>(v)];
    return deg;
}

void Graph::isolate_node(NodeId i) {
    check_node(i);
    if (!is_active(i))
        throw std::runtime_error("double isolation of node " + std::to_string(i));
    edge_count_ -= static_cast<std::size_t>(effective_degree(i));
    active_[static_cast<std::size_t>(i)] = 0;
    --active_count_;
}

DistanceVector Graph::bfs_distances(NodeId source) const {
    check_node(source);
    if (!is_active(source))
        throw std::runtime_error("bfs_distances: source " + std::to_string(source) + " is inactive");
    DistanceVector out;
    out.source = source;
    out.dist.assign(static_cast<std::size_t>(n()), kUnreachable);
    out.dist[static_cast<std::size_t>(source)] = 0;
    std::queue<NodeId> frontier;
    frontier.push(source);
    while (!frontier.empty()) {
        const NodeId u = frontier.front();
        frontier.pop();
        const int du = out.dist[static_cast<std::size_t>(u)];
        for (NodeId v : adj_[static_cast<std::size_t>(u)]) {
            if (!is_active(v) || out.dist[static_cast<std::size_t>(v)] != kUnreachable)
                continue;
            out.dist[static_cast<std::size_t>(v)] = du + 1;
            frontier.push(v);
        }
    }
    return out;
}

bool Graph::is_connected() const {
    if (active_count_ == 0)
        throw std::runtime_error("is_connected: no active nodes");
    NodeId start = -1;
    for (NodeId i = 0; i < n(); ++i) {
        if (is_active(i)) {
            start = i;
            break;
        }
    }
    const DistanceVector d = bfs_distances(start);
    std::size_t reached = 0;
    for (NodeId i = 0; i < n(); ++i)
        if (is_active(i) && d.dist[static_cast<std::size_t>(i)] != kUnreachable)
            ++reached;
    return reached == active_count_;
}

std::vector<std::vector<NodeId>> Graph::connected_components() const {
    if (active_count_ == 0)
        throw std::runtime_error("connected_components: no active nodes");
    std::vector<std::vector<NodeId>> components;
    std::vector<std::uint8_t> seen(static_cast<std::size_t>(n()), 0);
    for (NodeId s = 0; s < n(); ++s) {
        if (!is_active(s) || seen[static_cast<std::size_t>(s)])
            continue;
        std::vector<NodeId> comp;
        std::queue<NodeId> frontier;
        seen[static_cast<std::size_t>(s)] = 1;
        frontier.push(s);
        while (!frontier.empty()) {
            const NodeId u = frontier.front();
            frontier.pop();
            comp.push_back(u);
            for (NodeId v : adj_[static_cast<std::size_t>(u)]) {
                if (!is_active(v) || seen[static_cast<std::size_t>(v)])
                    continue;
                seen[static_cast<std::size_t>(v)] = 1;
                frontier.push(v);
            }
        }
        std::sort(comp.begin(), comp.end());
        components.push_back(std::move(comp));
    }
    return components;
}

bool Graph::connected_without(NodeId skip) const {
    check_node(skip);
    if (active_count_ <= 2)
        return true;
    NodeId start = -1;
    for (NodeId i = 0; i < n(); ++i) {
        if (is_active(i) && i != skip) {
            start = i;
            break;
        }
    }
    std::vector<std::uint8_t> seen(static_cast<std::size_t>(n()), 0);
    seen[static_cast<std::size_t>(start)] = 1;
    std::queue<NodeId> frontier;
    frontier.push(start);
    std::size_t reached = 1;
    while (!frontier.empty()) {
        const NodeId u = frontier.front();
        frontier.pop();
        for (NodeId v : adj_[static_cast<std::size_t>(u)]) {
            if (!is_active(v) || v == skip || seen[static_cast<std::size_t>(v)])
                continue;
            seen[static_cast<std::size_t>(v)] = 1;
            frontier.push(v);
            ++reached;
        }
    }
    return reached == active_count_ - 1;
}

int Graph::diameter() const {
    if (!is_connected())
        throw std::runtime_error("diameter: graph is disconnected");
    int best = 0;
    for (NodeId s = 0; s < n(); ++s) {
        if (!is_active(s))
            continue;
        const DistanceVector d = bfs_distances(s);
        for (NodeId v = 0; v < n(); ++v) {
            const int dv = d.dist[static_cast<std::size_t>(v)];
            if (is_active(v) && dv > best)
                best = dv;
        }
    }
    return best;
}

std::vector<NodeId> Graph::active_nodes() const {
    std::vector<NodeId> out;
    out.reserve(active_count_);
    for (NodeId i = 0; i < n(); ++i)
        if (is_active(i))
            out.push_back(i);
    return out;
}

Graph from_edge_list(std::span<const Edge> pairs, EdgeListStats* stats) {
    if (pairs.empty())
        throw std::invalid_argument("empty graph");
    NodeId max_id = 0;
    for (const auto& [a, b] : pairs) {
        if (a < 0 || b < 0)
            throw std::invalid_argument("from_edge_list: negative node id");
        max_id = std::max({max_id, a, b});
    }
    Graph g(max_id + 1);
    EdgeListStats local;
    for (const auto& [a, b] : pairs) {
        if (a == b) {
            ++local.self_loops;
            continue;
        }
        if (!g.add_edge(a, b))
            ++local.duplicate_edges;
    }
    g.finalize();
    if (stats)
        *stats = local;
    return g;
}

}  // namespace flatcurve
