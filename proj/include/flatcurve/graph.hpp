#ifndef FLATCURVE_GRAPH_HPP
#define FLATCURVE_GRAPH_HPP

#include <cstdint>
#include <span>
#include <string>
#include <utility>
#include <vector>

namespace flatcurve {

using NodeId = std::int32_t;
using Edge = std::pair<NodeId, NodeId>;

// Sentinel for nodes a BFS cannot reach. Kept distinct from any real hop
// count; it must never enter a histogram or a mean.
inline constexpr int kUnreachable = -1;

// BFS shortest-path hop counts from one source node.
struct DistanceVector {
    NodeId source = 0;
    std::vector<int> dist;  // dist[v] in {0,1,...} or kUnreachable
};

// Counts reported by from_edge_list for input that was silently dropped.
struct EdgeListStats {
    std::size_t duplicate_edges = 0;
    std::size_t self_loops = 0;
};

// Undirected simple graph with dense node ids 0..n-1 and an activity mask.
// Isolating a node marks it inactive instead of deleting it, so node ids
// (and any rankings computed against them) stay valid across isolation
// steps. All queries below operate on the active subgraph.
class Graph {
public:
    Graph() = default;
    explicit Graph(NodeId n);

    // Adds edge (i,j); returns false for self-loops and duplicates, which
    // are not inserted.
    bool add_edge(NodeId i, NodeId j);

    // Sorts every adjacency list; call once after a batch of add_edge.
    // Queries assume sorted lists (deterministic iteration, binary search).
    void finalize();

    NodeId n() const { return static_cast<NodeId>(adj_.size()); }
    std::size_t active_count() const { return active_count_; }
    std::size_t edge_count() const { return edge_count_; }
    bool is_active(NodeId i) const { return active_[static_cast<std::size_t>(i)] != 0; }

    // Raw neighbor list, sorted; may contain inactive nodes.
    std::span<const NodeId> neighbors(NodeId i) const {
        const auto& a = adj_[static_cast<std::size_t>(i)];
        return {a.data(), a.size()};
    }

    // Number of active neighbors; 0 for an inactive node.
    int effective_degree(NodeId i) const;

    // Valid after finalize() (binary-searches the sorted lists).
    bool has_edge(NodeId i, NodeId j) const;

    // Marks i inactive and removes its incident edges from the effective
    // topology. Throws on double isolation.
    void isolate_node(NodeId i);

    DistanceVector bfs_distances(NodeId source) const;
    bool is_connected() const;
    std::vector<std::vector<NodeId>> connected_components() const;

    // True if the active subgraph minus `skip` is still connected
    // (vacuously true when fewer than two nodes remain).
    bool connected_without(NodeId skip) const;

    // Max BFS distance over all active pairs; throws if disconnected.
    int diameter() const;

    // Active node ids in ascending order.
    std::vector<NodeId> active_nodes() const;

    void check_node(NodeId i) const;

private:
    std::vector<std::vector<NodeId>> adj_;
    std::vector<std::uint8_t> active_;
    std::size_t active_count_ = 0;
    std::size_t edge_count_ = 0;
};

// Builds a simple graph from raw pairs; n is max id + 1. Duplicate pairs and
// self-loops are dropped, counted in *stats when given. Throws on empty
// input or negative ids.
Graph from_edge_list(std::span<const Edge> pairs, EdgeListStats* stats = nullptr);

}  // namespace flatcurve

#endif
