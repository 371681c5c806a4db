#include "flatcurve/edge_list_io.hpp"

#include <fstream>
#include <sstream>
#include <stdexcept>

namespace flatcurve {

std::vector<Edge> read_edge_list(const std::string& path) {
    std::ifstream in(path);
    if (!in)
        throw std::runtime_error("cannot open edge list '" + path + "'");
    std::vector<Edge> edges;
    std::string line;
    std::size_t lineno = 0;
    while (std::getline(in, line)) {
        ++lineno;
        const auto first = line.find_first_not_of(" \t\r");
        if (first == std::string::npos || line[first] == '#')
            continue;
        std::istringstream fields(line);
        long long a = -1;
        long long b = -1;
        std::string extra;
        if (!(fields >> a >> b) || a < 0 || b < 0 || (fields >> extra))
            throw std::runtime_error(path + ":" + std::to_string(lineno) +
                                     ": expected two non-negative integers, got '" + line + "'");
        edges.emplace_back(static_cast<NodeId>(a), static_cast<NodeId>(b));
    }
    return edges;
}

Graph load_graph(const std::string& path, EdgeListStats* stats) {
    const std::vector<Edge> edges = read_edge_list(path);
    if (edges.empty())
        throw std::runtime_error("empty graph: '" + path + "' has no edges");
    return from_edge_list(edges, stats);
}

void write_edge_list(const Graph& g, const std::string& path) {
    std::ofstream out(path);
    if (!out)
        throw std::runtime_error("cannot write edge list '" + path + "'");
    for (NodeId i = 0; i < g.n(); ++i) {
        if (!g.is_active(i))
            continue;
        for (NodeId j : g.neighbors(i))
            if (j > i && g.is_active(j))
                out << i << ' ' << j << '\n';
    }
    if (!out)
        throw std::runtime_error("write failed for '" + path + "'");
}

}  // namespace flatcurve
