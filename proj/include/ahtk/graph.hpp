#pragma once

#include <cstdint>
#include <utility>
#include <vector>

namespace ahtk {

/// A finite simple graph on vertices 0..n-1. Immutable after construction;
/// adjacency is symmetric and irreflexive, every edge is stored once as an
/// ordered pair (u, v) with u < v.
class Graph {
public:
    Graph() = default;

    // Validates, deduplicates and sorts the edge list. Throws InvalidGraph on
    // a loop (u, u) or an endpoint >= num_vertices.
    Graph(int num_vertices, std::vector<std::pair<int, int>> edges);

    int num_vertices() const { return n_; }
    int num_edges() const { return static_cast<int>(edges_.size()); }

    bool adjacent(int u, int v) const { return adj_[static_cast<std::size_t>(u) * n_ + v] != 0; }
    bool adjacent_or_equal(int u, int v) const { return u == v || adjacent(u, v); }

    // Sorted ascending.
    const std::vector<int>& neighbors(int v) const { return nbrs_[v]; }
    // Sorted ascending, includes v itself.
    const std::vector<int>& closed_neighborhood(int v) const { return closed_nbrs_[v]; }

    const std::vector<std::pair<int, int>>& edges() const { return edges_; }

    bool operator==(const Graph& other) const
    {
        return n_ == other.n_ && edges_ == other.edges_;
    }
    bool operator!=(const Graph& other) const { return !(*this == other); }

private:
    int n_ = 0;
    std::vector<std::pair<int, int>> edges_;
    std::vector<std::vector<int>> nbrs_;
    std::vector<std::vector<int>> closed_nbrs_;
    std::vector<std::uint8_t> adj_;
};

Graph make_graph(int num_vertices, const std::vector<std::pair<int, int>>& edges);

/// I_n: the path graph on vertices 0..n with edges {i, i+1}. I_0 is a point.
Graph path_graph(int length);

/// C_n: the cycle graph on vertices 0..n-1 with edges {i, (i+1) mod n}.
/// Throws InvalidGraph for n < 3.
Graph cycle_graph(int length);

/// If G is exactly cycle_graph(n) (same vertex labelling), returns n.
int cycle_graph_order(const Graph& g);        // throws InvalidTarget otherwise
bool is_cycle_graph(const Graph& g);

} // namespace ahtk
