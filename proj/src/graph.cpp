#include "ahtk/graph.hpp"

#include "ahtk/errors.hpp"

#include <algorithm>
#include <string>

namespace ahtk {

Graph::Graph(int num_vertices, std::vector<std::pair<int, int>> edges)
    : n_(num_vertices)
{
    if (n_ < 0)
        throw InvalidGraph("vertex count must be nonnegative");

    for (auto& [u, v] : edges) {
        if (u == v)
            throw InvalidGraph("loop edge (" + std::to_string(u) + ", " + std::to_string(v) +
                               ") is not allowed in a simple graph");
        if (u < 0 || v < 0 || u >= n_ || v >= n_)
            throw InvalidGraph("edge endpoint out of range: (" + std::to_string(u) + ", " +
                               std::to_string(v) + ") with " + std::to_string(n_) + " vertices");
        if (u > v)
            std::swap(u, v);
    }
    std::sort(edges.begin(), edges.end());
    edges.erase(std::unique(edges.begin(), edges.end()), edges.end());
    edges_ = std::move(edges);

    adj_.assign(static_cast<std::size_t>(n_) * n_, 0);
    nbrs_.assign(n_, {});
    for (const auto& [u, v] : edges_) {
        adj_[static_cast<std::size_t>(u) * n_ + v] = 1;
        adj_[static_cast<std::size_t>(v) * n_ + u] = 1;
        nbrs_[u].push_back(v);
        nbrs_[v].push_back(u);
    }
    for (auto& nb : nbrs_)
        std::sort(nb.begin(), nb.end());

    closed_nbrs_.assign(n_, {});
    for (int v = 0; v < n_; ++v) {
        auto& cn = closed_nbrs_[v];
        cn = nbrs_[v];
        cn.insert(std::lower_bound(cn.begin(), cn.end(), v), v);
    }
}

Graph make_graph(int num_vertices, const std::vector<std::pair<int, int>>& edges)
{
    return Graph(num_vertices, edges);
}

Graph path_graph(int length)
{
    if (length < 0)
        throw InvalidGraph("path length must be nonnegative");
    std::vector<std::pair<int, int>> edges;
    edges.reserve(length);
    for (int i = 0; i < length; ++i)
        edges.emplace_back(i, i + 1);
    return Graph(length + 1, std::move(edges));
}

Graph cycle_graph(int length)
{
    if (length < 3)
        throw InvalidGraph("cycle graph requires length >= 3, got " + std::to_string(length));
    std::vector<std::pair<int, int>> edges;
    edges.reserve(length);
    for (int i = 0; i < length; ++i)
        edges.emplace_back(i, (i + 1) % length);
    return Graph(length, std::move(edges));
}

bool is_cycle_graph(const Graph& g)
{
    int n = g.num_vertices();
    if (n < 3)
        return false;
    return g == cycle_graph(n);
}

int cycle_graph_order(const Graph& g)
{
    if (!is_cycle_graph(g))
        throw InvalidTarget("graph is not a cycle graph C_n in canonical labelling");
    return g.num_vertices();
}

} // namespace ahtk
