#include "ahtk/graph_map.hpp"

#include "ahtk/errors.hpp"

#include <cassert>
#include <string>

namespace ahtk {

bool is_graph_map(const Graph& src, const Graph& tgt, const std::vector<int>& assignment)
{
    if (static_cast<int>(assignment.size()) != src.num_vertices())
        throw InvalidMap("assignment has " + std::to_string(assignment.size()) +
                         " entries for a source with " + std::to_string(src.num_vertices()) +
                         " vertices");
    for (int value : assignment)
        if (value < 0 || value >= tgt.num_vertices())
            throw InvalidMap("assignment value " + std::to_string(value) +
                             " is outside the target's vertex range");
    for (const auto& [u, v] : src.edges())
        if (!tgt.adjacent_or_equal(assignment[u], assignment[v]))
            return false;
    return true;
}

GraphMap::GraphMap(Graph source, Graph target, std::vector<int> assignment)
    : source_(std::move(source)), target_(std::move(target)), assignment_(std::move(assignment))
{
    if (!is_graph_map(source_, target_, assignment_))
        throw InvalidMap("assignment violates the hom condition on some edge");
}

GraphMap::GraphMap(Unchecked, Graph source, Graph target, std::vector<int> assignment)
    : source_(std::move(source)), target_(std::move(target)), assignment_(std::move(assignment))
{
    assert(is_graph_map(source_, target_, assignment_));
}

GraphMap identity_map(const Graph& g)
{
    std::vector<int> a(g.num_vertices());
    for (int v = 0; v < g.num_vertices(); ++v)
        a[v] = v;
    return GraphMap(g, g, std::move(a));
}

GraphMap constant_map(const Graph& src, const Graph& tgt, int value)
{
    if (value < 0 || value >= tgt.num_vertices())
        throw InvalidMap("constant value out of range");
    return GraphMap(src, tgt, std::vector<int>(src.num_vertices(), value));
}

GraphMap compose(const GraphMap& f, const GraphMap& g)
{
    if (g.target() != f.source())
        throw CompositionError("compose(f, g) requires target(g) == source(f)");
    std::vector<int> a(g.source().num_vertices());
    for (int v = 0; v < g.source().num_vertices(); ++v)
        a[v] = f(g(v));
    return GraphMap(GraphMap::Unchecked{}, g.source(), f.target(), std::move(a));
}

} // namespace ahtk
