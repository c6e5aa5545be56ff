#pragma once

#include "ahtk/graph.hpp"

#include <vector>

namespace ahtk {

/// Returns true iff `assignment` satisfies the hom condition for every edge
/// {u, v} of src: the images are equal or adjacent in tgt (edge collapsing is
/// allowed). Throws InvalidMap when the assignment is not a total function
/// into the target's vertex set.
bool is_graph_map(const Graph& src, const Graph& tgt, const std::vector<int>& assignment);

/// A graph map in the edge-collapsing convention: each edge of the source is
/// sent to an edge of the target or collapsed onto a single vertex.
class GraphMap {
public:
    GraphMap(Graph source, Graph target, std::vector<int> assignment);

    const Graph& source() const { return source_; }
    const Graph& target() const { return target_; }
    const std::vector<int>& assignment() const { return assignment_; }

    int operator()(int v) const { return assignment_[v]; }

    bool operator==(const GraphMap& other) const
    {
        return assignment_ == other.assignment_ && source_ == other.source_ &&
               target_ == other.target_;
    }
    bool operator!=(const GraphMap& other) const { return !(*this == other); }

private:
    struct Unchecked {};
    GraphMap(Unchecked, Graph source, Graph target, std::vector<int> assignment);

    friend GraphMap compose(const GraphMap& f, const GraphMap& g);

    Graph source_;
    Graph target_;
    std::vector<int> assignment_;
};

GraphMap identity_map(const Graph& g);
GraphMap constant_map(const Graph& src, const Graph& tgt, int value);

/// f after g. Requires target(g) == source(f); the hom condition is preserved
/// by composition, so the result is not re-validated (debug assert only).
GraphMap compose(const GraphMap& f, const GraphMap& g);

} // namespace ahtk
