#pragma once

#include <utility>
#include <vector>

namespace treeirr {

using Edge = std::pair<int, int>;

/// Simple undirected graph on vertices 0..n-1. Immutable after construction;
/// degrees and adjacency lists are precomputed so index computations are O(m).
class Graph {
public:
    Graph() = default;

    /// Validates: endpoints in [0,n), no loops, no duplicate edges.
    /// Edges are normalized to (min,max) and stored sorted.
    Graph(int n, std::vector<Edge> edges);

    int n() const { return n_; }
    int m() const { return static_cast<int>(edges_.size()); }
    int degree(int v) const { return degrees_[v]; }
    const std::vector<int>& degrees() const { return degrees_; }
    const std::vector<Edge>& edges() const { return edges_; }
    const std::vector<int>& neighbors(int v) const { return adj_[v]; }
    bool has_edge(int u, int v) const;

    int max_degree() const;  // 0 for edgeless graphs
    int min_degree() const;
    bool is_connected() const;

    bool operator==(const Graph& other) const {
        return n_ == other.n_ && edges_ == other.edges_;
    }

private:
    int n_ = 0;
    std::vector<Edge> edges_;
    std::vector<int> degrees_;
    std::vector<std::vector<int>> adj_;
};

/// A connected graph with m = n-1. Construction of anything else throws.
class Tree : public Graph {
public:
    explicit Tree(Graph g);
    Tree(int n, std::vector<Edge> edges) : Tree(Graph(n, std::move(edges))) {}
};

Tree make_tree(int n, std::vector<Edge> edges);

}  // namespace treeirr
