#include "treeirr/graph.hpp"

#include <algorithm>
#include <set>
#include <stdexcept>
#include <string>

namespace treeirr {

Graph::Graph(int n, std::vector<Edge> edges) : n_(n) {
    if (n < 0) throw std::invalid_argument("vertex count must be nonnegative");
    std::set<Edge> seen;
    edges_.reserve(edges.size());
    for (auto [u, v] : edges) {
        if (u < 0 || u >= n || v < 0 || v >= n)
            throw std::invalid_argument("edge endpoint out of range: (" +
                                        std::to_string(u) + "," + std::to_string(v) + ")");
        if (u == v)
            throw std::invalid_argument("self-loop at vertex " + std::to_string(u));
        Edge e{std::min(u, v), std::max(u, v)};
        if (!seen.insert(e).second)
            throw std::invalid_argument("duplicate edge (" + std::to_string(e.first) +
                                        "," + std::to_string(e.second) + ")");
    }
    edges_.assign(seen.begin(), seen.end());
    degrees_.assign(n, 0);
    adj_.assign(n, {});
    for (auto [u, v] : edges_) {
        ++degrees_[u];
        ++degrees_[v];
        adj_[u].push_back(v);
        adj_[v].push_back(u);
    }
    for (auto& nbrs : adj_) std::sort(nbrs.begin(), nbrs.end());
}

bool Graph::has_edge(int u, int v) const {
    if (u < 0 || u >= n_ || v < 0 || v >= n_) return false;
    const auto& nbrs = adj_[u];
    return std::binary_search(nbrs.begin(), nbrs.end(), v);
}

int Graph::max_degree() const {
    return degrees_.empty() ? 0 : *std::max_element(degrees_.begin(), degrees_.end());
}

int Graph::min_degree() const {
    return degrees_.empty() ? 0 : *std::min_element(degrees_.begin(), degrees_.end());
}

bool Graph::is_connected() const {
    if (n_ <= 1) return true;
    std::vector<bool> visited(n_, false);
    std::vector<int> stack{0};
    visited[0] = true;
    int count = 1;
    while (!stack.empty()) {
        int v = stack.back();
        stack.pop_back();
        for (int w : adj_[v]) {
            if (!visited[w]) {
                visited[w] = true;
                ++count;
                stack.push_back(w);
            }
        }
    }
    return count == n_;
}

Tree::Tree(Graph g) : Graph(std::move(g)) {
    if (n() < 1) throw std::invalid_argument("a tree has at least one vertex");
    if (m() != n() - 1)
        throw std::invalid_argument("not a tree: " + std::to_string(m()) + " edges for " +
                                    std::to_string(n()) + " vertices");
    if (!is_connected()) throw std::invalid_argument("not a tree: disconnected");
}

Tree make_tree(int n, std::vector<Edge> edges) { return Tree(n, std::move(edges)); }

}  // namespace treeirr
