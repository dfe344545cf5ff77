#include "treeirr/construct.hpp"

#include <random>
#include <stdexcept>

namespace treeirr {

Tree star(int n) {
    if (n < 2) throw std::invalid_argument("star needs n >= 2");
    std::vector<Edge> edges;
    edges.reserve(n - 1);
    for (int v = 1; v < n; ++v) edges.emplace_back(0, v);
    return Tree(n, std::move(edges));
}

Tree path(int n) {
    if (n < 1) throw std::invalid_argument("path needs n >= 1");
    std::vector<Edge> edges;
    edges.reserve(n - 1);
    for (int v = 0; v + 1 < n; ++v) edges.emplace_back(v, v + 1);
    return Tree(n, std::move(edges));
}

Tree caterpillar(const std::vector<int>& spine_degrees) {
    int k = static_cast<int>(spine_degrees.size());
    if (k < 2) throw std::invalid_argument("caterpillar needs spine length >= 2");
    for (int i = 0; i < k; ++i) {
        int spine_neighbors = (i == 0 || i == k - 1) ? 1 : 2;
        if (spine_degrees[i] < spine_neighbors)
            throw std::invalid_argument("spine vertex " + std::to_string(i) +
                                        " cannot reach target degree " +
                                        std::to_string(spine_degrees[i]));
    }
    std::vector<Edge> edges;
    for (int i = 0; i + 1 < k; ++i) edges.emplace_back(i, i + 1);
    int next = k;
    for (int i = 0; i < k; ++i) {
        int spine_neighbors = (i == 0 || i == k - 1) ? 1 : 2;
        for (int j = 0; j < spine_degrees[i] - spine_neighbors; ++j)
            edges.emplace_back(i, next++);
    }
    return Tree(next, std::move(edges));
}

Tree fibonacci_caterpillar(int n, FibConvention convention) {
    if (n < 4) throw std::invalid_argument("fibonacci caterpillar needs n >= 4");
    auto f = fibonacci_values(n, convention);
    std::vector<int> spine;
    for (int i = 3; i <= n; ++i) spine.push_back(static_cast<int>(f[i]));
    return caterpillar(spine);
}

Tree prufer_decode(int n, const std::vector<int>& prufer) {
    if (n < 2) throw std::invalid_argument("Prüfer decoding needs n >= 2");
    if (static_cast<int>(prufer.size()) != n - 2)
        throw std::invalid_argument("Prüfer string must have length n - 2");
    std::vector<int> degree(n, 1);
    for (int s : prufer) {
        if (s < 0 || s >= n) throw std::invalid_argument("Prüfer symbol out of range");
        ++degree[s];
    }
    std::vector<Edge> edges;
    edges.reserve(n - 1);
    // classic O(n) decode: keep a moving pointer to the smallest leaf
    int ptr = 0;
    while (degree[ptr] != 1) ++ptr;
    int leaf = ptr;
    for (int s : prufer) {
        edges.emplace_back(leaf, s);
        if (--degree[s] == 1 && s < ptr) {
            leaf = s;
        } else {
            while (degree[++ptr] != 1) {}
            leaf = ptr;
        }
    }
    edges.emplace_back(leaf, n - 1);
    return Tree(n, std::move(edges));
}

Tree random_tree(int n, std::uint64_t seed) {
    if (n < 1) throw std::invalid_argument("random tree needs n >= 1");
    if (n == 1) return Tree(1, {});
    if (n == 2) return Tree(2, {{0, 1}});
    std::mt19937_64 rng(seed);
    std::uniform_int_distribution<int> pick(0, n - 1);
    std::vector<int> prufer(n - 2);
    for (int& s : prufer) s = pick(rng);
    return prufer_decode(n, prufer);
}

}  // namespace treeirr
