#include "treeirr/canonical.hpp"

#include <algorithm>

namespace treeirr {

std::vector<int> tree_center(const Tree& t) {
    int n = t.n();
    if (n <= 2) {
        std::vector<int> all(n);
        for (int i = 0; i < n; ++i) all[i] = i;
        return all;
    }
    std::vector<int> deg = t.degrees();
    std::vector<int> layer;
    std::vector<bool> removed(n, false);
    for (int v = 0; v < n; ++v)
        if (deg[v] == 1) layer.push_back(v);
    int remaining = n;
    while (remaining > 2) {
        std::vector<int> next;
        for (int v : layer) {
            removed[v] = true;
            --remaining;
            for (int w : t.neighbors(v)) {
                if (!removed[w] && --deg[w] == 1) next.push_back(w);
            }
        }
        layer = std::move(next);
    }
    std::vector<int> centers;
    for (int v = 0; v < n; ++v)
        if (!removed[v]) centers.push_back(v);
    return centers;
}

namespace {

// Iterative post-order AHU; recursion depth would be the tree height.
std::string ahu_code(const Tree& t, int root) {
    int n = t.n();
    std::vector<int> parent(n, -1), order;
    order.reserve(n);
    std::vector<int> stack{root};
    parent[root] = root;
    while (!stack.empty()) {
        int v = stack.back();
        stack.pop_back();
        order.push_back(v);
        for (int w : t.neighbors(v)) {
            if (parent[w] == -1) {
                parent[w] = v;
                stack.push_back(w);
            }
        }
    }
    std::vector<std::string> code(n);
    for (auto it = order.rbegin(); it != order.rend(); ++it) {
        int v = *it;
        std::vector<std::string> child_codes;
        for (int w : t.neighbors(v))
            if (parent[w] == v) child_codes.push_back(std::move(code[w]));
        std::sort(child_codes.begin(), child_codes.end());
        std::string s = "(";
        for (const auto& c : child_codes) s += c;
        s += ')';
        code[v] = std::move(s);
    }
    return code[root];
}

}  // namespace

std::string rooted_code(const Tree& t, int root) { return ahu_code(t, root); }

std::string canonical_code(const Tree& t) {
    auto centers = tree_center(t);
    std::string best = ahu_code(t, centers[0]);
    if (centers.size() == 2) {
        std::string other = ahu_code(t, centers[1]);
        if (other < best) best = std::move(other);
    }
    return best;
}

}  // namespace treeirr
