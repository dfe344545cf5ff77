#include "treeirr/degseq.hpp"

#include <algorithm>
#include <cctype>
#include <limits>
#include <numeric>
#include <sstream>
#include <stdexcept>

namespace treeirr {

DegreeSequence::DegreeSequence(std::vector<int> values) : values_(std::move(values)) {
    for (int v : values_)
        if (v < 0) throw std::invalid_argument("degree sequence values must be nonnegative");
    std::sort(values_.begin(), values_.end(), std::greater<int>());
}

DegreeSequence DegreeSequence::from_csv(const std::string& text) {
    std::vector<int> vals;
    std::string token;
    std::istringstream in(text);
    while (std::getline(in, token, ',')) {
        size_t pos = 0;
        int v;
        try {
            v = std::stoi(token, &pos);
        } catch (const std::exception&) {
            throw std::invalid_argument("bad degree token: '" + token + "'");
        }
        while (pos < token.size() && std::isspace(static_cast<unsigned char>(token[pos]))) ++pos;
        if (pos != token.size())
            throw std::invalid_argument("bad degree token: '" + token + "'");
        vals.push_back(v);
    }
    if (vals.empty()) throw std::invalid_argument("empty degree sequence");
    return DegreeSequence(std::move(vals));
}

long long DegreeSequence::sum() const {
    return std::accumulate(values_.begin(), values_.end(), 0LL);
}

long long DegreeSequence::prefix_sum(int k) const {
    k = std::clamp(k, 0, size());
    return std::accumulate(values_.begin(), values_.begin() + k, 0LL);
}

std::string DegreeSequence::to_csv() const {
    std::string out;
    for (int i = 0; i < size(); ++i) {
        if (i) out += ',';
        out += std::to_string(values_[i]);
    }
    return out;
}

DegreeSequence degree_sequence(const Graph& g) { return DegreeSequence(g.degrees()); }

bool is_graphical(const DegreeSequence& ds) {
    std::vector<int> d = ds.values();
    if (d.empty()) return true;
    long long total = ds.sum();
    if (total % 2 != 0) return false;
    while (true) {
        std::sort(d.begin(), d.end(), std::greater<int>());
        int d1 = d[0];
        if (d1 == 0) return true;
        if (d1 > static_cast<int>(d.size()) - 1) return false;
        d.erase(d.begin());
        for (int i = 0; i < d1; ++i)
            if (--d[i] < 0) return false;
    }
}

Graph realize_graph(const DegreeSequence& ds) {
    if (!is_graphical(ds))
        throw std::invalid_argument("degree sequence is not graphical: " + ds.to_csv());
    int n = ds.size();
    // residual degree per vertex; vertex ids fixed, order recomputed each round
    std::vector<int> residual = ds.values();
    std::vector<Edge> edges;
    std::vector<int> order(n);
    std::iota(order.begin(), order.end(), 0);
    while (true) {
        std::sort(order.begin(), order.end(), [&](int a, int b) {
            return residual[a] != residual[b] ? residual[a] > residual[b] : a < b;
        });
        int v = order[0];
        int need = residual[v];
        if (need == 0) break;
        residual[v] = 0;
        for (int i = 1; i <= need; ++i) {
            int u = order[i];
            --residual[u];
            edges.emplace_back(std::min(u, v), std::max(u, v));
        }
    }
    return Graph(n, std::move(edges));
}

bool is_tree_realizable(const DegreeSequence& ds) {
    int n = ds.size();
    if (n == 0) return false;
    if (n == 1) return ds[0] == 0;
    if (ds[n - 1] < 1) return false;
    return ds.sum() == 2LL * (n - 1);
}

Tree realize_tree(const DegreeSequence& ds) {
    if (!is_tree_realizable(ds))
        throw std::invalid_argument("degree sequence is not realizable by a tree: " + ds.to_csv());
    int n = ds.size();
    if (n == 1) return Tree(1, {});
    std::vector<int> spine;
    for (int i = 0; i < n; ++i)
        if (ds[i] >= 2) spine.push_back(ds[i]);
    std::vector<Edge> edges;
    int k = static_cast<int>(spine.size());
    if (k == 0) return Tree(2, {{0, 1}});  // (1,1)
    for (int i = 0; i + 1 < k; ++i) edges.emplace_back(i, i + 1);
    int next = k;
    for (int i = 0; i < k; ++i) {
        int spine_neighbors = (k == 1) ? 0 : (i == 0 || i == k - 1) ? 1 : 2;
        for (int j = 0; j < spine[i] - spine_neighbors; ++j) edges.emplace_back(i, next++);
    }
    return Tree(n, std::move(edges));
}

DegreeSequence pad_with_leaves(const DegreeSequence& ds) {
    long long k = ds.size();
    long long extra = ds.sum() - 2 * k + 2;  // leaves needed so the total is 2(n-1)
    if (extra < 0 || (ds.size() > 0 && ds[ds.size() - 1] < 1))
        throw std::invalid_argument("values cannot be the internal degrees of a tree: " +
                                    ds.to_csv());
    std::vector<int> vals = ds.values();
    vals.insert(vals.end(), static_cast<size_t>(extra), 1);
    return DegreeSequence(std::move(vals));
}

bool majorizes(const DegreeSequence& a, const DegreeSequence& b) {
    if (a.size() != b.size())
        throw std::invalid_argument("majorization compares sequences of equal length");
    int n = a.size();
    if (a.sum() != b.sum()) return false;
    long long pa = 0, pb = 0;
    for (int k = 0; k < n; ++k) {
        pa += a[k];
        pb += b[k];
        if (pb > pa) return false;
    }
    return true;
}

FibConvention fib_convention_from_string(const std::string& s) {
    if (s == "paper") return FibConvention::paper;
    if (s == "standard") return FibConvention::standard;
    throw std::invalid_argument("unknown fibonacci convention: '" + s + "'");
}

const char* to_string(FibConvention c) {
    return c == FibConvention::paper ? "paper" : "standard";
}

std::vector<long long> fibonacci_values(int k, FibConvention convention) {
    if (k < 1) throw std::invalid_argument("fibonacci index must be >= 1");
    std::vector<long long> f(static_cast<size_t>(k) + 1);
    f[1] = 1;
    if (k >= 2) f[2] = convention == FibConvention::paper ? 2 : 1;
    for (int i = 3; i <= k; ++i) f[i] = f[i - 1] + f[i - 2];
    return f;
}

DegreeSequence fibonacci_degrees(int n, FibConvention convention) {
    if (n < 4) throw std::invalid_argument("fibonacci degree sequence needs n >= 4");
    auto f = fibonacci_values(n, convention);
    std::vector<int> vals;
    for (int i = 3; i <= n; ++i) {
        if (f[i] > std::numeric_limits<int>::max())
            throw std::invalid_argument("fibonacci degree overflows int");
        vals.push_back(static_cast<int>(f[i]));
    }
    return DegreeSequence(std::move(vals));
}

}  // namespace treeirr
