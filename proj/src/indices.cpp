#include "treeirr/indices.hpp"

#include <cmath>
#include <cstdlib>
#include <stdexcept>

namespace treeirr {

long long albertson(const Graph& g) {
    long long total = 0;
    for (auto [u, v] : g.edges()) total += std::abs(g.degree(u) - g.degree(v));
    return total;
}

long long sigma(const Graph& g) {
    long long total = 0;
    for (auto [u, v] : g.edges()) {
        long long d = g.degree(u) - g.degree(v);
        total += d * d;
    }
    return total;
}

double general_albertson(const Graph& g, double p) {
    if (!(p > 0)) throw std::invalid_argument("general Albertson index needs p > 0");
    double total = 0;
    for (auto [u, v] : g.edges()) {
        int d = std::abs(g.degree(u) - g.degree(v));
        if (d > 0) total += std::pow(static_cast<double>(d), p);
    }
    return std::pow(total, 1.0 / p);
}

long long total_albertson(const Graph& g) {
    // O(n log n) over the sorted degree multiset: in non-increasing order,
    // sum_{i<j} (d_i - d_j) = sum_i d_i * ((n-1-i) - i).
    DegreeSequence ds = degree_sequence(g);
    int n = ds.size();
    long long total = 0;
    for (int i = 0; i < n; ++i)
        total += static_cast<long long>(ds[i]) * (n - 1 - 2LL * i);
    return total;
}

long long total_albertson_sorted_formula(const DegreeSequence& ds) {
    if (ds.sum() % 2 != 0)
        throw std::invalid_argument("degree total must be even");
    long long n = ds.size();
    long long m = ds.sum() / 2;
    long long weighted = 0;
    for (int i = 0; i < ds.size(); ++i) weighted += (i + 1LL) * ds[i];
    return 2 * (n + 1) * m - 2 * weighted;
}

HalfInt sigma_t(const Graph& g) {
    // ordered pairs (u,v), u != v; the 1/2 factor is kept exact
    long long ordered = 0;
    for (int u = 0; u < g.n(); ++u)
        for (int v = 0; v < g.n(); ++v) {
            if (u == v) continue;
            long long d = g.degree(u) - g.degree(v);
            ordered += d * d;
        }
    return HalfInt{ordered};
}

long long zagreb_m1(const Graph& g) {
    long long total = 0;
    for (int d : g.degrees()) total += static_cast<long long>(d) * d;
    return total;
}

long long zagreb_m2(const Graph& g) {
    long long total = 0;
    for (auto [u, v] : g.edges())
        total += static_cast<long long>(g.degree(u)) * g.degree(v);
    return total;
}

long long forgotten(const Graph& g) {
    long long total = 0;
    for (int d : g.degrees()) total += static_cast<long long>(d) * d * d;
    return total;
}

long long imbalance_along_path(const Graph& g, const std::vector<int>& path) {
    for (int v : path)
        if (v < 0 || v >= g.n()) throw std::invalid_argument("path vertex out of range");
    long long total = 0;
    for (size_t i = 0; i + 1 < path.size(); ++i) {
        if (!g.has_edge(path[i], path[i + 1]))
            throw std::invalid_argument("path vertices " + std::to_string(path[i]) + " and " +
                                        std::to_string(path[i + 1]) + " are not adjacent");
        total += std::abs(g.degree(path[i]) - g.degree(path[i + 1]));
    }
    return total;
}

long long caterpillar_irr_formula(const std::vector<int>& spine_degrees) {
    int k = static_cast<int>(spine_degrees.size());
    if (k < 2) throw std::invalid_argument("caterpillar formula needs spine length >= 2");
    const auto& d = spine_degrees;
    long long first = d.front() - 1, last = d.back() - 1;
    long long total = last * last + first * first;
    for (int i = 1; i + 1 < k; ++i)
        total += static_cast<long long>(d[i] - 1) * (d[i] - 2);
    for (int i = 0; i + 1 < k; ++i) total += std::abs(d[i] - d[i + 1]);
    return total;
}

long long mainalb2_formula(const DegreeSequence& ds) {
    int n = ds.size();
    if (n < 2) throw std::invalid_argument("formula needs at least two degrees");
    // the source orders d_n >= ... >= d_1, so d_1 is the smallest entry
    long long d1 = ds[n - 1], dn = ds[0];
    long long total = d1 * d1 + dn * dn;
    for (int i = 1; i + 1 < n; ++i) {
        long long di = ds[i];  // middle entries, order-independent sums
        total += di * di + di;
    }
    total += dn - d1 - 2LL * n - 2;
    return total;
}

IndexBundle compute_bundle(const Graph& g) {
    IndexBundle b;
    b.n = g.n();
    b.m = g.m();
    b.max_degree = g.max_degree();
    b.min_degree = g.min_degree();
    for (auto [u, v] : g.edges()) {
        long long du = g.degree(u), dv = g.degree(v);
        long long diff = du > dv ? du - dv : dv - du;
        b.irr += diff;
        b.sigma += diff * diff;
        b.m2 += du * dv;
    }
    for (int d : g.degrees()) {
        b.m1 += static_cast<long long>(d) * d;
        b.forgotten += static_cast<long long>(d) * d * d;
    }
    b.irr_t = total_albertson(g);
    b.sigma_t = sigma_t(g);
    return b;
}

}  // namespace treeirr
