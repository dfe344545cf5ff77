#pragma once

#include <compare>
#include <cstdint>
#include <vector>

#include "treeirr/degseq.hpp"
#include "treeirr/graph.hpp"

namespace treeirr {

/// Exact multiple of 1/2, for the index that carries a 1/2 factor.
struct HalfInt {
    long long twice = 0;  // the value times 2

    bool is_integer() const { return twice % 2 == 0; }
    long long numerator() const { return is_integer() ? twice / 2 : twice; }
    long long denominator() const { return is_integer() ? 1 : 2; }
    double to_double() const { return 0.5 * static_cast<double>(twice); }

    friend auto operator<=>(const HalfInt&, const HalfInt&) = default;
};

/// Every index value for one graph, from one pass over edges and vertices.
struct IndexBundle {
    int n = 0;
    int m = 0;
    int max_degree = 0;
    int min_degree = 0;
    long long irr = 0;        // sum over edges of |d_u - d_v|
    long long sigma = 0;      // sum over edges of (d_u - d_v)^2
    long long irr_t = 0;      // sum over unordered vertex pairs of |d_u - d_v|
    HalfInt sigma_t;          // half the ordered-pair sum of (d_u - d_v)^2
    long long m1 = 0;         // sum of d_v^2
    long long m2 = 0;         // sum over edges of d_u * d_v
    long long forgotten = 0;  // sum of d_v^3
};

long long albertson(const Graph& g);
long long sigma(const Graph& g);

/// p-norm of the edge imbalances, (sum |d_u - d_v|^p)^(1/p). Requires p > 0.
double general_albertson(const Graph& g, double p);

long long total_albertson(const Graph& g);

/// 2(n+1)m - 2*sum(i*d_i) over the non-increasing order, 1-based positions.
/// Throws on an odd degree total.
long long total_albertson_sorted_formula(const DegreeSequence& ds);

HalfInt sigma_t(const Graph& g);

long long zagreb_m1(const Graph& g);
long long zagreb_m2(const Graph& g);
long long forgotten(const Graph& g);

/// Sum of |d(u_i) - d(u_{i+1})| along a path given as a vertex list; throws
/// if consecutive vertices are not adjacent.
long long imbalance_along_path(const Graph& g, const std::vector<int>& path);

/// (d_k-1)^2 + (d_1-1)^2 + sum_{i=2..k-1}(d_i-1)(d_i-2) + sum|d_i - d_{i+1}|
/// over a spine-degree list d_1..d_k, evaluated as printed. Requires k >= 2.
long long caterpillar_irr_formula(const std::vector<int>& spine_degrees);

/// d_1^2 + d_n^2 + sum_{i=2..n-1} d_i^2 + sum_{i=2..n-1} d_i + d_n - d_1
/// - 2n - 2 over the increasing order d_1 <= ... <= d_n, evaluated as
/// printed. Requires length >= 2.
long long mainalb2_formula(const DegreeSequence& ds);

IndexBundle compute_bundle(const Graph& g);

}  // namespace treeirr
