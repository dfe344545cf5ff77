#pragma once

#include <string>
#include <vector>

#include "treeirr/graph.hpp"

namespace treeirr {

/// Non-increasing sequence of nonnegative integers with prefix-sum support.
class DegreeSequence {
public:
    DegreeSequence() = default;
    /// Accepts values in any order; stores them sorted non-increasing.
    explicit DegreeSequence(std::vector<int> values);

    /// Parses comma-separated integers, e.g. "3,2,1,1,1" (order-insensitive).
    static DegreeSequence from_csv(const std::string& text);

    int size() const { return static_cast<int>(values_.size()); }
    long long sum() const;
    long long prefix_sum(int k) const;  // sum of the first k values
    int operator[](int i) const { return values_[i]; }
    const std::vector<int>& values() const { return values_; }
    std::string to_csv() const;

    bool operator==(const DegreeSequence&) const = default;

private:
    std::vector<int> values_;
};

DegreeSequence degree_sequence(const Graph& g);

/// True iff some simple graph realizes ds. Repeatedly removes the largest
/// entry d, decrements the next d entries and re-sorts, until the sequence is
/// all-zero (graphical) or an entry goes negative (not graphical).
bool is_graphical(const DegreeSequence& ds);

/// Builds a simple graph whose degree sequence equals ds. Throws on
/// non-graphical input.
Graph realize_graph(const DegreeSequence& ds);

/// True iff ds is the degree sequence of some tree: n >= 2 with all values
/// >= 1 and a degree total of 2(n-1); for n = 1 exactly (0).
bool is_tree_realizable(const DegreeSequence& ds);

/// Greedy caterpillar realization: values >= 2 form the spine in the stored
/// order, leaves fill the residual degrees. Throws on non-realizable input.
Tree realize_tree(const DegreeSequence& ds);

/// Appends degree-1 entries until the total reaches 2(n-1), turning the given
/// values into the internal degrees of a tree sequence. Throws when no number
/// of leaves can balance the total.
DegreeSequence pad_with_leaves(const DegreeSequence& ds);

/// True iff b is majorized by a (b ⪯ a): every prefix sum of b is at most the
/// corresponding prefix sum of a and the totals are equal. Throws on length
/// mismatch; unequal totals return false.
bool majorizes(const DegreeSequence& a, const DegreeSequence& b);

/// Fibonacci indexing conventions. `paper` starts F_1=1, F_2=2;
/// `standard` starts F_1=F_2=1.
enum class FibConvention { paper, standard };

FibConvention fib_convention_from_string(const std::string& s);
const char* to_string(FibConvention c);

/// F_1..F_k under the chosen convention.
std::vector<long long> fibonacci_values(int k, FibConvention convention);

/// The sequence (F_3,...,F_n), sorted non-increasing. Requires n >= 4.
DegreeSequence fibonacci_degrees(int n, FibConvention convention);

}  // namespace treeirr
