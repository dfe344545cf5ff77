#pragma once

#include <cstdint>
#include <functional>
#include <optional>
#include <string>
#include <vector>

#include "treeirr/graph.hpp"
#include "treeirr/indices.hpp"

namespace treeirr {

/// Class of trees selected by order and optional degree bounds.
struct TreeClassFilter {
    int n = 1;
    std::optional<int> max_degree;
    std::optional<int> min_degree_ge;

    bool matches(const Graph& g) const;
};

enum class IndexName { irr, sigma, irr_t, sigma_t };
enum class Objective { minimize, maximize };

IndexName index_name_from_string(const std::string& s);
const char* to_string(IndexName name);
const char* to_string(Objective obj);

/// The selected index as an exact integer (sigma_t is always integral).
long long index_value(const Graph& g, IndexName name);

/// Isomorph-free generation of free trees of order n in deterministic
/// order (level-sequence successor enumeration over center-rooted canonical
/// sequences; one representative per isomorphism class, no dedupe set).
class FreeTreeGenerator {
public:
    explicit FreeTreeGenerator(TreeClassFilter filter);

    /// Next tree in the stream, or nullopt when exhausted.
    std::optional<Tree> next();

private:
    std::optional<std::vector<int>> advance_raw();

    TreeClassFilter filter_;
    std::vector<int> levels_;
    bool emitted_single_ = false;
    bool done_ = false;
    bool fresh_ = true;
};

std::vector<Tree> free_trees(const TreeClassFilter& filter);

/// Calls fn for each generated tree; stops early if fn returns false.
void for_each_free_tree(const TreeClassFilter& filter,
                        const std::function<bool(const Tree&)>& fn);

struct LabeledOracleResult {
    long long labeled_count = 0;          // n^(n-2) strings decoded
    std::vector<Tree> representatives;    // one per isomorphism class
};

/// Brute-force oracle: decodes every Prüfer string of length n-2 and dedupes
/// by canonical code. Supported for 2 <= n <= 9.
LabeledOracleResult labeled_trees_oracle(int n);

struct ExtremalOptions {
    int exhaustive_limit = 14;   // full enumeration up to this order
    int restarts = 32;           // hill-climb restarts above the limit
    long long moves_per_restart = 0;  // 0 means 10*n^2
    std::uint64_t seed = 0;
};

struct ExtremalResult {
    Tree witness;
    long long value = 0;
    Objective objective = Objective::minimize;
    IndexName index_name = IndexName::irr;
    bool exhaustive = false;
};

/// Optimum of an index over the tree class. Exact (exhaustive) up to
/// options.exhaustive_limit; stochastic leaf-relocation hill climb above it.
ExtremalResult extremal(const TreeClassFilter& filter, IndexName index, Objective objective,
                        const ExtremalOptions& options = {});

}  // namespace treeirr
