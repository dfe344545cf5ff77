#include "treeirr/enumerate.hpp"

#include <algorithm>
#include <random>
#include <stdexcept>
#include <unordered_set>

#include "treeirr/canonical.hpp"
#include "treeirr/construct.hpp"

namespace treeirr {

bool TreeClassFilter::matches(const Graph& g) const {
    if (g.n() != n) return false;
    if (max_degree && g.max_degree() > *max_degree) return false;
    if (min_degree_ge && g.min_degree() < *min_degree_ge) return false;
    return true;
}

IndexName index_name_from_string(const std::string& s) {
    if (s == "irr") return IndexName::irr;
    if (s == "sigma") return IndexName::sigma;
    if (s == "irr_t") return IndexName::irr_t;
    if (s == "sigma_t") return IndexName::sigma_t;
    throw std::invalid_argument("unknown index name: '" + s + "'");
}

const char* to_string(IndexName name) {
    switch (name) {
        case IndexName::irr: return "irr";
        case IndexName::sigma: return "sigma";
        case IndexName::irr_t: return "irr_t";
        case IndexName::sigma_t: return "sigma_t";
    }
    return "?";
}

const char* to_string(Objective obj) {
    return obj == Objective::minimize ? "min" : "max";
}

long long index_value(const Graph& g, IndexName name) {
    switch (name) {
        case IndexName::irr: return albertson(g);
        case IndexName::sigma: return sigma(g);
        case IndexName::irr_t: return total_albertson(g);
        case IndexName::sigma_t: return sigma_t(g).twice / 2;  // always integral
    }
    return 0;
}

namespace {

// Level-sequence machinery (0-based levels, root at level 0, preorder).
// The successor steps are the Beyer-Hedetniemi rooted-tree successor and the
// Wright-Richmond-Odlyzko-McKay jump that keeps only center-rooted canonical
// sequences, so each free tree shows up exactly once.

std::optional<std::vector<int>> next_rooted_tree(const std::vector<int>& seq, int p = -1) {
    if (p < 0) {
        p = static_cast<int>(seq.size()) - 1;
        while (seq[p] == 1) --p;
    }
    if (p == 0) return std::nullopt;
    int q = p - 1;
    while (seq[q] != seq[p] - 1) --q;
    std::vector<int> result(seq);
    for (int i = p; i < static_cast<int>(result.size()); ++i) result[i] = result[i - p + q];
    return result;
}

struct SplitTree {
    std::vector<int> left;  // first subtree of the root, re-rooted at level 0
    std::vector<int> rest;  // the tree with that subtree removed
};

SplitTree split_tree(const std::vector<int>& seq) {
    size_t m = seq.size();
    bool one_found = false;
    for (size_t i = 0; i < seq.size(); ++i) {
        if (seq[i] == 1) {
            if (one_found) {
                m = i;
                break;
            }
            one_found = true;
        }
    }
    SplitTree out;
    for (size_t i = 1; i < m; ++i) out.left.push_back(seq[i] - 1);
    out.rest.push_back(0);
    for (size_t i = m; i < seq.size(); ++i) out.rest.push_back(seq[i]);
    return out;
}

// Returns seq itself when it is a valid free-tree representation, otherwise
// the next valid sequence after it (or nullopt when the enumeration ends).
std::optional<std::vector<int>> next_free_tree(const std::vector<int>& seq) {
    SplitTree parts = split_tree(seq);
    int left_height = *std::max_element(parts.left.begin(), parts.left.end());
    int rest_height = *std::max_element(parts.rest.begin(), parts.rest.end());
    bool valid = rest_height >= left_height;
    if (valid && rest_height == left_height) {
        if (parts.left.size() > parts.rest.size())
            valid = false;
        else if (parts.left.size() == parts.rest.size() && parts.left > parts.rest)
            valid = false;
    }
    if (valid) return seq;
    int p = static_cast<int>(parts.left.size());
    auto next = next_rooted_tree(seq, p);
    if (!next) return std::nullopt;
    if (seq[p] > 2) {
        SplitTree new_parts = split_tree(*next);
        int h = *std::max_element(new_parts.left.begin(), new_parts.left.end());
        int suffix_len = h + 1;
        int start = static_cast<int>(next->size()) - suffix_len;
        for (int i = 0; i < suffix_len; ++i) (*next)[start + i] = i + 1;
    }
    return next;
}

Tree levels_to_tree(const std::vector<int>& levels) {
    int n = static_cast<int>(levels.size());
    std::vector<Edge> edges;
    edges.reserve(n - 1);
    std::vector<int> last_at_level(n, -1);
    last_at_level[0] = 0;
    for (int i = 1; i < n; ++i) {
        edges.emplace_back(last_at_level[levels[i] - 1], i);
        last_at_level[levels[i]] = i;
    }
    return Tree(n, std::move(edges));
}

}  // namespace

FreeTreeGenerator::FreeTreeGenerator(TreeClassFilter filter) : filter_(std::move(filter)) {
    if (filter_.n < 1) throw std::invalid_argument("tree order must be >= 1");
    if (filter_.max_degree && *filter_.max_degree > filter_.n - 1)
        throw std::invalid_argument("max_degree cannot exceed n - 1");
    if (filter_.n >= 2) {
        // path rooted at its center: the lexicographically largest valid sequence
        for (int i = 0; i <= filter_.n / 2; ++i) levels_.push_back(i);
        for (int i = 1; i < (filter_.n + 1) / 2; ++i) levels_.push_back(i);
    }
}

std::optional<std::vector<int>> FreeTreeGenerator::advance_raw() {
    if (done_) return std::nullopt;
    if (!fresh_) {
        auto succ = next_rooted_tree(levels_);
        if (!succ) {
            done_ = true;
            return std::nullopt;
        }
        levels_ = std::move(*succ);
    }
    fresh_ = false;
    auto valid = next_free_tree(levels_);
    if (!valid) {
        done_ = true;
        return std::nullopt;
    }
    levels_ = std::move(*valid);
    return levels_;
}

std::optional<Tree> FreeTreeGenerator::next() {
    if (filter_.n == 1) {
        if (emitted_single_) return std::nullopt;
        emitted_single_ = true;
        Tree single(1, {});
        if (!filter_.matches(single)) return std::nullopt;
        return single;
    }
    while (auto levels = advance_raw()) {
        Tree t = levels_to_tree(*levels);
        if (filter_.matches(t)) return t;
    }
    return std::nullopt;
}

std::vector<Tree> free_trees(const TreeClassFilter& filter) {
    std::vector<Tree> out;
    FreeTreeGenerator gen(filter);
    while (auto t = gen.next()) out.push_back(std::move(*t));
    return out;
}

void for_each_free_tree(const TreeClassFilter& filter,
                        const std::function<bool(const Tree&)>& fn) {
    FreeTreeGenerator gen(filter);
    while (auto t = gen.next())
        if (!fn(*t)) return;
}

LabeledOracleResult labeled_trees_oracle(int n) {
    if (n < 2 || n > 9)
        throw std::invalid_argument("labeled oracle supports 2 <= n <= 9");
    LabeledOracleResult result;
    std::unordered_set<std::string> seen;
    std::vector<int> prufer(n - 2, 0);
    while (true) {
        Tree t = prufer_decode(n, prufer);
        ++result.labeled_count;
        if (seen.insert(canonical_code(t)).second) result.representatives.push_back(t);
        // next string in base-n counting order
        int pos = n - 3;
        while (pos >= 0 && prufer[pos] == n - 1) prufer[pos--] = 0;
        if (pos < 0) break;
        ++prufer[pos];
    }
    return result;
}

namespace {

long long hill_climb_moves(const ExtremalOptions& options, int n) {
    return options.moves_per_restart > 0 ? options.moves_per_restart : 10LL * n * n;
}

bool better(long long candidate, long long incumbent, Objective obj) {
    return obj == Objective::maximize ? candidate > incumbent : candidate < incumbent;
}

// Mutable adjacency for leaf-relocation moves.
struct MutableTree {
    int n;
    std::vector<std::vector<int>> adj;

    explicit MutableTree(const Tree& t) : n(t.n()), adj(t.n()) {
        for (auto [u, v] : t.edges()) {
            adj[u].push_back(v);
            adj[v].push_back(u);
        }
    }

    int degree(int v) const { return static_cast<int>(adj[v].size()); }

    void detach(int leaf, int from) {
        auto& a = adj[from];
        a.erase(std::find(a.begin(), a.end(), leaf));
        adj[leaf].clear();
    }

    void attach(int leaf, int to) {
        adj[to].push_back(leaf);
        adj[leaf].push_back(to);
    }

    Tree to_tree() const {
        std::vector<Edge> edges;
        for (int v = 0; v < n; ++v)
            for (int w : adj[v])
                if (v < w) edges.emplace_back(v, w);
        return Tree(n, std::move(edges));
    }

    long long value(IndexName name) const { return index_value(to_tree(), name); }
};

Tree feasible_start(int n, std::optional<int> cap, std::mt19937_64& rng) {
    Tree t = random_tree(n, rng());
    if (!cap || t.max_degree() <= *cap) return t;
    // repair: move leaves away from over-degree vertices
    MutableTree mt(t);
    std::uniform_int_distribution<int> pick(0, n - 1);
    while (true) {
        int worst = -1;
        for (int v = 0; v < n; ++v)
            if (mt.degree(v) > *cap && (worst < 0 || mt.degree(v) > mt.degree(worst))) worst = v;
        if (worst < 0) break;
        int leaf = -1;
        for (int w : mt.adj[worst])
            if (mt.degree(w) == 1) {
                leaf = w;
                break;
            }
        if (leaf < 0) leaf = mt.adj[worst].front();  // should not happen in a tree
        int target;
        do {
            target = pick(rng);
        } while (target == leaf || target == worst || mt.degree(target) >= *cap ||
                 mt.degree(target) == 0);
        mt.detach(leaf, worst);
        mt.attach(leaf, target);
    }
    return mt.to_tree();
}

ExtremalResult hill_climb(const TreeClassFilter& filter, IndexName index, Objective objective,
                          const ExtremalOptions& options) {
    int n = filter.n;
    std::mt19937_64 rng(options.seed);
    std::uniform_int_distribution<int> pick(0, n - 1);
    std::optional<Tree> best;
    long long best_value = 0;
    for (int r = 0; r < options.restarts; ++r) {
        MutableTree mt(feasible_start(n, filter.max_degree, rng));
        long long current = mt.value(index);
        long long moves = hill_climb_moves(options, n);
        for (long long step = 0; step < moves; ++step) {
            int leaf = pick(rng);
            if (mt.degree(leaf) != 1) continue;
            int from = mt.adj[leaf].front();
            int to = pick(rng);
            if (to == leaf || to == from) continue;
            if (filter.max_degree && mt.degree(to) + 1 > *filter.max_degree) continue;
            mt.detach(leaf, from);
            mt.attach(leaf, to);
            long long candidate = mt.value(index);
            if (better(candidate, current, objective)) {
                current = candidate;
            } else {
                mt.detach(leaf, to);
                mt.attach(leaf, from);
            }
        }
        if (!best || better(current, best_value, objective)) {
            best = mt.to_tree();
            best_value = current;
        }
    }
    return ExtremalResult{std::move(*best), best_value, objective, index, false};
}

}  // namespace

ExtremalResult extremal(const TreeClassFilter& filter, IndexName index, Objective objective,
                        const ExtremalOptions& options) {
    if (filter.n < 1) throw std::invalid_argument("tree order must be >= 1");
    if (filter.max_degree && filter.n >= 3 && *filter.max_degree < 2)
        throw std::invalid_argument("no tree of order >= 3 has max degree < 2");
    if (filter.max_degree && filter.n == 2 && *filter.max_degree < 1)
        throw std::invalid_argument("no tree of order 2 has max degree < 1");
    if (filter.n <= options.exhaustive_limit) {
        std::optional<Tree> best;
        long long best_value = 0;
        for_each_free_tree(filter, [&](const Tree& t) {
            long long v = index_value(t, index);
            if (!best || better(v, best_value, objective)) {
                best = t;
                best_value = v;
            }
            return true;
        });
        if (!best) throw std::invalid_argument("empty tree class");
        return ExtremalResult{std::move(*best), best_value, objective, index, true};
    }
    return hill_climb(filter, index, objective, options);
}

}  // namespace treeirr
