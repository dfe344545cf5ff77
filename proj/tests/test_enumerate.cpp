#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <set>

#include "treeirr/canonical.hpp"
#include "treeirr/construct.hpp"
#include "treeirr/enumerate.hpp"

using namespace treeirr;

TEST_CASE("free tree counts match the labeled Prüfer oracle, n = 2..9") {
    const long long expected[] = {0, 1, 1, 1, 2, 3, 6, 11, 23, 47};
    for (int n = 2; n <= 9; ++n) {
        auto trees = free_trees({.n = n});
        CHECK(static_cast<long long>(trees.size()) == expected[n]);
        LabeledOracleResult oracle = labeled_trees_oracle(n);
        CHECK(static_cast<long long>(oracle.representatives.size()) == expected[n]);
        long long pow = 1;
        for (int k = 0; k < n - 2; ++k) pow *= n;
        CHECK(oracle.labeled_count == pow);
        // same classes, not just the same count
        std::set<std::string> a, b;
        for (const auto& t : trees) a.insert(canonical_code(t));
        for (const auto& t : oracle.representatives) b.insert(canonical_code(t));
        CHECK(a == b);
    }
}

TEST_CASE("free tree counts for larger orders") {
    CHECK(free_trees({.n = 10}).size() == 106);
    CHECK(free_trees({.n = 11}).size() == 235);
    CHECK(free_trees({.n = 12}).size() == 551);
    CHECK(free_trees({.n = 1}).size() == 1);
}

TEST_CASE("no duplicate isomorphism classes in the stream (property, n <= 10)") {
    for (int n = 2; n <= 10; ++n) {
        std::set<std::string> codes;
        for (const Tree& t : free_trees({.n = n})) CHECK(codes.insert(canonical_code(t)).second);
    }
}

TEST_CASE("degree filters") {
    CHECK(free_trees({.n = 7, .max_degree = 2}).size() == 1);  // only the path
    auto trees = free_trees({.n = 8, .max_degree = 3});
    for (const auto& t : trees) CHECK(t.max_degree() <= 3);
    CHECK(trees.size() > 0);
    CHECK(free_trees({.n = 8}).size() > trees.size());
}

TEST_CASE("labeled oracle bounds") {
    CHECK_THROWS_AS(labeled_trees_oracle(1), std::invalid_argument);
    CHECK_THROWS_AS(labeled_trees_oracle(10), std::invalid_argument);
    CHECK(labeled_trees_oracle(4).representatives.size() == 2);
    CHECK(labeled_trees_oracle(5).representatives.size() == 3);
    CHECK(labeled_trees_oracle(8).representatives.size() == 23);
}

TEST_CASE("extremal exhaustive results at n = 6") {
    ExtremalResult max_irr = extremal({.n = 6}, IndexName::irr, Objective::maximize);
    CHECK(max_irr.value == 20);
    CHECK(max_irr.exhaustive);
    CHECK(canonical_code(max_irr.witness) == canonical_code(star(6)));

    ExtremalResult min_irr = extremal({.n = 6}, IndexName::irr, Objective::minimize);
    CHECK(min_irr.value == 2);
    CHECK(canonical_code(min_irr.witness) == canonical_code(path(6)));

    ExtremalResult max_sigma = extremal({.n = 6}, IndexName::sigma, Objective::maximize);
    CHECK(max_sigma.value == 80);
    CHECK(canonical_code(max_sigma.witness) == canonical_code(star(6)));
}

TEST_CASE("star maximizes irr uniquely for 3 <= n <= 10") {
    for (int n = 3; n <= 10; ++n) {
        long long best = -1, optima = 0;
        std::string best_code;
        for (const Tree& t : free_trees({.n = n})) {
            long long v = albertson(t);
            if (v > best) {
                best = v;
                optima = 1;
                best_code = canonical_code(t);
            } else if (v == best) {
                ++optima;
            }
        }
        CHECK(best == static_cast<long long>(n - 1) * (n - 2));
        CHECK(optima == 1);
        CHECK(best_code == canonical_code(star(n)));
    }
}

TEST_CASE("hill climb is never better than the exhaustive optimum at n = 12") {
    ExtremalOptions stochastic;
    stochastic.exhaustive_limit = 0;  // force the hill climb
    stochastic.seed = 1;
    for (IndexName idx : {IndexName::irr, IndexName::sigma}) {
        ExtremalResult exact = extremal({.n = 12}, idx, Objective::maximize);
        ExtremalResult hc = extremal({.n = 12}, idx, Objective::maximize, stochastic);
        CHECK_FALSE(hc.exhaustive);
        CHECK(hc.value <= exact.value);
        CHECK(hc.witness.n() == 12);

        ExtremalResult exact_min = extremal({.n = 12}, idx, Objective::minimize);
        ExtremalResult hc_min = extremal({.n = 12}, idx, Objective::minimize, stochastic);
        CHECK(hc_min.value >= exact_min.value);
    }
}

TEST_CASE("hill climb honors the degree cap") {
    ExtremalOptions stochastic;
    stochastic.exhaustive_limit = 0;
    stochastic.seed = 3;
    stochastic.restarts = 4;
    ExtremalResult r =
        extremal({.n = 10, .max_degree = 3}, IndexName::irr, Objective::maximize, stochastic);
    CHECK(r.witness.max_degree() <= 3);
}

TEST_CASE("infeasible filters are rejected") {
    CHECK_THROWS_AS(extremal({.n = 5, .max_degree = 1}, IndexName::irr, Objective::maximize),
                    std::invalid_argument);
    CHECK_THROWS_AS(free_trees({.n = 5, .max_degree = 9}), std::invalid_argument);
}

TEST_CASE("deterministic stream order") {
    auto a = free_trees({.n = 9});
    auto b = free_trees({.n = 9});
    REQUIRE(a.size() == b.size());
    for (size_t i = 0; i < a.size(); ++i) CHECK(a[i].edges() == b[i].edges());
}
