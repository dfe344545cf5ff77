#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <set>

#include "treeirr/claims.hpp"

using namespace treeirr;

namespace {
const ClaimVerdict& find_verdict(const EvaluationReport& r, const std::string& id) {
    for (const auto& v : r.verdicts)
        if (v.id == id) return v;
    REQUIRE(false);
    static ClaimVerdict dummy;
    return dummy;
}
}  // namespace

TEST_CASE("registry integrity") {
    const auto& reg = claim_registry();
    CHECK(reg.size() == 31);
    std::set<std::string> ids;
    for (const auto& c : reg) {
        CHECK(ids.insert(c.id).second);
        CHECK_FALSE(c.quote.empty());
        CHECK_FALSE(c.statement.empty());
        CHECK_FALSE(c.paper_ref.empty());
    }
    CHECK(claim_by_id("C9").quote == "in trees with n vertices by");
    CHECK_THROWS_AS(claim_by_id("C99"), std::invalid_argument);
}

TEST_CASE("verdict counts always partition the domain") {
    EvalConfig cfg{4, 7, 0, 1};
    for (const auto& claim : claim_registry()) {
        ClaimVerdict v = evaluate_claim(claim, cfg);
        CHECK(v.holds + v.fails + v.vacuous == v.domain_size);
        if (v.fails > 0) CHECK(v.first_counterexample.has_value());
    }
}

TEST_CASE("C31 and the exact-identity claims never fail") {
    EvalConfig cfg{4, 9, 0, 1};
    for (const char* id : {"C31", "C30", "C7", "C5", "C8", "C2", "C1", "C3", "C4"}) {
        ClaimVerdict v = evaluate_claim(claim_by_id(id), cfg);
        CAPTURE(id);
        CHECK(v.fails == 0);
        CHECK(v.domain_size > 0);
    }
}

TEST_CASE("C9 fails with the star witness at n = 6") {
    ClaimVerdict v = evaluate_claim(claim_by_id("C9"), EvalConfig{6, 6, 0, 1});
    CHECK(v.fails == 1);
    REQUIRE(v.first_counterexample.has_value());
    CHECK(v.first_counterexample->values["left"] == 80);   // actual sigma max (the star)
    CHECK(v.first_counterexample->values["right"] == 20);  // claimed (n-1)(n-2)
    CHECK_FALSE(v.first_counterexample->witness_g6.empty());
}

TEST_CASE("C10 flags the worked discrepancy on P_4-like trees") {
    ClaimVerdict v = evaluate_claim(claim_by_id("C10"), EvalConfig{4, 4, 0, 1});
    CHECK(v.fails > 0);  // formula gives 4 on the path of order 4, direct irr is 2
}

TEST_CASE("C11 echoes the reported value and both conventions") {
    ClaimVerdict v = evaluate_claim(claim_by_id("C11"), EvalConfig{4, 9, 0, 1});
    CHECK(v.domain_size == 14);  // 2 conventions x n = 4..10
    CHECK(v.notes.find("12319") != std::string::npos);
    CHECK(v.notes.find("matches_reported") != std::string::npos);
}

TEST_CASE("C15 echoes the reported worked-pair values") {
    ClaimVerdict v = evaluate_claim(claim_by_id("C15"), EvalConfig{4, 6, 0, 1});
    CHECK(v.notes.find("562") != std::string::npos);
    CHECK(v.notes.find("612") != std::string::npos);
    CHECK(v.notes.find("571.314") != std::string::npos);  // the middle expression's value
}

TEST_CASE("C29 runs its fixed domain and reports product-majorization failures") {
    ClaimVerdict v = evaluate_claim(claim_by_id("C29"), EvalConfig{4, 4, 123, 1});
    CHECK(v.domain_size > 10000);  // exhaustive part plus the random pairs
    CHECK(v.holds > 0);
    if (v.fails > 0) {
        REQUIRE(v.first_counterexample.has_value());
        CHECK(recheck_counterexample("C29", *v.first_counterexample));
    }
}

TEST_CASE("every recorded counterexample re-verifies in isolation") {
    EvaluationReport report = evaluate_all(EvalConfig{4, 8, 0, 1});
    CHECK(report.verdicts.size() == 31);
    int rechecked = 0;
    for (const auto& v : report.verdicts) {
        if (!v.first_counterexample) continue;
        CAPTURE(v.id);
        CHECK(recheck_counterexample(v.id, *v.first_counterexample));
        ++rechecked;
    }
    CHECK(rechecked > 0);
}

TEST_CASE("sandwich claims record left, middle and right values") {
    EvaluationReport report = evaluate_all(EvalConfig{4, 8, 0, 1},
                                           {"C12", "C15", "C21", "C24"});
    for (const auto& v : report.verdicts) {
        if (!v.first_counterexample) continue;
        CAPTURE(v.id);
        CHECK(v.first_counterexample->values.contains("left"));
        CHECK(v.first_counterexample->values.contains("middle"));
        CHECK(v.first_counterexample->values.contains("right"));
    }
}

TEST_CASE("evaluation is deterministic, including under workers") {
    EvaluationReport a = evaluate_all(EvalConfig{4, 7, 0, 1});
    EvaluationReport b = evaluate_all(EvalConfig{4, 7, 0, 1});
    EvaluationReport c = evaluate_all(EvalConfig{4, 7, 0, 4});
    CHECK(verdicts_to_json(a) == verdicts_to_json(b));
    CHECK(verdicts_to_json(a) == verdicts_to_json(c));
    CHECK(verdicts_to_json(a).dump() == verdicts_to_json(b).dump());
}

TEST_CASE("claim filtering and report serialization") {
    EvaluationReport r = evaluate_all(EvalConfig{4, 6, 0, 1}, {"C31", "C9"});
    CHECK(r.verdicts.size() == 2);
    auto j = report_to_json(r);
    CHECK(j["version"] == kVersion);
    CHECK(j["n_min"] == 4);
    CHECK(j["claims"].size() == 2);
    CHECK(j.contains("wall_time_ms"));

    std::string csv = report_to_csv(r);
    CHECK(csv.find("id,domain_size,holds,fails,vacuous") == 0);
    CHECK(csv.find("C31,") != std::string::npos);

    const ClaimVerdict& c9 = find_verdict(r, "C9");
    CHECK(c9.fails > 0);
}

TEST_CASE("invalid ranges are rejected") {
    CHECK_THROWS_AS(evaluate_all(EvalConfig{0, 5, 0, 1}), std::invalid_argument);
    CHECK_THROWS_AS(evaluate_all(EvalConfig{5, 4, 0, 1}), std::invalid_argument);
    CHECK_THROWS_AS(evaluate_all(EvalConfig{4, 15, 0, 1}), std::invalid_argument);
}
