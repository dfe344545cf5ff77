#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include <json.hpp>

namespace treeirr {

inline constexpr const char* kVersion = "0.1.0";

enum class ClaimDomain { per_tree, per_class, per_pair, per_family, per_sequence };

const char* to_string(ClaimDomain d);

/// One bound or identity statement, registered as a checkable predicate.
struct Claim {
    std::string id;          // "C1".."C31", stable across versions
    std::string statement;   // what is being tested, in plain math
    std::string paper_ref;   // section/result anchor in the source text
    std::string quote;       // short verbatim anchor from the source
    ClaimDomain domain;
    std::string detail;      // domain specifics: family, free-variable policy, strictness
};

struct Counterexample {
    std::string witness_g6;                    // set for single-witness domains
    std::vector<std::string> witness_pair_g6;  // set (size 2) for pair domains
    nlohmann::ordered_json values;             // evaluated left / middle? / right
    nlohmann::ordered_json free_vars;          // resolved free variables "+" context keys
};

struct ClaimVerdict {
    std::string id;
    long long domain_size = 0;
    long long holds = 0;
    long long fails = 0;
    long long vacuous = 0;
    std::optional<Counterexample> first_counterexample;
    std::string notes;
};

struct EvalConfig {
    int n_min = 4;
    int n_max = 9;
    std::uint64_t seed = 0;
    int workers = 1;
};

struct EvaluationReport {
    std::string version = kVersion;
    int n_min = 4;
    int n_max = 9;
    std::uint64_t seed = 0;
    std::vector<ClaimVerdict> verdicts;  // selection order; registry order when unfiltered
    double wall_time_ms = 0;
};

/// All 31 registered claims, in id order.
const std::vector<Claim>& claim_registry();

/// Lookup by id; throws std::invalid_argument for unknown ids.
const Claim& claim_by_id(const std::string& id);

ClaimVerdict evaluate_claim(const Claim& claim, const EvalConfig& config);

/// Evaluates all claims (or the listed ids) over the configured range.
/// Deterministic for a fixed config; claims fan out over config.workers.
EvaluationReport evaluate_all(const EvalConfig& config,
                              const std::vector<std::string>& ids = {});

/// Re-runs one recorded counterexample in isolation; true iff it still fails.
bool recheck_counterexample(const std::string& claim_id, const Counterexample& ce);

nlohmann::ordered_json report_to_json(const EvaluationReport& report);

/// Just the verdict array (the report body minus timing), for determinism
/// comparisons.
nlohmann::ordered_json verdicts_to_json(const EvaluationReport& report);

std::string report_to_csv(const EvaluationReport& report);

}  // namespace treeirr
