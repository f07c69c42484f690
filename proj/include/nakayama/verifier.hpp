#pragma once

#include <cstdint>
#include <functional>
#include <string>
#include <vector>

#include "nakayama/algebra.hpp"
#include "nakayama/module.hpp"

namespace nakayama {

struct EnumerationBudget {
    int min_vertices = 2;
    int max_vertices = 4;
    int max_length = 9;  ///< cap on Kupisch entries; 2*max_vertices+1 keeps the extremal family in range
    bool cyclic = true;
    bool linear = false;
    bool dedup = true;  ///< one representative per rotation class

    static EnumerationBudget with_defaults(int max_vertices);
};

/// Throws std::invalid_argument for an empty or malformed budget.
void check_budget(const EnumerationBudget& budget);

/// Every valid series within the budget: cyclic before linear, then by vertex count,
/// then lexicographically.
std::vector<Algebra> enumerate(const EnumerationBudget& budget);

void for_each_algebra(const EnumerationBudget& budget, const std::function<void(const Algebra&)>& visit);

/// phi of the direct sum of all non-terminal indecomposables, computed from ranks of
/// integer matrices L^t over the free group on those modules. Independent of the
/// set-based engine in invariants.hpp.
int phi_by_matrix_rank(const Algebra& algebra, Direction dir);

/// One entry per theorem, T1..T18.
struct TheoremCheck {
    std::string id;
    std::string anchor;     ///< the result being checked
    std::string statement;  ///< hypothesis => conclusion, as encoded
};

const std::vector<TheoremCheck>& theorem_catalogue();

enum class Verdict { pass, vacuous, violation };

struct CheckResult {
    Verdict verdict = Verdict::vacuous;
    std::string detail;  ///< set for violations
};

/// A boundary case outside some theorem's hypothesis, recorded but never asserted.
struct Observation {
    std::string key;
    bool holds = false;
};

struct CheckOutcome {
    std::vector<CheckResult> results;  ///< aligned with theorem_catalogue()
    std::vector<Observation> observations;
};

CheckOutcome run_checks(const Algebra& algebra);

struct OracleMismatch {
    std::string oracle;
    std::string witness;
};

/// Binds each fast or native path to an independent route; empty means all agree.
std::vector<OracleMismatch> cross_validate(const Algebra& algebra);

struct VerifyOptions {
    std::vector<std::string> theorems;  ///< empty selects all
    int jobs = 1;
    int spot_checks = 0;
    std::uint64_t seed = 20190415;
    bool timing = false;
};

struct TheoremTally {
    std::string id;
    long checked = 0;
    long vacuous = 0;
    std::vector<std::pair<Algebra, std::string>> violations;
};

struct ObservationTally {
    std::string key;
    long holds = 0;
    long fails = 0;
};

struct VerificationReport {
    EnumerationBudget budget;
    VerifyOptions options;
    long enumerated = 0;
    std::vector<TheoremTally> theorems;
    std::vector<std::pair<Algebra, OracleMismatch>> mismatches;
    std::vector<ObservationTally> observations;
    long spot_count = 0;
    std::vector<std::pair<Algebra, std::string>> spot_failures;
    long long elapsed_ms = 0;

    bool clean() const;
};

VerificationReport verify(const EnumerationBudget& budget, const VerifyOptions& options);

/// Random valid cyclic series with N in [2, max_vertices] and entries <= max_length.
std::vector<Algebra> random_algebras(int count, int max_vertices, int max_length, std::uint64_t seed);

}  // namespace nakayama
