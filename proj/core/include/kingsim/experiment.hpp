#pragma once

#include <cstdint>
#include <iosfwd>
#include <optional>
#include <string>
#include <vector>

#include "kingsim/rational.hpp"
#include "kingsim/strategy.hpp"
#include "kingsim/tournament.hpp"

namespace kingsim {

enum class OracleKind { Fixed, GreedyAdversary };

/// One sweep/run configuration: the cross product of `ns` and the inclusive
/// tournament-seed range [seed_lo, seed_hi].
///
/// Derived seeds (stable splitmix64 chain, documented in numeric.hpp):
///   template seed  = derive_seed(strategy_seed, n, 0)   -- shared per n
///   strategy rng   = derive_seed(strategy_seed, n, tournament_seed + 1)
struct ExperimentConfig {
    std::vector<int> ns;
    Rational kappa{1, 2};
    Rational delta{2, 17};
    TournamentKind tournament = TournamentKind::UniformRandom;
    std::uint64_t seed_lo = 0;
    std::uint64_t seed_hi = 0;
    std::uint64_t strategy_seed = 0;
    OracleKind oracle = OracleKind::Fixed;
    bool verify = false;
    bool strict_template = false;
    std::size_t audit_trials = 64;
    std::size_t ultra_search_budget = 400;
    std::size_t good_submatrix_trials = 64;
    int workers = 1;

    void validate() const;  // all n >= 8, nonempty seed range
};

/// One row of a run: the strategy outcome plus harness-level fields.
struct OutcomeRecord {
    int n = 0;
    std::uint64_t tournament_seed = 0;
    std::uint64_t template_seed = 0;
    StrategyOutcome outcome;
    std::optional<double> ground_truth_control;  // fixed oracle + verify only
    std::vector<std::string> flags;              // harness-level (template audit)
    std::string error;                           // nonempty on per-run failure
};

/// Executes run_seeker over the configured cross product. Runs execute on a
/// bounded worker pool; results are merged in (n, seed) order so parallelism
/// changes nothing observable. Per-run failures land in OutcomeRecord::error
/// and never abort the batch. With strict_template set, a failed template
/// audit aborts with InternalContradictionError instead.
std::vector<OutcomeRecord> run_experiment(const ExperimentConfig& config);

/// JSON Lines, one object per record (schema documented in the README).
void write_jsonl(const std::vector<OutcomeRecord>& records, const ExperimentConfig& config,
                 std::ostream& out);

/// Data rows plus one aggregate row per n (mean/max queries per n^{4/3},
/// mean control fraction).
std::string sweep_csv(const std::vector<OutcomeRecord>& records,
                      const ExperimentConfig& config);

/// Full-reveal baseline: queries every pair, returns the maximum out-degree
/// vertex. CSV rows with queries = n(n-1)/2 and control fraction 1.
std::string baseline_csv(const ExperimentConfig& config);

}  // namespace kingsim
