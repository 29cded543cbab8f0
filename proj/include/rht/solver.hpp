#pragma once

// Symmetry-seeded local search over (tau, k) pairs: each pair is seeded with
// the symmetric fractional strategy, rounded to the integer lattice, and
// refined by simulated annealing over group-size moves. Model 1 minimizes
// expected detection time under a workload cap; Model 2 minimizes workload
// under an infection-risk cap.

#include <cstdint>
#include <functional>
#include <optional>
#include <utility>
#include <vector>

#include "rht/core.hpp"
#include "rht/epidemics.hpp"

namespace rht {

struct SearchConfig {
    int restarts = 5;                 // independent annealing restarts per (tau, k) pair
    int max_iterations_override = 0;  // 0 = default k * tau * m iterations per anneal
    double cooling_rate = 0.9;        // geometric temperature decay per iteration
    std::uint64_t rng_seed = 0;       // base seed; all randomness derives from it
    bool prune = true;                // skip (tau, k) pairs whose fractional seed
                                      // already scores no better than the incumbent
    EvalOptions eval;                 // objective-evaluation convention
};

struct SolveReport {
    std::optional<TestingStrategy> strategy;  // empty when no feasible strategy exists
    double objective = 0.0;      // model 1: expected detection time; model 2: workload fraction
    bool feasible = false;
    long pairs_explored = 0;     // (tau, k) pairs considered, summed over restarts
    long pairs_pruned = 0;       // pairs skipped by the fractional-seed bound
    int restarts = 0;            // restarts actually run
    std::uint64_t seed = 0;      // rng_seed the search ran with
    double expected_detection_time = 0.0;  // diagnostic; equals objective for model 1
};

// Fractional symmetric seed: k equal groups of m/k residents, tested at equal
// spacing i*tau/k for i = 1..k.
RealStrategy symmetry_strategy(int k, int tau, int m);

// Integer day-sets derived from fractional days: every floor/ceil combination
// of d_1..d_{k-1} (d_k stays tau), filtered to strictly increasing schedules
// within [1, tau), deduplicated preserving first occurrence. Deterministic
// order (combination index counts up, least-significant position = first day).
std::vector<std::vector<int>> round_days(const RealStrategy& seed);

// Largest-remainder rounding of fractional group sizes to positive integers
// summing to m, each clipped to [1, max_group]. Remainder units go to the
// largest fractional parts (ties: lowest index); overflow beyond max_group is
// pushed onto the smallest eligible group (ties: lowest index). Throws when
// m > k * max_group.
std::vector<int> round_groups(const std::vector<double>& sizes, int m, int max_group);

// Simulated annealing over group sizes with the day-set held fixed: each
// iteration proposes moving one resident between two uniformly drawn groups
// (respecting sizes >= 1 and <= max_group), accepting improvements and
// plateau moves always and uphill moves with probability exp(-delta/T).
// T starts at the seed objective and decays by config.cooling_rate each
// iteration; iteration count is k*tau*m unless overridden. Returns the best
// strategy seen and its objective. k = 1 returns the seed unchanged.
std::pair<TestingStrategy, double> anneal_groups(
    const TestingStrategy& seed, int max_group,
    const std::function<double(const TestingStrategy&)>& objective, const SearchConfig& config,
    std::uint64_t rng_seed);

// The expected detection time is invariant under circular rotation of the
// schedule (the objective averages over arrival days), so equivalent optima
// form rotation classes. Canonical representative: the rotation with
// lexicographically smallest test days, then smallest group sizes.
TestingStrategy canonical_rotation(const TestingStrategy& strategy);

// Tie-break order for equally scored candidates: smaller objective, then
// smaller tau, then smaller k, then lexicographically smaller days, then
// sizes. Returns true when (objective_a, a) is strictly preferred.
bool strategy_preferred(double objective_a, const TestingStrategy& a, double objective_b,
                        const TestingStrategy& b);

// Model 1: minimize expected detection time subject to
// workload_fraction <= config.p_cap. Throws std::invalid_argument when the
// facility or epidemic parameters fail validation (m >= 2 required).
SolveReport solve_model1(const FacilityParams& facility, const EpidemicParams& epidemic,
                         const ModelOneConfig& model, const SearchConfig& search = {});

// Model 2: minimize workload_fraction subject to
// risk <= alpha * background_risk(weekly_incidence, tau). The reported
// strategy is the minimum-detection-time schedule of the cheapest feasible
// (tau, k) pair; expected_detection_time carries its E as a diagnostic.
SolveReport solve_model2(const FacilityParams& facility, const EpidemicParams& epidemic,
                         const ModelTwoConfig& model, const SearchConfig& search = {});

// One fresh solve per axis point (same seed each point). Points run
// from `from` to `to` inclusive in increments of `step` (> 0 required).
std::vector<std::pair<double, SolveReport>> sweep_p(const FacilityParams& facility,
                                                    const EpidemicParams& epidemic, double from,
                                                    double to, double step,
                                                    const SearchConfig& search = {});
std::vector<std::pair<double, SolveReport>> sweep_alpha(const FacilityParams& facility,
                                                        const EpidemicParams& epidemic,
                                                        double from, double to, double step,
                                                        const SearchConfig& search = {});

}  // namespace rht
