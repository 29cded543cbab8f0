#pragma once

// Ground-truth references for the heuristic search: exhaustive enumeration on
// small instances, a lattice probe of the symmetry property, and a
// simulation-based check of the infection recursion.

#include <cstdint>
#include <optional>

#include "rht/core.hpp"
#include "rht/epidemics.hpp"

namespace rht {

struct OracleResult {
    std::optional<TestingStrategy> optimum;  // empty when nothing is feasible
    double objective = 0.0;  // model 1: expected detection time; model 2: workload fraction
    long strategies_enumerated = 0;
};

// Exhaustive search over every valid strategy (all (tau, k) pairs, all day
// sets ending at tau, all group compositions within [1, max_group]).
// Throws std::invalid_argument when the estimated enumeration exceeds 1e8
// strategies, or when parameters fail validation.
OracleResult brute_force_model1(const FacilityParams& facility, const EpidemicParams& epidemic,
                                const ModelOneConfig& model, const EvalOptions& options = {});
OracleResult brute_force_model2(const FacilityParams& facility, const EpidemicParams& epidemic,
                                const ModelTwoConfig& model, const EvalOptions& options = {});

struct GridCheckResult {
    bool symmetric_is_optimal = false;  // seed scores <= every probed point (1e-6 slack)
    double symmetric_objective = 0.0;
    double best_grid_objective = 0.0;
    RealStrategy best_grid_point;
    long points_evaluated = 0;
};

// Probes the one-step lattice box around the symmetric fractional seed:
// group perturbations delta_g in {-1,0,+1}^k * grid_step constrained to sum
// to zero, day perturbations delta_d in {-1,0,+1}^(k-1) * grid_step with the
// last day pinned at tau. Points violating positivity or day ordering are
// skipped. All points (seed included) are scored with the continuous-arrival
// objective, the only evaluation under which interior schedules can be local
// optima at all (see continuous_expected_detection_time); the weight
// convention in `options` is ignored, the source model is honored. Throws
// when the box would exceed 1e8 points.
GridCheckResult symmetry_grid_check(int k, int tau, int m, const EpidemicParams& epidemic,
                                    double grid_step, const EvalOptions& options = {});

struct MonteCarloEstimate {
    double mean = 0.0;
    double half_width = 0.0;  // 1.96 * sd / sqrt(replicates)
    long replicates = 0;
};

// Agent-level simulation of the contact process: one seeded infection, each
// susceptible resident draws round(kappa) distinct partners per day (capped
// at m-1) and becomes infected with probability 1 - (1-beta)^(infected
// partners), using start-of-day states. Returns the mean infected fraction
// among the m-1 initially susceptible residents after d days — the quantity
// the P_I recursion approximates.
MonteCarloEstimate monte_carlo_infection_probability(int m, double kappa, double beta, int d,
                                                     long replicates, std::uint64_t seed);

}  // namespace rht
