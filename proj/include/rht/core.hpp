#pragma once

// Domain types, validation, and the deterministic cost/budget arithmetic
// shared by both optimization models.

#include <string>
#include <vector>

namespace rht {

// Facility-level parameters: census, staffing, per-test timings, schedule bounds.
struct FacilityParams {
    int m = 0;                  // resident count
    int n = 0;                  // staff count
    int max_tau = 0;            // maximum test interval in days
    int max_group = 0;          // maximum residents testable in one batch
    double prep_time = 180.0;   // minutes to prepare one group batch
    double test_time = 15.0;    // minutes per resident test
    double day_length = 480.0;  // minutes of one staff working day
};

// Epidemic parameters: transmission, contact rate, and local incidence.
struct EpidemicParams {
    double beta = 0.0;              // transmission probability per contact, [0,1]
    double kappa = 0.0;             // mean daily contacts per resident, >= 0
    double weekly_incidence = 0.0;  // per-individual 7-day infection probability
    double visitor_rate = 0.0;      // mean visitors per resident per 14 days
};

// A testing strategy: k groups tested on k distinct days within a tau-day cycle.
struct TestingStrategy {
    int k = 0;
    int tau = 0;
    std::vector<int> group_sizes;  // G, k positive integers summing to m
    std::vector<int> test_days;    // D, strictly increasing, in [1,tau], d_k = tau
};

// Fractional-valued strategy used for symmetry seeds and continuous-space checks.
struct RealStrategy {
    int k = 0;
    int tau = 0;
    std::vector<double> group_sizes;
    std::vector<double> test_days;
};

struct ModelOneConfig {
    double p_cap = 0.0;  // maximum workload fraction, [0,1]
};

struct ModelTwoConfig {
    double alpha = 0.0;  // acceptable risk level relative to background, > 0
};

// Staff minutes consumed by one full round of testing: k*prep_time + m*test_time.
double testing_cost(int k, const FacilityParams& facility);

// testing_cost / (n * tau * day_length): the minimum p satisfying the budget
// constraint with equality.
double workload_fraction(const TestingStrategy& strategy, const FacilityParams& facility);

// true iff workload_fraction(strategy) <= p_cap (exact comparison, no epsilon).
bool is_budget_feasible(const TestingStrategy& strategy, const FacilityParams& facility,
                        double p_cap);

// Violated invariants as data (empty = ok). Checks: sum of sizes = m, sizes in
// [1, max_group], tau in [1, max_tau], k = |G| = |D| >= 1, days strictly
// increasing within [1, tau], and d_k = tau.
std::vector<std::string> validate(const TestingStrategy& strategy,
                                  const FacilityParams& facility);

// Parameter-block validation (same violations-as-data convention).
std::vector<std::string> validate(const FacilityParams& facility);
std::vector<std::string> validate(const EpidemicParams& epidemic);

}  // namespace rht
