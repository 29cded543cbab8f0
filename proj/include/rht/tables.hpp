#pragma once

// Published reference results used by the `reproduce` command and the
// regression suite: 48 Model 1 runs (minimum expected detection time under a
// workload cap) and 48 Model 2 runs (minimum workload percentage under a
// relative risk cap), both over the same factorial design:
// m in {50, 90} x cap level x Max_tau in {4, 7} x Max_g x kappa.

#include <vector>

#include "rht/core.hpp"

namespace rht {

struct GoldenRun {
    int run = 0;  // 1..48 within its table
    int m = 0;
    int n = 0;
    double cap = 0.0;  // table 1: workload cap p; table 2: risk multiplier alpha
    int max_tau = 0;
    int max_group = 0;
    double kappa = 0.0;
    bool feasible = false;  // blank rows in the source are infeasible instances
    int k = 0;
    int tau = 0;
    std::vector<int> group_sizes;
    std::vector<int> test_days;
    double value = 0.0;  // table 1: expected detection time (days);
                         // table 2: workload as a percentage of staff time
};

const std::vector<GoldenRun>& table1();
const std::vector<GoldenRun>& table2();

// Shared experimental constants behind both tables.
FacilityParams golden_facility(const GoldenRun& run);
EpidemicParams golden_epidemic(const GoldenRun& run);

}  // namespace rht
