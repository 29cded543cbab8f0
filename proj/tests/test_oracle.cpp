#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <cmath>
#include <stdexcept>

#include "rht/oracle.hpp"
#include "rht/solver.hpp"

using namespace rht;

TEST_CASE("brute force enumeration count matches the closed-form census") {
    // m=5, Max_tau=3, permissive budget. Strategies:
    //   tau=1: k=1 -> 1        tau=2: k=1 -> 1, k=2 -> 4 day-free compositions
    //   tau=3: k=1 -> 1, k=2 -> 2 day sets x 4, k=3 -> 6 compositions
    // total = 1 + 1 + 4 + 1 + 8 + 6 = 21.
    FacilityParams f{.m = 5, .n = 2, .max_tau = 3, .max_group = 5};
    EpidemicParams epi{.beta = 0.3, .kappa = 2.0};
    OracleResult r = brute_force_model1(f, epi, ModelOneConfig{1.0});
    CHECK(r.strategies_enumerated == 21);
    REQUIRE(r.optimum.has_value());
    CHECK(validate(*r.optimum, f).empty());

    // max_group=3 forces k >= ceil(5/3) = 2 and caps compositions:
    //   tau=2: k=2 -> 2   tau=3: k=2 -> 4, k=3 -> 6   total 12.
    FacilityParams f3 = f;
    f3.max_group = 3;
    OracleResult r3 = brute_force_model1(f3, epi, ModelOneConfig{1.0});
    CHECK(r3.strategies_enumerated == 12);
}

TEST_CASE("brute force returns no optimum when the budget excludes everything") {
    FacilityParams f{.m = 5, .n = 2, .max_tau = 3, .max_group = 5};
    EpidemicParams epi{.beta = 0.3, .kappa = 2.0};
    OracleResult r = brute_force_model1(f, epi, ModelOneConfig{0.01});
    CHECK_FALSE(r.optimum.has_value());
    CHECK(r.strategies_enumerated == 0);
}

TEST_CASE("brute force refuses instances beyond the enumeration guard") {
    FacilityParams f{.m = 80, .n = 10, .max_tau = 7, .max_group = 80};
    EpidemicParams epi{.beta = 0.1, .kappa = 10.0};
    CHECK_THROWS_AS(brute_force_model1(f, epi, ModelOneConfig{1.0}), std::invalid_argument);
}

TEST_CASE("oracle optimum is never worse than the solver and usually equal") {
    struct Instance {
        FacilityParams f;
        EpidemicParams epi;
        double p;
    };
    const Instance instances[] = {
        {{.m = 10, .n = 3, .max_tau = 3, .max_group = 5}, {.beta = 0.3, .kappa = 4.0}, 0.5},
        {{.m = 12, .n = 3, .max_tau = 4, .max_group = 6}, {.beta = 0.1, .kappa = 5.0}, 0.4},
        {{.m = 8, .n = 2, .max_tau = 5, .max_group = 8}, {.beta = 0.2, .kappa = 3.0}, 0.7},
        {{.m = 15, .n = 4, .max_tau = 4, .max_group = 8}, {.beta = 0.05, .kappa = 7.0}, 0.3},
    };
    for (const Instance& inst : instances) {
        for (bool table : {false, true}) {
            SearchConfig search;
            if (table) search.eval = table_eval_options();
            OracleResult oracle = brute_force_model1(inst.f, inst.epi, ModelOneConfig{inst.p},
                                                     search.eval);
            SolveReport solved = solve_model1(inst.f, inst.epi, ModelOneConfig{inst.p}, search);
            REQUIRE(oracle.optimum.has_value() == solved.feasible);
            if (solved.feasible) {
                CHECK(oracle.objective <= solved.objective + 1e-12);
                CHECK(solved.objective == doctest::Approx(oracle.objective).epsilon(1e-9));
            }
        }
    }
}

TEST_CASE("model-2 oracle agrees with the solver on small instances") {
    FacilityParams f{.m = 12, .n = 3, .max_tau = 4, .max_group = 6};
    EpidemicParams epi{.beta = 0.1, .kappa = 5.0, .weekly_incidence = 0.01, .visitor_rate = 1.0};
    for (double alpha : {0.3, 0.6, 1.5}) {
        OracleResult oracle = brute_force_model2(f, epi, ModelTwoConfig{alpha});
        SolveReport solved = solve_model2(f, epi, ModelTwoConfig{alpha}, SearchConfig{});
        REQUIRE(oracle.optimum.has_value() == solved.feasible);
        if (solved.feasible) {
            CHECK(solved.objective == doctest::Approx(oracle.objective).epsilon(1e-12));
            CHECK(solved.strategy->tau == oracle.optimum->tau);
            CHECK(solved.strategy->k == oracle.optimum->k);
        }
    }
}

TEST_CASE("the symmetric seed survives its one-step lattice box") {
    EpidemicParams epi{.beta = 0.1, .kappa = 5.0};
    EvalOptions chain;
    chain.source_model = SourceModel::chain;

    GridCheckResult r = symmetry_grid_check(2, 4, 10, epi, 0.25, chain);
    CHECK(r.symmetric_is_optimal);
    CHECK(r.points_evaluated == 9);  // 3 zero-sum size deltas x 3 day deltas
    CHECK(r.symmetric_objective ==
          doctest::Approx(continuous_expected_detection_time(symmetry_strategy(2, 4, 10),
                                                             infection_curve(10, 5.0, 0.1),
                                                             SourceModel::chain))
              .epsilon(1e-12));
    CHECK(r.best_grid_objective <= r.symmetric_objective);

    EpidemicParams epi3{.beta = 0.1, .kappa = 6.0};
    GridCheckResult r3 = symmetry_grid_check(3, 6, 12, epi3, 0.05, chain);
    CHECK(r3.symmetric_is_optimal);
    CHECK(r3.points_evaluated == 63);  // 7 zero-sum size deltas x 9 day deltas

    // k=1 has no freedom at all.
    GridCheckResult r1 = symmetry_grid_check(1, 3, 10, epi, 0.05, chain);
    CHECK(r1.symmetric_is_optimal);
    CHECK(r1.points_evaluated == 1);
}

TEST_CASE("the lattice box passes in all four transmission limit regimes") {
    EvalOptions chain;
    chain.source_model = SourceModel::chain;
    // tau divisible by k (integer seed days) and not (fractional seed days).
    for (auto [k, tau] : {std::pair{3, 6}, std::pair{3, 7}}) {
        CAPTURE(k);
        CAPTURE(tau);
        EpidemicParams beta_zero{.beta = 1e-9, .kappa = 6.0};
        CHECK(symmetry_grid_check(k, tau, 12, beta_zero, 0.05, chain).symmetric_is_optimal);
        EpidemicParams beta_one{.beta = 1.0 - 1e-9, .kappa = 6.0};
        CHECK(symmetry_grid_check(k, tau, 12, beta_one, 0.05, chain).symmetric_is_optimal);
        EpidemicParams kappa_zero{.beta = 0.3, .kappa = 1e-9};
        CHECK(symmetry_grid_check(k, tau, 12, kappa_zero, 0.05, chain).symmetric_is_optimal);
        EpidemicParams kappa_inf{.beta = 0.1, .kappa = 1e6};
        CHECK(symmetry_grid_check(k, tau, 12, kappa_inf, 0.05, chain).symmetric_is_optimal);
    }
}

TEST_CASE("the lattice box guard rejects oversized boxes") {
    EpidemicParams epi{.beta = 0.1, .kappa = 5.0};
    CHECK_THROWS_AS(symmetry_grid_check(9, 9, 20, epi, 0.05, EvalOptions{}),
                    std::invalid_argument);
    CHECK_THROWS_AS(symmetry_grid_check(3, 2, 10, epi, 0.05, EvalOptions{}),
                    std::invalid_argument);  // k > tau
    CHECK_THROWS_AS(symmetry_grid_check(2, 4, 10, epi, 0.0, EvalOptions{}),
                    std::invalid_argument);  // zero step
}

TEST_CASE("monte carlo matches the degenerate transmission cases exactly") {
    MonteCarloEstimate zero = monte_carlo_infection_probability(10, 4.0, 0.0, 5, 2000, 1);
    CHECK(zero.mean == 0.0);
    CHECK(zero.half_width == 0.0);

    // beta=1 and kappa=m-1: every susceptible contacts the source on day one.
    MonteCarloEstimate one = monte_carlo_infection_probability(4, 3.0, 1.0, 1, 2000, 1);
    CHECK(one.mean == 1.0);
    CHECK(one.half_width == 0.0);

    // beta=1 with sparse contacts saturates within a few days.
    MonteCarloEstimate sat = monte_carlo_infection_probability(6, 3.0, 1.0, 3, 5000, 7);
    CHECK(sat.mean > 0.93);
}

TEST_CASE("monte carlo stays near the recursion on the reference instance") {
    double p3 = infection_probability(20, 5.0, 0.1, 3);
    double p5 = infection_probability(20, 5.0, 0.1, 5);
    MonteCarloEstimate mc3 = monte_carlo_infection_probability(20, 5.0, 0.1, 3, 20000, 11);
    MonteCarloEstimate mc5 = monte_carlo_infection_probability(20, 5.0, 0.1, 5, 20000, 11);
    CHECK(std::abs(mc3.mean - p3) < 0.05);
    CHECK(std::abs(mc5.mean - p5) < 0.05);
    CHECK(mc3.half_width > 0.0);
    CHECK(mc3.half_width < 0.02);

    // Deterministic for a fixed seed.
    MonteCarloEstimate again = monte_carlo_infection_probability(20, 5.0, 0.1, 3, 20000, 11);
    CHECK(again.mean == mc3.mean);
    CHECK(again.half_width == mc3.half_width);

    // d=0 is the starting state: nobody but the source is infected.
    MonteCarloEstimate start = monte_carlo_infection_probability(20, 5.0, 0.1, 0, 1000, 3);
    CHECK(start.mean == 0.0);
}

TEST_CASE("monte carlo validates its arguments") {
    CHECK_THROWS_AS(monte_carlo_infection_probability(1, 3.0, 0.5, 2, 1000, 1),
                    std::invalid_argument);
    CHECK_THROWS_AS(monte_carlo_infection_probability(10, 3.0, 0.5, -1, 1000, 1),
                    std::invalid_argument);
    CHECK_THROWS_AS(monte_carlo_infection_probability(10, 3.0, 0.5, 2, 0, 1),
                    std::invalid_argument);
}
