#include "rht/tables.hpp"

namespace rht {

namespace {

GoldenRun feasible_run(int run, int m, int n, double cap, int max_tau, int max_group, double kappa,
                       int k, int tau, std::vector<int> groups, std::vector<int> days,
                       double value) {
    GoldenRun row;
    row.run = run;
    row.m = m;
    row.n = n;
    row.cap = cap;
    row.max_tau = max_tau;
    row.max_group = max_group;
    row.kappa = kappa;
    row.feasible = true;
    row.k = k;
    row.tau = tau;
    row.group_sizes = std::move(groups);
    row.test_days = std::move(days);
    row.value = value;
    return row;
}

GoldenRun infeasible_run(int run, int m, int n, double cap, int max_tau, int max_group,
                         double kappa) {
    GoldenRun row;
    row.run = run;
    row.m = m;
    row.n = n;
    row.cap = cap;
    row.max_tau = max_tau;
    row.max_group = max_group;
    row.kappa = kappa;
    row.feasible = false;
    return row;
}

}  // namespace

const std::vector<GoldenRun>& table1() {
    static const std::vector<GoldenRun> rows = {
        infeasible_run(1, 50, 10, 0.05, 4, 30, 9),
        infeasible_run(2, 50, 10, 0.05, 4, 30, 17),
        infeasible_run(3, 50, 10, 0.05, 4, 22, 9),
        infeasible_run(4, 50, 10, 0.05, 4, 22, 17),
        feasible_run(5, 50, 10, 0.05, 7, 30, 9, 2, 5, {28, 22}, {2, 5}, 1.7365),
        feasible_run(6, 50, 10, 0.05, 7, 30, 17, 3, 6, {16, 17, 17}, {2, 4, 6}, 1.4355),
        feasible_run(7, 50, 10, 0.05, 7, 22, 9, 3, 6, {16, 17, 17}, {2, 4, 6}, 1.7587),
        feasible_run(8, 50, 10, 0.05, 7, 22, 17, 3, 6, {16, 17, 17}, {2, 4, 6}, 1.4355),
        feasible_run(9, 50, 10, 0.1, 4, 30, 9, 3, 3, {16, 17, 17}, {1, 2, 3}, 1.0427),
        feasible_run(10, 50, 10, 0.1, 4, 30, 17, 3, 3, {16, 17, 17}, {1, 2, 3}, 0.8692),
        feasible_run(11, 50, 10, 0.1, 4, 22, 9, 3, 3, {16, 17, 17}, {1, 2, 3}, 1.0427),
        feasible_run(12, 50, 10, 0.1, 4, 22, 17, 3, 3, {16, 17, 17}, {1, 2, 3}, 0.8692),
        feasible_run(13, 50, 10, 0.1, 7, 30, 9, 3, 3, {16, 17, 17}, {1, 2, 3}, 1.0427),
        feasible_run(14, 50, 10, 0.1, 7, 30, 17, 3, 3, {16, 17, 17}, {1, 2, 3}, 0.8692),
        feasible_run(15, 50, 10, 0.1, 7, 22, 9, 3, 3, {16, 17, 17}, {1, 2, 3}, 1.0427),
        feasible_run(16, 50, 10, 0.1, 7, 22, 17, 3, 3, {16, 17, 17}, {1, 2, 3}, 0.8692),
        feasible_run(17, 50, 10, 0.2, 4, 30, 9, 2, 2, {25, 25}, {1, 2}, 0.8082),
        feasible_run(18, 50, 10, 0.2, 4, 30, 17, 2, 2, {25, 25}, {1, 2}, 0.7005),
        feasible_run(19, 50, 10, 0.2, 4, 22, 9, 3, 3, {16, 17, 17}, {1, 2, 3}, 1.0427),
        feasible_run(20, 50, 10, 0.2, 4, 22, 17, 3, 3, {16, 17, 17}, {1, 2, 3}, 0.8692),
        feasible_run(21, 50, 10, 0.2, 7, 30, 9, 2, 2, {25, 25}, {1, 2}, 0.8082),
        feasible_run(22, 50, 10, 0.2, 7, 30, 17, 2, 2, {25, 25}, {1, 2}, 0.7005),
        feasible_run(23, 50, 10, 0.2, 7, 22, 9, 3, 3, {16, 17, 17}, {1, 2, 3}, 1.0427),
        feasible_run(24, 50, 10, 0.2, 7, 22, 17, 3, 3, {16, 17, 17}, {1, 2, 3}, 0.8692),
        infeasible_run(25, 90, 15, 0.05, 4, 30, 15),
        infeasible_run(26, 90, 15, 0.05, 4, 30, 29),
        infeasible_run(27, 90, 15, 0.05, 4, 22, 15),
        infeasible_run(28, 90, 15, 0.05, 4, 22, 29),
        feasible_run(29, 90, 15, 0.05, 7, 30, 15, 4, 6, {25, 20, 25, 20}, {1, 3, 4, 6}, 1.4332),
        feasible_run(30, 90, 15, 0.05, 7, 30, 29, 6, 7, {13, 13, 13, 12, 23, 16},
                     {1, 2, 3, 4, 5, 7}, 1.1547),
        feasible_run(31, 90, 15, 0.05, 7, 22, 15, 6, 7, {21, 17, 13, 13, 13, 13},
                     {1, 3, 4, 5, 6, 7}, 1.4673),
        feasible_run(32, 90, 15, 0.05, 7, 22, 29, 6, 7, {13, 13, 13, 22, 16, 13},
                     {1, 2, 3, 4, 6, 7}, 1.1548),
        feasible_run(33, 90, 15, 0.1, 4, 30, 15, 3, 3, {30, 30, 30}, {1, 2, 3}, 0.9035),
        feasible_run(34, 90, 15, 0.1, 4, 30, 29, 3, 3, {30, 30, 30}, {1, 2, 3}, 0.7381),
        infeasible_run(35, 90, 15, 0.1, 4, 22, 15),
        infeasible_run(36, 90, 15, 0.1, 4, 22, 29),
        feasible_run(37, 90, 15, 0.1, 7, 30, 15, 3, 3, {30, 30, 30}, {1, 2, 3}, 0.9035),
        feasible_run(38, 90, 15, 0.1, 7, 30, 29, 3, 3, {30, 30, 30}, {1, 2, 3}, 0.7381),
        feasible_run(39, 90, 15, 0.1, 7, 22, 15, 5, 5, {18, 18, 18, 18, 18}, {1, 2, 3, 4, 5},
                     1.1904),
        feasible_run(40, 90, 15, 0.1, 7, 22, 29, 5, 5, {18, 18, 18, 18, 18}, {1, 2, 3, 4, 5},
                     0.9391),
        feasible_run(41, 90, 15, 0.2, 4, 30, 15, 3, 3, {30, 30, 30}, {1, 2, 3}, 0.9035),
        feasible_run(42, 90, 15, 0.2, 4, 30, 29, 3, 3, {30, 30, 30}, {1, 2, 3}, 0.7381),
        infeasible_run(43, 90, 15, 0.2, 4, 22, 15),
        infeasible_run(44, 90, 15, 0.2, 4, 22, 29),
        feasible_run(45, 90, 15, 0.2, 7, 30, 15, 3, 3, {30, 30, 30}, {1, 2, 3}, 0.9035),
        feasible_run(46, 90, 15, 0.2, 7, 30, 29, 3, 3, {30, 30, 30}, {1, 2, 3}, 0.7381),
        feasible_run(47, 90, 15, 0.2, 7, 22, 15, 5, 5, {18, 18, 18, 18, 18}, {1, 2, 3, 4, 5},
                     1.1904),
        feasible_run(48, 90, 15, 0.2, 7, 22, 29, 5, 5, {18, 18, 18, 18, 18}, {1, 2, 3, 4, 5},
                     0.9391),
    };
    return rows;
}

const std::vector<GoldenRun>& table2() {
    static const std::vector<GoldenRun> rows = {
        feasible_run(1, 50, 10, 0.3, 4, 30, 9, 3, 3, {16, 17, 17}, {1, 2, 3}, 8.96),
        infeasible_run(2, 50, 10, 0.3, 4, 30, 17),
        feasible_run(3, 50, 10, 0.3, 4, 22, 9, 3, 3, {16, 17, 17}, {1, 2, 3}, 8.96),
        infeasible_run(4, 50, 10, 0.3, 4, 22, 17),
        feasible_run(5, 50, 10, 0.3, 7, 30, 9, 3, 3, {16, 17, 17}, {1, 2, 3}, 8.96),
        infeasible_run(6, 50, 10, 0.3, 7, 30, 17),
        feasible_run(7, 50, 10, 0.3, 7, 22, 9, 3, 3, {16, 17, 17}, {1, 2, 3}, 8.96),
        infeasible_run(8, 50, 10, 0.3, 7, 22, 17),
        feasible_run(9, 50, 10, 0.5, 4, 30, 9, 2, 4, {25, 25}, {2, 4}, 5.78),
        feasible_run(10, 50, 10, 0.5, 4, 30, 17, 4, 4, {12, 13, 12, 13}, {1, 2, 3, 4}, 7.66),
        feasible_run(11, 50, 10, 0.5, 4, 22, 9, 3, 4, {16, 17, 17}, {1, 2, 4}, 6.72),
        feasible_run(12, 50, 10, 0.5, 4, 22, 17, 4, 4, {12, 13, 12, 13}, {1, 2, 3, 4}, 7.66),
        feasible_run(13, 50, 10, 0.5, 7, 30, 9, 2, 4, {25, 25}, {2, 4}, 5.78),
        feasible_run(14, 50, 10, 0.5, 7, 30, 17, 4, 4, {12, 13, 12, 13}, {1, 2, 3, 4}, 7.66),
        feasible_run(15, 50, 10, 0.5, 7, 22, 9, 4, 5, {12, 13, 12, 13}, {1, 2, 3, 5}, 6.13),
        feasible_run(16, 50, 10, 0.5, 7, 22, 17, 4, 4, {12, 13, 12, 13}, {1, 2, 3, 4}, 7.66),
        feasible_run(17, 50, 10, 0.75, 4, 30, 9, 2, 4, {25, 25}, {2, 4}, 5.78),
        feasible_run(18, 50, 10, 0.75, 4, 30, 17, 3, 4, {16, 17, 17}, {1, 2, 4}, 6.72),
        feasible_run(19, 50, 10, 0.75, 4, 22, 9, 3, 4, {16, 17, 17}, {1, 2, 4}, 6.72),
        feasible_run(20, 50, 10, 0.75, 4, 22, 17, 3, 4, {16, 17, 17}, {1, 2, 4}, 6.72),
        feasible_run(21, 50, 10, 0.75, 7, 30, 9, 3, 7, {16, 17, 17}, {2, 4, 7}, 3.84),
        feasible_run(22, 50, 10, 0.75, 7, 30, 17, 3, 4, {16, 17, 17}, {1, 2, 4}, 6.72),
        feasible_run(23, 50, 10, 0.75, 7, 22, 9, 3, 7, {16, 17, 17}, {2, 4, 7}, 3.84),
        feasible_run(24, 50, 10, 0.75, 7, 22, 17, 3, 4, {16, 17, 17}, {1, 2, 4}, 6.72),
        infeasible_run(25, 90, 15, 0.3, 4, 30, 15),
        infeasible_run(26, 90, 15, 0.3, 4, 30, 29),
        infeasible_run(27, 90, 15, 0.3, 4, 22, 15),
        infeasible_run(28, 90, 15, 0.3, 4, 22, 29),
        infeasible_run(29, 90, 15, 0.3, 7, 30, 15),
        infeasible_run(30, 90, 15, 0.3, 7, 30, 29),
        infeasible_run(31, 90, 15, 0.3, 7, 22, 15),
        infeasible_run(32, 90, 15, 0.3, 7, 22, 29),
        feasible_run(33, 90, 15, 0.5, 4, 30, 15, 4, 4, {22, 23, 22, 23}, {1, 2, 3, 4}, 7.19),
        infeasible_run(34, 90, 15, 0.5, 4, 30, 29),
        infeasible_run(35, 90, 15, 0.5, 4, 22, 15),
        infeasible_run(36, 90, 15, 0.5, 4, 22, 29),
        feasible_run(37, 90, 15, 0.5, 7, 30, 15, 4, 4, {22, 23, 22, 23}, {1, 2, 3, 4}, 7.19),
        infeasible_run(38, 90, 15, 0.5, 7, 30, 29),
        infeasible_run(39, 90, 15, 0.5, 7, 22, 15),
        infeasible_run(40, 90, 15, 0.5, 7, 22, 29),
        feasible_run(41, 90, 15, 0.75, 4, 30, 15, 3, 4, {30, 30, 30}, {1, 2, 4}, 6.56),
        feasible_run(42, 90, 15, 0.75, 4, 30, 29, 3, 4, {30, 30, 30}, {1, 2, 4}, 6.56),
        infeasible_run(43, 90, 15, 0.75, 4, 22, 15),
        infeasible_run(44, 90, 15, 0.75, 4, 22, 29),
        feasible_run(45, 90, 15, 0.75, 7, 30, 15, 5, 6, {18, 18, 18, 18, 18}, {1, 2, 3, 4, 6},
                     5.21),
        feasible_run(46, 90, 15, 0.75, 7, 30, 29, 5, 5, {18, 18, 18, 18, 18}, {1, 2, 3, 4, 5},
                     6.25),
        feasible_run(47, 90, 15, 0.75, 7, 22, 15, 5, 6, {18, 18, 18, 18, 18}, {1, 2, 3, 4, 6},
                     5.21),
        feasible_run(48, 90, 15, 0.75, 7, 22, 29, 5, 5, {18, 18, 18, 18, 18}, {1, 2, 3, 4, 5},
                     6.25),
    };
    return rows;
}

FacilityParams golden_facility(const GoldenRun& run) {
    FacilityParams facility;
    facility.m = run.m;
    facility.n = run.n;
    facility.max_tau = run.max_tau;
    facility.max_group = run.max_group;
    return facility;  // prep/test/day-length defaults are the published timings
}

EpidemicParams golden_epidemic(const GoldenRun& run) {
    EpidemicParams epidemic;
    epidemic.beta = 0.1;
    epidemic.kappa = run.kappa;
    epidemic.weekly_incidence = 0.006;
    epidemic.visitor_rate = 1.0;
    return epidemic;
}

}  // namespace rht
