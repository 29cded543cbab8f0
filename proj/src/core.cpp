#include "rht/core.hpp"

#include <stdexcept>

namespace rht {

double testing_cost(int k, const FacilityParams& facility) {
    if (k < 1) throw std::invalid_argument("testing_cost: k must be >= 1");
    return k * facility.prep_time + facility.m * facility.test_time;
}

double workload_fraction(const TestingStrategy& strategy, const FacilityParams& facility) {
    return testing_cost(strategy.k, facility) /
           (facility.n * strategy.tau * facility.day_length);
}

bool is_budget_feasible(const TestingStrategy& strategy, const FacilityParams& facility,
                        double p_cap) {
    return workload_fraction(strategy, facility) <= p_cap;
}

std::vector<std::string> validate(const TestingStrategy& s, const FacilityParams& f) {
    std::vector<std::string> v;
    if (s.k < 1) v.push_back("k must be >= 1");
    if (static_cast<int>(s.group_sizes.size()) != s.k)
        v.push_back("group_sizes length " + std::to_string(s.group_sizes.size()) +
                    " != k = " + std::to_string(s.k));
    if (static_cast<int>(s.test_days.size()) != s.k)
        v.push_back("test_days length " + std::to_string(s.test_days.size()) +
                    " != k = " + std::to_string(s.k));
    if (s.tau < 1) v.push_back("tau must be >= 1");
    if (s.tau > f.max_tau)
        v.push_back("tau " + std::to_string(s.tau) + " > max_tau " + std::to_string(f.max_tau));
    if (s.k > s.tau)
        v.push_back("k " + std::to_string(s.k) + " > tau " + std::to_string(s.tau));

    long long sum = 0;
    for (std::size_t i = 0; i < s.group_sizes.size(); ++i) {
        int g = s.group_sizes[i];
        sum += g;
        if (g < 1) v.push_back("group size " + std::to_string(g) + " < 1 at index " +
                               std::to_string(i));
        if (g > f.max_group)
            v.push_back("group size " + std::to_string(g) + " > max_group " +
                        std::to_string(f.max_group));
    }
    if (!s.group_sizes.empty() && sum != f.m)
        v.push_back("sum of sizes " + std::to_string(sum) + " != m = " + std::to_string(f.m));

    for (std::size_t i = 0; i < s.test_days.size(); ++i) {
        int d = s.test_days[i];
        if (d < 1 || d > s.tau)
            v.push_back("test day " + std::to_string(d) + " outside [1, tau]");
        if (i > 0 && d <= s.test_days[i - 1])
            v.push_back("test days not strictly increasing at index " + std::to_string(i));
    }
    if (!s.test_days.empty() && s.test_days.back() != s.tau)
        v.push_back("d_k != tau");
    return v;
}

std::vector<std::string> validate(const FacilityParams& f) {
    std::vector<std::string> v;
    if (f.m < 1) v.push_back("m must be >= 1");
    if (f.n < 1) v.push_back("n must be >= 1");
    if (f.max_tau < 1) v.push_back("max_tau must be >= 1");
    if (f.max_group < 1 || f.max_group > f.m)
        v.push_back("max_group must be in [1, m]");
    if (f.prep_time < 0) v.push_back("prep_time must be >= 0");
    if (f.test_time < 0) v.push_back("test_time must be >= 0");
    if (f.day_length <= 0) v.push_back("day_length must be > 0");
    return v;
}

std::vector<std::string> validate(const EpidemicParams& e) {
    std::vector<std::string> v;
    if (e.beta < 0 || e.beta > 1) v.push_back("beta must be in [0, 1]");
    if (e.kappa < 0) v.push_back("kappa must be >= 0");
    if (e.weekly_incidence < 0 || e.weekly_incidence > 1)
        v.push_back("weekly_incidence must be in [0, 1]");
    if (e.visitor_rate < 0) v.push_back("visitor_rate must be >= 0");
    return v;
}

}  // namespace rht
