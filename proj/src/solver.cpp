#include "rht/solver.hpp"

#include <algorithm>
#include <cmath>
#include <cstdint>
#include <limits>
#include <numeric>
#include <random>
#include <stdexcept>
#include <string>
#include <tuple>

namespace rht {

namespace {

std::uint64_t splitmix64(std::uint64_t x) {
    x += 0x9e3779b97f4a7c15ULL;
    x = (x ^ (x >> 30)) * 0xbf58476d1ce4e5b9ULL;
    x = (x ^ (x >> 27)) * 0x94d049bb133111ebULL;
    return x ^ (x >> 31);
}

// Independent RNG stream per (restart, tau, k, day-candidate). Keyed directly
// on the coordinates rather than drawn from one sequential stream so that
// skipping a pair (budget or pruning) never shifts the randomness seen by
// later pairs.
std::uint64_t mix_seed(std::uint64_t base, std::uint64_t tau, std::uint64_t k,
                       std::uint64_t candidate) {
    std::uint64_t h = splitmix64(base);
    h = splitmix64(h ^ tau);
    h = splitmix64(h ^ k);
    h = splitmix64(h ^ candidate);
    return h;
}

void throw_if_invalid(const FacilityParams& facility, const EpidemicParams& epidemic) {
    std::string joined;
    for (const auto& v : validate(facility)) joined += (joined.empty() ? "" : "; ") + v;
    for (const auto& v : validate(epidemic)) joined += (joined.empty() ? "" : "; ") + v;
    if (facility.m < 2) {
        joined += (joined.empty() ? "" : "; ");
        joined += "facility: m must be >= 2 for the infection model";
    }
    if (!joined.empty()) throw std::invalid_argument("solve: " + joined);
}

using ObjectiveFn = std::function<double(const TestingStrategy&)>;

// Best strategy for a single (tau, k) pair within one restart: the symmetric
// seed generates floor/ceil day-sets (a single exact set when the seed lands
// on the integer lattice), each rounded and refined by annealing. Annealing
// always runs: the symmetric point is only a local optimum, and for small
// contact rates the best integer split can sit far from it.
std::pair<TestingStrategy, double> pair_search(int k, int tau, const FacilityParams& facility,
                                               const ObjectiveFn& objective,
                                               const SearchConfig& config,
                                               std::uint64_t restart_base) {
    const int m = facility.m;
    RealStrategy seed = symmetry_strategy(k, tau, m);
    std::vector<std::vector<int>> day_sets = round_days(seed);
    std::optional<TestingStrategy> best;
    double best_obj = std::numeric_limits<double>::infinity();
    for (std::size_t idx = 0; idx < day_sets.size(); ++idx) {
        TestingStrategy start;
        start.k = k;
        start.tau = tau;
        start.group_sizes = round_groups(seed.group_sizes, m, facility.max_group);
        start.test_days = day_sets[idx];
        auto [candidate, candidate_obj] = anneal_groups(
            start, facility.max_group, objective, config,
            mix_seed(restart_base, static_cast<std::uint64_t>(tau), static_cast<std::uint64_t>(k),
                     static_cast<std::uint64_t>(idx)));
        if (!best || strategy_preferred(candidate_obj, candidate, best_obj, *best)) {
            best = std::move(candidate);
            best_obj = candidate_obj;
        }
    }
    return {std::move(*best), best_obj};
}

int min_groups(int m, int max_group) { return (m + max_group - 1) / max_group; }

}  // namespace

RealStrategy symmetry_strategy(int k, int tau, int m) {
    if (k < 1 || tau < 1 || k > tau || m < 1) {
        throw std::invalid_argument("symmetry_strategy: need 1 <= k <= tau and m >= 1");
    }
    RealStrategy seed;
    seed.k = k;
    seed.tau = tau;
    seed.group_sizes.assign(k, static_cast<double>(m) / k);
    seed.test_days.resize(k);
    for (int i = 0; i < k; ++i) {
        seed.test_days[i] = static_cast<double>(i + 1) * tau / k;
    }
    seed.test_days[k - 1] = tau;  // exact, independent of floating-point division
    return seed;
}

std::vector<std::vector<int>> round_days(const RealStrategy& seed) {
    const int k = seed.k;
    const int tau = seed.tau;
    if (k < 1) throw std::invalid_argument("round_days: k must be >= 1");
    if (k == 1) return {{tau}};
    const int free_days = k - 1;
    if (free_days > 20) throw std::invalid_argument("round_days: too many groups to enumerate");

    std::vector<std::vector<int>> result;
    for (unsigned mask = 0; mask < (1u << free_days); ++mask) {
        std::vector<int> days(k);
        days[k - 1] = tau;
        bool valid = true;
        for (int i = 0; i < free_days && valid; ++i) {
            double d = seed.test_days[i];
            days[i] = static_cast<int>((mask >> i) & 1u ? std::ceil(d) : std::floor(d));
            if (days[i] < 1) valid = false;
            if (i > 0 && days[i] <= days[i - 1]) valid = false;
        }
        if (valid && days[k - 1] <= days[k - 2]) valid = false;
        if (!valid) continue;
        if (std::find(result.begin(), result.end(), days) == result.end()) {
            result.push_back(std::move(days));
        }
    }
    return result;
}

std::vector<int> round_groups(const std::vector<double>& sizes, int m, int max_group) {
    const int k = static_cast<int>(sizes.size());
    if (k < 1) throw std::invalid_argument("round_groups: need at least one group");
    if (m < k) throw std::invalid_argument("round_groups: m must be >= the number of groups");
    if (m > k * max_group) {
        throw std::invalid_argument("round_groups: m exceeds k * max_group, no valid rounding");
    }
    double total = std::accumulate(sizes.begin(), sizes.end(), 0.0);
    if (std::abs(total - m) > 1e-6 * std::max(1.0, static_cast<double>(m))) {
        throw std::invalid_argument("round_groups: sizes must sum to m");
    }

    std::vector<int> groups(k);
    std::vector<std::pair<double, int>> fractions(k);  // (fractional part, index)
    int assigned = 0;
    for (int i = 0; i < k; ++i) {
        groups[i] = static_cast<int>(std::floor(sizes[i]));
        fractions[i] = {sizes[i] - groups[i], i};
        assigned += groups[i];
    }
    // Largest remainder first; equal remainders resolve to the lowest index.
    std::stable_sort(fractions.begin(), fractions.end(),
                     [](const auto& a, const auto& b) { return a.first > b.first; });
    int leftover = m - assigned;
    for (int pass = 0; leftover > 0; ++pass) {
        groups[fractions[pass % k].second] += 1;
        --leftover;
    }

    // Every group must test at least one resident.
    for (int i = 0; i < k; ++i) {
        while (groups[i] < 1) {
            int donor = -1;
            for (int j = 0; j < k; ++j) {
                if (groups[j] > 1 && (donor < 0 || groups[j] > groups[donor])) donor = j;
            }
            groups[donor] -= 1;
            groups[i] += 1;
        }
    }
    // Clip to max_group, moving overflow one resident at a time onto the
    // smallest group that still has room.
    for (int i = 0; i < k; ++i) {
        while (groups[i] > max_group) {
            int receiver = -1;
            for (int j = 0; j < k; ++j) {
                if (groups[j] < max_group && (receiver < 0 || groups[j] < groups[receiver])) {
                    receiver = j;
                }
            }
            groups[i] -= 1;
            groups[receiver] += 1;
        }
    }
    return groups;
}

std::pair<TestingStrategy, double> anneal_groups(const TestingStrategy& seed, int max_group,
                                                 const std::function<double(
                                                     const TestingStrategy&)>& objective,
                                                 const SearchConfig& config,
                                                 std::uint64_t rng_seed) {
    double seed_obj = objective(seed);
    if (seed.k <= 1) return {seed, seed_obj};

    const int k = seed.k;
    const int m = std::accumulate(seed.group_sizes.begin(), seed.group_sizes.end(), 0);
    const long iterations = config.max_iterations_override > 0
                                ? config.max_iterations_override
                                : static_cast<long>(k) * seed.tau * m;

    TestingStrategy current = seed;
    double current_obj = seed_obj;
    TestingStrategy best = seed;
    double best_obj = seed_obj;

    std::mt19937_64 gen(rng_seed);
    double temperature = seed_obj;
    for (long it = 0; it < iterations; ++it, temperature *= config.cooling_rate) {
        int from = static_cast<int>(gen() % static_cast<std::uint64_t>(k));
        int to = static_cast<int>(gen() % static_cast<std::uint64_t>(k));
        if (from == to || current.group_sizes[from] <= 1 || current.group_sizes[to] >= max_group) {
            continue;  // no valid move this iteration; temperature still cools
        }
        current.group_sizes[from] -= 1;
        current.group_sizes[to] += 1;
        double candidate_obj = objective(current);
        double delta = candidate_obj - current_obj;
        bool accept = delta <= 0.0;  // improvements and plateau moves always pass
        if (!accept && temperature > 0.0) {
            double u = static_cast<double>(gen() >> 11) * 0x1.0p-53;
            accept = u < std::exp(-delta / temperature);
        }
        if (accept) {
            current_obj = candidate_obj;
            if (candidate_obj < best_obj) {
                best_obj = candidate_obj;
                best = current;
            }
        } else {
            current.group_sizes[from] += 1;
            current.group_sizes[to] -= 1;
        }
    }
    return {best, best_obj};
}

TestingStrategy canonical_rotation(const TestingStrategy& strategy) {
    const int k = strategy.k;
    if (k <= 1) return strategy;
    std::vector<int> gaps(k);
    for (int i = 0; i + 1 < k; ++i) gaps[i] = strategy.test_days[i + 1] - strategy.test_days[i];
    gaps[k - 1] = strategy.test_days[0] + strategy.tau - strategy.test_days[k - 1];

    std::optional<TestingStrategy> best;
    for (int j = 0; j < k; ++j) {
        TestingStrategy candidate;
        candidate.k = k;
        candidate.tau = strategy.tau;
        candidate.group_sizes.resize(k);
        candidate.test_days.resize(k);
        std::vector<int> rotated(k);
        for (int i = 0; i < k; ++i) {
            rotated[i] = gaps[(i + j) % k];
            candidate.group_sizes[i] = strategy.group_sizes[(i + j) % k];
        }
        candidate.test_days[0] = rotated[k - 1];
        for (int i = 1; i < k; ++i) {
            candidate.test_days[i] = candidate.test_days[i - 1] + rotated[i - 1];
        }
        if (!best ||
            std::tie(candidate.test_days, candidate.group_sizes) <
                std::tie(best->test_days, best->group_sizes)) {
            best = std::move(candidate);
        }
    }
    return *best;
}

bool strategy_preferred(double objective_a, const TestingStrategy& a, double objective_b,
                        const TestingStrategy& b) {
    if (objective_a != objective_b) return objective_a < objective_b;
    if (a.tau != b.tau) return a.tau < b.tau;
    if (a.k != b.k) return a.k < b.k;
    if (a.test_days != b.test_days) return a.test_days < b.test_days;
    return a.group_sizes < b.group_sizes;
}

SolveReport solve_model1(const FacilityParams& facility, const EpidemicParams& epidemic,
                         const ModelOneConfig& model, const SearchConfig& search) {
    throw_if_invalid(facility, epidemic);
    const InfectionCurve& curve = infection_curve(facility.m, epidemic.kappa, epidemic.beta);
    ObjectiveFn objective = [&](const TestingStrategy& s) {
        return expected_detection_time(s, curve, search.eval);
    };

    SolveReport report;
    report.restarts = search.restarts;
    report.seed = search.rng_seed;

    std::optional<TestingStrategy> overall;
    double overall_obj = std::numeric_limits<double>::infinity();
    const int k_lo = std::max(1, min_groups(facility.m, facility.max_group));

    for (int restart = 0; restart < search.restarts; ++restart) {
        std::optional<TestingStrategy> incumbent;
        double incumbent_obj = std::numeric_limits<double>::infinity();
        for (int tau = 1; tau <= facility.max_tau; ++tau) {
            const double budget = model.p_cap * facility.n * tau * facility.day_length;
            for (int k = k_lo; k <= std::min(tau, facility.m); ++k) {
                ++report.pairs_explored;
                if (testing_cost(k, facility) > budget) continue;
                if (search.prune && incumbent) {
                    double seed_bound = expected_detection_time(
                        symmetry_strategy(k, tau, facility.m), curve, search.eval);
                    if (seed_bound >= incumbent_obj) {
                        ++report.pairs_pruned;
                        continue;
                    }
                }
                auto [candidate, candidate_obj] =
                    pair_search(k, tau, facility, objective, search,
                                search.rng_seed + static_cast<std::uint64_t>(restart));
                if (!incumbent ||
                    strategy_preferred(candidate_obj, candidate, incumbent_obj, *incumbent)) {
                    incumbent = std::move(candidate);
                    incumbent_obj = candidate_obj;
                }
            }
        }
        if (incumbent &&
            (!overall || strategy_preferred(incumbent_obj, *incumbent, overall_obj, *overall))) {
            overall = std::move(incumbent);
            overall_obj = incumbent_obj;
        }
    }

    if (overall) {
        TestingStrategy canonical = canonical_rotation(*overall);
        report.strategy = canonical;
        report.objective = objective(canonical);
        report.expected_detection_time = report.objective;
        report.feasible = true;
    } else {
        report.objective = std::numeric_limits<double>::infinity();
        report.expected_detection_time = std::numeric_limits<double>::infinity();
        report.feasible = false;
    }
    return report;
}

SolveReport solve_model2(const FacilityParams& facility, const EpidemicParams& epidemic,
                         const ModelTwoConfig& model, const SearchConfig& search) {
    throw_if_invalid(facility, epidemic);
    const InfectionCurve& curve = infection_curve(facility.m, epidemic.kappa, epidemic.beta);
    ObjectiveFn objective = [&](const TestingStrategy& s) {
        return expected_detection_time(s, curve, search.eval);
    };

    SolveReport report;
    report.restarts = search.restarts;
    report.seed = search.rng_seed;

    std::optional<TestingStrategy> winner;
    double winner_workload = std::numeric_limits<double>::infinity();
    const int k_lo = std::max(1, min_groups(facility.m, facility.max_group));

    for (int tau = 1; tau <= facility.max_tau; ++tau) {
        const double full_budget = static_cast<double>(facility.n) * tau * facility.day_length;
        for (int k = k_lo; k <= std::min(tau, facility.m); ++k) {
            ++report.pairs_explored;
            const double cost = testing_cost(k, facility);
            if (cost > full_budget) continue;  // exceeds total staff time even at p = 1
            const double workload = cost / full_budget;
            // Workload is the objective, so a pair at or above the incumbent
            // cannot win: the tau-then-k loop order visits tied pairs in
            // tie-break order already.
            if (search.prune && winner && workload >= winner_workload) {
                ++report.pairs_pruned;
                continue;
            }

            std::optional<TestingStrategy> best_for_pair;
            double best_obj = std::numeric_limits<double>::infinity();
            for (int restart = 0; restart < search.restarts; ++restart) {
                auto [candidate, candidate_obj] =
                    pair_search(k, tau, facility, objective, search,
                                search.rng_seed + static_cast<std::uint64_t>(restart));
                if (!best_for_pair ||
                    strategy_preferred(candidate_obj, candidate, best_obj, *best_for_pair)) {
                    best_for_pair = std::move(candidate);
                    best_obj = candidate_obj;
                }
            }

            RiskAssessment assessment =
                risk_of_infection(*best_for_pair, epidemic, facility, search.eval);
            if (!risk_within(assessment, epidemic, model.alpha, tau)) continue;
            // Strict < keeps the first-visited pair on workload ties, which is
            // exactly the tau-then-k tie-break order.
            if (!winner || workload < winner_workload) {
                winner = std::move(best_for_pair);
                winner_workload = workload;
            }
        }
    }

    if (winner) {
        TestingStrategy canonical = canonical_rotation(*winner);
        report.strategy = canonical;
        report.objective = winner_workload;
        report.expected_detection_time = objective(canonical);
        report.feasible = true;
    } else {
        report.objective = std::numeric_limits<double>::infinity();
        report.expected_detection_time = std::numeric_limits<double>::infinity();
        report.feasible = false;
    }
    return report;
}

namespace {

std::vector<double> axis_points(double from, double to, double step) {
    if (!(step > 0.0)) throw std::invalid_argument("sweep: step must be > 0");
    if (from > to) throw std::invalid_argument("sweep: from must be <= to");
    std::vector<double> points;
    for (int i = 0;; ++i) {
        double value = from + i * step;
        if (value > to + step * 1e-9) break;
        points.push_back(value);
    }
    return points;
}

}  // namespace

std::vector<std::pair<double, SolveReport>> sweep_p(const FacilityParams& facility,
                                                    const EpidemicParams& epidemic, double from,
                                                    double to, double step,
                                                    const SearchConfig& search) {
    std::vector<std::pair<double, SolveReport>> rows;
    for (double p : axis_points(from, to, step)) {
        rows.emplace_back(p, solve_model1(facility, epidemic, ModelOneConfig{p}, search));
    }
    return rows;
}

std::vector<std::pair<double, SolveReport>> sweep_alpha(const FacilityParams& facility,
                                                        const EpidemicParams& epidemic,
                                                        double from, double to, double step,
                                                        const SearchConfig& search) {
    std::vector<std::pair<double, SolveReport>> rows;
    for (double alpha : axis_points(from, to, step)) {
        rows.emplace_back(alpha, solve_model2(facility, epidemic, ModelTwoConfig{alpha}, search));
    }
    return rows;
}

}  // namespace rht
