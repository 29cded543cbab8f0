#include "rht/epidemics.hpp"

#include <algorithm>
#include <cmath>
#include <map>
#include <memory>
#include <shared_mutex>
#include <stdexcept>
#include <string>
#include <tuple>
#include <vector>

namespace rht {

namespace {

void require(bool ok, const std::string& message) {
    if (!ok) throw std::invalid_argument(message);
}

}  // namespace

InfectionCurve::InfectionCurve(int m, double kappa, double beta)
    : m_(m), kappa_(kappa), beta_(beta) {
    require(m >= 2, "InfectionCurve: m must be >= 2, got " + std::to_string(m));
    require(std::isfinite(kappa) && kappa >= 0.0, "InfectionCurve: kappa must be >= 0");
    require(std::isfinite(beta) && beta >= 0.0 && beta <= 1.0,
            "InfectionCurve: beta must be in [0, 1]");
    inline_values_[0] = 0.0;  // P_I(0) = 0: only the source is infected on arrival day
    ready_.store(1, std::memory_order_release);
}

double InfectionCurve::value_locked(int d) const {
    return d < kInlineDays ? inline_values_[d] : overflow_[d - kInlineDays];
}

void InfectionCurve::extend_locked(int d) const {
    int ready = ready_.load(std::memory_order_relaxed);
    if (d < ready) return;
    const double contacts_out = kappa_ / (m_ - 1);
    const double contacts_in = kappa_ * (1.0 - 1.0 / (m_ - 1));
    const double direct = std::pow(1.0 - beta_, contacts_out);
    double prev = value_locked(ready - 1);
    for (int day = ready; day <= d; ++day) {
        double escape = direct * std::pow(1.0 - prev * beta_, contacts_in);
        double next = 1.0 - (1.0 - prev) * escape;
        next = std::clamp(next, 0.0, 1.0);
        if (day < kInlineDays) {
            inline_values_[day] = next;
        } else {
            overflow_.push_back(next);
        }
        prev = next;
    }
    ready_.store(d + 1, std::memory_order_release);
}

double InfectionCurve::at(int d) const {
    require(d >= 0, "infection probability: day must be >= 0, got " + std::to_string(d));
    int ready = ready_.load(std::memory_order_acquire);
    if (d < ready && d < kInlineDays) return inline_values_[d];
    std::lock_guard<std::mutex> lock(extend_mutex_);
    extend_locked(d);
    return value_locked(d);
}

double InfectionCurve::interp(double d) const {
    require(std::isfinite(d) && d >= 0.0, "infection probability: day must be >= 0");
    double lo = std::floor(d);
    double hi = std::ceil(d);
    if (lo == hi) return at(static_cast<int>(lo));
    double a = at(static_cast<int>(lo));
    double b = at(static_cast<int>(hi));
    return a + (d - lo) * (b - a);
}

const InfectionCurve& infection_curve(int m, double kappa, double beta) {
    using Key = std::tuple<int, double, double>;
    static std::map<Key, std::unique_ptr<InfectionCurve>> registry;
    static std::shared_mutex registry_mutex;

    Key key{m, kappa, beta};
    {
        std::shared_lock<std::shared_mutex> lock(registry_mutex);
        auto it = registry.find(key);
        if (it != registry.end()) return *it->second;
    }
    std::unique_lock<std::shared_mutex> lock(registry_mutex);
    auto it = registry.find(key);
    if (it == registry.end()) {
        it = registry.emplace(key, std::make_unique<InfectionCurve>(m, kappa, beta)).first;
    }
    return *it->second;
}

double infection_probability(int m, double kappa, double beta, int d) {
    return infection_curve(m, kappa, beta).at(d);
}

double infection_probability_interp(int m, double kappa, double beta, double d) {
    return infection_curve(m, kappa, beta).interp(d);
}

double conditional_detection_probability(const InfectionCurve& curve, double d, double r) {
    require(std::isfinite(r) && r >= 0.0 && r <= curve.m(),
            "group detection: group size must be in [0, m]");
    return 1.0 - std::pow(1.0 - curve.interp(d), r);
}

double group_detection_probability(const InfectionCurve& curve, double d, double r) {
    double source_share = r / curve.m();
    return source_share + (1.0 - source_share) * conditional_detection_probability(curve, d, r);
}

double group_detection_probability(int m, double kappa, double beta, int d, double r) {
    return group_detection_probability(infection_curve(m, kappa, beta), static_cast<double>(d), r);
}

namespace {

struct ScheduledTest {
    double offset;  // days since arrival when this group is tested, in (0, tau]
    double size;
};

// One rotation of the cycle: expected detection time given arrival time t0
// (integer day for the discrete average, any real instant for the continuous
// one). Offsets are counted from t0; tests at times <= t0 wrap around to the
// next cycle (offset d + tau - t0), so every group is tested exactly once
// within (0, tau] days of arrival.
double eval_rotation(const InfectionCurve& curve, int k, const double* sizes, const double* days,
                     int tau, double t0, const EvalOptions& options) {
    ScheduledTest stack_buffer[64];
    std::vector<ScheduledTest> heap_buffer;
    ScheduledTest* tests = stack_buffer;
    if (k > 64) {
        heap_buffer.resize(static_cast<size_t>(k));
        tests = heap_buffer.data();
    }
    for (int i = 0; i < k; ++i) {
        double d = days[i];
        tests[i].offset = d > t0 ? d - t0 : d + tau - t0;
        tests[i].size = sizes[i];
    }
    std::sort(tests, tests + k,
              [](const ScheduledTest& a, const ScheduledTest& b) { return a.offset < b.offset; });

    const double m = curve.m();
    double remaining = 0.0;
    for (int i = 0; i < k; ++i) remaining += sizes[i];

    double expected = 0.0;
    double survive = 1.0;  // probability no earlier test detected
    for (int i = 0; i < k; ++i) {
        const double size = tests[i].size;
        const double source_in_group = size / remaining;  // source among untested residents
        remaining -= size;

        const double p_infected = curve.interp(tests[i].offset);
        const double detect_if_source_elsewhere = 1.0 - std::pow(1.0 - p_infected, size);

        double detect_here = 0.0;
        double survive_factor = 1.0;
        switch (options.source_model) {
            case SourceModel::verbatim: {
                double source_share = size / m;
                double full = source_share + (1.0 - source_share) * detect_if_source_elsewhere;
                detect_here = source_in_group + (1.0 - source_in_group) * full;
                survive_factor = 1.0 - full;
                break;
            }
            case SourceModel::conditional: {
                detect_here =
                    source_in_group + (1.0 - source_in_group) * detect_if_source_elsewhere;
                survive_factor = 1.0 - detect_if_source_elsewhere;
                break;
            }
            case SourceModel::chain: {
                detect_here =
                    source_in_group + (1.0 - source_in_group) * detect_if_source_elsewhere;
                survive_factor = 1.0 - detect_here;
                break;
            }
        }

        double weight = options.weights == WeightConvention::integer ? tests[i].offset
                                                                     : tests[i].offset - 0.5;
        expected += weight * detect_here * survive;
        survive *= survive_factor;
    }
    return expected;
}

void check_schedule(int k, const double* sizes, const double* days, int tau, double m) {
    require(k >= 1, "strategy: k must be >= 1");
    require(tau >= 1, "strategy: tau must be >= 1");
    require(k <= tau, "strategy: k must be <= tau");
    double total = 0.0;
    for (int i = 0; i < k; ++i) {
        require(sizes[i] > 0.0, "strategy: group sizes must be positive");
        total += sizes[i];
        require(days[i] > 0.0 && days[i] <= tau, "strategy: test days must lie in (0, tau]");
        if (i > 0) require(days[i] > days[i - 1], "strategy: test days must be strictly increasing");
    }
    require(std::abs(total - m) <= 1e-6 * std::max(1.0, m),
            "strategy: group sizes must sum to the resident count");
}

double eval_average(const InfectionCurve& curve, int k, const double* sizes, const double* days,
                    int tau, const EvalOptions& options) {
    check_schedule(k, sizes, days, tau, curve.m());
    double total = 0.0;
    for (int t0 = 0; t0 < tau; ++t0) {
        total += eval_rotation(curve, k, sizes, days, tau, t0, options);
    }
    return total / tau;
}

}  // namespace

double expected_detection_time_from(const TestingStrategy& strategy, const InfectionCurve& curve,
                                    int t0, const EvalOptions& options) {
    if (t0 < 0 || t0 >= strategy.tau) {
        throw std::out_of_range("expected_detection_time_from: t0 must be in [0, tau-1], got " +
                                std::to_string(t0));
    }
    int k = strategy.k;
    std::vector<double> sizes(strategy.group_sizes.begin(), strategy.group_sizes.end());
    std::vector<double> days(strategy.test_days.begin(), strategy.test_days.end());
    check_schedule(k, sizes.data(), days.data(), strategy.tau, curve.m());
    return eval_rotation(curve, k, sizes.data(), days.data(), strategy.tau, t0, options);
}

double expected_detection_time(const TestingStrategy& strategy, const InfectionCurve& curve,
                               const EvalOptions& options) {
    std::vector<double> sizes(strategy.group_sizes.begin(), strategy.group_sizes.end());
    std::vector<double> days(strategy.test_days.begin(), strategy.test_days.end());
    return eval_average(curve, strategy.k, sizes.data(), days.data(), strategy.tau, options);
}

double expected_detection_time(const TestingStrategy& strategy, const EpidemicParams& epidemic,
                               const EvalOptions& options) {
    int m = 0;
    for (int g : strategy.group_sizes) m += g;
    return expected_detection_time(strategy, infection_curve(m, epidemic.kappa, epidemic.beta),
                                   options);
}

double expected_detection_time(const RealStrategy& strategy, const InfectionCurve& curve,
                               const EvalOptions& options) {
    return eval_average(curve, strategy.k, strategy.group_sizes.data(), strategy.test_days.data(),
                        strategy.tau, options);
}

double continuous_expected_detection_time(const RealStrategy& strategy,
                                          const InfectionCurve& curve, SourceModel source_model) {
    const int k = strategy.k;
    const int tau = strategy.tau;
    const double* sizes = strategy.group_sizes.data();
    const double* days = strategy.test_days.data();
    check_schedule(k, sizes, days, tau, curve.m());

    EvalOptions options;
    options.source_model = source_model;
    options.weights = WeightConvention::integer;  // weight is the raw offset

    // E(t0) is smooth except where the rotation order changes (t0 crosses a
    // test time) or an offset crosses an integer (interpolation knot of the
    // infection curve). Both happen at t0 = d_i - j, so the knot set is the
    // unit ladder through each test time's fractional part.
    std::vector<double> knots;
    knots.reserve(static_cast<size_t>(k) * (tau + 1) + 2);
    knots.push_back(0.0);
    knots.push_back(static_cast<double>(tau));
    for (int i = 0; i < k; ++i) {
        double fractional = days[i] - std::floor(days[i]);
        double start = fractional == 0.0 ? 1.0 : fractional;
        for (double t = start; t < tau; t += 1.0) knots.push_back(t);
    }
    std::sort(knots.begin(), knots.end());

    // 8-point Gauss-Legendre abscissae/weights on [-1, 1]; the integrand is
    // smooth inside each knot interval, so this resolves the integral to
    // machine precision.
    static constexpr double kNodes[4] = {0.1834346424956498, 0.5255324099163290,
                                         0.7966664774136267, 0.9602898564975363};
    static constexpr double kWeights[4] = {0.3626837833783620, 0.3137066458778873,
                                           0.2223810344533745, 0.1012285362903763};

    double total = 0.0;
    for (size_t s = 0; s + 1 < knots.size(); ++s) {
        double lo = knots[s];
        double hi = knots[s + 1];
        double half = 0.5 * (hi - lo);
        if (half <= 1e-12) continue;  // duplicate knot
        double mid = 0.5 * (lo + hi);
        double acc = 0.0;
        for (int q = 0; q < 4; ++q) {
            acc += kWeights[q] *
                   (eval_rotation(curve, k, sizes, days, tau, mid - half * kNodes[q], options) +
                    eval_rotation(curve, k, sizes, days, tau, mid + half * kNodes[q], options));
        }
        total += acc * half;
    }
    return total / tau;
}

double expected_infections(int m, double kappa, double beta, double d) {
    return 1.0 + (m - 1) * infection_probability_interp(m, kappa, beta, d);
}

double arrival_probability(const EpidemicParams& epidemic, const FacilityParams& facility,
                           double horizon_days) {
    require(std::isfinite(horizon_days) && horizon_days >= 0.0,
            "arrival_probability: horizon must be >= 0");
    double contacts_per_week = facility.n + facility.m * epidemic.visitor_rate / 14.0;
    double exposures = contacts_per_week * horizon_days / 7.0;
    return 1.0 - std::pow(1.0 - epidemic.weekly_incidence, exposures);
}

double background_risk(double weekly_incidence, double horizon_days) {
    require(std::isfinite(horizon_days) && horizon_days >= 0.0,
            "background_risk: horizon must be >= 0");
    return 1.0 - std::pow(1.0 - weekly_incidence, horizon_days / 7.0);
}

RiskAssessment risk_of_infection(const TestingStrategy& strategy, const EpidemicParams& epidemic,
                                 const FacilityParams& facility, const EvalOptions& options) {
    const InfectionCurve& curve = infection_curve(facility.m, epidemic.kappa, epidemic.beta);
    RiskAssessment assessment;
    assessment.expected_detection_time = expected_detection_time(strategy, curve, options);
    assessment.infection_probability_at_detection =
        curve.interp(assessment.expected_detection_time);
    assessment.arrival_probability = arrival_probability(epidemic, facility, strategy.tau);
    assessment.risk = assessment.arrival_probability * assessment.infection_probability_at_detection;
    return assessment;
}

bool risk_within(const RiskAssessment& assessment, const EpidemicParams& epidemic, double alpha,
                 int tau) {
    return assessment.risk <= alpha * background_risk(epidemic.weekly_incidence, tau);
}

}  // namespace rht
