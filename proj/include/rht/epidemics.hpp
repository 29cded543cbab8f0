#pragma once

// The probabilistic core: per-resident infection probability (memoized
// recursion), group detection probability, expected detection time, expected
// infections, and the background/arrival risk used by Model 2.

#include <array>
#include <atomic>
#include <deque>
#include <mutex>

#include "rht/core.hpp"

namespace rht {

// How the per-test detection bracket and the survival product compose inside
// the expected-detection-time sum.
//
//   verbatim    — the equation as printed: bracket uses the full group
//                 detection probability Pr (which already contains an r/m
//                 hit-the-source term) on top of the conditional source factor
//                 x, and the survival product multiplies (1 - Pr). The two
//                 source terms overlap, so detection mass is over-counted.
//   conditional — strips the r/m term from Pr inside both the bracket and the
//                 survival product (Pr -> 1 - (1-P_I)^r).
//   chain       — sequential conditioning: same bracket as `conditional`, but
//                 each test survives with (1 - bracket), so the detection
//                 masses telescope to exactly 1. This is the only composition
//                 whose beta->0 limit collapses equal-tau strategies, and the
//                 one that reproduces the published k=2 reference values.
enum class SourceModel { verbatim, conditional, chain };

// Day-weight convention for a detection on day-offset o: `integer` weights the
// detection at o (end of day), `midpoint` at o - 0.5 (halfway through the
// day). k=1 closed form: (tau+1)/2 under integer, tau/2 under midpoint.
enum class WeightConvention { integer, midpoint };

struct EvalOptions {
    SourceModel source_model = SourceModel::verbatim;
    WeightConvention weights = WeightConvention::integer;
};

// Convention that reproduces the published reference tables (see README).
inline EvalOptions table_eval_options() {
    return EvalOptions{SourceModel::chain, WeightConvention::midpoint};
}

// Memoized P_I(d) table for fixed (m, kappa, beta), per the recursion
//   P_I(d) = 1 - (1-P_I(d-1)) * [(1-beta)^{kappa/(m-1)}
//                                * (1 - P_I(d-1)*beta)^{kappa(1-1/(m-1))}]
// with P_I(0) = 0. Concurrency: the first kInlineDays entries live in fixed
// storage and are readable lock-free once published; deeper entries and all
// extension go through a mutex.
class InfectionCurve {
  public:
    // Throws std::invalid_argument when m < 2 (the recursion divides by m-1),
    // kappa < 0, or beta outside [0,1].
    InfectionCurve(int m, double kappa, double beta);

    InfectionCurve(const InfectionCurve&) = delete;
    InfectionCurve& operator=(const InfectionCurve&) = delete;

    double at(int d) const;        // P_I(d), d >= 0
    double interp(double d) const; // linear interpolation between integer days

    int m() const { return m_; }
    double kappa() const { return kappa_; }
    double beta() const { return beta_; }

  private:
    static constexpr int kInlineDays = 64;

    double value_locked(int d) const;  // requires extend_mutex_ held, d < ready_
    void extend_locked(int d) const;   // requires extend_mutex_ held

    int m_;
    double kappa_;
    double beta_;
    mutable std::array<double, kInlineDays> inline_values_{};  // days [0, kInlineDays)
    mutable std::deque<double> overflow_;                      // days >= kInlineDays
    mutable std::atomic<int> ready_{0};                        // entries [0, ready_) published
    mutable std::mutex extend_mutex_;
};

// Process-wide memo keyed on (m, kappa, beta); the returned reference stays
// valid for the program lifetime. Thread-safe.
const InfectionCurve& infection_curve(int m, double kappa, double beta);

// P_I(d) via the process-wide memo. m < 2 is rejected.
double infection_probability(int m, double kappa, double beta, int d);

// Linear interpolation of P_I between floor(d) and ceil(d).
double infection_probability_interp(int m, double kappa, double beta, double d);

// Eq. for the probability that testing a group of size r on day-offset d
// detects the infection: r/m + (1 - r/m) * (1 - (1-P_I(d))^r).
// r > m or r < 0 is rejected. Real-valued r is accepted (continuous-space
// checks feed fractional group sizes into the exponent).
double group_detection_probability(int m, double kappa, double beta, int d, double r);

// Real-day variants used by the continuous-space evaluator.
double group_detection_probability(const InfectionCurve& curve, double d, double r);
double conditional_detection_probability(const InfectionCurve& curve, double d, double r);

// Expected detection time given the infection arrived on day t0 in [0, tau-1].
// Days d_i <= t0 wrap circularly to d_i + tau (the cycle is circular), groups
// following their days; the conditional source factor x_i is recomputed in the
// rotated order.
double expected_detection_time_from(const TestingStrategy& strategy, const InfectionCurve& curve,
                                    int t0, const EvalOptions& options = {});

// Model 1 objective: average of expected_detection_time_from over t0 = 0..tau-1.
double expected_detection_time(const TestingStrategy& strategy, const InfectionCurve& curve,
                               const EvalOptions& options = {});
double expected_detection_time(const TestingStrategy& strategy, const EpidemicParams& epidemic,
                               const EvalOptions& options = {});

// Continuous-space generalization: real group sizes enter the detection
// probability exponents, real days are handled by interpolation of P_I.
double expected_detection_time(const RealStrategy& strategy, const InfectionCurve& curve,
                               const EvalOptions& options = {});

// Fully continuous objective: the arrival instant is averaged over the whole
// cycle (the continuum limit of the day-indexed average) instead of the tau
// integer arrival days. This is the right comparison for real-day schedules:
// under the day-indexed average any schedule gains by shifting a test
// epsilon earlier (the detection weight drops with no compensating loss), so
// no interior point can be a local optimum. The integral is evaluated
// exactly via per-segment Gauss-Legendre quadrature between the knots where
// the integrand changes shape. The weight convention does not apply (the
// detection weight is the raw offset); the source model is honored.
double continuous_expected_detection_time(const RealStrategy& strategy,
                                          const InfectionCurve& curve,
                                          SourceModel source_model = SourceModel::chain);

// 1 + (m-1) * P_I(d): expected number of infected residents d days after arrival.
double expected_infections(int m, double kappa, double beta, double d);

// 1 - (1 - weekly_incidence)^{(n + m*visitor_rate/14) * horizon_days/7}
double arrival_probability(const EpidemicParams& epidemic, const FacilityParams& facility,
                           double horizon_days);

// Community incidence scaled to a horizon: 1 - (1 - weekly_incidence)^{days/7}.
double background_risk(double weekly_incidence, double horizon_days);

struct RiskAssessment {
    double expected_detection_time = 0.0;             // tau-bar
    double infection_probability_at_detection = 0.0;  // P_I interpolated at tau-bar
    double arrival_probability = 0.0;                 // over horizon tau
    double risk = 0.0;                                // arrival * P_I(tau-bar)
};

// Default composition: risk = arrival_probability(tau) * P_I_interp(tau-bar).
RiskAssessment risk_of_infection(const TestingStrategy& strategy, const EpidemicParams& epidemic,
                                 const FacilityParams& facility,
                                 const EvalOptions& options = {});

// Model 2 constraint check: risk <= alpha * background(weekly_incidence, tau).
bool risk_within(const RiskAssessment& assessment, const EpidemicParams& epidemic, double alpha,
                 int tau);

}  // namespace rht
