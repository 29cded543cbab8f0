#include "commands.hpp"

#include <cmath>
#include <sstream>
#include <vector>

#include "config.hpp"
#include "report.hpp"
#include "rht/core.hpp"
#include "rht/epidemics.hpp"
#include "rht/oracle.hpp"
#include "rht/solver.hpp"
#include "rht/tables.hpp"

namespace rht::cli {

namespace {

const char* kSolveCsvHeader = "m,n,p_or_alpha,max_tau,max_group,kappa,k,tau,G,D,objective";

// One CSV row in the shared 11-column layout. Infeasible solves leave the
// strategy columns blank — the blank-row marker.
std::string solve_csv_row(const FacilityParams& facility, double cap, double kappa,
                          const SolveReport& report, double objective_scale) {
    std::ostringstream row;
    row << facility.m << ',' << facility.n << ',' << format_number(cap) << ','
        << facility.max_tau << ',' << facility.max_group << ',' << format_number(kappa) << ',';
    if (report.feasible) {
        const TestingStrategy& s = *report.strategy;
        row << s.k << ',' << s.tau << ',' << format_set(s.group_sizes) << ','
            << format_set(s.test_days) << ',' << format_number(report.objective * objective_scale);
    } else {
        row << ",,,,";
    }
    return row.str();
}

void print_report(const RunConfig& config, const SolveReport& report, std::ostream& out) {
    out << "model " << config.model << "\n";
    out << "facility: m=" << config.facility.m << " n=" << config.facility.n
        << " max_tau=" << config.facility.max_tau << " max_group=" << config.facility.max_group
        << "\n";
    out << "epidemic: beta=" << format_number(config.epidemic.beta)
        << " kappa=" << format_number(config.epidemic.kappa) << "\n";
    if (config.model == 1) {
        out << "cap: p=" << format_number(config.p_cap) << "\n";
    } else {
        out << "cap: alpha=" << format_number(config.alpha) << "\n";
    }
    if (!report.feasible) {
        out << "There is no feasible strategy\n";
        return;
    }
    const TestingStrategy& s = *report.strategy;
    out << "strategy: k=" << s.k << " tau=" << s.tau << " G=" << format_set(s.group_sizes)
        << " D=" << format_set(s.test_days) << "\n";
    out << "objective: " << format_number(report.objective) << "\n";
    out << "expected detection time: " << format_number(report.expected_detection_time)
        << " days\n";
    out << "workload fraction: " << format_number(workload_fraction(s, config.facility)) << "\n";
    if (config.model == 2) {
        RiskAssessment assessment =
            risk_of_infection(s, config.epidemic, config.facility, config.search.eval);
        out << "risk: " << format_number(assessment.risk) << " vs cap "
            << format_number(config.alpha *
                             background_risk(config.epidemic.weekly_incidence, s.tau))
            << "\n";
    }
    out << "search: pairs_explored=" << report.pairs_explored
        << " pairs_pruned=" << report.pairs_pruned << " restarts=" << report.restarts
        << " seed=" << report.seed << "\n";
}

}  // namespace

int cmd_solve(const std::string& config_path, std::optional<std::uint64_t> seed_override,
              const std::optional<std::string>& source_model_override,
              const std::optional<std::string>& weights_override, std::ostream& out,
              std::ostream& err) {
    RunConfig config;
    try {
        config = parse_config_file(config_path, /*require_model_param=*/true);
        if (config.kappa_list.size() > 1) {
            throw ConfigError(config_path +
                              ": key 'kappa': a comma list is only supported by sweep");
        }
        if (seed_override) config.search.rng_seed = *seed_override;
        if (source_model_override) {
            config.search.eval.source_model = parse_source_model(*source_model_override);
        }
        if (weights_override) config.search.eval.weights = parse_weights(*weights_override);
    } catch (const ConfigError& e) {
        err << "config error: " << e.what() << "\n";
        return 1;
    }

    SolveReport report;
    try {
        if (config.model == 1) {
            report = solve_model1(config.facility, config.epidemic, ModelOneConfig{config.p_cap},
                                  config.search);
        } else {
            report = solve_model2(config.facility, config.epidemic, ModelTwoConfig{config.alpha},
                                  config.search);
        }
    } catch (const std::exception& e) {
        err << "config error: " << e.what() << "\n";
        return 1;
    }

    print_report(config, report, out);
    if (!config.csv_path.empty()) {
        double cap = config.model == 1 ? config.p_cap : config.alpha;
        std::string csv = std::string(kSolveCsvHeader) + "\n" +
                          solve_csv_row(config.facility, cap, config.epidemic.kappa, report, 1.0) +
                          "\n";
        try {
            write_file_atomic(config.csv_path, csv);
        } catch (const std::exception& e) {
            err << "output error: " << e.what() << "\n";
            return 1;
        }
    }
    return report.feasible ? 0 : 2;
}

int cmd_reproduce(int table, const std::string& out_path, std::ostream& out, std::ostream& err) {
    if (table != 1 && table != 2) {
        err << "usage error: --table must be 1 or 2\n";
        return 1;
    }
    const std::vector<GoldenRun>& rows = table == 1 ? table1() : table2();
    // The published experiments' evaluation convention, fixed seed set.
    SearchConfig search;
    search.eval = table_eval_options();
    search.rng_seed = 0;

    std::ostringstream csv;
    csv << "run," << kSolveCsvHeader
        << ",golden_k,golden_tau,golden_G,golden_D,golden_objective,diff\n";
    int matches = 0;
    for (const GoldenRun& golden : rows) {
        FacilityParams facility = golden_facility(golden);
        EpidemicParams epidemic = golden_epidemic(golden);
        SolveReport report;
        double scale = 1.0;
        if (table == 1) {
            report = solve_model1(facility, epidemic, ModelOneConfig{golden.cap}, search);
        } else {
            report = solve_model2(facility, epidemic, ModelTwoConfig{golden.cap}, search);
            scale = 100.0;  // the published table lists workload as a percentage
        }
        csv << golden.run << ','
            << solve_csv_row(facility, golden.cap, golden.kappa, report, scale) << ',';
        if (golden.feasible) {
            csv << golden.k << ',' << golden.tau << ',' << format_set(golden.group_sizes) << ','
                << format_set(golden.test_days) << ',' << format_number(golden.value) << ',';
        } else {
            csv << ",,,,,";
        }
        if (golden.feasible && report.feasible) {
            double diff = report.objective * scale - golden.value;
            csv << format_number(diff);
            if (std::abs(diff) <= (table == 1 ? 1e-3 : 5e-3)) ++matches;
        } else if (!golden.feasible && !report.feasible) {
            csv << "";
            ++matches;
        } else {
            csv << "MISMATCH";
        }
        csv << '\n';
    }

    try {
        write_file_atomic(out_path, csv.str());
    } catch (const std::exception& e) {
        err << "output error: " << e.what() << "\n";
        return 1;
    }
    out << "table " << table << ": " << rows.size() << " runs, " << matches
        << " within tolerance, written to " << out_path << "\n";
    return 0;
}

int cmd_sweep(const std::string& config_path, const std::string& axis, double from, double to,
              double step, const std::string& out_path,
              const std::optional<std::string>& plot_path, std::ostream& out, std::ostream& err) {
    RunConfig config;
    int model = 0;
    try {
        config = parse_config_file(config_path, /*require_model_param=*/false);
        if (axis == "p") {
            model = 1;
        } else if (axis == "alpha") {
            model = 2;
        } else {
            throw ConfigError("--axis must be p or alpha, got '" + axis + "'");
        }
        if (config.model != 0 && config.model != model) {
            throw ConfigError(config_path + ": [model] selects model " +
                              std::to_string(config.model) + " but --axis " + axis +
                              " sweeps model " + std::to_string(model));
        }
        if (!(step > 0.0)) throw ConfigError("--step must be > 0");
        if (!(from < to)) throw ConfigError("--from must be < --to");
        if (step > to - from) throw ConfigError("--step exceeds the sweep range");
    } catch (const ConfigError& e) {
        err << "config error: " << e.what() << "\n";
        return 1;
    }

    std::ostringstream csv;
    csv << kSolveCsvHeader << '\n';
    std::vector<PlotSeries> series;
    try {
        for (double kappa : config.kappa_list) {
            EpidemicParams epidemic = config.epidemic;
            epidemic.kappa = kappa;
            auto points = model == 1 ? sweep_p(config.facility, epidemic, from, to, step,
                                               config.search)
                                     : sweep_alpha(config.facility, epidemic, from, to, step,
                                                   config.search);
            PlotSeries plot_series;
            {
                std::ostringstream label;
                label << "kappa=" << kappa;
                plot_series.label = label.str();
            }
            long infeasible = 0;
            for (const auto& [value, report] : points) {
                csv << solve_csv_row(config.facility, value, kappa, report, 1.0) << '\n';
                if (report.feasible) {
                    // Plots follow the published figures: percent for p and for
                    // workload, raw days for detection time, dimensionless alpha.
                    double x = model == 1 ? value * 100.0 : value;
                    double y = model == 1 ? report.objective : report.objective * 100.0;
                    plot_series.points.emplace_back(x, y);
                } else {
                    ++infeasible;
                }
            }
            series.push_back(std::move(plot_series));
            out << "kappa=" << kappa << ": " << points.size() << " points, " << infeasible
                << " infeasible\n";
        }
    } catch (const std::exception& e) {
        err << "config error: " << e.what() << "\n";
        return 1;
    }

    try {
        write_file_atomic(out_path, csv.str());
        std::optional<std::string> plot_target = plot_path;
        if (!plot_target && !config.plot_path.empty()) plot_target = config.plot_path;
        if (plot_target) {
            std::string title = model == 1 ? "Expected detection time vs p"
                                           : "Minimum workload vs alpha";
            std::string x_label = model == 1 ? "p (%)" : "alpha";
            std::string y_label = model == 1 ? "expected detection time (days)" : "workload (%)";
            write_file_atomic(*plot_target, render_line_plot(title, x_label, y_label, series));
        }
    } catch (const std::exception& e) {
        err << "output error: " << e.what() << "\n";
        return 1;
    }
    return 0;
}

}  // namespace rht::cli
