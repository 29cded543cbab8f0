#include <iostream>
#include <optional>
#include <string>

#include <CLI11.hpp>

#include "commands.hpp"

int main(int argc, char** argv) {
    CLI::App app{"Optimal group-testing schedules for closed residential facilities"};
    app.require_subcommand(1);

    // solve
    auto* solve = app.add_subcommand("solve", "Solve the configured model");
    std::string solve_config;
    solve->add_option("--config", solve_config, "Config file path")->required();
    std::optional<std::uint64_t> seed;
    solve->add_option("--seed", seed, "Override the search seed");
    std::optional<std::string> source_model;
    solve->add_option("--source-model", source_model,
                      "Objective evaluation variant")
        ->check(CLI::IsMember({"verbatim", "conditional", "chain"}));
    std::optional<std::string> weights;
    solve->add_option("--weights", weights, "Detection-day weight convention")
        ->check(CLI::IsMember({"integer", "midpoint"}));

    // reproduce
    auto* reproduce = app.add_subcommand("reproduce", "Re-run the published reference tables");
    int table = 0;
    reproduce->add_option("--table", table, "Reference table (1 or 2)")->required();
    std::string reproduce_out;
    reproduce->add_option("--out", reproduce_out, "Output CSV path")->required();

    // sweep
    auto* sweep = app.add_subcommand("sweep", "Sweep the model cap over a range");
    std::string sweep_config, axis, sweep_out;
    double from = 0.0, to = 0.0, sweep_step = 0.0;
    std::optional<std::string> plot;
    sweep->add_option("--config", sweep_config, "Config file path")->required();
    sweep->add_option("--axis", axis, "Swept parameter: p or alpha")->required();
    sweep->add_option("--from", from, "Range start")->required();
    sweep->add_option("--to", to, "Range end")->required();
    sweep->add_option("--step", sweep_step, "Range increment")->required();
    sweep->add_option("--out", sweep_out, "Output CSV path")->required();
    sweep->add_option("--plot", plot, "Optional SVG plot path");

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        int code = app.exit(e);
        return code == 0 ? 0 : 1;  // usage errors are exit 1 by contract
    }

    if (solve->parsed()) {
        return rht::cli::cmd_solve(solve_config, seed, source_model, weights, std::cout,
                                   std::cerr);
    }
    if (reproduce->parsed()) {
        return rht::cli::cmd_reproduce(table, reproduce_out, std::cout, std::cerr);
    }
    return rht::cli::cmd_sweep(sweep_config, axis, from, to, sweep_step, sweep_out, plot,
                               std::cout, std::cerr);
}
