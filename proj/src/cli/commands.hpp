#pragma once

// The three CLI commands, stream-parameterized so tests can drive them
// in-process. Exit codes: 0 success/feasible, 1 usage or config error,
// 2 infeasible instance.

#include <cstdint>
#include <optional>
#include <ostream>
#include <string>

namespace rht::cli {

int cmd_solve(const std::string& config_path, std::optional<std::uint64_t> seed_override,
              const std::optional<std::string>& source_model_override,
              const std::optional<std::string>& weights_override, std::ostream& out,
              std::ostream& err);

int cmd_reproduce(int table, const std::string& out_path, std::ostream& out, std::ostream& err);

int cmd_sweep(const std::string& config_path, const std::string& axis, double from, double to,
              double step, const std::string& out_path,
              const std::optional<std::string>& plot_path, std::ostream& out, std::ostream& err);

}  // namespace rht::cli
