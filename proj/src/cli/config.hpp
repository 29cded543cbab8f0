#pragma once

// Config-file ingestion for the CLI: flat key=value text with bracketed
// section headers, '#'/';' comments, and strict unknown/missing-key
// diagnostics carrying the offending line or key name.

#include <cstdint>
#include <optional>
#include <stdexcept>
#include <string>
#include <vector>

#include "rht/core.hpp"
#include "rht/solver.hpp"

namespace rht::cli {

struct ConfigError : std::runtime_error {
    using std::runtime_error::runtime_error;
};

struct RunConfig {
    FacilityParams facility;
    EpidemicParams epidemic;         // kappa holds the first entry of kappa_list
    std::vector<double> kappa_list;  // one entry normally; several only for sweeps
    int model = 0;                   // 1 or 2
    double p_cap = 0.0;
    double alpha = 0.0;
    SearchConfig search;
    std::string csv_path;   // [output] csv  — optional
    std::string plot_path;  // [output] plot — optional
};

// Parse and validate a config file. `require_model_param` demands the model
// selector plus its parameter (p or alpha) — commands that sweep the model
// parameter pass false. Throws ConfigError with a line/key diagnostic.
RunConfig parse_config_file(const std::string& path, bool require_model_param);

// Parse from an in-memory string (same rules); `origin` names the source in
// diagnostics.
RunConfig parse_config_text(const std::string& text, const std::string& origin,
                            bool require_model_param);

// Flag-value helpers shared by the commands (throw ConfigError on bad names).
SourceModel parse_source_model(const std::string& name);
WeightConvention parse_weights(const std::string& name);

}  // namespace rht::cli
