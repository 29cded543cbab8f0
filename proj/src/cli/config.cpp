#include "config.hpp"

#include <algorithm>
#include <cctype>
#include <fstream>
#include <set>
#include <sstream>

namespace rht::cli {

namespace {

std::string trim(const std::string& s) {
    size_t begin = s.find_first_not_of(" \t\r");
    if (begin == std::string::npos) return "";
    size_t end = s.find_last_not_of(" \t\r");
    return s.substr(begin, end - begin + 1);
}

[[noreturn]] void fail(const std::string& origin, int line, const std::string& message) {
    throw ConfigError(origin + ":" + std::to_string(line) + ": " + message);
}

double parse_double(const std::string& origin, int line, const std::string& key,
                    const std::string& value) {
    try {
        size_t used = 0;
        double parsed = std::stod(value, &used);
        if (used != value.size()) throw std::invalid_argument("trailing characters");
        return parsed;
    } catch (const std::exception&) {
        fail(origin, line, "key '" + key + "': expected a number, got '" + value + "'");
    }
}

long parse_integer(const std::string& origin, int line, const std::string& key,
                   const std::string& value) {
    try {
        size_t used = 0;
        long parsed = std::stol(value, &used);
        if (used != value.size()) throw std::invalid_argument("trailing characters");
        return parsed;
    } catch (const std::exception&) {
        fail(origin, line, "key '" + key + "': expected an integer, got '" + value + "'");
    }
}

bool parse_bool(const std::string& origin, int line, const std::string& key,
                const std::string& value) {
    if (value == "true" || value == "1") return true;
    if (value == "false" || value == "0") return false;
    fail(origin, line, "key '" + key + "': expected true/false, got '" + value + "'");
}

std::vector<double> parse_double_list(const std::string& origin, int line, const std::string& key,
                                      const std::string& value) {
    std::vector<double> values;
    std::stringstream stream(value);
    std::string item;
    while (std::getline(stream, item, ',')) {
        item = trim(item);
        if (item.empty()) fail(origin, line, "key '" + key + "': empty list entry");
        values.push_back(parse_double(origin, line, key, item));
    }
    if (values.empty()) fail(origin, line, "key '" + key + "': expected at least one number");
    return values;
}

}  // namespace

SourceModel parse_source_model(const std::string& name) {
    if (name == "verbatim") return SourceModel::verbatim;
    if (name == "conditional") return SourceModel::conditional;
    if (name == "chain") return SourceModel::chain;
    throw ConfigError("key 'source_model': expected verbatim|conditional|chain, got '" + name +
                      "'");
}

WeightConvention parse_weights(const std::string& name) {
    if (name == "integer") return WeightConvention::integer;
    if (name == "midpoint") return WeightConvention::midpoint;
    throw ConfigError("key 'weights': expected integer|midpoint, got '" + name + "'");
}

RunConfig parse_config_text(const std::string& text, const std::string& origin,
                            bool require_model_param) {
    RunConfig config;
    std::set<std::string> seen;
    std::string section;

    std::stringstream stream(text);
    std::string raw;
    int line = 0;
    while (std::getline(stream, raw)) {
        ++line;
        // '#' and ';' start comments anywhere on the line.
        size_t comment = raw.find_first_of("#;");
        if (comment != std::string::npos) raw.erase(comment);
        std::string text_line = trim(raw);
        if (text_line.empty()) continue;

        if (text_line.front() == '[') {
            if (text_line.back() != ']') fail(origin, line, "unterminated section header");
            section = trim(text_line.substr(1, text_line.size() - 2));
            static const std::set<std::string> known_sections = {"facility", "epidemic", "model",
                                                                 "search", "output"};
            if (!known_sections.count(section)) {
                fail(origin, line, "unknown section '[" + section + "]'");
            }
            continue;
        }

        size_t equals = text_line.find('=');
        if (equals == std::string::npos) fail(origin, line, "expected key = value");
        std::string key = trim(text_line.substr(0, equals));
        std::string value = trim(text_line.substr(equals + 1));
        if (key.empty()) fail(origin, line, "empty key");
        if (value.empty()) fail(origin, line, "key '" + key + "': empty value");
        if (section.empty()) fail(origin, line, "key '" + key + "' appears before any section");

        std::string qualified = section + "." + key;
        if (seen.count(qualified)) fail(origin, line, "duplicate key '" + qualified + "'");
        seen.insert(qualified);

        if (section == "facility") {
            if (key == "m") {
                config.facility.m = static_cast<int>(parse_integer(origin, line, key, value));
            } else if (key == "n") {
                config.facility.n = static_cast<int>(parse_integer(origin, line, key, value));
            } else if (key == "max_tau") {
                config.facility.max_tau =
                    static_cast<int>(parse_integer(origin, line, key, value));
            } else if (key == "max_group") {
                config.facility.max_group =
                    static_cast<int>(parse_integer(origin, line, key, value));
            } else if (key == "prep_time") {
                config.facility.prep_time = parse_double(origin, line, key, value);
            } else if (key == "test_time") {
                config.facility.test_time = parse_double(origin, line, key, value);
            } else if (key == "day_length") {
                config.facility.day_length = parse_double(origin, line, key, value);
            } else {
                fail(origin, line, "unknown key '" + key + "' in [facility]");
            }
        } else if (section == "epidemic") {
            if (key == "beta") {
                config.epidemic.beta = parse_double(origin, line, key, value);
            } else if (key == "kappa") {
                config.kappa_list = parse_double_list(origin, line, key, value);
                config.epidemic.kappa = config.kappa_list.front();
            } else if (key == "weekly_incidence") {
                config.epidemic.weekly_incidence = parse_double(origin, line, key, value);
            } else if (key == "visitor_rate") {
                config.epidemic.visitor_rate = parse_double(origin, line, key, value);
            } else {
                fail(origin, line, "unknown key '" + key + "' in [epidemic]");
            }
        } else if (section == "model") {
            if (key == "model") {
                long selector = parse_integer(origin, line, key, value);
                if (selector != 1 && selector != 2) {
                    fail(origin, line, "key 'model': expected 1 or 2, got '" + value + "'");
                }
                config.model = static_cast<int>(selector);
            } else if (key == "p") {
                config.p_cap = parse_double(origin, line, key, value);
            } else if (key == "alpha") {
                config.alpha = parse_double(origin, line, key, value);
            } else {
                fail(origin, line, "unknown key '" + key + "' in [model]");
            }
        } else if (section == "search") {
            if (key == "restarts") {
                config.search.restarts = static_cast<int>(parse_integer(origin, line, key, value));
            } else if (key == "max_iterations") {
                config.search.max_iterations_override =
                    static_cast<int>(parse_integer(origin, line, key, value));
            } else if (key == "cooling_rate") {
                config.search.cooling_rate = parse_double(origin, line, key, value);
            } else if (key == "seed") {
                config.search.rng_seed =
                    static_cast<std::uint64_t>(parse_integer(origin, line, key, value));
            } else if (key == "prune") {
                config.search.prune = parse_bool(origin, line, key, value);
            } else if (key == "source_model") {
                try {
                    config.search.eval.source_model = parse_source_model(value);
                } catch (const ConfigError& e) {
                    fail(origin, line, e.what());
                }
            } else if (key == "weights") {
                try {
                    config.search.eval.weights = parse_weights(value);
                } catch (const ConfigError& e) {
                    fail(origin, line, e.what());
                }
            } else {
                fail(origin, line, "unknown key '" + key + "' in [search]");
            }
        } else if (section == "output") {
            if (key == "csv") {
                config.csv_path = value;
            } else if (key == "plot") {
                config.plot_path = value;
            } else {
                fail(origin, line, "unknown key '" + key + "' in [output]");
            }
        }
    }

    // Presence checks: name the missing key exactly.
    auto require_key = [&](const char* qualified) {
        if (!seen.count(qualified)) {
            throw ConfigError(origin + ": missing required key '" + qualified + "'");
        }
    };
    require_key("facility.m");
    require_key("facility.n");
    require_key("facility.max_tau");
    require_key("facility.max_group");
    require_key("epidemic.beta");
    require_key("epidemic.kappa");
    if (require_model_param) {
        require_key("model.model");
        if (config.model == 1) require_key("model.p");
        if (config.model == 2) {
            require_key("model.alpha");
            require_key("epidemic.weekly_incidence");
        }
    }

    std::string violations;
    for (const auto& v : validate(config.facility)) {
        violations += (violations.empty() ? "" : "; ") + v;
    }
    for (const auto& v : validate(config.epidemic)) {
        violations += (violations.empty() ? "" : "; ") + v;
    }
    for (double kappa : config.kappa_list) {
        if (kappa < 0.0) violations += (violations.empty() ? "" : "; ") + std::string("epidemic: kappa must be >= 0");
    }
    if (!violations.empty()) throw ConfigError(origin + ": " + violations);
    return config;
}

RunConfig parse_config_file(const std::string& path, bool require_model_param) {
    std::ifstream input(path);
    if (!input) throw ConfigError("cannot read config file '" + path + "'");
    std::stringstream buffer;
    buffer << input.rdbuf();
    return parse_config_text(buffer.str(), path, require_model_param);
}

}  // namespace rht::cli
