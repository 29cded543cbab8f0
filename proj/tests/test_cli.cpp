#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <unistd.h>

#include <algorithm>
#include <cstdlib>
#include <filesystem>
#include <fstream>
#include <sstream>
#include <string>

#include <sys/wait.h>

#include "../src/cli/commands.hpp"
#include "../src/cli/config.hpp"
#include "../src/cli/report.hpp"
#include "rht/solver.hpp"

using namespace rht;
using namespace rht::cli;
namespace fs = std::filesystem;

namespace {

fs::path test_dir() {
    static fs::path dir = [] {
        fs::path d = fs::temp_directory_path() / ("rht_cli_test_" + std::to_string(::getpid()));
        fs::create_directories(d);
        return d;
    }();
    return dir;
}

std::string write_config(const std::string& name, const std::string& text) {
    fs::path path = test_dir() / name;
    std::ofstream out(path);
    out << text;
    return path.string();
}

std::string read_file(const std::string& path) {
    std::ifstream in(path, std::ios::binary);
    std::stringstream buffer;
    buffer << in.rdbuf();
    return buffer.str();
}

std::string parse_error(const std::string& text, bool require_model_param = true) {
    try {
        parse_config_text(text, "test", require_model_param);
    } catch (const ConfigError& e) {
        return e.what();
    }
    return "";
}

bool contains(const std::string& haystack, const std::string& needle) {
    return haystack.find(needle) != std::string::npos;
}

const char* kSmallModel1 = R"(
[facility]
m = 12
n = 3
max_tau = 4
max_group = 6

[epidemic]
beta = 0.1
kappa = 5

[model]
model = 1
p = 0.4
)";

}  // namespace

TEST_CASE("config parser round-trips every section and key") {
    std::string text = R"(
# full-width comment
[facility]
m = 30          ; trailing comment
n = 5
max_tau = 7
max_group = 20
prep_time = 200
test_time = 10
day_length = 400

[epidemic]
beta = 0.05
kappa = 15
weekly_incidence = 0.006
visitor_rate = 1.5

[model]
model = 2
alpha = 0.25
p = 0.2

[search]
restarts = 9
max_iterations = 123
cooling_rate = 0.8
seed = 42
prune = false
source_model = chain
weights = midpoint

[output]
csv = out.csv
plot = out.svg
)";
    RunConfig config = parse_config_text(text, "test", true);
    CHECK(config.facility.m == 30);
    CHECK(config.facility.n == 5);
    CHECK(config.facility.max_tau == 7);
    CHECK(config.facility.max_group == 20);
    CHECK(config.facility.prep_time == 200.0);
    CHECK(config.facility.test_time == 10.0);
    CHECK(config.facility.day_length == 400.0);
    CHECK(config.epidemic.beta == 0.05);
    CHECK(config.epidemic.kappa == 15.0);
    CHECK(config.epidemic.weekly_incidence == 0.006);
    CHECK(config.epidemic.visitor_rate == 1.5);
    CHECK(config.model == 2);
    CHECK(config.alpha == 0.25);
    CHECK(config.p_cap == 0.2);
    CHECK(config.search.restarts == 9);
    CHECK(config.search.max_iterations_override == 123);
    CHECK(config.search.cooling_rate == 0.8);
    CHECK(config.search.rng_seed == 42);
    CHECK_FALSE(config.search.prune);
    CHECK(config.search.eval.source_model == SourceModel::chain);
    CHECK(config.search.eval.weights == WeightConvention::midpoint);
    CHECK(config.csv_path == "out.csv");
    CHECK(config.plot_path == "out.svg");
    CHECK(config.kappa_list.size() == 1);
}

TEST_CASE("config parser reports precise diagnostics") {
    std::string base = std::string(kSmallModel1);

    std::string msg = parse_error(base + "\n[epidemic]\n");
    CHECK(contains(msg, "duplicate") == false);  // reopening a section is fine
    CHECK(msg == "");

    msg = parse_error("[facility]\nbogus = 3\n");
    CHECK(contains(msg, "test:2"));
    CHECK(contains(msg, "unknown key 'bogus' in [facility]"));

    msg = parse_error("m = 5\n");
    CHECK(contains(msg, "before any section"));

    msg = parse_error("[nowhere]\n");
    CHECK(contains(msg, "unknown section '[nowhere]'"));

    msg = parse_error("[facility]\nm 5\n");
    CHECK(contains(msg, "expected key = value"));

    msg = parse_error("[facility]\nm = \n");
    CHECK(contains(msg, "empty value"));

    msg = parse_error("[facility]\nm = 5\nm = 6\n");
    CHECK(contains(msg, "test:3"));
    CHECK(contains(msg, "duplicate key 'facility.m'"));

    msg = parse_error("[facility]\nmax_tau = 2.5\n");
    CHECK(contains(msg, "expected an integer"));

    msg = parse_error("[epidemic]\nbeta = fast\n");
    CHECK(contains(msg, "expected a number"));

    // Missing required keys are named in full.
    std::string no_beta = base;
    size_t cut = no_beta.find("beta = 0.1\n");
    REQUIRE(cut != std::string::npos);
    no_beta.erase(cut, std::string("beta = 0.1\n").size());
    msg = parse_error(no_beta);
    CHECK(contains(msg, "missing required key 'epidemic.beta'"));

    std::string no_p = base;
    cut = no_p.find("p = 0.4\n");
    REQUIRE(cut != std::string::npos);
    no_p.erase(cut, std::string("p = 0.4\n").size());
    msg = parse_error(no_p);
    CHECK(contains(msg, "missing required key 'model.p'"));
    CHECK(parse_error(no_p, /*require_model_param=*/false) == "");

    msg = parse_error("[model]\nmodel = 3\n");
    CHECK(contains(msg, "expected 1 or 2"));

    // Model 2 additionally needs the community incidence.
    std::string model2 = base;
    model2.replace(model2.find("model = 1"), 9, "model = 2");
    model2.replace(model2.find("p = 0.4"), 7, "alpha = 0.4");
    msg = parse_error(model2);
    CHECK(contains(msg, "missing required key 'epidemic.weekly_incidence'"));

    // Domain validation still applies after parsing.
    std::string bad_m = base;
    bad_m.replace(bad_m.find("m = 12"), 6, "m = 0");
    CHECK(parse_error(bad_m) != "");
}

TEST_CASE("evaluation variant names parse strictly") {
    CHECK(parse_source_model("verbatim") == SourceModel::verbatim);
    CHECK(parse_source_model("conditional") == SourceModel::conditional);
    CHECK(parse_source_model("chain") == SourceModel::chain);
    CHECK_THROWS_AS(parse_source_model("classic"), ConfigError);
    CHECK(parse_weights("integer") == WeightConvention::integer);
    CHECK(parse_weights("midpoint") == WeightConvention::midpoint);
    CHECK_THROWS_AS(parse_weights("half"), ConfigError);
}

TEST_CASE("report formatting is fixed-precision and stable") {
    CHECK(format_number(0.1375) == "0.1375");
    CHECK(format_number(2.0) == "2.0000");
    CHECK(format_number(1.23456) == "1.2346");
    CHECK(format_number(-0.5) == "-0.5000");
    CHECK(format_set({12, 13, 12, 13}) == "{12;13;12;13}");
    CHECK(format_set({7}) == "{7}");
    CHECK(format_set({}) == "{}");
}

TEST_CASE("atomic writes leave no temp file behind") {
    fs::path target = test_dir() / "atomic.txt";
    write_file_atomic(target.string(), "first\n");
    CHECK(read_file(target.string()) == "first\n");
    write_file_atomic(target.string(), "second\n");
    CHECK(read_file(target.string()) == "second\n");
    CHECK_FALSE(fs::exists(target.string() + ".tmp"));
}

TEST_CASE("the line plot is a self-contained svg") {
    PlotSeries series;
    series.label = "kappa=9";
    series.points = {{5.0, 3.2}, {10.0, 2.1}, {15.0, 1.4}};
    std::string svg = render_line_plot("title text", "x axis", "y axis", {series});
    CHECK(contains(svg, "<svg"));
    CHECK(contains(svg, "</svg>"));
    CHECK(contains(svg, "polyline"));
    CHECK(contains(svg, "kappa=9"));
    CHECK(contains(svg, "title text"));

    std::string empty = render_line_plot("t", "x", "y", {});
    CHECK(contains(empty, "<svg"));
    CHECK(contains(empty, "</svg>"));
}

TEST_CASE("solve command reports, writes csv, and is byte-deterministic") {
    fs::path csv_path = test_dir() / "solve.csv";
    std::string config = std::string(kSmallModel1) + "\n[output]\ncsv = " + csv_path.string() +
                         "\n";
    std::string path = write_config("solve.cfg", config);

    std::ostringstream out1, err1;
    int code = cmd_solve(path, std::nullopt, std::nullopt, std::nullopt, out1, err1);
    CHECK(code == 0);
    CHECK(err1.str().empty());
    CHECK(contains(out1.str(), "model 1"));
    CHECK(contains(out1.str(), "strategy: k="));
    CHECK(contains(out1.str(), "objective: "));
    CHECK(contains(out1.str(), "workload fraction: "));
    std::string csv1 = read_file(csv_path.string());
    CHECK(contains(csv1, "m,n,p_or_alpha,max_tau,max_group,kappa,k,tau,G,D,objective\n"));
    CHECK(contains(csv1, "12,3,0.4000,4,6,5.0000,"));

    std::ostringstream out2, err2;
    CHECK(cmd_solve(path, std::nullopt, std::nullopt, std::nullopt, out2, err2) == 0);
    CHECK(out2.str() == out1.str());
    CHECK(read_file(csv_path.string()) == csv1);

    // Overrides are accepted and keep the run deterministic.
    std::ostringstream out3, err3;
    CHECK(cmd_solve(path, 7, std::string("chain"), std::string("midpoint"), out3, err3) == 0);
    CHECK(contains(out3.str(), "seed=7"));
}

TEST_CASE("solve command distinguishes config errors from infeasibility") {
    std::ostringstream out, err;
    CHECK(cmd_solve((test_dir() / "missing.cfg").string(), std::nullopt, std::nullopt,
                    std::nullopt, out, err) == 1);
    CHECK(contains(err.str(), "cannot read config file"));

    // kappa comma lists belong to sweep only.
    std::string listy = std::string(kSmallModel1);
    listy.replace(listy.find("kappa = 5"), 9, "kappa = 5,9");
    std::string listy_path = write_config("listy.cfg", listy);
    std::ostringstream out2, err2;
    CHECK(cmd_solve(listy_path, std::nullopt, std::nullopt, std::nullopt, out2, err2) == 1);
    CHECK(contains(err2.str(), "comma list"));

    // A bad override name is a config error too.
    std::string good_path = write_config("good.cfg", kSmallModel1);
    std::ostringstream out3, err3;
    CHECK(cmd_solve(good_path, std::nullopt, std::string("classic"), std::nullopt, out3, err3) ==
          1);
    CHECK(contains(err3.str(), "source_model"));

    // Infeasible instances exit 2 and leave the strategy columns blank.
    fs::path csv_path = test_dir() / "infeasible.csv";
    std::string tight = std::string(kSmallModel1) + "\n[output]\ncsv = " + csv_path.string() +
                        "\n";
    tight.replace(tight.find("p = 0.4"), 7, "p = 0.001");
    std::string tight_path = write_config("tight.cfg", tight);
    std::ostringstream out4, err4;
    CHECK(cmd_solve(tight_path, std::nullopt, std::nullopt, std::nullopt, out4, err4) == 2);
    CHECK(contains(out4.str(), "There is no feasible strategy"));
    std::string csv = read_file(csv_path.string());
    CHECK(contains(csv, "12,3,0.0010,4,6,5.0000,,,,,\n"));
}

TEST_CASE("reproduce command validates the table selector") {
    std::ostringstream out, err;
    CHECK(cmd_reproduce(3, (test_dir() / "t3.csv").string(), out, err) == 1);
    CHECK(contains(err.str(), "--table must be 1 or 2"));
    CHECK_FALSE(fs::exists(test_dir() / "t3.csv"));
}

TEST_CASE("sweep command emits one csv row per kappa and axis point") {
    std::string config = R"(
[facility]
m = 12
n = 3
max_tau = 4
max_group = 6

[epidemic]
beta = 0.1
kappa = 3, 6
)";
    std::string path = write_config("sweep.cfg", config);
    fs::path csv_path = test_dir() / "sweep.csv";
    fs::path svg_path = test_dir() / "sweep.svg";

    std::ostringstream out, err;
    int code = cmd_sweep(path, "p", 0.2, 0.5, 0.1, csv_path.string(), svg_path.string(), out,
                         err);
    CHECK(code == 0);
    CHECK(err.str().empty());
    CHECK(contains(out.str(), "kappa=3: 4 points"));
    CHECK(contains(out.str(), "kappa=6: 4 points"));

    std::string csv = read_file(csv_path.string());
    std::stringstream lines(csv);
    std::string line;
    int rows = 0;
    while (std::getline(lines, line)) {
        if (line.empty()) continue;
        CHECK(std::count(line.begin(), line.end(), ',') == 10);  // 11 columns
        ++rows;
    }
    CHECK(rows == 1 + 2 * 4);

    std::string svg = read_file(svg_path.string());
    CHECK(contains(svg, "<svg"));
    CHECK(contains(svg, "kappa=3"));
    CHECK(contains(svg, "kappa=6"));
}

TEST_CASE("sweep command rejects inconsistent requests") {
    std::string base = R"(
[facility]
m = 12
n = 3
max_tau = 4
max_group = 6

[epidemic]
beta = 0.1
kappa = 5
)";
    std::string path = write_config("sweep_base.cfg", base);
    fs::path out_csv = test_dir() / "unused.csv";

    std::ostringstream out, err;
    CHECK(cmd_sweep(path, "q", 0.1, 0.5, 0.1, out_csv.string(), std::nullopt, out, err) == 1);
    CHECK(contains(err.str(), "--axis must be p or alpha"));

    std::ostringstream err2;
    CHECK(cmd_sweep(path, "p", 0.5, 0.1, 0.1, out_csv.string(), std::nullopt, out, err2) == 1);
    CHECK(contains(err2.str(), "--from must be < --to"));

    std::ostringstream err3;
    CHECK(cmd_sweep(path, "p", 0.1, 0.5, 0.0, out_csv.string(), std::nullopt, out, err3) == 1);
    CHECK(contains(err3.str(), "--step must be > 0"));

    std::ostringstream err4;
    CHECK(cmd_sweep(path, "p", 0.1, 0.5, 0.9, out_csv.string(), std::nullopt, out, err4) == 1);
    CHECK(contains(err4.str(), "--step exceeds the sweep range"));

    // Fixed model selector must agree with the swept axis.
    std::string pinned = base + "\n[model]\nmodel = 2\n";
    std::string pinned_path = write_config("sweep_pinned.cfg", pinned);
    std::ostringstream err5;
    CHECK(cmd_sweep(pinned_path, "p", 0.1, 0.5, 0.1, out_csv.string(), std::nullopt, out, err5) ==
          1);
    CHECK(contains(err5.str(), "sweeps model 1"));
}

TEST_CASE("installed binary honors the exit-code contract") {
    const char* binary = std::getenv("RHT_CLI_BINARY");
    if (binary == nullptr || !fs::exists(binary)) {
        MESSAGE("RHT_CLI_BINARY not set or not a file; skipping binary smoke test");
        return;
    }
    auto run = [&](const std::string& args) {
        std::string cmd = std::string(binary) + " " + args + " > /dev/null 2>&1";
        int status = std::system(cmd.c_str());
        REQUIRE(status != -1);
        return WIFEXITED(status) ? WEXITSTATUS(status) : -1;
    };

    std::string good = write_config("binary_good.cfg", kSmallModel1);
    CHECK(run("solve --config " + good) == 0);

    std::string tight = std::string(kSmallModel1);
    tight.replace(tight.find("p = 0.4"), 7, "p = 0.001");
    std::string tight_path = write_config("binary_tight.cfg", tight);
    CHECK(run("solve --config " + tight_path) == 2);

    CHECK(run("") == 1);                      // a subcommand is required
    CHECK(run("solve") == 1);                 // --config is required
    CHECK(run("reproduce --table 5 --out " + (test_dir() / "x.csv").string()) == 1);
}
