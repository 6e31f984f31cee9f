// sokoarch: headless runs, front exports, and single-level reports.
//
//   sokoarch run CONFIG [--seed S] [--out DIR] [--quiet]
//   sokoarch export-front RUN_DIR [--seed S] [--which ca|da|union] [--output FILE]
//   sokoarch describe-level [PATH|-] [--max-states N] [--max-pushes N]
//
// Exit codes: 0 success, 2 configuration or input error, 3 runtime error.

#include <CLI11.hpp>

#include <fstream>
#include <iostream>
#include <iterator>
#include <sstream>

#include "sokoarch/experiment.hpp"

namespace {

constexpr int kOk = 0;
constexpr int kConfigError = 2;
constexpr int kRuntimeError = 3;

std::string read_all(std::istream& in) { return {std::istreambuf_iterator<char>(in), std::istreambuf_iterator<char>()}; }

// A run directory holds seed-* subdirectories; a seed directory holds
// archives.json directly.
std::filesystem::path pick_seed_dir(const std::filesystem::path& dir, std::optional<std::uint64_t> seed) {
    if (seed) return sokoarch::seed_directory(dir, *seed);
    if (std::filesystem::exists(dir / "archives.json")) return dir;
    std::vector<std::filesystem::path> seeds;
    std::error_code ec;
    for (const auto& entry : std::filesystem::directory_iterator(dir, ec))
        if (entry.is_directory() && entry.path().filename().string().rfind("seed-", 0) == 0) seeds.push_back(entry.path());
    if (seeds.size() == 1) return seeds.front();
    if (seeds.empty()) throw sokoarch::MissingArtifacts("no seed directories under " + dir.string());
    throw std::invalid_argument("run directory holds several seeds; pass --seed");
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"Two-archive evolutionary Sokoban level generation"};
    app.set_version_flag("--version", std::string(sokoarch::kToolName) + " " + SOKOARCH_VERSION);
    app.require_subcommand(1);

    std::string config_path;
    std::optional<std::uint64_t> seed_override;
    std::string out_override;
    bool quiet = false;
    auto* run = app.add_subcommand("run", "Run an experiment from a config file or manifest");
    run->add_option("config", config_path, "Config (JSON) or manifest.json")->required();
    run->add_option("--seed", seed_override, "Run only this seed");
    run->add_option("--out", out_override, "Output directory");
    run->add_flag("--quiet", quiet, "No per-generation progress");

    std::string run_dir;
    std::string which = "da";
    std::string output;
    std::optional<std::uint64_t> export_seed;
    auto* exp = app.add_subcommand("export-front", "Tabulate the final archive(s) of a run");
    exp->add_option("run_dir", run_dir, "Run or seed directory")->required();
    exp->add_option("--which", which, "ca, da or union")->check(CLI::IsMember({"ca", "da", "union"}));
    exp->add_option("--seed", export_seed, "Seed subdirectory to read");
    exp->add_option("--output", output, "Write CSV here instead of stdout");

    std::string level_path = "-";
    sokoarch::SolveLimits limits;
    bool as_json = false;
    auto* describe = app.add_subcommand("describe-level", "Objectives and solver verdict of one level");
    describe->add_option("path", level_path, "Level text file, or - for stdin");
    describe->add_option("--max-states", limits.max_states, "Solver state budget");
    describe->add_option("--max-pushes", limits.max_solution_pushes, "Solver push budget");
    describe->add_flag("--json", as_json, "Print the report as JSON");

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        const int code = app.exit(e);
        return code == 0 ? kOk : kConfigError;
    }

    if (*run) {
        sokoarch::ExperimentConfig config;
        try {
            config = sokoarch::load_experiment_config(config_path);
            if (seed_override) {
                config.seeds = {*seed_override};
                config.repetitions = 1;
            }
            if (!out_override.empty()) config.output_directory = out_override;
            config = sokoarch::resolve(config);
        } catch (const sokoarch::ConfigError& e) {
            std::cerr << e.what() << '\n';
            return kConfigError;
        }
        try {
            sokoarch::run_experiment(config, quiet ? nullptr : &std::cerr);
        } catch (const std::exception& e) {
            std::cerr << "error: " << e.what() << '\n';
            return kRuntimeError;
        }
        return kOk;
    }

    if (*exp) {
        try {
            const auto dir = pick_seed_dir(run_dir, export_seed);
            const auto csv = sokoarch::front_csv(sokoarch::export_front(dir, sokoarch::parse_front_selection(which)));
            if (output.empty()) {
                std::cout << csv;
            } else {
                std::ofstream out(output, std::ios::binary | std::ios::trunc);
                if (!(out << csv)) throw sokoarch::Error("cannot write " + output);
            }
        } catch (const std::invalid_argument& e) {
            std::cerr << "error: " << e.what() << '\n';
            return kConfigError;
        } catch (const std::exception& e) {
            std::cerr << "error: " << e.what() << '\n';
            return kRuntimeError;
        }
        return kOk;
    }

    std::string text;
    if (level_path == "-") {
        text = read_all(std::cin);
    } else {
        std::ifstream in(level_path, std::ios::binary);
        if (!in) {
            std::cerr << "error: cannot read " << level_path << '\n';
            return kConfigError;
        }
        text = read_all(in);
    }
    try {
        const auto report = sokoarch::describe_level(text, limits);
        if (as_json) {
            nlohmann::ordered_json j{{"f_emp", report.f_emp},
                                     {"f_div", report.f_div},
                                     {"verdict", sokoarch::verdict_name(report.outcome.verdict)},
                                     {"feasible", report.outcome.verdict == sokoarch::Verdict::Solvable},
                                     {"solution", report.outcome.solution},
                                     {"pushes", report.outcome.pushes},
                                     {"states_expanded", report.outcome.states_expanded}};
            std::cout << j.dump(2) << '\n';
        } else {
            std::cout << sokoarch::format_report(report);
        }
    } catch (const sokoarch::ParseError& e) {
        std::cerr << e.what() << '\n';
        return kConfigError;
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << '\n';
        return kRuntimeError;
    }
    return kOk;
}
