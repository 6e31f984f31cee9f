#pragma once

// Headless experiment runner and its on-disk artifacts.
//
//   <out>/manifest.json              tool name/version + resolved config
//   <out>/seed-<s>/generations.jsonl one GenerationRecord per line
//   <out>/seed-<s>/archives.json     final CA and DA with level text
//   <out>/seed-<s>/metrics.csv       per-generation metrics (and/or .jsonl)

#include <cstdint>
#include <filesystem>
#include <functional>
#include <iosfwd>
#include <string>
#include <string_view>
#include <vector>

#include "sokoarch/experiment_config.hpp"
#include "sokoarch/sokoban_problem.hpp"

namespace sokoarch {

inline constexpr const char* kToolName = "sokoarch";

/// Runs one seed of `config` without touching the filesystem.
RunRecord<SokobanProblem> run_seed(const ExperimentConfig& config, std::uint64_t seed,
                                   const std::function<void(const GenerationRecord&)>& sink = {});

std::filesystem::path seed_directory(const std::filesystem::path& out, std::uint64_t seed);

/// Runs every seed and writes the artifacts listed above. Throws
/// ConfigError for an invalid config and Error when output cannot be
/// written.
void run_experiment(const ExperimentConfig& config, std::ostream* progress = nullptr);

/// Header line plus one row per generation.
std::string metrics_csv(const std::vector<GenerationRecord>& records);

/// JSON text of an archive listing (objectives, level, solution per member).
std::string archives_json(const Archive<SokobanMember>& ca, const Archive<SokobanMember>& da, std::size_t generation);

enum class FrontSelection { CA, DA, Union };

/// Throws std::invalid_argument for anything but ca, da, union.
FrontSelection parse_front_selection(std::string_view which);

struct FrontRow {
    std::uint64_t id = 0;
    double f_emp = 0.0;
    double f_div = 0.0;
    std::string level;  ///< rows joined by '|'
    std::size_t solution_length = 0;
};

/// Rows of the final archive(s) in a seed directory, ordered by id; the
/// union is filtered to its nondominated members. Throws MissingArtifacts
/// when archives.json is absent, unreadable, or the selection is empty.
std::vector<FrontRow> export_front(const std::filesystem::path& seed_dir, FrontSelection which);

std::string front_csv(const std::vector<FrontRow>& rows);
std::vector<FrontRow> parse_front_csv(std::string_view text);

/// Shortest decimal text that reads back as the same double.
std::string format_double(double v);

struct LevelReport {
    double f_emp = 0.0;
    double f_div = 0.0;
    SolveOutcome outcome;
};

/// Throws ParseError.
LevelReport describe_level(std::string_view text, const SolveLimits& limits = {});
std::string format_report(const LevelReport& report);

}  // namespace sokoarch
