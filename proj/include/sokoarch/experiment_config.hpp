#pragma once

#include <cstdint>
#include <filesystem>
#include <string>
#include <string_view>
#include <vector>

#include <json.hpp>

#include "sokoarch/engine_config.hpp"
#include "sokoarch/error.hpp"
#include "sokoarch/genome.hpp"
#include "sokoarch/solver.hpp"

namespace sokoarch {

/// Largest level area (tiles) any config surface accepts.
inline constexpr int kMaxLevelArea = 400;

/// Everything a headless run needs. In the config document every field is
/// a top-level key with exactly the member's name; the engine, design and
/// solver settings are flattened (width, max_states, ...). Unknown keys
/// are errors.
struct ExperimentConfig {
    EngineConfig engine;
    DesignSpec design;
    SolveLimits limits;
    std::string output_directory = "runs";
    std::vector<std::string> export_formats{"csv"};  ///< metrics table formats: csv, jsonl
    std::size_t repetitions = 1;
    /// One run per seed. When the document lists no seeds they are
    /// rng_seed, rng_seed + 1, ... (repetitions of them).
    std::vector<std::uint64_t> seeds;

    friend bool operator==(const ExperimentConfig&, const ExperimentConfig&) = default;
};

/// Invalid configuration; carries every offending field.
class ConfigError : public Error {
public:
    explicit ConfigError(std::vector<FieldError> fields);
    const std::vector<FieldError>& fields() const noexcept { return fields_; }

private:
    std::vector<FieldError> fields_;
};

/// Parses and validates a config object; seeds and mutation_rate come back
/// resolved. Throws ConfigError.
ExperimentConfig parse_experiment_config(const nlohmann::json& doc);
ExperimentConfig parse_experiment_config_text(std::string_view text);

/// Reads a config file, or a run manifest (its "config" member).
ExperimentConfig load_experiment_config(const std::filesystem::path& path);

/// The resolved config as a document parse_experiment_config accepts.
nlohmann::ordered_json to_json(const ExperimentConfig& config);

}  // namespace sokoarch

namespace sokoarch {

/// Fills seeds and mutation_rate the way the parser does and validates.
/// Throws ConfigError.
ExperimentConfig resolve(ExperimentConfig config);

}  // namespace sokoarch
