#pragma once

#include <cstddef>
#include <cstdint>
#include <optional>
#include <vector>

#include "sokoarch/genome.hpp"

namespace sokoarch {

struct EngineConfig {
    std::size_t ca_capacity = 20;
    std::size_t da_capacity = 20;
    std::size_t offspring_per_generation = 20;
    std::size_t generations = 100;
    double crossover_probability = 0.9;
    /// nullopt means the problem's default (1/L for Sokoban genomes).
    std::optional<double> mutation_rate;
    std::uint64_t rng_seed = 0;
    double indicator_scale_kappa = 0.05;
    std::size_t feasible_retry_cap = 50;

    std::vector<FieldError> validate() const;

    friend bool operator==(const EngineConfig&, const EngineConfig&) = default;
};

}  // namespace sokoarch
