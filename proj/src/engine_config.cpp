#include "sokoarch/engine_config.hpp"

#include <limits>

namespace sokoarch {

std::vector<FieldError> EngineConfig::validate() const {
    std::vector<FieldError> errors;
    if (ca_capacity < 1) errors.push_back({"ca_capacity", "must be positive"});
    if (da_capacity < 1) errors.push_back({"da_capacity", "must be positive"});
    if (offspring_per_generation < 1) errors.push_back({"offspring_per_generation", "must be positive"});
    if (!(crossover_probability >= 0.0 && crossover_probability <= 1.0))
        errors.push_back({"crossover_probability", "must lie in [0, 1]"});
    if (mutation_rate && !(*mutation_rate >= 0.0 && *mutation_rate <= 1.0))
        errors.push_back({"mutation_rate", "must lie in [0, 1]"});
    if (!(indicator_scale_kappa > 0.0) || indicator_scale_kappa == std::numeric_limits<double>::infinity())
        errors.push_back({"indicator_scale_kappa", "must be a positive finite number"});
    return errors;
}

}  // namespace sokoarch
