#pragma once

#include <cstdint>
#include <string>
#include <vector>

#include "sokoarch/objective_vector.hpp"

namespace sokoarch {

struct MemberSummary {
    std::uint64_t id = 0;
    ObjectiveVector objectives;

    friend bool operator==(const MemberSummary&, const MemberSummary&) = default;
};

/// What one generation (or the initialisation, generation 0) produced.
struct GenerationRecord {
    std::size_t generation = 0;
    std::vector<MemberSummary> ca;
    std::vector<MemberSummary> da;
    std::size_t offspring = 0;
    std::size_t feasible_offspring = 0;
    std::size_t limit_exceeded_offspring = 0;
    std::size_t evaluations = 0;  ///< cumulative over the run
    double hypervolume_da = 0.0;
    double hypervolume_cumulative = 0.0;

    friend bool operator==(const GenerationRecord&, const GenerationRecord&) = default;
};

/// One JSON object, no trailing newline. Byte-stable for equal records.
std::string to_json_line(const GenerationRecord& record);
GenerationRecord generation_record_from_json(const std::string& line);

}  // namespace sokoarch
