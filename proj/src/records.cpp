#include "sokoarch/records.hpp"

#include <json.hpp>

#include "sokoarch/error.hpp"

namespace sokoarch {
namespace {

using nlohmann::ordered_json;

ordered_json members_json(const std::vector<MemberSummary>& members) {
    ordered_json arr = ordered_json::array();
    for (const auto& m : members) arr.push_back(ordered_json{{"id", m.id}, {"objectives", m.objectives.values}});
    return arr;
}

std::vector<MemberSummary> members_from(const ordered_json& arr) {
    std::vector<MemberSummary> out;
    for (const auto& m : arr)
        out.push_back({m.at("id").get<std::uint64_t>(), ObjectiveVector(m.at("objectives").get<std::vector<double>>())});
    return out;
}

}  // namespace

std::string to_json_line(const GenerationRecord& r) {
    ordered_json j;
    j["generation"] = r.generation;
    j["offspring"] = r.offspring;
    j["feasible_offspring"] = r.feasible_offspring;
    j["limit_exceeded_offspring"] = r.limit_exceeded_offspring;
    j["evaluations"] = r.evaluations;
    j["hypervolume_da"] = r.hypervolume_da;
    j["hypervolume_cumulative"] = r.hypervolume_cumulative;
    j["ca"] = members_json(r.ca);
    j["da"] = members_json(r.da);
    return j.dump();
}

GenerationRecord generation_record_from_json(const std::string& line) {
    try {
        const auto j = ordered_json::parse(line);
        GenerationRecord r;
        r.generation = j.at("generation").get<std::size_t>();
        r.offspring = j.at("offspring").get<std::size_t>();
        r.feasible_offspring = j.at("feasible_offspring").get<std::size_t>();
        r.limit_exceeded_offspring = j.at("limit_exceeded_offspring").get<std::size_t>();
        r.evaluations = j.at("evaluations").get<std::size_t>();
        r.hypervolume_da = j.at("hypervolume_da").get<double>();
        r.hypervolume_cumulative = j.at("hypervolume_cumulative").get<double>();
        r.ca = members_from(j.at("ca"));
        r.da = members_from(j.at("da"));
        return r;
    } catch (const nlohmann::json::exception& e) {
        throw Error(std::string("malformed generation record: ") + e.what());
    }
}

}  // namespace sokoarch
