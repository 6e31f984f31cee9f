#include "sokoarch/experiment.hpp"

#include <charconv>
#include <fstream>
#include <ostream>
#include <sstream>

#include "sokoarch/pareto.hpp"

namespace sokoarch {
namespace fs = std::filesystem;
using nlohmann::ordered_json;

namespace {

void write_file(const fs::path& path, const std::string& content) {
    std::ofstream out(path, std::ios::binary | std::ios::trunc);
    if (!out) throw Error("cannot write " + path.string());
    out << content;
    if (!out) throw Error("failed writing " + path.string());
}

ordered_json archive_members_json(const Archive<SokobanMember>& a) {
    ordered_json arr = ordered_json::array();
    for (const auto& m : a.members) {
        arr.push_back(ordered_json{{"id", m.id},
                                   {"objectives", m.objectives.values},
                                   {"level", serialize_level(decode(m.genome))},
                                   {"solution", m.details.solution},
                                   {"pushes", m.details.pushes}});
    }
    return arr;
}

double feasible_rate(const GenerationRecord& r) {
    return r.offspring == 0 ? 0.0 : static_cast<double>(r.feasible_offspring) / static_cast<double>(r.offspring);
}

std::string metrics_jsonl(const std::vector<GenerationRecord>& records) {
    std::string out;
    for (const auto& r : records) {
        ordered_json j{{"generation", r.generation},
                       {"ca_size", r.ca.size()},
                       {"da_size", r.da.size()},
                       {"hypervolume_da", r.hypervolume_da},
                       {"hypervolume_cumulative", r.hypervolume_cumulative},
                       {"feasible_offspring_rate", feasible_rate(r)}};
        out += j.dump();
        out += '\n';
    }
    return out;
}

}  // namespace

std::string format_double(double v) {
    char buf[64];
    const auto res = std::to_chars(buf, buf + sizeof buf, v);
    return std::string(buf, res.ptr);
}

RunRecord<SokobanProblem> run_seed(const ExperimentConfig& config, std::uint64_t seed,
                                   const std::function<void(const GenerationRecord&)>& sink) {
    const ExperimentConfig resolved = resolve(config);
    EngineConfig engine = resolved.engine;
    engine.rng_seed = seed;
    return run(engine, SokobanProblem(resolved.design, resolved.limits), sink);
}

fs::path seed_directory(const fs::path& out, std::uint64_t seed) { return out / ("seed-" + std::to_string(seed)); }

std::string metrics_csv(const std::vector<GenerationRecord>& records) {
    std::string out = "generation,ca_size,da_size,hypervolume_da,hypervolume_cumulative,feasible_offspring_rate\n";
    for (const auto& r : records) {
        out += std::to_string(r.generation) + ',' + std::to_string(r.ca.size()) + ',' + std::to_string(r.da.size()) +
               ',' + format_double(r.hypervolume_da) + ',' + format_double(r.hypervolume_cumulative) + ',' +
               format_double(feasible_rate(r)) + '\n';
    }
    return out;
}

std::string archives_json(const Archive<SokobanMember>& ca, const Archive<SokobanMember>& da, std::size_t generation) {
    ordered_json j{{"generation", generation}, {"ca", archive_members_json(ca)}, {"da", archive_members_json(da)}};
    return j.dump(2) + '\n';
}

void run_experiment(const ExperimentConfig& config, std::ostream* progress) {
    const ExperimentConfig resolved = resolve(config);
    const fs::path out = resolved.output_directory;
    std::error_code ec;
    fs::create_directories(out, ec);
    if (ec) throw Error("cannot create output directory " + out.string() + ": " + ec.message());

    ordered_json manifest{{"tool", {{"name", kToolName}, {"version", SOKOARCH_VERSION}}}, {"config", to_json(resolved)}};
    write_file(out / "manifest.json", manifest.dump(2) + '\n');

    for (std::uint64_t seed : resolved.seeds) {
        const fs::path dir = seed_directory(out, seed);
        fs::create_directories(dir, ec);
        if (ec) throw Error("cannot create " + dir.string() + ": " + ec.message());

        std::ofstream log(dir / "generations.jsonl", std::ios::binary | std::ios::trunc);
        if (!log) throw Error("cannot write " + (dir / "generations.jsonl").string());
        auto sink = [&](const GenerationRecord& r) {
            log << to_json_line(r) << '\n';
            log.flush();
            if (progress)
                *progress << "seed " << seed << " generation " << r.generation << " |CA|=" << r.ca.size()
                          << " |DA|=" << r.da.size() << " hv(DA)=" << format_double(r.hypervolume_da) << '\n';
        };
        const auto record = run_seed(resolved, seed, sink);
        log.close();

        write_file(dir / "archives.json",
                   archives_json(record.final_ca, record.final_da, record.generations.back().generation));
        for (const auto& format : resolved.export_formats) {
            if (format == "csv") write_file(dir / "metrics.csv", metrics_csv(record.generations));
            if (format == "jsonl") write_file(dir / "metrics.jsonl", metrics_jsonl(record.generations));
        }
    }
}

FrontSelection parse_front_selection(std::string_view which) {
    if (which == "ca") return FrontSelection::CA;
    if (which == "da") return FrontSelection::DA;
    if (which == "union") return FrontSelection::Union;
    throw std::invalid_argument("front selection must be ca, da or union");
}

std::vector<FrontRow> export_front(const fs::path& seed_dir, FrontSelection which) {
    const fs::path path = seed_dir / "archives.json";
    std::ifstream in(path);
    if (!in) throw MissingArtifacts("missing " + path.string());

    std::vector<FrontRow> rows;
    try {
        const auto doc = ordered_json::parse(in);
        auto collect = [&](const char* key) {
            for (const auto& m : doc.at(key)) {
                FrontRow row;
                row.id = m.at("id").get<std::uint64_t>();
                const auto obj = m.at("objectives").get<std::vector<double>>();
                if (obj.size() != 2) throw MissingArtifacts("archive member without two objectives");
                row.f_emp = obj[0];
                row.f_div = obj[1];
                row.level = level_to_row_text(parse_level(m.at("level").get<std::string>()));
                row.solution_length = m.at("solution").get<std::string>().size();
                if (std::none_of(rows.begin(), rows.end(), [&](const FrontRow& r) { return r.id == row.id; }))
                    rows.push_back(std::move(row));
            }
        };
        if (which != FrontSelection::DA) collect("ca");
        if (which != FrontSelection::CA) collect("da");
    } catch (const nlohmann::json::exception& e) {
        throw MissingArtifacts("malformed " + path.string() + ": " + e.what());
    } catch (const ParseError& e) {
        throw MissingArtifacts("malformed level in " + path.string() + ": " + e.what());
    }
    if (rows.empty()) throw MissingArtifacts("selected archive is empty in " + path.string());

    std::sort(rows.begin(), rows.end(), [](const FrontRow& a, const FrontRow& b) { return a.id < b.id; });
    if (which == FrontSelection::Union) {
        std::vector<ObjectiveVector> pts;
        for (const auto& r : rows) pts.push_back({r.f_emp, r.f_div});
        std::vector<FrontRow> kept;
        for (std::size_t i : nondominated_indices(pts)) kept.push_back(rows[i]);
        rows = std::move(kept);
    }
    return rows;
}

std::string front_csv(const std::vector<FrontRow>& rows) {
    std::string out = "id,f_emp,f_div,level,solution_length\n";
    for (const auto& r : rows)
        out += std::to_string(r.id) + ',' + format_double(r.f_emp) + ',' + format_double(r.f_div) + ",\"" + r.level +
               "\"," + std::to_string(r.solution_length) + '\n';
    return out;
}

std::vector<FrontRow> parse_front_csv(std::string_view text) {
    std::vector<FrontRow> rows;
    std::istringstream in{std::string(text)};
    std::string line;
    if (!std::getline(in, line) || line != "id,f_emp,f_div,level,solution_length")
        throw Error("front table: missing header");
    while (std::getline(in, line)) {
        if (line.empty()) continue;
        // The level is the only quoted field and never contains quotes.
        const auto q1 = line.find('"');
        const auto q2 = line.rfind('"');
        if (q1 == std::string::npos || q2 == q1) throw Error("front table: malformed row");
        FrontRow r;
        std::istringstream head(line.substr(0, q1));
        std::string cell;
        std::getline(head, cell, ',');
        r.id = std::stoull(cell);
        std::getline(head, cell, ',');
        r.f_emp = std::stod(cell);
        std::getline(head, cell, ',');
        r.f_div = std::stod(cell);
        r.level = line.substr(q1 + 1, q2 - q1 - 1);
        r.solution_length = std::stoull(line.substr(q2 + 2));
        rows.push_back(std::move(r));
    }
    return rows;
}

}  // namespace sokoarch
