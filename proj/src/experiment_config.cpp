#include "sokoarch/experiment_config.hpp"

#include <fstream>
#include <limits>
#include <set>
#include <sstream>

namespace sokoarch {
namespace {

using nlohmann::json;

const std::set<std::string, std::less<>> kKnownKeys{
    "ca_capacity",        "da_capacity",   "offspring_per_generation", "generations",
    "crossover_probability", "mutation_rate", "rng_seed",              "indicator_scale_kappa",
    "feasible_retry_cap", "width",         "height",                   "max_boxes",
    "max_states",         "max_solution_pushes", "output_directory",   "export_formats",
    "repetitions",        "seeds",
};

const std::set<std::string, std::less<>> kExportFormats{"csv", "jsonl"};

std::string join_fields(const std::vector<FieldError>& fields) {
    std::string s = "invalid config:";
    for (const auto& f : fields) s += " " + f.field + " (" + f.message + ");";
    return s;
}

class Reader {
public:
    explicit Reader(const json& doc) : doc_(doc) {}

    template <class T>
    void unsigned_int(const char* key, T& out) {
        if (!doc_.contains(key)) return;
        const json& v = doc_.at(key);
        if (!v.is_number_unsigned() && !(v.is_number_integer() && v.get<std::int64_t>() >= 0)) {
            errors.push_back({key, "must be a nonnegative integer"});
            return;
        }
        const auto raw = v.get<std::uint64_t>();
        if (raw > static_cast<std::uint64_t>(std::numeric_limits<T>::max())) {
            errors.push_back({key, "out of range"});
            return;
        }
        out = static_cast<T>(raw);
    }

    void integer(const char* key, int& out) {
        if (!doc_.contains(key)) return;
        const json& v = doc_.at(key);
        if (!v.is_number_integer()) {
            errors.push_back({key, "must be an integer"});
            return;
        }
        const auto raw = v.get<std::int64_t>();
        if (raw < -1'000'000 || raw > 1'000'000) {
            errors.push_back({key, "out of range"});
            return;
        }
        out = static_cast<int>(raw);
    }

    void real(const char* key, double& out) {
        if (!doc_.contains(key)) return;
        const json& v = doc_.at(key);
        if (!v.is_number()) {
            errors.push_back({key, "must be a number"});
            return;
        }
        out = v.get<double>();
    }

    std::vector<FieldError> errors;

private:
    const json& doc_;
};

void validate_into(const ExperimentConfig& c, std::vector<FieldError>& errors) {
    for (auto& e : c.engine.validate()) errors.push_back(std::move(e));
    for (auto& e : c.design.validate()) errors.push_back(std::move(e));
    if (c.design.width >= 3 && c.design.height >= 3 && c.design.width * c.design.height > kMaxLevelArea) {
        const bool width_larger = c.design.width >= c.design.height;
        errors.push_back({width_larger ? "width" : "height",
                          "level area width*height must not exceed " + std::to_string(kMaxLevelArea)});
    }
    if (c.limits.max_states < 1) errors.push_back({"max_states", "must be positive"});
    if (c.limits.max_solution_pushes < 1) errors.push_back({"max_solution_pushes", "must be positive"});
    if (c.repetitions < 1) errors.push_back({"repetitions", "must be positive"});
    if (c.output_directory.empty()) errors.push_back({"output_directory", "must not be empty"});
    for (const auto& f : c.export_formats)
        if (!kExportFormats.contains(f)) errors.push_back({"export_formats", "unknown format '" + f + "'"});
}

}  // namespace

ConfigError::ConfigError(std::vector<FieldError> fields) : Error(join_fields(fields)), fields_(std::move(fields)) {}

ExperimentConfig parse_experiment_config(const json& doc) {
    if (!doc.is_object()) throw ConfigError(std::vector<FieldError>{{"(document)", "config must be an object"}});

    std::vector<FieldError> errors;
    for (const auto& [key, _] : doc.items())
        if (!kKnownKeys.contains(key)) errors.push_back({key, "unknown key"});

    ExperimentConfig c;
    Reader r(doc);
    r.unsigned_int("ca_capacity", c.engine.ca_capacity);
    r.unsigned_int("da_capacity", c.engine.da_capacity);
    r.unsigned_int("offspring_per_generation", c.engine.offspring_per_generation);
    r.unsigned_int("generations", c.engine.generations);
    r.real("crossover_probability", c.engine.crossover_probability);
    if (doc.contains("mutation_rate") && !doc.at("mutation_rate").is_null()) {
        double rate = 0.0;
        r.real("mutation_rate", rate);
        c.engine.mutation_rate = rate;
    }
    r.unsigned_int("rng_seed", c.engine.rng_seed);
    r.real("indicator_scale_kappa", c.engine.indicator_scale_kappa);
    r.unsigned_int("feasible_retry_cap", c.engine.feasible_retry_cap);
    r.integer("width", c.design.width);
    r.integer("height", c.design.height);
    r.integer("max_boxes", c.design.max_boxes);
    r.unsigned_int("max_states", c.limits.max_states);
    r.unsigned_int("max_solution_pushes", c.limits.max_solution_pushes);
    r.unsigned_int("repetitions", c.repetitions);
    for (auto& e : r.errors) errors.push_back(std::move(e));

    if (doc.contains("output_directory")) {
        if (doc.at("output_directory").is_string())
            c.output_directory = doc.at("output_directory").get<std::string>();
        else
            errors.push_back({"output_directory", "must be a string"});
    }
    if (doc.contains("export_formats")) {
        const auto& f = doc.at("export_formats");
        c.export_formats.clear();
        if (!f.is_array()) {
            errors.push_back({"export_formats", "must be an array of strings"});
        } else {
            for (const auto& item : f) {
                if (item.is_string())
                    c.export_formats.push_back(item.get<std::string>());
                else
                    errors.push_back({"export_formats", "must be an array of strings"});
            }
        }
    }
    if (doc.contains("seeds")) {
        const auto& s = doc.at("seeds");
        bool ok = s.is_array() && !s.empty();
        if (ok)
            for (const auto& item : s) ok = ok && item.is_number_unsigned();
        if (!ok) {
            errors.push_back({"seeds", "must be a nonempty array of nonnegative integers"});
        } else {
            for (const auto& item : s) c.seeds.push_back(item.get<std::uint64_t>());
            if (!doc.contains("repetitions"))
                c.repetitions = c.seeds.size();
            else if (c.repetitions != c.seeds.size())
                errors.push_back({"repetitions", "must equal the number of listed seeds"});
        }
    }

    if (!errors.empty()) {
        validate_into(c, errors);
        throw ConfigError(std::move(errors));
    }
    return resolve(std::move(c));
}

ExperimentConfig resolve(ExperimentConfig c) {
    std::vector<FieldError> errors;
    validate_into(c, errors);
    if (!c.seeds.empty() && c.seeds.size() != c.repetitions)
        errors.push_back({"repetitions", "must equal the number of listed seeds"});
    if (!errors.empty()) throw ConfigError(std::move(errors));

    if (c.seeds.empty())
        for (std::size_t i = 0; i < c.repetitions; ++i) c.seeds.push_back(c.engine.rng_seed + i);
    if (!c.engine.mutation_rate) c.engine.mutation_rate = default_mutation_rate(c.design);
    return c;
}

ExperimentConfig parse_experiment_config_text(std::string_view text) {
    json doc;
    try {
        doc = json::parse(text);
    } catch (const json::parse_error& e) {
        throw ConfigError(std::vector<FieldError>{{"(document)", std::string("not valid JSON: ") + e.what()}});
    }
    return parse_experiment_config(doc);
}

ExperimentConfig load_experiment_config(const std::filesystem::path& path) {
    std::ifstream in(path);
    if (!in) throw ConfigError(std::vector<FieldError>{{"(file)", "cannot read " + path.string()}});
    std::stringstream buf;
    buf << in.rdbuf();
    json doc;
    try {
        doc = json::parse(buf.str());
    } catch (const json::parse_error& e) {
        throw ConfigError(std::vector<FieldError>{{"(document)", std::string("not valid JSON: ") + e.what()}});
    }
    // A run manifest carries the resolved config under "config".
    if (doc.is_object() && doc.contains("config") && doc.contains("tool")) return parse_experiment_config(doc.at("config"));
    return parse_experiment_config(doc);
}

nlohmann::ordered_json to_json(const ExperimentConfig& config) {
    const ExperimentConfig c = resolve(config);
    nlohmann::ordered_json j;
    j["ca_capacity"] = c.engine.ca_capacity;
    j["da_capacity"] = c.engine.da_capacity;
    j["offspring_per_generation"] = c.engine.offspring_per_generation;
    j["generations"] = c.engine.generations;
    j["crossover_probability"] = c.engine.crossover_probability;
    j["mutation_rate"] = *c.engine.mutation_rate;
    j["rng_seed"] = c.engine.rng_seed;
    j["indicator_scale_kappa"] = c.engine.indicator_scale_kappa;
    j["feasible_retry_cap"] = c.engine.feasible_retry_cap;
    j["width"] = c.design.width;
    j["height"] = c.design.height;
    j["max_boxes"] = c.design.max_boxes;
    j["max_states"] = c.limits.max_states;
    j["max_solution_pushes"] = c.limits.max_solution_pushes;
    j["output_directory"] = c.output_directory;
    j["export_formats"] = c.export_formats;
    j["repetitions"] = c.repetitions;
    j["seeds"] = c.seeds;
    return j;
}

}  // namespace sokoarch
