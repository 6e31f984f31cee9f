// Acceptance suite: one PASS/FAIL line per criterion. Exit status is
// nonzero when any criterion fails.

#include <array>
#include <chrono>
#include <cmath>
#include <cstdio>
#include <filesystem>
#include <fstream>
#include <functional>
#include <random>
#include <set>
#include <sstream>
#include <string>
#include <vector>

#include "oracles.hpp"
#include "sokoarch/archive.hpp"
#include "sokoarch/engine.hpp"
#include "sokoarch/experiment.hpp"
#include "sokoarch/objectives.hpp"
#include "sokoarch/pareto.hpp"
#include "sokoarch/session.hpp"
#include "sokoarch/sokoban_problem.hpp"
#include "sokoarch/solver.hpp"

using namespace sokoarch;
namespace fs = std::filesystem;

namespace {

// Tolerances and budgets.
constexpr double kEntropyOracleTol = 1e-12;
constexpr double kAnchorTol = 1e-9;
constexpr double kAnchor211 = 0.946394;  // normalised entropy of rows (2,1,1), six digits
constexpr double kAnchor211Digits = 1e-6;  // the six digits are truncated, not rounded
constexpr int kObjectiveLevels = 10'000;
constexpr double kObjectiveSeconds = 10.0;
constexpr int kParetoSets = 200;
constexpr std::size_t kParetoMaxPoints = 64;
constexpr double kParetoSeconds = 5.0;
constexpr int kSolverLevels = 500;
constexpr double kSolverSeconds = 60.0;
constexpr double kArchiveSeconds = 300.0;
constexpr std::size_t kTradeoffMinVectors = 5;
constexpr double kTradeoffMinSpread = 0.2;

struct Outcome {
    bool pass = true;
    std::string detail;
};

struct Criterion {
    const char* name;
    double budget_seconds;  // 0: no runtime bound
    std::function<Outcome()> check;
};

void fail(Outcome& o, const std::string& why) {
    if (o.pass) o.detail = why;
    o.pass = false;
}

ExperimentConfig default_config() {
    ExperimentConfig c;
    c.engine.rng_seed = 0;
    return resolve(c);
}

std::string read_file(const fs::path& p) {
    std::ifstream in(p, std::ios::binary);
    std::ostringstream s;
    s << in.rdbuf();
    return s.str();
}

Level rows_level(const std::vector<std::string>& interior) {
    const std::size_t w = interior[0].size() + 2;
    std::string text(w, '#');
    for (const auto& row : interior) text += "\n#" + row + "#";
    text += "\n" + std::string(w, '#');
    return parse_level(text);
}

Outcome objective_correctness() {
    Outcome o;
    Rng rng(2024);
    const DesignSpec spec{8, 8, 3};
    double worst = 0.0;
    for (int i = 0; i < kObjectiveLevels; ++i) {
        const Level level = decode(random_genome(spec, rng));
        const double e = f_emp(level), d = f_div(level);
        if (!(e >= 0.0 && e <= 1.0 && d >= 0.0 && d <= 1.0)) fail(o, "objective out of [0,1]");
        std::vector<int> counts;
        for (int r = 1; r < level.height() - 1; ++r) {
            int c = 0;
            for (int k = 1; k < level.width() - 1; ++k) c += level.at(r, k) == Tile::Floor;
            counts.push_back(c);
        }
        worst = std::max(worst, std::abs(d - oracle::entropy_from_counts(counts)));
    }
    if (worst > kEntropyOracleTol) fail(o, "f_div deviates from the entropy oracle by " + format_double(worst));

    const double uniform = f_div(rows_level({"@$. ", "# ##", " ###"}));
    const double single = f_div(rows_level({"@$.  ", "#####", "#####"}));
    const double mixed = f_div(rows_level({"@  ", "$ .", "## "}));
    const double mixed_oracle = oracle::entropy_from_counts({2, 1, 1});
    if (std::abs(uniform - 1.0) > kAnchorTol) fail(o, "uniform-row anchor " + format_double(uniform));
    if (std::abs(single - 0.0) > kAnchorTol) fail(o, "single-row anchor " + format_double(single));
    if (std::abs(mixed - mixed_oracle) > kAnchorTol || std::abs(mixed - kAnchor211) > kAnchor211Digits)
        fail(o, "(2,1,1) anchor " + format_double(mixed));
    if (o.pass)
        o.detail = std::to_string(kObjectiveLevels) + " levels, max oracle gap " + format_double(worst) +
                   ", (2,1,1) -> " + format_double(mixed);
    return o;
}

Outcome pareto_oracle() {
    Outcome o;
    std::mt19937_64 gen(77);
    std::uniform_real_distribution<double> u(0.0, 1.0);
    std::uniform_int_distribution<int> grid(0, 8);
    for (int s = 0; s < kParetoSets; ++s) {
        const std::size_t n = 1 + gen() % kParetoMaxPoints;
        const bool coarse = s % 2 == 0;  // many ties and duplicates
        std::vector<ObjectiveVector> pts;
        std::vector<oracle::Point> raw;
        for (std::size_t i = 0; i < n; ++i) {
            const double a = coarse ? grid(gen) / 8.0 : u(gen), b = coarse ? grid(gen) / 8.0 : u(gen);
            pts.push_back({a, b});
            raw.push_back({a, b});
        }
        std::vector<ObjectiveVector> expected;
        for (std::size_t i : oracle::nondominated_brute(raw)) expected.push_back(pts[i]);
        if (nondominated_filter(pts) != expected) fail(o, "set " + std::to_string(s) + " differs");
    }
    if (o.pass) o.detail = std::to_string(kParetoSets) + " sets agree exactly";
    return o;
}

Outcome solver_oracle() {
    Outcome o;
    std::mt19937_64 gen(500);
    int solvable = 0;
    for (int i = 0; i < kSolverLevels; ++i) {
        const auto text = oracle::random_level_text(gen, 3, 3, 2);
        const Level level = parse_level(text);
        const auto outcome = solve(level);
        const bool want = oracle::full_state_bfs(text) == oracle::Verdict::Solvable;
        if ((outcome.verdict == Verdict::Solvable) != want || outcome.verdict == Verdict::LimitExceeded) {
            fail(o, "verdict mismatch on level " + std::to_string(i));
            continue;
        }
        if (outcome.verdict != Verdict::Solvable) continue;
        ++solvable;
        const auto replay = validate_playthrough(level, parse_moves(outcome.solution));
        if (!replay.won || !replay.rejected.empty()) fail(o, "solution of level " + std::to_string(i) + " fails replay");
    }
    if (o.pass) o.detail = std::to_string(kSolverLevels) + " levels, " + std::to_string(solvable) + " solvable";
    return o;
}

Outcome archive_invariants() {
    Outcome o;
    const auto config = default_config();
    const SokobanProblem problem(config.design, config.limits);
    GenerationRecord rec;
    auto state = initialize(config.engine, problem, &rec);
    double previous_hv = -1.0;
    for (std::size_t g = 0;; ++g) {
        const std::string at = "generation " + std::to_string(g) + ": ";
        if (state.ca.size() > 20 || state.da.size() > 20) fail(o, at + "archive over capacity");
        for (const auto* a : {&state.ca, &state.da}) {
            for (const auto& x : a->members) {
                if (!x.feasible || x.details.verdict != Verdict::Solvable) fail(o, at + "infeasible member");
                for (const auto& y : a->members)
                    if (dominates(x.objectives, y.objectives)) fail(o, at + "dominated member");
            }
        }
        if (rec.hypervolume_cumulative < previous_hv) fail(o, at + "cumulative hypervolume decreased");
        previous_hv = rec.hypervolume_cumulative;
        if (g == config.engine.generations) break;
        rec = step(state, problem);
    }
    if (o.pass)
        o.detail = std::to_string(config.engine.generations) + " generations, final cumulative HV " +
                   format_double(previous_hv);
    return o;
}

Outcome tradeoff_emergence() {
    Outcome o;
    const auto config = default_config();
    const auto record = run_seed(config, 0);
    std::set<ObjectiveVector> distinct;
    for (const auto& m : record.final_da.members) distinct.insert(m.objectives);
    const std::vector<ObjectiveVector> vectors(distinct.begin(), distinct.end());
    const auto nondominated = nondominated_filter(vectors);

    double lo_e = 1, hi_e = 0, lo_d = 1, hi_d = 0;
    for (const auto& v : nondominated) {
        lo_e = std::min(lo_e, v[0]);
        hi_e = std::max(hi_e, v[0]);
        lo_d = std::min(lo_d, v[1]);
        hi_d = std::max(hi_d, v[1]);
    }
    const double spread_e = nondominated.empty() ? 0.0 : hi_e - lo_e;
    const double spread_d = nondominated.empty() ? 0.0 : hi_d - lo_d;
    const double hv_initial = record.generations.front().hypervolume_da;
    const double hv_final = record.generations.back().hypervolume_da;

    o.detail = std::to_string(nondominated.size()) + " distinct nondominated vectors, spread f_emp " +
               format_double(spread_e) + ", f_div " + format_double(spread_d) + ", DA HV " +
               format_double(hv_initial) + " -> " + format_double(hv_final);
    o.pass = nondominated.size() >= kTradeoffMinVectors && spread_e >= kTradeoffMinSpread &&
             spread_d >= kTradeoffMinSpread && hv_final >= hv_initial;
    return o;
}

Outcome determinism() {
    Outcome o;
    const fs::path base = fs::temp_directory_path() / "sokoarch-acceptance";
    fs::remove_all(base);
    auto config = default_config();
    config.output_directory = (base / "a").string();
    run_experiment(config);
    config.output_directory = (base / "b").string();
    run_experiment(config);
    const std::string log_a = read_file(seed_directory(base / "a", 0) / "generations.jsonl");
    const std::string log_b = read_file(seed_directory(base / "b", 0) / "generations.jsonl");
    if (log_a.empty() || log_a != log_b) fail(o, "generation logs differ");

    SessionManager sessions;
    const auto created = sessions.create(default_config());
    std::string stepped = to_json_line(created.initial_record) + '\n';
    for (std::size_t g = 0; g < config.engine.generations; ++g)
        for (const auto& r : sessions.step(created.snapshot.id, 1)) stepped += to_json_line(r) + '\n';
    if (stepped != log_a) fail(o, "stepped session differs from the headless log");
    fs::remove_all(base);
    if (o.pass) o.detail = "logs byte-identical (" + std::to_string(log_a.size()) + " bytes), session matches";
    return o;
}

struct Pt {
    std::uint64_t id = 0;
    int genome = 0;
    ObjectiveVector objectives;
    bool feasible = true;
};

std::vector<Pt> members_from(const std::vector<std::array<double, 2>>& pts) {
    std::vector<Pt> out;
    for (std::size_t i = 0; i < pts.size(); ++i)
        out.push_back({i + 1, static_cast<int>(i), {pts[i][0], pts[i][1]}, true});
    return out;
}

Outcome truncation_anchors() {
    Outcome o;
    constexpr std::array<Sense, 2> senses{Sense::Maximize, Sense::Maximize};

    // CA: capacity 2 over {(1,0), (0.5,0.5), (0,1)}.
    const std::vector<std::array<double, 2>> ca_pts{{1.0, 0.0}, {0.5, 0.5}, {0.0, 1.0}};
    std::vector<oracle::Point> min_pts;
    for (const auto& p : ca_pts) min_pts.push_back({-p[0], -p[1]});
    const auto fitness = oracle::indicator_fitness_brute(min_pts, 0.05);
    const std::size_t ca_expected = static_cast<std::size_t>(std::min_element(fitness.begin(), fitness.end()) - fitness.begin());
    const auto ca_members = members_from(ca_pts);
    const auto ca = update_ca(Archive<Pt>{ArchiveKind::Convergence, 2, {}}, std::span<const Pt>(ca_members), senses, 0.05);
    std::set<std::uint64_t> ca_left;
    for (const auto& m : ca.members) ca_left.insert(m.id);
    if (ca.size() != 2 || ca_left.contains(ca_expected + 1)) fail(o, "CA removed the wrong member");

    // DA: capacity 3 over {(0,1), (0.4,0.8), (0.5,0.7), (1,0)}.
    const std::vector<std::array<double, 2>> da_pts{{0.0, 1.0}, {0.4, 0.8}, {0.5, 0.7}, {1.0, 0.0}};
    // Exhaustive oracle: the non-boundary member with the lexicographically
    // smallest (nearest, second-nearest) Lp(0.5) distances.
    std::size_t da_expected = da_pts.size();
    std::pair<double, double> best{1e300, 1e300};
    for (std::size_t i = 0; i < da_pts.size(); ++i) {
        bool boundary = false;
        for (int k = 0; k < 2; ++k) {
            bool is_max = true;
            for (const auto& q : da_pts) is_max = is_max && da_pts[i][k] >= q[k];
            boundary = boundary || is_max;
        }
        if (boundary) continue;
        std::vector<double> d;
        for (std::size_t j = 0; j < da_pts.size(); ++j)
            if (j != i)
                d.push_back(oracle::lp_brute({da_pts[i][0], da_pts[i][1]}, {da_pts[j][0], da_pts[j][1]}, 0.5));
        std::sort(d.begin(), d.end());
        const bool tie = std::abs(d[0] - best.first) <= 1e-12;
        if ((!tie && d[0] < best.first) || (tie && d[1] < best.second)) {
            best = {d[0], d[1]};
            da_expected = i;
        }
    }
    const auto da_members = members_from(da_pts);
    const auto da = update_da(Archive<Pt>{ArchiveKind::Diversity, 3, {}}, std::span<const Pt>(da_members), senses);
    std::set<std::uint64_t> da_left;
    for (const auto& m : da.members) da_left.insert(m.id);
    if (da.size() != 3 || da_left.contains(da_expected + 1) || da_expected != 1)
        fail(o, "DA removed the wrong member");

    if (o.pass)
        o.detail = "CA removes (" + format_double(ca_pts[ca_expected][0]) + "," + format_double(ca_pts[ca_expected][1]) +
                   "), DA removes (0.4,0.8)";
    return o;
}

}  // namespace

int main() {
    const std::vector<Criterion> criteria{
        {"objective correctness", kObjectiveSeconds, objective_correctness},
        {"pareto oracle", kParetoSeconds, pareto_oracle},
        {"solver oracle", kSolverSeconds, solver_oracle},
        {"archive invariants", kArchiveSeconds, archive_invariants},
        {"trade-off emergence", 0.0, tradeoff_emergence},
        {"determinism", 0.0, determinism},
        {"truncation anchors", 0.0, truncation_anchors},
    };
    int failures = 0;
    for (const auto& c : criteria) {
        const auto start = std::chrono::steady_clock::now();
        Outcome o;
        try {
            o = c.check();
        } catch (const std::exception& e) {
            o = {false, std::string("exception: ") + e.what()};
        }
        const double seconds = std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
        if (c.budget_seconds > 0 && seconds >= c.budget_seconds) fail(o, "over the " + format_double(c.budget_seconds) + " s budget");
        failures += !o.pass;
        std::printf("%s  %-22s %s (%.2f s)\n", o.pass ? "PASS" : "FAIL", c.name, o.detail.c_str(), seconds);
    }
    std::printf("%d of %zu criteria failed\n", failures, criteria.size());
    return failures == 0 ? 0 : 1;
}
