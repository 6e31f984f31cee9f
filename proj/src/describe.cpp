#include "sokoarch/experiment.hpp"
#include "sokoarch/objectives.hpp"

namespace sokoarch {

LevelReport describe_level(std::string_view text, const SolveLimits& limits) {
    const Level level = parse_level(text);
    return {f_emp(level), f_div(level), solve(level, limits)};
}

std::string format_report(const LevelReport& r) {
    std::string s;
    s += "f_emp: " + format_double(r.f_emp) + '\n';
    s += "f_div: " + format_double(r.f_div) + '\n';
    s += "verdict: " + std::string(verdict_name(r.outcome.verdict)) + '\n';
    s += std::string("feasible: ") + (r.outcome.verdict == Verdict::Solvable ? "yes" : "no") + '\n';
    if (r.outcome.verdict == Verdict::Solvable) {
        s += "solution: " + r.outcome.solution + '\n';
        s += "pushes: " + std::to_string(r.outcome.pushes) + '\n';
    }
    s += "states expanded: " + std::to_string(r.outcome.states_expanded) + '\n';
    return s;
}

}  // namespace sokoarch
