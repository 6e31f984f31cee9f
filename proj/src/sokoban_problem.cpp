#include "sokoarch/sokoban_problem.hpp"

#include "sokoarch/objectives.hpp"

namespace sokoarch {

Evaluation<SokobanDetails> evaluate(const Genome& genome, const SolveLimits& limits) {
    const Level level = decode(genome);
    const SolveOutcome outcome = solve(level, limits);
    Evaluation<SokobanDetails> e;
    e.objectives = ObjectiveVector{f_emp(level), f_div(level)};
    e.feasible = outcome.verdict == Verdict::Solvable;
    e.limit_exceeded = outcome.verdict == Verdict::LimitExceeded;
    e.details = {outcome.verdict, outcome.solution, outcome.pushes, outcome.states_expanded};
    return e;
}

std::string SokobanProblem::genome_text(const Genome& g) const {
    std::string s;
    s.reserve(g.genes.size());
    for (Tile t : g.genes) s.push_back(tile_symbol(t));
    return s;
}

}  // namespace sokoarch
