#pragma once

#include <array>
#include <span>
#include <string>

#include "sokoarch/engine.hpp"
#include "sokoarch/genome.hpp"
#include "sokoarch/solver.hpp"

namespace sokoarch {

struct SokobanDetails {
    Verdict verdict = Verdict::Unsolvable;
    std::string solution;
    std::size_t pushes = 0;
    std::size_t states_expanded = 0;
};

/// Decodes, scores (f_emp, f_div), and runs the solver. Only a Solvable
/// verdict is feasible; LimitExceeded is infeasible and flagged as such.
/// Throws InvalidGenome.
Evaluation<SokobanDetails> evaluate(const Genome& genome, const SolveLimits& limits);

/// Sokoban level generation bound to the engine: maximise emptiness and
/// spatial diversity subject to solvability.
class SokobanProblem {
public:
    using Genome = sokoarch::Genome;
    using Details = SokobanDetails;

    SokobanProblem(DesignSpec spec, SolveLimits limits) : spec_(spec), limits_(limits) {}

    const DesignSpec& spec() const noexcept { return spec_; }
    const SolveLimits& limits() const noexcept { return limits_; }

    std::span<const Sense> senses() const noexcept { return kSenses; }
    Genome random_genome(Rng& rng) const { return sokoarch::random_genome(spec_, rng); }
    std::pair<Genome, Genome> crossover(const Genome& a, const Genome& b, Rng& rng) const {
        return sokoarch::crossover(a, b, rng);
    }
    Genome mutate(const Genome& g, double rate, Rng& rng) const { return sokoarch::mutate(g, rate, rng); }
    Evaluation<SokobanDetails> evaluate(const Genome& g) const { return sokoarch::evaluate(g, limits_); }
    double default_mutation_rate() const { return sokoarch::default_mutation_rate(spec_); }
    ObjectiveVector hypervolume_reference() const { return {0.0, 0.0}; }
    std::string genome_text(const Genome& g) const;

private:
    static constexpr std::array<Sense, 2> kSenses{Sense::Maximize, Sense::Maximize};
    DesignSpec spec_;
    SolveLimits limits_;
};

static_assert(Problem<SokobanProblem>);

using SokobanMember = MemberOf<SokobanProblem>;

}  // namespace sokoarch
