#pragma once

#include <string>
#include <utility>
#include <vector>

#include "sokoarch/level.hpp"
#include "sokoarch/rng.hpp"

namespace sokoarch {

struct FieldError {
    std::string field;
    std::string message;
};

/// Designable level parameters. The border is always Wall.
struct DesignSpec {
    int width = 8;
    int height = 8;
    int max_boxes = 3;

    int interior_width() const noexcept { return width - 2; }
    int interior_height() const noexcept { return height - 2; }
    int interior_cells() const noexcept { return interior_width() * interior_height(); }

    /// Empty when the spec is usable.
    std::vector<FieldError> validate() const;

    friend bool operator==(const DesignSpec&, const DesignSpec&) = default;
};

/// Row-major interior tiles of a level.
struct Genome {
    DesignSpec spec;
    std::vector<Tile> genes;

    friend bool operator==(const Genome&, const Genome&) = default;
};

/// Empty when the genome satisfies the repaired-genome invariants.
std::string genome_problem(const Genome& genome);

/// Wraps the genes in a wall border. Throws InvalidGenome.
Level decode(const Genome& genome);

/// Interior of `level` as a genome under `spec`. Throws SpecMismatch when
/// the dimensions differ and InvalidGenome when the result is not valid.
Genome encode(const Level& level, const DesignSpec& spec);

/// Restores the genome invariants:
///  1. players: keep the first in row-major order, extras become Floor; with
///     none, a uniformly chosen Floor (else non-Wall, else any) cell gets one;
///  2. box/target surplus: uniformly chosen plain Box (or Target) cells
///     become Floor one at a time;
///  3. no boxes: a Floor (else Wall) cell becomes Box, then another Target;
///  4. more than max_boxes: a uniformly chosen box-bearing cell is cleared
///     together with one uniformly chosen plain target.
/// A genome that is already valid is returned unchanged and draws nothing.
/// Throws Unrepairable for interiors with fewer than 3 cells.
Genome repair(Genome genome, Rng& rng);

/// Pre-repair sample: genes drawn i.i.d. with weights Floor 0.55,
/// Wall 0.35, Box 0.05, Target 0.05.
Genome sample_genes(const DesignSpec& spec, Rng& rng);
Genome random_genome(const DesignSpec& spec, Rng& rng);

/// Genes a[0, cut) followed by b[cut, L), unrepaired.
Genome splice(const Genome& a, const Genome& b, std::size_t cut);

/// Single-point crossover with the cut drawn uniformly from 1..L-1; both
/// children repaired (first child first). Throws SpecMismatch.
std::pair<Genome, Genome> crossover(const Genome& a, const Genome& b, Rng& rng);

/// Pre-repair mutation: every gene draws one uniform01(); on a hit it is
/// replaced by a uniform choice among Wall, Floor, Box, Target.
Genome resample_genes(const Genome& genome, double rate, Rng& rng);
Genome mutate(const Genome& genome, double rate, Rng& rng);

inline double default_mutation_rate(const DesignSpec& spec) {
    return 1.0 / static_cast<double>(spec.interior_cells());
}

}  // namespace sokoarch
