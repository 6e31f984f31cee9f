#include "sokoarch/genome.hpp"

#include <array>

#include "sokoarch/error.hpp"

namespace sokoarch {
namespace {

using Cells = std::vector<std::size_t>;

template <class Pred>
Cells cells_where(const std::vector<Tile>& genes, Pred pred) {
    Cells out;
    for (std::size_t i = 0; i < genes.size(); ++i)
        if (pred(genes[i])) out.push_back(i);
    return out;
}

std::size_t pick(const Cells& pool, Rng& rng) { return pool[rng.uniform_index(pool.size())]; }

struct Counts {
    int players = 0;
    int boxes = 0;
    int targets = 0;
};

Counts count(const std::vector<Tile>& genes) {
    Counts c;
    for (Tile t : genes) {
        c.players += has_player(t);
        c.boxes += has_box(t);
        c.targets += has_target(t);
    }
    return c;
}

// Removes one target: a plain Target if there is one, else the player's.
void drop_target(std::vector<Tile>& genes, Rng& rng) {
    const Cells plain = cells_where(genes, [](Tile t) { return t == Tile::Target; });
    if (!plain.empty()) {
        genes[pick(plain, rng)] = Tile::Floor;
        return;
    }
    for (Tile& t : genes)
        if (t == Tile::PlayerOnTarget) t = Tile::Player;
}

}  // namespace

std::vector<FieldError> DesignSpec::validate() const {
    std::vector<FieldError> errors;
    if (width < 3) errors.push_back({"width", "must be at least 3"});
    if (height < 3) errors.push_back({"height", "must be at least 3"});
    if (max_boxes < 1) errors.push_back({"max_boxes", "must be at least 1"});
    if (width >= 3 && height >= 3 && max_boxes >= 1 && max_boxes > interior_cells() / 3)
        errors.push_back({"max_boxes", "must not exceed a third of the interior cell count (" +
                                           std::to_string(interior_cells() / 3) + ")"});
    return errors;
}

std::string genome_problem(const Genome& genome) {
    const auto& spec = genome.spec;
    if (spec.width < 3 || spec.height < 3) return "design spec smaller than 3x3";
    if (genome.genes.size() != static_cast<std::size_t>(spec.interior_cells()))
        return "gene count " + std::to_string(genome.genes.size()) + " does not match interior size " +
               std::to_string(spec.interior_cells());
    const Counts c = count(genome.genes);
    if (c.players != 1) return "expected exactly one player, found " + std::to_string(c.players);
    if (c.boxes != c.targets) return "box and target counts differ";
    if (c.boxes < 1) return "no boxes";
    if (c.boxes > spec.max_boxes) return "more boxes than max_boxes";
    return {};
}

Level decode(const Genome& genome) {
    if (auto problem = genome_problem(genome); !problem.empty()) throw InvalidGenome(problem);
    const int w = genome.spec.width;
    const int h = genome.spec.height;
    std::vector<Tile> cells(static_cast<std::size_t>(w * h), Tile::Wall);
    const int iw = genome.spec.interior_width();
    for (int r = 0; r < genome.spec.interior_height(); ++r)
        for (int c = 0; c < iw; ++c)
            cells[static_cast<std::size_t>((r + 1) * w + c + 1)] = genome.genes[static_cast<std::size_t>(r * iw + c)];
    return Level(w, h, std::move(cells));
}

Genome encode(const Level& level, const DesignSpec& spec) {
    if (level.width() != spec.width || level.height() != spec.height)
        throw SpecMismatch("level dimensions do not match the design spec");
    Genome g{spec, {}};
    g.genes.reserve(static_cast<std::size_t>(spec.interior_cells()));
    for (int r = 1; r < spec.height - 1; ++r)
        for (int c = 1; c < spec.width - 1; ++c) g.genes.push_back(level.at(r, c));
    if (auto problem = genome_problem(g); !problem.empty()) throw InvalidGenome(problem);
    return g;
}

Genome repair(Genome genome, Rng& rng) {
    auto& genes = genome.genes;
    if (genome.spec.width < 3 || genome.spec.height < 3 ||
        genes.size() != static_cast<std::size_t>(genome.spec.interior_cells()))
        throw InvalidGenome("gene count does not match the design spec");
    if (genes.size() < 3) throw Unrepairable("interior has fewer than 3 cells");

    // 1. Exactly one player.
    bool seen_player = false;
    for (Tile& t : genes) {
        if (!has_player(t)) continue;
        if (seen_player) t = Tile::Floor;
        seen_player = true;
    }
    if (!seen_player) {
        Cells pool = cells_where(genes, [](Tile t) { return t == Tile::Floor; });
        if (pool.empty()) pool = cells_where(genes, [](Tile t) { return t != Tile::Wall; });
        if (pool.empty()) pool = cells_where(genes, [](Tile) { return true; });
        Tile& cell = genes[pick(pool, rng)];
        cell = has_target(cell) ? Tile::PlayerOnTarget : Tile::Player;
    }

    // 2. Equal box and target counts.
    Counts c = count(genes);
    while (c.boxes > c.targets) {
        genes[pick(cells_where(genes, [](Tile t) { return t == Tile::Box; }), rng)] = Tile::Floor;
        --c.boxes;
    }
    while (c.targets > c.boxes) {
        drop_target(genes, rng);
        --c.targets;
    }

    // 3. At least one box.
    if (c.boxes == 0) {
        for (Tile placed : {Tile::Box, Tile::Target}) {
            Cells pool = cells_where(genes, [](Tile t) { return t == Tile::Floor; });
            if (pool.empty()) pool = cells_where(genes, [](Tile t) { return t == Tile::Wall; });
            genes[pick(pool, rng)] = placed;
        }
        c.boxes = c.targets = 1;
    }

    // 4. At most max_boxes.
    while (c.boxes > genome.spec.max_boxes) {
        const std::size_t i = pick(cells_where(genes, has_box), rng);
        const bool on_target = genes[i] == Tile::BoxOnTarget;
        genes[i] = Tile::Floor;
        if (!on_target) drop_target(genes, rng);
        --c.boxes;
    }
    return genome;
}

Genome sample_genes(const DesignSpec& spec, Rng& rng) {
    static constexpr std::array<double, 4> weights{0.55, 0.35, 0.05, 0.05};
    static constexpr std::array<Tile, 4> tiles{Tile::Floor, Tile::Wall, Tile::Box, Tile::Target};
    Genome g{spec, {}};
    g.genes.resize(static_cast<std::size_t>(spec.interior_cells()));
    for (Tile& t : g.genes) t = tiles[rng.weighted(weights)];
    return g;
}

Genome random_genome(const DesignSpec& spec, Rng& rng) { return repair(sample_genes(spec, rng), rng); }

Genome splice(const Genome& a, const Genome& b, std::size_t cut) {
    if (!(a.spec == b.spec) || a.genes.size() != b.genes.size())
        throw SpecMismatch("crossover parents have different design specs");
    Genome child = a;
    std::copy(b.genes.begin() + static_cast<std::ptrdiff_t>(cut), b.genes.end(),
              child.genes.begin() + static_cast<std::ptrdiff_t>(cut));
    return child;
}

std::pair<Genome, Genome> crossover(const Genome& a, const Genome& b, Rng& rng) {
    if (!(a.spec == b.spec) || a.genes.size() != b.genes.size())
        throw SpecMismatch("crossover parents have different design specs");
    if (a.genes.size() < 2) throw Unrepairable("interior too small for crossover");
    const std::size_t cut = 1 + rng.uniform_index(a.genes.size() - 1);
    Genome first = repair(splice(a, b, cut), rng);
    Genome second = repair(splice(b, a, cut), rng);
    return {std::move(first), std::move(second)};
}

Genome resample_genes(const Genome& genome, double rate, Rng& rng) {
    static constexpr std::array<Tile, 4> alphabet{Tile::Wall, Tile::Floor, Tile::Box, Tile::Target};
    Genome out = genome;
    for (Tile& t : out.genes)
        if (rng.bernoulli(rate)) t = alphabet[rng.uniform_index(alphabet.size())];
    return out;
}

Genome mutate(const Genome& genome, double rate, Rng& rng) {
    return repair(resample_genes(genome, rate, rng), rng);
}

}  // namespace sokoarch
