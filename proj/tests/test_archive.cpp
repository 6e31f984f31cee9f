#include <doctest.h>

#include <algorithm>
#include <array>
#include <random>

#include "oracles.hpp"
#include "sokoarch/archive.hpp"

using namespace sokoarch;

namespace {

struct Toy {
    std::uint64_t id = 0;
    int genome = 0;
    ObjectiveVector objectives;
    bool feasible = true;
};

constexpr std::array<Sense, 2> kMax{Sense::Maximize, Sense::Maximize};

Toy toy(std::uint64_t id, double a, double b, bool feasible = true) {
    return Toy{id, static_cast<int>(id), {a, b}, feasible};
}

std::vector<ObjectiveVector> objectives_of(const std::vector<Toy>& members) {
    std::vector<ObjectiveVector> out;
    for (const auto& m : members) out.push_back(m.objectives);
    return out;
}

std::vector<std::uint64_t> ids_of(const std::vector<Toy>& members) {
    std::vector<std::uint64_t> out;
    for (const auto& m : members) out.push_back(m.id);
    return out;
}

}  // namespace

TEST_CASE("indicator_fitness matches the definition") {
    std::mt19937_64 gen(20);
    std::uniform_real_distribution<double> u(-1.0, 1.0);
    for (int trial = 0; trial < 100; ++trial) {
        const std::size_t n = 2 + gen() % 20;
        std::vector<ObjectiveVector> pts;
        std::vector<oracle::Point> raw;
        for (std::size_t i = 0; i < n; ++i) {
            const double a = u(gen), b = u(gen);
            pts.push_back({a, b});
            raw.push_back({a, b});
        }
        const auto got = indicator_fitness(pts, 0.05);
        const auto want = oracle::indicator_fitness_brute(raw, 0.05);
        for (std::size_t i = 0; i < n; ++i) CHECK(got[i] == doctest::Approx(want[i]).epsilon(1e-12));
    }
}

TEST_CASE("CA truncation drops the least contributing member") {
    Archive<Toy> ca{ArchiveKind::Convergence, 2, {}};
    const std::vector<Toy> cand{toy(1, 1.0, 0.0), toy(2, 0.5, 0.5), toy(3, 0.0, 1.0)};
    const auto out = update_ca(ca, std::span<const Toy>(cand), kMax, 0.05);
    CHECK(ids_of(out.members) == std::vector<std::uint64_t>{1, 3});

    const auto fit = oracle::indicator_fitness_brute({{-1.0, 0.0}, {-0.5, -0.5}, {0.0, -1.0}}, 0.05);
    CHECK(std::min_element(fit.begin(), fit.end()) - fit.begin() == 1);
}

TEST_CASE("CA ties fall to the lowest id") {
    Archive<Toy> ca{ArchiveKind::Convergence, 1, {}};
    const std::vector<Toy> cand{toy(7, 1.0, 0.0), toy(4, 0.0, 1.0)};
    const auto out = update_ca(ca, std::span<const Toy>(cand), kMax, 0.05);
    CHECK(ids_of(out.members) == std::vector<std::uint64_t>{7});
}

TEST_CASE("DA truncation removes the most crowded non-boundary member") {
    Archive<Toy> da{ArchiveKind::Diversity, 3, {}};
    const std::vector<Toy> cand{toy(1, 0.0, 1.0), toy(2, 0.4, 0.8), toy(3, 0.5, 0.7), toy(4, 1.0, 0.0)};
    const auto out = update_da(da, std::span<const Toy>(cand), kMax);
    CHECK(ids_of(out.members) == std::vector<std::uint64_t>{1, 3, 4});

    const auto out2 = update_da(Archive<Toy>{ArchiveKind::Diversity, 2, {}}, std::span<const Toy>(cand), kMax);
    CHECK(ids_of(out2.members) == std::vector<std::uint64_t>{1, 4});
}

TEST_CASE("updates reject dominated, infeasible and duplicate members") {
    Archive<Toy> ca{ArchiveKind::Convergence, 10, {toy(1, 0.5, 0.5)}};
    std::vector<Toy> cand{toy(2, 0.4, 0.4), toy(3, 0.9, 0.9, false), toy(4, 0.6, 0.2)};
    Toy dup = toy(5, 0.1, 0.9);
    dup.genome = 1;
    cand.push_back(dup);
    const auto out = update_ca(ca, std::span<const Toy>(cand), kMax, 0.05);
    CHECK(ids_of(out.members) == std::vector<std::uint64_t>{1, 4});

    const std::vector<Toy> better{toy(6, 0.6, 0.6)};
    CHECK(ids_of(update_da(out, std::span<const Toy>(better), kMax).members) == std::vector<std::uint64_t>{6});
}

TEST_CASE("archive invariants hold and updates ignore candidate order") {
    std::mt19937_64 gen(21);
    std::uniform_int_distribution<int> grid(0, 12);
    for (int trial = 0; trial < 200; ++trial) {
        std::vector<Toy> cand;
        const std::size_t n = 1 + gen() % 40;
        for (std::size_t i = 0; i < n; ++i)
            cand.push_back(toy(i + 1, grid(gen) / 12.0, grid(gen) / 12.0, gen() % 5 != 0));
        const std::size_t cap = 1 + gen() % 8;
        auto shuffled = cand;
        std::shuffle(shuffled.begin(), shuffled.end(), gen);

        const Archive<Toy> empty_ca{ArchiveKind::Convergence, cap, {}};
        const Archive<Toy> empty_da{ArchiveKind::Diversity, cap, {}};
        const auto ca = update_ca(empty_ca, std::span<const Toy>(cand), kMax, 0.05);
        const auto da = update_da(empty_da, std::span<const Toy>(cand), kMax);
        CHECK(ids_of(ca.members) == ids_of(update_ca(empty_ca, std::span<const Toy>(shuffled), kMax, 0.05).members));
        CHECK(ids_of(da.members) == ids_of(update_da(empty_da, std::span<const Toy>(shuffled), kMax).members));

        for (const auto* a : {&ca, &da}) {
            CHECK(a->size() <= cap);
            for (const auto& m : a->members) CHECK(m.feasible);
            const auto pts = objectives_of(a->members);
            for (const auto& p : pts)
                for (const auto& q : pts) CHECK_FALSE(dominates(p, q));
            auto ids = ids_of(a->members);
            CHECK(std::is_sorted(ids.begin(), ids.end()));
            CHECK(std::adjacent_find(ids.begin(), ids.end()) == ids.end());
        }
    }
}
