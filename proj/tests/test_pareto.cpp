#include <doctest.h>

#include <algorithm>
#include <random>

#include "oracles.hpp"
#include "sokoarch/error.hpp"
#include "sokoarch/pareto.hpp"

using namespace sokoarch;

namespace {

std::vector<ObjectiveVector> random_points(std::mt19937_64& gen, std::size_t n, int grid) {
    // Coarse grid so duplicates and ties actually occur.
    std::uniform_int_distribution<int> u(0, grid);
    std::vector<ObjectiveVector> pts;
    for (std::size_t i = 0; i < n; ++i)
        pts.push_back({static_cast<double>(u(gen)) / grid, static_cast<double>(u(gen)) / grid});
    return pts;
}

std::vector<oracle::Point> raw(const std::vector<ObjectiveVector>& pts) {
    std::vector<oracle::Point> out;
    for (const auto& p : pts) out.push_back(p.values);
    return out;
}

}  // namespace

TEST_CASE("dominates follows the component-wise definition") {
    CHECK(dominates({0.6, 0.6}, {0.5, 0.6}));
    CHECK_FALSE(dominates({0.6, 0.4}, {0.4, 0.6}));
    CHECK_FALSE(dominates({0.4, 0.6}, {0.6, 0.4}));
    CHECK_FALSE(dominates({0.5, 0.5}, {0.5, 0.5}));
    CHECK_THROWS_AS(dominates({0.5, 0.5}, {0.5}), LengthMismatch);
}

TEST_CASE("dominance is irreflexive, asymmetric and transitive on samples") {
    std::mt19937_64 gen(7);
    for (int trial = 0; trial < 200; ++trial) {
        const auto pts = random_points(gen, 12, 5);
        for (const auto& a : pts) {
            CHECK_FALSE(dominates(a, a));
            for (const auto& b : pts) {
                if (dominates(a, b)) CHECK_FALSE(dominates(b, a));
                for (const auto& c : pts)
                    if (dominates(a, b) && dominates(b, c)) CHECK(dominates(a, c));
            }
        }
    }
}

TEST_CASE("nondominated_filter examples") {
    const std::vector<ObjectiveVector> incomparable{{1, 0}, {0, 1}, {0.4, 0.4}};
    CHECK(nondominated_filter(incomparable) == incomparable);

    const std::vector<ObjectiveVector> one_dominated{{0.5, 0.5}, {0.6, 0.6}};
    CHECK(nondominated_filter(one_dominated) == std::vector<ObjectiveVector>{{0.6, 0.6}});

    const std::vector<ObjectiveVector> dupes{{0.5, 0.5}, {0.2, 0.9}, {0.5, 0.5}, {0.1, 0.1}};
    CHECK(nondominated_filter(dupes) == std::vector<ObjectiveVector>{{0.5, 0.5}, {0.2, 0.9}, {0.5, 0.5}});

    CHECK(nondominated_filter({}).empty());
    const std::vector<ObjectiveVector> mixed{{0.5, 0.5}, {0.5}};
    CHECK_THROWS_AS(nondominated_filter(mixed), LengthMismatch);
}

TEST_CASE("nondominated_filter matches the all-pairs oracle and is idempotent") {
    std::mt19937_64 gen(2024);
    for (int trial = 0; trial < 300; ++trial) {
        const auto pts = random_points(gen, 1 + gen() % 64, trial % 2 ? 10 : 1000);
        const auto expected = oracle::nondominated_brute(raw(pts));
        CHECK(nondominated_indices(pts) == expected);
        const auto once = nondominated_filter(pts);
        CHECK(nondominated_filter(once) == once);
    }
}

TEST_CASE("hypervolume_2d anchors") {
    CHECK(hypervolume_2d({{{1, 1}}, {0, 0}}) == doctest::Approx(1.0));
    CHECK(hypervolume_2d({{}, {0, 0}}) == 0.0);
    CHECK(hypervolume_2d({{{0.5, 1}, {1, 0.5}}, {0, 0}}) == doctest::Approx(0.75).epsilon(1e-15));
}

TEST_CASE("hypervolume_2d errors") {
    CHECK_THROWS_AS(hypervolume_2d({{{0.5, 0.5, 0.5}}, {0, 0}}), DimensionUnsupported);
    CHECK_THROWS_AS(hypervolume_2d({{{0.5, 0.5}}, {0, 0, 0}}), DimensionUnsupported);
    CHECK_THROWS_AS(hypervolume_2d({{{0.5, -0.1}}, {0, 0}}), ReferenceViolation);
}

TEST_CASE("hypervolume_2d agrees with slab integration and is monotone and order-free") {
    std::mt19937_64 gen(99);
    for (int trial = 0; trial < 200; ++trial) {
        auto pts = random_points(gen, 1 + gen() % 30, 20);
        const double hv = hypervolume_2d({pts, {0, 0}});
        CHECK(hv == doctest::Approx(oracle::hypervolume_slabs(raw(pts), {0, 0})).epsilon(1e-12));

        std::shuffle(pts.begin(), pts.end(), gen);
        CHECK(hypervolume_2d({pts, {0, 0}}) == hv);

        auto grown = pts;
        grown.push_back(random_points(gen, 1, 20).front());
        CHECK(hypervolume_2d({grown, {0, 0}}) >= hv);

        // A point dominated by an existing one changes nothing.
        auto with_dominated = pts;
        ObjectiveVector d = pts.front();
        d[0] *= 0.5;
        with_dominated.push_back(d);
        CHECK(hypervolume_2d({with_dominated, {0, 0}}) == hv);
    }
}
