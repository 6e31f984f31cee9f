#include <doctest.h>

#include <random>

#include "oracles.hpp"
#include "sokoarch/genome.hpp"
#include "sokoarch/objectives.hpp"

using namespace sokoarch;

namespace {

// Interior rows given as strings; border added here.
Level level_with_rows(const std::vector<std::string>& interior) {
    const std::size_t w = interior[0].size() + 2;
    std::string text(w, '#');
    for (const auto& row : interior) text += "\n#" + row + "#";
    text += "\n" + std::string(w, '#');
    return parse_level(text);
}

}  // namespace

TEST_CASE("f_emp counts Floor over the whole grid") {
    const Level level = parse_level("#####\n#@$.#\n#   #\n#   #\n#####");
    CHECK(f_emp(level) == 6.0 / 25.0);
    CHECK(f_emp(parse_level("#####\n#@$.#\n#####")) == 0.0);

    const Level walled = level_with_rows({"@$.#", "    "});
    const Level opened = level_with_rows({"@$. ", "    "});
    CHECK(f_emp(opened) - f_emp(walled) == doctest::Approx(1.0 / 24.0).epsilon(1e-15));
}

TEST_CASE("f_div anchors") {
    CHECK(f_div(level_with_rows({"@$. ", "# ##", " ###"})) == 1.0);
    CHECK(f_div(level_with_rows({"@$.  ", "#####", "#####"})) == 0.0);
    // Floor counts 2, 1, 1: q = (1/2, 1/4, 1/4).
    const double expected = oracle::entropy_from_counts({2, 1, 1});
    CHECK(expected == doctest::Approx(0.946394).epsilon(1e-6));
    CHECK(f_div(level_with_rows({"@  ", "$ .", "## "})) == doctest::Approx(expected).epsilon(1e-12));
    // No Floor at all, and a single interior row.
    CHECK(f_div(level_with_rows({"@$.", "###"})) == 0.0);
    CHECK(f_div(level_with_rows({"@$.  "})) == 0.0);
}

TEST_CASE("objectives stay in range and f_div matches the entropy oracle") {
    Rng rng(10);
    const DesignSpec spec{8, 8, 3};
    for (int i = 0; i < 2000; ++i) {
        const Level level = decode(random_genome(spec, rng));
        const double e = f_emp(level), d = f_div(level);
        CHECK(e >= 0.0);
        CHECK(e <= 1.0);
        CHECK(d >= 0.0);
        CHECK(d <= 1.0);
        std::vector<int> counts;
        for (int r = 1; r < level.height() - 1; ++r) {
            int c = 0;
            for (int k = 1; k < level.width() - 1; ++k) c += level.at(r, k) == Tile::Floor;
            counts.push_back(c);
        }
        CHECK(std::abs(d - oracle::entropy_from_counts(counts)) <= 1e-12);
    }
}

TEST_CASE("f_div is 1 exactly for equal positive rows and 0 exactly for one occupied row") {
    std::mt19937_64 gen(12);
    for (int trial = 0; trial < 300; ++trial) {
        const auto text = oracle::random_level_text(gen, 6, 6, 2, 0.4);
        const Level level = parse_level(text);
        const auto counts = interior_floor_counts(level);
        const bool equal_positive =
            std::all_of(counts.begin(), counts.end(), [&](std::uint32_t c) { return c > 0 && c == counts[0]; });
        const auto occupied = std::count_if(counts.begin(), counts.end(), [](std::uint32_t c) { return c > 0; });
        CHECK((f_div(level) == 1.0) == equal_positive);
        CHECK((f_div(level) == 0.0) == (occupied <= 1));
    }
}
