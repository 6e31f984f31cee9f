#include "sokoarch/objectives.hpp"

#include <algorithm>
#include <cmath>

#include "sokoarch/kernels.hpp"

namespace sokoarch {
namespace {

std::span<const std::uint8_t> as_bytes(std::span<const Tile> cells) {
    return {reinterpret_cast<const std::uint8_t*>(cells.data()), cells.size()};
}

}  // namespace

std::vector<std::uint32_t> interior_floor_counts(const Level& level) {
    const auto w = static_cast<std::size_t>(level.width());
    const auto rows = static_cast<std::size_t>(level.height() - 2);
    std::vector<std::uint32_t> counts(rows);
    // Whole rows are counted; border columns are walls and contribute nothing.
    kernels::active_kernels().count_equal_rows(as_bytes(level.cells()).subspan(w, rows * w), w,
                                               static_cast<std::uint8_t>(Tile::Floor), counts);
    return counts;
}

double f_emp(const Level& level) {
    const auto counts = interior_floor_counts(level);
    std::uint64_t floors = 0;
    for (auto c : counts) floors += c;
    return static_cast<double>(floors) / (static_cast<double>(level.width()) * level.height());
}

double f_div(const Level& level) {
    const auto counts = interior_floor_counts(level);
    const std::size_t n = counts.size();
    if (n < 2) return 0.0;

    const std::size_t occupied = static_cast<std::size_t>(
        std::count_if(counts.begin(), counts.end(), [](std::uint32_t c) { return c > 0; }));
    if (occupied <= 1) return 0.0;
    if (occupied == n && std::all_of(counts.begin(), counts.end(), [&](std::uint32_t c) { return c == counts[0]; }))
        return 1.0;

    const double row_width = level.width() - 2;
    std::vector<double> p(n);
    double total = 0.0;
    for (std::size_t i = 0; i < n; ++i) {
        p[i] = counts[i] / row_width;
        total += p[i];
    }
    double entropy = 0.0;
    for (double pi : p) {
        if (pi == 0.0) continue;
        const double q = pi / total;
        entropy -= q * std::log(q);
    }
    return std::clamp(entropy / std::log(static_cast<double>(n)), 0.0, 1.0);
}

}  // namespace sokoarch
