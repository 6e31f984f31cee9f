#pragma once

#include <cstdint>
#include <optional>
#include <span>
#include <string>
#include <string_view>
#include <vector>

namespace sokoarch {

enum class Tile : std::uint8_t {
    Wall = 0,
    Floor = 1,
    Box = 2,
    Target = 3,
    Player = 4,
    BoxOnTarget = 5,
    PlayerOnTarget = 6,
};

inline constexpr bool has_box(Tile t) { return t == Tile::Box || t == Tile::BoxOnTarget; }
inline constexpr bool has_target(Tile t) {
    return t == Tile::Target || t == Tile::BoxOnTarget || t == Tile::PlayerOnTarget;
}
inline constexpr bool has_player(Tile t) { return t == Tile::Player || t == Tile::PlayerOnTarget; }

/// Standard Sokoban text symbols: '#' ' ' '$' '.' '@' '*' '+'.
char tile_symbol(Tile t);
std::optional<Tile> tile_from_symbol(char c);

/// Where a grid breaks the level invariants, if anywhere.
struct GridProblem {
    std::string message;
    int row = -1;
    int col = -1;
};

/// Checks the level invariants: border entirely Wall, exactly one player,
/// as many boxes as targets (BoxOnTarget counts as one of each), at least
/// one box.
std::optional<GridProblem> check_level_grid(int width, int height, std::span<const Tile> cells);

/// A rectangular, wall-bordered Sokoban level (the phenotype).
class Level {
public:
    /// Throws InvalidGenome when the grid breaks the level invariants.
    Level(int width, int height, std::vector<Tile> cells);

    int width() const noexcept { return width_; }
    int height() const noexcept { return height_; }
    Tile at(int row, int col) const { return cells_[static_cast<std::size_t>(row * width_ + col)]; }
    std::span<const Tile> cells() const noexcept { return cells_; }

    int floor_count() const noexcept { return floors_; }
    int box_count() const noexcept { return boxes_; }
    int target_count() const noexcept { return targets_; }

    friend bool operator==(const Level&, const Level&) = default;

private:
    int width_;
    int height_;
    std::vector<Tile> cells_;
    int floors_ = 0;
    int boxes_ = 0;
    int targets_ = 0;
};

/// Rows separated by '\n'; one trailing newline is accepted. Throws
/// ParseError (with row/column) on unknown symbols, ragged rows, or a grid
/// that breaks the level invariants.
Level parse_level(std::string_view text);

/// Inverse of parse_level; no trailing newline.
std::string serialize_level(const Level& level);

/// Single-line form used in tabular exports: rows joined by '|'.
std::string level_to_row_text(const Level& level);
Level level_from_row_text(std::string_view text);

}  // namespace sokoarch
