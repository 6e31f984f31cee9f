#include "sokoarch/level.hpp"

#include <algorithm>

#include "sokoarch/error.hpp"

namespace sokoarch {

char tile_symbol(Tile t) {
    switch (t) {
        case Tile::Wall: return '#';
        case Tile::Floor: return ' ';
        case Tile::Box: return '$';
        case Tile::Target: return '.';
        case Tile::Player: return '@';
        case Tile::BoxOnTarget: return '*';
        case Tile::PlayerOnTarget: return '+';
    }
    return '?';
}

std::optional<Tile> tile_from_symbol(char c) {
    switch (c) {
        case '#': return Tile::Wall;
        case ' ': return Tile::Floor;
        case '$': return Tile::Box;
        case '.': return Tile::Target;
        case '@': return Tile::Player;
        case '*': return Tile::BoxOnTarget;
        case '+': return Tile::PlayerOnTarget;
        default: return std::nullopt;
    }
}

std::optional<GridProblem> check_level_grid(int width, int height, std::span<const Tile> cells) {
    if (width < 3 || height < 3) return GridProblem{"level must be at least 3x3", -1, -1};
    if (cells.size() != static_cast<std::size_t>(width) * static_cast<std::size_t>(height))
        return GridProblem{"cell count does not match dimensions", -1, -1};

    int players = 0, boxes = 0, targets = 0;
    for (int r = 0; r < height; ++r) {
        for (int c = 0; c < width; ++c) {
            const Tile t = cells[static_cast<std::size_t>(r * width + c)];
            const bool border = r == 0 || c == 0 || r == height - 1 || c == width - 1;
            if (border && t != Tile::Wall) return GridProblem{"border cell is not a wall", r, c};
            if (has_player(t) && ++players > 1) return GridProblem{"more than one player", r, c};
            boxes += has_box(t);
            targets += has_target(t);
        }
    }
    if (players == 0) return GridProblem{"no player", -1, -1};
    if (boxes != targets)
        return GridProblem{"box count " + std::to_string(boxes) + " differs from target count " +
                               std::to_string(targets),
                           -1, -1};
    if (boxes == 0) return GridProblem{"no boxes", -1, -1};
    return std::nullopt;
}

Level::Level(int width, int height, std::vector<Tile> cells)
    : width_(width), height_(height), cells_(std::move(cells)) {
    if (auto problem = check_level_grid(width_, height_, cells_)) throw InvalidGenome(problem->message);
    for (Tile t : cells_) {
        floors_ += t == Tile::Floor;
        boxes_ += has_box(t);
        targets_ += has_target(t);
    }
}

Level parse_level(std::string_view text) {
    if (!text.empty() && text.back() == '\n') text.remove_suffix(1);
    if (text.empty()) throw ParseError("empty level text", 0, -1);

    std::vector<Tile> cells;
    int width = -1;
    int row = 0;
    std::size_t start = 0;
    while (true) {
        const std::size_t end = text.find('\n', start);
        const std::string_view line =
            text.substr(start, end == std::string_view::npos ? std::string_view::npos : end - start);
        for (std::size_t c = 0; c < line.size(); ++c) {
            const auto tile = tile_from_symbol(line[c]);
            if (!tile)
                throw ParseError(std::string("unknown symbol '") + line[c] + "'", row, static_cast<int>(c));
            cells.push_back(*tile);
        }
        if (width < 0) {
            width = static_cast<int>(line.size());
        } else if (static_cast<int>(line.size()) != width) {
            throw ParseError("ragged row: expected " + std::to_string(width) + " columns, found " +
                                 std::to_string(line.size()),
                             row, std::min(width, static_cast<int>(line.size())));
        }
        ++row;
        if (end == std::string_view::npos) break;
        start = end + 1;
    }

    if (auto problem = check_level_grid(width, row, cells))
        throw ParseError(problem->message, problem->row, problem->col);
    return Level(width, row, std::move(cells));
}

std::string serialize_level(const Level& level) {
    std::string out;
    out.reserve(static_cast<std::size_t>((level.width() + 1) * level.height()));
    for (int r = 0; r < level.height(); ++r) {
        if (r > 0) out.push_back('\n');
        for (int c = 0; c < level.width(); ++c) out.push_back(tile_symbol(level.at(r, c)));
    }
    return out;
}

std::string level_to_row_text(const Level& level) {
    std::string s = serialize_level(level);
    std::replace(s.begin(), s.end(), '\n', '|');
    return s;
}

Level level_from_row_text(std::string_view text) {
    std::string s(text);
    std::replace(s.begin(), s.end(), '|', '\n');
    return parse_level(s);
}

}  // namespace sokoarch
