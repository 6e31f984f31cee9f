#pragma once

#include <cstddef>
#include <cstdint>
#include <memory>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "sokoarch/level.hpp"

namespace sokoarch {

enum class Direction : std::uint8_t { Up, Down, Left, Right };

inline constexpr Direction kDirections[] = {Direction::Up, Direction::Down, Direction::Left, Direction::Right};

char direction_char(Direction d);

/// Parses a move string over U/D/L/R. Throws MoveStringInvalid.
std::vector<Direction> parse_moves(std::string_view moves);
std::string format_moves(const std::vector<Direction>& moves);

/// Immutable geometry shared by every state of one level.
struct Board {
    int width = 0;
    int height = 0;
    std::vector<std::uint8_t> wall;
    std::vector<std::uint8_t> target;

    int offset(Direction d) const;
};

/// Player and boxes on a fixed board. Cells are row-major indices; boxes
/// are kept sorted.
struct GameState {
    std::shared_ptr<const Board> board;
    int player = 0;
    std::vector<int> boxes;

    static GameState from_level(const Level& level);
    Level to_level() const;

    friend bool operator==(const GameState& a, const GameState& b) {
        return a.player == b.player && a.boxes == b.boxes;
    }
};

/// One step of standard Sokoban rules; nullopt when the move is rejected
/// (wall ahead, or a box that cannot be pushed).
std::optional<GameState> apply_move(const GameState& state, Direction dir);

bool check_win(const GameState& state);

/// Some box off a target has walls on two orthogonally adjacent sides.
bool is_corner_deadlocked(const GameState& state);

struct SolveLimits {
    std::size_t max_states = 200'000;
    std::size_t max_solution_pushes = 1'000;

    friend bool operator==(const SolveLimits&, const SolveLimits&) = default;
};

enum class Verdict { Solvable, Unsolvable, LimitExceeded };

const char* verdict_name(Verdict v);

struct SolveOutcome {
    Verdict verdict = Verdict::Unsolvable;
    std::string solution;  ///< U/D/L/R moves; meaningful when Solvable
    std::size_t states_expanded = 0;
    std::size_t pushes = 0;
};

/// Breadth-first search over push states (box set + the minimal cell of the
/// player's reachable region), expanding boxes in ascending cell order and
/// directions in U, D, L, R order. Corner-deadlocked states are pruned.
/// Solutions are shortest in pushes; walking segments are shortest paths
/// found with the same direction order.
SolveOutcome solve(const Level& level, const SolveLimits& limits = {});

struct PlayResult {
    GameState final_state;
    std::vector<std::size_t> rejected;  ///< indices of moves that were skipped
    bool won = false;
};

PlayResult validate_playthrough(const Level& level, const std::vector<Direction>& moves);

}  // namespace sokoarch
