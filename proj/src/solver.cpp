#include "sokoarch/solver.hpp"

#include <algorithm>
#include <deque>
#include <unordered_set>

#include "sokoarch/error.hpp"

namespace sokoarch {

char direction_char(Direction d) {
    switch (d) {
        case Direction::Up: return 'U';
        case Direction::Down: return 'D';
        case Direction::Left: return 'L';
        case Direction::Right: return 'R';
    }
    return '?';
}

std::vector<Direction> parse_moves(std::string_view moves) {
    std::vector<Direction> out;
    out.reserve(moves.size());
    for (std::size_t i = 0; i < moves.size(); ++i) {
        switch (moves[i]) {
            case 'U': out.push_back(Direction::Up); break;
            case 'D': out.push_back(Direction::Down); break;
            case 'L': out.push_back(Direction::Left); break;
            case 'R': out.push_back(Direction::Right); break;
            default:
                throw MoveStringInvalid(std::string("invalid move character '") + moves[i] + "' at position " +
                                            std::to_string(i),
                                        i);
        }
    }
    return out;
}

std::string format_moves(const std::vector<Direction>& moves) {
    std::string s;
    s.reserve(moves.size());
    for (Direction d : moves) s.push_back(direction_char(d));
    return s;
}

const char* verdict_name(Verdict v) {
    switch (v) {
        case Verdict::Solvable: return "Solvable";
        case Verdict::Unsolvable: return "Unsolvable";
        case Verdict::LimitExceeded: return "LimitExceeded";
    }
    return "?";
}

int Board::offset(Direction d) const {
    switch (d) {
        case Direction::Up: return -width;
        case Direction::Down: return width;
        case Direction::Left: return -1;
        case Direction::Right: return 1;
    }
    return 0;
}

GameState GameState::from_level(const Level& level) {
    auto board = std::make_shared<Board>();
    board->width = level.width();
    board->height = level.height();
    const auto cells = level.cells();
    board->wall.resize(cells.size());
    board->target.resize(cells.size());
    GameState state;
    for (std::size_t i = 0; i < cells.size(); ++i) {
        const Tile t = cells[i];
        board->wall[i] = t == Tile::Wall;
        board->target[i] = has_target(t);
        if (has_box(t)) state.boxes.push_back(static_cast<int>(i));
        if (has_player(t)) state.player = static_cast<int>(i);
    }
    state.board = std::move(board);
    return state;
}

Level GameState::to_level() const {
    std::vector<Tile> cells(board->wall.size());
    for (std::size_t i = 0; i < cells.size(); ++i)
        cells[i] = board->wall[i] ? Tile::Wall : board->target[i] ? Tile::Target : Tile::Floor;
    for (int b : boxes) cells[static_cast<std::size_t>(b)] = board->target[static_cast<std::size_t>(b)] ? Tile::BoxOnTarget : Tile::Box;
    auto& p = cells[static_cast<std::size_t>(player)];
    p = p == Tile::Target ? Tile::PlayerOnTarget : Tile::Player;
    return Level(board->width, board->height, std::move(cells));
}

std::optional<GameState> apply_move(const GameState& state, Direction dir) {
    const Board& b = *state.board;
    const int step = b.offset(dir);
    const int next = state.player + step;
    if (b.wall[static_cast<std::size_t>(next)]) return std::nullopt;
    auto box = std::lower_bound(state.boxes.begin(), state.boxes.end(), next);
    if (box == state.boxes.end() || *box != next) {
        GameState moved = state;
        moved.player = next;
        return moved;
    }
    const int beyond = next + step;
    if (b.wall[static_cast<std::size_t>(beyond)] ||
        std::binary_search(state.boxes.begin(), state.boxes.end(), beyond))
        return std::nullopt;
    GameState pushed = state;
    pushed.player = next;
    pushed.boxes[static_cast<std::size_t>(box - state.boxes.begin())] = beyond;
    std::sort(pushed.boxes.begin(), pushed.boxes.end());
    return pushed;
}

bool check_win(const GameState& state) {
    return std::all_of(state.boxes.begin(), state.boxes.end(),
                       [&](int c) { return state.board->target[static_cast<std::size_t>(c)] != 0; });
}

namespace {

bool box_cornered(const Board& b, int cell) {
    if (b.target[static_cast<std::size_t>(cell)]) return false;
    auto wall = [&](int c) { return b.wall[static_cast<std::size_t>(c)] != 0; };
    const bool vertical = wall(cell - b.width) || wall(cell + b.width);
    const bool horizontal = wall(cell - 1) || wall(cell + 1);
    return vertical && horizontal;
}

// Cells the player can walk to without pushing; `occupied` marks boxes.
void flood(const Board& b, const std::vector<std::uint8_t>& occupied, int from, std::vector<std::uint8_t>& reach,
           std::vector<int>& queue) {
    std::fill(reach.begin(), reach.end(), 0);
    queue.clear();
    queue.push_back(from);
    reach[static_cast<std::size_t>(from)] = 1;
    for (std::size_t head = 0; head < queue.size(); ++head) {
        const int c = queue[head];
        for (Direction d : kDirections) {
            const auto n = static_cast<std::size_t>(c + b.offset(d));
            if (reach[n] || b.wall[n] || occupied[n]) continue;
            reach[n] = 1;
            queue.push_back(static_cast<int>(n));
        }
    }
}

// Shortest walk from `from` to `to` avoiding walls and boxes.
std::string walk(const Board& b, const std::vector<std::uint8_t>& occupied, int from, int to) {
    if (from == to) return {};
    std::vector<int> parent(b.wall.size(), -1);
    std::vector<std::uint8_t> via(b.wall.size(), 0);
    std::vector<int> queue{from};
    parent[static_cast<std::size_t>(from)] = from;
    for (std::size_t head = 0; head < queue.size(); ++head) {
        const int c = queue[head];
        if (c == to) break;
        for (Direction d : kDirections) {
            const int n = c + b.offset(d);
            const auto un = static_cast<std::size_t>(n);
            if (parent[un] >= 0 || b.wall[un] || occupied[un]) continue;
            parent[un] = c;
            via[un] = static_cast<std::uint8_t>(d);
            queue.push_back(n);
        }
    }
    std::string path;
    for (int c = to; c != from; c = parent[static_cast<std::size_t>(c)])
        path.push_back(direction_char(static_cast<Direction>(via[static_cast<std::size_t>(c)])));
    std::reverse(path.begin(), path.end());
    return path;
}

struct Node {
    std::vector<int> boxes;
    int region = 0;      // minimal reachable player cell
    int parent = -1;
    int pushed_from = 0;  // box cell before the push that produced this node
    Direction dir = Direction::Up;
    std::size_t depth = 0;
};

std::string state_key(const std::vector<int>& boxes, int region) {
    std::string key;
    key.reserve((boxes.size() + 1) * 2);
    auto put = [&](int v) {
        key.push_back(static_cast<char>(v & 0xff));
        key.push_back(static_cast<char>((v >> 8) & 0xff));
    };
    put(region);
    for (int b : boxes) put(b);
    return key;
}

std::string reconstruct(const Board& b, const std::vector<Node>& nodes, int goal, int start_player) {
    std::vector<int> chain;
    for (int n = goal; nodes[static_cast<std::size_t>(n)].parent >= 0; n = nodes[static_cast<std::size_t>(n)].parent)
        chain.push_back(n);
    std::reverse(chain.begin(), chain.end());

    std::vector<std::uint8_t> occupied(b.wall.size(), 0);
    for (int c : nodes.front().boxes) occupied[static_cast<std::size_t>(c)] = 1;
    int player = start_player;
    std::string moves;
    for (int n : chain) {
        const Node& node = nodes[static_cast<std::size_t>(n)];
        const int step = b.offset(node.dir);
        moves += walk(b, occupied, player, node.pushed_from - step);
        moves.push_back(direction_char(node.dir));
        occupied[static_cast<std::size_t>(node.pushed_from)] = 0;
        occupied[static_cast<std::size_t>(node.pushed_from + step)] = 1;
        player = node.pushed_from;
    }
    return moves;
}

}  // namespace

bool is_corner_deadlocked(const GameState& state) {
    return std::any_of(state.boxes.begin(), state.boxes.end(),
                       [&](int c) { return box_cornered(*state.board, c); });
}

SolveOutcome solve(const Level& level, const SolveLimits& limits) {
    const GameState start = GameState::from_level(level);
    const Board& b = *start.board;
    SolveOutcome out;
    if (check_win(start)) {
        out.verdict = Verdict::Solvable;
        return out;
    }
    if (is_corner_deadlocked(start)) {
        out.verdict = Verdict::Unsolvable;
        return out;
    }

    const std::size_t cells = b.wall.size();
    std::vector<std::uint8_t> occupied(cells, 0), reach(cells, 0);
    std::vector<int> scratch;

    auto region_of = [&](const std::vector<int>& boxes, int player) {
        std::fill(occupied.begin(), occupied.end(), 0);
        for (int c : boxes) occupied[static_cast<std::size_t>(c)] = 1;
        flood(b, occupied, player, reach, scratch);
        return *std::min_element(scratch.begin(), scratch.end());
    };

    std::vector<Node> nodes;
    std::unordered_set<std::string> seen;
    nodes.push_back(Node{start.boxes, region_of(start.boxes, start.player), -1, 0, Direction::Up, 0});
    seen.insert(state_key(nodes[0].boxes, nodes[0].region));

    bool truncated = false;
    for (std::size_t head = 0; head < nodes.size(); ++head) {
        if (nodes[head].depth >= limits.max_solution_pushes) {
            truncated = true;
            continue;
        }
        if (out.states_expanded >= limits.max_states) {
            out.verdict = Verdict::LimitExceeded;
            return out;
        }
        ++out.states_expanded;

        const std::vector<int> boxes = nodes[head].boxes;
        const int region = nodes[head].region;
        const std::size_t depth = nodes[head].depth;
        std::fill(occupied.begin(), occupied.end(), 0);
        for (int c : boxes) occupied[static_cast<std::size_t>(c)] = 1;
        flood(b, occupied, region, reach, scratch);
        const std::vector<std::uint8_t> reachable = reach;

        for (std::size_t k = 0; k < boxes.size(); ++k) {
            const int box = boxes[k];
            for (Direction d : kDirections) {
                const int step = b.offset(d);
                const auto behind = static_cast<std::size_t>(box - step);
                const auto ahead = static_cast<std::size_t>(box + step);
                if (!reachable[behind] || b.wall[ahead] ||
                    std::binary_search(boxes.begin(), boxes.end(), box + step))
                    continue;
                if (box_cornered(b, box + step)) continue;

                std::vector<int> next = boxes;
                next[k] = box + step;
                std::sort(next.begin(), next.end());
                const int next_region = region_of(next, box);
                if (!seen.insert(state_key(next, next_region)).second) continue;

                nodes.push_back(Node{std::move(next), next_region, static_cast<int>(head), box, d, depth + 1});
                const Node& child = nodes.back();
                const bool won = std::all_of(child.boxes.begin(), child.boxes.end(),
                                             [&](int c) { return b.target[static_cast<std::size_t>(c)] != 0; });
                if (won) {
                    out.verdict = Verdict::Solvable;
                    out.pushes = child.depth;
                    out.solution = reconstruct(b, nodes, static_cast<int>(nodes.size() - 1), start.player);
                    return out;
                }
            }
        }
    }
    out.verdict = truncated ? Verdict::LimitExceeded : Verdict::Unsolvable;
    return out;
}

PlayResult validate_playthrough(const Level& level, const std::vector<Direction>& moves) {
    PlayResult result{GameState::from_level(level), {}, false};
    for (std::size_t i = 0; i < moves.size(); ++i) {
        if (auto next = apply_move(result.final_state, moves[i]))
            result.final_state = std::move(*next);
        else
            result.rejected.push_back(i);
    }
    result.won = check_win(result.final_state);
    return result;
}

}  // namespace sokoarch
