#pragma once

#include <array>
#include <compare>
#include <cstdint>
#include <optional>
#include <set>
#include <stdexcept>
#include <string>
#include <string_view>
#include <vector>

namespace csp2turtle::turtle {

enum class Direction : std::uint8_t { North, East, South, West };

// Degrees, East = 0, counterclockwise positive.
inline int heading_degrees(Direction d) {
  switch (d) {
    case Direction::East: return 0;
    case Direction::North: return 90;
    case Direction::West: return 180;
    case Direction::South: return 270;
  }
  return 0;
}

inline Direction turned_left(Direction d) {
  switch (d) {
    case Direction::East: return Direction::North;
    case Direction::North: return Direction::West;
    case Direction::West: return Direction::South;
    case Direction::South: return Direction::East;
  }
  return d;
}

inline Direction turned_right(Direction d) {
  switch (d) {
    case Direction::East: return Direction::South;
    case Direction::South: return Direction::West;
    case Direction::West: return Direction::North;
    case Direction::North: return Direction::East;
  }
  return d;
}

inline std::string_view direction_name(Direction d) {
  switch (d) {
    case Direction::North: return "North";
    case Direction::East: return "East";
    case Direction::South: return "South";
    case Direction::West: return "West";
  }
  return "?";
}

inline constexpr std::array<Direction, 4> kDirections = {Direction::North, Direction::East,
                                                        Direction::South, Direction::West};

struct Position {
  int x = 0;
  int y = 0;

  friend bool operator==(const Position&, const Position&) = default;
  // Row-major from the bottom row: (y, x).
  friend std::strong_ordering operator<=>(const Position& a, const Position& b) {
    if (auto c = a.y <=> b.y; c != 0) return c;
    return a.x <=> b.x;
  }
};

inline Position offset(Position p, Direction d, int distance = 1) {
  switch (d) {
    case Direction::North: return {p.x, p.y + distance};
    case Direction::East: return {p.x + distance, p.y};
    case Direction::South: return {p.x, p.y - distance};
    case Direction::West: return {p.x - distance, p.y};
  }
  return p;
}

inline std::string to_string(Position p) {
  return "(" + std::to_string(p.x) + ", " + std::to_string(p.y) + ")";
}

inline constexpr int kMaxWorldSide = 64;

class InvalidWorld : public std::invalid_argument {
 public:
  using std::invalid_argument::invalid_argument;
};

// Bounded grid with impassable obstacle cells and one goal cell. The turtle
// always starts at (0, 0).
struct WorldSpec {
  int width = 1;
  int height = 1;
  std::set<Position> obstacles;
  Position goal;

  bool in_bounds(Position p) const { return p.x >= 0 && p.y >= 0 && p.x < width && p.y < height; }
  bool is_obstacle(Position p) const { return obstacles.contains(p); }
  bool is_free(Position p) const { return in_bounds(p) && !is_obstacle(p); }

  // Description of the first violated invariant, if any.
  std::optional<std::string> problem() const {
    if (width < 1 || height < 1) return "world dimensions must be at least 1x1";
    if (width > kMaxWorldSide || height > kMaxWorldSide) {
      return "world dimensions must not exceed " + std::to_string(kMaxWorldSide) + "x" +
             std::to_string(kMaxWorldSide);
    }
    for (const Position& o : obstacles) {
      if (!in_bounds(o)) return "obstacle " + to_string(o) + " is out of bounds";
    }
    if (!in_bounds(goal)) return "goal " + to_string(goal) + " is out of bounds";
    if (is_obstacle({0, 0})) return "obstacle at the start cell (0, 0)";
    if (is_obstacle(goal)) return "goal " + to_string(goal) + " is on an obstacle";
    return std::nullopt;
  }

  void validate() const {
    if (auto p = problem()) throw InvalidWorld(*p);
  }

  friend bool operator==(const WorldSpec&, const WorldSpec&) = default;
};

// The turtle's event alphabet, in canonical order.
enum class Command : std::uint8_t { Forward, Backward, Left, Right, PenUp, PenDown, Goal };

inline constexpr std::array<Command, 7> kCommands = {Command::Forward, Command::Backward,
                                                    Command::Left,    Command::Right,
                                                    Command::PenUp,   Command::PenDown,
                                                    Command::Goal};

inline std::string_view token(Command c) {
  switch (c) {
    case Command::Forward: return "fd";
    case Command::Backward: return "bk";
    case Command::Left: return "lt";
    case Command::Right: return "rt";
    case Command::PenUp: return "pu";
    case Command::PenDown: return "pd";
    case Command::Goal: return "goal";
  }
  return "?";
}

inline std::optional<Command> command_from_token(std::string_view tok) {
  for (Command c : kCommands) {
    if (token(c) == tok) return c;
  }
  return std::nullopt;
}

using Plan = std::vector<Command>;

inline std::string format_plan(const Plan& plan) {
  std::string out;
  for (Command c : plan) {
    if (!out.empty()) out += ' ';
    out += token(c);
  }
  return out;
}

// Small set of commands, iterated in canonical order.
class CommandSet {
 public:
  CommandSet() = default;
  CommandSet(std::initializer_list<Command> cs) {
    for (Command c : cs) insert(c);
  }

  void insert(Command c) { bits_ |= bit(c); }
  void erase(Command c) { bits_ &= static_cast<std::uint8_t>(~bit(c)); }
  bool contains(Command c) const { return (bits_ & bit(c)) != 0; }
  bool empty() const { return bits_ == 0; }

  std::vector<Command> to_vector() const {
    std::vector<Command> out;
    for (Command c : kCommands) {
      if (contains(c)) out.push_back(c);
    }
    return out;
  }

  std::string to_string() const {
    std::string out = "{";
    for (Command c : to_vector()) {
      if (out.size() > 1) out += ", ";
      out += token(c);
    }
    return out + "}";
  }

  friend bool operator==(const CommandSet&, const CommandSet&) = default;

 private:
  static std::uint8_t bit(Command c) { return static_cast<std::uint8_t>(1u << static_cast<unsigned>(c)); }
  std::uint8_t bits_ = 0;
};

enum class Pen : std::uint8_t { Down, Up };

struct TurtleState {
  Position pos;
  Direction dir = Direction::East;
  Pen pen = Pen::Down;

  friend bool operator==(const TurtleState&, const TurtleState&) = default;
};

inline constexpr TurtleState kStartState{{0, 0}, Direction::East, Pen::Down};

}  // namespace csp2turtle::turtle
