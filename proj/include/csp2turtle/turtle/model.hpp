#pragma once

#include <csp2turtle/turtle/world.hpp>

#include <cstddef>
#include <deque>
#include <optional>
#include <set>
#include <stdexcept>
#include <string>
#include <string_view>
#include <vector>

namespace csp2turtle::turtle {

enum class FailureReason : std::uint8_t { OutOfBounds, Obstacle, PenRedundant, GoalNotHere };

inline std::string_view reason_name(FailureReason r) {
  switch (r) {
    case FailureReason::OutOfBounds: return "OutOfBounds";
    case FailureReason::Obstacle: return "Obstacle";
    case FailureReason::PenRedundant: return "PenRedundant";
    case FailureReason::GoalNotHere: return "GoalNotHere";
  }
  return "?";
}

class EventNotEnabled : public std::runtime_error {
 public:
  EventNotEnabled(Command c, FailureReason r)
      : std::runtime_error(std::string(token(c)) + " not enabled: " + std::string(reason_name(r))),
        command_(c),
        reason_(r) {}
  Command command() const { return command_; }
  FailureReason reason() const { return reason_; }

 private:
  Command command_;
  FailureReason reason_;
};

// Why `c` cannot happen in `s`, or nullopt when it can.
inline std::optional<FailureReason> disabled_reason(const WorldSpec& w, const TurtleState& s,
                                                    Command c) {
  auto move_check = [&](Position target) -> std::optional<FailureReason> {
    if (!w.in_bounds(target)) return FailureReason::OutOfBounds;
    if (w.is_obstacle(target)) return FailureReason::Obstacle;
    return std::nullopt;
  };
  switch (c) {
    case Command::Forward: return move_check(offset(s.pos, s.dir, 1));
    case Command::Backward: return move_check(offset(s.pos, s.dir, -1));
    case Command::Left:
    case Command::Right: return std::nullopt;
    case Command::PenUp:
      return s.pen == Pen::Down ? std::nullopt : std::optional(FailureReason::PenRedundant);
    case Command::PenDown:
      return s.pen == Pen::Up ? std::nullopt : std::optional(FailureReason::PenRedundant);
    case Command::Goal:
      return s.pos == w.goal ? std::nullopt : std::optional(FailureReason::GoalNotHere);
  }
  return std::nullopt;
}

inline CommandSet enabled_events(const WorldSpec& w, const TurtleState& s) {
  CommandSet out;
  for (Command c : kCommands) {
    if (!disabled_reason(w, s, c)) out.insert(c);
  }
  return out;
}

inline TurtleState apply_event(const WorldSpec& w, const TurtleState& s, Command c) {
  if (auto r = disabled_reason(w, s, c)) throw EventNotEnabled(c, *r);
  TurtleState next = s;
  switch (c) {
    case Command::Forward: next.pos = offset(s.pos, s.dir, 1); break;
    case Command::Backward: next.pos = offset(s.pos, s.dir, -1); break;
    case Command::Left: next.dir = turned_left(s.dir); break;
    case Command::Right: next.dir = turned_right(s.dir); break;
    case Command::PenUp: next.pen = Pen::Up; break;
    case Command::PenDown: next.pen = Pen::Down; break;
    case Command::Goal: break;
  }
  return next;
}

struct PlanVerdict {
  enum class Status : std::uint8_t { Valid, Invalid };

  Status status = Status::Valid;
  std::optional<std::size_t> failure_index;
  std::optional<FailureReason> reason;
  std::optional<CommandSet> enabled_at_failure;

  bool valid() const { return status == Status::Valid; }

  static PlanVerdict invalid(std::size_t index, FailureReason reason, CommandSet enabled) {
    return {Status::Invalid, index, reason, enabled};
  }

  friend bool operator==(const PlanVerdict&, const PlanVerdict&) = default;
};

struct Segment {
  Position from;
  Position to;

  friend bool operator==(const Segment&, const Segment&) = default;
};

struct SimResult {
  // Start state plus one state per accepted event.
  std::vector<TurtleState> states;
  std::vector<Segment> segments;
  PlanVerdict verdict;

  const TurtleState& final_state() const { return states.back(); }
};

// Replays the plan with the direct transition rules, stopping at the first
// disabled event.
inline SimResult simulate(const WorldSpec& w, const Plan& plan) {
  SimResult r;
  r.states.push_back(kStartState);
  for (std::size_t i = 0; i < plan.size(); ++i) {
    const TurtleState& s = r.states.back();
    if (auto why = disabled_reason(w, s, plan[i])) {
      r.verdict = PlanVerdict::invalid(i, *why, enabled_events(w, s));
      return r;
    }
    TurtleState next = apply_event(w, s, plan[i]);
    if (next.pos != s.pos && s.pen == Pen::Down) r.segments.push_back({s.pos, next.pos});
    r.states.push_back(next);
  }
  return r;
}

// Cells reachable from (0, 0) through free 4-neighbours.
inline std::set<Position> reachable_cells(const WorldSpec& w) {
  std::set<Position> seen;
  if (!w.is_free({0, 0})) return seen;
  std::deque<Position> queue{{0, 0}};
  seen.insert({0, 0});
  while (!queue.empty()) {
    Position p = queue.front();
    queue.pop_front();
    for (Direction d : kDirections) {
      Position n = offset(p, d);
      if (w.is_free(n) && seen.insert(n).second) queue.push_back(n);
    }
  }
  return seen;
}

}  // namespace csp2turtle::turtle
