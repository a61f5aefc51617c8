#pragma once

#include <csp2turtle/csp.hpp>
#include <csp2turtle/turtle/model.hpp>

#include <memory>
#include <optional>
#include <string>
#include <utility>

namespace csp2turtle::turtle {

inline csp::Event to_event(Command c) { return csp::Event::visible(std::string(token(c))); }

inline std::optional<Command> to_command(const csp::Event& e) {
  if (!e.is_visible()) return std::nullopt;
  return command_from_token(e.name());
}

inline csp::Trace to_trace(const Plan& plan) {
  csp::Trace t;
  t.reserve(plan.size());
  for (Command c : plan) t.push_back(to_event(c));
  return t;
}

inline CommandSet to_command_set(const csp::EventSet& events) {
  CommandSet out;
  for (const csp::Event& e : events) {
    if (auto c = to_command(e)) out.insert(*c);
  }
  return out;
}

// Everything except goal, so that hiding leaves only goal observable.
inline csp::EventSet nav_events() {
  csp::EventSet out;
  for (Command c : kCommands) {
    if (c != Command::Goal) out.insert(to_event(c));
  }
  return out;
}

inline std::string nav_process_name(Direction d) {
  return "Turtle_nav_" + std::string(direction_name(d));
}

inline constexpr const char* kMainProcess = "Turtle_main";
inline constexpr const char* kPenDownProcess = "Turtle_draw_pd";
inline constexpr const char* kPenUpProcess = "Turtle_draw_pu";

struct TurtleProcess {
  csp::ProcessExpr main = csp::ProcessExpr::stop();
  csp::ProcessEnv env;
};

// Turtle_main(0, 0) = Turtle_nav_East(0, 0) ||| Turtle_draw_pd, with one
// navigation definition per heading. Each navigation process offers fd/bk only
// toward free cells, lt/rt always, and goal on the goal cell.
inline TurtleProcess build_turtle_process(const WorldSpec& world) {
  world.validate();
  auto w = std::make_shared<const WorldSpec>(world);

  TurtleProcess out;
  csp::ProcessEnv& env = out.env;
  for (Command c : kCommands) env.declare_event(std::string(token(c)));

  using csp::ProcessExpr;
  for (Direction d : kDirections) {
    env.define(nav_process_name(d), 2, [w, d](std::span<const int> args) {
      const Position here{args[0], args[1]};
      const Position ahead = offset(here, d, 1);
      const Position behind = offset(here, d, -1);
      std::vector<ProcessExpr> branches;
      if (w->is_free(ahead)) {
        branches.push_back(ProcessExpr::prefix(
            to_event(Command::Forward), ProcessExpr::ref(nav_process_name(d), {ahead.x, ahead.y})));
      }
      if (w->is_free(behind)) {
        branches.push_back(ProcessExpr::prefix(
            to_event(Command::Backward),
            ProcessExpr::ref(nav_process_name(d), {behind.x, behind.y})));
      }
      branches.push_back(ProcessExpr::prefix(
          to_event(Command::Left), ProcessExpr::ref(nav_process_name(turned_left(d)), {here.x, here.y})));
      branches.push_back(ProcessExpr::prefix(
          to_event(Command::Right),
          ProcessExpr::ref(nav_process_name(turned_right(d)), {here.x, here.y})));
      if (here == w->goal) {
        branches.push_back(ProcessExpr::prefix(to_event(Command::Goal),
                                               ProcessExpr::ref(nav_process_name(d), {here.x, here.y})));
      }
      return csp::choice_of(std::move(branches));
    });
  }

  env.define(kPenDownProcess, ProcessExpr::prefix(to_event(Command::PenUp), ProcessExpr::ref(kPenUpProcess)));
  env.define(kPenUpProcess, ProcessExpr::prefix(to_event(Command::PenDown), ProcessExpr::ref(kPenDownProcess)));

  env.define(kMainProcess, 2, [](std::span<const int> args) {
    return ProcessExpr::interleave(
        ProcessExpr::ref(nav_process_name(Direction::East), {args[0], args[1]}),
        ProcessExpr::ref(kPenDownProcess));
  });

  out.main = ProcessExpr::ref(kMainProcess, {0, 0});
  return out;
}

// Reads the turtle state back out of a configuration of the built process.
inline std::optional<TurtleState> decode_state(const csp::ProcessExpr& config) {
  using K = csp::ProcessExpr::Kind;
  if (config.kind() == K::Hide) return decode_state(config.body());
  if (config.kind() == K::Ref && config.name() == kMainProcess && config.args().size() == 2) {
    return TurtleState{{config.args()[0], config.args()[1]}, Direction::East, Pen::Down};
  }
  if (config.kind() != K::Interleave) return std::nullopt;
  const csp::ProcessExpr& nav = config.left();
  const csp::ProcessExpr& pen = config.right();
  if (nav.kind() != K::Ref || pen.kind() != K::Ref || nav.args().size() != 2) return std::nullopt;
  TurtleState s;
  s.pos = {nav.args()[0], nav.args()[1]};
  bool found = false;
  for (Direction d : kDirections) {
    if (nav.name() == nav_process_name(d)) {
      s.dir = d;
      found = true;
    }
  }
  if (!found) return std::nullopt;
  if (pen.name() == kPenDownProcess) {
    s.pen = Pen::Down;
  } else if (pen.name() == kPenUpProcess) {
    s.pen = Pen::Up;
  } else {
    return std::nullopt;
  }
  return s;
}

}  // namespace csp2turtle::turtle
