#pragma once

#include <csp2turtle/checker.hpp>
#include <csp2turtle/turtle/model.hpp>

#include <json.hpp>

#include <optional>
#include <sstream>
#include <stdexcept>
#include <string>
#include <utility>
#include <vector>

namespace csp2turtle::codegen {

struct CodegenOptions {
  int unit = 50;   // canvas pixels per grid cell
  int speed = 1;   // Turtle animation speed

  void validate() const {
    if (unit < 1) throw std::invalid_argument("unit must be at least 1");
  }
};

class PlanInvalid : public std::runtime_error {
 public:
  explicit PlanInvalid(PlanVerdict verdict)
      : std::runtime_error("plan is invalid at index " + std::to_string(*verdict.failure_index) +
                           " (" + std::string(turtle::reason_name(*verdict.reason)) +
                           "); nothing generated"),
        verdict_(std::move(verdict)) {}
  const PlanVerdict& verdict() const { return verdict_; }

 private:
  PlanVerdict verdict_;
};

// One Turtle package call: method name and optional integer argument.
struct Call {
  std::string name;
  std::optional<int> arg;

  friend bool operator==(const Call&, const Call&) = default;
};

inline Call call_for(turtle::Command c, const CodegenOptions& opts) {
  using turtle::Command;
  switch (c) {
    case Command::Forward: return {"forward", opts.unit};
    case Command::Backward: return {"backward", opts.unit};
    case Command::Left: return {"left", 90};
    case Command::Right: return {"right", 90};
    case Command::PenUp: return {"penup", std::nullopt};
    case Command::PenDown: return {"pendown", std::nullopt};
    case Command::Goal: return {"stamp", std::nullopt};
  }
  return {};
}

inline std::vector<Call> plan_calls(const turtle::Plan& plan, const CodegenOptions& opts) {
  std::vector<Call> out;
  out.reserve(plan.size());
  for (turtle::Command c : plan) out.push_back(call_for(c, opts));
  return out;
}

// Throws PlanInvalid unless the plan is a trace of the turtle process.
inline void require_valid(const turtle::WorldSpec& w, const turtle::Plan& plan) {
  PlanVerdict v = check_plan(w, plan);
  if (!v.valid()) throw PlanInvalid(std::move(v));
}

inline constexpr const char* kPlanBeginMarker = "# plan begin";
inline constexpr const char* kPlanEndMarker = "# plan end";

inline std::string render_call(const Call& c) {
  return "t." + c.name + "(" + (c.arg ? std::to_string(*c.arg) : std::string()) + ")";
}

inline std::string generate_script(const turtle::WorldSpec& w, const turtle::Plan& plan,
                                   const CodegenOptions& opts = {}) {
  opts.validate();
  require_valid(w, plan);
  std::ostringstream out;
  out << "#!/usr/bin/env python3\n"
      << "# Verified plan for a " << w.width << "x" << w.height << " world, goal "
      << turtle::to_string(w.goal) << ".\n"
      << "# Plan: " << (plan.empty() ? "(empty)" : turtle::format_plan(plan)) << "\n"
      << "import turtle\n"
      << "\n"
      << "t = turtle.Turtle()\n"
      << "t.speed(" << opts.speed << ")\n"
      << "t.pendown()\n"
      << "\n"
      << kPlanBeginMarker << "\n";
  for (const Call& c : plan_calls(plan, opts)) out << render_call(c) << "\n";
  out << kPlanEndMarker << "\n"
      << "\n"
      << "turtle.done()\n";
  return out.str();
}

inline nlohmann::ordered_json expectation_json(const turtle::WorldSpec& w, const turtle::Plan& plan,
                                               const CodegenOptions& opts) {
  const turtle::SimResult sim = turtle::simulate(w, plan);
  const turtle::TurtleState& fin = sim.final_state();
  nlohmann::ordered_json doc;
  doc["unit"] = opts.unit;
  doc["final"] = {{"x", fin.pos.x},
                  {"y", fin.pos.y},
                  {"heading", turtle::heading_degrees(fin.dir)},
                  {"pen", fin.pen == turtle::Pen::Down ? "down" : "up"}};
  auto calls = nlohmann::ordered_json::array();
  for (const Call& c : plan_calls(plan, opts)) {
    calls.push_back({c.name, c.arg ? nlohmann::ordered_json(*c.arg) : nlohmann::ordered_json(nullptr)});
  }
  doc["calls"] = std::move(calls);
  auto segs = nlohmann::ordered_json::array();
  for (const turtle::Segment& s : sim.segments) {
    segs.push_back({{s.from.x, s.from.y}, {s.to.x, s.to.y}});
  }
  doc["segments"] = std::move(segs);
  return doc;
}

inline std::string generate_expectation(const turtle::WorldSpec& w, const turtle::Plan& plan,
                                        const CodegenOptions& opts = {}) {
  opts.validate();
  require_valid(w, plan);
  return expectation_json(w, plan, opts).dump(2) + "\n";
}

namespace detail {

inline std::string num(double v) {
  std::ostringstream s;
  s << v;
  return s.str();
}

}  // namespace detail

// Grid (0, 0) is drawn at the bottom-left; SVG y grows downward.
inline std::string generate_svg(const turtle::WorldSpec& w, const turtle::Plan& plan,
                                const CodegenOptions& opts = {}) {
  opts.validate();
  require_valid(w, plan);
  const turtle::SimResult sim = turtle::simulate(w, plan);
  const int u = opts.unit;
  const int width = w.width * u;
  const int height = w.height * u;
  auto left = [&](int x) { return x * u; };
  auto top = [&](int y) { return (w.height - 1 - y) * u; };
  auto cx = [&](int x) { return detail::num((x + 0.5) * u); };
  auto cy = [&](int y) { return detail::num((w.height - y - 0.5) * u); };

  std::ostringstream out;
  out << "<?xml version=\"1.0\" encoding=\"UTF-8\"?>\n"
      << "<svg xmlns=\"http://www.w3.org/2000/svg\" version=\"1.1\" width=\"" << width
      << "\" height=\"" << height << "\" viewBox=\"0 0 " << width << " " << height << "\">\n"
      << "  <rect class=\"background\" x=\"0\" y=\"0\" width=\"" << width << "\" height=\""
      << height << "\" fill=\"white\"/>\n";

  out << "  <g class=\"grid\" stroke=\"#cccccc\" stroke-width=\"1\">\n";
  for (int x = 0; x <= w.width; ++x) {
    out << "    <line x1=\"" << x * u << "\" y1=\"0\" x2=\"" << x * u << "\" y2=\"" << height
        << "\"/>\n";
  }
  for (int y = 0; y <= w.height; ++y) {
    out << "    <line x1=\"0\" y1=\"" << y * u << "\" x2=\"" << width << "\" y2=\"" << y * u
        << "\"/>\n";
  }
  out << "  </g>\n";

  for (const turtle::Position& o : w.obstacles) {
    out << "  <rect class=\"obstacle\" x=\"" << left(o.x) << "\" y=\"" << top(o.y) << "\" width=\""
        << u << "\" height=\"" << u << "\" fill=\"#333333\"/>\n";
  }
  out << "  <rect class=\"goal\" x=\"" << left(w.goal.x) << "\" y=\"" << top(w.goal.y)
      << "\" width=\"" << u << "\" height=\"" << u
      << "\" fill=\"#8fd18f\" stroke=\"#2e7d32\" stroke-width=\"2\"/>\n";

  for (const turtle::Segment& s : sim.segments) {
    out << "  <line class=\"segment\" x1=\"" << cx(s.from.x) << "\" y1=\"" << cy(s.from.y)
        << "\" x2=\"" << cx(s.to.x) << "\" y2=\"" << cy(s.to.y)
        << "\" stroke=\"black\" stroke-width=\"3\" stroke-linecap=\"round\"/>\n";
  }

  // Triangle pointing East, rotated to the heading (SVG angles run clockwise).
  const turtle::TurtleState& fin = sim.final_state();
  const double px = (fin.pos.x + 0.5) * u;
  const double py = (w.height - fin.pos.y - 0.5) * u;
  const double r = u * 0.3;
  out << "  <polygon class=\"turtle\" points=\"" << detail::num(px + r) << "," << detail::num(py)
      << " " << detail::num(px - r * 0.6) << "," << detail::num(py - r * 0.6) << " "
      << detail::num(px - r * 0.6) << "," << detail::num(py + r * 0.6) << "\" transform=\"rotate("
      << -turtle::heading_degrees(fin.dir) << " " << detail::num(px) << " " << detail::num(py)
      << ")\" fill=\"#1565c0\"/>\n";
  out << "</svg>\n";
  return out.str();
}

namespace detail {

struct NavShape {
  turtle::Direction dir;
  const char* ahead;
  const char* behind;
};

}  // namespace detail

// CSPM script with the turtle model, world constants and both assertions,
// for cross-checking with an external refinement checker.
inline std::string generate_cspm(const turtle::WorldSpec& w, const turtle::Plan& plan) {
  using turtle::Direction;
  std::ostringstream out;
  out << "-- Turtle grid-world model.\n"
      << "-- World " << w.width << "x" << w.height << ", start (0, 0) facing East, pen down.\n\n"
      << "channel fd, bk, lt, rt, pu, pd, goal\n\n"
      << "width = " << w.width << "\n"
      << "height = " << w.height << "\n"
      << "obstacles = {";
  bool first = true;
  for (const turtle::Position& o : w.obstacles) {
    out << (first ? "" : ", ") << "(" << o.x << ", " << o.y << ")";
    first = false;
  }
  out << "}\n"
      << "goal_cell = (" << w.goal.x << ", " << w.goal.y << ")\n\n"
      << "E = (width, height, obstacles, goal_cell)\n\n"
      << "is_free((w, h, obs, g), x, y) =\n"
      << "  0 <= x and x < w and 0 <= y and y < h and not member((x, y), obs)\n\n"
      << "at_goal((w, h, obs, g), x, y) = (x, y) == g\n\n";

  const detail::NavShape shapes[] = {
      {Direction::North, "x, y + 1", "x, y - 1"},
      {Direction::East, "x + 1, y", "x - 1, y"},
      {Direction::South, "x, y - 1", "x, y + 1"},
      {Direction::West, "x - 1, y", "x + 1, y"},
  };
  for (const detail::NavShape& s : shapes) {
    const std::string self = turtle::nav_process_name(s.dir);
    out << self << "(x, y)(env) =\n"
        << "     (is_free(env, " << s.ahead << ") & fd -> " << self << "(" << s.ahead << ")(env))\n"
        << "  [] (is_free(env, " << s.behind << ") & bk -> " << self << "(" << s.behind
        << ")(env))\n"
        << "  [] lt -> " << turtle::nav_process_name(turtle::turned_left(s.dir)) << "(x, y)(env)\n"
        << "  [] rt -> " << turtle::nav_process_name(turtle::turned_right(s.dir)) << "(x, y)(env)\n"
        << "  [] (at_goal(env, x, y) & goal -> " << self << "(x, y)(env))\n\n";
  }

  out << turtle::kPenDownProcess << " = pu -> " << turtle::kPenUpProcess << "\n"
      << turtle::kPenUpProcess << " = pd -> " << turtle::kPenDownProcess << "\n\n"
      << turtle::kMainProcess << "(x, y)(env) = " << turtle::nav_process_name(Direction::East)
      << "(x, y)(env) ||| " << turtle::kPenDownProcess << "\n\n"
      << "nav_events = {fd, bk, lt, rt, pu, pd}\n\n"
      << "goalpoint = goal -> STOP\n\n"
      << "assert " << turtle::kMainProcess << "(0, 0)(E) :[has trace]: <";
  first = true;
  for (turtle::Command c : plan) {
    out << (first ? "" : ", ") << turtle::token(c);
    first = false;
  }
  out << ">\n"
      << "assert " << turtle::kMainProcess << "(0, 0)(E) \\ nav_events [T= goalpoint\n";
  return out.str();
}

}  // namespace csp2turtle::codegen
