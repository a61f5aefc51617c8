#pragma once

#include <csp2turtle/checker.hpp>
#include <csp2turtle/codegen.hpp>
#include <csp2turtle/plan_io.hpp>

#include <CLI11.hpp>
#include <json.hpp>

#include <algorithm>
#include <cstddef>
#include <fstream>
#include <iostream>
#include <iterator>
#include <map>
#include <optional>
#include <sstream>
#include <string>
#include <vector>

namespace csp2turtle::cli {

enum ExitCode : int {
  kOk = 0,
  kPlanInvalid = 1,
  kGoalUnreachable = 2,
  kConfigError = 3,
  kBoundExceeded = 4,
};

// Raised for unreadable/unwritable files and bad option values.
class ConfigError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

inline std::string read_file(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw ConfigError("cannot read " + path);
  return {std::istreambuf_iterator<char>(in), std::istreambuf_iterator<char>()};
}

inline void write_file(const std::string& path, const std::string& text) {
  std::ofstream out(path, std::ios::binary | std::ios::trunc);
  if (!out) throw ConfigError("cannot write " + path);
  out << text;
  if (!out.flush()) throw ConfigError("failed writing " + path);
}

inline std::string describe_world(const turtle::WorldSpec& w) {
  std::string obs;
  for (const turtle::Position& o : w.obstacles) obs += (obs.empty() ? "" : ", ") + turtle::to_string(o);
  return std::to_string(w.width) + "x" + std::to_string(w.height) + ", obstacles {" + obs +
         "}, goal " + turtle::to_string(w.goal);
}

inline std::string describe_plan_verdict(const turtle::Plan& plan, const PlanVerdict& v) {
  if (v.valid()) return "plan check: PASS (valid trace of " + std::to_string(plan.size()) + " events)";
  const std::size_t i = *v.failure_index;
  return "plan check: FAIL at index " + std::to_string(i) + " (" + std::string(turtle::token(plan[i])) +
         "): " + std::string(turtle::reason_name(*v.reason)) + "; enabled there: " +
         v.enabled_at_failure->to_string();
}

inline std::string describe_reach_verdict(const ReachVerdict& v) {
  if (!v.reachable()) return "goal check: FAIL (goal unreachable from (0, 0))";
  return "goal check: PASS (goal reachable, witness: " + turtle::format_plan(*v.witness) + ")";
}

inline nlohmann::ordered_json report_json(const std::optional<turtle::Plan>& plan,
                                          const std::optional<PlanVerdict>& pv, const ReachVerdict& rv) {
  nlohmann::ordered_json doc;
  nlohmann::ordered_json p;
  if (!pv) {
    p["status"] = "unchecked";
    p["failure_index"] = nullptr;
    p["reason"] = nullptr;
    p["enabled_at_failure"] = nullptr;
  } else if (pv->valid()) {
    p["status"] = "valid";
    p["failure_index"] = nullptr;
    p["reason"] = nullptr;
    p["enabled_at_failure"] = nullptr;
  } else {
    p["status"] = "invalid";
    p["failure_index"] = *pv->failure_index;
    p["reason"] = std::string(turtle::reason_name(*pv->reason));
    auto enabled = nlohmann::ordered_json::array();
    for (turtle::Command c : pv->enabled_at_failure->to_vector()) enabled.push_back(std::string(turtle::token(c)));
    p["enabled_at_failure"] = std::move(enabled);
  }
  if (plan) {
    auto events = nlohmann::ordered_json::array();
    for (turtle::Command c : *plan) events.push_back(std::string(turtle::token(c)));
    p["events"] = std::move(events);
  }
  doc["plan"] = std::move(p);

  nlohmann::ordered_json g;
  g["status"] = rv.reachable() ? "reachable" : "unreachable";
  if (rv.witness) {
    auto w = nlohmann::ordered_json::array();
    for (turtle::Command c : *rv.witness) w.push_back(std::string(turtle::token(c)));
    g["witness"] = std::move(w);
  } else {
    g["witness"] = nullptr;
  }
  doc["goal"] = std::move(g);
  return doc;
}

// ASCII map, top row first. `.` free, `#` obstacle, `G` goal, turtle glyph by
// heading.
inline std::string render_map(const turtle::WorldSpec& w, std::optional<turtle::Position> goal,
                              const turtle::TurtleState& turtle_state) {
  std::string out;
  for (int y = w.height - 1; y >= 0; --y) {
    for (int x = 0; x < w.width; ++x) {
      const turtle::Position p{x, y};
      char c = '.';
      if (w.is_obstacle(p)) c = '#';
      if (goal && *goal == p) c = 'G';
      if (turtle_state.pos == p) {
        switch (turtle_state.dir) {
          case turtle::Direction::East: c = '>'; break;
          case turtle::Direction::North: c = '^'; break;
          case turtle::Direction::West: c = '<'; break;
          case turtle::Direction::South: c = 'v'; break;
        }
      }
      out += c;
    }
    out += '\n';
  }
  return out;
}

struct BatchOptions {
  std::string world_path;
  std::optional<std::string> plan_text;
  std::optional<std::string> plan_path;
  std::optional<std::string> json_path;
  std::optional<std::string> script_path;
  std::optional<std::string> svg_path;
  std::optional<std::string> expect_path;
  std::optional<std::string> cspm_path;
  int unit = 50;
  std::size_t state_cap = csp::kDefaultStateCap;
};

namespace detail {

inline turtle::WorldSpec load_world(const std::string& path) {
  const std::string text = read_file(path);
  try {
    return parse_world(text);
  } catch (const ParseError& e) {
    throw ConfigError(path + ": " + e.what());
  }
}

inline std::optional<turtle::Plan> load_plan(const BatchOptions& o) {
  std::optional<std::string> text = o.plan_text;
  std::string where = "--plan";
  if (o.plan_path) {
    text = read_file(*o.plan_path);
    where = *o.plan_path;
  }
  if (!text) return std::nullopt;
  try {
    return parse_plan(*text);
  } catch (const ParseError& e) {
    throw ConfigError(where + ": " + e.what());
  }
}

inline int run_check(const BatchOptions& o, std::ostream& out) {
  const turtle::WorldSpec world = load_world(o.world_path);
  const std::optional<turtle::Plan> plan = load_plan(o);

  std::optional<PlanVerdict> pv;
  if (plan) pv = check_plan(world, *plan, o.state_cap);
  const ReachVerdict rv = check_goal(world, o.state_cap);

  out << "world: " << describe_world(world) << "\n";
  if (plan) {
    out << "plan: " << (plan->empty() ? "(empty)" : turtle::format_plan(*plan)) << "\n";
    out << describe_plan_verdict(*plan, *pv) << "\n";
  } else {
    out << "plan check: skipped (no plan given)\n";
  }
  out << describe_reach_verdict(rv) << "\n";

  if (o.json_path) write_file(*o.json_path, report_json(plan, pv, rv).dump(2) + "\n");
  if (o.cspm_path) write_file(*o.cspm_path, codegen::generate_cspm(world, plan.value_or(turtle::Plan{})));

  if (pv && !pv->valid()) return kPlanInvalid;
  if (!rv.reachable()) return kGoalUnreachable;
  return kOk;
}

inline int run_gen(const BatchOptions& o, std::ostream& out, std::ostream& err) {
  const turtle::WorldSpec world = load_world(o.world_path);
  const std::optional<turtle::Plan> plan = load_plan(o);
  if (!plan) throw ConfigError("gen needs --plan or --plan-file");
  if (o.unit < 1) throw ConfigError("--unit must be at least 1");

  const PlanVerdict pv = check_plan(world, *plan, o.state_cap);
  if (!pv.valid()) {
    err << describe_plan_verdict(*plan, pv) << "\n";
    err << "no files generated: the plan is not a trace of the turtle model\n";
    return kPlanInvalid;
  }

  codegen::CodegenOptions opts;
  opts.unit = o.unit;
  // Render everything before touching the filesystem.
  std::vector<std::pair<std::string, std::string>> files;
  if (o.script_path) files.emplace_back(*o.script_path, codegen::generate_script(world, *plan, opts));
  if (o.svg_path) files.emplace_back(*o.svg_path, codegen::generate_svg(world, *plan, opts));
  if (o.expect_path) files.emplace_back(*o.expect_path, codegen::generate_expectation(world, *plan, opts));
  if (o.cspm_path) files.emplace_back(*o.cspm_path, codegen::generate_cspm(world, *plan));
  for (const auto& [path, text] : files) write_file(path, text);

  out << describe_plan_verdict(*plan, pv) << "\n";
  for (const auto& [path, text] : files) out << "wrote " << path << "\n";
  if (o.script_path) out << "run it with: python3 " << *o.script_path << "\n";
  return kOk;
}

}  // namespace detail

inline int run_repl(std::istream& in, std::ostream& out);

// Batch entry point. `args` excludes the program name.
inline int run_batch(const std::vector<std::string>& args, std::istream& in, std::ostream& out,
                     std::ostream& err) {
  CLI::App app{"Verify turtle plans against a CSP model of a bounded grid world", "csp2turtle"};
  app.require_subcommand(1);
  BatchOptions o;

  auto add_common = [&](CLI::App* sub, bool world_required) {
    auto* world = sub->add_option("--world", o.world_path, "World description file");
    if (world_required) world->required();
    auto* plan = sub->add_option("--plan", o.plan_text, "Plan tokens, e.g. \"fd lt fd\"");
    auto* plan_file = sub->add_option("--plan-file", o.plan_path, "File holding the plan tokens");
    plan->excludes(plan_file);
    sub->add_option("--cspm", o.cspm_path, "Write a CSPM script with the model and assertions");
    sub->add_option("--state-cap", o.state_cap, "Maximum explored states")->check(CLI::PositiveNumber);
  };

  CLI::App* check = app.add_subcommand("check", "Check plan validity and goal reachability");
  add_common(check, true);
  check->add_option("--json", o.json_path, "Write a machine-readable report");

  CLI::App* gen = app.add_subcommand("gen", "Check a plan and generate artifacts from it");
  add_common(gen, true);
  gen->add_option("--script", o.script_path, "Turtle script output");
  gen->add_option("--svg", o.svg_path, "SVG rendering output");
  gen->add_option("--expect", o.expect_path, "Expectation JSON output");
  gen->add_option("--unit", o.unit, "Pixels per grid cell");

  CLI::App* repl = app.add_subcommand("repl", "Interactive session");

  std::vector<std::string> reversed(args.rbegin(), args.rend());
  try {
    app.parse(reversed);
  } catch (const CLI::CallForHelp&) {
    out << app.help();
    return kOk;
  } catch (const CLI::CallForAllHelp&) {
    out << app.help("", CLI::AppFormatMode::All);
    return kOk;
  } catch (const CLI::ParseError& e) {
    err << "error: " << e.what() << "\n";
    return kConfigError;
  }

  try {
    if (check->parsed()) return detail::run_check(o, out);
    if (gen->parsed()) return detail::run_gen(o, out, err);
    if (repl->parsed()) return run_repl(in, out);
  } catch (const csp::StateBoundExceeded& e) {
    err << "error: " << e.what() << "\n";
    return kBoundExceeded;
  } catch (const ConfigError& e) {
    err << "error: " << e.what() << "\n";
    return kConfigError;
  } catch (const turtle::InvalidWorld& e) {
    err << "error: " << e.what() << "\n";
    return kConfigError;
  } catch (const std::exception& e) {
    err << "error: " << e.what() << "\n";
    return kConfigError;
  }
  return kConfigError;
}

// Interactive session state. Reports are dropped whenever world or plan change.
struct SessionState {
  std::optional<turtle::WorldSpec> world;  // goal field meaningful only if goal_set
  bool goal_set = false;
  std::optional<turtle::Plan> plan;
  std::optional<CheckReport> last_report;

  friend bool operator==(const SessionState& a, const SessionState& b) {
    return a.world == b.world && a.goal_set == b.goal_set && a.plan == b.plan &&
           a.last_report.has_value() == b.last_report.has_value();
  }
};

class Session {
 public:
  explicit Session(std::ostream& out) : out_(out) {}

  const SessionState& state() const { return state_; }

  // Executes one command line. Returns false on `quit`.
  bool execute(const std::string& line) {
    std::istringstream words(line);
    std::string cmd;
    if (!(words >> cmd) || cmd.front() == '#') return true;
    std::string rest;
    std::getline(words, rest);

    SessionState next = state_;
    try {
      if (cmd == "quit" || cmd == "exit") return false;
      if (cmd == "help") {
        help();
      } else if (cmd == "world") {
        auto [w, h] = two_ints(rest, "world W H");
        if (w < 1 || h < 1 || w > turtle::kMaxWorldSide || h > turtle::kMaxWorldSide) {
          fail("InvalidDimensions: dimensions must be between 1 and " +
               std::to_string(turtle::kMaxWorldSide));
        }
        next.world = turtle::WorldSpec{w, h, {}, {0, 0}};
        next.goal_set = false;
        next.last_report.reset();
        out_ << "world set to " << w << "x" << h << "\n";
      } else if (cmd == "obstacle") {
        auto [x, y] = two_ints(rest, "obstacle X Y");
        turtle::WorldSpec& w = require_world(next);
        const turtle::Position p{x, y};
        if (!w.in_bounds(p)) fail("OutOfBoundsCoordinate: " + turtle::to_string(p) + " is outside the world");
        if (p == turtle::Position{0, 0}) fail("ObstacleAtStart: the start cell (0, 0) cannot be an obstacle");
        if (next.goal_set && w.goal == p) fail("GoalOnObstacle: " + turtle::to_string(p) + " is the goal");
        w.obstacles.insert(p);
        next.last_report.reset();
        out_ << "obstacle added at " << turtle::to_string(p) << "\n";
      } else if (cmd == "clear") {
        require_world(next).obstacles.clear();
        next.last_report.reset();
        out_ << "obstacles cleared\n";
      } else if (cmd == "goal") {
        auto [x, y] = two_ints(rest, "goal X Y");
        turtle::WorldSpec& w = require_world(next);
        const turtle::Position p{x, y};
        if (!w.in_bounds(p)) fail("OutOfBoundsCoordinate: " + turtle::to_string(p) + " is outside the world");
        if (w.is_obstacle(p)) fail("GoalOnObstacle: " + turtle::to_string(p) + " is an obstacle");
        w.goal = p;
        next.goal_set = true;
        next.last_report.reset();
        out_ << "goal set to " << turtle::to_string(p) << "\n";
      } else if (cmd == "plan") {
        try {
          next.plan = parse_plan(rest);
        } catch (const ParseError& e) {
          fail(std::string(code_name(e.code())) + ": unknown plan token '" + e.lexeme() + "' at position " +
               std::to_string(e.token()));
        }
        next.last_report.reset();
        out_ << "plan set: " << (next.plan->empty() ? "(empty)" : turtle::format_plan(*next.plan)) << "\n";
      } else if (cmd == "check") {
        const turtle::WorldSpec& w = require_goal(next);
        out_ << "world: " << describe_world(w) << "\n";
        CheckReport report;
        report.reach_verdict = check_goal(w);
        if (next.plan) {
          report.plan_verdict = check_plan(w, *next.plan);
          out_ << describe_plan_verdict(*next.plan, report.plan_verdict) << "\n";
        } else {
          out_ << "plan check: skipped (no plan set)\n";
        }
        out_ << describe_reach_verdict(report.reach_verdict) << "\n";
        next.last_report = report;
      } else if (cmd == "map") {
        const turtle::WorldSpec& w = require_world(next);
        turtle::TurtleState pose = turtle::kStartState;
        if (next.plan) {
          turtle::SimResult sim = turtle::simulate(w, *next.plan);
          if (sim.verdict.valid()) pose = sim.final_state();
        }
        out_ << render_map(w, next.goal_set ? std::optional(w.goal) : std::nullopt, pose);
      } else if (cmd == "gen") {
        std::istringstream names(rest);
        std::string base;
        if (!(names >> base)) fail("usage: gen <basename>");
        const turtle::WorldSpec& w = require_goal(next);
        if (!next.plan) fail("no plan set");
        const PlanVerdict pv = check_plan(w, *next.plan);
        if (!pv.valid()) fail(describe_plan_verdict(*next.plan, pv) + "; nothing generated");
        const std::vector<std::pair<std::string, std::string>> files = {
            {base + ".py", codegen::generate_script(w, *next.plan)},
            {base + ".svg", codegen::generate_svg(w, *next.plan)},
            {base + ".json", codegen::generate_expectation(w, *next.plan)},
            {base + ".csp", codegen::generate_cspm(w, *next.plan)},
        };
        for (const auto& [path, text] : files) write_file(path, text);
        for (const auto& [path, text] : files) out_ << "wrote " << path << "\n";
        out_ << "run it with: python3 " << base << ".py\n";
      } else {
        fail("unknown command '" + cmd + "' (try help)");
      }
    } catch (const std::exception& e) {
      out_ << "error: " << e.what() << "\n";
      return true;
    }
    state_ = std::move(next);
    return true;
  }

 private:
  struct CommandError : std::runtime_error {
    using std::runtime_error::runtime_error;
  };

  [[noreturn]] static void fail(const std::string& msg) { throw CommandError(msg); }

  static std::pair<int, int> two_ints(const std::string& rest, const char* usage) {
    std::istringstream in(rest);
    std::string a, b, extra;
    if (!(in >> a >> b) || (in >> extra)) fail(std::string("usage: ") + usage);
    auto x = csp2turtle::detail::parse_natural(a);
    auto y = csp2turtle::detail::parse_natural(b);
    if (!x || !y) fail(std::string("usage: ") + usage + " (non-negative integers)");
    return {*x, *y};
  }

  static turtle::WorldSpec& require_world(SessionState& s) {
    if (!s.world) fail("no world configured");
    return *s.world;
  }

  static const turtle::WorldSpec& require_goal(SessionState& s) {
    const turtle::WorldSpec& w = require_world(s);
    if (!s.goal_set) fail("no goal configured");
    return w;
  }

  void help() {
    out_ << "commands:\n"
            "  world W H      set the world size (clears obstacles and goal)\n"
            "  obstacle X Y   block a cell\n"
            "  clear          remove all obstacles\n"
            "  goal X Y       mark the goal cell\n"
            "  plan TOKENS    set the plan (fd bk lt rt pu pd goal)\n"
            "  check          verify the plan and goal reachability\n"
            "  map            print the world\n"
            "  gen BASE       write BASE.py, BASE.svg, BASE.json and BASE.csp\n"
            "  quit           leave\n";
  }

  std::ostream& out_;
  SessionState state_;
};

inline int run_repl(std::istream& in, std::ostream& out) {
  Session session(out);
  out << "csp2turtle interactive session; type help for commands\n";
  std::string line;
  while (true) {
    out << "csp2turtle> " << std::flush;
    if (!std::getline(in, line)) {
      out << "\n";
      break;
    }
    if (!session.execute(line)) break;
  }
  return kOk;
}

}  // namespace csp2turtle::cli
