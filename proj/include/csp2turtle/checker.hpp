#pragma once

#include <csp2turtle/csp.hpp>
#include <csp2turtle/turtle/model.hpp>
#include <csp2turtle/turtle/process.hpp>

#include <cstddef>
#include <optional>
#include <stdexcept>

namespace csp2turtle {

using turtle::PlanVerdict;

struct ReachVerdict {
  enum class Status : std::uint8_t { Reachable, Unreachable };

  Status status = Status::Unreachable;
  // Navigation events leading to the goal cell, ending with `goal`.
  std::optional<turtle::Plan> witness;

  bool reachable() const { return status == Status::Reachable; }

  friend bool operator==(const ReachVerdict&, const ReachVerdict&) = default;
};

struct CheckReport {
  PlanVerdict plan_verdict;
  ReachVerdict reach_verdict;
};

// The plan must be a trace of Turtle_main(0, 0). The failing position and
// enabled set come from the process; the reason from the direct rules.
// `proc` must have been built from `w`.
inline PlanVerdict check_plan(const turtle::TurtleProcess& proc, const turtle::WorldSpec& w,
                              const turtle::Plan& plan, std::size_t state_cap = csp::kDefaultStateCap) {
  const csp::TraceVerdict tv = csp::has_trace(proc.main, proc.env, turtle::to_trace(plan), state_cap);
  if (tv.holds) return {};

  const std::size_t index = *tv.failure_index;
  const turtle::Plan prefix(plan.begin(), plan.begin() + static_cast<std::ptrdiff_t>(index));
  const turtle::SimResult sim = turtle::simulate(w, prefix);
  if (!sim.verdict.valid()) {
    throw std::logic_error("process accepted a prefix the direct semantics rejects");
  }
  auto reason = turtle::disabled_reason(w, sim.final_state(), plan[index]);
  if (!reason) throw std::logic_error("process refused an event the direct semantics allows");
  return PlanVerdict::invalid(index, *reason, turtle::to_command_set(tv.enabled_at_failure));
}

inline PlanVerdict check_plan(const turtle::WorldSpec& w, const turtle::Plan& plan,
                              std::size_t state_cap = csp::kDefaultStateCap) {
  return check_plan(turtle::build_turtle_process(w), w, plan, state_cap);
}

// Turtle_main(0, 0) \ nav_events [T= goal -> STOP. On success the witness is
// the shortest unhidden path to a state offering goal.
inline ReachVerdict check_goal(const turtle::WorldSpec& w,
                               std::size_t state_cap = csp::kDefaultStateCap) {
  const turtle::TurtleProcess proc = turtle::build_turtle_process(w);
  const csp::Event goal = turtle::to_event(turtle::Command::Goal);
  const csp::ProcessExpr spec = csp::ProcessExpr::hide(proc.main, turtle::nav_events());
  const csp::ProcessExpr goalpoint = csp::ProcessExpr::prefix(goal, csp::ProcessExpr::stop());

  const csp::RefinementVerdict rv = csp::refines_traces(spec, goalpoint, proc.env, state_cap);
  if (!rv.holds) return {ReachVerdict::Status::Unreachable, std::nullopt};

  auto path = csp::shortest_trace_enabling(proc.main, proc.env, goal, state_cap);
  if (!path) throw std::logic_error("goal refinement holds but no path enables goal");
  turtle::Plan witness;
  for (const csp::Event& e : *path) witness.push_back(*turtle::to_command(e));
  witness.push_back(turtle::Command::Goal);
  return {ReachVerdict::Status::Reachable, std::move(witness)};
}

inline CheckReport check_all(const turtle::WorldSpec& w, const turtle::Plan& plan,
                             std::size_t state_cap = csp::kDefaultStateCap) {
  return {check_plan(w, plan, state_cap), check_goal(w, state_cap)};
}

}  // namespace csp2turtle
