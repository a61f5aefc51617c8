#pragma once

#include <csp2turtle/csp/state_space.hpp>

#include <cstddef>
#include <map>
#include <optional>
#include <set>
#include <vector>

namespace csp2turtle::csp {

// Every trace of length <= depth, tau steps erased. Tick may appear as the
// final event of a trace.
inline std::set<Trace> traces_upto(const ProcessExpr& p, const ProcessEnv& env, std::size_t depth,
                                   std::size_t bound = kDefaultStateCap) {
  StateSpace space(env, bound);
  std::set<Trace> result;
  std::map<Trace, std::vector<int>> frontier;
  frontier.emplace(Trace{}, space.tau_closure({space.intern(p)}));
  result.insert(Trace{});
  for (std::size_t len = 0; len < depth && !frontier.empty(); ++len) {
    std::map<Trace, std::vector<int>> next;
    for (const auto& [trace, set] : frontier) {
      for (const Event& e : space.offered(set)) {
        Trace t = trace;
        t.push_back(e);
        result.insert(t);
        if (!e.is_tick()) next.emplace(std::move(t), space.after(set, e));
      }
    }
    frontier = std::move(next);
  }
  return result;
}

struct TraceVerdict {
  bool holds = true;
  std::optional<std::size_t> failure_index;
  // Visible events some tau-reachable configuration could perform at the
  // failing position.
  EventSet enabled_at_failure;
};

inline TraceVerdict has_trace(const ProcessExpr& p, const ProcessEnv& env, const Trace& trace,
                              std::size_t bound = kDefaultStateCap) {
  StateSpace space(env, bound);
  std::vector<int> current = space.tau_closure({space.intern(p)});
  for (std::size_t i = 0; i < trace.size(); ++i) {
    if (!trace[i].is_visible()) {
      throw std::invalid_argument("has_trace expects visible events only");
    }
    std::vector<int> next = space.after(current, trace[i]);
    if (next.empty()) {
      TraceVerdict v;
      v.holds = false;
      v.failure_index = i;
      for (const Event& e : space.offered(current)) {
        if (e.is_visible()) v.enabled_at_failure.insert(e);
      }
      return v;
    }
    current = std::move(next);
  }
  return {};
}

// Shortest visible trace after which `event` is offered, searching
// configurations breadth-first in canonical event order.
inline std::optional<Trace> shortest_trace_enabling(const ProcessExpr& p, const ProcessEnv& env,
                                                    const Event& event,
                                                    std::size_t bound = kDefaultStateCap) {
  StateSpace space(env, bound);
  std::vector<std::optional<std::pair<int, std::optional<Event>>>> parent;
  std::vector<bool> seen;
  auto visit = [&](std::vector<int>& layer, int id, std::optional<std::pair<int, std::optional<Event>>> from) {
    auto i = static_cast<std::size_t>(id);
    if (i >= seen.size()) {
      seen.resize(space.size(), false);
      parent.resize(space.size());
    }
    if (seen[i]) return;
    seen[i] = true;
    parent[i] = std::move(from);
    layer.push_back(id);
  };
  auto trace_to = [&](int id) {
    Trace t;
    for (auto cur = parent[static_cast<std::size_t>(id)]; cur;
         cur = parent[static_cast<std::size_t>(cur->first)]) {
      if (cur->second) t.push_back(*cur->second);
    }
    return Trace(t.rbegin(), t.rend());
  };

  std::vector<int> layer;
  visit(layer, space.intern(p), std::nullopt);
  while (!layer.empty()) {
    for (std::size_t i = 0; i < layer.size(); ++i) {
      const int id = layer[i];
      const std::vector<StateSpace::Edge> edges = space.edges(id);
      for (const StateSpace::Edge& e : edges) {
        if (e.event.is_tau()) visit(layer, e.target, std::pair{id, std::optional<Event>{}});
      }
    }
    std::vector<int> next;
    for (const int id : layer) {
      const std::vector<StateSpace::Edge> edges = space.edges(id);
      for (const StateSpace::Edge& e : edges) {
        if (e.event == event) return trace_to(id);
      }
      for (const StateSpace::Edge& e : edges) {
        if (e.event.is_visible()) visit(next, e.target, std::pair{id, std::optional<Event>{e.event}});
      }
    }
    layer = std::move(next);
  }
  return std::nullopt;
}

}  // namespace csp2turtle::csp
