#pragma once

#include <csp2turtle/csp/state_space.hpp>

#include <cstddef>
#include <deque>
#include <map>
#include <optional>
#include <set>
#include <sstream>
#include <string>
#include <vector>

namespace csp2turtle::csp {

// Deterministic, tau-free automaton with the same finite traces as the
// process it was built from. Macro-states are numbered in discovery order,
// the initial state is 0.
struct DetAutomaton {
  struct Arc {
    Event event;
    std::size_t target;
  };

  std::vector<std::vector<ProcessExpr>> states;
  // Outgoing visible arcs per state, canonical event order.
  std::vector<std::vector<Arc>> arcs;
  std::vector<bool> accepting_tick;

  static constexpr std::size_t initial = 0;

  std::size_t size() const { return states.size(); }

  std::optional<std::size_t> next(std::size_t state, const Event& e) const {
    for (const Arc& a : arcs[state]) {
      if (a.event == e) return a.target;
    }
    return std::nullopt;
  }

  bool accepts(const Trace& trace) const {
    std::size_t s = initial;
    for (std::size_t i = 0; i < trace.size(); ++i) {
      if (trace[i].is_tick()) return i + 1 == trace.size() && accepting_tick[s];
      auto n = next(s, trace[i]);
      if (!n) return false;
      s = *n;
    }
    return true;
  }

  // Accepted traces up to `depth`, including tick-terminated ones.
  std::set<Trace> traces_upto(std::size_t depth) const {
    std::set<Trace> out{Trace{}};
    std::vector<std::pair<Trace, std::size_t>> frontier{{Trace{}, initial}};
    for (std::size_t len = 0; len < depth; ++len) {
      std::vector<std::pair<Trace, std::size_t>> next_frontier;
      for (const auto& [t, s] : frontier) {
        for (const Arc& a : arcs[s]) {
          Trace ext = t;
          ext.push_back(a.event);
          out.insert(ext);
          next_frontier.emplace_back(std::move(ext), a.target);
        }
        if (accepting_tick[s]) {
          Trace ext = t;
          ext.push_back(Event::tick());
          out.insert(std::move(ext));
        }
      }
      frontier = std::move(next_frontier);
    }
    return out;
  }

  // Plain-text transition list, one `state -event-> state` per line.
  std::string dump() const {
    std::ostringstream out;
    for (std::size_t s = 0; s < arcs.size(); ++s) {
      for (const Arc& a : arcs[s]) out << s << " -" << a.event.to_string() << "-> " << a.target << '\n';
      if (accepting_tick[s]) out << s << " -tick-> .\n";
    }
    return out.str();
  }
};

// Tau-closure plus subset construction. Throws StateBoundExceeded when either
// the configuration count or the macro-state count passes `bound`.
inline DetAutomaton normalize(const ProcessExpr& p, const ProcessEnv& env,
                              std::size_t bound = kDefaultStateCap) {
  StateSpace space(env, bound);
  DetAutomaton out;
  std::map<std::vector<int>, std::size_t> index;
  std::deque<std::vector<int>> queue;

  auto add = [&](std::vector<int> macro) -> std::size_t {
    auto it = index.find(macro);
    if (it != index.end()) return it->second;
    if (out.states.size() >= bound) throw StateBoundExceeded(bound);
    std::size_t id = out.states.size();
    index.emplace(macro, id);
    std::vector<ProcessExpr> members;
    members.reserve(macro.size());
    for (int c : macro) members.push_back(space.config(c));
    out.states.push_back(std::move(members));
    out.arcs.emplace_back();
    out.accepting_tick.push_back(false);
    queue.push_back(std::move(macro));
    return id;
  };

  add(space.tau_closure({space.intern(p)}));
  for (std::size_t current = 0; !queue.empty(); ++current) {
    std::vector<int> macro = std::move(queue.front());
    queue.pop_front();
    for (const Event& e : space.offered(macro)) {
      if (e.is_tick()) {
        out.accepting_tick[current] = true;
        continue;
      }
      std::size_t target = add(space.after(macro, e));
      out.arcs[current].push_back({e, target});
    }
  }
  return out;
}

}  // namespace csp2turtle::csp
