#pragma once

#include <csp2turtle/csp/normalize.hpp>

#include <cstddef>
#include <cstdint>
#include <functional>
#include <optional>
#include <unordered_set>
#include <vector>

namespace csp2turtle::csp {

struct RefinementVerdict {
  bool holds = true;
  // A shortest trace of the implementation the specification cannot perform.
  // May end in Tick when only termination is refused.
  std::optional<Trace> counterexample;
};

// Decides spec [T= impl: every finite trace of impl is a trace of spec.
// Explores pairs (impl configuration, spec macro-state) layer by layer, one
// layer per visible event, so the first refusal found is a shortest one.
inline RefinementVerdict refines_traces(const ProcessExpr& spec, const ProcessExpr& impl,
                                        const ProcessEnv& env,
                                        std::size_t bound = kDefaultStateCap) {
  const DetAutomaton norm = normalize(spec, env, bound);
  StateSpace space(env, bound);

  struct Node {
    int config;
    std::size_t spec_state;
    std::optional<std::size_t> parent;
    std::optional<Event> via;  // visible event from parent; nullopt for tau
  };
  std::vector<Node> nodes;
  std::unordered_set<std::uint64_t> seen;

  auto key = [](int config, std::size_t s) {
    return (static_cast<std::uint64_t>(config) << 32) | static_cast<std::uint64_t>(s);
  };
  auto visit = [&](std::vector<std::size_t>& layer, int config, std::size_t s,
                   std::optional<std::size_t> parent, std::optional<Event> via) {
    if (!seen.insert(key(config, s)).second) return;
    if (nodes.size() >= bound) throw StateBoundExceeded(bound);
    nodes.push_back({config, s, parent, std::move(via)});
    layer.push_back(nodes.size() - 1);
  };
  auto trace_to = [&](std::size_t n) {
    Trace t;
    for (std::optional<std::size_t> cur = n; cur; cur = nodes[*cur].parent) {
      if (nodes[*cur].via) t.push_back(*nodes[*cur].via);
    }
    return Trace(t.rbegin(), t.rend());
  };

  std::vector<std::size_t> layer;
  visit(layer, space.intern(impl), DetAutomaton::initial, std::nullopt, std::nullopt);
  while (!layer.empty()) {
    // Close the layer under tau before taking any visible step.
    for (std::size_t i = 0; i < layer.size(); ++i) {
      const std::size_t n = layer[i];
      const std::vector<StateSpace::Edge> edges = space.edges(nodes[n].config);
      for (const StateSpace::Edge& e : edges) {
        if (e.event.is_tau()) visit(layer, e.target, nodes[n].spec_state, n, std::nullopt);
      }
    }
    std::vector<std::size_t> next_layer;
    for (const std::size_t n : layer) {
      const std::size_t s = nodes[n].spec_state;
      const std::vector<StateSpace::Edge> edges = space.edges(nodes[n].config);
      for (const StateSpace::Edge& e : edges) {
        if (e.event.is_tau()) continue;
        if (e.event.is_tick()) {
          if (norm.accepting_tick[s]) continue;
        } else if (auto t = norm.next(s, e.event)) {
          visit(next_layer, e.target, *t, n, e.event);
          continue;
        }
        Trace cex = trace_to(n);
        cex.push_back(e.event);
        return {false, std::move(cex)};
      }
    }
    layer = std::move(next_layer);
  }
  return {};
}

}  // namespace csp2turtle::csp
