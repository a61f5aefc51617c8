#pragma once

#include <csp2turtle/csp/semantics.hpp>

#include <algorithm>
#include <cstddef>
#include <optional>
#include <unordered_map>
#include <vector>

namespace csp2turtle::csp {

// Lazily explored labelled transition system rooted at one process term.
// Configurations are interned to dense ids in discovery order.
class StateSpace {
 public:
  struct Edge {
    Event event;
    int target;
  };

  StateSpace(const ProcessEnv& env, std::size_t bound) : env_(env), bound_(bound) {}

  int intern(const ProcessExpr& p) {
    auto [it, inserted] = ids_.try_emplace(p, static_cast<int>(configs_.size()));
    if (inserted) {
      if (configs_.size() >= bound_) {
        ids_.erase(it);
        throw StateBoundExceeded(bound_);
      }
      configs_.push_back(p);
      edges_.emplace_back();
    }
    return it->second;
  }

  const std::vector<Edge>& edges(int id) {
    auto& slot = edges_[static_cast<std::size_t>(id)];
    if (!slot) {
      std::vector<Edge> out;
      // Copy: interning may reallocate configs_.
      ProcessExpr p = configs_[static_cast<std::size_t>(id)];
      for (Transition& t : transitions(p, env_)) out.push_back({t.event, intern(t.target)});
      edges_[static_cast<std::size_t>(id)] = std::move(out);
      return *edges_[static_cast<std::size_t>(id)];
    }
    return *slot;
  }

  // Sorted set of ids reachable from `seeds` by tau steps alone.
  std::vector<int> tau_closure(std::vector<int> seeds) {
    std::vector<int> stack = seeds;
    std::vector<int> out;
    std::vector<bool> seen;
    auto mark = [&](int id) {
      if (static_cast<std::size_t>(id) >= seen.size()) seen.resize(configs_.size() + 1, false);
      if (seen[static_cast<std::size_t>(id)]) return false;
      seen[static_cast<std::size_t>(id)] = true;
      return true;
    };
    stack.clear();
    for (int s : seeds) {
      if (mark(s)) stack.push_back(s);
    }
    while (!stack.empty()) {
      int id = stack.back();
      stack.pop_back();
      out.push_back(id);
      for (const Edge& e : edges(id)) {
        if (e.event.is_tau() && mark(e.target)) stack.push_back(e.target);
      }
    }
    std::sort(out.begin(), out.end());
    return out;
  }

  // Targets of non-tau `event` from any member of `set`, tau-closed.
  std::vector<int> after(const std::vector<int>& set, const Event& event) {
    std::vector<int> seeds;
    for (int id : set) {
      for (const Edge& e : edges(id)) {
        if (e.event == event) seeds.push_back(e.target);
      }
    }
    return tau_closure(std::move(seeds));
  }

  // Non-tau events offered by some member of `set`, in canonical order.
  std::vector<Event> offered(const std::vector<int>& set) {
    std::vector<Event> out;
    for (int id : set) {
      for (const Edge& e : edges(id)) {
        if (!e.event.is_tau() && std::find(out.begin(), out.end(), e.event) == out.end()) {
          out.push_back(e.event);
        }
      }
    }
    std::sort(out.begin(), out.end(),
              [&](const Event& a, const Event& b) { return env_.order(a) < env_.order(b); });
    return out;
  }

  const ProcessExpr& config(int id) const { return configs_[static_cast<std::size_t>(id)]; }
  std::size_t size() const { return configs_.size(); }
  const ProcessEnv& env() const { return env_; }

 private:
  const ProcessEnv& env_;
  std::size_t bound_;
  std::unordered_map<ProcessExpr, int, ProcessExpr::Hasher> ids_;
  std::vector<ProcessExpr> configs_;
  std::vector<std::optional<std::vector<Edge>>> edges_;
};

}  // namespace csp2turtle::csp
