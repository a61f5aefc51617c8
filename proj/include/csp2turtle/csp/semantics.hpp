#pragma once

#include <csp2turtle/csp/process.hpp>

#include <algorithm>
#include <set>
#include <vector>

namespace csp2turtle::csp {

struct Transition {
  Event event;
  ProcessExpr target;
};

namespace detail {

inline constexpr int kMaxUnfoldDepth = 256;

inline void collect(const ProcessExpr& p, const ProcessEnv& env, int depth,
                    std::vector<Transition>& out) {
  using K = ProcessExpr::Kind;
  switch (p.kind()) {
    case K::Stop:
      return;
    case K::Skip:
      // Terminated processes behave as STOP for trace purposes.
      out.push_back({Event::tick(), ProcessExpr::stop()});
      return;
    case K::Prefix:
      if (!env.declared(p.event())) throw UndeclaredEvent(p.event().name());
      out.push_back({p.event(), p.cont()});
      return;
    case K::ExtChoice: {
      std::vector<Transition> sides[2];
      collect(p.left(), env, depth, sides[0]);
      collect(p.right(), env, depth, sides[1]);
      for (int s = 0; s < 2; ++s) {
        for (Transition& t : sides[s]) {
          if (t.event.is_tau()) {
            // Internal progress does not resolve the choice.
            t.target = s == 0 ? ProcessExpr::ext_choice(std::move(t.target), p.right())
                              : ProcessExpr::ext_choice(p.left(), std::move(t.target));
          }
          out.push_back(std::move(t));
        }
      }
      return;
    }
    case K::Interleave: {
      std::vector<Transition> l, r;
      collect(p.left(), env, depth, l);
      collect(p.right(), env, depth, r);
      for (Transition& t : l) {
        if (t.event.is_tick()) continue;
        out.push_back({t.event, ProcessExpr::interleave(std::move(t.target), p.right())});
      }
      for (Transition& t : r) {
        if (t.event.is_tick()) continue;
        out.push_back({t.event, ProcessExpr::interleave(p.left(), std::move(t.target))});
      }
      // Distributed termination: tick only when both sides can tick.
      bool lt = std::any_of(l.begin(), l.end(), [](const Transition& t) { return t.event.is_tick(); });
      bool rt = std::any_of(r.begin(), r.end(), [](const Transition& t) { return t.event.is_tick(); });
      if (lt && rt) out.push_back({Event::tick(), ProcessExpr::stop()});
      return;
    }
    case K::Hide: {
      std::vector<Transition> inner;
      collect(p.body(), env, depth, inner);
      for (Transition& t : inner) {
        if (t.event.is_tick()) {
          out.push_back(std::move(t));
        } else if (t.event.is_visible() && p.hidden().contains(t.event)) {
          out.push_back({Event::tau(), ProcessExpr::hide(std::move(t.target), p.hidden_ptr())});
        } else {
          out.push_back({t.event, ProcessExpr::hide(std::move(t.target), p.hidden_ptr())});
        }
      }
      return;
    }
    case K::Ref:
      if (depth >= kMaxUnfoldDepth) throw UnguardedRecursion(p.name());
      collect(env.unfold(p.name(), p.args()), env, depth + 1, out);
      return;
  }
}

}  // namespace detail

// Every first step of p, with duplicates removed, in canonical event order.
inline std::vector<Transition> transitions(const ProcessExpr& p, const ProcessEnv& env) {
  std::vector<Transition> out;
  detail::collect(p, env, 0, out);
  std::stable_sort(out.begin(), out.end(), [&](const Transition& a, const Transition& b) {
    return env.order(a.event) < env.order(b.event);
  });
  std::vector<Transition> unique;
  unique.reserve(out.size());
  for (Transition& t : out) {
    bool dup = std::any_of(unique.begin(), unique.end(), [&](const Transition& u) {
      return u.event == t.event && u.target == t.target;
    });
    if (!dup) unique.push_back(std::move(t));
  }
  return unique;
}

inline std::set<Event> initials(const ProcessExpr& p, const ProcessEnv& env) {
  std::set<Event> out;
  for (const Transition& t : transitions(p, env)) out.insert(t.event);
  return out;
}

inline std::vector<ProcessExpr> step(const ProcessExpr& p, const ProcessEnv& env, const Event& e) {
  std::vector<ProcessExpr> out;
  for (Transition& t : transitions(p, env)) {
    if (t.event == e) out.push_back(std::move(t.target));
  }
  return out;
}

}  // namespace csp2turtle::csp
