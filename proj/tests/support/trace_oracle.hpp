#pragma once

// Test-only denotational trace semantics for finite, reference-free process
// terms, plus a random term generator. Shares nothing with the kernel's
// operational rules.

#include <csp2turtle/csp/process.hpp>

#include <cstddef>
#include <random>
#include <set>
#include <vector>

namespace csp2turtle::testing {

using csp::Event;
using csp::EventSet;
using csp::ProcessExpr;
using csp::Trace;
using TraceSet = std::set<Trace>;

inline bool ends_in_tick(const Trace& t) { return !t.empty() && t.back().is_tick(); }

inline Trace strip_tick(const Trace& t) { return ends_in_tick(t) ? Trace(t.begin(), t.end() - 1) : t; }

inline void merges(const Trace& s, std::size_t i, const Trace& t, std::size_t j, Trace& acc,
                   TraceSet& out) {
  if (i == s.size() && j == t.size()) {
    out.insert(acc);
    return;
  }
  if (i < s.size()) {
    acc.push_back(s[i]);
    merges(s, i + 1, t, j, acc, out);
    acc.pop_back();
  }
  if (j < t.size()) {
    acc.push_back(t[j]);
    merges(s, i, t, j + 1, acc, out);
    acc.pop_back();
  }
}

// s ||| t: all merges, with a single final tick only when both terminate.
inline TraceSet interleave_traces(const Trace& s, const Trace& t) {
  TraceSet raw;
  Trace acc;
  merges(strip_tick(s), 0, strip_tick(t), 0, acc, raw);
  if (!(ends_in_tick(s) && ends_in_tick(t))) return raw;
  TraceSet out;
  for (Trace r : raw) {
    r.push_back(Event::tick());
    out.insert(std::move(r));
  }
  return out;
}

inline TraceSet interleave_sets(const TraceSet& a, const TraceSet& b) {
  TraceSet out;
  for (const Trace& s : a) {
    for (const Trace& t : b) {
      TraceSet m = interleave_traces(s, t);
      out.insert(m.begin(), m.end());
    }
  }
  return out;
}

inline TraceSet hide_traces(const TraceSet& ts, const EventSet& hidden) {
  TraceSet out;
  for (const Trace& t : ts) {
    Trace kept;
    for (const Event& e : t) {
      if (!(e.is_visible() && hidden.contains(e))) kept.push_back(e);
    }
    out.insert(std::move(kept));
  }
  return out;
}

inline TraceSet truncate(const TraceSet& ts, std::size_t depth) {
  TraceSet out;
  for (const Trace& t : ts) {
    if (t.size() <= depth) out.insert(t);
  }
  return out;
}

// Complete trace set of a finite reference-free term.
inline TraceSet denotational_traces(const ProcessExpr& p) {
  using K = ProcessExpr::Kind;
  switch (p.kind()) {
    case K::Stop: return {Trace{}};
    case K::Skip: return {Trace{}, Trace{Event::tick()}};
    case K::Prefix: {
      TraceSet out{Trace{}};
      for (const Trace& t : denotational_traces(p.cont())) {
        Trace ext{p.event()};
        ext.insert(ext.end(), t.begin(), t.end());
        out.insert(std::move(ext));
      }
      return out;
    }
    case K::ExtChoice: {
      TraceSet out = denotational_traces(p.left());
      TraceSet r = denotational_traces(p.right());
      out.insert(r.begin(), r.end());
      return out;
    }
    case K::Interleave:
      return interleave_sets(denotational_traces(p.left()), denotational_traces(p.right()));
    case K::Hide: return hide_traces(denotational_traces(p.body()), p.hidden());
    case K::Ref: break;
  }
  throw std::invalid_argument("denotational oracle does not unfold references");
}

// Random finite terms over {a, b, c}. Interleavings are kept shallow so the
// oracle's trace sets stay small.
class TermGenerator {
 public:
  explicit TermGenerator(unsigned seed) : rng_(seed) {}

  ProcessExpr term(int depth) {
    std::uniform_int_distribution<int> pick(0, depth <= 0 ? 2 : 7);
    switch (pick(rng_)) {
      case 0: return ProcessExpr::stop();
      case 1: return ProcessExpr::skip();
      case 2:
      case 3: return ProcessExpr::prefix(event(), term(depth - 1));
      case 4: return ProcessExpr::ext_choice(term(depth - 1), term(depth - 1));
      case 5: return ProcessExpr::interleave(term(depth - 2), term(depth - 2));
      case 6: return ProcessExpr::hide(term(depth - 1), hidden());
      default: return ProcessExpr::prefix(event(), ProcessExpr::prefix(event(), term(depth - 2)));
    }
  }

  Event event() {
    static const char* names[] = {"a", "b", "c"};
    std::uniform_int_distribution<int> pick(0, 2);
    return Event::visible(names[pick(rng_)]);
  }

  EventSet hidden() {
    EventSet out;
    std::bernoulli_distribution coin(0.4);
    for (const char* n : {"a", "b", "c"}) {
      if (coin(rng_)) out.insert(Event::visible(n));
    }
    return out;
  }

  std::mt19937& rng() { return rng_; }

 private:
  std::mt19937 rng_;
};

inline csp::ProcessEnv abc_env() {
  csp::ProcessEnv env;
  env.declare_events({"a", "b", "c"});
  return env;
}

// All traces over {a, b, c} up to `depth` events.
inline std::vector<Trace> all_abc_traces(std::size_t depth) {
  std::vector<Trace> out{Trace{}};
  std::vector<Trace> frontier{Trace{}};
  for (std::size_t d = 0; d < depth; ++d) {
    std::vector<Trace> next;
    for (const Trace& t : frontier) {
      for (const char* n : {"a", "b", "c"}) {
        Trace ext = t;
        ext.push_back(Event::visible(n));
        out.push_back(ext);
        next.push_back(std::move(ext));
      }
    }
    frontier = std::move(next);
  }
  return out;
}

}  // namespace csp2turtle::testing
