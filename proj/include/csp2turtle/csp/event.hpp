#pragma once

#include <compare>
#include <cstdint>
#include <set>
#include <stdexcept>
#include <string>
#include <utility>
#include <vector>

namespace csp2turtle::csp {

enum class EventKind : std::uint8_t { Visible, Tau, Tick };

// A communication (Visible), the internal action produced by hiding (Tau),
// or successful termination (Tick).
class Event {
 public:
  static Event visible(std::string name) {
    if (name.empty()) throw std::invalid_argument("visible event needs a name");
    return Event(EventKind::Visible, std::move(name));
  }
  static Event tau() { return Event(EventKind::Tau, {}); }
  static Event tick() { return Event(EventKind::Tick, {}); }

  EventKind kind() const { return kind_; }
  const std::string& name() const { return name_; }
  bool is_visible() const { return kind_ == EventKind::Visible; }
  bool is_tau() const { return kind_ == EventKind::Tau; }
  bool is_tick() const { return kind_ == EventKind::Tick; }

  std::string to_string() const {
    switch (kind_) {
      case EventKind::Tau: return "tau";
      case EventKind::Tick: return "tick";
      default: return name_;
    }
  }

  friend bool operator==(const Event&, const Event&) = default;
  friend auto operator<=>(const Event&, const Event&) = default;

 private:
  Event(EventKind kind, std::string name) : kind_(kind), name_(std::move(name)) {}

  EventKind kind_;
  std::string name_;
};

using EventSet = std::set<Event>;
using Trace = std::vector<Event>;

inline EventSet visible_set(std::initializer_list<const char*> names) {
  EventSet out;
  for (const char* n : names) out.insert(Event::visible(n));
  return out;
}

inline Trace visible_trace(std::initializer_list<const char*> names) {
  Trace out;
  for (const char* n : names) out.push_back(Event::visible(n));
  return out;
}

// Renders a trace as <a, b, c>. Tick is omitted unless asked for.
inline std::string format_trace(const Trace& t, bool show_tick = false) {
  std::string out = "<";
  bool first = true;
  for (const Event& e : t) {
    if (e.is_tick() && !show_tick) continue;
    if (!first) out += ", ";
    out += e.to_string();
    first = false;
  }
  return out + ">";
}

class Error : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

class UnresolvedReference : public Error {
 public:
  UnresolvedReference(const std::string& name, std::size_t arity)
      : Error("unresolved process reference " + name + "/" + std::to_string(arity)),
        name_(name) {}
  const std::string& name() const { return name_; }

 private:
  std::string name_;
};

class UndeclaredEvent : public Error {
 public:
  explicit UndeclaredEvent(const std::string& name)
      : Error("event '" + name + "' is not in the declared alphabet") {}
};

class UnguardedRecursion : public Error {
 public:
  explicit UnguardedRecursion(const std::string& name)
      : Error("unguarded recursion while unfolding " + name) {}
};

class StateBoundExceeded : public Error {
 public:
  explicit StateBoundExceeded(std::size_t bound)
      : Error("state bound of " + std::to_string(bound) + " exceeded"), bound_(bound) {}
  std::size_t bound() const { return bound_; }

 private:
  std::size_t bound_;
};

inline constexpr std::size_t kDefaultStateCap = 1'000'000;

}  // namespace csp2turtle::csp
