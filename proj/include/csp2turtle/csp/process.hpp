#pragma once

#include <csp2turtle/csp/event.hpp>

#include <cstddef>
#include <functional>
#include <map>
#include <memory>
#include <span>
#include <string>
#include <unordered_map>
#include <utility>
#include <vector>

namespace csp2turtle::csp {

// Immutable CSP process term. Copies share structure; equality is structural.
class ProcessExpr {
 public:
  enum class Kind : std::uint8_t { Stop, Skip, Prefix, ExtChoice, Interleave, Hide, Ref };

  static ProcessExpr stop() { return ProcessExpr(make(Kind::Stop)); }
  static ProcessExpr skip() { return ProcessExpr(make(Kind::Skip)); }

  static ProcessExpr prefix(Event event, ProcessExpr cont) {
    if (!event.is_visible()) throw std::invalid_argument("prefix event must be visible");
    auto n = make(Kind::Prefix);
    n->event = std::move(event);
    n->children = {std::move(cont)};
    return ProcessExpr(std::move(n));
  }

  static ProcessExpr ext_choice(ProcessExpr left, ProcessExpr right) {
    auto n = make(Kind::ExtChoice);
    n->children = {std::move(left), std::move(right)};
    return ProcessExpr(std::move(n));
  }

  static ProcessExpr interleave(ProcessExpr left, ProcessExpr right) {
    auto n = make(Kind::Interleave);
    n->children = {std::move(left), std::move(right)};
    return ProcessExpr(std::move(n));
  }

  static ProcessExpr hide(ProcessExpr body, EventSet hidden) {
    return hide(std::move(body), std::make_shared<const EventSet>(std::move(hidden)));
  }

  static ProcessExpr hide(ProcessExpr body, std::shared_ptr<const EventSet> hidden) {
    for (const Event& e : *hidden) {
      if (!e.is_visible()) throw std::invalid_argument("only visible events can be hidden");
    }
    auto n = make(Kind::Hide);
    n->children = {std::move(body)};
    n->hidden = std::move(hidden);
    return ProcessExpr(std::move(n));
  }

  static ProcessExpr ref(std::string name, std::vector<int> args = {}) {
    auto n = make(Kind::Ref);
    n->name = std::move(name);
    n->args = std::move(args);
    return ProcessExpr(std::move(n));
  }

  Kind kind() const { return node_->kind; }
  const Event& event() const { return node_->event; }
  const ProcessExpr& cont() const { return node_->children.at(0); }
  const ProcessExpr& body() const { return node_->children.at(0); }
  const ProcessExpr& left() const { return node_->children.at(0); }
  const ProcessExpr& right() const { return node_->children.at(1); }
  const EventSet& hidden() const { return *node_->hidden; }
  const std::shared_ptr<const EventSet>& hidden_ptr() const { return node_->hidden; }
  const std::string& name() const { return node_->name; }
  std::span<const int> args() const { return node_->args; }

  std::size_t hash() const { return node_->hash; }

  friend bool operator==(const ProcessExpr& a, const ProcessExpr& b) {
    if (a.node_ == b.node_) return true;
    const Node& x = *a.node_;
    const Node& y = *b.node_;
    if (x.hash != y.hash || x.kind != y.kind) return false;
    switch (x.kind) {
      case Kind::Stop:
      case Kind::Skip: return true;
      case Kind::Prefix: return x.event == y.event && x.children[0] == y.children[0];
      case Kind::ExtChoice:
      case Kind::Interleave:
        return x.children[0] == y.children[0] && x.children[1] == y.children[1];
      case Kind::Hide:
        return (x.hidden == y.hidden || *x.hidden == *y.hidden) && x.children[0] == y.children[0];
      case Kind::Ref: return x.name == y.name && x.args == y.args;
    }
    return false;
  }

  std::string to_string() const {
    const Node& n = *node_;
    switch (n.kind) {
      case Kind::Stop: return "STOP";
      case Kind::Skip: return "SKIP";
      case Kind::Prefix: return n.event.to_string() + " -> " + n.children[0].to_string();
      case Kind::ExtChoice:
        return "(" + n.children[0].to_string() + " [] " + n.children[1].to_string() + ")";
      case Kind::Interleave:
        return "(" + n.children[0].to_string() + " ||| " + n.children[1].to_string() + ")";
      case Kind::Hide: {
        std::string set;
        for (const Event& e : *n.hidden) set += (set.empty() ? "" : ", ") + e.name();
        return "(" + n.children[0].to_string() + " \\ {" + set + "})";
      }
      case Kind::Ref: {
        std::string out = n.name;
        if (!n.args.empty()) {
          out += "(";
          for (std::size_t i = 0; i < n.args.size(); ++i) {
            out += (i ? ", " : "") + std::to_string(n.args[i]);
          }
          out += ")";
        }
        return out;
      }
    }
    return {};
  }

  struct Hasher {
    std::size_t operator()(const ProcessExpr& p) const noexcept { return p.hash(); }
  };

 private:
  struct Node {
    Kind kind{};
    Event event = Event::tau();
    std::vector<ProcessExpr> children;
    std::shared_ptr<const EventSet> hidden;
    std::string name;
    std::vector<int> args;
    std::size_t hash = 0;
  };

  static std::shared_ptr<Node> make(Kind k) {
    auto n = std::make_shared<Node>();
    n->kind = k;
    return n;
  }

  static std::size_t mix(std::size_t seed, std::size_t v) {
    return seed ^ (v + 0x9e3779b97f4a7c15ULL + (seed << 6) + (seed >> 2));
  }

  explicit ProcessExpr(std::shared_ptr<Node> n) {
    std::size_t h = static_cast<std::size_t>(n->kind) * 0x100000001b3ULL;
    if (n->kind == Kind::Prefix) h = mix(h, std::hash<std::string>{}(n->event.name()));
    for (const ProcessExpr& c : n->children) h = mix(h, c.hash());
    if (n->hidden) {
      for (const Event& e : *n->hidden) h = mix(h, std::hash<std::string>{}(e.name()));
    }
    if (n->kind == Kind::Ref) {
      h = mix(h, std::hash<std::string>{}(n->name));
      for (int a : n->args) h = mix(h, std::hash<int>{}(a));
    }
    n->hash = h;
    node_ = std::move(n);
  }

  std::shared_ptr<const Node> node_;
};

// Folds a list of alternatives into nested external choice; empty gives STOP.
inline ProcessExpr choice_of(std::vector<ProcessExpr> branches) {
  if (branches.empty()) return ProcessExpr::stop();
  ProcessExpr acc = branches.back();
  for (std::size_t i = branches.size() - 1; i-- > 0;) {
    acc = ProcessExpr::ext_choice(branches[i], std::move(acc));
  }
  return acc;
}

// Named, integer-parametrised process definitions plus the declared alphabet.
// The alphabet's declaration order is the canonical event order used wherever
// exploration must be deterministic.
class ProcessEnv {
 public:
  using Definition = std::function<ProcessExpr(std::span<const int>)>;

  void declare_event(const std::string& name) {
    if (name.empty()) throw std::invalid_argument("event name must be nonempty");
    if (order_.contains(name)) return;
    order_.emplace(name, alphabet_.size());
    alphabet_.push_back(name);
  }

  void declare_events(std::initializer_list<const char*> names) {
    for (const char* n : names) declare_event(n);
  }

  const std::vector<std::string>& alphabet() const { return alphabet_; }

  bool declared(const Event& e) const { return !e.is_visible() || order_.contains(e.name()); }

  // Sort key: tau first, then visible events in declaration order, tick last.
  std::size_t order(const Event& e) const {
    switch (e.kind()) {
      case EventKind::Tau: return 0;
      case EventKind::Tick: return alphabet_.size() + 1;
      default: {
        auto it = order_.find(e.name());
        if (it == order_.end()) throw UndeclaredEvent(e.name());
        return it->second + 1;
      }
    }
  }

  void define(const std::string& name, std::size_t arity, Definition body) {
    defs_[{name, arity}] = std::move(body);
  }

  // Convenience for parameterless definitions.
  void define(const std::string& name, ProcessExpr body) {
    define(name, 0, [body = std::move(body)](std::span<const int>) { return body; });
  }

  bool defines(const std::string& name, std::size_t arity) const {
    return defs_.contains({name, arity});
  }

  ProcessExpr unfold(const std::string& name, std::span<const int> args) const {
    auto it = defs_.find({name, args.size()});
    if (it == defs_.end()) throw UnresolvedReference(name, args.size());
    return it->second(args);
  }

 private:
  std::vector<std::string> alphabet_;
  std::map<std::string, std::size_t> order_;
  std::map<std::pair<std::string, std::size_t>, Definition> defs_;
};

}  // namespace csp2turtle::csp
