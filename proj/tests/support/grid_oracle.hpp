#pragma once

#include <csp2turtle/turtle/world.hpp>

#include <array>
#include <deque>
#include <map>
#include <optional>
#include <set>
#include <utility>

namespace csp2turtle::testing {

// Plain flood fill over 4-neighbours, written without the turtle model.
inline std::set<turtle::Position> flood_fill(const turtle::WorldSpec& w) {
  std::set<turtle::Position> seen{{0, 0}};
  std::deque<turtle::Position> queue{{0, 0}};
  constexpr std::array<std::pair<int, int>, 4> kSteps{{{1, 0}, {-1, 0}, {0, 1}, {0, -1}}};
  while (!queue.empty()) {
    turtle::Position p = queue.front();
    queue.pop_front();
    for (auto [dx, dy] : kSteps) {
      turtle::Position q{p.x + dx, p.y + dy};
      if (q.x < 0 || q.y < 0 || q.x >= w.width || q.y >= w.height) continue;
      if (w.obstacles.contains(q) || seen.contains(q)) continue;
      seen.insert(q);
      queue.push_back(q);
    }
  }
  return seen;
}

// Fewest fd/bk/lt/rt steps from (0, 0) facing East to the goal cell, by BFS
// over (cell, heading) with headings numbered 0 = East counterclockwise.
inline std::optional<std::size_t> shortest_moves_to_goal(const turtle::WorldSpec& w) {
  constexpr std::array<std::pair<int, int>, 4> kUnit{{{1, 0}, {0, 1}, {-1, 0}, {0, -1}}};
  using Node = std::pair<turtle::Position, int>;
  std::map<Node, std::size_t> dist{{{{0, 0}, 0}, 0}};
  std::deque<Node> queue{{{0, 0}, 0}};
  auto free = [&](turtle::Position q) {
    return q.x >= 0 && q.y >= 0 && q.x < w.width && q.y < w.height && !w.obstacles.contains(q);
  };
  while (!queue.empty()) {
    auto [p, h] = queue.front();
    queue.pop_front();
    const std::size_t d = dist.at({p, h});
    if (p == w.goal) return d;
    auto [dx, dy] = kUnit[static_cast<std::size_t>(h)];
    std::array<Node, 4> next{{{{p.x + dx, p.y + dy}, h}, {{p.x - dx, p.y - dy}, h}, {p, (h + 1) % 4}, {p, (h + 3) % 4}}};
    for (const Node& n : next) {
      if (!free(n.first) || dist.contains(n)) continue;
      dist[n] = d + 1;
      queue.push_back(n);
    }
  }
  return std::nullopt;
}

}  // namespace csp2turtle::testing
