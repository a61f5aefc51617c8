#pragma once

#include <csp2turtle/turtle/world.hpp>

#include <algorithm>
#include <charconv>
#include <cstddef>
#include <optional>
#include <stdexcept>
#include <string>
#include <string_view>
#include <vector>

namespace csp2turtle {

enum class ParseErrorCode : std::uint8_t {
  UnknownToken,
  Malformed,
  MissingWorldLine,
  InvalidDimensions,
  DuplicateGoal,
  OutOfBoundsCoordinate,
  ObstacleAtStart,
  GoalOnObstacle,
  MissingGoal,
};

inline std::string_view code_name(ParseErrorCode c) {
  switch (c) {
    case ParseErrorCode::UnknownToken: return "UnknownToken";
    case ParseErrorCode::Malformed: return "Malformed";
    case ParseErrorCode::MissingWorldLine: return "MissingWorldLine";
    case ParseErrorCode::InvalidDimensions: return "InvalidDimensions";
    case ParseErrorCode::DuplicateGoal: return "DuplicateGoal";
    case ParseErrorCode::OutOfBoundsCoordinate: return "OutOfBoundsCoordinate";
    case ParseErrorCode::ObstacleAtStart: return "ObstacleAtStart";
    case ParseErrorCode::GoalOnObstacle: return "GoalOnObstacle";
    case ParseErrorCode::MissingGoal: return "MissingGoal";
  }
  return "?";
}

// Positions are 1-based. `token` counts whitespace/comma separated lexemes
// from the start of the input for plans, and within the line for worlds.
class ParseError : public std::runtime_error {
 public:
  ParseError(ParseErrorCode code, std::size_t line, std::size_t token, std::string lexeme,
             const std::string& message)
      : std::runtime_error("line " + std::to_string(line) + ", token " + std::to_string(token) +
                           ": " + std::string(code_name(code)) + ": " + message),
        code_(code),
        line_(line),
        token_(token),
        lexeme_(std::move(lexeme)) {}

  ParseErrorCode code() const { return code_; }
  std::size_t line() const { return line_; }
  std::size_t token() const { return token_; }
  const std::string& lexeme() const { return lexeme_; }

 private:
  ParseErrorCode code_;
  std::size_t line_;
  std::size_t token_;
  std::string lexeme_;
};

namespace detail {

struct Lexeme {
  std::string_view text;
  std::size_t line;
};

inline std::vector<Lexeme> split(std::string_view text, std::string_view separators) {
  std::vector<Lexeme> out;
  std::size_t line = 1;
  std::size_t i = 0;
  while (i < text.size()) {
    if (separators.find(text[i]) != std::string_view::npos) {
      if (text[i] == '\n') ++line;
      ++i;
      continue;
    }
    std::size_t j = i;
    while (j < text.size() && separators.find(text[j]) == std::string_view::npos) ++j;
    out.push_back({text.substr(i, j - i), line});
    i = j;
  }
  return out;
}

inline std::optional<int> parse_natural(std::string_view s) {
  if (s.empty() || s.front() < '0' || s.front() > '9') return std::nullopt;
  int v = 0;
  auto [ptr, ec] = std::from_chars(s.data(), s.data() + s.size(), v);
  if (ec != std::errc{} || ptr != s.data() + s.size()) return std::nullopt;
  return v;
}

}  // namespace detail

inline turtle::Plan parse_plan(std::string_view text) {
  turtle::Plan plan;
  std::size_t index = 0;
  for (const detail::Lexeme& lex : detail::split(text, " \t\r\n\v\f,")) {
    ++index;
    auto c = turtle::command_from_token(lex.text);
    if (!c) {
      throw ParseError(ParseErrorCode::UnknownToken, lex.line, index, std::string(lex.text),
                       "unknown plan token '" + std::string(lex.text) + "'");
    }
    plan.push_back(*c);
  }
  return plan;
}

// Line format: `world W H` first, then any number of `obstacle X Y`, and
// exactly one `goal X Y`. Blank lines and `#` comments are ignored.
inline turtle::WorldSpec parse_world(std::string_view text) {
  turtle::WorldSpec w;
  bool have_world = false;
  std::optional<turtle::Position> goal;
  std::size_t line_no = 0;

  std::size_t start = 0;
  while (start <= text.size()) {
    std::size_t end = text.find('\n', start);
    if (end == std::string_view::npos) end = text.size();
    std::string_view line = text.substr(start, end - start);
    start = end + 1;
    ++line_no;

    std::vector<detail::Lexeme> toks = detail::split(line, " \t\r");
    if (toks.empty() || toks.front().text.front() == '#') continue;

    auto fail = [&](ParseErrorCode code, std::size_t tok, const std::string& msg) -> ParseError {
      std::string lexeme = tok >= 1 && tok <= toks.size() ? std::string(toks[tok - 1].text) : "";
      return ParseError(code, line_no, tok, lexeme, msg);
    };
    const std::string_view directive = toks.front().text;
    if (directive != "world" && directive != "obstacle" && directive != "goal") {
      throw fail(ParseErrorCode::Malformed, 1, "unknown directive '" + std::string(directive) + "'");
    }
    if (toks.size() != 3) {
      throw fail(ParseErrorCode::Malformed, std::min<std::size_t>(toks.size(), 4),
                 std::string(directive) + " takes exactly two integers");
    }
    int a = 0, b = 0;
    for (std::size_t k = 1; k <= 2; ++k) {
      auto v = detail::parse_natural(toks[k].text);
      if (!v) throw fail(ParseErrorCode::Malformed, k + 1, "expected a non-negative integer");
      (k == 1 ? a : b) = *v;
    }

    if (directive == "world") {
      if (have_world) throw fail(ParseErrorCode::Malformed, 1, "world declared twice");
      if (a < 1 || b < 1 || a > turtle::kMaxWorldSide || b > turtle::kMaxWorldSide) {
        throw fail(ParseErrorCode::InvalidDimensions, a < 1 || a > turtle::kMaxWorldSide ? 2 : 3,
                   "dimensions must be between 1 and " + std::to_string(turtle::kMaxWorldSide));
      }
      w.width = a;
      w.height = b;
      have_world = true;
      continue;
    }
    if (!have_world) throw fail(ParseErrorCode::MissingWorldLine, 1, "expected 'world W H' first");

    const turtle::Position p{a, b};
    if (!w.in_bounds(p)) {
      throw fail(ParseErrorCode::OutOfBoundsCoordinate, a >= w.width ? 2 : 3,
                 turtle::to_string(p) + " lies outside the " + std::to_string(w.width) + "x" +
                     std::to_string(w.height) + " world");
    }
    if (directive == "obstacle") {
      if (p == turtle::Position{0, 0}) {
        throw fail(ParseErrorCode::ObstacleAtStart, 2, "the start cell (0, 0) cannot be an obstacle");
      }
      if (goal && *goal == p) throw fail(ParseErrorCode::GoalOnObstacle, 2, "obstacle covers the goal");
      w.obstacles.insert(p);
    } else {
      if (goal) throw fail(ParseErrorCode::DuplicateGoal, 1, "goal declared twice");
      if (w.is_obstacle(p)) throw fail(ParseErrorCode::GoalOnObstacle, 2, "goal is on an obstacle");
      goal = p;
    }
  }

  if (!have_world) {
    throw ParseError(ParseErrorCode::MissingWorldLine, line_no, 0, "", "no 'world W H' line");
  }
  if (!goal) throw ParseError(ParseErrorCode::MissingGoal, line_no, 0, "", "no 'goal X Y' line");
  w.goal = *goal;
  return w;
}

// Canonical text: world line, obstacles ordered by (y, x), goal line.
inline std::string serialize_world(const turtle::WorldSpec& w) {
  std::string out = "world " + std::to_string(w.width) + " " + std::to_string(w.height);
  for (const turtle::Position& o : w.obstacles) {
    out += "\nobstacle " + std::to_string(o.x) + " " + std::to_string(o.y);
  }
  out += "\ngoal " + std::to_string(w.goal.x) + " " + std::to_string(w.goal.y);
  return out;
}

}  // namespace csp2turtle
