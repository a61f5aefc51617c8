#include <csp2turtle/plan_io.hpp>

#include <gtest/gtest.h>

#include <random>

#include "support/worlds.hpp"

namespace {

using namespace csp2turtle;
using namespace csp2turtle::turtle;
using csp2turtle::testing::fig4_world1;

using C = Command;

ParseError world_error(std::string_view text) {
  try {
    parse_world(text);
  } catch (const ParseError& e) {
    return e;
  }
  ADD_FAILURE() << "no error for: " << text;
  return ParseError(ParseErrorCode::Malformed, 0, 0, "", "");
}

TEST(ParsePlan, Tokens) {
  EXPECT_EQ(parse_plan("fd fd lt pu fd pd"), (Plan{C::Forward, C::Forward, C::Left, C::PenUp, C::Forward, C::PenDown}));
  EXPECT_EQ(parse_plan(""), Plan{});
  EXPECT_EQ(parse_plan("  \n\t "), Plan{});
  EXPECT_EQ(parse_plan("bk,rt, goal\n"), (Plan{C::Backward, C::Right, C::Goal}));
}

TEST(ParsePlan, UnknownTokenIsPositioned) {
  try {
    parse_plan("fd fwd");
    FAIL();
  } catch (const ParseError& e) {
    EXPECT_EQ(e.code(), ParseErrorCode::UnknownToken);
    EXPECT_EQ(e.token(), 2u);
    EXPECT_EQ(e.line(), 1u);
    EXPECT_EQ(e.lexeme(), "fwd");
  }
}

TEST(ParsePlan, CaseSensitive) {
  try {
    parse_plan("fd\nlt FD");
    FAIL();
  } catch (const ParseError& e) {
    EXPECT_EQ(e.token(), 3u);
    EXPECT_EQ(e.line(), 2u);
    EXPECT_EQ(e.lexeme(), "FD");
  }
}

TEST(ParsePlan, FormatRoundTrip) {
  std::mt19937 rng(3);
  std::uniform_int_distribution<std::size_t> pick(0, kCommands.size() - 1);
  for (int i = 0; i < 100; ++i) {
    Plan p;
    for (int n = static_cast<int>(rng() % 12); n > 0; --n) p.push_back(kCommands[pick(rng)]);
    EXPECT_EQ(parse_plan(format_plan(p)), p);
  }
}

TEST(ParseWorld, Fig4World1) {
  EXPECT_EQ(parse_world("world 3 3\nobstacle 1 1\nobstacle 1 2\ngoal 2 2"), fig4_world1());
}

TEST(ParseWorld, CommentsAndBlankLines) {
  EXPECT_EQ(parse_world("# maze\n\nworld 3 3\r\n  obstacle 1 1\n# gap\nobstacle 1 2\ngoal 2 2\n\n"), fig4_world1());
}

TEST(ParseWorld, ObstacleAtStart) {
  ParseError e = world_error("world 3 3\nobstacle 0 0\ngoal 2 2");
  EXPECT_EQ(e.code(), ParseErrorCode::ObstacleAtStart);
  EXPECT_EQ(e.line(), 2u);
}

TEST(ParseWorld, OutOfBoundsCoordinate) {
  ParseError e = world_error("world 2 2\ngoal 5 5");
  EXPECT_EQ(e.code(), ParseErrorCode::OutOfBoundsCoordinate);
  EXPECT_EQ(e.line(), 2u);
  EXPECT_EQ(world_error("world 2 2\nobstacle 1 2\ngoal 0 1").code(), ParseErrorCode::OutOfBoundsCoordinate);
}

TEST(ParseWorld, ErrorCodes) {
  EXPECT_EQ(world_error("goal 1 1\nworld 2 2").code(), ParseErrorCode::MissingWorldLine);
  EXPECT_EQ(world_error("# nothing").code(), ParseErrorCode::MissingWorldLine);
  EXPECT_EQ(world_error("world 3 3\ngoal 1 1\ngoal 2 2").code(), ParseErrorCode::DuplicateGoal);
  EXPECT_EQ(world_error("world 3 3\nobstacle 2 2\ngoal 2 2").code(), ParseErrorCode::GoalOnObstacle);
  EXPECT_EQ(world_error("world 3 3\ngoal 2 2\nobstacle 2 2").code(), ParseErrorCode::GoalOnObstacle);
  EXPECT_EQ(world_error("world 3 3\nobstacle 1 1").code(), ParseErrorCode::MissingGoal);
  EXPECT_EQ(world_error("world 0 3\ngoal 0 0").code(), ParseErrorCode::InvalidDimensions);
  EXPECT_EQ(world_error("world 3 65\ngoal 0 0").code(), ParseErrorCode::InvalidDimensions);
  EXPECT_EQ(world_error("world 3 3\nwall 1 1\ngoal 0 0").code(), ParseErrorCode::Malformed);
  EXPECT_EQ(world_error("world 3 3\ngoal 1\n").code(), ParseErrorCode::Malformed);
  EXPECT_EQ(world_error("world 3 3\ngoal -1 0\n").code(), ParseErrorCode::Malformed);
  EXPECT_EQ(world_error("world 3 3\ngoal 1 x\n").code(), ParseErrorCode::Malformed);
  EXPECT_EQ(world_error("world 3 3\nworld 3 3\ngoal 0 0").code(), ParseErrorCode::Malformed);
}

TEST(ParseWorld, LargestWorld) {
  WorldSpec w = parse_world("world 64 64\ngoal 63 63");
  EXPECT_EQ(w.width, 64);
  EXPECT_EQ(w.goal, (Position{63, 63}));
}

TEST(SerializeWorld, CanonicalForm) {
  EXPECT_EQ(serialize_world(fig4_world1()), "world 3 3\nobstacle 1 1\nobstacle 1 2\ngoal 2 2");
  EXPECT_EQ(serialize_world(WorldSpec{1, 1, {}, {0, 0}}), "world 1 1\ngoal 0 0");
  EXPECT_EQ(serialize_world(WorldSpec{3, 2, {{2, 0}, {1, 1}, {0, 1}}, {2, 1}}),
            "world 3 2\nobstacle 2 0\nobstacle 0 1\nobstacle 1 1\ngoal 2 1");
}

TEST(SerializeWorld, RoundTripOnRandomWorlds) {
  std::mt19937 rng(17);
  std::uniform_int_distribution<int> side(1, kMaxWorldSide);
  std::bernoulli_distribution blocked(0.3);
  for (int i = 0; i < 200; ++i) {
    WorldSpec w{side(rng), side(rng), {}, {0, 0}};
    std::vector<Position> free{{0, 0}};
    for (int y = 0; y < w.height; ++y) {
      for (int x = 0; x < w.width; ++x) {
        if (x == 0 && y == 0) continue;
        if (blocked(rng)) {
          w.obstacles.insert({x, y});
        } else {
          free.push_back({x, y});
        }
      }
    }
    w.goal = free[rng() % free.size()];
    ASSERT_FALSE(w.problem());
    const std::string text = serialize_world(w);
    EXPECT_EQ(parse_world(text), w) << text;
    EXPECT_EQ(serialize_world(parse_world(text)), text);
  }
}

}  // namespace
