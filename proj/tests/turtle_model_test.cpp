#include <csp2turtle/turtle/model.hpp>
#include <csp2turtle/turtle/process.hpp>

#include <gtest/gtest.h>

#include <map>

#include "support/worlds.hpp"

namespace {

using namespace csp2turtle::turtle;
using csp2turtle::testing::all_small_worlds;
using csp2turtle::testing::empty_world;
using csp2turtle::testing::fig4_world1;
using csp2turtle::testing::fig4_world2;

using C = Command;

TEST(Direction, RotationsAreInverseBijections) {
  for (Direction d : kDirections) {
    EXPECT_EQ(turned_right(turned_left(d)), d);
    EXPECT_EQ(turned_left(turned_left(turned_left(turned_left(d)))), d);
    EXPECT_EQ((heading_degrees(turned_left(d)) - heading_degrees(d) + 360) % 360, 90);
  }
}

TEST(EnabledEvents, StartOfEmptyWorld) {
  EXPECT_EQ(enabled_events(empty_world(3, 3, {2, 2}), kStartState),
            (CommandSet{C::Forward, C::Left, C::Right, C::PenUp}));
}

TEST(EnabledEvents, BlockedByBoundaryAndObstacle) {
  TurtleState s{{1, 0}, Direction::North, Pen::Down};
  EXPECT_EQ(enabled_events(fig4_world1(), s), (CommandSet{C::Left, C::Right, C::PenUp}));
}

TEST(EnabledEvents, GoalCellWithPenUp) {
  TurtleState s{{2, 2}, Direction::East, Pen::Up};
  EXPECT_EQ(enabled_events(empty_world(3, 3, {2, 2}), s),
            (CommandSet{C::Backward, C::Left, C::Right, C::PenDown, C::Goal}));
}

TEST(ApplyEvent, Examples) {
  const WorldSpec w = empty_world(3, 3, {2, 2});
  EXPECT_EQ(apply_event(w, kStartState, C::Left), (TurtleState{{0, 0}, Direction::North, Pen::Down}));
  EXPECT_EQ(apply_event(w, kStartState, C::Forward), (TurtleState{{1, 0}, Direction::East, Pen::Down}));
  const TurtleState south = apply_event(w, kStartState, C::Right);
  EXPECT_EQ(south.dir, Direction::South);
  try {
    apply_event(w, south, C::Forward);
    FAIL() << "expected EventNotEnabled";
  } catch (const EventNotEnabled& e) {
    EXPECT_EQ(e.reason(), FailureReason::OutOfBounds);
    EXPECT_EQ(e.command(), C::Forward);
  }
}

TEST(ApplyEvent, ErrorReasons) {
  const WorldSpec w = fig4_world1();
  const TurtleState north_of_gap{{1, 0}, Direction::North, Pen::Down};
  EXPECT_EQ(disabled_reason(w, north_of_gap, C::Forward), FailureReason::Obstacle);
  EXPECT_EQ(disabled_reason(w, north_of_gap, C::Backward), FailureReason::OutOfBounds);
  EXPECT_EQ(disabled_reason(w, kStartState, C::PenDown), FailureReason::PenRedundant);
  EXPECT_EQ(disabled_reason(w, kStartState, C::Goal), FailureReason::GoalNotHere);
  EXPECT_THROW(apply_event(w, kStartState, C::Goal), EventNotEnabled);
}

TEST(Simulate, DrawsWhilePenDown) {
  SimResult r = simulate(empty_world(3, 3), {C::Forward, C::Left, C::Forward});
  EXPECT_TRUE(r.verdict.valid());
  ASSERT_EQ(r.states.size(), 4u);
  EXPECT_EQ(r.final_state(), (TurtleState{{1, 1}, Direction::North, Pen::Down}));
  EXPECT_EQ(r.segments, (std::vector<Segment>{{{0, 0}, {1, 0}}, {{1, 0}, {1, 1}}}));
}

TEST(Simulate, PenUpMovesDrawNothing) {
  SimResult r = simulate(empty_world(3, 3), {C::PenUp, C::Forward, C::PenDown, C::Forward});
  EXPECT_TRUE(r.verdict.valid());
  EXPECT_EQ(r.segments, (std::vector<Segment>{{{1, 0}, {2, 0}}}));
}

TEST(Simulate, RedundantPenDown) {
  SimResult r = simulate(empty_world(3, 3), {C::PenDown});
  EXPECT_FALSE(r.verdict.valid());
  EXPECT_EQ(r.verdict.failure_index, 0u);
  EXPECT_EQ(r.verdict.reason, FailureReason::PenRedundant);
  EXPECT_EQ(r.states.size(), 1u);
}

TEST(Simulate, TurningRightThenForwardLeavesTheWorld) {
  SimResult r = simulate(fig4_world1(), {C::Right, C::Forward});
  EXPECT_FALSE(r.verdict.valid());
  EXPECT_EQ(r.verdict.failure_index, 1u);
  EXPECT_EQ(r.verdict.reason, FailureReason::OutOfBounds);
  EXPECT_EQ(r.verdict.enabled_at_failure, (CommandSet{C::Backward, C::Left, C::Right, C::PenUp}));
}

TEST(ReachableCells, Fig4World1ReachesGoalThroughGap) {
  auto cells = reachable_cells(fig4_world1());
  EXPECT_EQ(cells.size(), 7u);
  EXPECT_TRUE(cells.contains({2, 2}));
  EXPECT_TRUE(cells.contains({2, 1}));
}

TEST(ReachableCells, Fig4World2IsCutOff) {
  EXPECT_EQ(reachable_cells(fig4_world2()),
            (std::set<Position>{{0, 0}, {0, 1}, {0, 2}, {1, 0}, {2, 0}}));
}

TEST(ReachableCells, SingleCell) {
  EXPECT_EQ(reachable_cells(empty_world(1, 1)), (std::set<Position>{{0, 0}}));
}

TEST(BuildTurtleProcess, InitialsMatchStart) {
  const TurtleProcess p = build_turtle_process(empty_world(3, 3, {2, 2}));
  std::set<csp2turtle::csp::Event> expect;
  for (C c : {C::Forward, C::Left, C::Right, C::PenUp}) expect.insert(to_event(c));
  EXPECT_EQ(csp2turtle::csp::initials(p.main, p.env), expect);
}

TEST(BuildTurtleProcess, RejectsInvalidWorlds) {
  EXPECT_THROW(build_turtle_process(WorldSpec{3, 3, {{0, 0}}, {2, 2}}), InvalidWorld);
  EXPECT_THROW(build_turtle_process(WorldSpec{3, 3, {{2, 2}}, {2, 2}}), InvalidWorld);
  EXPECT_THROW(build_turtle_process(WorldSpec{3, 3, {}, {3, 0}}), InvalidWorld);
  EXPECT_THROW(build_turtle_process(WorldSpec{0, 3, {}, {0, 0}}), InvalidWorld);
  EXPECT_THROW(build_turtle_process(WorldSpec{65, 1, {}, {0, 0}}), InvalidWorld);
}

TEST(BuildTurtleProcess, RejectsRightThenForward) {
  const TurtleProcess p = build_turtle_process(fig4_world1());
  auto v = csp2turtle::csp::has_trace(p.main, p.env, to_trace({C::Right, C::Forward}));
  EXPECT_FALSE(v.holds);
  EXPECT_EQ(v.failure_index, 1u);
}

// Walks every reachable configuration of the built process and compares it
// against the direct rules: initials, determinism, safety, successor states.
TEST(BuildTurtleProcess, AgreesWithDirectSemanticsOnSmallWorlds) {
  using namespace csp2turtle::csp;
  std::size_t checked = 0;
  for (const WorldSpec& w : all_small_worlds(2)) {
    const TurtleProcess p = build_turtle_process(w);
    StateSpace space(p.env, kDefaultStateCap);
    space.intern(p.main);
    for (std::size_t id = 0; id < space.size(); ++id) {
      auto s = decode_state(space.config(static_cast<int>(id)));
      ASSERT_TRUE(s) << space.config(static_cast<int>(id)).to_string();
      ASSERT_TRUE(w.is_free(s->pos));
      CommandSet kernel;
      std::map<Command, int> successors;
      for (const StateSpace::Edge& e : std::vector(space.edges(static_cast<int>(id)))) {
        ASSERT_TRUE(e.event.is_visible());
        Command c = *to_command(e.event);
        kernel.insert(c);
        ASSERT_EQ(++successors[c], 1) << "nondeterministic on " << token(c);
        auto next = decode_state(space.config(e.target));
        ASSERT_TRUE(next);
        EXPECT_EQ(*next, apply_event(w, *s, c));
      }
      EXPECT_EQ(kernel, enabled_events(w, *s));
      ++checked;
    }
  }
  EXPECT_GT(checked, 100u);
}

TEST(Properties, ReversibilityAndGoalSelfLoop) {
  for (const WorldSpec& w : all_small_worlds(3)) {
    for (int y = 0; y < w.height; ++y) {
      for (int x = 0; x < w.width; ++x) {
        if (!w.is_free({x, y})) continue;
        for (Direction d : kDirections) {
          for (Pen pen : {Pen::Down, Pen::Up}) {
            const TurtleState s{{x, y}, d, pen};
            if (!disabled_reason(w, s, C::Forward)) {
              const TurtleState moved = apply_event(w, s, C::Forward);
              ASSERT_FALSE(disabled_reason(w, moved, C::Backward));
              EXPECT_EQ(apply_event(w, moved, C::Backward), s);
            }
            if (!disabled_reason(w, s, C::Goal)) {
              EXPECT_EQ(apply_event(w, s, C::Goal), s);
            }
          }
        }
      }
    }
  }
}

TEST(Properties, SimulatedSegmentsAreUnitSteps) {
  const WorldSpec w = empty_world(3, 3, {2, 2});
  SimResult r = simulate(w, {C::Forward, C::Forward, C::Left, C::Forward, C::Backward, C::PenUp,
                              C::Forward, C::PenDown, C::Forward, C::Goal});
  ASSERT_TRUE(r.verdict.valid());
  EXPECT_EQ(r.final_state().pos, (Position{2, 2}));
  for (const Segment& s : r.segments) {
    EXPECT_EQ(std::abs(s.from.x - s.to.x) + std::abs(s.from.y - s.to.y), 1);
  }
  for (std::size_t i = 0; i + 1 < r.states.size(); ++i) EXPECT_TRUE(w.is_free(r.states[i].pos));
}

}  // namespace
