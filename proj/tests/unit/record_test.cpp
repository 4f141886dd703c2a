#include <gtest/gtest.h>

#include "arena/agents/factory.hpp"
#include "arena/record.hpp"
#include "arena/tournament/match.hpp"

using namespace arena;

namespace {

GameRecord play(GameKind g, std::uint64_t seed, agents::AgentKind a = agents::AgentKind::RandomBot,
                agents::AgentKind b = agents::AgentKind::GreedyBot) {
  agents::AgentSpec sa, sb;
  sa.id = "alice";
  sa.kind = a;
  sa.seed = 1;
  sb.id = "bob";
  sb.kind = b;
  sb.seed = 2;
  auto x = agents::make_agent(sa, {});
  auto y = agents::make_agent(sb, {});
  tournament::MatchSettings m;
  m.match_id = "g-" + std::to_string(seed);
  m.game = g;
  m.seed = seed;
  return tournament::run_match(*x, *y, m);
}

}  // namespace

TEST(Record, JsonRoundTripEveryGame) {
  for (GameKind g : kAllGames) {
    const auto r = play(g, 3);
    const std::string line = to_line(r);
    EXPECT_EQ(line.find('\n'), std::string::npos);
    const auto back = record_from_line(line);
    EXPECT_EQ(back, r) << to_string(g);
    EXPECT_EQ(to_line(back), line);
  }
}

TEST(Record, FreeStyleKeepsRulesAndNegotiation) {
  const auto r = play(GameKind::FreeStyle, 9);
  ASSERT_TRUE(r.rules.has_value());
  EXPECT_FALSE(r.negotiation.empty());
  EXPECT_NO_THROW(freestyle::parse_rules(*r.rules));
}

TEST(Record, ReplayReproducesOutcome) {
  for (GameKind g : kAllGames)
    for (std::uint64_t seed = 1; seed <= 5; ++seed) {
      const auto r = play(g, seed);
      int calls = 0;
      const auto end = verify_replay(r, [&](int, const GameState&) { ++calls; });
      EXPECT_EQ(status(end), r.outcome);
      EXPECT_EQ(calls, r.round_count + 1);
    }
}

TEST(Record, TamperedMoveNamesTheRound) {
  auto r = play(GameKind::Gomoku, 4);
  ASSERT_GT(r.round_count, 5);
  r.rounds[4].move = "z99";
  try {
    verify_replay(r);
    FAIL() << "tampered record replayed";
  } catch (const CorruptRecord& e) {
    EXPECT_EQ(e.round(), 5);
  }
}

TEST(Record, RepeatedSquareIsCaughtToo) {
  auto r = play(GameKind::TicTacToe, 2);
  r.rounds[2].move = r.rounds[0].move;
  try {
    verify_replay(r);
    FAIL();
  } catch (const CorruptRecord& e) {
    EXPECT_EQ(e.round(), 3);
  }
}

TEST(Record, WrongOutcomeOrCountRejected) {
  auto r = play(GameKind::Reversi, 6);
  auto bad = r;
  bad.outcome = r.outcome == Outcome::Draw ? Outcome::FirstWins : Outcome::Draw;
  EXPECT_THROW(verify_replay(bad), CorruptRecord);
  bad = r;
  bad.round_count += 1;
  EXPECT_THROW(verify_replay(bad), CorruptRecord);
  bad = r;
  bad.rounds.pop_back();
  EXPECT_THROW(verify_replay(bad), CorruptRecord);
}

TEST(Record, GarbageLinesAreParseErrors) {
  EXPECT_THROW(record_from_line("{not json"), ParseError);
  EXPECT_THROW(record_from_line("{\"match_id\": 3}"), ParseError);
  EXPECT_THROW(parse_termination("exploded"), ParseError);
}
