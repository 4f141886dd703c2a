#include <gtest/gtest.h>

#include "arena/agents/agent.hpp"
#include "arena/freestyle/negotiation.hpp"
#include "arena/game.hpp"
#include "arena/rng.hpp"
#include "oracle/rows.hpp"

using namespace arena;
using namespace arena::freestyle;

namespace {

agents::AgentSpec bot(const std::string& id, std::uint64_t seed, const char* rules,
                      agents::NegotiationStyle style = agents::NegotiationStyle::Agreeable) {
  agents::AgentSpec s;
  s.id = id;
  s.kind = agents::AgentKind::RandomBot;
  s.seed = seed;
  s.preferred_rules = rules;
  s.negotiation = style;
  return s;
}

// Replies from a fixed script, repeating the last line forever.
class Scripted : public agents::Agent {
 public:
  Scripted(std::string id, std::vector<std::string> replies)
      : Agent(agents::AgentSpec{std::move(id), agents::AgentKind::External, "exec:true", {}, {}, {}, 0}),
        replies_(std::move(replies)) {}
  std::string respond(const agents::AgentRequest& req) override {
    prompts.push_back(req.prompt);
    const std::size_t i = std::min(calls_++, replies_.size() - 1);
    return replies_[i];
  }
  std::vector<std::string> prompts;

 private:
  std::vector<std::string> replies_;
  std::size_t calls_ = 0;
};

Board filled(const RuleSet& rules, const std::array<std::array<int, 5>, 5>& owner,
             const std::array<std::array<int, 5>, 5>& value) {
  Board b = initial_board(rules);
  for (int r = 0; r < 5; ++r)
    for (int f = 0; f < 5; ++f) {
      b.cells[idx(f, r)].owner = static_cast<std::int8_t>(owner[static_cast<std::size_t>(r)][static_cast<std::size_t>(f)]);
      b.cells[idx(f, r)].value = static_cast<std::int8_t>(value[static_cast<std::size_t>(r)][static_cast<std::size_t>(f)]);
    }
  return b;
}

GameState random_playout(const RuleSet& rules, std::uint64_t seed) {
  Rng rng(seed);
  GameState s = initial_state(rules);
  while (status(s) == Outcome::Ongoing) s = arena::apply(s, rng.pick(legal_tokens(s)));
  return s;
}

}  // namespace

TEST(RuleSet, FlipNeighborsEncoding) {
  const RuleSet r = flip_neighbors_rules();
  EXPECT_NO_THROW(validate(r));
  EXPECT_EQ(r.placement->law, PlacementLaw::AnyEmpty);
  EXPECT_EQ(*r.effect, Effect::FlipNeighbors);
  EXPECT_EQ(r.termination->kind, TerminationKind::BoardFull);
  EXPECT_EQ(r.win->kind, WinKind::Majority);
}

TEST(RuleSet, HiddenNumbersEncoding) {
  const RuleSet r = hidden_numbers_rules();
  EXPECT_NO_THROW(validate(r));
  EXPECT_EQ(r.pieces->domain, PieceDomain::Integers);
  EXPECT_EQ(r.pieces->min_value, 0);
  EXPECT_EQ(r.pieces->max_value, 15);
  EXPECT_EQ(r.pieces->budget, 15);
  EXPECT_EQ(r.placement->law, PlacementLaw::Columns);
  EXPECT_EQ(r.placement->first_column, 0);
  EXPECT_EQ(r.placement->second_column, 4);
  EXPECT_EQ(*r.visibility, Visibility::Hidden);
  EXPECT_EQ(r.win->kind, WinKind::RowPoints);
}

TEST(RuleSet, TextRoundTrip) {
  for (const RuleSet& r : {flip_neighbors_rules(), hidden_numbers_rules(), hidden_numbers_rules(BudgetScope::Global)})
    EXPECT_EQ(parse_rules(to_text(r)), r);
  const RuleSet custom = parse_rules("PIECES: marks\nPLACEMENT: adjacent\nEFFECT: none\nVISIBILITY: open\n"
                                     "TERMINATION: rounds 12\nWIN: line 3\n");
  EXPECT_NO_THROW(validate(custom));
  EXPECT_EQ(parse_rules(to_text(custom)), custom);
}

TEST(RuleSet, LineOfSixIsInvalid) {
  RuleSet r = flip_neighbors_rules();
  r.win = WinCondition{WinKind::Line, 6};
  try {
    validate(r);
    FAIL();
  } catch (const InvalidRuleSet& e) {
    EXPECT_EQ(e.field(), "WIN");
  }
}

TEST(RuleSet, IncompleteOrInconsistentRejected) {
  RuleSet r = flip_neighbors_rules();
  r.effect.reset();
  EXPECT_THROW(validate(r), InvalidRuleSet);
  EXPECT_THROW(initial_state(r), InvalidRuleSet);

  RuleSet hidden_marks = flip_neighbors_rules();
  hidden_marks.visibility = Visibility::Hidden;
  try {
    validate(hidden_marks);
    FAIL();
  } catch (const InvalidRuleSet& e) {
    EXPECT_EQ(e.field(), "VISIBILITY");
    EXPECT_EQ(e.other_field(), "PIECES");
  }
  EXPECT_THROW(parse_rules("PIECES: marks\nPIECES: marks\n"), ParseError);
  EXPECT_THROW(parse_rules("COLOUR: blue\n"), ParseError);
}

TEST(FreeStyle, FlipNeighborsFlipsOrthogonalPieces) {
  GameState s = initial_state(flip_neighbors_rules());
  s = arena::apply(s, "c3");  // first
  s = arena::apply(s, "c4");  // second, flips c3
  const auto& b = s.board_as<Board>();
  EXPECT_EQ(b.cells[idx(2, 2)].owner, 1);
  EXPECT_EQ(b.cells[idx(2, 3)].owner, 1);
  s = arena::apply(s, "b4");  // first, flips c4 only (c3 is diagonal)
  const auto& b2 = s.board_as<Board>();
  EXPECT_EQ(b2.cells[idx(2, 3)].owner, 0);
  EXPECT_EQ(b2.cells[idx(2, 2)].owner, 1);
}

TEST(FreeStyle, BudgetEnforcedPerPlacement) {
  GameState s = initial_state(hidden_numbers_rules());
  s = arena::apply(s, "a1=10");
  s = arena::apply(s, "e1=3");
  EXPECT_THROW(arena::apply(s, "a2=6"), IllegalMove);
  EXPECT_NO_THROW(arena::apply(s, "a2=5"));
  EXPECT_THROW(arena::apply(s, "e2=1"), IllegalMove);  // wrong column for first
  EXPECT_THROW(arena::apply(s, "a2=16"), Error);
}

TEST(FreeStyle, GlobalBudgetIsShared) {
  GameState s = initial_state(hidden_numbers_rules(BudgetScope::Global));
  s = arena::apply(s, "a1=10");
  EXPECT_THROW(arena::apply(s, "e1=6"), IllegalMove);
  EXPECT_NO_THROW(arena::apply(s, "e1=5"));
}

TEST(FreeStyle, HiddenValuesMaskedUntilTheEnd) {
  GameState s = initial_state(hidden_numbers_rules());
  s = arena::apply(s, "a3=9");
  const std::string mine = encode_board(s, PlayerSide::First);
  const std::string theirs = encode_board(s, PlayerSide::Second);
  EXPECT_NE(mine.find("x9"), std::string::npos);
  EXPECT_EQ(theirs.find("x9"), std::string::npos);
  EXPECT_NE(theirs.find("x?"), std::string::npos);

  const GameState done = random_playout(hidden_numbers_rules(), 4);
  ASSERT_NE(status(done), Outcome::Ongoing);
  EXPECT_EQ(encode_board(done, PlayerSide::First), encode_board(done, PlayerSide::Second));
  EXPECT_EQ(encode_board(done, PlayerSide::Second).find('?'), std::string::npos);
}

TEST(FreeStyle, RowsWonThreeToTwo) {
  const RuleSet r = hidden_numbers_rules();
  std::array<std::array<int, 5>, 5> owner{}, value{};
  for (auto& row : owner) row = {0, -1, -1, -1, 1};
  const int first[5] = {3, 3, 3, 0, 0}, second[5] = {1, 1, 1, 6, 6};
  for (int i = 0; i < 5; ++i) {
    value[static_cast<std::size_t>(i)][0] = first[i];
    value[static_cast<std::size_t>(i)][4] = second[i];
  }
  const Board b = filled(r, owner, value);
  EXPECT_EQ(score(b, PlayerSide::First), Outcome::FirstWins);
  EXPECT_EQ(oracle::rows::winner(owner, value), 0);
}

TEST(FreeStyle, AllRowsTiedIsDraw) {
  const RuleSet r = hidden_numbers_rules();
  std::array<std::array<int, 5>, 5> owner{}, value{};
  for (int i = 0; i < 5; ++i) {
    owner[static_cast<std::size_t>(i)] = {0, -1, -1, -1, 1};
    value[static_cast<std::size_t>(i)] = {3, 0, 0, 0, 3};
  }
  const Board b = filled(r, owner, value);
  EXPECT_EQ(oracle::rows::winner(owner, value), 2);
  EXPECT_EQ(score(b, PlayerSide::First), Outcome::Draw);
}

TEST(FreeStyle, MajorityThirteenToTwelve) {
  std::array<std::array<int, 5>, 5> owner{}, value{};
  for (int i = 0; i < 25; ++i) owner[static_cast<std::size_t>(i / 5)][static_cast<std::size_t>(i % 5)] = i < 13 ? 0 : 1;
  EXPECT_EQ(score(filled(flip_neighbors_rules(), owner, value), PlayerSide::First), Outcome::FirstWins);
}

TEST(FreeStyle, ScoreBeforeTerminationThrows) {
  EXPECT_THROW(score(initial_board(flip_neighbors_rules()), PlayerSide::First), NotTerminal);
}

TEST(FreeStyle, PlayoutsTerminateWithinBoardBound) {
  const std::vector<RuleSet> menu = {
      flip_neighbors_rules(), hidden_numbers_rules(), hidden_numbers_rules(BudgetScope::Global),
      parse_rules("PIECES: marks\nPLACEMENT: adjacent\nEFFECT: none\nVISIBILITY: open\nTERMINATION: board-full\nWIN: line 3\n"),
      parse_rules("PIECES: integers 1-9 budget 20\nPLACEMENT: any-empty\nEFFECT: flip-neighbors\nVISIBILITY: hidden\n"
                  "TERMINATION: budget-exhausted\nWIN: row-points\n"),
      parse_rules("PIECES: marks\nPLACEMENT: any-empty\nEFFECT: none\nVISIBILITY: open\nTERMINATION: rounds 7\nWIN: majority\n")};
  for (std::size_t m = 0; m < menu.size(); ++m)
    for (std::uint64_t seed = 0; seed < 300; ++seed) {
      const GameState s = random_playout(menu[m], seed * 31 + m);
      const int rounds = s.round_index() - 1;
      ASSERT_LE(rounds, 50) << "menu " << m;
      ASSERT_NE(status(s), Outcome::Ongoing);
    }
}

TEST(FreeStyle, ExampleGamesLastBetweenFiveAndTwentyFive) {
  for (std::uint64_t seed = 0; seed < 500; ++seed)
    for (const RuleSet& r : {flip_neighbors_rules(), hidden_numbers_rules()}) {
      const int rounds = random_playout(r, seed).round_index() - 1;
      EXPECT_GE(rounds, 5);
      EXPECT_LE(rounds, 25);
    }
}

TEST(FreeStyle, ScoringMatchesRowOracleOnRandomBoards) {
  for (std::uint64_t seed = 0; seed < 200; ++seed) {
    const GameState s = random_playout(hidden_numbers_rules(), seed);
    std::array<std::array<int, 5>, 5> owner{}, value{};
    const auto& b = s.board_as<Board>();
    for (int r = 0; r < 5; ++r)
      for (int f = 0; f < 5; ++f) {
        owner[static_cast<std::size_t>(r)][static_cast<std::size_t>(f)] = b.cells[idx(f, r)].owner;
        value[static_cast<std::size_t>(r)][static_cast<std::size_t>(f)] = b.cells[idx(f, r)].value;
      }
    const int want = oracle::rows::winner(owner, value);
    const Outcome o = status(s);
    EXPECT_EQ(o, want == 0 ? Outcome::FirstWins : want == 1 ? Outcome::SecondWins : Outcome::Draw);
  }
}

// ---- negotiation ----

TEST(Negotiation, SamePreferenceAgreesOnTurnTwo) {
  agents::BotAgent a(bot("a", 1, "flip-neighbors")), b(bot("b", 2, "flip-neighbors"));
  const auto t = negotiate(a, b);
  ASSERT_TRUE(t.agreed);
  EXPECT_EQ(*t.agreed, flip_neighbors_rules());
  ASSERT_EQ(t.turns.size(), 2u);
  EXPECT_EQ(t.turns[0].verdict, Verdict::Counter);
  EXPECT_EQ(t.turns[1].verdict, Verdict::Accept);
  EXPECT_EQ(t.turns[1].proposer, PlayerSide::Second);
}

TEST(Negotiation, CounterThenAcceptIsThreeTurns) {
  agents::BotAgent a(bot("a", 1, "flip-neighbors")), b(bot("b", 2, "hidden-numbers", agents::NegotiationStyle::Insist));
  const auto t = negotiate(a, b);
  ASSERT_EQ(t.turns.size(), 3u);
  EXPECT_EQ(t.turns[0].proposal, flip_neighbors_rules());
  EXPECT_EQ(t.turns[1].proposal, hidden_numbers_rules());
  EXPECT_EQ(t.turns[1].verdict, Verdict::Counter);
  EXPECT_EQ(t.turns[2].verdict, Verdict::Accept);
  EXPECT_EQ(t.turns[2].proposer, PlayerSide::First);
  EXPECT_EQ(*t.agreed, hidden_numbers_rules());
}

TEST(Negotiation, AlwaysCounteringHitsTheCap) {
  agents::BotAgent a(bot("a", 1, "flip-neighbors", agents::NegotiationStyle::Stubborn)),
      b(bot("b", 2, "hidden-numbers", agents::NegotiationStyle::Stubborn));
  try {
    negotiate(a, b, 10);
    FAIL();
  } catch (const NegotiationFailed& e) {
    EXPECT_EQ(e.reason(), NegotiationFailure::CapExhausted);
    EXPECT_EQ(e.transcript().turns.size(), 10u);
    EXPECT_FALSE(e.transcript().agreed);
  }
}

TEST(Negotiation, GarbageGetsOneRepromptThenFails) {
  Scripted a("a", {"let's play something fun"});
  agents::BotAgent b(bot("b", 2, "hidden-numbers"));
  try {
    negotiate(a, b);
    FAIL();
  } catch (const NegotiationFailed& e) {
    EXPECT_EQ(e.reason(), NegotiationFailure::UnparsableProposal);
  }
  ASSERT_EQ(a.prompts.size(), 2u);
  EXPECT_NE(a.prompts[1].find("ERROR: "), std::string::npos);
}

TEST(Negotiation, RepromptCanRecover) {
  Scripted a("a", {"ACCEPT", to_text(flip_neighbors_rules())});
  agents::BotAgent b(bot("b", 2, "hidden-numbers"));
  const auto t = negotiate(a, b);
  EXPECT_EQ(*t.agreed, flip_neighbors_rules());
  EXPECT_EQ(t.turns.size(), 2u);
}
