#include <gtest/gtest.h>

#include <set>

#include "arena/game.hpp"
#include "arena/rng.hpp"
#include "oracle/flank.hpp"
#include "oracle/tictactoe.hpp"

using namespace arena;

namespace {

GameState play_all(GameKind k, std::initializer_list<const char*> tokens) {
  GameState s = initial_state(k);
  for (const char* t : tokens) s = arena::apply(s, t);
  return s;
}

}  // namespace

TEST(Kernel, EmptyTicTacToeHasNineMoves) {
  const auto s = initial_state(GameKind::TicTacToe);
  EXPECT_EQ(legal_moves(s).size(), 9u);
  EXPECT_EQ(s.round_index(), 1);
  EXPECT_EQ(s.to_move(), PlayerSide::First);
}

TEST(Kernel, ReversiOpeningHasFourMoves) {
  const auto toks = legal_tokens(initial_state(GameKind::Reversi));
  EXPECT_EQ(toks, (std::vector<std::string>{"c5", "d6", "e3", "f4"}));
}

TEST(Kernel, ChessOpeningHasTwentyMoves) { EXPECT_EQ(legal_moves(initial_state(GameKind::Chess)).size(), 20u); }

TEST(Kernel, LegalMovesAreSortedLexicographically) {
  for (GameKind k : {GameKind::TicTacToe, GameKind::Gomoku, GameKind::Reversi, GameKind::Chess}) {
    const auto t = legal_tokens(initial_state(k));
    EXPECT_TRUE(std::is_sorted(t.begin(), t.end())) << to_string(k);
  }
}

TEST(Kernel, ApplyFlipsSideAndExtendsHistory) {
  const auto s = arena::apply(initial_state(GameKind::TicTacToe), "a1");
  EXPECT_EQ(s.to_move(), PlayerSide::Second);
  EXPECT_EQ(s.round_index(), 2);
  ASSERT_EQ(s.history().size(), 1u);
  EXPECT_EQ(s.history()[0].token(), "a1");
  EXPECT_EQ(s.history()[0].actor(), PlayerSide::First);
  EXPECT_EQ(s.board_as<tictactoe::Board>().cells[0], 'x');
  int marks = 0;
  for (char c : s.board_as<tictactoe::Board>().cells) marks += c != '.';
  EXPECT_EQ(marks, 1);
}

TEST(Kernel, ApplyRejectsOccupiedCellWithRuleName) {
  const auto s = arena::apply(initial_state(GameKind::TicTacToe), "b2");
  try {
    arena::apply(s, "b2");
    FAIL() << "expected IllegalMove";
  } catch (const IllegalMove& e) {
    EXPECT_EQ(e.token(), "b2");
    EXPECT_FALSE(e.rule().empty());
  }
}

TEST(Kernel, ApplyRejectsGarbageToken) {
  const auto s = initial_state(GameKind::Gomoku);
  EXPECT_THROW(arena::apply(s, "z99"), Error);
  EXPECT_THROW(arena::apply(s, ""), Error);
}

TEST(Kernel, TerminalStateRefusesMoves) {
  const auto s = play_all(GameKind::TicTacToe, {"a1", "a2", "b1", "b2", "c1"});
  EXPECT_EQ(status(s), Outcome::FirstWins);
  EXPECT_THROW(legal_moves(s), TerminalState);
  EXPECT_THROW(arena::apply(s, "c3"), TerminalState);
}

TEST(Kernel, StatusTopRowAndDiagonal) {
  // top row = rank 3
  EXPECT_EQ(status(play_all(GameKind::TicTacToe, {"a3", "a1", "b3", "b1", "c3"})), Outcome::FirstWins);
  EXPECT_EQ(status(play_all(GameKind::TicTacToe, {"a1", "a2", "b2", "a3", "c3"})), Outcome::FirstWins);
  EXPECT_EQ(status(play_all(GameKind::TicTacToe, {"a1", "b2"})), Outcome::Ongoing);
}

TEST(Kernel, FullBoardWithoutLineIsDraw) {
  const auto s = play_all(GameKind::TicTacToe, {"a3", "b2", "c3", "b3", "b1", "a1", "a2", "c2", "c1"});
  EXPECT_EQ(status(s), Outcome::Draw);
  EXPECT_EQ(s.round_index(), 10);
}

TEST(Kernel, EncodeEmptyTicTacToe) {
  EXPECT_EQ(encode_board(initial_state(GameKind::TicTacToe)), "...\n...\n...\nto_move: first\n");
}

TEST(Kernel, EncodeReversiOpening) {
  const std::string text = encode_board(initial_state(GameKind::Reversi));
  EXPECT_NE(text.find("...wb...\n...bw...\n"), std::string::npos);
}

TEST(Kernel, EncodeDecodeFixpoint) {
  Rng rng(7);
  for (GameKind k : {GameKind::TicTacToe, GameKind::Gomoku, GameKind::Reversi, GameKind::Chess}) {
    GameState s = initial_state(k);
    for (int i = 0; i < 12 && status(s) == Outcome::Ongoing; ++i) s = arena::apply(s, rng.pick(legal_tokens(s)));
    const std::string once = encode_board(s);
    const GameState back = decode_board(k, once);
    EXPECT_EQ(back.board(), s.board()) << to_string(k);
    EXPECT_EQ(back.to_move(), s.to_move()) << to_string(k);
    EXPECT_EQ(encode_board(back), once) << to_string(k);
  }
}

TEST(Kernel, MoveTokensRoundTrip) {
  Rng rng(11);
  for (GameKind k : {GameKind::TicTacToe, GameKind::Reversi, GameKind::Chess}) {
    GameState s = initial_state(k);
    for (int i = 0; i < 20 && status(s) == Outcome::Ongoing; ++i) {
      for (const Move& m : legal_moves(s)) {
        const Move again = parse_move(s, m.token());
        EXPECT_EQ(again.token(), m.token());
        EXPECT_EQ(again.actor(), m.actor());
      }
      s = arena::apply(s, rng.pick(legal_tokens(s)));
    }
  }
}

TEST(Kernel, ReplayReproducesFinalBoard) {
  Rng rng(3);
  for (GameKind k : {GameKind::TicTacToe, GameKind::Reversi}) {
    const Engine e(k, {});
    GameState s = e.initial_state();
    std::vector<std::string> moves;
    while (e.status(s) == Outcome::Ongoing) {
      moves.push_back(rng.pick(legal_tokens(s)));
      s = e.apply(s, parse_move(s, moves.back()));
    }
    const GameState again = replay(e, moves);
    EXPECT_EQ(again.board(), s.board());
    EXPECT_EQ(e.status(again), e.status(s));
  }
}

// ---- Tic-Tac-Toe ----

TEST(TicTacToe, PerfectPlayNeverLosesForFirst) {
  EXPECT_EQ(oracle::ttt::value(".........", 'x'), 0);
  // Against every reply, first keeps at least a draw.
  for (int i = 0; i < 9; ++i) {
    std::string c(9, '.');
    c[static_cast<std::size_t>(i)] = 'x';
    EXPECT_GE(-oracle::ttt::value(c, 'o'), 0);
  }
}

TEST(TicTacToe, GameLengthBoundsOverRandomPlay) {
  Rng rng(99);
  for (int g = 0; g < 2000; ++g) {
    GameState s = initial_state(GameKind::TicTacToe);
    while (status(s) == Outcome::Ongoing) s = arena::apply(s, rng.pick(legal_tokens(s)));
    const int plies = s.round_index() - 1;
    EXPECT_GE(plies, 5);
    EXPECT_LE(plies, 9);
  }
}

// ---- Gomoku ----

TEST(Gomoku, FastestWinIsNinePlies) {
  const auto s = play_all(GameKind::Gomoku, {"a1", "a2", "b1", "b2", "c1", "c2", "d1", "d2", "e1"});
  EXPECT_EQ(status(s), Outcome::FirstWins);
  EXPECT_EQ(s.round_index() - 1, 9);
}

TEST(Gomoku, FourInARowIsOngoing) {
  EXPECT_EQ(status(play_all(GameKind::Gomoku, {"a1", "a2", "b1", "b2", "c1", "c2", "d1"})), Outcome::Ongoing);
}

TEST(Gomoku, OverlineIsNotAWin) {
  // Black builds a1..c1 and e1..f1, then fills d1: six in a row.
  const auto s =
      play_all(GameKind::Gomoku, {"a1", "a3", "b1", "b3", "c1", "c3", "e1", "o15", "f1", "o14", "d1"});
  EXPECT_EQ(status(s), Outcome::Ongoing);
}

TEST(Gomoku, ExactFiveInEveryDirection) {
  EXPECT_EQ(status(play_all(GameKind::Gomoku, {"h1", "a1", "h2", "a2", "h3", "a3", "h4", "a4", "h5"})),
            Outcome::FirstWins);
  EXPECT_EQ(status(play_all(GameKind::Gomoku, {"a1", "o1", "b2", "o2", "c3", "o3", "d4", "o4", "e5"})),
            Outcome::FirstWins);
  EXPECT_EQ(status(play_all(GameKind::Gomoku, {"a5", "o1", "b4", "o2", "c3", "o3", "d2", "o4", "e1"})),
            Outcome::FirstWins);
}

TEST(Gomoku, SecondPlayerCanWin) {
  const auto s = play_all(GameKind::Gomoku, {"o15", "a1", "n15", "b1", "o13", "c1", "m15", "d1", "o11", "e1"});
  EXPECT_EQ(status(s), Outcome::SecondWins);
}

// ---- Reversi ----

TEST(Reversi, EveryOpeningFlipsExactlyOne) {
  const auto s0 = initial_state(GameKind::Reversi);
  for (const auto& t : legal_tokens(s0)) {
    const auto& before = s0.board_as<reversi::Board>().cells;
    const GameState next = arena::apply(s0, t);
    const auto& after = next.board_as<reversi::Board>().cells;
    int changed = 0;
    for (std::size_t i = 0; i < 64; ++i) changed += before[i] != '.' && before[i] != after[i];
    EXPECT_EQ(changed, 1) << t;
  }
}

TEST(Reversi, FlipsMatchCompassScanOracle) {
  Rng rng(5);
  for (int g = 0; g < 200; ++g) {
    GameState s = initial_state(GameKind::Reversi);
    while (status(s) == Outcome::Ongoing) {
      const auto tok = rng.pick(legal_tokens(s));
      const auto& before = s.board_as<reversi::Board>().cells;
      const GameState next = arena::apply(s, tok);
      const auto& after = next.board_as<reversi::Board>().cells;
      if (tok != "pass") {
        const int file = tok[0] - 'a', rank = tok[1] - '1';
        const char me = s.to_move() == PlayerSide::First ? 'b' : 'w';
        const auto expect = oracle::flank::flips(before, file, rank, me);
        std::set<int> got;
        int before_n = 0, after_n = 0;
        for (int i = 0; i < 64; ++i) {
          before_n += before[static_cast<std::size_t>(i)] != '.';
          after_n += after[static_cast<std::size_t>(i)] != '.';
          if (before[static_cast<std::size_t>(i)] != '.' && before[static_cast<std::size_t>(i)] != after[static_cast<std::size_t>(i)])
            got.insert(i);
        }
        ASSERT_EQ(got, expect) << tok;
        ASSERT_EQ(after_n, before_n + 1);
      } else {
        ASSERT_EQ(before, after);
      }
      s = next;
    }
  }
}

TEST(Reversi, ForcedPassIsTheOnlyMove) {
  // White to move has no flank; black does.
  std::string text =
      "bbbbbbbb\n"
      "bbbbbbbb\n"
      "bbbbbbbb\n"
      "bbbbbbbb\n"
      "bbbbbbbb\n"
      "bbbbbbbb\n"
      "bbbbbbw.\n"
      "bbbbbb..\n"
      "to_move: second\n";
  const auto s = decode_board(GameKind::Reversi, text);
  ASSERT_EQ(status(s), Outcome::Ongoing);
  EXPECT_EQ(legal_tokens(s), std::vector<std::string>{"pass"});
  const auto after = arena::apply(s, "pass");
  EXPECT_EQ(after.to_move(), PlayerSide::First);
  EXPECT_EQ(after.round_index(), s.round_index() + 1);
}

TEST(Reversi, PassIsIllegalWhenAPlacementExists) {
  EXPECT_THROW(arena::apply(initial_state(GameKind::Reversi), "pass"), IllegalMove);
}

TEST(Reversi, MajorityDecidesAndTieDraws) {
  std::string mostly_black;
  for (int r = 0; r < 8; ++r) mostly_black += r < 7 ? "bbbbbbbb\n" : "wwwwwwww\n";
  EXPECT_EQ(status(decode_board(GameKind::Reversi, mostly_black + "to_move: first\n")), Outcome::FirstWins);
  std::string even;
  for (int r = 0; r < 8; ++r) even += r < 4 ? "bbbbbbbb\n" : "wwwwwwww\n";
  EXPECT_EQ(status(decode_board(GameKind::Reversi, even + "to_move: first\n")), Outcome::Draw);
}

TEST(Reversi, PlacementsNeverExceedSixty) {
  Rng rng(17);
  for (int g = 0; g < 500; ++g) {
    GameState s = initial_state(GameKind::Reversi);
    int placements = 0;
    while (status(s) == Outcome::Ongoing) {
      const auto tok = rng.pick(legal_tokens(s));
      placements += tok != "pass";
      s = arena::apply(s, tok);
    }
    EXPECT_LE(placements, 60);
  }
}
