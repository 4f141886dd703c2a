#pragma once

#include <algorithm>
#include <array>
#include <cmath>
#include <cstdint>
#include <limits>
#include <optional>
#include <tuple>
#include <string>
#include <vector>

#include "arena/game.hpp"
#include "arena/rng.hpp"
#include "arena/sentiment.hpp"

// Scripted players: uniform random, one-ply greedy, and depth-limited
// negamax (exact for Tic-Tac-Toe).
namespace arena::agents {

enum class BotKind { Random, Greedy, Minimax };

struct BotChoice {
  std::string token;
  sentiment::Emotion emotion = sentiment::Emotion::Peaceful;
  std::string analysis;
};

namespace detail {

inline double squash(double x) { return std::tanh(x); }

inline double tictactoe_eval(const tictactoe::Board& b, PlayerSide me) {
  static constexpr int kLines[8][3] = {{0, 1, 2}, {3, 4, 5}, {6, 7, 8}, {0, 3, 6},
                                       {1, 4, 7}, {2, 5, 8}, {0, 4, 8}, {2, 4, 6}};
  const char mine = tictactoe::mark(me), theirs = tictactoe::mark(opponent(me));
  double score = 0;
  for (const auto& line : kLines) {
    int m = 0, t = 0;
    for (int i : line) {
      m += b.cells[static_cast<std::size_t>(i)] == mine;
      t += b.cells[static_cast<std::size_t>(i)] == theirs;
    }
    if (t == 0 && m > 0) score += m * m;
    if (m == 0 && t > 0) score -= t * t;
  }
  return squash(score / 8.0);
}

// Open-ended runs weigh more; a blocked run of four is still a threat.
inline double gomoku_pattern_score(const gomoku::Board& b, char c) {
  using gomoku::kSide;
  auto at = [&](int f, int r) -> char {
    if (f < 0 || f >= kSide || r < 0 || r >= kSide) return '#';
    return b.cells[static_cast<std::size_t>(r * kSide + f)];
  };
  double total = 0;
  for (auto [df, dr] : grid::kLineDirections)
    for (int r = 0; r < kSide; ++r)
      for (int f = 0; f < kSide; ++f) {
        if (at(f, r) != c || at(f - df, r - dr) == c) continue;
        int len = 0;
        while (at(f + len * df, r + len * dr) == c) ++len;
        const int open = (at(f - df, r - dr) == '.') + (at(f + len * df, r + len * dr) == '.');
        if (len == 5) total += 100000;
        else if (len > 5 || open == 0) continue;
        else if (len == 4) total += open == 2 ? 10000 : 1000;
        else if (len == 3) total += open == 2 ? 1000 : 100;
        else if (len == 2) total += open == 2 ? 100 : 10;
        else total += open;
      }
  return total;
}

inline double gomoku_eval(const gomoku::Board& b, PlayerSide me) {
  const double mine = gomoku_pattern_score(b, gomoku::stone(me));
  const double theirs = gomoku_pattern_score(b, gomoku::stone(opponent(me)));
  return squash((mine - theirs) / 2000.0);
}

inline double reversi_eval(const reversi::Board& b, PlayerSide me) {
  const char mine = reversi::disc(me), theirs = reversi::disc(opponent(me));
  double corners = 0;
  for (int i : {0, 7, 56, 63}) {
    corners += b.cells[static_cast<std::size_t>(i)] == mine;
    corners -= b.cells[static_cast<std::size_t>(i)] == theirs;
  }
  const double discs = reversi::count(b, me) - reversi::count(b, opponent(me));
  return squash((discs + 6 * corners) / 16.0);
}

// Material plus a small pull toward the centre for minor pieces and pawns.
inline double chess_eval(const chess::Position& p, PlayerSide me) {
  double score = chess::material(p.squares);
  for (int sq = 0; sq < 64; ++sq) {
    const char c = p.squares[static_cast<std::size_t>(sq)];
    const char k = chess::kind_of(c);
    if (k != 'p' && k != 'n' && k != 'b') continue;
    const double df = std::abs(chess::file_of(sq) - 3.5), dr = std::abs(chess::rank_of(sq) - 3.5);
    const double central = (3.5 - std::max(df, dr)) * 0.04;
    score += chess::is_white(c) ? central : -central;
  }
  return squash((me == PlayerSide::First ? score : -score) / 10.0);
}

inline double freestyle_eval(const freestyle::Board& b, PlayerSide me) {
  const auto& rules = freestyle::rules_of(b);
  const auto i = static_cast<std::size_t>(side_index(me));
  switch (rules.win->kind) {
    case freestyle::WinKind::Majority: {
      const auto n = freestyle::piece_counts(b);
      return squash((n[i] - n[1 - i]) / 6.0);
    }
    case freestyle::WinKind::RowPoints: {
      const auto pts = freestyle::row_points(b);
      return squash((pts[i] - pts[1 - i]) / 2.5);
    }
    case freestyle::WinKind::Line: {
      std::array<char, freestyle::kCells> owners{};
      for (std::size_t k = 0; k < owners.size(); ++k)
        owners[k] = b.cells[k].owner < 0 ? '.' : static_cast<char>('0' + b.cells[k].owner);
      int best[2] = {0, 0};
      grid::for_each_run(owners, freestyle::kBoardSide, [&](char c, int len) {
        int& slot = best[c - '0'];
        slot = std::max(slot, len);
      });
      return squash((best[i] - best[1 - i]) / static_cast<double>(rules.win->line_length));
    }
  }
  return 0;
}

}  // namespace detail

// Static evaluation in [-1, 1] from `me`'s point of view; decided positions
// score exactly -1, 0 or 1.
inline double heuristic(const GameState& s, PlayerSide me) {
  const Outcome o = status(s);
  if (o == Outcome::Draw) return 0;
  if (o != Outcome::Ongoing) return o == win_for(me) ? 1 : -1;
  return std::visit(Overloaded{
                        [&](const tictactoe::Board& b) { return detail::tictactoe_eval(b, me); },
                        [&](const gomoku::Board& b) { return detail::gomoku_eval(b, me); },
                        [&](const reversi::Board& b) { return detail::reversi_eval(b, me); },
                        [&](const chess::Position& p) { return detail::chess_eval(p, me); },
                        [&](const freestyle::Board& b) { return detail::freestyle_eval(b, me); },
                    },
                    s.board());
}

// The greedy bot's one-ply signal, in [-1, 1] from `me`'s view: mark count
// for Tic-Tac-Toe (no material to speak of, so it never separates moves),
// threat patterns for Gomoku, discs for Reversi, material for chess and the
// win-condition score for Free-Style.
inline double material_score(const GameState& s, PlayerSide me) {
  const Outcome o = status(s);
  if (o == Outcome::Draw) return 0;
  if (o != Outcome::Ongoing) return o == win_for(me) ? 1 : -1;
  return std::visit(Overloaded{
                        [&](const tictactoe::Board& b) {
                          int n = 0;
                          for (char c : b.cells) n += (c == tictactoe::mark(me)) - (c == tictactoe::mark(opponent(me)));
                          return detail::squash(n / 9.0);
                        },
                        [&](const gomoku::Board& b) { return detail::gomoku_eval(b, me); },
                        [&](const reversi::Board& b) {
                          return detail::squash((reversi::count(b, me) - reversi::count(b, opponent(me))) / 16.0);
                        },
                        [&](const chess::Position& p) {
                          const int m = chess::material(p.squares);
                          return detail::squash((me == PlayerSide::First ? m : -m) / 10.0);
                        },
                        [&](const freestyle::Board& b) { return detail::freestyle_eval(b, me); },
                    },
                    s.board());
}

inline sentiment::Emotion mood(double h) {
  using sentiment::Emotion;
  if (h < -0.6) return Emotion::Desperate;
  if (h < -0.15) return Emotion::Sad;
  if (h <= 0.15) return Emotion::Peaceful;
  if (h <= 0.6) return Emotion::Happy;
  return Emotion::Excited;
}

// The position as `viewer` sees it: hidden Free-Style values of the other
// side are replaced by a flat guess. Other games are returned unchanged.
inline GameState observed(const GameState& s, PlayerSide viewer) {
  if (s.kind() != GameKind::FreeStyle || is_terminal(s)) return s;
  freestyle::Board b = s.board_as<freestyle::Board>();
  const auto& rules = freestyle::rules_of(b);
  if (*rules.visibility != freestyle::Visibility::Hidden) return s;
  const int other = 1 - side_index(viewer);
  const auto& p = *rules.pieces;
  const int guess = std::clamp(p.budget ? *p.budget / freestyle::kBoardSide : (p.min_value + p.max_value) / 2,
                               p.min_value, p.max_value);
  int sum = 0;
  for (auto& c : b.cells)
    if (c.owner == other) {
      c.value = static_cast<std::int8_t>(guess);
      sum += guess;
    }
  // A global budget's remainder is public (it bounds the legal list), so the
  // true totals are kept.
  if (p.budget && p.scope == freestyle::BudgetScope::PerPlayer)
    b.spent[static_cast<std::size_t>(other)] = std::min(sum, *p.budget);
  return arena::detail::Access::make_state(std::move(b), s.to_move());
}

// True if the side to move in `s` has a move that wins on the spot.
inline bool can_win_now(const GameState& s) {
  if (is_terminal(s)) return false;
  const PlayerSide me = s.to_move();
  if (s.kind() == GameKind::Gomoku) {
    const auto& b = s.board_as<gomoku::Board>();
    for (int r = 0; r < gomoku::kSide; ++r)
      for (int f = 0; f < gomoku::kSide; ++f)
        if (b.cells[static_cast<std::size_t>(r * gomoku::kSide + f)] == '.' && gomoku::wins_at(b, f, r, me))
          return true;
    return false;
  }
  if (s.kind() == GameKind::Chess) {
    const auto& p = s.board_as<chess::Position>();
    for (const auto& m : chess::legal_specs(p)) {
      const chess::Position n = chess::make(p, m);
      if (chess::in_check(n) && chess::legal_specs(n).empty()) return true;
    }
    return false;
  }
  for (const auto& t : legal_tokens(s))
    if (status(arena::apply(s, t)) == win_for(me)) return true;
  return false;
}

namespace detail {

// Exact Tic-Tac-Toe values, memoized by board. A win is worth 1 + empty
// cells left, so quicker wins and slower losses are preferred.
class TicTacToeSolver {
 public:
  // Expected score for `me` (1 win, 0.5 draw, 0 loss) when `me` keeps to
  // value-optimal moves and the other side picks uniformly among replies
  // that do not allow an immediate win.
  double swindle(const tictactoe::Board& b, PlayerSide to_move, PlayerSide me) {
    const std::size_t key = encode(b);
    auto& memo = swindle_memo_[static_cast<std::size_t>(side_index(me))];
    if (memo[key] >= 0) return memo[key];
    double e;
    const Outcome o = tictactoe::status(b, to_move);
    if (o != Outcome::Ongoing) {
      e = o == Outcome::Draw ? 0.5 : (o == win_for(me) ? 1.0 : 0.0);
    } else if (to_move == me) {
      int best = std::numeric_limits<int>::min();
      std::vector<tictactoe::Board> keep;
      for (std::size_t i = 0; i < 9; ++i) {
        if (b.cells[i] != '.') continue;
        tictactoe::Board n = b;
        n.cells[i] = tictactoe::mark(me);
        const int v = -value(n, opponent(me));
        if (v > best) keep.clear(), best = v;
        if (v == best) keep.push_back(n);
      }
      e = 0;
      for (const auto& n : keep) e = std::max(e, swindle(n, opponent(me), me));
    } else {
      std::vector<tictactoe::Board> all, safe;
      for (std::size_t i = 0; i < 9; ++i) {
        if (b.cells[i] != '.') continue;
        tictactoe::Board n = b;
        n.cells[i] = tictactoe::mark(to_move);
        all.push_back(n);
        if (!wins_next(n, me)) safe.push_back(n);
      }
      const auto& pool = safe.empty() ? all : safe;
      e = 0;
      for (const auto& n : pool) e += swindle(n, me, me);
      e /= static_cast<double>(pool.size());
    }
    memo[key] = e;
    return e;
  }

  int value(const tictactoe::Board& b, PlayerSide to_move) {
    const std::size_t key = encode(b);
    if (memo_[key] != kUnset) return memo_[key];
    int v;
    const Outcome o = tictactoe::status(b, to_move);
    if (o != Outcome::Ongoing) {
      int empties = 0;
      for (char c : b.cells) empties += c == '.';
      v = o == Outcome::Draw ? 0 : (o == win_for(to_move) ? 1 + empties : -(1 + empties));
    } else {
      v = std::numeric_limits<int>::min();
      for (std::size_t i = 0; i < 9; ++i) {
        if (b.cells[i] != '.') continue;
        tictactoe::Board n = b;
        n.cells[i] = tictactoe::mark(to_move);
        v = std::max(v, -value(n, opponent(to_move)));
      }
    }
    memo_[key] = static_cast<std::int8_t>(v);
    return v;
  }

 private:
  static std::size_t encode(const tictactoe::Board& b) {
    std::size_t key = 0;
    for (char c : b.cells) key = key * 3 + (c == 'x' ? 1 : c == 'o' ? 2 : 0);
    return key;
  }

  static bool wins_next(const tictactoe::Board& b, PlayerSide side) {
    if (tictactoe::status(b, side) != Outcome::Ongoing) return false;
    for (std::size_t i = 0; i < 9; ++i) {
      if (b.cells[i] != '.') continue;
      tictactoe::Board n = b;
      n.cells[i] = tictactoe::mark(side);
      if (tictactoe::status(n, opponent(side)) == win_for(side)) return true;
    }
    return false;
  }

  static constexpr std::int8_t kUnset = 127;
  std::array<std::array<double, 19683>, 2> swindle_memo_ = [] {
    std::array<std::array<double, 19683>, 2> a{};
    for (auto& m : a) m.fill(-1.0);
    return a;
  }();
  std::array<std::int8_t, 19683> memo_ = [] {
    std::array<std::int8_t, 19683> a{};
    a.fill(kUnset);
    return a;
  }();
};

inline TicTacToeSolver& ttt_solver() {
  thread_local TicTacToeSolver solver;
  return solver;
}

inline constexpr double kWinScore = 1000.0;

// Chess search runs on raw positions; repetition is ignored inside the tree.
inline double chess_negamax(const chess::Position& p, int depth, double alpha, double beta, int ply) {
  const auto moves = chess::legal_specs(p);
  if (moves.empty()) return chess::in_check(p) ? -(kWinScore - ply) : 0.0;
  if (p.config.fifty_move_rule && p.halfmove_clock >= 100) return 0.0;
  if (p.config.insufficient_material && chess::insufficient_material(p.squares)) return 0.0;
  if (depth == 0) return chess_eval(p, p.side);
  double best = -std::numeric_limits<double>::infinity();
  // Captures first for better cutoffs.
  std::vector<chess::MoveSpec> ordered = moves;
  std::stable_partition(ordered.begin(), ordered.end(),
                        [](const chess::MoveSpec& m) { return (m.flags & chess::kCapture) || m.promo; });
  for (const auto& m : ordered) {
    best = std::max(best, -chess_negamax(chess::make(p, m), depth - 1, -beta, -alpha, ply + 1));
    alpha = std::max(alpha, best);
    if (alpha >= beta) break;
  }
  return best;
}

// Gomoku candidates: empty cells within two of a stone (centre if empty).
inline std::vector<std::string> gomoku_candidates(const gomoku::Board& b) {
  using gomoku::kSide;
  std::vector<std::string> out;
  bool any = false;
  for (int r = 0; r < kSide; ++r)
    for (int f = 0; f < kSide; ++f) {
      if (b.cells[static_cast<std::size_t>(r * kSide + f)] != '.') {
        any = true;
        continue;
      }
      bool near = false;
      for (int dr = -2; dr <= 2 && !near; ++dr)
        for (int df = -2; df <= 2 && !near; ++df) {
          const int nf = f + df, nr = r + dr;
          near = nf >= 0 && nf < kSide && nr >= 0 && nr < kSide && b.cells[static_cast<std::size_t>(nr * kSide + nf)] != '.';
        }
      if (near) out.push_back(square_token({f, r}));
    }
  if (!any) out.push_back(square_token({kSide / 2, kSide / 2}));
  return grid::sorted(std::move(out));
}

inline std::vector<std::string> search_moves(const GameState& s) {
  if (s.kind() == GameKind::Gomoku) return gomoku_candidates(s.board_as<gomoku::Board>());
  return legal_tokens(s);
}

inline double negamax(const GameState& s, int depth, double alpha, double beta, int ply) {
  const Outcome o = status(s);
  if (o == Outcome::Draw) return 0;
  if (o != Outcome::Ongoing) return o == win_for(s.to_move()) ? kWinScore - ply : -(kWinScore - ply);
  if (depth == 0) return heuristic(s, s.to_move());
  double best = -std::numeric_limits<double>::infinity();
  for (const auto& t : search_moves(s)) {
    best = std::max(best, -negamax(arena::apply(s, t), depth - 1, -beta, -alpha, ply + 1));
    alpha = std::max(alpha, best);
    if (alpha >= beta) break;
  }
  return best;
}

inline int default_depth(GameKind k) {
  switch (k) {
    case GameKind::TicTacToe: return 9;
    case GameKind::Gomoku: return 2;
    case GameKind::Reversi: return 3;
    case GameKind::Chess: return 3;
    case GameKind::FreeStyle: return 2;
  }
  return 2;
}

inline std::string signed_score(double v) {
  char buf[32];
  std::snprintf(buf, sizeof buf, "%+.2f", v);
  return buf;
}

}  // namespace detail

inline BotChoice random_policy(const GameState& s, Rng& rng) {
  const auto moves = legal_tokens(s);
  BotChoice c;
  c.token = rng.pick(moves);
  c.emotion = mood(heuristic(observed(arena::apply(s, c.token), s.to_move()), s.to_move()));
  c.analysis = "picked " + c.token + " at random from " + std::to_string(moves.size()) + " legal moves";
  return c;
}

// Win now > avoid handing the opponent a win > best material gain >
// lexicographic order.
inline BotChoice greedy_policy(const GameState& s) {
  const PlayerSide me = s.to_move();
  const GameState view = observed(s, me);
  const double before = material_score(view, me);
  // Gomoku threats only change where the opponent could have completed five.
  std::vector<char> gomoku_threat;
  if (s.kind() == GameKind::Gomoku) {
    const auto& b = s.board_as<gomoku::Board>();
    gomoku_threat.assign(b.cells.size(), 0);
    for (int r = 0; r < gomoku::kSide; ++r)
      for (int f = 0; f < gomoku::kSide; ++f) {
        const auto i = static_cast<std::size_t>(r * gomoku::kSide + f);
        gomoku_threat[i] = b.cells[i] == '.' && gomoku::wins_at(b, f, r, opponent(me));
      }
  }
  const bool threatened = std::find(gomoku_threat.begin(), gomoku_threat.end(), 1) != gomoku_threat.end();

  struct Scored {
    bool win = false;
    bool safe = false;
    double delta = 0;
  };
  std::string best_token;
  Scored best;
  bool have = false;
  for (const auto& t : legal_tokens(view)) {
    const GameState next = arena::apply(view, t);
    Scored sc;
    const Outcome o = status(next);
    sc.win = o == win_for(me);
    if (o != Outcome::Ongoing) {
      sc.safe = true;
    } else if (s.kind() == GameKind::Gomoku) {
      if (!threatened) {
        sc.safe = true;
      } else {
        const auto sq = grid::parse_cell(t, gomoku::kSide);
        std::size_t remaining = 0;
        for (std::size_t i = 0; i < gomoku_threat.size(); ++i)
          remaining += gomoku_threat[i] && i != static_cast<std::size_t>(sq->rank * gomoku::kSide + sq->file);
        sc.safe = remaining == 0;
      }
    } else {
      sc.safe = !can_win_now(next);
    }
    sc.delta = material_score(next, me) - before;
    const bool better = !have || sc.win > best.win || (sc.win == best.win && sc.safe > best.safe) ||
                        (sc.win == best.win && sc.safe == best.safe && sc.delta > best.delta);
    if (better) {
      best = sc;
      best_token = t;
      have = true;
    }
  }
  BotChoice c;
  c.token = best_token;
  c.emotion = best.win ? sentiment::Emotion::Excited : mood(heuristic(arena::apply(view, best_token), me));
  if (best.win) c.analysis = best_token + " wins immediately";
  else if (!best.safe) c.analysis = "every move leaves a winning reply; playing " + best_token;
  else c.analysis = best_token + " improves the position by " + detail::signed_score(best.delta);
  return c;
}

// Depth-limited negamax with alpha-beta; exact for Tic-Tac-Toe, where ties
// between equally valued moves go to the one with the best expected result
// against an opponent that only avoids immediate losses. Remaining ties are
// broken by the seeded generator.
inline BotChoice minimax_policy(const GameState& s, Rng& rng, int depth = 0) {
  const PlayerSide me = s.to_move();
  if (depth <= 0) depth = detail::default_depth(s.kind());
  std::vector<std::string> best;
  double best_value = -std::numeric_limits<double>::infinity();
  BotChoice c;

  if (s.kind() == GameKind::TicTacToe) {
    auto& solver = detail::ttt_solver();
    const auto& b = s.board_as<tictactoe::Board>();
    // Losing replies the opponent could fall into; "subtle" ones leave no
    // immediate win, so a one-ply defender does not see them coming.
    auto traps_after = [&](const tictactoe::Board& n, PlayerSide next_side) {
      std::pair<int, int> t{0, 0};
      if (tictactoe::status(n, next_side) != Outcome::Ongoing) return t;
      for (const auto& r : tictactoe::legal_tokens(n, next_side)) {
        const auto [n2, side2] = tictactoe::play(n, next_side, r);
        if (solver.value(n2, side2) <= 0) continue;
        ++t.second;
        bool immediate = false;
        if (tictactoe::status(n2, side2) == Outcome::Ongoing)
          for (const auto& w : tictactoe::legal_tokens(n2, side2))
            immediate = immediate || tictactoe::status(tictactoe::play(n2, side2, w).first, next_side) == win_for(me);
        t.first += !immediate;
      }
      return t;
    };
    using Key = std::tuple<int, int, int, double>;
    std::optional<Key> best_key;
    for (const auto& t : legal_tokens(s)) {
      const auto [n, next_side] = tictactoe::play(b, me, t);
      const auto traps = traps_after(n, next_side);
      // Swindle value rounded so float noise cannot split real ties.
      const double e = std::round(solver.swindle(n, next_side, me) * 1e9) / 1e9;
      const Key key{-solver.value(n, next_side), traps.first, traps.second, e};
      if (!best_key || key > *best_key) {
        best_key = key;
        best.assign(1, t);
      } else if (key == *best_key) {
        best.push_back(t);
      }
    }
    const int best_v = std::get<0>(*best_key);
    c.token = rng.pick(best);
    c.emotion = best_v > 0 ? sentiment::Emotion::Excited
                : best_v < 0 ? sentiment::Emotion::Desperate
                             : mood(heuristic(arena::apply(s, c.token), me));
    c.analysis = best_v > 0 ? "forced win available" : best_v < 0 ? "lost against best play" : "best play draws";
    return c;
  }

  if (s.kind() == GameKind::Chess) {
    const auto& p = s.board_as<chess::Position>();
    for (const auto& m : chess::legal_specs(p)) {
      const double v = -detail::chess_negamax(chess::make(p, m), depth - 1, -std::numeric_limits<double>::infinity(),
                                              std::numeric_limits<double>::infinity(), 1);
      const std::string t = chess::uci(m);
      if (v > best_value + 1e-12) {
        best_value = v;
        best.assign(1, t);
      } else if (v > best_value - 1e-12) {
        best.push_back(t);
      }
    }
  } else {
    const GameState view = observed(s, me);
    auto moves = detail::search_moves(view);
    if (view.kind() == GameKind::Gomoku) {
      // Make sure wins and blocks outside the window are still considered.
      for (const auto& t : legal_tokens(view)) {
        const auto sq = grid::parse_cell(t, gomoku::kSide);
        const auto& b = view.board_as<gomoku::Board>();
        if (gomoku::wins_at(b, sq->file, sq->rank, me) || gomoku::wins_at(b, sq->file, sq->rank, opponent(me)))
          if (std::find(moves.begin(), moves.end(), t) == moves.end()) moves.push_back(t);
      }
    }
    for (const auto& t : moves) {
      const double v = -detail::negamax(arena::apply(view, t), depth - 1, -std::numeric_limits<double>::infinity(),
                                        std::numeric_limits<double>::infinity(), 1);
      if (v > best_value + 1e-12) {
        best_value = v;
        best.assign(1, t);
      } else if (v > best_value - 1e-12) {
        best.push_back(t);
      }
    }
  }
  std::sort(best.begin(), best.end());
  c.token = rng.pick(best);
  const double win_margin = detail::kWinScore - 100;
  c.emotion = best_value >= win_margin    ? sentiment::Emotion::Excited
              : best_value <= -win_margin ? sentiment::Emotion::Desperate
                                          : mood(best_value);
  c.analysis = "searched " + std::to_string(depth) + " plies, score " + detail::signed_score(std::clamp(best_value, -1.0, 1.0));
  return c;
}

inline BotChoice bot_policy(BotKind kind, const GameState& s, Rng& rng, int depth = 0) {
  if (is_terminal(s)) throw TerminalState();
  switch (kind) {
    case BotKind::Random: return random_policy(s, rng);
    case BotKind::Greedy: return greedy_policy(s);
    case BotKind::Minimax: return minimax_policy(s, rng, depth);
  }
  throw Error("unknown bot kind");
}

}  // namespace arena::agents
