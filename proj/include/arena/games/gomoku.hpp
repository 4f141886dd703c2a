#pragma once

#include <string>
#include <utility>
#include <vector>

#include "arena/games/grid.hpp"
#include "arena/state.hpp"

// 15x15, free opening, no forbidden moves. Only a run of exactly five wins;
// overlines do not count. A full board without a five is a draw.
namespace arena::gomoku {

inline char stone(PlayerSide s) { return s == PlayerSide::First ? 'b' : 'w'; }

inline Board initial_board() {
  Board b;
  b.cells.fill('.');
  return b;
}

inline bool token_syntax_ok(std::string_view tok) { return grid::parse_cell(tok, kSide).has_value(); }

inline Outcome status(const Board& b, PlayerSide to_move) {
  bool black = false, white = false;
  bool empty = false;
  for (char c : b.cells) empty = empty || c == '.';
  grid::for_each_run(b.cells, kSide, [&](char c, int len) {
    if (len == kWinLength) (c == 'b' ? black : white) = true;
  });
  if (black && white) return win_for(opponent(to_move));
  if (black) return Outcome::FirstWins;
  if (white) return Outcome::SecondWins;
  return empty ? Outcome::Ongoing : Outcome::Draw;
}

inline std::vector<std::string> legal_tokens(const Board& b, PlayerSide) {
  std::vector<std::string> out;
  out.reserve(b.cells.size());
  for (int i = 0; i < kSide * kSide; ++i)
    if (b.cells[static_cast<std::size_t>(i)] == '.') out.push_back(square_token({i % kSide, i / kSide}));
  return grid::sorted(std::move(out));
}

inline std::pair<Board, PlayerSide> play(const Board& b, PlayerSide side, std::string_view tok) {
  const auto sq = grid::parse_cell(tok, kSide);
  if (!sq) throw IllegalMove(std::string(tok), "not a square on the 15x15 board");
  const auto idx = static_cast<std::size_t>(sq->rank * kSide + sq->file);
  if (b.cells[idx] != '.') throw IllegalMove(std::string(tok), "intersection is occupied");
  Board next = b;
  next.cells[idx] = stone(side);
  return {next, opponent(side)};
}

// Length of the run through (file, rank) in direction (df, dr) if `c` were
// placed there.
inline int run_through(const Board& b, int file, int rank, int df, int dr, char c) {
  auto same = [&](int f, int r) {
    return f >= 0 && f < kSide && r >= 0 && r < kSide && b.cells[static_cast<std::size_t>(r * kSide + f)] == c;
  };
  int len = 1;
  for (int f = file + df, r = rank + dr; same(f, r); f += df, r += dr) ++len;
  for (int f = file - df, r = rank - dr; same(f, r); f -= df, r -= dr) ++len;
  return len;
}

// True when placing side's stone on the empty cell would make exactly five.
inline bool wins_at(const Board& b, int file, int rank, PlayerSide side) {
  for (auto [df, dr] : grid::kLineDirections)
    if (run_through(b, file, rank, df, dr, stone(side)) == kWinLength) return true;
  return false;
}

inline std::string encode_rows(const Board& b) { return grid::encode_rows(b.cells, kSide); }

inline Board decode_rows(const std::vector<std::string>& rows) {
  Board b = initial_board();
  grid::decode_rows(rows, kSide, "bw", b.cells);
  return b;
}

}  // namespace arena::gomoku
