#pragma once

#include <string>
#include <utility>
#include <vector>

#include "arena/games/grid.hpp"
#include "arena/state.hpp"

namespace arena::tictactoe {

inline char mark(PlayerSide s) { return s == PlayerSide::First ? 'x' : 'o'; }

inline Board initial_board() {
  Board b;
  b.cells.fill('.');
  return b;
}

inline bool token_syntax_ok(std::string_view tok) { return grid::parse_cell(tok, kSide).has_value(); }

inline Outcome status(const Board& b, PlayerSide to_move) {
  bool x_line = false, o_line = false;
  grid::for_each_run(b.cells, kSide, [&](char c, int len) {
    if (len >= 3) (c == 'x' ? x_line : o_line) = true;
  });
  if (x_line && o_line) return win_for(opponent(to_move));  // only reachable from decoded boards
  if (x_line) return Outcome::FirstWins;
  if (o_line) return Outcome::SecondWins;
  for (char c : b.cells)
    if (c == '.') return Outcome::Ongoing;
  return Outcome::Draw;
}

inline std::vector<std::string> legal_tokens(const Board& b, PlayerSide) {
  std::vector<std::string> out;
  for (int i = 0; i < 9; ++i)
    if (b.cells[static_cast<std::size_t>(i)] == '.') out.push_back(square_token({i % kSide, i / kSide}));
  return grid::sorted(std::move(out));
}

inline std::pair<Board, PlayerSide> play(const Board& b, PlayerSide side, std::string_view tok) {
  const auto sq = grid::parse_cell(tok, kSide);
  if (!sq) throw IllegalMove(std::string(tok), "not a square on the 3x3 board");
  const auto idx = static_cast<std::size_t>(sq->rank * kSide + sq->file);
  if (b.cells[idx] != '.') throw IllegalMove(std::string(tok), "cell is occupied");
  Board next = b;
  next.cells[idx] = mark(side);
  return {next, opponent(side)};
}

inline std::string encode_rows(const Board& b) { return grid::encode_rows(b.cells, kSide); }

inline Board decode_rows(const std::vector<std::string>& rows) {
  Board b = initial_board();
  grid::decode_rows(rows, kSide, "xo", b.cells);
  return b;
}

}  // namespace arena::tictactoe
