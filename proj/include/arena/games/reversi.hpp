#pragma once

#include <string>
#include <utility>
#include <vector>

#include "arena/games/grid.hpp"
#include "arena/state.hpp"

// 8x8 Reversi. Black ('b') moves first. A player with no flanking placement
// must pass; the game ends when neither side can place or the board is full.
namespace arena::reversi {

inline constexpr std::string_view kPass = "pass";

inline char disc(PlayerSide s) { return s == PlayerSide::First ? 'b' : 'w'; }

inline Board initial_board() {
  Board b;
  b.cells.fill('.');
  // d4, e5 black; d5, e4 white.
  b.cells[3 * 8 + 3] = 'b';
  b.cells[4 * 8 + 4] = 'b';
  b.cells[4 * 8 + 3] = 'w';
  b.cells[3 * 8 + 4] = 'w';
  return b;
}

inline constexpr std::pair<int, int> kCompass[8] = {{1, 0},  {-1, 0}, {0, 1},  {0, -1},
                                                    {1, 1},  {1, -1}, {-1, 1}, {-1, -1}};

// Indices flipped by placing side's disc at (file, rank); empty if illegal.
inline std::vector<int> flips(const Board& b, int file, int rank, PlayerSide side) {
  std::vector<int> out;
  if (b.cells[static_cast<std::size_t>(rank * kSide + file)] != '.') return out;
  const char me = disc(side), them = disc(opponent(side));
  for (auto [df, dr] : kCompass) {
    int f = file + df, r = rank + dr;
    std::size_t mark = out.size();
    while (f >= 0 && f < kSide && r >= 0 && r < kSide && b.cells[static_cast<std::size_t>(r * kSide + f)] == them) {
      out.push_back(r * kSide + f);
      f += df;
      r += dr;
    }
    const bool closed = f >= 0 && f < kSide && r >= 0 && r < kSide &&
                        b.cells[static_cast<std::size_t>(r * kSide + f)] == me;
    if (!closed) out.resize(mark);
  }
  return out;
}

inline bool has_placement(const Board& b, PlayerSide side) {
  for (int i = 0; i < 64; ++i)
    if (!flips(b, i % kSide, i / kSide, side).empty()) return true;
  return false;
}

inline int count(const Board& b, PlayerSide side) {
  int n = 0;
  for (char c : b.cells) n += c == disc(side);
  return n;
}

inline Outcome status(const Board& b, PlayerSide to_move) {
  bool full = true;
  for (char c : b.cells) full = full && c != '.';
  if (!full && (has_placement(b, to_move) || has_placement(b, opponent(to_move)))) return Outcome::Ongoing;
  const int black = count(b, PlayerSide::First), white = count(b, PlayerSide::Second);
  if (black > white) return Outcome::FirstWins;
  if (white > black) return Outcome::SecondWins;
  return Outcome::Draw;
}

inline bool token_syntax_ok(std::string_view tok) {
  return tok == kPass || grid::parse_cell(tok, kSide).has_value();
}

inline std::vector<std::string> legal_tokens(const Board& b, PlayerSide side) {
  std::vector<std::string> out;
  for (int i = 0; i < 64; ++i)
    if (!flips(b, i % kSide, i / kSide, side).empty()) out.push_back(square_token({i % kSide, i / kSide}));
  if (out.empty()) out.emplace_back(kPass);
  return grid::sorted(std::move(out));
}

inline std::pair<Board, PlayerSide> play(const Board& b, PlayerSide side, std::string_view tok) {
  if (tok == kPass) {
    if (has_placement(b, side)) throw IllegalMove(std::string(tok), "cannot pass while a placement is available");
    return {b, opponent(side)};
  }
  const auto sq = grid::parse_cell(tok, kSide);
  if (!sq) throw IllegalMove(std::string(tok), "not a square on the 8x8 board");
  if (b.cells[static_cast<std::size_t>(sq->rank * kSide + sq->file)] != '.')
    throw IllegalMove(std::string(tok), "square is occupied");
  const auto flipped = flips(b, sq->file, sq->rank, side);
  if (flipped.empty()) throw IllegalMove(std::string(tok), "placement must flank at least one opposing disc");
  Board next = b;
  next.cells[static_cast<std::size_t>(sq->rank * kSide + sq->file)] = disc(side);
  for (int i : flipped) next.cells[static_cast<std::size_t>(i)] = disc(side);
  return {next, opponent(side)};
}

inline std::string encode_rows(const Board& b) { return grid::encode_rows(b.cells, kSide); }

inline Board decode_rows(const std::vector<std::string>& rows) {
  Board b;
  b.cells.fill('.');
  grid::decode_rows(rows, kSide, "bw", b.cells);
  return b;
}

}  // namespace arena::reversi
