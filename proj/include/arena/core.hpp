#pragma once

#include <array>
#include <cstdint>
#include <optional>
#include <string>
#include <string_view>

#include "arena/errors.hpp"

namespace arena {

enum class PlayerSide : std::uint8_t { First, Second };

constexpr PlayerSide opponent(PlayerSide s) {
  return s == PlayerSide::First ? PlayerSide::Second : PlayerSide::First;
}
constexpr int side_index(PlayerSide s) { return s == PlayerSide::First ? 0 : 1; }

enum class Outcome : std::uint8_t { FirstWins, SecondWins, Draw, Ongoing };

constexpr Outcome win_for(PlayerSide s) {
  return s == PlayerSide::First ? Outcome::FirstWins : Outcome::SecondWins;
}

enum class GameKind : std::uint8_t { TicTacToe, Gomoku, Reversi, Chess, FreeStyle };

inline constexpr std::array<GameKind, 5> kAllGames = {
    GameKind::TicTacToe, GameKind::Gomoku, GameKind::Reversi, GameKind::Chess,
    GameKind::FreeStyle};

inline std::string_view to_string(GameKind k) {
  switch (k) {
    case GameKind::TicTacToe: return "tictactoe";
    case GameKind::Gomoku: return "gomoku";
    case GameKind::Reversi: return "reversi";
    case GameKind::Chess: return "chess";
    case GameKind::FreeStyle: return "freestyle";
  }
  return "?";
}

// Human-facing column title, as used in report tables.
inline std::string_view display_name(GameKind k) {
  switch (k) {
    case GameKind::TicTacToe: return "Tic-Tac-Toe";
    case GameKind::Gomoku: return "Gomoku";
    case GameKind::Reversi: return "Reversi";
    case GameKind::Chess: return "Chess";
    case GameKind::FreeStyle: return "Free-Style";
  }
  return "?";
}

inline GameKind parse_game_kind(std::string_view s) {
  for (GameKind k : kAllGames)
    if (to_string(k) == s) return k;
  throw ParseError("unknown game kind '" + std::string(s) + "'");
}

inline std::string_view to_string(PlayerSide s) {
  return s == PlayerSide::First ? "first" : "second";
}

inline PlayerSide parse_side(std::string_view s) {
  if (s == "first") return PlayerSide::First;
  if (s == "second") return PlayerSide::Second;
  throw ParseError("unknown side '" + std::string(s) + "'");
}

inline std::string_view to_string(Outcome o) {
  switch (o) {
    case Outcome::FirstWins: return "first_wins";
    case Outcome::SecondWins: return "second_wins";
    case Outcome::Draw: return "draw";
    case Outcome::Ongoing: return "ongoing";
  }
  return "?";
}

inline Outcome parse_outcome(std::string_view s) {
  for (Outcome o : {Outcome::FirstWins, Outcome::SecondWins, Outcome::Draw, Outcome::Ongoing})
    if (to_string(o) == s) return o;
  throw ParseError("unknown outcome '" + std::string(s) + "'");
}

// Board coordinates shared by every game: files a..o left to right, ranks
// 1..15 bottom to top. Square tokens look like "a1", "h8", "o15".
struct Square {
  int file = 0;  // 0-based column
  int rank = 0;  // 0-based row, 0 = bottom

  friend bool operator==(const Square&, const Square&) = default;
};

inline constexpr int kMaxBoardSide = 15;

inline std::string square_token(Square sq) {
  std::string out(1, static_cast<char>('a' + sq.file));
  out += std::to_string(sq.rank + 1);
  return out;
}

// Parses "<file><rank>" for a board of the given width/height. Returns
// nullopt on any syntax or range error.
inline std::optional<Square> parse_square(std::string_view tok, int width, int height) {
  if (tok.size() < 2 || tok.size() > 3) return std::nullopt;
  const char f = tok[0];
  if (f < 'a' || f >= 'a' + width) return std::nullopt;
  int rank = 0;
  for (char c : tok.substr(1)) {
    if (c < '0' || c > '9') return std::nullopt;
    rank = rank * 10 + (c - '0');
  }
  if (tok[1] == '0' || rank < 1 || rank > height) return std::nullopt;
  return Square{f - 'a', rank - 1};
}

}  // namespace arena
