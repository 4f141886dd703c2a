#pragma once

#include <array>
#include <cstdint>
#include <memory>
#include <string>
#include <utility>
#include <variant>
#include <vector>

#include "arena/core.hpp"
#include "arena/freestyle/ruleset.hpp"

namespace arena {

namespace detail {
struct Access;
}

// A move token bound to the side that plays it. Only the kernel creates
// moves: via parse_move() or legal_moves().
class Move {
 public:
  const std::string& token() const { return token_; }
  PlayerSide actor() const { return actor_; }

  friend bool operator==(const Move&, const Move&) = default;

 private:
  Move(std::string token, PlayerSide actor) : token_(std::move(token)), actor_(actor) {}
  friend struct detail::Access;

  std::string token_;
  PlayerSide actor_;
};

namespace tictactoe {
inline constexpr int kSide = 3;
struct Board {
  std::array<char, 9> cells{};  // index rank*3+file; '.', 'x', 'o'
  friend bool operator==(const Board&, const Board&) = default;
};
}  // namespace tictactoe

namespace gomoku {
inline constexpr int kSide = 15;
inline constexpr int kWinLength = 5;
struct Board {
  std::array<char, kSide * kSide> cells{};  // '.', 'b' (first), 'w' (second)
  friend bool operator==(const Board&, const Board&) = default;
};
}  // namespace gomoku

namespace reversi {
inline constexpr int kSide = 8;
struct Board {
  std::array<char, 64> cells{};  // '.', 'b' (first), 'w' (second)
  friend bool operator==(const Board&, const Board&) = default;
};
}  // namespace reversi

namespace chess {

// Draw rules beyond stalemate and repetition; both can be switched off.
struct Config {
  bool fifty_move_rule = true;
  bool insufficient_material = true;
  friend bool operator==(const Config&, const Config&) = default;
};

enum CastlingBits : std::uint8_t {
  kWhiteKingside = 1,
  kWhiteQueenside = 2,
  kBlackKingside = 4,
  kBlackQueenside = 8,
};

// Canonical repetition key: placement, side to move, castling rights and
// en-passant file.
struct PositionKey {
  std::array<char, 64> placement{};
  PlayerSide to_move = PlayerSide::First;
  std::uint8_t castling = 0;
  std::int8_t ep_file = -1;
  friend bool operator==(const PositionKey&, const PositionKey&) = default;
};

struct KeyNode {
  PositionKey key;
  std::shared_ptr<const KeyNode> prev;
};

struct Position {
  std::array<char, 64> squares{};  // index rank*8+file; '.' or FEN letter
  PlayerSide side = PlayerSide::First;
  std::uint8_t castling = 0;
  std::int8_t ep_square = -1;  // only set when an en-passant capture is available
  int halfmove_clock = 0;
  int fullmove_number = 1;
  Config config;
  // Every position visited so far, newest first (persistent list).
  std::shared_ptr<const KeyNode> visited;

  friend bool operator==(const Position& a, const Position& b) {
    return a.squares == b.squares && a.side == b.side && a.castling == b.castling &&
           a.ep_square == b.ep_square && a.halfmove_clock == b.halfmove_clock &&
           a.fullmove_number == b.fullmove_number && a.config == b.config;
  }
};

}  // namespace chess

namespace freestyle {
struct Cell {
  std::int8_t owner = -1;  // -1 empty, 0 first, 1 second
  std::int8_t value = 0;
  friend bool operator==(const Cell&, const Cell&) = default;
};
struct Board {
  std::array<Cell, kCells> cells{};  // index rank*5+file
  std::shared_ptr<const RuleSet> rules;
  std::array<int, 2> spent{0, 0};  // budget consumed per side
  int rounds_played = 0;
  friend bool operator==(const Board& a, const Board& b) {
    return a.cells == b.cells && a.spent == b.spent && a.rounds_played == b.rounds_played &&
           (a.rules == b.rules || (a.rules && b.rules && *a.rules == *b.rules));
  }
};
}  // namespace freestyle

// Variant order matches GameKind.
using BoardVariant =
    std::variant<tictactoe::Board, gomoku::Board, reversi::Board, chess::Position, freestyle::Board>;

// Immutable position of any of the five games plus the moves that led to it.
// Copies are cheap: the move history is a shared persistent list.
class GameState {
 public:
  GameKind kind() const { return static_cast<GameKind>(board_.index()); }
  PlayerSide to_move() const { return to_move_; }
  // 1 + number of applied moves.
  int round_index() const { return round_index_; }

  const BoardVariant& board() const { return board_; }
  template <class B>
  const B& board_as() const {
    return std::get<B>(board_);
  }

  std::vector<Move> history() const {
    std::vector<Move> out;
    out.reserve(static_cast<std::size_t>(round_index_ - 1));
    for (const Node* n = history_.get(); n != nullptr; n = n->prev.get()) out.push_back(n->move);
    return {out.rbegin(), out.rend()};
  }
  const Move* last_move() const { return history_ ? &history_->move : nullptr; }

 private:
  struct Node {
    Move move;
    std::shared_ptr<const Node> prev;
  };

  GameState(BoardVariant board, PlayerSide to_move) : board_(std::move(board)), to_move_(to_move) {}
  friend struct detail::Access;

  BoardVariant board_;
  PlayerSide to_move_ = PlayerSide::First;
  int round_index_ = 1;
  std::shared_ptr<const Node> history_;
};

namespace detail {

struct Access {
  static Move make_move(std::string token, PlayerSide actor) { return Move(std::move(token), actor); }

  static GameState make_state(BoardVariant board, PlayerSide to_move) {
    return GameState(std::move(board), to_move);
  }

  static GameState successor(const GameState& prev, BoardVariant board, PlayerSide to_move, Move applied) {
    GameState next(std::move(board), to_move);
    next.round_index_ = prev.round_index_ + 1;
    next.history_ = std::make_shared<const GameState::Node>(GameState::Node{std::move(applied), prev.history_});
    return next;
  }
};

}  // namespace detail

}  // namespace arena
