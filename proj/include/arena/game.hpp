#pragma once

#include <optional>
#include <sstream>
#include <string>
#include <string_view>
#include <vector>

#include "arena/freestyle/engine.hpp"
#include "arena/games/chess.hpp"
#include "arena/games/gomoku.hpp"
#include "arena/games/reversi.hpp"
#include "arena/games/tictactoe.hpp"
#include "arena/state.hpp"

// The game kernel: one set of pure functions over GameState that dispatch to
// the concrete rule engines.
namespace arena {

struct GameOptions {
  chess::Config chess;
  // Required for FreeStyle.
  std::optional<freestyle::RuleSet> rules;
};

template <class... Fs>
struct Overloaded : Fs... {
  using Fs::operator()...;
};
template <class... Fs>
Overloaded(Fs...) -> Overloaded<Fs...>;

inline GameState initial_state(GameKind kind, const GameOptions& opts = {}) {
  switch (kind) {
    case GameKind::TicTacToe: return detail::Access::make_state(tictactoe::initial_board(), PlayerSide::First);
    case GameKind::Gomoku: return detail::Access::make_state(gomoku::initial_board(), PlayerSide::First);
    case GameKind::Reversi: return detail::Access::make_state(reversi::initial_board(), PlayerSide::First);
    case GameKind::Chess:
      return detail::Access::make_state(chess::initial_position(opts.chess), PlayerSide::First);
    case GameKind::FreeStyle:
      if (!opts.rules) throw InvalidRuleSet("PIECES", "", "free-style game needs a rule set");
      return detail::Access::make_state(freestyle::initial_board(*opts.rules), PlayerSide::First);
  }
  throw Error("unknown game kind");
}

inline GameState initial_state(const freestyle::RuleSet& rules) {
  GameOptions o;
  o.rules = rules;
  return initial_state(GameKind::FreeStyle, o);
}

inline const freestyle::RuleSet* rules_of(const GameState& s) {
  if (s.kind() != GameKind::FreeStyle) return nullptr;
  return s.board_as<freestyle::Board>().rules.get();
}

inline Outcome status(const GameState& s) {
  const PlayerSide side = s.to_move();
  return std::visit(Overloaded{
                        [&](const tictactoe::Board& b) { return tictactoe::status(b, side); },
                        [&](const gomoku::Board& b) { return gomoku::status(b, side); },
                        [&](const reversi::Board& b) { return reversi::status(b, side); },
                        [&](const chess::Position& p) { return chess::status(p); },
                        [&](const freestyle::Board& b) { return freestyle::status(b, side); },
                    },
                    s.board());
}

inline bool is_terminal(const GameState& s) { return status(s) != Outcome::Ongoing; }

// Tokens of every legal move, lexicographically ordered.
inline std::vector<std::string> legal_tokens(const GameState& s) {
  if (is_terminal(s)) throw TerminalState();
  const PlayerSide side = s.to_move();
  return std::visit(Overloaded{
                        [&](const tictactoe::Board& b) { return tictactoe::legal_tokens(b, side); },
                        [&](const gomoku::Board& b) { return gomoku::legal_tokens(b, side); },
                        [&](const reversi::Board& b) { return reversi::legal_tokens(b, side); },
                        [&](const chess::Position& p) { return chess::legal_tokens(p); },
                        [&](const freestyle::Board& b) { return freestyle::legal_tokens(b, side); },
                    },
                    s.board());
}

inline std::vector<Move> legal_moves(const GameState& s) {
  std::vector<Move> out;
  for (auto& t : legal_tokens(s)) out.push_back(detail::Access::make_move(std::move(t), s.to_move()));
  return out;
}

inline bool token_syntax_ok(const GameState& s, std::string_view tok) {
  return std::visit(Overloaded{
                        [&](const tictactoe::Board&) { return tictactoe::token_syntax_ok(tok); },
                        [&](const gomoku::Board&) { return gomoku::token_syntax_ok(tok); },
                        [&](const reversi::Board&) { return reversi::token_syntax_ok(tok); },
                        [&](const chess::Position&) { return chess::token_syntax_ok(tok); },
                        [&](const freestyle::Board& b) { return freestyle::token_syntax_ok(tok, *b.rules); },
                    },
                    s.board());
}

// Syntax check only; legality is decided by apply().
inline Move parse_move(const GameState& s, std::string_view text) {
  std::string tok = freestyle::detail::lower(freestyle::detail::trim(text));
  if (!token_syntax_ok(s, tok))
    throw ParseError("'" + tok + "' is not a move token for " + std::string(to_string(s.kind())));
  return detail::Access::make_move(std::move(tok), s.to_move());
}

inline GameState apply(const GameState& s, const Move& m) {
  if (is_terminal(s)) throw TerminalState();
  if (m.actor() != s.to_move()) throw IllegalMove(m.token(), "not this side's turn");
  const PlayerSide side = s.to_move();
  const std::string& tok = m.token();
  return std::visit(Overloaded{
                        [&](const chess::Position& p) {
                          chess::Position next = chess::play(p, tok);
                          const PlayerSide to_move = next.side;
                          return detail::Access::successor(s, std::move(next), to_move, m);
                        },
                        [&](const auto& b) {
                          auto played = [&] {
                            using B = std::decay_t<decltype(b)>;
                            if constexpr (std::is_same_v<B, tictactoe::Board>) return tictactoe::play(b, side, tok);
                            else if constexpr (std::is_same_v<B, gomoku::Board>) return gomoku::play(b, side, tok);
                            else if constexpr (std::is_same_v<B, reversi::Board>) return reversi::play(b, side, tok);
                            else return freestyle::play(b, side, tok);
                          }();
                          return detail::Access::successor(s, std::move(played.first), played.second, m);
                        },
                    },
                    s.board());
}

inline GameState apply(const GameState& s, std::string_view token) { return apply(s, parse_move(s, token)); }

// Board rows (top rank first), then `to_move: first|second`; chess adds a
// `fen:` line. With a viewer set, hidden Free-Style values of the other side
// are masked until the game ends.
inline std::string encode_board(const GameState& s, std::optional<PlayerSide> viewer = std::nullopt) {
  std::string out = std::visit(Overloaded{
                                   [&](const tictactoe::Board& b) { return tictactoe::encode_rows(b); },
                                   [&](const gomoku::Board& b) { return gomoku::encode_rows(b); },
                                   [&](const reversi::Board& b) { return reversi::encode_rows(b); },
                                   [&](const chess::Position& p) { return chess::encode_rows(p); },
                                   [&](const freestyle::Board& b) {
                                     return freestyle::encode_rows(b, viewer, is_terminal(s));
                                   },
                               },
                               s.board());
  out += "to_move: ";
  out += to_string(s.to_move());
  out += '\n';
  if (s.kind() == GameKind::Chess) out += "fen: " + chess::to_fen(s.board_as<chess::Position>()) + "\n";
  return out;
}

inline GameState decode_board(GameKind kind, std::string_view text, const GameOptions& opts = {}) {
  std::vector<std::string> rows;
  std::optional<PlayerSide> side;
  std::optional<std::string> fen;
  std::istringstream in{std::string(text)};
  for (std::string line; std::getline(in, line);) {
    if (!line.empty() && line.back() == '\r') line.pop_back();
    if (line.rfind("to_move: ", 0) == 0) side = parse_side(line.substr(9));
    else if (line.rfind("fen: ", 0) == 0) fen = line.substr(5);
    else if (!line.empty()) rows.push_back(line);
  }
  if (!side) throw ParseError("board text lacks a 'to_move:' line");
  switch (kind) {
    case GameKind::TicTacToe: return detail::Access::make_state(tictactoe::decode_rows(rows), *side);
    case GameKind::Gomoku: return detail::Access::make_state(gomoku::decode_rows(rows), *side);
    case GameKind::Reversi: return detail::Access::make_state(reversi::decode_rows(rows), *side);
    case GameKind::Chess: {
      chess::Position p;
      if (fen) {
        p = chess::from_fen(*fen, opts.chess);
      } else {
        p.config = opts.chess;
        p.squares.fill('.');
        grid::decode_rows(rows, 8, "pnbrqkPNBRQK", p.squares);
        p.side = *side;
        p = chess::with_visit(p);
      }
      if (p.side != *side) throw ParseError("fen and to_move disagree");
      return detail::Access::make_state(std::move(p), *side);
    }
    case GameKind::FreeStyle:
      if (!opts.rules) throw ParseError("decoding a free-style board needs its rule set");
      return detail::Access::make_state(freestyle::decode_rows(rows, *opts.rules), *side);
  }
  throw Error("unknown game kind");
}

// Short description for prompts.
inline std::string rules_summary(const GameState& s) {
  switch (s.kind()) {
    case GameKind::TicTacToe:
      return "Tic-Tac-Toe on a 3x3 board (a1 bottom-left to c3). First plays x, second plays o. Three in a row, "
             "column or diagonal wins; a full board is a draw. Move token: a square such as b2.";
    case GameKind::Gomoku:
      return "Gomoku on a 15x15 board (a1 bottom-left to o15), free opening, no forbidden moves. First plays black "
             "(b), second white (w). Exactly five in a line wins; six or more does not count. Move token: a square "
             "such as h8.";
    case GameKind::Reversi:
      return "Reversi on an 8x8 board (a1 bottom-left to h8). First plays black (b), second white (w). A placement "
             "must flank opposing discs in a straight line; flanked discs flip. With no placement available you must "
             "play 'pass'. Most discs at the end wins. Move token: a square such as d3, or pass.";
    case GameKind::Chess:
      return "Chess under standard rules (castling, en passant, promotion). First plays white (uppercase), second "
             "black (lowercase). Draws by stalemate, threefold repetition, the 50-move rule and insufficient "
             "material. Move token: UCI from-to squares such as e2e4, promotions like e7e8q, castling as e1g1.";
    case GameKind::FreeStyle: return "Free-Style (negotiated rules). " + freestyle::summary(*rules_of(s));
  }
  return {};
}

// A rules implementation bound to one game kind (and its options).
class Engine {
 public:
  Engine(GameKind kind, GameOptions opts) : kind_(kind), opts_(std::move(opts)) {}

  GameKind kind() const { return kind_; }
  const GameOptions& options() const { return opts_; }

  GameState initial_state() const { return arena::initial_state(kind_, opts_); }
  std::vector<Move> legal_moves(const GameState& s) const { return arena::legal_moves(check(s)); }
  GameState apply(const GameState& s, const Move& m) const { return arena::apply(check(s), m); }
  Outcome status(const GameState& s) const { return arena::status(check(s)); }
  std::string encode_board(const GameState& s, std::optional<PlayerSide> viewer = std::nullopt) const {
    return arena::encode_board(check(s), viewer);
  }
  GameState decode_board(std::string_view text) const { return arena::decode_board(kind_, text, opts_); }

 private:
  const GameState& check(const GameState& s) const {
    if (s.kind() != kind_) throw Error("state belongs to a different game");
    return s;
  }

  GameKind kind_;
  GameOptions opts_;
};

inline Engine tictactoe_engine() { return Engine(GameKind::TicTacToe, {}); }
inline Engine gomoku_engine() { return Engine(GameKind::Gomoku, {}); }
inline Engine reversi_engine() { return Engine(GameKind::Reversi, {}); }
inline Engine chess_engine(chess::Config config = {}) { return Engine(GameKind::Chess, GameOptions{config, {}}); }
// Throws InvalidRuleSet if the rules are incomplete or inconsistent.
inline Engine freestyle_engine(const freestyle::RuleSet& rules) {
  freestyle::validate(rules);
  return Engine(GameKind::FreeStyle, GameOptions{{}, rules});
}

// Replays a token list from the initial position; throws on the first
// illegal token.
inline GameState replay(const Engine& engine, const std::vector<std::string>& tokens) {
  GameState s = engine.initial_state();
  for (const auto& t : tokens) s = arena::apply(s, t);
  return s;
}

}  // namespace arena
