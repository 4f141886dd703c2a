#pragma once

#include <algorithm>
#include <array>
#include <cstdint>
#include <map>
#include <memory>
#include <sstream>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

#include "arena/games/grid.hpp"
#include "arena/state.hpp"

// Full chess rules on a mailbox board: castling, en passant, promotion,
// checkmate and stalemate, threefold repetition, plus the optional 50-move
// and insufficient-material draws. Moves use UCI-style tokens ("e2e4",
// "e7e8q", castling as the king's two-square move).
namespace arena::chess {

inline constexpr std::string_view kStartFen = "rnbqkbnr/pppppppp/8/8/8/8/PPPPPPPP/RNBQKBNR w KQkq - 0 1";

enum MoveFlags : std::uint8_t {
  kCapture = 1,
  kEnPassant = 2,
  kCastle = 4,
  kDoublePush = 8,
};

struct MoveSpec {
  std::int8_t from = 0;
  std::int8_t to = 0;
  char promo = 0;  // 'q', 'r', 'b', 'n' or 0
  std::uint8_t flags = 0;
  friend bool operator==(const MoveSpec&, const MoveSpec&) = default;
};

inline constexpr int file_of(int sq) { return sq & 7; }
inline constexpr int rank_of(int sq) { return sq >> 3; }
inline constexpr int square_at(int file, int rank) { return rank * 8 + file; }
inline constexpr bool on_board(int file, int rank) { return file >= 0 && file < 8 && rank >= 0 && rank < 8; }

inline bool is_white(char c) { return c >= 'A' && c <= 'Z'; }
inline bool is_black(char c) { return c >= 'a' && c <= 'z'; }
inline bool owned_by(char c, PlayerSide s) { return s == PlayerSide::First ? is_white(c) : is_black(c); }
inline char kind_of(char c) { return is_white(c) ? static_cast<char>(c - 'A' + 'a') : c; }
inline char piece_for(char kind, PlayerSide s) {
  return s == PlayerSide::First ? static_cast<char>(kind - 'a' + 'A') : kind;
}

inline constexpr std::pair<int, int> kKnightSteps[8] = {{1, 2},  {2, 1},  {2, -1}, {1, -2},
                                                        {-1, -2}, {-2, -1}, {-2, 1}, {-1, 2}};
inline constexpr std::pair<int, int> kKingSteps[8] = {{1, 0}, {1, 1},   {0, 1},  {-1, 1},
                                                      {-1, 0}, {-1, -1}, {0, -1}, {1, -1}};
inline constexpr std::pair<int, int> kRookDirs[4] = {{1, 0}, {-1, 0}, {0, 1}, {0, -1}};
inline constexpr std::pair<int, int> kBishopDirs[4] = {{1, 1}, {1, -1}, {-1, 1}, {-1, -1}};

using Squares = std::array<char, 64>;

// Whether `target` is attacked by any piece of side `by`.
inline bool attacked(const Squares& sq, int target, PlayerSide by) {
  const int tf = file_of(target), tr = rank_of(target);
  auto piece = [&](int f, int r) { return sq[static_cast<std::size_t>(square_at(f, r))]; };
  const int pawn_rank = by == PlayerSide::First ? tr - 1 : tr + 1;
  const char pawn = piece_for('p', by);
  for (int df : {-1, 1})
    if (on_board(tf + df, pawn_rank) && piece(tf + df, pawn_rank) == pawn) return true;
  const char knight = piece_for('n', by);
  for (auto [df, dr] : kKnightSteps)
    if (on_board(tf + df, tr + dr) && piece(tf + df, tr + dr) == knight) return true;
  const char king = piece_for('k', by);
  for (auto [df, dr] : kKingSteps)
    if (on_board(tf + df, tr + dr) && piece(tf + df, tr + dr) == king) return true;
  const char queen = piece_for('q', by);
  auto ray = [&](std::pair<int, int> dir, char slider) {
    for (int f = tf + dir.first, r = tr + dir.second; on_board(f, r); f += dir.first, r += dir.second) {
      const char c = piece(f, r);
      if (c == '.') continue;
      return c == slider || c == queen;
    }
    return false;
  };
  for (auto d : kRookDirs)
    if (ray(d, piece_for('r', by))) return true;
  for (auto d : kBishopDirs)
    if (ray(d, piece_for('b', by))) return true;
  return false;
}

inline int king_square(const Squares& sq, PlayerSide s) {
  const char king = piece_for('k', s);
  for (int i = 0; i < 64; ++i)
    if (sq[static_cast<std::size_t>(i)] == king) return i;
  return -1;
}

inline bool in_check(const Position& p) {
  const int k = king_square(p.squares, p.side);
  return k >= 0 && attacked(p.squares, k, opponent(p.side));
}

// Moves that obey piece movement but may leave the mover's king attacked.
// Castling is generated with its full safety conditions.
inline void pseudo_moves(const Position& p, std::vector<MoveSpec>& out) {
  const PlayerSide me = p.side;
  const auto& sq = p.squares;
  auto at = [&](int f, int r) { return sq[static_cast<std::size_t>(square_at(f, r))]; };
  auto push = [&](int from, int to, std::uint8_t flags, char promo = 0) {
    out.push_back(MoveSpec{static_cast<std::int8_t>(from), static_cast<std::int8_t>(to), promo, flags});
  };
  auto push_pawn = [&](int from, int to, std::uint8_t flags) {
    const int last = me == PlayerSide::First ? 7 : 0;
    if (rank_of(to) == last) {
      for (char pr : {'b', 'n', 'q', 'r'}) push(from, to, flags, pr);
    } else {
      push(from, to, flags);
    }
  };

  for (int from = 0; from < 64; ++from) {
    const char c = sq[static_cast<std::size_t>(from)];
    if (c == '.' || !owned_by(c, me)) continue;
    const int f = file_of(from), r = rank_of(from);
    switch (kind_of(c)) {
      case 'p': {
        const int dir = me == PlayerSide::First ? 1 : -1;
        const int start = me == PlayerSide::First ? 1 : 6;
        if (on_board(f, r + dir) && at(f, r + dir) == '.') {
          push_pawn(from, square_at(f, r + dir), 0);
          if (r == start && at(f, r + 2 * dir) == '.') push(from, square_at(f, r + 2 * dir), kDoublePush);
        }
        for (int df : {-1, 1}) {
          if (!on_board(f + df, r + dir)) continue;
          const int to = square_at(f + df, r + dir);
          const char t = at(f + df, r + dir);
          if (t != '.' && !owned_by(t, me)) push_pawn(from, to, kCapture);
          else if (t == '.' && to == p.ep_square) push(from, to, kCapture | kEnPassant);
        }
        break;
      }
      case 'n':
      case 'k': {
        const auto& steps = kind_of(c) == 'n' ? kKnightSteps : kKingSteps;
        for (auto [df, dr] : steps) {
          if (!on_board(f + df, r + dr)) continue;
          const char t = at(f + df, r + dr);
          if (t == '.') push(from, square_at(f + df, r + dr), 0);
          else if (!owned_by(t, me)) push(from, square_at(f + df, r + dr), kCapture);
        }
        break;
      }
      default: {
        const char k = kind_of(c);
        auto slide = [&](std::pair<int, int> d) {
          for (int nf = f + d.first, nr = r + d.second; on_board(nf, nr); nf += d.first, nr += d.second) {
            const char t = at(nf, nr);
            if (t == '.') {
              push(from, square_at(nf, nr), 0);
              continue;
            }
            if (!owned_by(t, me)) push(from, square_at(nf, nr), kCapture);
            break;
          }
        };
        if (k == 'r' || k == 'q')
          for (auto d : kRookDirs) slide(d);
        if (k == 'b' || k == 'q')
          for (auto d : kBishopDirs) slide(d);
        break;
      }
    }
  }

  // Castling: king and rook on home squares, path empty, king not in check
  // and not crossing or landing on an attacked square.
  const int home = me == PlayerSide::First ? 0 : 7;
  const char king = piece_for('k', me), rook = piece_for('r', me);
  const std::uint8_t ks = me == PlayerSide::First ? kWhiteKingside : kBlackKingside;
  const std::uint8_t qs = me == PlayerSide::First ? kWhiteQueenside : kBlackQueenside;
  const PlayerSide them = opponent(me);
  if ((p.castling & (ks | qs)) && at(4, home) == king && !attacked(sq, square_at(4, home), them)) {
    if ((p.castling & ks) && at(7, home) == rook && at(5, home) == '.' && at(6, home) == '.' &&
        !attacked(sq, square_at(5, home), them) && !attacked(sq, square_at(6, home), them))
      push(square_at(4, home), square_at(6, home), kCastle);
    if ((p.castling & qs) && at(0, home) == rook && at(1, home) == '.' && at(2, home) == '.' &&
        at(3, home) == '.' && !attacked(sq, square_at(3, home), them) && !attacked(sq, square_at(2, home), them))
      push(square_at(4, home), square_at(2, home), kCastle);
  }
}

inline std::uint8_t corner_right(int sq) {
  switch (sq) {
    case 0: return kWhiteQueenside;
    case 7: return kWhiteKingside;
    case 56: return kBlackQueenside;
    case 63: return kBlackKingside;
    default: return 0;
  }
}

// True if a pawn of `side` could capture en passant onto `target` (the
// square the double-pushed pawn skipped).
inline bool ep_capturer_present(const Squares& sq, int target, PlayerSide side) {
  const int f = file_of(target);
  const int r = side == PlayerSide::First ? rank_of(target) - 1 : rank_of(target) + 1;
  const char pawn = piece_for('p', side);
  for (int df : {-1, 1})
    if (on_board(f + df, r) && sq[static_cast<std::size_t>(square_at(f + df, r))] == pawn) return true;
  return false;
}

// Plays a move on a copy; does not touch the repetition list.
inline Position make(const Position& p, const MoveSpec& m) {
  Position n = p;
  const PlayerSide me = p.side;
  auto& sq = n.squares;
  const char piece = sq[static_cast<std::size_t>(m.from)];
  sq[static_cast<std::size_t>(m.from)] = '.';
  sq[static_cast<std::size_t>(m.to)] = m.promo ? piece_for(m.promo, me) : piece;
  if (m.flags & kEnPassant) sq[static_cast<std::size_t>(square_at(file_of(m.to), rank_of(m.from)))] = '.';
  if (m.flags & kCastle) {
    const int home = rank_of(m.from);
    const bool kingside = file_of(m.to) == 6;
    const int rook_from = square_at(kingside ? 7 : 0, home), rook_to = square_at(kingside ? 5 : 3, home);
    sq[static_cast<std::size_t>(rook_to)] = sq[static_cast<std::size_t>(rook_from)];
    sq[static_cast<std::size_t>(rook_from)] = '.';
  }
  if (kind_of(piece) == 'k')
    n.castling &= me == PlayerSide::First ? ~(kWhiteKingside | kWhiteQueenside) : ~(kBlackKingside | kBlackQueenside);
  n.castling &= static_cast<std::uint8_t>(~(corner_right(m.from) | corner_right(m.to)));

  n.halfmove_clock = (kind_of(piece) == 'p' || (m.flags & kCapture)) ? 0 : p.halfmove_clock + 1;
  if (me == PlayerSide::Second) ++n.fullmove_number;
  n.ep_square = -1;
  if (m.flags & kDoublePush) {
    const int skipped = (m.from + m.to) / 2;
    if (ep_capturer_present(sq, skipped, opponent(me))) n.ep_square = static_cast<std::int8_t>(skipped);
  }
  n.side = opponent(me);
  return n;
}

inline bool leaves_king_safe(const Position& p, const MoveSpec& m) {
  const Position n = make(p, m);
  const int k = king_square(n.squares, p.side);
  return k < 0 || !attacked(n.squares, k, n.side);
}

inline std::vector<MoveSpec> legal_specs(const Position& p) {
  std::vector<MoveSpec> pseudo;
  pseudo.reserve(64);
  pseudo_moves(p, pseudo);
  std::vector<MoveSpec> out;
  out.reserve(pseudo.size());
  for (const auto& m : pseudo)
    if (leaves_king_safe(p, m)) out.push_back(m);
  return out;
}

inline std::string uci(const MoveSpec& m) {
  std::string out = square_token({file_of(m.from), rank_of(m.from)}) + square_token({file_of(m.to), rank_of(m.to)});
  if (m.promo) out += m.promo;
  return out;
}

inline PositionKey key_of(const Position& p) {
  PositionKey k;
  k.placement = p.squares;
  k.to_move = p.side;
  k.castling = p.castling;
  k.ep_file = p.ep_square < 0 ? std::int8_t{-1} : static_cast<std::int8_t>(file_of(p.ep_square));
  return k;
}

inline Position with_visit(Position p) {
  auto node = std::make_shared<KeyNode>();
  node->key = key_of(p);
  node->prev = p.visited;
  p.visited = std::move(node);
  return p;
}

// Occurrences of the current position, counted back to the last capture or
// pawn move (earlier positions cannot repeat it).
inline int repetitions(const Position& p) {
  if (!p.visited) return 1;
  const PositionKey now = key_of(p);
  int seen = 0;
  int budget = p.halfmove_clock + 1;
  for (const KeyNode* n = p.visited.get(); n != nullptr && budget > 0; n = n->prev.get(), --budget)
    if (n->key == now) ++seen;
  return std::max(seen, 1);
}

// All positions visited, as a multiset.
inline std::map<std::string, int> position_key_counts(const Position& p) {
  std::map<std::string, int> out;
  for (const KeyNode* n = p.visited.get(); n != nullptr; n = n->prev.get()) {
    std::string k(n->key.placement.begin(), n->key.placement.end());
    k += n->key.to_move == PlayerSide::First ? 'w' : 'b';
    k += static_cast<char>('0' + n->key.castling);
    k += static_cast<char>('0' + n->key.ep_file + 1);
    ++out[k];
  }
  return out;
}

inline bool insufficient_material(const Squares& sq) {
  int minors = 0;
  int bishops_light = 0, bishops_dark = 0;
  for (int i = 0; i < 64; ++i) {
    const char c = sq[static_cast<std::size_t>(i)];
    if (c == '.') continue;
    switch (kind_of(c)) {
      case 'k': break;
      case 'n': ++minors; break;
      case 'b':
        ++minors;
        ((file_of(i) + rank_of(i)) % 2 ? bishops_light : bishops_dark)++;
        break;
      default: return false;
    }
  }
  if (minors <= 1) return true;
  // Only bishops, all on one square colour.
  int knights = minors - bishops_light - bishops_dark;
  return knights == 0 && (bishops_light == 0 || bishops_dark == 0);
}

inline Outcome status(const Position& p) {
  if (legal_specs(p).empty()) return in_check(p) ? win_for(opponent(p.side)) : Outcome::Draw;
  if (repetitions(p) >= 3) return Outcome::Draw;
  if (p.config.fifty_move_rule && p.halfmove_clock >= 100) return Outcome::Draw;
  if (p.config.insufficient_material && insufficient_material(p.squares)) return Outcome::Draw;
  return Outcome::Ongoing;
}

inline std::vector<std::string> legal_tokens(const Position& p) {
  std::vector<std::string> out;
  for (const auto& m : legal_specs(p)) out.push_back(uci(m));
  return grid::sorted(std::move(out));
}

inline bool token_syntax_ok(std::string_view tok) {
  if (tok.size() != 4 && tok.size() != 5) return false;
  if (!parse_square(tok.substr(0, 2), 8, 8) || !parse_square(tok.substr(2, 2), 8, 8)) return false;
  return tok.size() == 4 || std::string_view("qrbn").find(tok[4]) != std::string_view::npos;
}

inline Position play(const Position& p, std::string_view tok) {
  if (!token_syntax_ok(tok)) throw IllegalMove(std::string(tok), "malformed move token");
  const int from = square_at(tok[0] - 'a', tok[1] - '1');
  if (!owned_by(p.squares[static_cast<std::size_t>(from)], p.side))
    throw IllegalMove(std::string(tok), "no piece of the side to move on the origin square");
  std::vector<MoveSpec> pseudo;
  pseudo_moves(p, pseudo);
  for (const auto& m : pseudo) {
    if (uci(m) != tok) continue;
    if (!leaves_king_safe(p, m)) throw IllegalMove(std::string(tok), "move leaves own king in check");
    return with_visit(make(p, m));
  }
  const char piece = kind_of(p.squares[static_cast<std::size_t>(from)]);
  if (piece == 'k' && std::abs(file_of(from) - (tok[2] - 'a')) == 2)
    throw IllegalMove(std::string(tok), "castling not allowed: rights lost, path blocked or king passes through check");
  if (piece == 'p' && tok.size() == 4 && (tok[3] == '8' || tok[3] == '1'))
    throw IllegalMove(std::string(tok), "pawn reaching the last rank must promote");
  throw IllegalMove(std::string(tok), "piece cannot move that way");
}

inline Position from_fen(std::string_view fen, Config config = {}) {
  std::istringstream in{std::string(fen)};
  std::string placement, side, castling, ep;
  int half = 0, full = 1;
  if (!(in >> placement >> side >> castling >> ep)) throw ParseError("FEN needs at least four fields");
  if (!(in >> half)) half = 0;
  if (!(in >> full)) full = 1;
  Position p;
  p.config = config;
  p.squares.fill('.');
  int rank = 7, file = 0;
  for (char c : placement) {
    if (c == '/') {
      if (file != 8) throw ParseError("FEN rank does not have 8 files");
      --rank;
      file = 0;
    } else if (c >= '1' && c <= '8') {
      file += c - '0';
    } else if (std::string_view("pnbrqkPNBRQK").find(c) != std::string_view::npos) {
      if (file > 7 || rank < 0) throw ParseError("FEN placement overflows the board");
      p.squares[static_cast<std::size_t>(square_at(file, rank))] = c;
      ++file;
    } else {
      throw ParseError(std::string("bad FEN character '") + c + "'");
    }
    if (file > 8) throw ParseError("FEN rank has more than 8 files");
  }
  if (rank != 0 || file != 8) throw ParseError("FEN placement must describe 8 ranks");
  if (side == "w") p.side = PlayerSide::First;
  else if (side == "b") p.side = PlayerSide::Second;
  else throw ParseError("FEN side to move must be w or b");
  p.castling = 0;
  if (castling != "-") {
    for (char c : castling) {
      switch (c) {
        case 'K': p.castling |= kWhiteKingside; break;
        case 'Q': p.castling |= kWhiteQueenside; break;
        case 'k': p.castling |= kBlackKingside; break;
        case 'q': p.castling |= kBlackQueenside; break;
        default: throw ParseError("bad FEN castling field");
      }
    }
  }
  p.ep_square = -1;
  if (ep != "-") {
    const auto s = parse_square(ep, 8, 8);
    if (!s || (s->rank != 2 && s->rank != 5)) throw ParseError("bad FEN en-passant square");
    const int target = square_at(s->file, s->rank);
    if (ep_capturer_present(p.squares, target, p.side)) p.ep_square = static_cast<std::int8_t>(target);
  }
  p.halfmove_clock = half;
  p.fullmove_number = full;
  return with_visit(p);
}

inline std::string to_fen(const Position& p) {
  std::string out;
  for (int rank = 7; rank >= 0; --rank) {
    int empty = 0;
    for (int file = 0; file < 8; ++file) {
      const char c = p.squares[static_cast<std::size_t>(square_at(file, rank))];
      if (c == '.') {
        ++empty;
        continue;
      }
      if (empty) out += static_cast<char>('0' + empty);
      empty = 0;
      out += c;
    }
    if (empty) out += static_cast<char>('0' + empty);
    if (rank) out += '/';
  }
  out += p.side == PlayerSide::First ? " w " : " b ";
  std::string castle;
  if (p.castling & kWhiteKingside) castle += 'K';
  if (p.castling & kWhiteQueenside) castle += 'Q';
  if (p.castling & kBlackKingside) castle += 'k';
  if (p.castling & kBlackQueenside) castle += 'q';
  out += castle.empty() ? "-" : castle;
  out += ' ';
  out += p.ep_square < 0 ? "-" : square_token({file_of(p.ep_square), rank_of(p.ep_square)});
  out += ' ' + std::to_string(p.halfmove_clock) + ' ' + std::to_string(p.fullmove_number);
  return out;
}

inline Position initial_position(Config config = {}) { return from_fen(kStartFen, config); }

inline std::string encode_rows(const Position& p) { return grid::encode_rows(p.squares, 8); }

inline std::uint64_t perft(const Position& p, int depth) {
  if (depth == 0) return 1;
  const auto moves = legal_specs(p);
  if (depth == 1) return moves.size();
  std::uint64_t n = 0;
  for (const auto& m : moves) n += perft(make(p, m), depth - 1);
  return n;
}

// Material balance from White's point of view (P=1, N=B=3, R=5, Q=9).
inline int material(const Squares& sq) {
  int score = 0;
  for (char c : sq) {
    int v = 0;
    switch (kind_of(c)) {
      case 'p': v = 1; break;
      case 'n':
      case 'b': v = 3; break;
      case 'r': v = 5; break;
      case 'q': v = 9; break;
      default: break;
    }
    score += is_white(c) ? v : -v;
  }
  return score;
}

}  // namespace arena::chess
