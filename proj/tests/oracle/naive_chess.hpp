#pragma once

// Deliberately slow reference move generator. Shares no code with the
// engine: own FEN reader, 10x12 mailbox, legality by "can the opponent
// capture my king after the move".

#include <array>
#include <cstdint>
#include <sstream>
#include <string>
#include <vector>

namespace oracle::chess {

struct Board {
  // 10x12 mailbox; ' ' = off-board sentinel, '.' = empty.
  std::array<char, 120> sq{};
  bool white = true;
  bool wk = false, wq = false, bk = false, bq = false;
  int ep = -1;  // mailbox index of the en-passant target square
};

inline int mbox(int file, int rank) { return 21 + rank * 10 + file; }
inline int file_of(int m) { return m % 10 - 1; }
inline int rank_of(int m) { return m / 10 - 2; }

inline std::string name(int m) {
  return std::string(1, static_cast<char>('a' + file_of(m))) + std::to_string(rank_of(m) + 1);
}

inline Board parse_fen(const std::string& fen) {
  Board b;
  b.sq.fill(' ');
  for (int r = 0; r < 8; ++r)
    for (int f = 0; f < 8; ++f) b.sq[static_cast<std::size_t>(mbox(f, r))] = '.';
  std::istringstream in(fen);
  std::string place, side, castle, ep;
  in >> place >> side >> castle >> ep;
  int rank = 7, file = 0;
  for (char c : place) {
    if (c == '/') {
      --rank;
      file = 0;
    } else if (c >= '1' && c <= '8') {
      file += c - '0';
    } else {
      b.sq[static_cast<std::size_t>(mbox(file, rank))] = c;
      ++file;
    }
  }
  b.white = side == "w";
  for (char c : castle) {
    if (c == 'K') b.wk = true;
    if (c == 'Q') b.wq = true;
    if (c == 'k') b.bk = true;
    if (c == 'q') b.bq = true;
  }
  if (ep != "-") b.ep = mbox(ep[0] - 'a', ep[1] - '1');
  return b;
}

struct Mv {
  int from, to;
  char promo = 0;
  bool castle = false, ep = false, dbl = false;
};

inline bool mine(char c, bool white) { return c != '.' && c != ' ' && ((c >= 'A' && c <= 'Z') == white); }
inline bool theirs(char c, bool white) { return c != '.' && c != ' ' && ((c >= 'A' && c <= 'Z') != white); }
inline char lowerc(char c) { return c >= 'A' && c <= 'Z' ? static_cast<char>(c + 32) : c; }

// Every move ignoring checks, plus captures that could land on a king.
inline std::vector<Mv> pseudo(const Board& b) {
  std::vector<Mv> out;
  const bool w = b.white;
  static const int knight[8] = {-21, -19, -12, -8, 8, 12, 19, 21};
  static const int king[8] = {-11, -10, -9, -1, 1, 9, 10, 11};
  static const int diag[4] = {-11, -9, 9, 11};
  static const int orth[4] = {-10, -1, 1, 10};
  for (int s = 21; s < 99; ++s) {
    const char c = b.sq[static_cast<std::size_t>(s)];
    if (!mine(c, w)) continue;
    const char k = lowerc(c);
    auto slide = [&](const int* dirs, int n, bool repeat) {
      for (int i = 0; i < n; ++i)
        for (int t = s + dirs[i];; t += dirs[i]) {
          const char d = b.sq[static_cast<std::size_t>(t)];
          if (d == ' ' || mine(d, w)) break;
          out.push_back({s, t});
          if (d != '.' || !repeat) break;
        }
    };
    if (k == 'n') slide(knight, 8, false);
    if (k == 'k') slide(king, 8, false);
    if (k == 'b' || k == 'q') slide(diag, 4, true);
    if (k == 'r' || k == 'q') slide(orth, 4, true);
    if (k == 'p') {
      const int fwd = w ? 10 : -10;
      const int last = w ? 7 : 0, start = w ? 1 : 6;
      auto add = [&](int t, bool ep, bool dbl) {
        if (rank_of(t) == last) {
          for (char p : {'q', 'r', 'b', 'n'}) out.push_back({s, t, p});
        } else {
          out.push_back({s, t, 0, false, ep, dbl});
        }
      };
      if (b.sq[static_cast<std::size_t>(s + fwd)] == '.') {
        add(s + fwd, false, false);
        if (rank_of(s) == start && b.sq[static_cast<std::size_t>(s + 2 * fwd)] == '.') add(s + 2 * fwd, false, true);
      }
      for (int side : {-1, 1}) {
        const int t = s + fwd + side;
        if (theirs(b.sq[static_cast<std::size_t>(t)], w)) add(t, false, false);
        if (t == b.ep) add(t, true, false);
      }
    }
  }
  // Castling: emptiness only here; attack conditions checked in legal().
  if (w) {
    if (b.wk && b.sq[25] == 'K' && b.sq[28] == 'R' && b.sq[26] == '.' && b.sq[27] == '.') out.push_back({25, 27, 0, true});
    if (b.wq && b.sq[25] == 'K' && b.sq[21] == 'R' && b.sq[22] == '.' && b.sq[23] == '.' && b.sq[24] == '.')
      out.push_back({25, 23, 0, true});
  } else {
    if (b.bk && b.sq[95] == 'k' && b.sq[98] == 'r' && b.sq[96] == '.' && b.sq[97] == '.') out.push_back({95, 97, 0, true});
    if (b.bq && b.sq[95] == 'k' && b.sq[91] == 'r' && b.sq[92] == '.' && b.sq[93] == '.' && b.sq[94] == '.')
      out.push_back({95, 93, 0, true});
  }
  return out;
}

inline Board play(const Board& b, const Mv& m) {
  Board n = b;
  char piece = n.sq[static_cast<std::size_t>(m.from)];
  n.sq[static_cast<std::size_t>(m.from)] = '.';
  if (m.ep) n.sq[static_cast<std::size_t>(m.to + (b.white ? -10 : 10))] = '.';
  if (m.promo) piece = b.white ? static_cast<char>(m.promo - 32) : m.promo;
  n.sq[static_cast<std::size_t>(m.to)] = piece;
  if (m.castle) {
    const bool king_side = m.to > m.from;
    const int rook_from = king_side ? m.from + 3 : m.from - 4;
    const int rook_to = king_side ? m.from + 1 : m.from - 1;
    n.sq[static_cast<std::size_t>(rook_to)] = n.sq[static_cast<std::size_t>(rook_from)];
    n.sq[static_cast<std::size_t>(rook_from)] = '.';
  }
  for (int s : {m.from, m.to}) {
    if (s == 25) n.wk = n.wq = false;
    if (s == 95) n.bk = n.bq = false;
    if (s == 21) n.wq = false;
    if (s == 28) n.wk = false;
    if (s == 91) n.bq = false;
    if (s == 98) n.bk = false;
  }
  n.ep = m.dbl ? (m.from + m.to) / 2 : -1;
  n.white = !b.white;
  return n;
}

// Is square `t` attacked by the side to move in `b`? Probe by dropping a
// dummy enemy piece there and looking for a capture.
inline bool side_to_move_attacks(const Board& b, int t) {
  Board probe = b;
  probe.ep = -1;
  probe.wk = probe.wq = probe.bk = probe.bq = false;
  probe.sq[static_cast<std::size_t>(t)] = b.white ? 'x' : 'X';
  for (const Mv& m : pseudo(probe))
    if (m.to == t) return true;
  return false;
}

inline int king_at(const Board& b, bool white) {
  for (int s = 21; s < 99; ++s)
    if (b.sq[static_cast<std::size_t>(s)] == (white ? 'K' : 'k')) return s;
  return -1;
}

inline std::vector<Mv> legal(const Board& b) {
  std::vector<Mv> out;
  Board flipped = b;
  flipped.white = !b.white;
  for (const Mv& m : pseudo(b)) {
    if (m.castle) {
      const int step = m.to > m.from ? 1 : -1;
      if (side_to_move_attacks(flipped, m.from) || side_to_move_attacks(flipped, m.from + step) ||
          side_to_move_attacks(flipped, m.to))
        continue;
    }
    const Board n = play(b, m);
    if (side_to_move_attacks(n, king_at(n, b.white))) continue;
    out.push_back(m);
  }
  return out;
}

inline std::string uci(const Mv& m) {
  std::string s = name(m.from) + name(m.to);
  if (m.promo) s += m.promo;
  return s;
}

inline std::uint64_t perft(const Board& b, int depth) {
  if (depth == 0) return 1;
  std::uint64_t n = 0;
  for (const Mv& m : legal(b)) n += depth == 1 ? 1 : perft(play(b, m), depth - 1);
  return n;
}

}  // namespace oracle::chess
