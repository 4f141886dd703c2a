#pragma once

#include <sstream>
#include <string>
#include <vector>

#include "arena/record.hpp"

// Replay rendering: ASCII frames for the terminal, SVG frames for files.
namespace arena::tournament {

inline std::string board_rows(const GameState& s) {
  std::string text = encode_board(s);
  // Drop the to_move / fen trailer; frames carry that in their header.
  std::string out;
  std::istringstream in(text);
  for (std::string line; std::getline(in, line);)
    if (line.rfind("to_move:", 0) != 0 && line.rfind("fen:", 0) != 0) out += line + "\n";
  return out;
}

struct Frame {
  int round = 0;
  std::string caption;
  GameState state;
};

// Replays the record (throwing CorruptRecord on divergence) and returns one
// frame per position, the initial one included.
inline std::vector<Frame> replay_frames(const GameRecord& r) {
  std::vector<Frame> frames;
  verify_replay(r, [&](int round, const GameState& s) {
    std::string caption;
    if (round == 0) {
      caption = "start: " + r.first + " (first) vs " + r.second + " (second)";
    } else {
      const RoundEntry& e = r.rounds[static_cast<std::size_t>(round - 1)];
      caption = "round " + std::to_string(round) + ": " + e.player + " (" + std::string(to_string(e.side)) + ") plays " +
                e.move + ", feels " + std::string(sentiment::name(e.emotion)) + (e.fallback ? " [fallback]" : "");
    }
    frames.push_back({round, caption, s});
  });
  return frames;
}

inline std::string render_ascii(const GameRecord& r) {
  std::string out = "match " + r.match_id + " (" + std::string(display_name(r.game)) + ")\n";
  if (r.rules) out += "rules:\n" + *r.rules;
  for (const auto& n : r.negotiation) out += "negotiation: " + std::string(to_string(n.speaker)) + " " + n.verdict + "\n";
  if (r.termination == Termination::NegotiationFailed) {
    out += "negotiation failed (" + r.negotiation_failure.value_or("?") + "), recorded as a draw\n";
    return out;
  }
  for (const auto& f : replay_frames(r)) {
    out += "\n" + f.caption + "\n" + board_rows(f.state);
    if (f.round > 0 && !r.rounds[static_cast<std::size_t>(f.round - 1)].analysis.empty())
      out += "  \"" + r.rounds[static_cast<std::size_t>(f.round - 1)].analysis + "\"\n";
  }
  out += "\nresult: " + std::string(to_string(r.outcome)) + " after " + std::to_string(r.round_count) + " rounds";
  if (r.termination == Termination::Forfeit) out += " (forfeit by " + std::string(to_string(*r.forfeit_side)) + ")";
  out += "\n";
  return out;
}

namespace detail {

inline std::string xml_escape(const std::string& s) {
  std::string out;
  for (char c : s) {
    switch (c) {
      case '&': out += "&amp;"; break;
      case '<': out += "&lt;"; break;
      case '>': out += "&gt;"; break;
      case '"': out += "&quot;"; break;
      default: out += c;
    }
  }
  return out;
}

inline const char* chess_glyph(char c) {
  switch (c) {
    case 'K': return "♔";
    case 'Q': return "♕";
    case 'R': return "♖";
    case 'B': return "♗";
    case 'N': return "♘";
    case 'P': return "♙";
    case 'k': return "♚";
    case 'q': return "♛";
    case 'r': return "♜";
    case 'b': return "♝";
    case 'n': return "♞";
    case 'p': return "♟";
  }
  return "";
}

}  // namespace detail

// One board as a standalone SVG document.
inline std::string render_svg(const GameState& s, const std::string& caption = {}) {
  constexpr int cell = 36, margin = 24, header = 28;
  // Rows as cell tokens: single characters, or space-separated for
  // integer Free-Style boards.
  std::vector<std::vector<std::string>> rows;
  std::istringstream in(board_rows(s));
  for (std::string line; std::getline(in, line);) {
    std::vector<std::string> cells;
    if (line.find(' ') != std::string::npos) {
      std::istringstream ls(line);
      for (std::string t; ls >> t;) cells.push_back(t);
    } else {
      for (char c : line) cells.emplace_back(1, c);
    }
    rows.push_back(cells);
  }
  const int n = static_cast<int>(rows.size());
  const int size = n * cell;
  std::ostringstream o;
  o << "<svg xmlns=\"http://www.w3.org/2000/svg\" width=\"" << size + 2 * margin << "\" height=\""
    << size + 2 * margin + header << "\" font-family=\"sans-serif\">\n";
  o << "<rect width=\"100%\" height=\"100%\" fill=\"white\"/>\n";
  o << "<text x=\"" << margin << "\" y=\"18\" font-size=\"12\">" << detail::xml_escape(caption) << "</text>\n";
  const bool chess = s.kind() == GameKind::Chess;
  const char* board_fill = s.kind() == GameKind::Reversi ? "#2e7d32" : s.kind() == GameKind::Gomoku ? "#deb887" : "#f5f5f5";
  for (int i = 0; i < n; ++i) {
    for (int f = 0; f < n; ++f) {
      const int x = margin + f * cell, y = header + margin + i * cell;
      const int rank = n - 1 - i;
      const char* fill = chess ? (((rank + f) % 2 == 0) ? "#b58863" : "#f0d9b5") : board_fill;
      o << "<rect x=\"" << x << "\" y=\"" << y << "\" width=\"" << cell << "\" height=\"" << cell << "\" fill=\""
        << fill << "\" stroke=\"#555\" stroke-width=\"0.5\"/>\n";
      const std::string& t = rows[static_cast<std::size_t>(i)][static_cast<std::size_t>(f)];
      if (t == ".") continue;
      const int cx = x + cell / 2, cy = y + cell / 2;
      if (chess) {
        o << "<text x=\"" << cx << "\" y=\"" << cy + 10 << "\" font-size=\"28\" text-anchor=\"middle\">"
          << detail::chess_glyph(t[0]) << "</text>\n";
      } else if (s.kind() == GameKind::Gomoku || s.kind() == GameKind::Reversi) {
        o << "<circle cx=\"" << cx << "\" cy=\"" << cy << "\" r=\"" << cell / 2 - 4 << "\" fill=\""
          << (t == "b" ? "black" : "white") << "\" stroke=\"black\"/>\n";
      } else {
        o << "<text x=\"" << cx << "\" y=\"" << cy + 7 << "\" font-size=\"" << (t.size() > 1 ? 16 : 22)
          << "\" text-anchor=\"middle\" fill=\"" << (t[0] == 'x' ? "#c62828" : "#1565c0") << "\">"
          << detail::xml_escape(t) << "</text>\n";
      }
    }
  }
  for (int i = 0; i < n; ++i) {
    o << "<text x=\"" << margin / 2 << "\" y=\"" << header + margin + i * cell + cell / 2 + 4
      << "\" font-size=\"10\" text-anchor=\"middle\">" << n - i << "</text>\n";
    o << "<text x=\"" << margin + i * cell + cell / 2 << "\" y=\"" << header + margin + size + 14
      << "\" font-size=\"10\" text-anchor=\"middle\">" << static_cast<char>('a' + i) << "</text>\n";
  }
  o << "</svg>\n";
  return o.str();
}

}  // namespace arena::tournament
