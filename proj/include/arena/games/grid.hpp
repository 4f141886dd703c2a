#pragma once

#include <algorithm>
#include <optional>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

#include "arena/core.hpp"

// Helpers shared by the square-grid placement games.
namespace arena::grid {

// Legal-move lists are ordered lexicographically by token.
inline std::vector<std::string> sorted(std::vector<std::string> tokens) {
  std::sort(tokens.begin(), tokens.end());
  return tokens;
}

// Rows are printed top (highest rank) first, one character per cell.
template <class Cells>
std::string encode_rows(const Cells& cells, int side) {
  std::string out;
  out.reserve(static_cast<std::size_t>(side * (side + 1)));
  for (int rank = side - 1; rank >= 0; --rank) {
    for (int file = 0; file < side; ++file) out += cells[static_cast<std::size_t>(rank * side + file)];
    out += '\n';
  }
  return out;
}

template <class Cells>
void decode_rows(const std::vector<std::string>& rows, int side, std::string_view alphabet, Cells& cells) {
  if (static_cast<int>(rows.size()) != side)
    throw ParseError("expected " + std::to_string(side) + " board rows, got " + std::to_string(rows.size()));
  for (int i = 0; i < side; ++i) {
    const std::string& row = rows[static_cast<std::size_t>(i)];
    if (static_cast<int>(row.size()) != side) throw ParseError("board row '" + row + "' has the wrong width");
    const int rank = side - 1 - i;
    for (int file = 0; file < side; ++file) {
      const char c = row[static_cast<std::size_t>(file)];
      if (c != '.' && alphabet.find(c) == std::string_view::npos)
        throw ParseError(std::string("unexpected board character '") + c + "'");
      cells[static_cast<std::size_t>(rank * side + file)] = c;
    }
  }
}

inline constexpr std::pair<int, int> kLineDirections[4] = {{1, 0}, {0, 1}, {1, 1}, {1, -1}};

// Longest-run scan over the four line directions. Calls on_run(piece, length)
// once for every maximal run of identical non-empty cells.
template <class Cells, class F>
void for_each_run(const Cells& cells, int side, F&& on_run) {
  auto at = [&](int f, int r) { return cells[static_cast<std::size_t>(r * side + f)]; };
  for (auto [df, dr] : kLineDirections) {
    for (int r = 0; r < side; ++r) {
      for (int f = 0; f < side; ++f) {
        const char c = at(f, r);
        if (c == '.') continue;
        const int pf = f - df, pr = r - dr;
        if (pf >= 0 && pf < side && pr >= 0 && pr < side && at(pf, pr) == c) continue;  // not a run start
        int len = 0;
        int cf = f, cr = r;
        while (cf >= 0 && cf < side && cr >= 0 && cr < side && at(cf, cr) == c) {
          ++len;
          cf += df;
          cr += dr;
        }
        on_run(c, len);
      }
    }
  }
}

inline std::optional<Square> parse_cell(std::string_view token, int side) {
  return parse_square(token, side, side);
}

}  // namespace arena::grid
