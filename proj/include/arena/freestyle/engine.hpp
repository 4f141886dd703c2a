#pragma once

#include <climits>
#include <memory>
#include <optional>
#include <sstream>
#include <string>
#include <utility>
#include <vector>

#include "arena/freestyle/ruleset.hpp"
#include "arena/games/grid.hpp"
#include "arena/state.hpp"

// Interpreter for a validated RuleSet on the 5x5 board. Placement tokens are
// "<square>" for marks and "<square>=<value>" for integer pieces; "pass" is
// the only move when the side to move has no placement but the game goes on.
namespace arena::freestyle {

inline constexpr std::string_view kPass = "pass";

inline std::size_t idx(int file, int rank) { return static_cast<std::size_t>(rank * kBoardSide + file); }

inline const RuleSet& rules_of(const Board& b) { return *b.rules; }

inline Board initial_board(const RuleSet& rules) {
  validate(rules);
  Board b;
  b.rules = std::make_shared<const RuleSet>(rules);
  return b;
}

inline bool placement_allowed(const Board& b, PlayerSide side, int file, int rank) {
  if (b.cells[idx(file, rank)].owner >= 0) return false;
  const Placement& law = *rules_of(b).placement;
  switch (law.law) {
    case PlacementLaw::AnyEmpty: return true;
    case PlacementLaw::Columns:
      return file == (side == PlayerSide::First ? law.first_column : law.second_column);
    case PlacementLaw::Adjacent: {
      bool any = false;
      for (const Cell& c : b.cells) any = any || c.owner >= 0;
      if (!any) return true;
      for (int dr = -1; dr <= 1; ++dr)
        for (int df = -1; df <= 1; ++df) {
          const int f = file + df, r = rank + dr;
          if ((df || dr) && f >= 0 && f < kBoardSide && r >= 0 && r < kBoardSide && b.cells[idx(f, r)].owner >= 0)
            return true;
        }
      return false;
    }
  }
  return false;
}

inline int remaining_budget(const Board& b, PlayerSide side) {
  const Pieces& p = *rules_of(b).pieces;
  if (p.domain != PieceDomain::Integers || !p.budget) return INT_MAX;
  const int used = p.scope == BudgetScope::PerPlayer ? b.spent[static_cast<std::size_t>(side_index(side))]
                                                     : b.spent[0] + b.spent[1];
  return *p.budget - used;
}

inline bool can_place(const Board& b, PlayerSide side) {
  const Pieces& p = *rules_of(b).pieces;
  if (p.domain == PieceDomain::Integers && remaining_budget(b, side) < p.min_value) return false;
  for (int r = 0; r < kBoardSide; ++r)
    for (int f = 0; f < kBoardSide; ++f)
      if (placement_allowed(b, side, f, r)) return true;
  return false;
}

inline bool termination_reached(const Board& b) {
  const RuleSet& rules = rules_of(b);
  switch (rules.termination->kind) {
    case TerminationKind::BoardFull: {
      bool open = false;
      for (int r = 0; r < kBoardSide && !open; ++r)
        for (int f = 0; f < kBoardSide && !open; ++f)
          open = placement_allowed(b, PlayerSide::First, f, r) || placement_allowed(b, PlayerSide::Second, f, r);
      if (!open) return true;
      break;
    }
    case TerminationKind::RoundCount:
      if (b.rounds_played >= rules.termination->rounds) return true;
      break;
    case TerminationKind::BudgetExhausted:
      if (remaining_budget(b, PlayerSide::First) <= 0 && remaining_budget(b, PlayerSide::Second) <= 0) return true;
      break;
  }
  return !(can_place(b, PlayerSide::First) || can_place(b, PlayerSide::Second));
}

// Owners of the longest owned line of at least k pieces, as a pair of flags.
inline std::pair<bool, bool> lines_of(const Board& b, int k) {
  std::array<char, kCells> owners{};
  for (std::size_t i = 0; i < owners.size(); ++i)
    owners[i] = b.cells[i].owner < 0 ? '.' : static_cast<char>('0' + b.cells[i].owner);
  bool first = false, second = false;
  grid::for_each_run(owners, kBoardSide, [&](char c, int len) {
    if (len >= k) (c == '0' ? first : second) = true;
  });
  return {first, second};
}

inline std::array<int, 2> piece_counts(const Board& b) {
  std::array<int, 2> n{0, 0};
  for (const Cell& c : b.cells)
    if (c.owner >= 0) ++n[static_cast<std::size_t>(c.owner)];
  return n;
}

// Rows won by each side, comparing the sum of each side's values per row.
inline std::array<int, 2> row_points(const Board& b) {
  std::array<int, 2> pts{0, 0};
  for (int r = 0; r < kBoardSide; ++r) {
    int sum[2] = {0, 0};
    for (int f = 0; f < kBoardSide; ++f) {
      const Cell& c = b.cells[idx(f, r)];
      if (c.owner >= 0) sum[c.owner] += c.value;
    }
    if (sum[0] > sum[1]) ++pts[0];
    else if (sum[1] > sum[0]) ++pts[1];
  }
  return pts;
}

inline Outcome compare(int first, int second) {
  if (first > second) return Outcome::FirstWins;
  if (second > first) return Outcome::SecondWins;
  return Outcome::Draw;
}

// Applies the win condition to a terminated board.
inline Outcome score(const Board& b, PlayerSide to_move) {
  const RuleSet& rules = rules_of(b);
  if (rules.win->kind == WinKind::Line) {
    const auto [first, second] = lines_of(b, rules.win->line_length);
    if (first && second) return win_for(opponent(to_move));
    if (first) return Outcome::FirstWins;
    if (second) return Outcome::SecondWins;
  }
  if (!termination_reached(b)) throw NotTerminal();
  switch (rules.win->kind) {
    case WinKind::Line: return Outcome::Draw;
    case WinKind::Majority: {
      const auto n = piece_counts(b);
      return compare(n[0], n[1]);
    }
    case WinKind::RowPoints: {
      const auto pts = row_points(b);
      return compare(pts[0], pts[1]);
    }
  }
  return Outcome::Draw;
}

inline Outcome status(const Board& b, PlayerSide to_move) {
  const RuleSet& rules = rules_of(b);
  if (rules.win->kind == WinKind::Line) {
    const auto [first, second] = lines_of(b, rules.win->line_length);
    if (first || second) return score(b, to_move);
  }
  return termination_reached(b) ? score(b, to_move) : Outcome::Ongoing;
}

struct Placed {
  Square square;
  int value = 0;
};

inline std::optional<Placed> parse_placement(std::string_view tok, const RuleSet& rules) {
  const bool integers = rules.pieces && rules.pieces->domain == PieceDomain::Integers;
  const auto eq = tok.find('=');
  if (integers != (eq != std::string_view::npos)) return std::nullopt;
  const auto sq = grid::parse_cell(tok.substr(0, eq), kBoardSide);
  if (!sq) return std::nullopt;
  Placed p{*sq, 0};
  if (integers) {
    const auto digits = tok.substr(eq + 1);
    if (digits.empty() || digits.size() > 2) return std::nullopt;
    for (char c : digits) {
      if (c < '0' || c > '9') return std::nullopt;
      p.value = p.value * 10 + (c - '0');
    }
    if (digits.size() == 2 && digits[0] == '0') return std::nullopt;
  }
  return p;
}

inline bool token_syntax_ok(std::string_view tok, const RuleSet& rules) {
  return tok == kPass || parse_placement(tok, rules).has_value();
}

inline std::vector<std::string> legal_tokens(const Board& b, PlayerSide side) {
  const Pieces& p = *rules_of(b).pieces;
  std::vector<std::string> out;
  const int hi = p.domain == PieceDomain::Integers ? std::min(p.max_value, remaining_budget(b, side)) : 0;
  for (int r = 0; r < kBoardSide; ++r)
    for (int f = 0; f < kBoardSide; ++f) {
      if (!placement_allowed(b, side, f, r)) continue;
      const std::string sq = square_token({f, r});
      if (p.domain == PieceDomain::Marks) {
        out.push_back(sq);
      } else {
        for (int v = p.min_value; v <= hi; ++v) out.push_back(sq + "=" + std::to_string(v));
      }
    }
  if (out.empty()) out.emplace_back(kPass);
  return grid::sorted(std::move(out));
}

inline std::pair<Board, PlayerSide> play(const Board& b, PlayerSide side, std::string_view tok) {
  const RuleSet& rules = rules_of(b);
  if (tok == kPass) {
    if (can_place(b, side)) throw IllegalMove(std::string(tok), "cannot pass while a placement is available");
    Board next = b;
    ++next.rounds_played;
    return {next, opponent(side)};
  }
  const auto placed = parse_placement(tok, rules);
  if (!placed) throw IllegalMove(std::string(tok), "malformed placement token");
  const auto [sq, value] = *placed;
  if (b.cells[idx(sq.file, sq.rank)].owner >= 0) throw IllegalMove(std::string(tok), "cell is occupied");
  if (!placement_allowed(b, side, sq.file, sq.rank))
    throw IllegalMove(std::string(tok), "placement law forbids this cell");
  const Pieces& p = *rules.pieces;
  if (p.domain == PieceDomain::Integers) {
    if (value < p.min_value || value > p.max_value) throw IllegalMove(std::string(tok), "value outside the piece range");
    if (value > remaining_budget(b, side)) throw IllegalMove(std::string(tok), "value exceeds the remaining budget");
  }
  Board next = b;
  const auto me = static_cast<std::int8_t>(side_index(side));
  next.cells[idx(sq.file, sq.rank)] = Cell{me, static_cast<std::int8_t>(value)};
  next.spent[static_cast<std::size_t>(me)] += value;
  ++next.rounds_played;
  if (*rules.effect == Effect::FlipNeighbors) {
    for (auto [df, dr] : {std::pair{1, 0}, std::pair{-1, 0}, std::pair{0, 1}, std::pair{0, -1}}) {
      const int f = sq.file + df, r = sq.rank + dr;
      if (f < 0 || f >= kBoardSide || r < 0 || r >= kBoardSide) continue;
      Cell& c = next.cells[idx(f, r)];
      if (c.owner >= 0) c.owner = static_cast<std::int8_t>(1 - c.owner);
    }
  }
  return {next, opponent(side)};
}

inline char owner_char(int owner) { return owner == 0 ? 'x' : 'o'; }

// Marks render one character per cell; integer pieces render as
// space-separated tokens ("x7", "o12", "."), with "x?"/"o?" for values the
// viewer may not see yet.
inline std::string encode_rows(const Board& b, std::optional<PlayerSide> viewer, bool terminal) {
  const RuleSet& rules = rules_of(b);
  const bool integers = rules.pieces->domain == PieceDomain::Integers;
  const bool mask = viewer && !terminal && *rules.visibility == Visibility::Hidden;
  std::string out;
  for (int r = kBoardSide - 1; r >= 0; --r) {
    for (int f = 0; f < kBoardSide; ++f) {
      const Cell& c = b.cells[idx(f, r)];
      if (integers && f) out += ' ';
      if (c.owner < 0) {
        out += '.';
        continue;
      }
      out += owner_char(c.owner);
      if (integers) {
        if (mask && c.owner != side_index(*viewer)) out += '?';
        else out += std::to_string(c.value);
      }
    }
    out += '\n';
  }
  return out;
}

inline Board decode_rows(const std::vector<std::string>& rows, const RuleSet& rules) {
  Board b = initial_board(rules);
  const bool integers = rules.pieces->domain == PieceDomain::Integers;
  if (static_cast<int>(rows.size()) != kBoardSide) throw ParseError("expected 5 board rows");
  for (int i = 0; i < kBoardSide; ++i) {
    const int r = kBoardSide - 1 - i;
    std::vector<std::string> cells;
    if (integers) {
      std::istringstream in(rows[static_cast<std::size_t>(i)]);
      for (std::string t; in >> t;) cells.push_back(t);
    } else {
      for (char c : rows[static_cast<std::size_t>(i)]) cells.emplace_back(1, c);
    }
    if (static_cast<int>(cells.size()) != kBoardSide) throw ParseError("board row has the wrong width");
    for (int f = 0; f < kBoardSide; ++f) {
      const std::string& t = cells[static_cast<std::size_t>(f)];
      if (t == ".") continue;
      if (t[0] != 'x' && t[0] != 'o') throw ParseError("unexpected cell '" + t + "'");
      Cell c;
      c.owner = t[0] == 'x' ? 0 : 1;
      if (integers) {
        if (t.size() < 2 || t.size() > 3 || t.find_first_not_of("0123456789", 1) != std::string::npos)
          throw ParseError("cannot decode hidden or malformed cell '" + t + "'");
        c.value = static_cast<std::int8_t>(std::stoi(t.substr(1)));
      } else if (t.size() != 1) {
        throw ParseError("unexpected cell '" + t + "'");
      }
      b.cells[idx(f, r)] = c;
      b.spent[static_cast<std::size_t>(c.owner)] += c.value;
      ++b.rounds_played;
    }
  }
  return b;
}

}  // namespace arena::freestyle
