#pragma once

#include <optional>
#include <sstream>
#include <string>
#include <string_view>
#include <vector>

#include "arena/errors.hpp"

// Rule vocabulary for the negotiated 5x5 game. A RuleSet is a closed menu of
// piece domains, placement laws, effects, visibility, termination predicates
// and scoring functions. Its canonical text form is a block of `FIELD: value`
// lines, the same grammar agents use when negotiating.
namespace arena::freestyle {

inline constexpr int kBoardSide = 5;
inline constexpr int kCells = kBoardSide * kBoardSide;

enum class PieceDomain { Marks, Integers };
enum class BudgetScope { PerPlayer, Global };

struct Pieces {
  PieceDomain domain = PieceDomain::Marks;
  int min_value = 0;
  int max_value = 0;
  std::optional<int> budget;
  BudgetScope scope = BudgetScope::PerPlayer;
  friend bool operator==(const Pieces&, const Pieces&) = default;
};

enum class PlacementLaw { AnyEmpty, Columns, Adjacent };

struct Placement {
  PlacementLaw law = PlacementLaw::AnyEmpty;
  // Columns law only: 0-based column each side may place on.
  int first_column = 0;
  int second_column = 0;
  friend bool operator==(const Placement&, const Placement&) = default;
};

enum class Effect { None, FlipNeighbors };
enum class Visibility { Open, Hidden };

enum class TerminationKind { BoardFull, RoundCount, BudgetExhausted };
struct Termination {
  TerminationKind kind = TerminationKind::BoardFull;
  int rounds = 0;
  friend bool operator==(const Termination&, const Termination&) = default;
};

enum class WinKind { Majority, Line, RowPoints };
struct WinCondition {
  WinKind kind = WinKind::Majority;
  int line_length = 0;
  friend bool operator==(const WinCondition&, const WinCondition&) = default;
};

// Fields are optional so a partially specified proposal can be represented
// and rejected by validate() with the missing field's name.
struct RuleSet {
  std::optional<Pieces> pieces;
  std::optional<Placement> placement;
  std::optional<Effect> effect;
  std::optional<Visibility> visibility;
  std::optional<Termination> termination;
  std::optional<WinCondition> win;
  friend bool operator==(const RuleSet&, const RuleSet&) = default;
};

namespace detail {

inline std::string lower(std::string_view s) {
  std::string out(s);
  for (char& c : out)
    if (c >= 'A' && c <= 'Z') c = static_cast<char>(c - 'A' + 'a');
  return out;
}

inline std::string trim(std::string_view s) {
  const auto b = s.find_first_not_of(" \t\r");
  if (b == std::string_view::npos) return {};
  const auto e = s.find_last_not_of(" \t\r");
  return std::string(s.substr(b, e - b + 1));
}

inline std::vector<std::string> words(std::string_view s) {
  std::vector<std::string> out;
  std::istringstream in{std::string(s)};
  for (std::string w; in >> w;) out.push_back(lower(w));
  return out;
}

inline int to_int(const std::string& w, const char* field) {
  if (w.empty() || w.size() > 4) throw ParseError(std::string(field) + ": expected a number");
  int v = 0;
  for (char c : w) {
    if (c < '0' || c > '9') throw ParseError(std::string(field) + ": expected a number, got '" + w + "'");
    v = v * 10 + (c - '0');
  }
  return v;
}

inline int to_column(const std::string& w) {
  if (w.size() != 1 || w[0] < 'a' || w[0] > 'z')
    throw ParseError("PLACEMENT: expected a column letter, got '" + w + "'");
  return w[0] - 'a';
}

}  // namespace detail

inline std::string to_text(const RuleSet& r) {
  std::ostringstream out;
  if (r.pieces) {
    const Pieces& p = *r.pieces;
    out << "PIECES: ";
    if (p.domain == PieceDomain::Marks) {
      out << "marks";
    } else {
      out << "integers " << p.min_value << "-" << p.max_value;
      if (p.budget)
        out << " budget " << *p.budget << (p.scope == BudgetScope::PerPlayer ? " per-player" : " global");
    }
    out << "\n";
  }
  if (r.placement) {
    out << "PLACEMENT: ";
    switch (r.placement->law) {
      case PlacementLaw::AnyEmpty: out << "any-empty"; break;
      case PlacementLaw::Adjacent: out << "adjacent"; break;
      case PlacementLaw::Columns:
        out << "columns " << static_cast<char>('a' + r.placement->first_column) << " "
            << static_cast<char>('a' + r.placement->second_column);
        break;
    }
    out << "\n";
  }
  if (r.effect) out << "EFFECT: " << (*r.effect == Effect::None ? "none" : "flip-neighbors") << "\n";
  if (r.visibility) out << "VISIBILITY: " << (*r.visibility == Visibility::Open ? "open" : "hidden") << "\n";
  if (r.termination) {
    out << "TERMINATION: ";
    switch (r.termination->kind) {
      case TerminationKind::BoardFull: out << "board-full"; break;
      case TerminationKind::RoundCount: out << "rounds " << r.termination->rounds; break;
      case TerminationKind::BudgetExhausted: out << "budget-exhausted"; break;
    }
    out << "\n";
  }
  if (r.win) {
    out << "WIN: ";
    switch (r.win->kind) {
      case WinKind::Majority: out << "majority"; break;
      case WinKind::Line: out << "line " << r.win->line_length; break;
      case WinKind::RowPoints: out << "row-points"; break;
    }
    out << "\n";
  }
  return out.str();
}

// Parses the `FIELD: value` grammar. Blank lines are skipped; any other line
// that is not a known field is an error. Missing fields are left unset.
inline RuleSet parse_rules(std::string_view text, BudgetScope default_scope = BudgetScope::PerPlayer) {
  RuleSet r;
  std::istringstream in{std::string(text)};
  for (std::string line; std::getline(in, line);) {
    line = detail::trim(line);
    if (line.empty()) continue;
    const auto colon = line.find(':');
    if (colon == std::string::npos) throw ParseError("expected 'FIELD: value', got '" + line + "'");
    const std::string field = detail::lower(detail::trim(line.substr(0, colon)));
    const auto w = detail::words(line.substr(colon + 1));
    if (w.empty()) throw ParseError(field + ": missing value");
    auto dup = [&](bool set) {
      if (set) throw ParseError("duplicate field " + field);
    };
    if (field == "pieces") {
      dup(r.pieces.has_value());
      Pieces p;
      if (w[0] == "marks" && w.size() == 1) {
        p.domain = PieceDomain::Marks;
      } else if (w[0] == "integers" && w.size() >= 2) {
        p.domain = PieceDomain::Integers;
        const auto dash = w[1].find('-');
        if (dash == std::string::npos) throw ParseError("PIECES: expected <min>-<max>");
        p.min_value = detail::to_int(w[1].substr(0, dash), "PIECES");
        p.max_value = detail::to_int(w[1].substr(dash + 1), "PIECES");
        p.scope = default_scope;
        std::size_t i = 2;
        if (i < w.size()) {
          if (w[i] != "budget" || i + 1 >= w.size()) throw ParseError("PIECES: expected 'budget <n>'");
          p.budget = detail::to_int(w[i + 1], "PIECES");
          i += 2;
          if (i < w.size()) {
            if (w[i] == "per-player") p.scope = BudgetScope::PerPlayer;
            else if (w[i] == "global") p.scope = BudgetScope::Global;
            else throw ParseError("PIECES: unknown budget scope '" + w[i] + "'");
            ++i;
          }
        }
        if (i != w.size()) throw ParseError("PIECES: trailing text");
      } else {
        throw ParseError("PIECES: expected 'marks' or 'integers <min>-<max> ...'");
      }
      r.pieces = p;
    } else if (field == "placement") {
      dup(r.placement.has_value());
      Placement p;
      if (w[0] == "any-empty" && w.size() == 1) p.law = PlacementLaw::AnyEmpty;
      else if (w[0] == "adjacent" && w.size() == 1) p.law = PlacementLaw::Adjacent;
      else if (w[0] == "columns" && w.size() == 3) {
        p.law = PlacementLaw::Columns;
        p.first_column = detail::to_column(w[1]);
        p.second_column = detail::to_column(w[2]);
      } else {
        throw ParseError("PLACEMENT: expected any-empty, adjacent or 'columns <f> <f>'");
      }
      r.placement = p;
    } else if (field == "effect") {
      dup(r.effect.has_value());
      if (w.size() != 1) throw ParseError("EFFECT: trailing text");
      if (w[0] == "none") r.effect = Effect::None;
      else if (w[0] == "flip-neighbors") r.effect = Effect::FlipNeighbors;
      else throw ParseError("EFFECT: unknown effect '" + w[0] + "'");
    } else if (field == "visibility") {
      dup(r.visibility.has_value());
      if (w.size() != 1) throw ParseError("VISIBILITY: trailing text");
      if (w[0] == "open") r.visibility = Visibility::Open;
      else if (w[0] == "hidden") r.visibility = Visibility::Hidden;
      else throw ParseError("VISIBILITY: unknown value '" + w[0] + "'");
    } else if (field == "termination") {
      dup(r.termination.has_value());
      Termination t;
      if (w[0] == "board-full" && w.size() == 1) t.kind = TerminationKind::BoardFull;
      else if (w[0] == "budget-exhausted" && w.size() == 1) t.kind = TerminationKind::BudgetExhausted;
      else if (w[0] == "rounds" && w.size() == 2) {
        t.kind = TerminationKind::RoundCount;
        t.rounds = detail::to_int(w[1], "TERMINATION");
      } else {
        throw ParseError("TERMINATION: expected board-full, budget-exhausted or 'rounds <n>'");
      }
      r.termination = t;
    } else if (field == "win") {
      dup(r.win.has_value());
      WinCondition c;
      if (w[0] == "majority" && w.size() == 1) c.kind = WinKind::Majority;
      else if (w[0] == "row-points" && w.size() == 1) c.kind = WinKind::RowPoints;
      else if (w[0] == "line" && w.size() == 2) {
        c.kind = WinKind::Line;
        c.line_length = detail::to_int(w[1], "WIN");
      } else {
        throw ParseError("WIN: expected majority, row-points or 'line <k>'");
      }
      r.win = c;
    } else {
      throw ParseError("unknown field '" + field + "'");
    }
  }
  return r;
}

// Throws InvalidRuleSet naming the offending field (and the field it
// conflicts with, when the problem is a combination).
inline void validate(const RuleSet& r) {
  if (!r.pieces) throw InvalidRuleSet("PIECES", "", "missing");
  if (!r.placement) throw InvalidRuleSet("PLACEMENT", "", "missing");
  if (!r.effect) throw InvalidRuleSet("EFFECT", "", "missing");
  if (!r.visibility) throw InvalidRuleSet("VISIBILITY", "", "missing");
  if (!r.termination) throw InvalidRuleSet("TERMINATION", "", "missing");
  if (!r.win) throw InvalidRuleSet("WIN", "", "missing");

  const Pieces& p = *r.pieces;
  const bool integers = p.domain == PieceDomain::Integers;
  if (integers) {
    if (p.max_value < p.min_value) throw InvalidRuleSet("PIECES", "", "max below min");
    if (p.max_value > 99) throw InvalidRuleSet("PIECES", "", "values above 99 are not supported");
    if (p.budget && *p.budget < p.min_value)
      throw InvalidRuleSet("PIECES", "", "budget is below the smallest piece value");
  }
  if (r.placement->law == PlacementLaw::Columns) {
    for (int c : {r.placement->first_column, r.placement->second_column})
      if (c < 0 || c >= kBoardSide) throw InvalidRuleSet("PLACEMENT", "", "column outside the 5x5 board");
  }
  if (r.termination->kind == TerminationKind::RoundCount &&
      (r.termination->rounds < 1 || r.termination->rounds > kCells))
    throw InvalidRuleSet("TERMINATION", "PLACEMENT", "round count must lie in [1, 25]");
  if (r.termination->kind == TerminationKind::BudgetExhausted && !(integers && p.budget))
    throw InvalidRuleSet("TERMINATION", "PIECES", "budget-exhausted needs integer pieces with a budget");
  if (r.win->kind == WinKind::Line) {
    const int k = r.win->line_length;
    if (k < 2 || k > kBoardSide)
      throw InvalidRuleSet("WIN", "", "line length " + std::to_string(k) + " cannot fit a 5x5 board");
  }
  if (r.win->kind == WinKind::RowPoints && !integers)
    throw InvalidRuleSet("WIN", "PIECES", "row-points scoring needs integer pieces");
  if (*r.visibility == Visibility::Hidden && !integers)
    throw InvalidRuleSet("VISIBILITY", "PIECES", "hidden visibility needs integer pieces");
}

inline bool is_valid(const RuleSet& r) {
  try {
    validate(r);
    return true;
  } catch (const InvalidRuleSet&) {
    return false;
  }
}

// Reversi-like territory game: free drops, every placement flips the
// orthogonal neighbours, most pieces on a full board wins.
inline RuleSet flip_neighbors_rules() {
  RuleSet r;
  r.pieces = Pieces{};
  r.placement = Placement{};
  r.effect = Effect::FlipNeighbors;
  r.visibility = Visibility::Open;
  r.termination = Termination{};
  r.win = WinCondition{};
  return r;
}

// "Hidden numbers": values 0..15 on columns a and e, each side's values
// summing to at most 15, hidden until the end, one point per row won.
inline RuleSet hidden_numbers_rules(BudgetScope scope = BudgetScope::PerPlayer) {
  RuleSet r;
  r.pieces = Pieces{PieceDomain::Integers, 0, 15, 15, scope};
  r.placement = Placement{PlacementLaw::Columns, 0, 4};
  r.effect = Effect::None;
  r.visibility = Visibility::Hidden;
  r.termination = Termination{};
  r.win = WinCondition{WinKind::RowPoints, 0};
  return r;
}

// Plain-language description used in agent prompts.
inline std::string summary(const RuleSet& r) {
  std::ostringstream out;
  out << "5x5 board, coordinates a1 (bottom-left) to e5. ";
  if (r.pieces && r.pieces->domain == PieceDomain::Integers) {
    out << "Each placement puts an integer between " << r.pieces->min_value << " and "
        << r.pieces->max_value << " on the board (move token <square>=<value>, e.g. a3=7). ";
    if (r.pieces->budget)
      out << "The values placed " << (r.pieces->scope == BudgetScope::PerPlayer ? "by each player" : "by both players together")
          << " may sum to at most " << *r.pieces->budget << ". ";
  } else {
    out << "Each placement puts one of your marks on an empty cell (move token <square>, e.g. c3). ";
  }
  if (r.placement) {
    switch (r.placement->law) {
      case PlacementLaw::AnyEmpty: out << "Any empty cell may be used. "; break;
      case PlacementLaw::Adjacent: out << "After the first piece, cells must touch an occupied cell (8 directions). "; break;
      case PlacementLaw::Columns:
        out << "First places only on column " << static_cast<char>('a' + r.placement->first_column)
            << ", second only on column " << static_cast<char>('a' + r.placement->second_column) << ". ";
        break;
    }
  }
  if (r.effect && *r.effect == Effect::FlipNeighbors)
    out << "After each placement every orthogonally adjacent piece changes owner. ";
  if (r.visibility && *r.visibility == Visibility::Hidden)
    out << "Opponent values stay hidden until the game ends. ";
  if (r.termination) {
    switch (r.termination->kind) {
      case TerminationKind::BoardFull: out << "The game ends when no placeable cell is left. "; break;
      case TerminationKind::RoundCount: out << "The game ends after " << r.termination->rounds << " rounds. "; break;
      case TerminationKind::BudgetExhausted: out << "The game ends when the budget is used up. "; break;
    }
  }
  if (r.win) {
    switch (r.win->kind) {
      case WinKind::Majority: out << "Whoever owns more pieces at the end wins."; break;
      case WinKind::Line: out << "First to own " << r.win->line_length << " in a line wins."; break;
      case WinKind::RowPoints: out << "Each row is won by the higher total; more rows won wins."; break;
    }
  }
  out << " Play 'pass' only when it is the sole legal move.";
  return out.str();
}

}  // namespace arena::freestyle
