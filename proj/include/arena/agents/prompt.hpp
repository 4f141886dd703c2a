#pragma once

#include <string>

#include "arena/freestyle/ruleset.hpp"
#include "arena/game.hpp"
#include "arena/record.hpp"
#include "arena/sentiment.hpp"

namespace arena::agents {

inline std::string emotion_options() {
  std::string out;
  for (auto e : sentiment::kAllEmotions) {
    if (!out.empty()) out += ", ";
    out += sentiment::letter(e);
    out += ". ";
    out += sentiment::name(e);
  }
  return out;
}

inline std::string response_instructions() {
  return "Reply with exactly three lines:\n"
         "MOVE: <one token from LEGAL MOVES>\n"
         "EMOTION: <one letter> where the options are " +
         emotion_options() +
         "\n"
         "ANALYSIS: <a brief analysis of the position and your move>\n";
}

// Per-round prompt. Only depends on the state and the record's identity
// fields, so equal inputs give byte-identical text.
inline std::string build_prompt(const GameState& state, const GameRecord& record) {
  const PlayerSide me = state.to_move();
  std::string p;
  p += "GAME: " + std::string(display_name(state.kind())) + "\n";
  p += "MATCH: " + record.match_id + "\n";
  p += "YOU: " + record.player(me) + ", playing " + std::string(to_string(me)) + "\n";
  p += "OPPONENT: " + record.player(opponent(me)) + "\n";
  p += "ROUND: " + std::to_string(state.round_index()) + "\n";
  p += "RULES: " + rules_summary(state) + "\n";
  if (const auto* rules = rules_of(state)) p += "NEGOTIATED RULES:\n" + freestyle::to_text(*rules);
  p += "BOARD (top row is the highest rank):\n" + encode_board(state, me);
  p += "MOVE HISTORY:";
  const auto history = state.history();
  if (history.empty()) p += " (none)";
  for (std::size_t i = 0; i < history.size(); ++i) {
    if (i % 2 == 0) p += " " + std::to_string(i / 2 + 1) + ".";
    p += " " + history[i].token();
  }
  p += "\nLEGAL MOVES:";
  for (const auto& t : legal_tokens(state)) p += " " + t;
  p += "\n" + response_instructions();
  return p;
}

// Negotiation prompt for one turn; `on_table` is the standing proposal.
inline std::string build_negotiation_prompt(PlayerSide me, const std::string& self, const std::string& other,
                                            const freestyle::RuleSet* on_table, int turn, int cap) {
  std::string p;
  p += "GAME: Free-Style (rules are negotiated before play)\n";
  p += "YOU: " + self + ", playing " + std::string(to_string(me)) + "\n";
  p += "OPPONENT: " + other + "\n";
  p += "NEGOTIATION TURN: " + std::to_string(turn) + " of at most " + std::to_string(cap) + "\n";
  p += "The game is played on a 5x5 board (a1 bottom-left to e5). Rules are written as one FIELD: value line each:\n"
       "PIECES: marks | integers <min>-<max> [budget <n> [per-player|global]]\n"
       "PLACEMENT: any-empty | adjacent | columns <first player's column> <second player's column>\n"
       "EFFECT: none | flip-neighbors\n"
       "VISIBILITY: open | hidden\n"
       "TERMINATION: board-full | rounds <n> | budget-exhausted\n"
       "WIN: majority | line <k> | row-points\n";
  if (on_table) {
    p += "PROPOSAL ON THE TABLE:\n" + freestyle::to_text(*on_table);
    p += "Reply ACCEPT to play these rules, or reply with a complete counter-proposal in the same format.\n";
  } else {
    p += "Open the negotiation: reply with a complete proposal in the format above.\n";
  }
  return p;
}

}  // namespace arena::agents
