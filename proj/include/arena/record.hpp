#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include <nlohmann/json.hpp>

#include "arena/core.hpp"
#include "arena/game.hpp"
#include "arena/sentiment.hpp"

namespace arena {

struct RoundEntry {
  int round = 1;
  PlayerSide side = PlayerSide::First;
  std::string player;
  std::string move;
  sentiment::Emotion emotion = sentiment::Emotion::Peaceful;
  std::string analysis;
  bool fallback = false;
  int retries = 0;  // corrective re-prompts before the move was accepted
  friend bool operator==(const RoundEntry&, const RoundEntry&) = default;
};

struct NegotiationEntry {
  PlayerSide speaker = PlayerSide::First;
  std::string verdict;  // "counter" or "accept"
  std::string proposal;  // canonical rule text on the table after this turn
  friend bool operator==(const NegotiationEntry&, const NegotiationEntry&) = default;
};

enum class Termination { Normal, Forfeit, NegotiationFailed };

inline std::string_view to_string(Termination t) {
  switch (t) {
    case Termination::Normal: return "normal";
    case Termination::Forfeit: return "forfeit";
    case Termination::NegotiationFailed: return "negotiation_failed";
  }
  return "?";
}

inline Termination parse_termination(std::string_view s) {
  for (Termination t : {Termination::Normal, Termination::Forfeit, Termination::NegotiationFailed})
    if (to_string(t) == s) return t;
  throw ParseError("unknown termination '" + std::string(s) + "'");
}

// Full transcript of one match.
struct GameRecord {
  std::string match_id;
  GameKind game = GameKind::TicTacToe;
  int cycle = 1;
  int sequence = 0;  // position within the cycle's schedule, 1-based
  std::string first;
  std::string second;
  chess::Config chess;
  std::optional<std::string> rules;  // negotiated Free-Style rules, canonical text
  std::vector<NegotiationEntry> negotiation;
  std::optional<std::string> negotiation_failure;
  std::vector<RoundEntry> rounds;
  Outcome outcome = Outcome::Ongoing;
  int round_count = 0;
  Termination termination = Termination::Normal;
  std::optional<PlayerSide> forfeit_side;
  // Logical clock: rounds played in this game kind before the match started
  // and after it ended. Wall-clock time is not recorded so reruns are
  // byte-identical.
  std::int64_t started_at = 0;
  std::int64_t finished_at = 0;

  const std::string& player(PlayerSide s) const { return s == PlayerSide::First ? first : second; }
  bool has_fallback() const {
    for (const auto& r : rounds)
      if (r.fallback) return true;
    return false;
  }
  friend bool operator==(const GameRecord&, const GameRecord&) = default;
};

inline nlohmann::json to_json(const GameRecord& r) {
  using nlohmann::json;
  json j;
  j["match_id"] = r.match_id;
  j["game"] = to_string(r.game);
  j["cycle"] = r.cycle;
  j["sequence"] = r.sequence;
  j["first"] = r.first;
  j["second"] = r.second;
  j["chess_rules"] = {{"fifty_move_rule", r.chess.fifty_move_rule},
                      {"insufficient_material", r.chess.insufficient_material}};
  j["rules"] = r.rules ? json(*r.rules) : json(nullptr);
  json neg = json::array();
  for (const auto& n : r.negotiation)
    neg.push_back({{"speaker", to_string(n.speaker)}, {"verdict", n.verdict}, {"proposal", n.proposal}});
  j["negotiation"] = neg;
  j["negotiation_failure"] = r.negotiation_failure ? json(*r.negotiation_failure) : json(nullptr);
  json rounds = json::array();
  for (const auto& e : r.rounds)
    rounds.push_back({{"round", e.round},
                      {"side", to_string(e.side)},
                      {"player", e.player},
                      {"move", e.move},
                      {"emotion", std::string(1, sentiment::letter(e.emotion))},
                      {"analysis", e.analysis},
                      {"fallback", e.fallback},
                      {"retries", e.retries}});
  j["rounds"] = rounds;
  j["outcome"] = to_string(r.outcome);
  j["round_count"] = r.round_count;
  j["termination"] = to_string(r.termination);
  j["forfeit_side"] = r.forfeit_side ? json(to_string(*r.forfeit_side)) : json(nullptr);
  j["timestamps"] = {{"start", r.started_at}, {"end", r.finished_at}};
  return j;
}

inline GameRecord record_from_json(const nlohmann::json& j) {
  GameRecord r;
  try {
    r.match_id = j.at("match_id").get<std::string>();
    r.game = parse_game_kind(j.at("game").get<std::string>());
    r.cycle = j.at("cycle").get<int>();
    r.sequence = j.at("sequence").get<int>();
    r.first = j.at("first").get<std::string>();
    r.second = j.at("second").get<std::string>();
    if (j.contains("chess_rules")) {
      r.chess.fifty_move_rule = j["chess_rules"].at("fifty_move_rule").get<bool>();
      r.chess.insufficient_material = j["chess_rules"].at("insufficient_material").get<bool>();
    }
    if (!j.at("rules").is_null()) r.rules = j["rules"].get<std::string>();
    for (const auto& n : j.at("negotiation"))
      r.negotiation.push_back({parse_side(n.at("speaker").get<std::string>()), n.at("verdict").get<std::string>(),
                               n.at("proposal").get<std::string>()});
    if (!j.at("negotiation_failure").is_null()) r.negotiation_failure = j["negotiation_failure"].get<std::string>();
    for (const auto& e : j.at("rounds")) {
      RoundEntry x;
      x.round = e.at("round").get<int>();
      x.side = parse_side(e.at("side").get<std::string>());
      x.player = e.at("player").get<std::string>();
      x.move = e.at("move").get<std::string>();
      const auto emo = sentiment::parse_emotion(e.at("emotion").get<std::string>());
      if (!emo) throw ParseError("bad emotion in record");
      x.emotion = *emo;
      x.analysis = e.at("analysis").get<std::string>();
      x.fallback = e.at("fallback").get<bool>();
      x.retries = e.at("retries").get<int>();
      r.rounds.push_back(std::move(x));
    }
    r.outcome = parse_outcome(j.at("outcome").get<std::string>());
    r.round_count = j.at("round_count").get<int>();
    r.termination = parse_termination(j.at("termination").get<std::string>());
    if (!j.at("forfeit_side").is_null()) r.forfeit_side = parse_side(j["forfeit_side"].get<std::string>());
    r.started_at = j.at("timestamps").at("start").get<std::int64_t>();
    r.finished_at = j.at("timestamps").at("end").get<std::int64_t>();
  } catch (const nlohmann::json::exception& e) {
    throw ParseError(std::string("malformed game record: ") + e.what());
  }
  return r;
}

inline std::string to_line(const GameRecord& r) { return to_json(r).dump(); }

inline GameRecord record_from_line(std::string_view line) {
  nlohmann::json j;
  try {
    j = nlohmann::json::parse(line);
  } catch (const nlohmann::json::exception& e) {
    throw ParseError(std::string("record line is not JSON: ") + e.what());
  }
  return record_from_json(j);
}

inline GameOptions options_for(const GameRecord& r) {
  GameOptions o;
  o.chess = r.chess;
  if (r.rules) o.rules = freestyle::parse_rules(*r.rules);
  return o;
}

// Replays the move list and checks it reproduces the stored outcome and
// round count. Calls on_state(round, state) after every applied move (round
// 0 is the initial position). Throws CorruptRecord naming the round.
template <class F>
GameState verify_replay(const GameRecord& r, F&& on_state) {
  GameOptions opts;
  try {
    opts = options_for(r);
  } catch (const Error& e) {
    throw CorruptRecord(r.match_id, 0, std::string("stored rules are unusable: ") + e.what());
  }
  if (r.termination == Termination::NegotiationFailed) {
    if (!r.rounds.empty() || r.outcome != Outcome::Draw)
      throw CorruptRecord(r.match_id, 0, "failed negotiation must be a draw without moves");
    return initial_state(GameKind::TicTacToe);
  }
  if (r.game == GameKind::FreeStyle && !opts.rules) throw CorruptRecord(r.match_id, 0, "free-style record without rules");
  GameState s = initial_state(r.game, opts);
  on_state(0, s);
  for (const auto& e : r.rounds) {
    if (s.round_index() != e.round) throw CorruptRecord(r.match_id, e.round, "round numbering is out of sequence");
    if (e.side != s.to_move()) throw CorruptRecord(r.match_id, e.round, "recorded side is not the side to move");
    try {
      s = arena::apply(s, e.move);
    } catch (const Error& ex) {
      throw CorruptRecord(r.match_id, e.round, std::string("move '") + e.move + "' rejected: " + ex.what());
    }
    on_state(e.round, s);
  }
  if (static_cast<int>(r.rounds.size()) != r.round_count)
    throw CorruptRecord(r.match_id, r.round_count, "round count does not match the move list");
  const Outcome replayed = status(s);
  if (r.termination == Termination::Forfeit) {
    if (replayed != Outcome::Ongoing || !r.forfeit_side || r.outcome != win_for(opponent(*r.forfeit_side)))
      throw CorruptRecord(r.match_id, r.round_count, "forfeit does not match the replayed position");
  } else if (replayed != r.outcome) {
    throw CorruptRecord(r.match_id, r.round_count,
                        "replay ends " + std::string(to_string(replayed)) + " but record says " +
                            std::string(to_string(r.outcome)));
  }
  return s;
}

inline GameState verify_replay(const GameRecord& r) {
  return verify_replay(r, [](int, const GameState&) {});
}

}  // namespace arena
