#pragma once

#include <cstdint>
#include <string>

#include "arena/agents/agent.hpp"
#include "arena/agents/elicit.hpp"
#include "arena/agents/prompt.hpp"
#include "arena/freestyle/negotiation.hpp"
#include "arena/record.hpp"
#include "arena/rng.hpp"

namespace arena::tournament {

struct MatchSettings {
  std::string match_id;
  GameKind game = GameKind::TicTacToe;
  int cycle = 1;
  int sequence = 1;
  std::uint64_t seed = 0;  // per-match seed handed to the agents
  agents::AgentOptions agent;
  int negotiation_cap = freestyle::kDefaultNegotiationCap;
  chess::Config chess;
  freestyle::BudgetScope budget_scope = freestyle::BudgetScope::PerPlayer;
  std::int64_t clock = 0;  // logical time at the start of the match
};

// Upper bound on the plies a finished game may take; anything longer means
// an engine bug.
inline int max_rounds(GameKind g) {
  switch (g) {
    case GameKind::TicTacToe: return 9;
    case GameKind::Gomoku: return gomoku::kSide * gomoku::kSide;
    case GameKind::Reversi: return 2 * 60;  // placements plus forced passes
    case GameKind::Chess: return 12000;
    case GameKind::FreeStyle: return 2 * freestyle::kCells;
  }
  return 0;
}

inline int placements(const GameRecord& r) {
  int n = 0;
  for (const auto& e : r.rounds) n += e.move != "pass";
  return n;
}

// Plays one match: negotiation first for Free-Style, then alternating
// elicit/apply until the game ends. An agent that stops answering forfeits.
inline GameRecord run_match(agents::Agent& first, agents::Agent& second, const MatchSettings& m) {
  GameRecord rec;
  rec.match_id = m.match_id;
  rec.game = m.game;
  rec.cycle = m.cycle;
  rec.sequence = m.sequence;
  rec.first = first.id();
  rec.second = second.id();
  rec.chess = m.chess;
  rec.started_at = m.clock;
  first.begin_match(m.seed);
  second.begin_match(m.seed);

  auto finish = [&](Outcome o, Termination t) {
    rec.outcome = o;
    rec.termination = t;
    rec.round_count = static_cast<int>(rec.rounds.size());
    rec.finished_at = rec.started_at + rec.round_count;
    return rec;
  };

  GameOptions opts;
  opts.chess = m.chess;
  if (m.game == GameKind::FreeStyle) {
    auto log = [&](const freestyle::NegotiationTranscript& t) {
      for (const auto& turn : t.turns)
        rec.negotiation.push_back(
            {turn.proposer, std::string(freestyle::to_string(turn.verdict)), freestyle::to_text(turn.proposal)});
    };
    try {
      const auto t = freestyle::negotiate(first, second, m.negotiation_cap, m.budget_scope);
      log(t);
      opts.rules = *t.agreed;
      rec.rules = freestyle::to_text(*t.agreed);
    } catch (const freestyle::NegotiationFailed& e) {
      log(e.transcript());
      rec.negotiation_failure = std::string(freestyle::to_string(e.reason()));
      return finish(Outcome::Draw, Termination::NegotiationFailed);
    } catch (const AgentUnreachable&) {
      // Silent during negotiation: whoever was due to speak forfeits.
      const PlayerSide silent = rec.negotiation.size() % 2 == 0 ? PlayerSide::First : PlayerSide::Second;
      rec.negotiation_failure = "agent_unreachable";
      rec.forfeit_side = silent;
      return finish(win_for(opponent(silent)), Termination::Forfeit);
    }
  }

  GameState state = initial_state(m.game, opts);
  while (status(state) == Outcome::Ongoing) {
    const PlayerSide side = state.to_move();
    agents::Agent& agent = side == PlayerSide::First ? first : second;
    const std::string prompt = agents::build_prompt(state, rec);
    agents::Elicited got;
    try {
      got = agents::elicit(agent, prompt, state, m.agent,
                           mix_seed(m.seed, static_cast<std::uint64_t>(state.round_index())));
    } catch (const AgentUnreachable&) {
      rec.forfeit_side = side;
      return finish(win_for(opponent(side)), Termination::Forfeit);
    }
    state = arena::apply(state, got.response.move);
    RoundEntry e;
    e.round = state.round_index() - 1;
    e.side = side;
    e.player = agent.id();
    e.move = got.response.move;
    e.emotion = got.response.emotion;
    e.analysis = got.response.analysis;
    e.fallback = got.fallback;
    e.retries = got.retries;
    rec.rounds.push_back(std::move(e));
    if (static_cast<int>(rec.rounds.size()) > max_rounds(m.game))
      throw EngineInvariantViolation(m.match_id + ": game exceeded " + std::to_string(max_rounds(m.game)) + " rounds");
  }
  finish(status(state), Termination::Normal);
  if (m.game == GameKind::Reversi && placements(rec) > 60)
    throw EngineInvariantViolation(m.match_id + ": more than 60 reversi placements");
  try {
    verify_replay(rec);
  } catch (const CorruptRecord& e) {
    throw EngineInvariantViolation(std::string("fresh record does not replay: ") + e.what());
  }
  return rec;
}

}  // namespace arena::tournament
