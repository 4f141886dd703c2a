#pragma once

#include <algorithm>
#include <cstdint>
#include <memory>
#include <string>
#include <vector>

#include "arena/agents/agent.hpp"
#include "arena/agents/response.hpp"
#include "arena/game.hpp"
#include "arena/rng.hpp"

namespace arena::agents {

struct AgentOptions {
  int retries = 3;
  double timeout_seconds = 60.0;
  std::size_t analysis_limit = kDefaultAnalysisLimit;
  int endpoint_concurrency = 1;
};

struct Elicited {
  AgentResponse response;
  bool fallback = false;
  int retries = 0;  // corrective re-prompts issued
  std::vector<std::string> errors;
};

inline constexpr std::string_view kFallbackAnalysis = "fallback";

// Asks for a move, re-prompting up to `retries` times with an appended
// `ERROR: <reason>` line. After that a seeded random legal move is played
// with emotion Peaceful. AgentUnreachable propagates (the caller forfeits
// the match).
inline Elicited elicit(Agent& agent, const std::string& prompt, const GameState& state, const AgentOptions& opts,
                       std::uint64_t fallback_seed) {
  const auto legal = legal_tokens(state);
  Elicited out;
  std::string text = prompt;
  for (int attempt = 0; attempt <= opts.retries; ++attempt) {
    AgentRequest req;
    req.phase = Phase::Move;
    req.prompt = text;
    req.state = &state;
    req.side = state.to_move();
    req.attempt = attempt;
    const std::string reply = agent.respond(req);
    std::string reason;
    try {
      AgentResponse r = parse_response(reply, opts.analysis_limit);
      const Move m = parse_move(state, r.move);
      if (std::binary_search(legal.begin(), legal.end(), m.token())) {
        r.move = m.token();
        out.response = std::move(r);
        return out;
      }
      reason = "illegal move '" + m.token() + "'";
    } catch (const ParseError& e) {
      reason = e.what();
    }
    out.errors.push_back(reason);
    if (attempt < opts.retries) {
      ++out.retries;
      text = prompt + "ERROR: " + reason + "\n";
    }
  }
  Rng rng(fallback_seed);
  out.fallback = true;
  out.response = AgentResponse{rng.pick(legal), Emotion::Peaceful, std::string(kFallbackAnalysis)};
  return out;
}

}  // namespace arena::agents
