#pragma once

#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "arena/agents/agent.hpp"
#include "arena/agents/prompt.hpp"
#include "arena/freestyle/ruleset.hpp"

namespace arena::freestyle {

enum class Verdict { Counter, Accept };

inline std::string_view to_string(Verdict v) { return v == Verdict::Accept ? "accept" : "counter"; }

struct NegotiationTurn {
  PlayerSide proposer = PlayerSide::First;
  RuleSet proposal;  // for an accept, the rules accepted
  Verdict verdict = Verdict::Counter;
};

enum class NegotiationFailure { CapExhausted, UnparsableProposal };

inline std::string_view to_string(NegotiationFailure f) {
  return f == NegotiationFailure::CapExhausted ? "cap_exhausted" : "unparsable_proposal";
}

struct NegotiationTranscript {
  std::vector<NegotiationTurn> turns;
  std::optional<RuleSet> agreed;
  std::optional<NegotiationFailure> failure;
};

class NegotiationFailed : public Error {
 public:
  NegotiationFailed(NegotiationFailure why, NegotiationTranscript t)
      : Error("negotiation failed: " + std::string(to_string(why))), why_(why), transcript_(std::move(t)) {}
  NegotiationFailure reason() const { return why_; }
  const NegotiationTranscript& transcript() const { return transcript_; }

 private:
  NegotiationFailure why_;
  NegotiationTranscript transcript_;
};

inline constexpr int kDefaultNegotiationCap = 10;

namespace detail {

inline bool is_accept(std::string_view reply) {
  const std::string t = lower(trim(reply));
  return t == "accept" || t.rfind("accept\n", 0) == 0 || t.rfind("accept ", 0) == 0 || t == "accept.";
}

}  // namespace detail

// Alternating proposals starting with `first`; each reply is ACCEPT or a
// complete counter-proposal. `cap` bounds the number of turns. An
// unparsable or invalid reply gets one corrective re-prompt. Throws
// NegotiationFailed carrying the partial transcript.
inline NegotiationTranscript negotiate(agents::Agent& first, agents::Agent& second, int cap = kDefaultNegotiationCap,
                                       BudgetScope scope = BudgetScope::PerPlayer) {
  NegotiationTranscript t;
  std::optional<RuleSet> table;
  PlayerSide speaker = PlayerSide::First;
  while (static_cast<int>(t.turns.size()) < cap) {
    agents::Agent& me = speaker == PlayerSide::First ? first : second;
    agents::Agent& other = speaker == PlayerSide::First ? second : first;
    const std::string prompt = agents::build_negotiation_prompt(
        speaker, me.id(), other.id(), table ? &*table : nullptr, static_cast<int>(t.turns.size()) + 1, cap);
    std::optional<NegotiationTurn> turn;
    std::string error;
    for (int attempt = 0; attempt < 2 && !turn; ++attempt) {
      agents::AgentRequest req;
      req.phase = agents::Phase::Negotiation;
      req.prompt = attempt == 0 ? prompt : prompt + "ERROR: " + error + "\n";
      req.side = speaker;
      req.on_table = table ? &*table : nullptr;
      req.attempt = attempt;
      const std::string reply = me.respond(req);
      if (detail::is_accept(reply)) {
        if (table) turn = NegotiationTurn{speaker, *table, Verdict::Accept};
        else error = "there is no proposal to accept yet";
        continue;
      }
      try {
        RuleSet r = parse_rules(reply, scope);
        validate(r);
        turn = NegotiationTurn{speaker, std::move(r), Verdict::Counter};
      } catch (const Error& e) {
        error = e.what();
      }
    }
    if (!turn) {
      t.failure = NegotiationFailure::UnparsableProposal;
      throw NegotiationFailed(*t.failure, t);
    }
    t.turns.push_back(*turn);
    if (turn->verdict == Verdict::Accept) {
      t.agreed = turn->proposal;
      return t;
    }
    table = turn->proposal;
    speaker = opponent(speaker);
  }
  t.failure = NegotiationFailure::CapExhausted;
  throw NegotiationFailed(*t.failure, t);
}

}  // namespace arena::freestyle
