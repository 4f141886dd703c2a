#pragma once

#include <cstdint>
#include <memory>
#include <optional>
#include <string>
#include <string_view>

#include "arena/agents/bots.hpp"
#include "arena/agents/response.hpp"
#include "arena/errors.hpp"
#include "arena/freestyle/ruleset.hpp"
#include "arena/game.hpp"

namespace arena::agents {

enum class AgentKind { RandomBot, GreedyBot, MinimaxBot, External };

inline std::string_view to_string(AgentKind k) {
  switch (k) {
    case AgentKind::RandomBot: return "random_bot";
    case AgentKind::GreedyBot: return "greedy_bot";
    case AgentKind::MinimaxBot: return "minimax_bot";
    case AgentKind::External: return "external";
  }
  return "?";
}

inline std::optional<AgentKind> parse_agent_kind(std::string_view s) {
  for (AgentKind k : {AgentKind::RandomBot, AgentKind::GreedyBot, AgentKind::MinimaxBot, AgentKind::External})
    if (to_string(k) == s) return k;
  return std::nullopt;
}

// How a bot behaves in Free-Style negotiation.
enum class NegotiationStyle {
  Agreeable,  // opens with its preference, accepts any valid proposal
  Insist,  // accepts only its preferred rules, otherwise counters with them
  Stubborn,  // never accepts
};

inline std::string_view to_string(NegotiationStyle s) {
  switch (s) {
    case NegotiationStyle::Agreeable: return "agreeable";
    case NegotiationStyle::Insist: return "insist";
    case NegotiationStyle::Stubborn: return "stubborn";
  }
  return "?";
}

inline std::optional<NegotiationStyle> parse_negotiation_style(std::string_view s) {
  for (auto x : {NegotiationStyle::Agreeable, NegotiationStyle::Insist, NegotiationStyle::Stubborn})
    if (to_string(x) == s) return x;
  return std::nullopt;
}

struct AgentSpec {
  std::string id;
  AgentKind kind = AgentKind::RandomBot;
  std::optional<std::string> endpoint;  // http://host:port/path or exec:<command>
  std::optional<std::uint64_t> seed;
  // Bot negotiation behaviour. preferred_rules is "flip-neighbors",
  // "hidden-numbers" or full rule text; unset means chosen from the seed.
  std::optional<std::string> preferred_rules;
  NegotiationStyle negotiation = NegotiationStyle::Agreeable;
  int search_depth = 0;  // minimax only; 0 picks a per-game default

  bool is_bot() const { return kind != AgentKind::External; }

  // Throws ConfigError naming the offending field.
  void validate() const {
    if (id.empty()) throw ConfigError("id", "agent id must not be empty");
    if (kind == AgentKind::External) {
      if (!endpoint || endpoint->empty()) throw ConfigError("endpoint", "external agent '" + id + "' needs an endpoint");
      if (endpoint->rfind("exec:", 0) != 0 && endpoint->rfind("http://", 0) != 0)
        throw ConfigError("endpoint", "endpoint of '" + id + "' must start with http:// or exec:");
    } else if (!seed) {
      throw ConfigError("seed", "bot '" + id + "' needs a seed");
    }
    if (search_depth < 0) throw ConfigError("search_depth", "must not be negative");
  }
};

enum class Phase { Move, Negotiation };

struct AgentRequest {
  Phase phase = Phase::Move;
  std::string prompt;
  const GameState* state = nullptr;  // move phase
  PlayerSide side = PlayerSide::First;
  const freestyle::RuleSet* on_table = nullptr;  // negotiation: current proposal, if any
  int attempt = 0;  // 0 for the first ask, then one per corrective re-prompt
};

// A player. Bots read the structured request; external agents only see the
// prompt text.
class Agent {
 public:
  explicit Agent(AgentSpec spec) : spec_(std::move(spec)) {}
  virtual ~Agent() = default;
  Agent(const Agent&) = delete;
  Agent& operator=(const Agent&) = delete;

  const AgentSpec& spec() const { return spec_; }
  const std::string& id() const { return spec_.id; }

  virtual void begin_match(std::uint64_t /*match_seed*/) {}
  // Raw reply text. Throws AgentUnreachable when no reply arrives in time.
  virtual std::string respond(const AgentRequest& request) = 0;

 private:
  AgentSpec spec_;
};

// Named presets or full rule text. Throws ParseError.
inline freestyle::RuleSet resolve_rules(std::string_view name,
                                        freestyle::BudgetScope scope = freestyle::BudgetScope::PerPlayer) {
  if (name == "flip-neighbors") return freestyle::flip_neighbors_rules();
  if (name == "hidden-numbers") return freestyle::hidden_numbers_rules(scope);
  return freestyle::parse_rules(name, scope);
}

inline freestyle::RuleSet preferred_rules(const AgentSpec& spec,
                                          freestyle::BudgetScope scope = freestyle::BudgetScope::PerPlayer) {
  if (spec.preferred_rules) return resolve_rules(*spec.preferred_rules, scope);
  return (spec.seed.value_or(0) % 2 == 0) ? freestyle::flip_neighbors_rules() : freestyle::hidden_numbers_rules(scope);
}

class BotAgent final : public Agent {
 public:
  explicit BotAgent(AgentSpec spec, freestyle::BudgetScope scope = freestyle::BudgetScope::PerPlayer)
      : Agent(std::move(spec)), rng_(this->spec().seed.value_or(0)) {
    this->spec().validate();
    preferred_ = preferred_rules(this->spec(), scope);
  }

  BotKind bot_kind() const {
    switch (spec().kind) {
      case AgentKind::GreedyBot: return BotKind::Greedy;
      case AgentKind::MinimaxBot: return BotKind::Minimax;
      default: return BotKind::Random;
    }
  }

  void begin_match(std::uint64_t match_seed) override { rng_ = Rng(mix_seed(*spec().seed, match_seed)); }

  std::string respond(const AgentRequest& req) override {
    if (req.phase == Phase::Negotiation) return negotiate(req);
    if (req.state == nullptr) throw Error("bot needs the game state");
    const BotChoice c = bot_policy(bot_kind(), *req.state, rng_, spec().search_depth);
    return format_response({c.token, c.emotion, c.analysis});
  }

 private:
  std::string negotiate(const AgentRequest& req) const {
    const std::string mine = freestyle::to_text(preferred_);
    if (req.on_table == nullptr) return mine;
    switch (spec().negotiation) {
      case NegotiationStyle::Agreeable:
        if (freestyle::is_valid(*req.on_table)) return "ACCEPT\n";
        return mine;
      case NegotiationStyle::Insist:
        if (*req.on_table == preferred_) return "ACCEPT\n";
        return mine;
      case NegotiationStyle::Stubborn: return mine;
    }
    return mine;
  }

  Rng rng_;
  freestyle::RuleSet preferred_;
};

}  // namespace arena::agents
