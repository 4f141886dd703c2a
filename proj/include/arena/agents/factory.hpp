#pragma once

#include <memory>

#include "arena/agents/agent.hpp"
#include "arena/agents/elicit.hpp"
#include "arena/agents/external.hpp"

namespace arena::agents {

inline std::unique_ptr<Agent> make_agent(const AgentSpec& spec, const AgentOptions& opts = {},
                                         freestyle::BudgetScope scope = freestyle::BudgetScope::PerPlayer) {
  spec.validate();
  if (spec.kind == AgentKind::External)
    return std::make_unique<ExternalAgent>(spec, opts.timeout_seconds, opts.endpoint_concurrency);
  return std::make_unique<BotAgent>(spec, scope);
}

}  // namespace arena::agents
