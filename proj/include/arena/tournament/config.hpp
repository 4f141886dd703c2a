#pragma once

#include <cstdint>
#include <fstream>
#include <optional>
#include <set>
#include <sstream>
#include <string>
#include <vector>

#include <nlohmann/json.hpp>

#include "arena/agents/agent.hpp"
#include "arena/agents/elicit.hpp"
#include "arena/core.hpp"
#include "arena/freestyle/negotiation.hpp"
#include "arena/plg.hpp"
#include "arena/rating.hpp"
#include "arena/state.hpp"

namespace arena::tournament {

struct TournamentConfig {
  std::vector<agents::AgentSpec> players;
  std::vector<GameKind> games{kAllGames.begin(), kAllGames.end()};
  int repeats = 3;
  std::uint64_t seed = 0;
  rating::EloParams elo;
  bool continuous_elo = false;  // carry ratings across cycles instead of resetting
  agents::AgentOptions agents;
  int negotiation_cap = freestyle::kDefaultNegotiationCap;
  std::uint64_t loop_cap = plg::kDefaultLoopCap;
  std::uint64_t loop_search_budget = plg::kDefaultSearchBudget;
  chess::Config chess;
  freestyle::BudgetScope budget_scope = freestyle::BudgetScope::PerPlayer;
  std::optional<int> forfeit_threshold;  // most forfeits tolerated; unset = no limit
  int parallel_games = 1;
  int heatmap_bucket = 5;  // rounds per heatmap column
  std::string records_dir = "records";

  std::vector<std::string> player_ids() const {
    std::vector<std::string> out;
    for (const auto& p : players) out.push_back(p.id);
    return out;
  }
  const agents::AgentSpec& spec(const std::string& id) const {
    for (const auto& p : players)
      if (p.id == id) return p;
    throw UnknownPlayer(id);
  }
};

namespace detail {

using nlohmann::json;

inline void check_keys(const json& j, const std::string& where, std::initializer_list<const char*> allowed) {
  if (!j.is_object()) throw ConfigError(where.empty() ? "<root>" : where, "must be an object");
  for (const auto& [k, _] : j.items()) {
    bool ok = false;
    for (const char* a : allowed) ok = ok || k == a;
    if (!ok) throw ConfigError(where.empty() ? k : where + "." + k, "unknown field");
  }
}

template <class T>
T get(const json& j, const std::string& path) {
  try {
    return j.get<T>();
  } catch (const json::exception&) {
    throw ConfigError(path, "has the wrong type");
  }
}

inline std::string join(const std::string& a, const std::string& b) { return a.empty() ? b : a + "." + b; }

}  // namespace detail

// Throws ConfigError naming the offending field (dotted path).
inline TournamentConfig parse_config(const nlohmann::json& j) {
  using detail::get;
  using nlohmann::json;
  detail::check_keys(j, "",
                     {"players", "games", "repeats", "seed", "elo", "agents", "negotiation_cap", "plg", "chess",
                      "freestyle", "forfeit_threshold", "parallel_games", "heatmap_bucket", "records_dir"});
  TournamentConfig c;
  if (!j.contains("players")) throw ConfigError("players", "missing");
  const json& players = j["players"];
  if (!players.is_array()) throw ConfigError("players", "must be a list");
  std::set<std::string> ids;
  for (std::size_t i = 0; i < players.size(); ++i) {
    const std::string at = "players[" + std::to_string(i) + "]";
    const json& p = players[i];
    detail::check_keys(p, at, {"id", "kind", "endpoint", "seed", "preferred_rules", "negotiation", "search_depth"});
    agents::AgentSpec s;
    if (!p.contains("id")) throw ConfigError(at + ".id", "missing");
    s.id = get<std::string>(p["id"], at + ".id");
    if (!ids.insert(s.id).second) throw ConfigError(at + ".id", "duplicate player id '" + s.id + "'");
    if (!p.contains("kind")) throw ConfigError(at + ".kind", "missing");
    const auto kind = agents::parse_agent_kind(get<std::string>(p["kind"], at + ".kind"));
    if (!kind) throw ConfigError(at + ".kind", "must be random_bot, greedy_bot, minimax_bot or external");
    s.kind = *kind;
    if (p.contains("endpoint")) s.endpoint = get<std::string>(p["endpoint"], at + ".endpoint");
    if (p.contains("seed")) s.seed = get<std::uint64_t>(p["seed"], at + ".seed");
    if (p.contains("preferred_rules")) {
      s.preferred_rules = get<std::string>(p["preferred_rules"], at + ".preferred_rules");
      try {
        freestyle::validate(agents::resolve_rules(*s.preferred_rules));
      } catch (const Error& e) {
        throw ConfigError(at + ".preferred_rules", e.what());
      }
    }
    if (p.contains("negotiation")) {
      const auto style = agents::parse_negotiation_style(get<std::string>(p["negotiation"], at + ".negotiation"));
      if (!style) throw ConfigError(at + ".negotiation", "must be agreeable, insist or stubborn");
      s.negotiation = *style;
    }
    if (p.contains("search_depth")) s.search_depth = get<int>(p["search_depth"], at + ".search_depth");
    try {
      s.validate();
    } catch (const ConfigError& e) {
      throw ConfigError(at + "." + e.field(), e.why());
    }
    c.players.push_back(std::move(s));
  }
  if (c.players.size() < 2) throw ConfigError("players", "at least two players are required");

  if (j.contains("games")) {
    c.games.clear();
    const json& g = j["games"];
    if (!g.is_array() || g.empty()) throw ConfigError("games", "must be a non-empty list");
    for (std::size_t i = 0; i < g.size(); ++i) {
      const std::string at = "games[" + std::to_string(i) + "]";
      try {
        const GameKind k = parse_game_kind(get<std::string>(g[i], at));
        if (std::find(c.games.begin(), c.games.end(), k) != c.games.end()) throw ConfigError(at, "listed twice");
        c.games.push_back(k);
      } catch (const ParseError& e) {
        throw ConfigError(at, e.what());
      }
    }
  }
  if (j.contains("repeats")) c.repeats = get<int>(j["repeats"], "repeats");
  if (c.repeats < 1) throw ConfigError("repeats", "must be at least 1");
  if (j.contains("seed")) c.seed = get<std::uint64_t>(j["seed"], "seed");

  if (j.contains("elo")) {
    const json& e = j["elo"];
    detail::check_keys(e, "elo", {"initial_rating", "k_factor", "sigma", "zero_sum", "continuous"});
    if (e.contains("initial_rating")) c.elo.initial_rating = get<double>(e["initial_rating"], "elo.initial_rating");
    if (e.contains("k_factor")) c.elo.k_factor = get<double>(e["k_factor"], "elo.k_factor");
    if (e.contains("sigma")) c.elo.sigma = get<double>(e["sigma"], "elo.sigma");
    if (e.contains("zero_sum")) c.elo.zero_sum = get<bool>(e["zero_sum"], "elo.zero_sum");
    if (e.contains("continuous")) c.continuous_elo = get<bool>(e["continuous"], "elo.continuous");
    if (!(c.elo.k_factor > 0)) throw ConfigError("elo.k_factor", "must be positive");
    if (!(c.elo.sigma > 0)) throw ConfigError("elo.sigma", "must be positive");
  }
  if (j.contains("agents")) {
    const json& a = j["agents"];
    detail::check_keys(a, "agents", {"retries", "timeout_seconds", "analysis_limit", "endpoint_concurrency"});
    if (a.contains("retries")) c.agents.retries = get<int>(a["retries"], "agents.retries");
    if (a.contains("timeout_seconds")) c.agents.timeout_seconds = get<double>(a["timeout_seconds"], "agents.timeout_seconds");
    if (a.contains("analysis_limit")) c.agents.analysis_limit = get<std::size_t>(a["analysis_limit"], "agents.analysis_limit");
    if (a.contains("endpoint_concurrency"))
      c.agents.endpoint_concurrency = get<int>(a["endpoint_concurrency"], "agents.endpoint_concurrency");
    if (c.agents.retries < 0) throw ConfigError("agents.retries", "must not be negative");
    if (!(c.agents.timeout_seconds > 0)) throw ConfigError("agents.timeout_seconds", "must be positive");
    if (c.agents.endpoint_concurrency < 1) throw ConfigError("agents.endpoint_concurrency", "must be at least 1");
  }
  if (j.contains("negotiation_cap")) c.negotiation_cap = get<int>(j["negotiation_cap"], "negotiation_cap");
  if (c.negotiation_cap < 1) throw ConfigError("negotiation_cap", "must be at least 1");
  if (j.contains("plg")) {
    const json& p = j["plg"];
    detail::check_keys(p, "plg", {"loop_cap", "search_budget"});
    if (p.contains("loop_cap")) c.loop_cap = get<std::uint64_t>(p["loop_cap"], "plg.loop_cap");
    if (p.contains("search_budget")) c.loop_search_budget = get<std::uint64_t>(p["search_budget"], "plg.search_budget");
    if (c.loop_cap < 1) throw ConfigError("plg.loop_cap", "must be at least 1");
  }
  if (j.contains("chess")) {
    const json& ch = j["chess"];
    detail::check_keys(ch, "chess", {"fifty_move_rule", "insufficient_material"});
    if (ch.contains("fifty_move_rule")) c.chess.fifty_move_rule = get<bool>(ch["fifty_move_rule"], "chess.fifty_move_rule");
    if (ch.contains("insufficient_material"))
      c.chess.insufficient_material = get<bool>(ch["insufficient_material"], "chess.insufficient_material");
  }
  if (j.contains("freestyle")) {
    const json& f = j["freestyle"];
    detail::check_keys(f, "freestyle", {"budget_scope"});
    if (f.contains("budget_scope")) {
      const auto s = get<std::string>(f["budget_scope"], "freestyle.budget_scope");
      if (s == "per-player") c.budget_scope = freestyle::BudgetScope::PerPlayer;
      else if (s == "global") c.budget_scope = freestyle::BudgetScope::Global;
      else throw ConfigError("freestyle.budget_scope", "must be per-player or global");
    }
  }
  if (j.contains("forfeit_threshold") && !j["forfeit_threshold"].is_null()) {
    c.forfeit_threshold = get<int>(j["forfeit_threshold"], "forfeit_threshold");
    if (*c.forfeit_threshold < 0) throw ConfigError("forfeit_threshold", "must not be negative");
  }
  if (j.contains("parallel_games")) c.parallel_games = get<int>(j["parallel_games"], "parallel_games");
  if (c.parallel_games < 1) throw ConfigError("parallel_games", "must be at least 1");
  if (j.contains("heatmap_bucket")) c.heatmap_bucket = get<int>(j["heatmap_bucket"], "heatmap_bucket");
  if (c.heatmap_bucket < 1) throw ConfigError("heatmap_bucket", "must be at least 1");
  if (j.contains("records_dir")) c.records_dir = get<std::string>(j["records_dir"], "records_dir");
  return c;
}

inline TournamentConfig load_config(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw ConfigError("<file>", "cannot open config file '" + path + "'");
  nlohmann::json j;
  try {
    j = nlohmann::json::parse(in, nullptr, true, true);
  } catch (const nlohmann::json::exception& e) {
    throw ConfigError("<file>", std::string("not valid JSON: ") + e.what());
  }
  return parse_config(j);
}

// Every setting that influences match results, in canonical form. Stored in
// the manifest so reports and resumed runs use the same parameters.
inline nlohmann::json canonical_json(const TournamentConfig& c) {
  using nlohmann::json;
  json players = json::array();
  for (const auto& p : c.players) {
    json s = {{"id", p.id}, {"kind", agents::to_string(p.kind)}};
    if (p.endpoint) s["endpoint"] = *p.endpoint;
    if (p.seed) s["seed"] = *p.seed;
    if (p.preferred_rules) s["preferred_rules"] = *p.preferred_rules;
    s["negotiation"] = agents::to_string(p.negotiation);
    s["search_depth"] = p.search_depth;
    players.push_back(s);
  }
  json games = json::array();
  for (auto g : c.games) games.push_back(to_string(g));
  json j;
  j["players"] = players;
  j["games"] = games;
  j["repeats"] = c.repeats;
  j["seed"] = c.seed;
  j["elo"] = {{"initial_rating", c.elo.initial_rating},
              {"k_factor", c.elo.k_factor},
              {"sigma", c.elo.sigma},
              {"zero_sum", c.elo.zero_sum},
              {"continuous", c.continuous_elo}};
  j["agents"] = {{"retries", c.agents.retries},
                 {"timeout_seconds", c.agents.timeout_seconds},
                 {"analysis_limit", c.agents.analysis_limit},
                 {"endpoint_concurrency", c.agents.endpoint_concurrency}};
  j["negotiation_cap"] = c.negotiation_cap;
  j["plg"] = {{"loop_cap", c.loop_cap}, {"search_budget", c.loop_search_budget}};
  j["chess"] = {{"fifty_move_rule", c.chess.fifty_move_rule}, {"insufficient_material", c.chess.insufficient_material}};
  j["freestyle"] = {{"budget_scope", c.budget_scope == freestyle::BudgetScope::PerPlayer ? "per-player" : "global"}};
  j["forfeit_threshold"] = c.forfeit_threshold ? json(*c.forfeit_threshold) : json(nullptr);
  j["heatmap_bucket"] = c.heatmap_bucket;
  return j;
}

}  // namespace arena::tournament
