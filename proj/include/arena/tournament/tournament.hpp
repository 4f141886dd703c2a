#pragma once

#include <atomic>
#include <exception>
#include <functional>
#include <map>
#include <memory>
#include <mutex>
#include <string>
#include <thread>
#include <vector>

#include "arena/agents/factory.hpp"
#include "arena/tournament/config.hpp"
#include "arena/tournament/match.hpp"
#include "arena/tournament/schedule.hpp"
#include "arena/tournament/stats.hpp"
#include "arena/tournament/store.hpp"

namespace arena::tournament {

class ForfeitThresholdExceeded : public Error {
 public:
  ForfeitThresholdExceeded(int forfeits, int threshold)
      : Error(std::to_string(forfeits) + " forfeits exceed the threshold of " + std::to_string(threshold)) {}
};

using AgentFactory = std::function<std::unique_ptr<agents::Agent>(const agents::AgentSpec&)>;
// Called after each match is persisted, with the players' ratings after it.
using Progress = std::function<void(const GameRecord&, double elo_first, double elo_second)>;

struct TournamentResult {
  std::vector<GameRecord> records;  // sorted by game, cycle, sequence
  std::map<GameKind, std::vector<rating::EloTable>> live_tables;  // per cycle, as updated during the run
  std::vector<GameSummary> summaries;  // recomputed from the records
  int played = 0;
  int resumed = 0;  // matches found already on disk
  int forfeits = 0;
};

inline AgentFactory default_agent_factory(const TournamentConfig& c) {
  return [opts = c.agents, scope = c.budget_scope](const agents::AgentSpec& s) {
    return agents::make_agent(s, opts, scope);
  };
}

inline std::uint64_t match_seed(std::uint64_t tournament_seed, const std::string& match_id) {
  return mix_seed(tournament_seed, hash_text(match_id));
}

// Runs every scheduled match not already in `store`. Matches of one game
// run in schedule order; with parallel_games > 1 game kinds run
// concurrently, each with its own agent instances.
inline TournamentResult run_tournament(const TournamentConfig& c, RecordStore& store, const Progress& progress = {},
                                       AgentFactory factory = {}) {
  if (!factory) factory = default_agent_factory(c);
  const auto ids = c.player_ids();
  const auto schedules = make_schedule(ids, c.games, c.repeats, c.seed);

  TournamentResult result;
  std::mutex m;
  std::atomic<int> forfeits{0};
  std::atomic<bool> stop{false};
  std::map<GameKind, std::exception_ptr> failures;
  std::map<GameKind, std::vector<rating::EloTable>> live;

  auto run_game = [&](GameKind g) {
    std::map<std::string, std::unique_ptr<agents::Agent>> roster;
    for (const auto& spec : c.players) roster[spec.id] = factory(spec);
    std::vector<rating::EloTable> tables;
    rating::EloTable table(c.elo);
    for (const auto& id : ids) table.register_player(id);
    std::int64_t clock = 0;
    for (const auto& sched : schedules) {
      if (sched.game != g) continue;
      if (!c.continuous_elo) {
        table = rating::EloTable(c.elo);
        for (const auto& id : ids) table.register_player(id);
      }
      for (const auto& sm : sched.matches) {
        if (stop) return;
        GameRecord rec;
        bool fresh = false;
        if (auto done = store.find(sm.match_id)) {
          rec = *done;
          if (rec.first != sm.first || rec.second != sm.second)
            throw CorruptRecord(sm.match_id, 0, "stored players do not match the schedule");
        } else {
          MatchSettings ms;
          ms.match_id = sm.match_id;
          ms.game = g;
          ms.cycle = sched.cycle;
          ms.sequence = sm.sequence;
          ms.seed = match_seed(c.seed, sm.match_id);
          ms.agent = c.agents;
          ms.negotiation_cap = c.negotiation_cap;
          ms.chess = c.chess;
          ms.budget_scope = c.budget_scope;
          ms.clock = clock;
          rec = run_match(*roster.at(sm.first), *roster.at(sm.second), ms);
          store.append(rec);
          fresh = true;
        }
        clock = rec.finished_at;
        table.record(rec.first, rec.second, result_of(rec), rec.match_id);
        std::lock_guard lock(m);
        (fresh ? result.played : result.resumed) += 1;
        if (rec.termination == Termination::Forfeit) ++forfeits;
        if (progress) progress(rec, table.rating(rec.first), table.rating(rec.second));
        if (c.forfeit_threshold && forfeits > *c.forfeit_threshold) {
          stop = true;
          throw ForfeitThresholdExceeded(forfeits, *c.forfeit_threshold);
        }
      }
      tables.push_back(table);
    }
    std::lock_guard lock(m);
    live[g] = std::move(tables);
  };

  auto guarded = [&](GameKind g) {
    try {
      run_game(g);
    } catch (...) {
      stop = true;
      std::lock_guard lock(m);
      failures[g] = std::current_exception();
    }
  };

  if (c.parallel_games <= 1 || c.games.size() <= 1) {
    for (GameKind g : c.games) {
      guarded(g);
      if (stop) break;
    }
  } else {
    std::vector<GameKind> pending = c.games;
    std::size_t next = 0;
    std::vector<std::thread> workers;
    const std::size_t n = std::min<std::size_t>(static_cast<std::size_t>(c.parallel_games), pending.size());
    for (std::size_t w = 0; w < n; ++w)
      workers.emplace_back([&] {
        for (;;) {
          GameKind g;
          {
            std::lock_guard lock(m);
            if (next >= pending.size() || stop) return;
            g = pending[next++];
          }
          guarded(g);
        }
      });
    for (auto& t : workers) t.join();
  }
  // Report the first failure in game order so the error is reproducible.
  for (GameKind g : c.games)
    if (auto it = failures.find(g); it != failures.end()) std::rethrow_exception(it->second);

  for (const auto& sched : schedules)
    for (const auto& sm : sched.matches) result.records.push_back(*store.find(sm.match_id));
  result.forfeits = forfeits;
  result.live_tables = std::move(live);
  for (GameKind g : c.games) {
    result.summaries.push_back(summarize_game(g, result.records, ids, c.elo, c.repeats, c.continuous_elo));
    const auto& recomputed = result.summaries.back().cycle_tables;
    const auto& online = result.live_tables[g];
    bool same = recomputed.size() == online.size();
    for (std::size_t i = 0; same && i < online.size(); ++i) same = recomputed[i].ratings() == online[i].ratings();
    if (!same) throw EngineInvariantViolation("Elo recomputed from records differs from the live table for " +
                                              std::string(to_string(g)));
  }
  return result;
}

}  // namespace arena::tournament
