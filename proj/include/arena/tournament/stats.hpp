#pragma once

#include <algorithm>
#include <map>
#include <string>
#include <vector>

#include "arena/plg.hpp"
#include "arena/rating.hpp"
#include "arena/record.hpp"
#include "arena/sentiment.hpp"

// Aggregates computed from persisted records only.
namespace arena::tournament {

struct Tally {
  int wins = 0;
  int losses = 0;
  int draws = 0;
  int games() const { return wins + losses + draws; }
  friend bool operator==(const Tally&, const Tally&) = default;
};

struct RoundsStats {
  int matches = 0;  // games that ran to a normal finish
  double mean_rounds = 0;  // per match
  double mean_total_per_cycle = 0;  // total rounds in a cycle, averaged over cycles
  int min_rounds = 0;
  int max_rounds = 0;
};

inline RoundsStats rounds_stats(const std::vector<int>& rounds, int cycles = 1) {
  RoundsStats s;
  if (rounds.empty()) return s;
  s.matches = static_cast<int>(rounds.size());
  long long total = 0;
  for (int r : rounds) total += r;
  s.mean_rounds = static_cast<double>(total) / static_cast<double>(rounds.size());
  s.mean_total_per_cycle = static_cast<double>(total) / std::max(1, cycles);
  s.min_rounds = *std::min_element(rounds.begin(), rounds.end());
  s.max_rounds = *std::max_element(rounds.begin(), rounds.end());
  return s;
}

inline rating::MatchResult result_of(const GameRecord& r) {
  switch (r.outcome) {
    case Outcome::FirstWins: return rating::MatchResult::XWins;
    case Outcome::SecondWins: return rating::MatchResult::YWins;
    default: return rating::MatchResult::Draw;
  }
}

inline int expected_matches_per_cycle(std::size_t players) {
  return static_cast<int>(players * (players - 1) / 2);
}

struct GameSummary {
  GameKind game = GameKind::TicTacToe;
  std::vector<std::string> players;
  int cycles = 0;  // cycles with at least one record
  std::vector<rating::EloTable> cycle_tables;  // final table of cycle c at index c-1
  std::map<std::string, double> average_elo;
  std::vector<std::map<std::string, Tally>> cycle_tallies;
  std::map<std::string, Tally> total_tally;
  RoundsStats rounds;
  std::vector<int> incomplete_cycles;
  int forfeits = 0;
  int negotiation_failures = 0;
  int fallback_rounds = 0;
};

// `records` may mix games; only `game` is used. Records are processed in
// (cycle, sequence) order. With `continuous` the table carries over between
// cycles and the average is the final rating.
inline GameSummary summarize_game(GameKind game, const std::vector<GameRecord>& records,
                                  const std::vector<std::string>& players, const rating::EloParams& params,
                                  int repeats, bool continuous = false) {
  GameSummary s;
  s.game = game;
  s.players = players;
  std::vector<const GameRecord*> mine;
  for (const auto& r : records)
    if (r.game == game) mine.push_back(&r);
  std::sort(mine.begin(), mine.end(), [](const GameRecord* a, const GameRecord* b) {
    return std::tie(a->cycle, a->sequence) < std::tie(b->cycle, b->sequence);
  });
  int max_cycle = repeats;
  for (const auto* r : mine) max_cycle = std::max(max_cycle, r->cycle);

  rating::EloTable table(params);
  for (const auto& p : players) table.register_player(p);
  std::vector<int> rounds;
  for (int c = 1; c <= max_cycle; ++c) {
    if (!continuous) {
      table = rating::EloTable(params);
      for (const auto& p : players) table.register_player(p);
    }
    std::map<std::string, Tally> tally;
    for (const auto& p : players) tally[p];
    int count = 0;
    for (const auto* r : mine) {
      if (r->cycle != c) continue;
      ++count;
      table.record(r->first, r->second, result_of(*r), r->match_id);
      Tally& a = tally[r->first];
      Tally& b = tally[r->second];
      if (r->outcome == Outcome::FirstWins) ++a.wins, ++b.losses;
      else if (r->outcome == Outcome::SecondWins) ++a.losses, ++b.wins;
      else ++a.draws, ++b.draws;
      if (r->termination == Termination::Forfeit) ++s.forfeits;
      if (r->termination == Termination::NegotiationFailed) ++s.negotiation_failures;
      if (r->termination == Termination::Normal) rounds.push_back(r->round_count);
      for (const auto& e : r->rounds) s.fallback_rounds += e.fallback;
    }
    if (count == 0 && c > repeats) continue;
    if (count > 0) ++s.cycles;
    if (count != expected_matches_per_cycle(players.size())) s.incomplete_cycles.push_back(c);
    s.cycle_tables.push_back(table);
    s.cycle_tallies.push_back(tally);
    for (const auto& [p, t] : tally) {
      Tally& tot = s.total_tally[p];
      tot.wins += t.wins;
      tot.losses += t.losses;
      tot.draws += t.draws;
    }
  }
  for (const auto& p : players) {
    if (continuous) {
      s.average_elo[p] = s.cycle_tables.empty() ? params.initial_rating : s.cycle_tables.back().rating(p);
      continue;
    }
    double sum = 0;
    int n = 0;
    for (std::size_t c = 0; c < s.cycle_tables.size(); ++c) {
      bool played = false;
      for (const auto* r : mine) played = played || r->cycle == static_cast<int>(c) + 1;
      if (!played) continue;
      sum += s.cycle_tables[c].rating(p);
      ++n;
    }
    s.average_elo[p] = n ? sum / n : params.initial_rating;
  }
  s.rounds = rounds_stats(rounds, std::max(1, s.cycles));
  return s;
}

// Head-to-head series per unordered pair, in player order.
struct PairSeries {
  plg::SeriesResult series;
  int games() const { return series.wins_x + series.wins_y + series.draws; }
};

inline std::vector<PairSeries> pair_series(GameKind game, const std::vector<GameRecord>& records,
                                           const std::vector<std::string>& players) {
  std::map<std::pair<std::string, std::string>, plg::SeriesResult> by;
  auto rank = [&](const std::string& id) {
    return std::find(players.begin(), players.end(), id) - players.begin();
  };
  for (const auto& r : records) {
    if (r.game != game) continue;
    const bool first_is_x = rank(r.first) < rank(r.second);
    const std::string& x = first_is_x ? r.first : r.second;
    const std::string& y = first_is_x ? r.second : r.first;
    auto& s = by[{x, y}];
    s.x = x;
    s.y = y;
    if (r.outcome == Outcome::Draw) ++s.draws;
    else if ((r.outcome == Outcome::FirstWins) == first_is_x) ++s.wins_x;
    else ++s.wins_y;
  }
  std::vector<PairSeries> out;
  for (std::size_t i = 0; i < players.size(); ++i)
    for (std::size_t j = i + 1; j < players.size(); ++j) {
      auto it = by.find({players[i], players[j]});
      if (it != by.end()) out.push_back({it->second});
    }
  return out;
}

// PLG from pairs whose series has exactly `series_length` games; `complete`
// reports whether every pair qualified.
inline plg::PlgGraph plg_from_records(GameKind game, const std::vector<GameRecord>& records,
                                      const std::vector<std::string>& players, int series_length,
                                      bool* complete = nullptr) {
  std::vector<plg::SeriesResult> full;
  const auto all = pair_series(game, records, players);
  for (const auto& p : all)
    if (p.games() == series_length) full.push_back(p.series);
  if (complete)
    *complete = static_cast<int>(full.size()) == expected_matches_per_cycle(players.size()) && full.size() == all.size();
  return plg::build_plg(full, series_length, players);
}

inline std::vector<sentiment::EmotionSample> emotion_samples(const std::vector<GameRecord>& records) {
  std::vector<sentiment::EmotionSample> out;
  for (const auto& r : records)
    for (const auto& e : r.rounds)
      out.push_back({e.player, r.game, r.match_id, e.round, e.emotion, e.fallback});
  return out;
}

}  // namespace arena::tournament
