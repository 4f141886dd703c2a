#pragma once

#include <cstdint>
#include <cstdio>
#include <string>
#include <utility>
#include <vector>

#include "arena/core.hpp"
#include "arena/errors.hpp"
#include "arena/rng.hpp"

namespace arena::tournament {

struct ScheduledMatch {
  std::string match_id;
  std::string first;
  std::string second;
  int sequence = 1;  // 1-based position in the cycle
};

struct Schedule {
  GameKind game = GameKind::TicTacToe;
  int cycle = 1;
  std::vector<ScheduledMatch> matches;
  std::uint64_t seed = 0;
};

inline std::string match_id(GameKind g, int cycle, int sequence) {
  char buf[64];
  std::snprintf(buf, sizeof buf, "%s-c%d-m%03d", std::string(to_string(g)).c_str(), cycle, sequence);
  return buf;
}

inline std::uint64_t schedule_seed(std::uint64_t seed, GameKind g, int cycle) {
  return mix_seed(mix_seed(seed, static_cast<std::uint64_t>(g) + 1), static_cast<std::uint64_t>(cycle));
}

// One round robin per (game, cycle). Sides come from a seeded coin flip in
// cycle 1 and alternate afterwards; match order is a seeded permutation.
inline std::vector<Schedule> make_schedule(const std::vector<std::string>& players, const std::vector<GameKind>& games,
                                           int repeats, std::uint64_t seed) {
  if (players.size() < 2) throw TooFewPlayers();
  if (repeats < 1) throw Error("repeats must be at least 1");
  std::vector<Schedule> out;
  for (GameKind g : games) {
    std::vector<std::pair<std::size_t, std::size_t>> pairs;
    for (std::size_t i = 0; i < players.size(); ++i)
      for (std::size_t j = i + 1; j < players.size(); ++j) pairs.emplace_back(i, j);
    Rng sides(schedule_seed(seed, g, 0));
    std::vector<bool> swapped(pairs.size());
    for (std::size_t k = 0; k < pairs.size(); ++k) swapped[k] = sides.coin();
    for (int cycle = 1; cycle <= repeats; ++cycle) {
      Schedule s;
      s.game = g;
      s.cycle = cycle;
      s.seed = schedule_seed(seed, g, cycle);
      std::vector<std::size_t> order(pairs.size());
      for (std::size_t k = 0; k < order.size(); ++k) order[k] = k;
      Rng rng(s.seed);
      rng.shuffle(order);
      for (std::size_t k = 0; k < order.size(); ++k) {
        const auto [a, b] = pairs[order[k]];
        const bool swap = swapped[order[k]] != (cycle % 2 == 0);
        ScheduledMatch m;
        m.sequence = static_cast<int>(k) + 1;
        m.match_id = match_id(g, cycle, m.sequence);
        m.first = players[swap ? b : a];
        m.second = players[swap ? a : b];
        s.matches.push_back(std::move(m));
      }
      out.push_back(std::move(s));
    }
  }
  return out;
}

}  // namespace arena::tournament
