#pragma once

#include <algorithm>
#include <array>
#include <utility>
#include <cstdint>
#include <map>
#include <optional>
#include <span>
#include <string>
#include <string_view>
#include <vector>

#include "arena/core.hpp"
#include "arena/errors.hpp"

namespace arena::sentiment {

enum class Emotion : std::uint8_t { Desperate, Sad, Peaceful, Happy, Excited };

inline constexpr std::array<Emotion, 5> kAllEmotions = {Emotion::Desperate, Emotion::Sad, Emotion::Peaceful,
                                                        Emotion::Happy, Emotion::Excited};

// Desperate -2, Sad -1, Peaceful 0, Happy 1, Excited 2.
inline constexpr int score(Emotion e) { return static_cast<int>(e) - 2; }

inline constexpr char letter(Emotion e) { return static_cast<char>('A' + static_cast<int>(e)); }

inline std::string_view name(Emotion e) {
  switch (e) {
    case Emotion::Desperate: return "Desperate";
    case Emotion::Sad: return "Sad";
    case Emotion::Peaceful: return "Peaceful";
    case Emotion::Happy: return "Happy";
    case Emotion::Excited: return "Excited";
  }
  return "?";
}

// Accepts the option letter (A-E, optionally followed by '.' and the name)
// or the bare name, case-insensitively.
inline std::optional<Emotion> parse_emotion(std::string_view text) {
  std::string t;
  for (char c : text)
    if (c != ' ' && c != '\t' && c != '\r') t += static_cast<char>(c >= 'a' && c <= 'z' ? c - 'a' + 'A' : c);
  if (t.empty()) return std::nullopt;
  for (Emotion e : kAllEmotions) {
    std::string upper(name(e));
    for (char& c : upper) c = static_cast<char>(c >= 'a' && c <= 'z' ? c - 'a' + 'A' : c);
    if (t == upper || t == std::string(1, letter(e)) || t == std::string(1, letter(e)) + "." + upper ||
        t == std::string(1, letter(e)) + ".")
      return e;
  }
  return std::nullopt;
}

struct EmotionSample {
  std::string player;
  GameKind game = GameKind::TicTacToe;
  std::string match_id;
  int round_index = 1;
  Emotion emotion = Emotion::Peaceful;
  bool fallback = false;

  int score() const { return sentiment::score(emotion); }
};

// Expected emotion score under the empirical distribution of the samples.
inline double pss(std::span<const EmotionSample> samples) {
  if (samples.empty()) throw EmptySamples();
  std::array<std::int64_t, 5> counts{};
  for (const auto& s : samples) ++counts[static_cast<std::size_t>(s.emotion)];
  std::int64_t weighted = 0;
  for (Emotion e : kAllEmotions) weighted += counts[static_cast<std::size_t>(e)] * score(e);
  return static_cast<double>(weighted) / static_cast<double>(samples.size());
}

inline double pss(const std::vector<EmotionSample>& samples) { return pss(std::span<const EmotionSample>(samples)); }

struct HeatmapGrid {
  int round_bucket_width = 1;
  int score_levels = 5;
  // (round bucket, score bucket) -> frequency
  std::map<std::pair<int, int>, std::uint64_t> bins;
  std::uint64_t total = 0;

  int round_buckets() const {
    int hi = -1;
    for (const auto& [key, n] : bins) hi = std::max(hi, key.first);
    return hi + 1;
  }
};

// Round r lands in bucket (r - 1) / width; score z in bucket
// (z + 2) * levels / 5, so five levels map one bucket per emotion.
inline HeatmapGrid heatmap(std::span<const EmotionSample> samples, int round_bucket_width, int score_levels = 5) {
  if (round_bucket_width < 1) throw Error("round bucket width must be at least 1");
  if (score_levels < 1) throw Error("score levels must be at least 1");
  HeatmapGrid g;
  g.round_bucket_width = round_bucket_width;
  g.score_levels = score_levels;
  for (const auto& s : samples) {
    const int rb = (s.round_index - 1) / round_bucket_width;
    const int sb = std::min(score_levels - 1, (s.score() + 2) * score_levels / 5);
    ++g.bins[{rb, sb}];
    ++g.total;
  }
  return g;
}

inline HeatmapGrid heatmap(const std::vector<EmotionSample>& samples, int width, int levels = 5) {
  return heatmap(std::span<const EmotionSample>(samples), width, levels);
}

struct PssRow {
  std::string player;
  std::map<GameKind, double> per_game;  // absent games have no entry
  std::optional<double> average;        // unweighted mean over present games
  bool average_partial = false;         // some games were absent
  std::optional<double> weighted_average;  // pooled over all samples
  double fallback_fraction = 0;
  std::uint64_t samples = 0;
};

// One row per player (in `players` order, then any extra ids sorted).
inline std::vector<PssRow> pss_table(std::span<const EmotionSample> samples, const std::vector<std::string>& players = {},
                                     std::span<const GameKind> games = kAllGames) {
  std::map<std::string, std::map<GameKind, std::vector<EmotionSample>>> by;
  for (const auto& s : samples) by[s.player][s.game].push_back(s);
  std::vector<std::string> order = players;
  for (const auto& [p, _] : by)
    if (std::find(order.begin(), order.end(), p) == order.end()) order.push_back(p);

  std::vector<PssRow> rows;
  for (const auto& p : order) {
    PssRow row;
    row.player = p;
    std::vector<EmotionSample> pooled;
    std::uint64_t fallbacks = 0;
    double sum = 0;
    int present = 0;
    for (GameKind g : games) {
      auto it = by[p].find(g);
      if (it == by[p].end() || it->second.empty()) {
        row.average_partial = true;
        continue;
      }
      const double v = pss(it->second);
      row.per_game[g] = v;
      sum += v;
      ++present;
      for (const auto& s : it->second) {
        pooled.push_back(s);
        fallbacks += s.fallback;
      }
    }
    if (present) row.average = sum / present;
    if (!pooled.empty()) {
      row.weighted_average = pss(pooled);
      row.fallback_fraction = static_cast<double>(fallbacks) / static_cast<double>(pooled.size());
    }
    row.samples = pooled.size();
    rows.push_back(std::move(row));
  }
  return rows;
}

}  // namespace arena::sentiment
