#pragma once

#include <cmath>
#include <cstdio>
#include <filesystem>
#include <map>
#include <string>
#include <vector>

#include <nlohmann/json.hpp>

#include "arena/plg.hpp"
#include "arena/sentiment.hpp"
#include "arena/tournament/config.hpp"
#include "arena/tournament/stats.hpp"
#include "arena/tournament/store.hpp"

namespace arena::tournament {

// Fixed-point text with no negative zero.
inline std::string fixed(double v, int digits = 2) {
  char buf[64];
  std::snprintf(buf, sizeof buf, "%.*f", digits, v);
  std::string s = buf;
  if (s[0] == '-' && s.find_first_not_of("-0.") == std::string::npos) s.erase(0, 1);
  return s;
}

// Shortest text that reads back to the same double.
inline std::string exact(double v) { return nlohmann::json(v).dump(); }

struct ReportFile {
  std::string name;
  std::string content;
};

struct ReportBundle {
  std::vector<ReportFile> files;  // in a fixed order
  std::vector<std::string> warnings;

  const std::string* find(const std::string& name) const {
    for (const auto& f : files)
      if (f.name == name) return &f.content;
    return nullptr;
  }
};

// Builds every report file from records alone (config comes from the
// manifest). Incomplete cycles produce warnings and a flag column.
inline ReportBundle build_report(const TournamentConfig& c, const std::vector<GameRecord>& records) {
  ReportBundle b;
  const auto ids = c.player_ids();
  std::map<std::string, std::string> label;
  for (std::size_t i = 0; i < ids.size(); ++i) label[ids[i]] = plg::label_for(i);

  std::vector<GameSummary> sums;
  for (GameKind g : c.games) sums.push_back(summarize_game(g, records, ids, c.elo, c.repeats, c.continuous_elo));
  for (const auto& s : sums)
    for (int cyc : s.incomplete_cycles) {
      int n = 0;
      for (const auto& r : records) n += r.game == s.game && r.cycle == cyc;
      b.warnings.push_back("IncompleteCycle: " + std::string(to_string(s.game)) + " cycle " + std::to_string(cyc) +
                           " has " + std::to_string(n) + " of " + std::to_string(expected_matches_per_cycle(ids.size())) +
                           " matches");
    }
  const bool partial = !b.warnings.empty();

  {  // Elo table, W/L/D as rounded-down per-cycle averages.
    std::string csv = "label,player";
    for (GameKind g : c.games) {
      const std::string n(to_string(g));
      csv += "," + n + "_elo," + n + "_w," + n + "_l," + n + "_d";
    }
    csv += ",average_elo,partial\n";
    for (const auto& id : ids) {
      csv += label[id] + "," + id;
      double sum = 0;
      for (const auto& s : sums) {
        const Tally& t = s.total_tally.at(id);
        const int cyc = std::max(1, s.cycles);
        const double e = s.average_elo.at(id);
        sum += e;
        csv += "," + fixed(e) + "," + std::to_string(t.wins / cyc) + "," + std::to_string(t.losses / cyc) + "," +
               std::to_string(t.draws / cyc);
      }
      csv += "," + fixed(sum / static_cast<double>(sums.size())) + "," + (partial ? "true" : "false") + "\n";
    }
    b.files.push_back({"elo.csv", csv});
  }
  {  // Raw per-cycle tables at full precision.
    std::string csv = "game,cycle,label,player,elo,wins,losses,draws,complete\n";
    for (const auto& s : sums)
      for (std::size_t ci = 0; ci < s.cycle_tables.size(); ++ci) {
        const int cyc = static_cast<int>(ci) + 1;
        const bool complete =
            std::find(s.incomplete_cycles.begin(), s.incomplete_cycles.end(), cyc) == s.incomplete_cycles.end();
        for (const auto& id : ids) {
          const Tally& t = s.cycle_tallies[ci].at(id);
          csv += std::string(to_string(s.game)) + "," + std::to_string(cyc) + "," + label[id] + "," + id + "," +
                 exact(s.cycle_tables[ci].rating(id)) + "," + std::to_string(t.wins) + "," +
                 std::to_string(t.losses) + "," + std::to_string(t.draws) + "," + (complete ? "true" : "false") +
                 "\n";
        }
      }
    b.files.push_back({"elo_cycles.csv", csv});
  }
  const auto samples = emotion_samples(records);
  {
    std::string csv = "label,player";
    for (GameKind g : c.games) csv += "," + std::string(to_string(g));
    csv += ",average,average_partial,weighted_average,fallback_fraction,samples\n";
    for (const auto& row : sentiment::pss_table(samples, ids, c.games)) {
      auto it = label.find(row.player);
      csv += (it == label.end() ? std::string("?") : it->second) + "," + row.player;
      for (GameKind g : c.games) {
        auto v = row.per_game.find(g);
        csv += "," + (v == row.per_game.end() ? std::string() : fixed(v->second, 4));
      }
      csv += "," + (row.average ? fixed(*row.average, 4) : std::string()) + "," +
             (row.average_partial ? "true" : "false") + "," +
             (row.weighted_average ? fixed(*row.weighted_average, 4) : std::string()) + "," +
             fixed(row.fallback_fraction, 4) + "," + std::to_string(row.samples) + "\n";
    }
    b.files.push_back({"pss.csv", csv});
  }
  {
    std::string csv =
        "game,matches,mean_rounds,mean_total_rounds_per_cycle,min_rounds,max_rounds,forfeits,negotiation_failures,"
        "incomplete_cycles\n";
    for (const auto& s : sums) {
      std::string inc;
      for (int cyc : s.incomplete_cycles) inc += (inc.empty() ? "" : " ") + std::to_string(cyc);
      csv += std::string(to_string(s.game)) + "," + std::to_string(s.rounds.matches) + "," +
             fixed(s.rounds.mean_rounds) + "," + fixed(s.rounds.mean_total_per_cycle) + "," +
             std::to_string(s.rounds.min_rounds) + "," + std::to_string(s.rounds.max_rounds) + "," +
             std::to_string(s.forfeits) + "," + std::to_string(s.negotiation_failures) + "," + inc + "\n";
    }
    b.files.push_back({"rounds.csv", csv});
  }
  nlohmann::json loops = nlohmann::json::object();
  std::vector<ReportFile> dots, heatmaps;
  for (GameKind g : c.games) {
    const std::string name(to_string(g));
    bool complete = false;
    const auto graph = plg_from_records(g, records, ids, c.repeats, &complete);
    const auto st = plg::enumerate_loops(graph, c.loop_cap, c.loop_search_budget);
    nlohmann::json witness = nlohmann::json::array();
    for (const auto& v : st.max_loop_witness) witness.push_back(label[v]);
    nlohmann::json hist = nlohmann::json::object();
    for (const auto& [len, n] : st.length_histogram) hist[std::to_string(len)] = n;
    nlohmann::json edges = nlohmann::json::array();
    for (auto [x, y] : graph.edges()) edges.push_back({label[graph.name(x)], label[graph.name(y)]});
    loops[name] = {{"loop_count", st.loop_count},
                   {"count_is_lower_bound", st.count_is_lower_bound},
                   {"max_loop_length", st.max_loop_length},
                   {"max_loop_exact", st.max_loop_exact},
                   {"max_loop_witness", witness},
                   {"length_histogram", hist},
                   {"edges", edges},
                   {"draw_pairs", graph.draws().size()},
                   {"series_complete", complete}};
    dots.push_back({"plg_" + name + ".dot", plg::to_dot(graph, "plg_" + name, label)});

    std::vector<sentiment::EmotionSample> mine;
    for (const auto& smp : samples)
      if (smp.game == g) mine.push_back(smp);
    auto grid_json = [&](const std::vector<sentiment::EmotionSample>& xs) {
      const auto h = sentiment::heatmap(xs, c.heatmap_bucket);
      nlohmann::json bins = nlohmann::json::array();
      for (const auto& [key, n] : h.bins) bins.push_back({key.first, key.second, n});
      return nlohmann::json{{"total", h.total}, {"round_buckets", h.round_buckets()}, {"bins", bins}};
    };
    nlohmann::json hm = {{"game", name},
                         {"round_bucket_width", c.heatmap_bucket},
                         {"score_levels", 5},
                         {"score_of_level", {-2, -1, 0, 1, 2}},
                         {"all", grid_json(mine)}};
    nlohmann::json per = nlohmann::json::object();
    for (const auto& id : ids) {
      std::vector<sentiment::EmotionSample> xs;
      for (const auto& smp : mine)
        if (smp.player == id) xs.push_back(smp);
      per[label[id]] = grid_json(xs);
    }
    hm["players"] = per;
    heatmaps.push_back({"heatmap_" + name + ".json", hm.dump(2) + "\n"});
  }
  b.files.push_back({"loops.json", loops.dump(2) + "\n"});
  for (auto& f : dots) b.files.push_back(std::move(f));
  for (auto& f : heatmaps) b.files.push_back(std::move(f));
  nlohmann::json labels = nlohmann::json::object();
  for (const auto& id : ids) labels[label[id]] = id;
  b.files.push_back({"labels.json", labels.dump(2) + "\n"});
  return b;
}

inline ReportBundle build_report(const LoadedRecords& loaded) {
  return build_report(parse_config(loaded.config), loaded.records);
}

inline void write_report(const ReportBundle& b, const std::filesystem::path& out) {
  std::filesystem::create_directories(out);
  for (const auto& f : b.files) write_file_atomic(out / f.name, f.content);
}

}  // namespace arena::tournament
