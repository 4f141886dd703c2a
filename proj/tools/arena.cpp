// arena: run tournaments, replay records, emit reports.

#include <cstdio>
#include <cstdlib>
#include <filesystem>
#include <fstream>
#include <iostream>
#include <string>

#include <CLI11.hpp>

#include "arena/games/chess.hpp"
#include "arena/tournament/render.hpp"
#include "arena/tournament/report.hpp"
#include "arena/tournament/tournament.hpp"

namespace fs = std::filesystem;
using namespace arena;
using namespace arena::tournament;

namespace {

constexpr const char* kRecordsEnv = "ARENA_RECORDS_DIR";

enum Exit { kOk = 0, kFailure = 1, kConfig = 2, kForfeits = 3, kInvariant = 4 };

// Flag beats env var beats config file.
std::string records_dir_for(const TournamentConfig& c, const std::string& flag) {
  if (!flag.empty()) return flag;
  if (const char* env = std::getenv(kRecordsEnv); env && *env) return env;
  return c.records_dir;
}

std::string default_records_dir() {
  if (const char* env = std::getenv(kRecordsEnv); env && *env) return env;
  return "records";
}

int cmd_run(const std::string& config_path, const std::string& dir_flag, bool fresh, bool quiet) {
  const TournamentConfig c = load_config(config_path);
  const std::string dir = records_dir_for(c, dir_flag);
  RecordStore store(dir);
  store.open_for_run(canonical_json(c), c.games, fresh);
  std::mutex out_m;
  Progress progress;
  if (!quiet) {
    progress = [&](const GameRecord& r, double ex, double ey) {
      std::lock_guard lock(out_m);
      std::printf("%s\t%s\t%.2f\t%.2f\n", r.match_id.c_str(), std::string(to_string(r.outcome)).c_str(), ex, ey);
      std::fflush(stdout);
    };
  }
  const auto res = run_tournament(c, store, progress);
  std::fprintf(stderr, "played %d, resumed %d, forfeits %d; records in %s\n", res.played, res.resumed, res.forfeits,
               dir.c_str());
  return kOk;
}

// Accepts a record file or a records directory.
GameRecord find_record(const fs::path& where, const std::string& id) {
  std::vector<fs::path> files;
  if (fs::is_directory(where)) {
    for (GameKind g : kAllGames)
      if (fs::exists(record_file(where, g))) files.push_back(record_file(where, g));
  } else {
    files.push_back(where);
  }
  for (const auto& f : files)
    for (auto& r : read_record_file(f))
      if (r.match_id == id) return r;
  throw Error("match '" + id + "' not found in " + where.string());
}

int cmd_replay(const std::string& where, const std::string& id, const std::string& svg_dir) {
  const GameRecord r = find_record(where, id);
  std::cout << render_ascii(r);
  if (!svg_dir.empty()) {
    fs::create_directories(svg_dir);
    for (const auto& f : replay_frames(r)) {
      char name[32];
      std::snprintf(name, sizeof name, "%03d.svg", f.round);
      std::ofstream(fs::path(svg_dir) / (r.match_id + "-" + name)) << render_svg(f.state, f.caption);
    }
  }
  return kOk;
}

int cmd_report(const std::string& dir, const std::string& out) {
  const auto bundle = build_report(load_records(dir));
  for (const auto& w : bundle.warnings) std::cerr << "warning: " << w << "\n";
  const fs::path target = out.empty() ? fs::path(dir) / "report" : fs::path(out);
  write_report(bundle, target);
  std::cout << "wrote " << bundle.files.size() << " files to " << target.string() << "\n";
  return kOk;
}

int cmd_validate(const std::string& path) {
  const TournamentConfig c = load_config(path);
  const auto sched = make_schedule(c.player_ids(), c.games, c.repeats, c.seed);
  std::size_t matches = 0;
  for (const auto& s : sched) matches += s.matches.size();
  std::cout << "ok: " << c.players.size() << " players, " << c.games.size() << " games, " << c.repeats
            << " cycles, " << matches << " matches\n";
  return kOk;
}

int cmd_perft(const std::string& fen, int depth, bool divide) {
  const chess::Position p = chess::from_fen(fen);
  if (!divide) {
    std::cout << chess::perft(p, depth) << "\n";
    return kOk;
  }
  std::uint64_t total = 0;
  for (const auto& m : chess::legal_specs(p)) {
    const std::uint64_t n = depth > 1 ? chess::perft(chess::make(p, m), depth - 1) : 1;
    std::cout << chess::uci(m) << ": " << n << "\n";
    total += n;
  }
  std::cout << "\ntotal: " << total << "\n";
  return kOk;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Game arena: round-robin tournaments between agents"};
  app.require_subcommand(1);

  std::string config, dir_flag, where, match, svg_dir, report_dir = default_records_dir(), out,
                                                         fen(chess::kStartFen);
  bool fresh = false, quiet = false, divide = false;
  int depth = 1;

  auto* run = app.add_subcommand("run", "Run (or resume) a tournament");
  run->add_option("config", config, "Config file")->required();
  run->add_option("--records-dir", dir_flag, std::string("Records directory (overrides ") + kRecordsEnv + ")");
  run->add_flag("--fresh", fresh, "Discard existing records first");
  run->add_flag("--quiet", quiet, "No per-match progress lines");

  auto* replay = app.add_subcommand("replay", "Replay one match");
  replay->add_option("records", where, "Record file or records directory")->required();
  replay->add_option("match_id", match, "Match id")->required();
  replay->add_option("--svg-dir", svg_dir, "Also write one SVG per frame here");

  auto* report = app.add_subcommand("report", "Build report files from records");
  report->add_option("records_dir", report_dir, "Records directory");
  report->add_option("--out", out, "Output directory (default <records_dir>/report)");

  auto* validate = app.add_subcommand("validate-config", "Check a config file");
  validate->add_option("config", config, "Config file")->required();

  auto* perft = app.add_subcommand("perft", "Count chess move paths");
  perft->add_option("depth", depth, "Depth")->required()->check(CLI::Range(0, 10));
  perft->add_option("--fen", fen, "Start position");
  perft->add_flag("--divide", divide, "Per-move breakdown");

  CLI11_PARSE(app, argc, argv);

  try {
    if (*run) return cmd_run(config, dir_flag, fresh, quiet);
    if (*replay) return cmd_replay(where, match, svg_dir);
    if (*report) return cmd_report(report_dir, out);
    if (*validate) return cmd_validate(config);
    if (*perft) return cmd_perft(fen, depth, divide);
  } catch (const ConfigError& e) {
    std::cerr << "config error: " << e.what() << "\n";
    return kConfig;
  } catch (const ForfeitThresholdExceeded& e) {
    std::cerr << "aborted: " << e.what() << "\n";
    return kForfeits;
  } catch (const EngineInvariantViolation& e) {
    std::cerr << "invariant violated: " << e.what() << "\n";
    return kInvariant;
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kFailure;
  }
  return kFailure;
}
