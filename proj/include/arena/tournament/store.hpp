#pragma once

#include <filesystem>
#include <fstream>
#include <map>
#include <mutex>
#include <optional>
#include <sstream>
#include <string>
#include <vector>

#include <nlohmann/json.hpp>

#include "arena/record.hpp"

namespace arena::tournament {

namespace fs = std::filesystem;

inline constexpr const char* kManifestName = "manifest.json";
inline constexpr int kManifestFormat = 1;

inline fs::path record_file(const fs::path& dir, GameKind g) { return dir / (std::string(to_string(g)) + ".jsonl"); }

// Reads one JSONL record file. A torn final line (no trailing newline) is
// reported through `torn_tail` instead of failing, so an interrupted run can
// resume; any other bad line throws CorruptRecord.
inline std::vector<GameRecord> read_record_file(const fs::path& path, std::size_t* torn_tail = nullptr) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw Error("cannot open record file " + path.string());
  std::stringstream buf;
  buf << in.rdbuf();
  const std::string text = buf.str();
  std::vector<GameRecord> out;
  std::size_t pos = 0, line_no = 0;
  if (torn_tail) *torn_tail = text.size();
  while (pos < text.size()) {
    const auto nl = text.find('\n', pos);
    const bool complete = nl != std::string::npos;
    const std::string line = text.substr(pos, complete ? nl - pos : std::string::npos);
    ++line_no;
    if (!line.empty()) {
      try {
        out.push_back(record_from_line(line));
      } catch (const ParseError& e) {
        if (!complete && torn_tail) {
          *torn_tail = pos;
          break;
        }
        throw CorruptRecord(path.filename().string() + ":" + std::to_string(line_no), 0, e.what());
      }
    }
    if (!complete) break;
    pos = nl + 1;
  }
  return out;
}

inline void write_file_atomic(const fs::path& path, const std::string& content) {
  const fs::path tmp = path.string() + ".tmp";
  {
    std::ofstream out(tmp, std::ios::binary | std::ios::trunc);
    if (!out) throw Error("cannot write " + tmp.string());
    out << content;
  }
  fs::rename(tmp, path);
}

// Append-only store: one JSONL file per game kind plus a manifest listing
// the configuration and the match ids in each file.
class RecordStore {
 public:
  explicit RecordStore(fs::path dir) : dir_(std::move(dir)) {}

  const fs::path& dir() const { return dir_; }

  // Prepares the directory for a run of `config` (canonical JSON). Existing
  // records are kept for resume when the manifest's config matches; with
  // `fresh` they are removed first. Throws ConfigError on a mismatch.
  void open_for_run(const nlohmann::json& config, const std::vector<GameKind>& games, bool fresh = false) {
    std::lock_guard lock(m_);
    fs::create_directories(dir_);
    const fs::path manifest = dir_ / kManifestName;
    if (fresh) {
      fs::remove(manifest);
      for (GameKind g : kAllGames) fs::remove(record_file(dir_, g));
    }
    config_ = config;
    games_ = games;
    records_.clear();
    order_.clear();
    if (fs::exists(manifest)) {
      nlohmann::json j;
      try {
        std::ifstream in(manifest);
        j = nlohmann::json::parse(in);
      } catch (const nlohmann::json::exception& e) {
        throw CorruptRecord(kManifestName, 0, e.what());
      }
      if (j.value("config", nlohmann::json()) != config)
        throw ConfigError("records_dir", "'" + dir_.string() +
                                             "' holds records of a different configuration; use --fresh or another "
                                             "directory");
    }
    for (GameKind g : games) {
      const fs::path f = record_file(dir_, g);
      if (!fs::exists(f)) continue;
      std::size_t keep = 0;
      for (auto& r : read_record_file(f, &keep)) {
        order_[g].push_back(r.match_id);
        records_.emplace(r.match_id, std::move(r));
      }
      if (keep != fs::file_size(f)) fs::resize_file(f, keep);
    }
    write_manifest();
  }

  std::optional<GameRecord> find(const std::string& match_id) const {
    std::lock_guard lock(m_);
    auto it = records_.find(match_id);
    if (it == records_.end()) return std::nullopt;
    return it->second;
  }

  std::size_t size() const {
    std::lock_guard lock(m_);
    return records_.size();
  }

  // Writes the record line, flushes, then updates the manifest.
  void append(const GameRecord& r) {
    std::lock_guard lock(m_);
    {
      std::ofstream out(record_file(dir_, r.game), std::ios::binary | std::ios::app);
      if (!out) throw Error("cannot append to " + record_file(dir_, r.game).string());
      out << to_line(r) << '\n';
      out.flush();
      if (!out) throw Error("write failed for " + record_file(dir_, r.game).string());
    }
    order_[r.game].push_back(r.match_id);
    records_[r.match_id] = r;
    write_manifest();
  }

 private:
  void write_manifest() {
    nlohmann::json j;
    j["format"] = kManifestFormat;
    j["config"] = config_;
    nlohmann::json games = nlohmann::json::object();
    for (GameKind g : games_) {
      auto it = order_.find(g);
      games[std::string(to_string(g))] = {
          {"file", record_file(".", g).filename().string()},
          {"matches", it == order_.end() ? nlohmann::json::array() : nlohmann::json(it->second)}};
    }
    j["games"] = games;
    write_file_atomic(dir_ / kManifestName, j.dump(2) + "\n");
  }

  fs::path dir_;
  mutable std::mutex m_;
  nlohmann::json config_;
  std::vector<GameKind> games_;
  std::map<std::string, GameRecord> records_;
  std::map<GameKind, std::vector<std::string>> order_;
};

struct LoadedRecords {
  nlohmann::json config;  // canonical config from the manifest
  std::vector<GameRecord> records;  // sorted by game, cycle, sequence
};

// Read-only load for reports and replays.
inline LoadedRecords load_records(const fs::path& dir) {
  const fs::path manifest = dir / kManifestName;
  if (!fs::exists(manifest)) throw Error("no " + std::string(kManifestName) + " in " + dir.string());
  LoadedRecords out;
  nlohmann::json j;
  try {
    std::ifstream in(manifest);
    j = nlohmann::json::parse(in);
  } catch (const nlohmann::json::exception& e) {
    throw CorruptRecord(kManifestName, 0, e.what());
  }
  out.config = j.at("config");
  for (const auto& [name, entry] : j.at("games").items()) {
    const fs::path f = dir / entry.at("file").get<std::string>();
    if (!fs::exists(f)) continue;
    for (auto& r : read_record_file(f)) out.records.push_back(std::move(r));
  }
  std::sort(out.records.begin(), out.records.end(), [](const GameRecord& a, const GameRecord& b) {
    return std::tie(a.game, a.cycle, a.sequence) < std::tie(b.game, b.cycle, b.sequence);
  });
  return out;
}

}  // namespace arena::tournament
