#pragma once

#include <optional>
#include <sstream>
#include <string>
#include <string_view>

#include "arena/errors.hpp"
#include "arena/freestyle/ruleset.hpp"
#include "arena/sentiment.hpp"

namespace arena::agents {

using sentiment::Emotion;

// The per-round triple every player returns.
struct AgentResponse {
  std::string move;
  Emotion emotion = Emotion::Peaceful;
  std::string analysis;
  friend bool operator==(const AgentResponse&, const AgentResponse&) = default;
};

inline constexpr std::size_t kDefaultAnalysisLimit = 600;

inline std::string format_response(const AgentResponse& r) {
  return "MOVE: " + r.move + "\nEMOTION: " + std::string(1, sentiment::letter(r.emotion)) + "\nANALYSIS: " + r.analysis +
         "\n";
}

// Reads the MOVE / EMOTION / ANALYSIS lines (keys case-insensitive, any
// order, other lines ignored). Throws ParseError naming what is missing.
// Analysis longer than `analysis_limit` is truncated.
inline AgentResponse parse_response(std::string_view text, std::size_t analysis_limit = kDefaultAnalysisLimit) {
  std::optional<std::string> move, emotion, analysis;
  std::istringstream in{std::string(text)};
  for (std::string line; std::getline(in, line);) {
    const auto colon = line.find(':');
    if (colon == std::string::npos) continue;
    const std::string key = freestyle::detail::lower(freestyle::detail::trim(line.substr(0, colon)));
    const std::string value = freestyle::detail::trim(line.substr(colon + 1));
    if (key == "move" && !move) move = value;
    else if (key == "emotion" && !emotion) emotion = value;
    else if (key == "analysis" && !analysis) analysis = value;
  }
  if (!move || move->empty()) throw ParseError("missing MOVE line");
  if (!emotion) throw ParseError("missing EMOTION line");
  if (!analysis) throw ParseError("missing ANALYSIS line");
  const auto e = sentiment::parse_emotion(*emotion);
  if (!e) throw ParseError("EMOTION must be one of A, B, C, D, E");
  AgentResponse r{*move, *e, *analysis};
  if (r.analysis.size() > analysis_limit) r.analysis.resize(analysis_limit);
  return r;
}

}  // namespace arena::agents
