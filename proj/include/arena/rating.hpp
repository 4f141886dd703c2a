#pragma once

#include <cmath>
#include <map>
#include <string>
#include <vector>

#include "arena/errors.hpp"

namespace arena::rating {

struct EloParams {
  double initial_rating = 1500.0;
  double k_factor = 32.0;
  // Spread of the performance difference in the Gaussian model (sqrt(2) times
  // the per-player standard deviation). Only used by the validation route.
  double sigma = std::sqrt(2.0) * 209.0;
  // true: Y's expectation is 1 - P(D), making every update zero-sum.
  // false: the literal reading where both players use P(D).
  bool zero_sum = true;

  void validate() const {
    if (!(k_factor > 0)) throw Error("k_factor must be positive");
    if (!(sigma > 0)) throw Error("sigma must be positive");
  }
};

// Logistic expectation of scoring against an opponent rated d points lower.
inline double expected_score_logistic(double d) { return 1.0 / (1.0 + std::pow(10.0, -d / 400.0)); }

// Gaussian-model expectation: 1/2 plus the N(0, sigma^2) mass on [0, d].
inline double expected_score_gaussian(double d, double sigma) {
  if (!(sigma > 0)) throw Error("sigma must be positive");
  return 0.5 * std::erfc(-d / (sigma * std::sqrt(2.0)));
}

enum class MatchResult { XWins, YWins, Draw };

inline double actual_score_x(MatchResult r) {
  switch (r) {
    case MatchResult::XWins: return 1.0;
    case MatchResult::YWins: return 0.0;
    case MatchResult::Draw: return 0.5;
  }
  return 0.5;
}

struct EloEntry {
  std::string match_id;
  std::string x;
  std::string y;
  double pre_x = 0;
  double pre_y = 0;
  MatchResult result = MatchResult::Draw;
  double post_x = 0;
  double post_y = 0;
};

class EloTable {
 public:
  explicit EloTable(EloParams params = {}) : params_(params) { params_.validate(); }

  const EloParams& params() const { return params_; }

  void register_player(const std::string& id) { ratings_.try_emplace(id, params_.initial_rating); }
  bool has_player(const std::string& id) const { return ratings_.count(id) != 0; }

  double rating(const std::string& id) const {
    auto it = ratings_.find(id);
    if (it == ratings_.end()) throw UnknownPlayer(id);
    return it->second;
  }

  const std::map<std::string, double>& ratings() const { return ratings_; }
  const std::vector<EloEntry>& history() const { return history_; }

  // Applies one result in place and appends it to the history.
  void record(const std::string& x, const std::string& y, MatchResult result, const std::string& match_id = {}) {
    auto ix = ratings_.find(x);
    if (ix == ratings_.end()) throw UnknownPlayer(x);
    auto iy = ratings_.find(y);
    if (iy == ratings_.end()) throw UnknownPlayer(y);
    const double rx = ix->second, ry = iy->second;
    const double p = expected_score_logistic(rx - ry);
    const double wx = actual_score_x(result);
    const double dx = params_.k_factor * (wx - p);
    const double dy = params_.zero_sum ? -dx : params_.k_factor * ((1.0 - wx) - p);
    ix->second = rx + dx;
    iy->second = ry + dy;
    history_.push_back(EloEntry{match_id, x, y, rx, ry, result, ix->second, iy->second});
  }

 private:
  EloParams params_;
  std::map<std::string, double> ratings_;
  std::vector<EloEntry> history_;
};

inline EloTable update(const EloTable& table, const std::string& x, const std::string& y, MatchResult result,
                       const std::string& match_id = {}) {
  EloTable next = table;
  next.record(x, y, result, match_id);
  return next;
}

// Rebuilds a table from the results in `history` alone.
inline EloTable replay(const EloParams& params, const std::vector<std::string>& players,
                       const std::vector<EloEntry>& history) {
  EloTable t(params);
  for (const auto& p : players) t.register_player(p);
  for (const auto& e : history) t.record(e.x, e.y, e.result, e.match_id);
  return t;
}

}  // namespace arena::rating
