#pragma once

#include <algorithm>
#include <cstdint>
#include <map>
#include <set>
#include <sstream>
#include <string>
#include <utility>
#include <vector>

#include "arena/errors.hpp"

// Performance Loop Graph: players are vertices, an edge points from the
// winner of a head-to-head series to its loser, drawn series add no edge.
namespace arena::plg {

struct SeriesResult {
  std::string x;
  std::string y;
  int wins_x = 0;
  int wins_y = 0;
  int draws = 0;
};

class PlgGraph {
 public:
  PlgGraph() = default;
  explicit PlgGraph(std::vector<std::string> vertices) : names_(std::move(vertices)) {
    adj_.assign(names_.size(), std::vector<char>(names_.size(), 0));
    for (std::size_t i = 0; i < names_.size(); ++i) {
      if (!index_.emplace(names_[i], static_cast<int>(i)).second) throw Error("duplicate vertex " + names_[i]);
    }
  }

  int size() const { return static_cast<int>(names_.size()); }
  const std::vector<std::string>& vertices() const { return names_; }
  const std::string& name(int v) const { return names_[static_cast<std::size_t>(v)]; }

  int index_of(const std::string& id) const {
    auto it = index_.find(id);
    if (it == index_.end()) throw UnknownVertex(id);
    return it->second;
  }

  bool has_edge(int from, int to) const { return adj_[static_cast<std::size_t>(from)][static_cast<std::size_t>(to)] != 0; }

  void add_edge(int from, int to) {
    if (from == to) throw Error("self-edge on " + name(from));
    if (has_edge(to, from)) throw Error("edge " + name(to) + "->" + name(from) + " already points the other way");
    adj_[static_cast<std::size_t>(from)][static_cast<std::size_t>(to)] = 1;
  }
  void add_edge(const std::string& from, const std::string& to) { add_edge(index_of(from), index_of(to)); }

  void add_draw(int a, int b) { draws_.insert(std::minmax(a, b)); }
  const std::set<std::pair<int, int>>& draws() const { return draws_; }

  std::vector<std::pair<int, int>> edges() const {
    std::vector<std::pair<int, int>> out;
    for (int i = 0; i < size(); ++i)
      for (int j = 0; j < size(); ++j)
        if (has_edge(i, j)) out.emplace_back(i, j);
    return out;
  }

  std::vector<int> successors(int v) const {
    std::vector<int> out;
    for (int j = 0; j < size(); ++j)
      if (has_edge(v, j)) out.push_back(j);
    return out;
  }

  // Same vertices, every edge reversed.
  PlgGraph reversed() const {
    PlgGraph g(names_);
    for (auto [a, b] : edges()) g.add_edge(b, a);
    g.draws_ = draws_;
    return g;
  }

  // Induced subgraph without vertex v.
  PlgGraph without(int v) const {
    std::vector<std::string> keep;
    for (int i = 0; i < size(); ++i)
      if (i != v) keep.push_back(name(i));
    PlgGraph g(keep);
    for (auto [a, b] : edges())
      if (a != v && b != v) g.add_edge(name(a), name(b));
    return g;
  }

 private:
  std::vector<std::string> names_;
  std::map<std::string, int> index_;
  std::vector<std::vector<char>> adj_;
  std::set<std::pair<int, int>> draws_;
};

// Majority rule over each pair's series; vertices in order of first
// appearance unless `vertices` is given.
inline PlgGraph build_plg(const std::vector<SeriesResult>& series, int series_length = 3,
                          std::vector<std::string> vertices = {}) {
  if (vertices.empty()) {
    std::set<std::string> seen;
    for (const auto& s : series)
      for (const auto* id : {&s.x, &s.y})
        if (seen.insert(*id).second) vertices.push_back(*id);
  }
  PlgGraph g(vertices);
  std::set<std::pair<int, int>> pairs;
  for (const auto& s : series) {
    if (s.wins_x < 0 || s.wins_y < 0 || s.draws < 0 || s.wins_x + s.wins_y + s.draws != series_length)
      throw MalformedSeries("series " + s.x + " vs " + s.y + " does not sum to " + std::to_string(series_length) +
                            " games");
    const int a = g.index_of(s.x), b = g.index_of(s.y);
    if (a == b) throw MalformedSeries("player " + s.x + " paired with itself");
    if (!pairs.insert(std::minmax(a, b)).second) throw DuplicatePair(s.x, s.y);
    if (s.wins_x > s.wins_y) g.add_edge(a, b);
    else if (s.wins_y > s.wins_x) g.add_edge(b, a);
    else g.add_draw(a, b);
  }
  return g;
}

// (out_degree, in_degree) = (series won, series lost).
inline std::pair<int, int> degrees(const PlgGraph& g, const std::string& id) {
  const int v = g.index_of(id);
  int out = 0, in = 0;
  for (int j = 0; j < g.size(); ++j) {
    out += g.has_edge(v, j);
    in += g.has_edge(j, v);
  }
  return {out, in};
}

struct LoopStats {
  std::uint64_t loop_count = 0;
  bool count_is_lower_bound = false;  // enumeration stopped at the cap
  int max_loop_length = 0;
  std::vector<std::string> max_loop_witness;
  bool max_loop_exact = true;  // false if the search budget ran out
  std::map<int, std::uint64_t> length_histogram;
};

namespace detail {

// Vertices of the strongly connected component containing s within the
// subgraph induced by {v : v >= s}.
inline std::vector<char> component_from(const PlgGraph& g, int s) {
  const int n = g.size();
  std::vector<char> fwd(static_cast<std::size_t>(n), 0), bwd(static_cast<std::size_t>(n), 0);
  auto flood = [&](std::vector<char>& mark, bool forward) {
    std::vector<int> stack{s};
    mark[static_cast<std::size_t>(s)] = 1;
    while (!stack.empty()) {
      const int v = stack.back();
      stack.pop_back();
      for (int w = s; w < n; ++w) {
        const bool e = forward ? g.has_edge(v, w) : g.has_edge(w, v);
        if (e && !mark[static_cast<std::size_t>(w)]) {
          mark[static_cast<std::size_t>(w)] = 1;
          stack.push_back(w);
        }
      }
    }
  };
  flood(fwd, true);
  flood(bwd, false);
  for (int v = 0; v < n; ++v) fwd[static_cast<std::size_t>(v)] &= bwd[static_cast<std::size_t>(v)];
  return fwd;
}

// Johnson's elementary-circuit enumeration rooted at the least vertex of
// each cycle, so every cycle is found exactly once.
class Johnson {
 public:
  Johnson(const PlgGraph& g, std::uint64_t cap, LoopStats& stats) : g_(g), cap_(cap), stats_(stats) {}

  void run() {
    const int n = g_.size();
    for (int s = 0; s < n && !stop_; ++s) {
      comp_ = component_from(g_, s);
      int members = 0;
      for (char c : comp_) members += c;
      if (members < 2) continue;
      s_ = s;
      blocked_.assign(static_cast<std::size_t>(n), 0);
      b_.assign(static_cast<std::size_t>(n), {});
      stack_.clear();
      circuit(s);
    }
  }

 private:
  void unblock(int u) {
    blocked_[static_cast<std::size_t>(u)] = 0;
    auto pending = std::move(b_[static_cast<std::size_t>(u)]);
    b_[static_cast<std::size_t>(u)].clear();
    for (int w : pending)
      if (blocked_[static_cast<std::size_t>(w)]) unblock(w);
  }

  bool circuit(int v) {
    bool found = false;
    stack_.push_back(v);
    blocked_[static_cast<std::size_t>(v)] = 1;
    for (int w = s_; w < g_.size() && !stop_; ++w) {
      if (!comp_[static_cast<std::size_t>(w)] || !g_.has_edge(v, w)) continue;
      if (w == s_) {
        emit();
        found = true;
      } else if (!blocked_[static_cast<std::size_t>(w)] && circuit(w)) {
        found = true;
      }
    }
    if (found) {
      unblock(v);
    } else {
      for (int w = s_; w < g_.size(); ++w) {
        if (!comp_[static_cast<std::size_t>(w)] || !g_.has_edge(v, w)) continue;
        auto& list = b_[static_cast<std::size_t>(w)];
        if (std::find(list.begin(), list.end(), v) == list.end()) list.push_back(v);
      }
    }
    stack_.pop_back();
    return found;
  }

  void emit() {
    if (stats_.loop_count >= cap_) {
      stats_.count_is_lower_bound = true;
      stop_ = true;
      return;
    }
    ++stats_.loop_count;
    const int len = static_cast<int>(stack_.size());
    ++stats_.length_histogram[len];
    if (len > stats_.max_loop_length) {
      stats_.max_loop_length = len;
      stats_.max_loop_witness.clear();
      for (int v : stack_) stats_.max_loop_witness.push_back(g_.name(v));
    }
  }

  const PlgGraph& g_;
  std::uint64_t cap_;
  LoopStats& stats_;
  bool stop_ = false;
  int s_ = 0;
  std::vector<char> comp_;
  std::vector<char> blocked_;
  std::vector<std::vector<int>> b_;
  std::vector<int> stack_;
};

// Depth-first branch and bound for the longest simple cycle. Starts from
// `best` (a known cycle length) and improves it in place.
class LongestCycle {
 public:
  LongestCycle(const PlgGraph& g, std::uint64_t budget, LoopStats& stats) : g_(g), budget_(budget), stats_(stats) {}

  void run() {
    const int n = g_.size();
    for (int s = 0; s < n && !out_of_budget_; ++s) {
      comp_ = component_from(g_, s);
      int members = 0;
      for (char c : comp_) members += c;
      if (members < 2 || members <= stats_.max_loop_length) continue;
      s_ = s;
      comp_size_ = members;
      visited_.assign(static_cast<std::size_t>(n), 0);
      path_.assign(1, s);
      visited_[static_cast<std::size_t>(s)] = 1;
      dfs(s);
    }
    stats_.max_loop_exact = !out_of_budget_;
  }

 private:
  // Unvisited component vertices reachable from v through unvisited ones.
  int reachable_unvisited(int v) const {
    std::vector<char> seen(visited_.size(), 0);
    std::vector<int> stack{v};
    int count = 0;
    while (!stack.empty()) {
      const int u = stack.back();
      stack.pop_back();
      for (int w = s_ + 1; w < g_.size(); ++w) {
        if (!comp_[static_cast<std::size_t>(w)] || visited_[static_cast<std::size_t>(w)] ||
            seen[static_cast<std::size_t>(w)] || !g_.has_edge(u, w))
          continue;
        seen[static_cast<std::size_t>(w)] = 1;
        ++count;
        stack.push_back(w);
      }
    }
    return count;
  }

  void dfs(int v) {
    if (++nodes_ > budget_) {
      out_of_budget_ = true;
      return;
    }
    const int len = static_cast<int>(path_.size());
    if (len >= 2 && g_.has_edge(v, s_) && len > stats_.max_loop_length) {
      stats_.max_loop_length = len;
      stats_.max_loop_witness.clear();
      for (int u : path_) stats_.max_loop_witness.push_back(g_.name(u));
    }
    if (stats_.max_loop_length >= comp_size_) return;
    if (len + reachable_unvisited(v) <= stats_.max_loop_length) return;
    for (int w = s_ + 1; w < g_.size() && !out_of_budget_; ++w) {
      if (!comp_[static_cast<std::size_t>(w)] || visited_[static_cast<std::size_t>(w)] || !g_.has_edge(v, w)) continue;
      visited_[static_cast<std::size_t>(w)] = 1;
      path_.push_back(w);
      dfs(w);
      path_.pop_back();
      visited_[static_cast<std::size_t>(w)] = 0;
      if (stats_.max_loop_length >= comp_size_) return;
    }
  }

  const PlgGraph& g_;
  std::uint64_t budget_;
  LoopStats& stats_;
  std::uint64_t nodes_ = 0;
  bool out_of_budget_ = false;
  int s_ = 0;
  int comp_size_ = 0;
  std::vector<char> comp_;
  std::vector<char> visited_;
  std::vector<int> path_;
};

}  // namespace detail

inline constexpr std::uint64_t kDefaultLoopCap = 10'000'000;
inline constexpr std::uint64_t kDefaultSearchBudget = 50'000'000;

// Counts simple directed cycles (rotations are one loop) up to `cap` and
// finds the longest one. When the cap cuts the enumeration short the longest
// cycle comes from a separate bounded DFS.
inline LoopStats enumerate_loops(const PlgGraph& g, std::uint64_t cap = kDefaultLoopCap,
                                 std::uint64_t search_budget = kDefaultSearchBudget) {
  LoopStats stats;
  detail::Johnson(g, cap, stats).run();
  if (stats.count_is_lower_bound) detail::LongestCycle(g, search_budget, stats).run();
  return stats;
}

// Player labels: A, B, ... Z, then P27, P28, ...
inline std::string label_for(std::size_t i) {
  if (i < 26) return std::string(1, static_cast<char>('A' + i));
  return "P" + std::to_string(i + 1);
}

inline std::string to_dot(const PlgGraph& g, const std::string& graph_name,
                          const std::map<std::string, std::string>& labels = {}) {
  std::ostringstream out;
  out << "digraph \"" << graph_name << "\" {\n";
  for (int v = 0; v < g.size(); ++v) {
    auto it = labels.find(g.name(v));
    const std::string label = it == labels.end() ? label_for(static_cast<std::size_t>(v)) : it->second;
    out << "  \"" << label << "\" [tooltip=\"" << g.name(v) << "\"];\n";
  }
  auto lab = [&](int v) {
    auto it = labels.find(g.name(v));
    return it == labels.end() ? label_for(static_cast<std::size_t>(v)) : it->second;
  };
  for (auto [a, b] : g.edges()) out << "  \"" << lab(a) << "\" -> \"" << lab(b) << "\";\n";
  out << "}\n";
  return out.str();
}

}  // namespace arena::plg
