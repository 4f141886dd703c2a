#pragma once

// Reversi flips by walking the eight compass lines from the placed cell.

#include <array>
#include <set>

namespace oracle::flank {

// cells: 64 chars '.', 'b', 'w', index rank*8+file.
inline std::set<int> flips(const std::array<char, 64>& cells, int file, int rank, char me) {
  const char them = me == 'b' ? 'w' : 'b';
  std::set<int> out;
  for (int df = -1; df <= 1; ++df)
    for (int dr = -1; dr <= 1; ++dr) {
      if (!df && !dr) continue;
      std::set<int> run;
      int f = file + df, r = rank + dr;
      while (f >= 0 && f < 8 && r >= 0 && r < 8 && cells[static_cast<std::size_t>(r * 8 + f)] == them) {
        run.insert(r * 8 + f);
        f += df;
        r += dr;
      }
      if (!run.empty() && f >= 0 && f < 8 && r >= 0 && r < 8 && cells[static_cast<std::size_t>(r * 8 + f)] == me)
        out.insert(run.begin(), run.end());
    }
  return out;
}

}  // namespace oracle::flank
