#pragma once

// Slow reference computations used only by tests.

#include <cmath>
#include <cstdio>
#include <limits>
#include <string>
#include <sys/wait.h>
#include <vector>

#include "dirmet/space.hpp"

namespace testing_support {

/// Shortest zigzag walk by listing every simple walk of the symmetrized
/// edge multigraph. Exponential; keep n tiny.
inline double brute_zigzag(const dirmet::FiniteDSpace& s, std::size_t from,
                           std::size_t to) {
  double best = std::numeric_limits<double>::infinity();
  std::vector<bool> seen(s.size(), false);
  auto walk = [&](auto&& self, std::size_t at, double length) -> void {
    if (at == to) {
      best = std::min(best, length);
      return;
    }
    seen[at] = true;
    for (const dirmet::Edge& e : s.edges()) {
      // Forward along the edge or backward against it.
      if (e.src == at && !seen[e.dst]) self(self, e.dst, length + e.length);
      if (e.dst == at && !seen[e.src]) self(self, e.src, length + e.length);
    }
    seen[at] = false;
  };
  walk(walk, from, 0.0);
  return best;
}

/// Reflexive-transitive closure by repeated boolean squaring.
inline std::vector<std::vector<bool>> closure_by_squaring(
    const dirmet::FiniteDSpace& s) {
  const std::size_t n = s.size();
  std::vector<std::vector<bool>> r(n, std::vector<bool>(n, false));
  for (std::size_t i = 0; i < n; ++i) r[i][i] = true;
  for (const dirmet::Edge& e : s.edges()) r[e.src][e.dst] = true;
  for (bool changed = true; changed;) {
    changed = false;
    auto next = r;
    for (std::size_t i = 0; i < n; ++i) {
      for (std::size_t k = 0; k < n; ++k) {
        if (!r[i][k]) continue;
        for (std::size_t j = 0; j < n; ++j) {
          if (r[k][j] && !next[i][j]) {
            next[i][j] = true;
            changed = true;
          }
        }
      }
    }
    r = std::move(next);
  }
  return r;
}

struct CommandResult {
  int status = -1;
  std::string out;
};

/// Runs a shell command, capturing stdout; stderr is discarded.
inline CommandResult run(const std::string& command) {
  CommandResult r;
  FILE* pipe = popen((command + " 2>/dev/null").c_str(), "r");
  if (pipe == nullptr) return r;
  char buf[4096];
  std::size_t got = 0;
  while ((got = fread(buf, 1, sizeof buf, pipe)) > 0) r.out.append(buf, got);
  const int raw = pclose(pipe);
  r.status = WIFEXITED(raw) ? WEXITSTATUS(raw) : -1;
  return r;
}

}  // namespace testing_support
