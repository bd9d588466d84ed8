#pragma once

// Small utilities shared by the unit tests and the acceptance runner.

#include <cstdio>
#include <cstdlib>
#include <stdexcept>
#include <string>
#include <vector>

namespace testutil {

// Rank of a dense matrix over F_p (rows x cols, entries reduced mod p).
inline int rank_mod_p(std::vector<std::vector<long long>> m, long long p) {
  if (m.empty()) return 0;
  int rows = static_cast<int>(m.size());
  int cols = static_cast<int>(m[0].size());
  auto norm = [p](long long x) { return ((x % p) + p) % p; };
  int rank = 0;
  for (int col = 0; col < cols && rank < rows; ++col) {
    int pivot = -1;
    for (int r = rank; r < rows; ++r)
      if (norm(m[r][col]) != 0) {
        pivot = r;
        break;
      }
    if (pivot < 0) continue;
    std::swap(m[rank], m[pivot]);
    // scale pivot row to 1
    long long inv = 1, base = norm(m[rank][col]), e = p - 2;
    while (e) {  // Fermat inverse
      if (e & 1) inv = inv * base % p;
      base = base * base % p;
      e >>= 1;
    }
    for (int c = col; c < cols; ++c) m[rank][c] = norm(m[rank][c]) * inv % p;
    for (int r = 0; r < rows; ++r) {
      if (r == rank) continue;
      long long f = norm(m[r][col]);
      if (!f) continue;
      for (int c = col; c < cols; ++c)
        m[r][c] = norm(m[r][c] - f * m[rank][c]);
    }
    ++rank;
  }
  return rank;
}

struct CommandResult {
  int exit_code = -1;
  std::string output;  // stdout and stderr interleaved
};

// Runs a shell command, capturing combined output and the exit status.
inline CommandResult run_command(const std::string& cmd) {
  CommandResult res;
  std::string full = cmd + " 2>&1";
  FILE* pipe = popen(full.c_str(), "r");
  if (!pipe) throw std::runtime_error("popen failed for: " + cmd);
  char buf[4096];
  size_t n;
  while ((n = fread(buf, 1, sizeof buf, pipe)) > 0) res.output.append(buf, n);
  int status = pclose(pipe);
  res.exit_code = (status >= 0 && WIFEXITED(status)) ? WEXITSTATUS(status) : -1;
  return res;
}

// Path of the CLI under test, from the environment (set by ctest).
inline std::string cli_path() {
  const char* p = std::getenv("QUADSTAB_CLI_PATH");
  if (!p || !*p)
    throw std::runtime_error("QUADSTAB_CLI_PATH is not set");
  return p;
}

}  // namespace testutil
