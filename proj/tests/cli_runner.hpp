#pragma once

#include <cstdio>
#include <string>

#include <sys/wait.h>

// Runs the CLI binary (location injected by the build as MOTZCYC_CLI_PATH)
// with `args` appended, through the shell. Captures stdout; stderr is folded
// in when merge_stderr is set and dropped otherwise.
struct CliResult {
  int exit_code = -1;
  std::string out;
};

inline CliResult run_cli(const std::string& args, bool merge_stderr = false) {
  const std::string command = std::string(MOTZCYC_CLI_PATH) + " " + args +
                              (merge_stderr ? " 2>&1" : " 2>/dev/null");
  CliResult result;
  FILE* pipe = popen(command.c_str(), "r");
  if (!pipe) return result;
  char buffer[4096];
  std::size_t got;
  while ((got = fread(buffer, 1, sizeof buffer, pipe)) > 0)
    result.out.append(buffer, got);
  const int status = pclose(pipe);
  if (WIFEXITED(status)) result.exit_code = WEXITSTATUS(status);
  return result;
}
