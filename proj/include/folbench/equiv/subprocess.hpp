#pragma once

#include <chrono>
#include <optional>
#include <string>
#include <vector>

namespace folbench::equiv {

struct ProcessResult {
  int exit_code = -1;
  bool timed_out = false;
  std::string out;
  std::string err;
};

/// Resolves `name` against PATH unless it already contains a slash.
/// Returns nullopt when no executable file is found.
std::optional<std::string> find_executable(const std::string& name);

/// Runs `exe args...`, feeds `input` on stdin and collects stdout/stderr.
/// The child is killed once `timeout` elapses. Throws std::system_error if
/// the process cannot be started.
ProcessResult run_process(const std::string& exe, const std::vector<std::string>& args,
                          const std::string& input, std::chrono::milliseconds timeout);

}  // namespace folbench::equiv
