#pragma once

#include <sys/wait.h>

#include <array>
#include <cstdio>
#include <string>

namespace clitest {

struct Run {
  int code;
  std::string out;
};

// Runs the CLI with `args` through the shell; stderr is merged into `out`.
inline Run run(const std::string& args) {
  const std::string command = std::string(GRASSHILB_EXE) + " " + args + " 2>&1";
  Run result{-1, ""};
  FILE* pipe = popen(command.c_str(), "r");
  if (!pipe) return result;
  std::array<char, 4096> buffer{};
  std::size_t n;
  while ((n = fread(buffer.data(), 1, buffer.size(), pipe)) > 0) result.out.append(buffer.data(), n);
  const int status = pclose(pipe);
  result.code = WIFEXITED(status) ? WEXITSTATUS(status) : -1;
  return result;
}

inline std::string fixture(const std::string& name) { return std::string(FIXTURE_DIR) + "/" + name; }

}  // namespace clitest
