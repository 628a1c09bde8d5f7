// Spawns the pi0 binary and captures stdout/stderr/exit status.

#pragma once

#include <unistd.h>

#include <array>
#include <cstdio>
#include <cstdlib>
#include <fstream>
#include <sstream>
#include <string>

namespace cli {

struct RunResult {
  int exit_code = -1;
  std::string out;
  std::string err;
};

inline std::string binary_path() {
  if (const char* env = std::getenv("PI0_CLI")) return env;
#ifdef PI0_CLI_PATH
  return PI0_CLI_PATH;
#else
  return "pi0";
#endif
}

// mkstemp-backed scratch path.
inline std::string temp_path(const std::string& tag) {
  std::string tmpl = "/tmp/pi0_" + tag + "_XXXXXX";
  int fd = mkstemp(tmpl.data());
  if (fd >= 0) close(fd);
  return tmpl;
}

inline RunResult run(const std::string& args) {
  const std::string err_file = temp_path("stderr");
  std::string cmd = binary_path() + " " + args + " 2>" + err_file;
  RunResult res;
  FILE* pipe = popen(cmd.c_str(), "r");
  if (!pipe) return res;
  std::array<char, 4096> buf{};
  size_t got = 0;
  while ((got = fread(buf.data(), 1, buf.size(), pipe)) > 0)
    res.out.append(buf.data(), got);
  int status = pclose(pipe);
  res.exit_code = WEXITSTATUS(status);
  std::ifstream err(err_file);
  std::stringstream ss;
  ss << err.rdbuf();
  res.err = ss.str();
  std::remove(err_file.c_str());
  return res;
}

inline std::string first_line(const std::string& text) {
  auto pos = text.find('\n');
  return pos == std::string::npos ? text : text.substr(0, pos);
}

}  // namespace cli
