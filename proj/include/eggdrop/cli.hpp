#pragma once

#include "eggdrop/core.hpp"

#include <optional>
#include <ostream>
#include <string>
#include <vector>

namespace eggdrop {

enum class Format { Table, Csv, Json };

struct RunConfig {
  std::string command;
  std::optional<Int> floors, l, m, n;
  std::vector<Int> dims;
  std::optional<int> eggs;
  std::optional<Mode> mode;
  std::optional<std::string> truth;
  Format format = Format::Table;
  std::optional<std::string> output;
  bool force = false;
  unsigned jobs = 1;
  std::optional<ProblemKind> kind;
  int k_min = 2;
  int k_max = 20;
  std::optional<Int> drops;
};

namespace exit_code {
inline constexpr int ok = 0;
inline constexpr int domain = 1;
inline constexpr int correctness = 2;
inline constexpr int io = 3;
inline constexpr int usage = 64;
}  // namespace exit_code

// Throws UsageError on bad flags. `help` receives the usage text if --help was given.
RunConfig parse_args(const std::vector<std::string>& args, std::string* help = nullptr);

int dispatch(const RunConfig& cfg, std::ostream& out, std::ostream& err);

// parse_args + dispatch with every error mapped to an exit code.
int run_cli(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

}  // namespace eggdrop
