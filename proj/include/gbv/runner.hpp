#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <utility>

#include "gbv/rational.hpp"

namespace gbv {

struct RunConfig {
  std::string command;  // check | cohomology | poisson
  std::optional<std::string> preset;
  std::optional<std::string> file;
  std::optional<Rational> lambda;
  std::optional<std::string> bivector;
  int max_degree = 4;
  std::optional<std::pair<int, int>> degrees;
  bool invariant = false;
  std::string format = "table";
  uint64_t seed = 12345;
};

struct RunResult {
  int exit_code = 0;
  std::string output;
};

// Executes one command and renders its report. Identity failures come back
// as exit code 1 with the report still rendered; input problems throw
// std::invalid_argument and hypothesis failures DiagonalizabilityError,
// which the binary maps to exit codes 3 and 2.
RunResult run(const RunConfig& cfg);

std::optional<std::pair<int, int>> parse_degree_range(const std::string& text);

}  // namespace gbv
