#pragma once

#include <cstdint>
#include <map>
#include <string>
#include <vector>

#include "glued/config.hpp"

namespace glued {

struct Witness {
  std::string label;
  PregluedConfig config;
  std::string note;
  bool failure = false;
};

/// Outcome of one verification suite. Deterministic text via to_text().
struct VerifyReport {
  std::string suite;
  std::uint64_t seed = 0;
  int samples = 0;
  int passed = 0;
  int failed = 0;
  int skipped = 0;
  std::vector<std::string> lines;
  std::map<std::string, std::string> stats;
  std::vector<Witness> witnesses;

  bool pass() const { return failed == 0; }
  void record(bool ok, const std::string& line);
  void note(const std::string& line) { lines.push_back(line); }
  std::string to_text() const;
};

}  // namespace glued
