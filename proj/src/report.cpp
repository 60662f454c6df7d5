#include "glued/report.hpp"

#include <sstream>

#include "glued/geom3.hpp"

namespace glued {

void VerifyReport::record(bool ok, const std::string& line) {
  ++samples;
  if (ok) {
    ++passed;
  } else {
    ++failed;
  }
  lines.push_back(std::string(ok ? "ok   " : "FAIL ") + line);
}

std::string VerifyReport::to_text() const {
  std::ostringstream out;
  out << "suite: " << suite << "\n";
  out << "status: " << (pass() ? "PASS" : "FAIL") << " (empirical confirmation)\n";
  out << "seed: " << seed << "\n";
  out << "epsilon: " << epsilon() << "\n";
  out << "samples: " << samples << " passed: " << passed << " failed: " << failed << " skipped: " << skipped << "\n";
  for (const auto& [k, v] : stats) out << "stat " << k << ": " << v << "\n";
  for (const auto& w : witnesses) {
    out << "witness " << w.label << (w.failure ? " [failure]" : "") << (w.note.empty() ? "" : ": " + w.note) << "\n";
  }
  for (const auto& l : lines) out << l << "\n";
  return out.str();
}

}  // namespace glued
