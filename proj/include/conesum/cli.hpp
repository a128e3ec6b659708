#pragma once

#include <cstdint>
#include <string>

namespace conesum::cli {

/// One batch job: a command plus its JSON input (already read from disk).
/// Order bounds missing from both the input and the job fall back to
/// [-d, 2].  The seed default is fixed so identical jobs reproduce
/// byte-identical reports.
struct JobSpec {
  std::string command;  // decompose|genfun|patched|sum|oracle|verify
  std::string input_text;
  int m_min = kUnset;
  int m_max = kUnset;
  std::uint64_t seed = 20140831;
  long poisson_radius = 200;
  double float_tol = 2e-3;

  static constexpr int kUnset = -1000000;
};

struct RunResult {
  int exit_code = 0;      // 0 ok, 2 schema, 3 precondition, 4 invariant/verify failure
  std::string report;     // JSON text
};

RunResult run(const JobSpec& job);

}  // namespace conesum::cli
