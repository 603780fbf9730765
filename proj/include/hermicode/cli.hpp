#pragma once

#include <iosfwd>
#include <optional>
#include <string>

#include "hermicode/weights.hpp"

namespace hermicode {

enum class Command { points, build, weights, verify, report };
enum class Format { json, csv };

struct RunConfig {
  Command command = Command::report;
  std::optional<int> q;
  std::optional<int> m;
  Method method = Method::automatic;
  int jobs = 1;
  std::string out;  // empty: standard output
  Format format = Format::json;
  bool suite_all = false;
  int orbit = 0;  // index into HermitianCurve::orbit_base_points()
};

/// Process exit codes.
inline constexpr int kExitOk = 0;
inline constexpr int kExitClaimFailure = 1;
inline constexpr int kExitUsage = 2;
inline constexpr int kExitSizeGuard = 3;
inline constexpr int kExitInternal = 4;

/// Default worker count: $HERMICODE_JOBS when set to a positive integer, else 1.
int default_jobs();

/// Executes one command. Documents go to `out` unless config.out names a
/// file; diagnostics and per-claim summaries go to `err`.
int run(const RunConfig& config, std::ostream& out, std::ostream& err);

}  // namespace hermicode
