#pragma once

#include <iosfwd>
#include <string>

#include "json.hpp"

#include "circweb/catalog.hpp"
#include "circweb/singular.hpp"

namespace circweb::cli {

inline constexpr int kSchemaVersion = 1;
inline constexpr double kDefaultTol = 1e-7;
inline constexpr int kDefaultGrid = 20;

struct VerifyRecord {
  std::string id;
  Params params;
  int grid = kDefaultGrid;
  Sampling sampling = Sampling::regular;
  double tol = kDefaultTol;
  bool expected_hexagonal = true;
  SweepStats stats;
  bool pass = false;
  double wall_seconds = 0;
};

VerifyRecord verify_web(const BuiltWeb& web, int grid, double tol, Sampling sampling = Sampling::regular);

nlohmann::json to_json(const VerifyRecord& r);
nlohmann::json to_json(const SingularReport& r);

// Exit codes: 0 success or PASS, 1 verification FAIL, 2 usage error.
int run(int argc, const char* const* argv, std::ostream& out, std::ostream& err);

}  // namespace circweb::cli
