#pragma once

#include <cstdint>
#include <string>
#include <vector>

#include <json.hpp>

#include "mls.hpp"

namespace mlt {

struct ScanOptions {
  std::string generator;  // "latin" | "theorem2" | "embed"
  int n = 0;
  std::uint64_t p = 0;        // required by theorem2 and embed
  bool all = false;           // exhaustive; latin only, n <= 5
  std::int64_t count = 1;     // seeded instances when not exhaustive
  std::uint64_t seed = 0;     // instance i draws from seed + i
  std::uint64_t budget = 0;   // node budget per exact solve, 0 = unbounded
  std::string dump_dir = ".";
};

struct ScanInstanceResult {
  int index = 0;
  int exact = 0;
  int heuristic = 0;
  bool optimal = false;  // the exact search finished within budget
  bool anomaly = false;  // the heuristic needed its fallback or hit the bound
};

// An instance whose proven maximum dropped below n-1. Dumped to a file and
// solved again from the re-parsed file before being listed.
struct ScanCandidate {
  int index = 0;
  int max_size = 0;
  int verified_max = 0;
  std::string file;
};

struct ScanReport {
  ScanOptions options;
  std::vector<ScanInstanceResult> instances;
  int min_max = 0;  // minimum observed maximum transversal size
  std::vector<ScanCandidate> candidates;

  // Candidates whose re-verified maximum even falls below ceil(2n/3).
  int floor_breaches() const;
};

// Random Latin square of order n pushed through a random invertible basis
// over GF(p). Square and basis come from one stream seeded with `seed`.
Mls embedded_instance(int n, std::uint64_t p, std::uint64_t seed);

ScanReport run_scan(const ScanOptions& options);

nlohmann::ordered_json scan_report_to_json(const ScanReport& r);

}  // namespace mlt
