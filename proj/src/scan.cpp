#include "scan.hpp"

#include <algorithm>
#include <filesystem>

#include "errors.hpp"
#include "instance_io.hpp"
#include "rng.hpp"
#include "transversal.hpp"

namespace mlt {

namespace {

std::vector<std::vector<Residue>> random_invertible_basis(int n,
                                                          const FieldSpec& f,
                                                          SeededRng& rng) {
  std::vector<std::vector<Residue>> cols(
      std::size_t(n), std::vector<Residue>(std::size_t(n), 0));
  for (;;) {
    for (auto& col : cols)
      for (Residue& r : col) r = Residue(rng.below(f.p));
    LinearMatroid probe(f, std::size_t(n), cols);
    std::vector<ElementId> all(std::size_t(n), 0);
    for (int i = 0; i < n; ++i) all[std::size_t(i)] = i;
    if (probe.rank(all) == n) return cols;
  }
}

}  // namespace

Mls embedded_instance(int n, std::uint64_t p, std::uint64_t seed) {
  const FieldSpec field(p);
  SeededRng rng(seed);
  // The square first, then the basis, from one stream.
  LatinSquare square = random_latin_square(n, seed);
  return embed_latin(square, p, random_invertible_basis(n, field, rng));
}

int ScanReport::floor_breaches() const {
  const int target = two_thirds_target(options.n);
  int out = 0;
  for (const ScanCandidate& c : candidates)
    if (c.verified_max < target) ++out;
  return out;
}

ScanReport run_scan(const ScanOptions& options) {
  const int n = options.n;
  if (n < 1) throw InputError("scan needs n >= 1");
  const bool latin = options.generator == "latin";
  const bool exclusion = options.generator == "theorem2";
  const bool embedded = options.generator == "embed";
  if (!latin && !exclusion && !embedded)
    throw InputError("unknown generator \"" + options.generator +
                     "\" (expected latin, theorem2, or embed)");
  if (options.all && !latin)
    throw InputError("--all is supported only for the latin generator");
  if (options.all && n > 5)
    throw InputError("--all is limited to n <= 5");
  if (!options.all && options.count < 1)
    throw InputError("scan needs a positive instance count");

  std::vector<Mls> instances;
  if (options.all) {
    enumerate_latin_squares(
        n, [&](const LatinSquare& sq) { instances.push_back(from_latin_square(sq)); });
  } else if (exclusion) {
    // One deterministic instance per (n, p); count is irrelevant.
    instances.push_back(theorem2(n, options.p));
  } else {
    for (std::int64_t i = 0; i < options.count; ++i) {
      const std::uint64_t seed = options.seed + std::uint64_t(i);
      instances.push_back(latin ? from_latin_square(random_latin_square(n, seed))
                                : embedded_instance(n, options.p, seed));
    }
  }

  ScanReport report;
  report.options = options;
  report.min_max = n + 1;

  for (std::size_t i = 0; i < instances.size(); ++i) {
    const Mls& inst = instances[i];
    const SolveReport exact = exact_max(inst, options.budget);
    ScanInstanceResult row;
    row.index = int(i);
    row.exact = exact.best.size();
    row.optimal = exact.optimal;
    try {
      const SolveReport heur = two_thirds_solve(inst, options.seed);
      row.heuristic = heur.best.size();
      row.anomaly = heur.anomaly;
    } catch (const TheoremViolation& tv) {
      // Recorded, not fatal: the exact column already carries the truth.
      row.heuristic = tv.optimum();
      row.anomaly = true;
    }
    report.instances.push_back(row);
    report.min_max = std::min(report.min_max, row.exact);

    if (exact.optimal && row.exact < n - 1) {
      namespace fs = std::filesystem;
      fs::create_directories(options.dump_dir);
      const std::string file = (fs::path(options.dump_dir) /
                                ("candidate-" + options.generator + "-n" +
                                 std::to_string(n) + "-" + std::to_string(i) +
                                 ".json"))
                                   .string();
      write_instance_file(inst, file);
      const Mls reread = read_instance_file(file);
      const SolveReport verify = exact_max(reread, 0);
      report.candidates.push_back(
          {int(i), row.exact, verify.best.size(), file});
    }
  }
  return report;
}

nlohmann::ordered_json scan_report_to_json(const ScanReport& r) {
  using nlohmann::ordered_json;
  ordered_json j;
  j["generator"] = r.options.generator;
  j["mode"] = r.options.all ? "all" : "count";
  j["n"] = r.options.n;
  j["p"] = r.options.p;
  j["seed"] = r.options.seed;
  j["budget"] = r.options.budget;
  j["rng"] = rng_name();
  j["instance_count"] = r.instances.size();
  j["min_max"] = r.min_max;
  ordered_json cands = ordered_json::array();
  for (const ScanCandidate& c : r.candidates) {
    ordered_json one;
    one["index"] = c.index;
    one["max"] = c.max_size;
    one["verified_max"] = c.verified_max;
    one["file"] = c.file;
    cands.push_back(std::move(one));
  }
  j["candidates"] = std::move(cands);
  ordered_json rows = ordered_json::array();
  for (const ScanInstanceResult& row : r.instances) {
    ordered_json one;
    one["index"] = row.index;
    one["exact"] = row.exact;
    one["heuristic"] = row.heuristic;
    one["optimal"] = row.optimal;
    one["anomaly"] = row.anomaly;
    rows.push_back(std::move(one));
  }
  j["instances"] = std::move(rows);
  return j;
}

}  // namespace mlt
