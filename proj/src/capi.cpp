#include "mlt/mlt.h"

#include <cstdlib>
#include <cstring>
#include <string>

#include "errors.hpp"
#include "instance_io.hpp"
#include "lemma1.hpp"
#include "mls.hpp"
#include "scan.hpp"
#include "transversal.hpp"

struct mlt_mls {
  mlt::Mls value;
};

struct mlt_report {
  mlt::SolveReport report;
  std::string json;
};

struct mlt_scan_report {
  mlt::ScanReport report;
  std::string json;
};

struct mlt_family {
  mlt::SetFamily family;
};

namespace {

thread_local std::string g_last_error;

void set_error(const std::string& msg) { g_last_error = msg; }

char* copy_string(const std::string& s) {
  char* out = static_cast<char*>(std::malloc(s.size() + 1));
  if (out) std::memcpy(out, s.c_str(), s.size() + 1);
  return out;
}

// Runs the body and folds the exception taxonomy onto status codes.
template <typename F>
mlt_status guarded(F&& body) {
  try {
    return body();
  } catch (const mlt::TheoremViolation& e) {
    set_error(e.what());
    return MLT_ERR_ANOMALY;
  } catch (const mlt::AnomalyError& e) {
    set_error(e.what());
    return MLT_ERR_ANOMALY;
  } catch (const mlt::ContractError& e) {
    set_error(e.what());
    return MLT_ERR_CONTRACT;
  } catch (const mlt::DomainError& e) {
    set_error(e.what());
    return MLT_ERR_DOMAIN;
  } catch (const mlt::InputError& e) {
    set_error(e.what());
    return MLT_ERR_INPUT;
  } catch (const std::exception& e) {
    set_error(e.what());
    return MLT_ERR_INTERNAL;
  }
}

mlt_status require(bool ok, const char* what) {
  if (ok) return MLT_OK;
  set_error(std::string("null ") + what);
  return MLT_ERR_INPUT;
}

mlt_status emit_instance(mlt::Mls value, mlt_mls** out) {
  *out = new mlt_mls{std::move(value)};
  return MLT_OK;
}

mlt_status emit_report(const mlt::Mls& instance, mlt::SolveReport report,
                       mlt_report** out) {
  std::string json = mlt::report_to_json(instance, report).dump(2) + "\n";
  *out = new mlt_report{std::move(report), std::move(json)};
  return MLT_OK;
}

}  // namespace

extern "C" {

const char* mlt_version(void) { return "1.0.0"; }

const char* mlt_last_error(void) { return g_last_error.c_str(); }

void mlt_string_free(char* s) { std::free(s); }

mlt_status mlt_gen_theorem2(int n, unsigned long long p, mlt_mls** out) {
  if (require(out != nullptr, "output handle")) return MLT_ERR_INPUT;
  return guarded([&] { return emit_instance(mlt::theorem2(n, p), out); });
}

mlt_status mlt_gen_latin(int n, unsigned long long seed, mlt_mls** out) {
  if (require(out != nullptr, "output handle")) return MLT_ERR_INPUT;
  return guarded([&] {
    return emit_instance(mlt::from_latin_square(mlt::random_latin_square(n, seed)),
                         out);
  });
}

mlt_status mlt_gen_embed(int n, unsigned long long p, unsigned long long seed,
                         mlt_mls** out) {
  if (require(out != nullptr, "output handle")) return MLT_ERR_INPUT;
  return guarded(
      [&] { return emit_instance(mlt::embedded_instance(n, p, seed), out); });
}

mlt_status mlt_mls_from_json(const char* text, mlt_mls** out) {
  if (require(text != nullptr, "text") || require(out != nullptr, "output handle"))
    return MLT_ERR_INPUT;
  return guarded(
      [&] { return emit_instance(mlt::parse_instance_text(text), out); });
}

mlt_status mlt_mls_read_file(const char* path, mlt_mls** out) {
  if (require(path != nullptr, "path") || require(out != nullptr, "output handle"))
    return MLT_ERR_INPUT;
  return guarded(
      [&] { return emit_instance(mlt::read_instance_file(path), out); });
}

mlt_status mlt_mls_to_json(const mlt_mls* m, char** out_text) {
  if (require(m != nullptr, "instance") || require(out_text != nullptr, "output"))
    return MLT_ERR_INPUT;
  return guarded([&] {
    *out_text = copy_string(mlt::instance_text(m->value));
    return MLT_OK;
  });
}

mlt_status mlt_mls_write_file(const mlt_mls* m, const char* path) {
  if (require(m != nullptr, "instance") || require(path != nullptr, "path"))
    return MLT_ERR_INPUT;
  return guarded([&] {
    mlt::write_instance_file(m->value, path);
    return MLT_OK;
  });
}

void mlt_mls_free(mlt_mls* m) { delete m; }

int mlt_mls_degree(const mlt_mls* m) { return m ? m->value.degree() : 0; }

int mlt_mls_id_at(const mlt_mls* m, int row, int col) {
  if (!m) return -1;
  const int n = m->value.degree();
  if (row < 0 || row >= n || col < 0 || col >= n) return -1;
  return m->value.id_at(row, col);
}

mlt_status mlt_mls_validate(const mlt_mls* m, char** violations_json) {
  if (require(m != nullptr, "instance")) return MLT_ERR_INPUT;
  return guarded([&]() -> mlt_status {
    const auto violations = mlt::validate(m->value);
    if (violations_json) {
      *violations_json = copy_string(
          mlt::violations_to_json(m->value, violations).dump(2) + "\n");
    }
    if (violations.empty()) return MLT_OK;
    set_error(violations.front().describe(m->value.degree()));
    return MLT_ERR_VALIDATION;
  });
}

mlt_status mlt_solve(const mlt_mls* m, const char* method,
                     unsigned long long node_budget, unsigned long long seed,
                     mlt_report** out) {
  if (require(m != nullptr, "instance") || require(method != nullptr, "method") ||
      require(out != nullptr, "output handle"))
    return MLT_ERR_INPUT;
  return guarded([&]() -> mlt_status {
    const auto violations = mlt::validate(m->value);
    if (!violations.empty()) {
      set_error(violations.front().describe(m->value.degree()));
      return MLT_ERR_VALIDATION;
    }
    const std::string name = method;
    if (name == "exact")
      return emit_report(m->value, mlt::exact_max(m->value, node_budget), out);
    if (name == "greedy") {
      mlt::SolveReport report;
      report.method = "greedy";
      report.n = m->value.degree();
      report.best = mlt::greedy_maximal(m->value, seed);
      report.optimal = report.best.size() == report.n;
      report.seed = seed;
      return emit_report(m->value, std::move(report), out);
    }
    if (name == "augment")
      return emit_report(m->value, mlt::two_thirds_solve(m->value, seed), out);
    set_error("unknown method \"" + name +
              "\" (expected exact, greedy, or augment)");
    return MLT_ERR_INPUT;
  });
}

const char* mlt_report_method(const mlt_report* r) {
  return r ? r->report.method.c_str() : "";
}

int mlt_report_size(const mlt_report* r) {
  return r ? r->report.best.size() : 0;
}

int mlt_report_optimal(const mlt_report* r) {
  return r && r->report.optimal ? 1 : 0;
}

int mlt_report_anomaly(const mlt_report* r) {
  return r && r->report.anomaly ? 1 : 0;
}

unsigned long long mlt_report_nodes(const mlt_report* r) {
  return r ? r->report.nodes : 0;
}

int mlt_report_cell_count(const mlt_report* r) {
  return r ? r->report.best.size() : 0;
}

mlt_status mlt_report_cell(const mlt_report* r, int index, int* row, int* col) {
  if (require(r != nullptr, "report")) return MLT_ERR_INPUT;
  if (index < 0 || index >= r->report.best.size()) {
    set_error("cell index " + std::to_string(index) + " out of range");
    return MLT_ERR_INPUT;
  }
  const mlt::Cell& cell = r->report.best.cells[std::size_t(index)];
  if (row) *row = cell.row;
  if (col) *col = cell.col;
  return MLT_OK;
}

mlt_status mlt_report_to_json(const mlt_report* r, char** out_text) {
  if (require(r != nullptr, "report") || require(out_text != nullptr, "output"))
    return MLT_ERR_INPUT;
  *out_text = copy_string(r->json);
  return MLT_OK;
}

void mlt_report_free(mlt_report* r) { delete r; }

mlt_status mlt_scan(const char* generator, int n, unsigned long long p,
                    long long count, unsigned long long seed,
                    unsigned long long node_budget, const char* dump_dir,
                    mlt_scan_report** out) {
  if (require(generator != nullptr, "generator") ||
      require(out != nullptr, "output handle"))
    return MLT_ERR_INPUT;
  return guarded([&]() -> mlt_status {
    mlt::ScanOptions opts;
    opts.generator = generator;
    opts.n = n;
    opts.p = p;
    opts.all = count < 0;
    opts.count = count < 0 ? 0 : count;
    opts.seed = seed;
    opts.budget = node_budget;
    if (dump_dir) opts.dump_dir = dump_dir;
    mlt::ScanReport report = mlt::run_scan(opts);
    std::string json = mlt::scan_report_to_json(report).dump(2) + "\n";
    *out = new mlt_scan_report{std::move(report), std::move(json)};
    return MLT_OK;
  });
}

int mlt_scan_report_instance_count(const mlt_scan_report* r) {
  return r ? int(r->report.instances.size()) : 0;
}

int mlt_scan_report_min_max(const mlt_scan_report* r) {
  return r ? r->report.min_max : 0;
}

int mlt_scan_report_candidate_count(const mlt_scan_report* r) {
  return r ? int(r->report.candidates.size()) : 0;
}

int mlt_scan_report_floor_breaches(const mlt_scan_report* r) {
  return r ? r->report.floor_breaches() : 0;
}

mlt_status mlt_scan_report_instance(const mlt_scan_report* r, int index,
                                    int* exact_size, int* heuristic_size,
                                    int* optimal, int* anomaly) {
  if (require(r != nullptr, "report")) return MLT_ERR_INPUT;
  if (index < 0 || std::size_t(index) >= r->report.instances.size()) {
    set_error("instance index " + std::to_string(index) + " out of range");
    return MLT_ERR_INPUT;
  }
  const mlt::ScanInstanceResult& row = r->report.instances[std::size_t(index)];
  if (exact_size) *exact_size = row.exact;
  if (heuristic_size) *heuristic_size = row.heuristic;
  if (optimal) *optimal = row.optimal ? 1 : 0;
  if (anomaly) *anomaly = row.anomaly ? 1 : 0;
  return MLT_OK;
}

mlt_status mlt_scan_report_to_json(const mlt_scan_report* r, char** out_text) {
  if (require(r != nullptr, "report") || require(out_text != nullptr, "output"))
    return MLT_ERR_INPUT;
  *out_text = copy_string(r->json);
  return MLT_OK;
}

void mlt_scan_report_free(mlt_scan_report* r) { delete r; }

mlt_status mlt_family_from_json(const char* text, mlt_family** out) {
  if (require(text != nullptr, "text") || require(out != nullptr, "output handle"))
    return MLT_ERR_INPUT;
  return guarded([&]() -> mlt_status {
    nlohmann::json j;
    try {
      j = nlohmann::json::parse(text);
    } catch (const nlohmann::json::exception& e) {
      throw mlt::InputError(std::string("family parse error: ") + e.what());
    }
    *out = new mlt_family{mlt::family_from_json(j)};
    return MLT_OK;
  });
}

mlt_status mlt_family_decompose(const mlt_family* f, char** out_json) {
  if (require(f != nullptr, "family") || require(out_json != nullptr, "output"))
    return MLT_ERR_INPUT;
  return guarded([&] {
    *out_json = copy_string(
        mlt::decomposition_to_json(mlt::decompose(f->family)).dump(2) + "\n");
    return MLT_OK;
  });
}

mlt_status mlt_family_find_covered(const mlt_family* f, int* out_index) {
  if (require(f != nullptr, "family") || require(out_index != nullptr, "output"))
    return MLT_ERR_INPUT;
  return guarded([&] {
    const auto found = mlt::find_covered_subset(f->family);
    *out_index = found ? int(*found) : -1;
    return MLT_OK;
  });
}

void mlt_family_free(mlt_family* f) { delete f; }

}  // extern "C"
