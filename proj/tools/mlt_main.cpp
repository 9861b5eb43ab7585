// mlt: generate, validate, and solve matroidal Latin square instances.
//
// Subcommands: gen, check, solve, scan, lemma1. Human-readable output by
// default, one JSON document with --json. Exit codes: 0 ok, 1 usage or
// parse error, 2 validation failure, 3 theorem-violation anomaly.

#include <cstdio>
#include <fstream>
#include <sstream>
#include <string>
#include <vector>

#include <CLI11.hpp>
#include <json.hpp>

#include "mlt/mlt.h"

namespace {

using nlohmann::json;

int exit_code_for(mlt_status s) {
  switch (s) {
    case MLT_OK:
      return 0;
    case MLT_ERR_VALIDATION:
      return 2;
    case MLT_ERR_ANOMALY:
      return 3;
    default:
      return 1;
  }
}

int fail(mlt_status s) {
  std::fprintf(stderr, "mlt: %s\n", mlt_last_error());
  return exit_code_for(s);
}

int usage_error(const std::string& msg) {
  std::fprintf(stderr, "mlt: %s\n", msg.c_str());
  return 1;
}

// Copies a C-API string and releases the original.
std::string take_string(char* s) {
  std::string out = s ? s : "";
  mlt_string_free(s);
  return out;
}

struct MlsHandle {
  mlt_mls* ptr = nullptr;
  ~MlsHandle() { mlt_mls_free(ptr); }
};

struct ReportHandle {
  mlt_report* ptr = nullptr;
  ~ReportHandle() { mlt_report_free(ptr); }
};

struct ScanHandle {
  mlt_scan_report* ptr = nullptr;
  ~ScanHandle() { mlt_scan_report_free(ptr); }
};

struct FamilyHandle {
  mlt_family* ptr = nullptr;
  ~FamilyHandle() { mlt_family_free(ptr); }
};

struct GenArgs {
  std::string kind;
  int n = 0;
  unsigned long long p = 0;
  unsigned long long seed = 0;
  std::string output;
};

int run_gen(const GenArgs& a) {
  mlt_mls* raw = nullptr;
  mlt_status s;
  if (a.kind == "theorem2") {
    if (a.p == 0) return usage_error("gen theorem2 requires --p");
    s = mlt_gen_theorem2(a.n, a.p, &raw);
  } else if (a.kind == "latin") {
    s = mlt_gen_latin(a.n, a.seed, &raw);
  } else {
    if (a.p == 0) return usage_error("gen embed requires --p");
    s = mlt_gen_embed(a.n, a.p, a.seed, &raw);
  }
  if (s != MLT_OK) return fail(s);
  MlsHandle m{raw};

  if (a.output.empty()) {
    char* text = nullptr;
    s = mlt_mls_to_json(m.ptr, &text);
    if (s != MLT_OK) return fail(s);
    std::fputs(take_string(text).c_str(), stdout);
    return 0;
  }
  s = mlt_mls_write_file(m.ptr, a.output.c_str());
  if (s != MLT_OK) return fail(s);
  return 0;
}

int run_check(const std::string& path, bool as_json) {
  mlt_mls* raw = nullptr;
  mlt_status s = mlt_mls_read_file(path.c_str(), &raw);
  if (s != MLT_OK) return fail(s);
  MlsHandle m{raw};

  char* text = nullptr;
  s = mlt_mls_validate(m.ptr, &text);
  if (s != MLT_OK && s != MLT_ERR_VALIDATION) return fail(s);
  const std::string doc = take_string(text);

  if (as_json) {
    std::fputs(doc.c_str(), stdout);
  } else if (s == MLT_OK) {
    std::printf("ok: every row and column is a base\n");
  } else {
    const json parsed = json::parse(doc);
    for (const json& v : parsed.at("violations")) {
      std::printf("%s %d: %d distinct ids, rank %d, deficit %d\n",
                  v.at("line").get<std::string>().c_str(),
                  v.at("index").get<int>(), v.at("distinct_ids").get<int>(),
                  v.at("rank").get<int>(), v.at("deficit").get<int>());
    }
  }
  return exit_code_for(s);
}

struct SolveArgs {
  std::string file;
  std::string method;
  unsigned long long budget = 10000000;
  unsigned long long seed = 0;
  bool as_json = false;
};

int run_solve(const SolveArgs& a) {
  mlt_mls* raw = nullptr;
  mlt_status s = mlt_mls_read_file(a.file.c_str(), &raw);
  if (s != MLT_OK) return fail(s);
  MlsHandle m{raw};

  mlt_report* rep = nullptr;
  s = mlt_solve(m.ptr, a.method.c_str(), a.budget, a.seed, &rep);
  if (s != MLT_OK) return fail(s);
  ReportHandle r{rep};

  if (a.as_json) {
    char* text = nullptr;
    s = mlt_report_to_json(r.ptr, &text);
    if (s != MLT_OK) return fail(s);
    std::fputs(take_string(text).c_str(), stdout);
    return 0;
  }

  std::printf("method   %s\n", mlt_report_method(r.ptr));
  std::printf("size     %d\n", mlt_report_size(r.ptr));
  std::printf("optimal  %s\n", mlt_report_optimal(r.ptr) ? "yes" : "no");
  std::printf("anomaly  %s\n", mlt_report_anomaly(r.ptr) ? "yes" : "no");
  std::printf("nodes    %llu\n", mlt_report_nodes(r.ptr));
  std::printf("cells   ");
  for (int i = 0; i < mlt_report_cell_count(r.ptr); ++i) {
    int row = 0, col = 0;
    if (mlt_report_cell(r.ptr, i, &row, &col) != MLT_OK) break;
    std::printf(" (%d,%d)", row, col);
  }
  std::printf("\n");
  return 0;
}

struct ScanArgs {
  std::string generator;
  int n = 0;
  unsigned long long p = 0;
  bool all = false;
  long long count = 1;
  unsigned long long seed = 0;
  unsigned long long budget = 0;
  std::string dump_dir = ".";
  bool as_json = false;
};

int run_scan(const ScanArgs& a) {
  if ((a.generator == "theorem2" || a.generator == "embed") && a.p == 0)
    return usage_error("scan --gen " + a.generator + " requires --p");

  mlt_scan_report* raw = nullptr;
  const long long count = a.all ? -1 : a.count;
  mlt_status s = mlt_scan(a.generator.c_str(), a.n, a.p, count, a.seed,
                          a.budget, a.dump_dir.c_str(), &raw);
  if (s != MLT_OK) return fail(s);
  ScanHandle r{raw};

  if (a.as_json) {
    char* text = nullptr;
    s = mlt_scan_report_to_json(r.ptr, &text);
    if (s != MLT_OK) return fail(s);
    std::fputs(take_string(text).c_str(), stdout);
  } else {
    const int rows = mlt_scan_report_instance_count(r.ptr);
    std::printf("instance  exact  heuristic  optimal  anomaly\n");
    for (int i = 0; i < rows; ++i) {
      int exact = 0, heur = 0, opt = 0, anom = 0;
      if (mlt_scan_report_instance(r.ptr, i, &exact, &heur, &opt, &anom) !=
          MLT_OK)
        break;
      std::printf("%8d  %5d  %9d  %7s  %7s\n", i, exact, heur,
                  opt ? "yes" : "no", anom ? "yes" : "no");
    }
    std::printf("minimum maximum %d over %d instances\n",
                mlt_scan_report_min_max(r.ptr), rows);
    std::printf("candidates below n-1: %d\n",
                mlt_scan_report_candidate_count(r.ptr));
    if (mlt_scan_report_floor_breaches(r.ptr) > 0)
      std::printf("floor breaches: %d\n",
                  mlt_scan_report_floor_breaches(r.ptr));
  }
  return mlt_scan_report_floor_breaches(r.ptr) > 0 ? 3 : 0;
}

// "1,2,3" -> [1,2,3]; complaints go through InputError-style messages.
bool parse_csv_ints(const std::string& text, std::vector<int>& out) {
  std::stringstream ss(text);
  std::string part;
  while (std::getline(ss, part, ',')) {
    try {
      std::size_t used = 0;
      const int v = std::stoi(part, &used);
      if (used != part.size()) return false;
      out.push_back(v);
    } catch (const std::exception&) {
      return false;
    }
  }
  return !out.empty();
}

struct Lemma1Args {
  std::string file;
  std::string ground_csv;
  std::vector<std::string> subset_csvs;
  bool as_json = false;
};

int run_lemma1(const Lemma1Args& a) {
  std::string text;
  if (!a.file.empty()) {
    std::ifstream in(a.file);
    if (!in) return usage_error("cannot open " + a.file);
    std::stringstream buf;
    buf << in.rdbuf();
    text = buf.str();
  } else {
    if (a.ground_csv.empty() || a.subset_csvs.empty())
      return usage_error("lemma1 needs either -f FILE or --x plus --subset");
    json j;
    std::vector<int> ground;
    if (!parse_csv_ints(a.ground_csv, ground))
      return usage_error("--x expects comma-separated integers");
    j["x"] = ground;
    j["subsets"] = json::array();
    for (const std::string& csv : a.subset_csvs) {
      std::vector<int> subset;
      if (!parse_csv_ints(csv, subset))
        return usage_error("--subset expects comma-separated integers");
      j["subsets"].push_back(subset);
    }
    text = j.dump();
  }

  mlt_family* raw = nullptr;
  mlt_status s = mlt_family_from_json(text.c_str(), &raw);
  if (s != MLT_OK) return fail(s);
  FamilyHandle f{raw};

  char* dec_text = nullptr;
  s = mlt_family_decompose(f.ptr, &dec_text);
  if (s != MLT_OK) return fail(s);
  const json dec = json::parse(take_string(dec_text));

  int covered = -1;
  s = mlt_family_find_covered(f.ptr, &covered);
  if (s != MLT_OK) return fail(s);

  if (a.as_json) {
    json out = dec;
    out["covered_subset"] = covered >= 0 ? json(covered) : json(nullptr);
    std::fputs((out.dump(2) + "\n").c_str(), stdout);
    return 0;
  }

  auto print_list = [](const char* label, const json& values) {
    std::printf("%s", label);
    for (const json& v : values) std::printf(" %d", v.get<int>());
    std::printf("\n");
  };
  print_list("once: ", dec.at("once"));
  print_list("multi:", dec.at("multi"));
  if (covered >= 0)
    std::printf("covered subset: index %d\n", covered);
  else
    std::printf("covered subset: none\n");
  return 0;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"matroidal Latin square toolkit"};
  app.set_version_flag("--version", mlt_version());
  app.require_subcommand(1);

  GenArgs gen_args;
  CLI::App* gen = app.add_subcommand("gen", "generate an instance file");
  gen->add_option("kind", gen_args.kind, "theorem2, latin, or embed")
      ->required()
      ->check(CLI::IsMember({"theorem2", "latin", "embed"}));
  gen->add_option("--n", gen_args.n, "degree")->required();
  gen->add_option("--p", gen_args.p, "field modulus (theorem2, embed)");
  gen->add_option("--seed", gen_args.seed, "generation seed")
      ->envname("MLT_SEED");
  gen->add_option("-o,--output", gen_args.output,
                  "output file (default: stdout)");

  std::string check_file;
  bool check_json = false;
  CLI::App* check = app.add_subcommand("check", "validate an instance file");
  check->add_option("file", check_file, "instance file")->required();
  check->add_flag("--json", check_json, "print the violation report as JSON");

  SolveArgs solve_args;
  CLI::App* solve =
      app.add_subcommand("solve", "find an independent partial transversal");
  solve->add_option("file", solve_args.file, "instance file")->required();
  solve->add_option("--method", solve_args.method, "exact, greedy, or augment")
      ->required()
      ->check(CLI::IsMember({"exact", "greedy", "augment"}));
  solve->add_option("--budget", solve_args.budget,
                    "node budget for the exact search, 0 = unbounded");
  solve->add_option("--seed", solve_args.seed, "cell-order seed")
      ->envname("MLT_SEED");
  solve->add_flag("--json", solve_args.as_json, "print the report as JSON");

  ScanArgs scan_args;
  CLI::App* scan =
      app.add_subcommand("scan", "solve a family of instances exactly");
  scan->add_option("--gen", scan_args.generator,
                   "instance generator: latin, theorem2, or embed")
      ->required()
      ->check(CLI::IsMember({"latin", "theorem2", "embed"}));
  scan->add_option("--n", scan_args.n, "degree")->required();
  scan->add_option("--p", scan_args.p, "field modulus (theorem2, embed)");
  CLI::Option* count_opt =
      scan->add_option("--count", scan_args.count, "number of seeded instances");
  scan->add_flag("--all", scan_args.all,
                 "enumerate every Latin square of the given degree (n <= 5)")
      ->excludes(count_opt);
  scan->add_option("--seed", scan_args.seed, "base seed; instance i uses seed+i")
      ->envname("MLT_SEED");
  scan->add_option("--budget", scan_args.budget,
                   "node budget per exact solve, 0 = unbounded");
  scan->add_option("--dump-dir", scan_args.dump_dir,
                   "directory for dumped candidate files");
  scan->add_flag("--json", scan_args.as_json, "print the report as JSON");

  Lemma1Args lemma_args;
  CLI::App* lemma =
      app.add_subcommand("lemma1", "set-family decomposition and witness");
  lemma->add_option("-f,--file", lemma_args.file,
                    "family file: {\"x\": [...], \"subsets\": [[...], ...]}");
  lemma->add_option("--x", lemma_args.ground_csv,
                    "ground set, comma-separated integers");
  lemma->add_option("--subset", lemma_args.subset_csvs,
                    "one subset as comma-separated integers (repeatable)");
  lemma->add_flag("--json", lemma_args.as_json, "print the result as JSON");

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e);
    return code == 0 ? 0 : 1;
  }

  if (gen->parsed()) return run_gen(gen_args);
  if (check->parsed()) return run_check(check_file, check_json);
  if (solve->parsed()) return run_solve(solve_args);
  if (scan->parsed()) return run_scan(scan_args);
  if (lemma->parsed()) return run_lemma1(lemma_args);
  return 1;
}
