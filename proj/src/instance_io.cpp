#include "instance_io.hpp"

#include <fstream>
#include <sstream>

#include "errors.hpp"
#include "rng.hpp"

namespace mlt {

namespace {

using nlohmann::json;
using nlohmann::ordered_json;

std::int64_t require_int(const json& j, const std::string& where) {
  if (!j.is_number_integer())
    throw InputError(where + " must be an integer");
  return j.get<std::int64_t>();
}

std::int64_t require_field_int(const json& j, const std::string& key,
                               const std::string& where) {
  if (!j.contains(key))
    throw InputError(where + " is missing \"" + key + "\"");
  return require_int(j.at(key), where + "." + key);
}

}  // namespace

ordered_json mls_to_json(const Mls& a) {
  const int n = a.degree();
  ordered_json j;
  j["format"] = "mls-v1";
  j["n"] = n;
  ordered_json mat;
  if (const auto* lm = dynamic_cast<const LinearMatroid*>(&a.matroid())) {
    mat["kind"] = "linear";
    mat["p"] = lm->field().p;
    mat["dim"] = lm->dim();
    ordered_json elems = ordered_json::array();
    for (std::size_t id = 0; id < lm->ground_size(); ++id)
      elems.push_back(lm->element(ElementId(id)));
    mat["elements"] = std::move(elems);
  } else if (const auto* pm =
                 dynamic_cast<const PartitionMatroid*>(&a.matroid())) {
    mat["kind"] = "partition";
    mat["classes"] = pm->classes();
  } else {
    throw InputError("unsupported matroid kind");
  }
  j["matroid"] = std::move(mat);
  ordered_json grid = ordered_json::array();
  for (int r = 0; r < n; ++r) grid.push_back(a.row_ids(r));
  j["grid"] = std::move(grid);
  return j;
}

Mls mls_from_json(const json& j) {
  if (!j.is_object()) throw InputError("instance must be a JSON object");
  if (!j.contains("format") || !j.at("format").is_string() ||
      j.at("format").get<std::string>() != "mls-v1")
    throw InputError("instance format tag must be \"mls-v1\"");
  const std::int64_t n64 = require_field_int(j, "n", "instance");
  if (n64 < 1 || n64 > 4096) throw InputError("instance n out of range");
  const int n = int(n64);

  if (!j.contains("matroid") || !j.at("matroid").is_object())
    throw InputError("instance is missing the matroid object");
  const json& mat = j.at("matroid");
  if (!mat.contains("kind") || !mat.at("kind").is_string())
    throw InputError("matroid is missing \"kind\"");
  const std::string kind = mat.at("kind").get<std::string>();

  std::shared_ptr<const Matroid> matroid;
  if (kind == "linear") {
    const std::int64_t p = require_field_int(mat, "p", "matroid");
    if (p < 2) throw InputError("matroid.p must be >= 2");
    const std::int64_t dim = require_field_int(mat, "dim", "matroid");
    if (dim < 1 || dim > 4096) throw InputError("matroid.dim out of range");
    if (!mat.contains("elements") || !mat.at("elements").is_array())
      throw InputError("linear matroid needs an \"elements\" array");
    const FieldSpec field{std::uint64_t(p)};
    std::vector<std::vector<Residue>> elems;
    for (const json& ev : mat.at("elements")) {
      if (!ev.is_array()) throw InputError("matroid element must be an array");
      std::vector<Residue> v;
      for (const json& coord : ev) {
        const std::int64_t c = require_int(coord, "element coordinate");
        if (c < 0 || std::uint64_t(c) >= field.p)
          throw InputError("element coordinate " + std::to_string(c) +
                           " outside [0, p)");
        v.push_back(Residue(c));
      }
      elems.push_back(std::move(v));
    }
    matroid = std::make_shared<LinearMatroid>(field, std::size_t(dim),
                                              std::move(elems));
  } else if (kind == "partition") {
    if (!mat.contains("classes") || !mat.at("classes").is_array())
      throw InputError("partition matroid needs a \"classes\" array");
    std::vector<int> classes;
    for (const json& cv : mat.at("classes"))
      classes.push_back(int(require_int(cv, "class label")));
    matroid = std::make_shared<PartitionMatroid>(std::move(classes));
  } else {
    throw InputError("unknown matroid kind \"" + kind + "\"");
  }

  if (!j.contains("grid") || !j.at("grid").is_array())
    throw InputError("instance is missing the grid");
  const json& grid = j.at("grid");
  if (int(grid.size()) != n)
    throw InputError("grid has " + std::to_string(grid.size()) +
                     " rows, expected " + std::to_string(n));
  std::vector<ElementId> ids;
  ids.reserve(std::size_t(n) * n);
  for (const json& rowv : grid) {
    if (!rowv.is_array() || int(rowv.size()) != n)
      throw InputError("grid rows must hold exactly n ids");
    for (const json& idv : rowv)
      ids.push_back(ElementId(require_int(idv, "grid id")));
  }
  return Mls(std::move(matroid), n, std::move(ids));
}

std::string instance_text(const Mls& a) { return mls_to_json(a).dump(2) + "\n"; }

Mls parse_instance_text(const std::string& text) {
  json j;
  try {
    j = json::parse(text);
  } catch (const json::exception& e) {
    throw InputError(std::string("instance parse error: ") + e.what());
  }
  return mls_from_json(j);
}

Mls read_instance_file(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw InputError("cannot open " + path);
  std::ostringstream buf;
  buf << in.rdbuf();
  return parse_instance_text(buf.str());
}

void write_instance_file(const Mls& a, const std::string& path) {
  std::ofstream out(path, std::ios::binary);
  if (!out) throw InputError("cannot write " + path);
  out << instance_text(a);
  if (!out) throw InputError("write to " + path + " failed");
}

ordered_json violations_to_json(const Mls& a,
                                const std::vector<Violation>& v) {
  ordered_json out;
  out["valid"] = v.empty();
  ordered_json list = ordered_json::array();
  for (const Violation& viol : v) {
    ordered_json one;
    one["line"] = viol.line == Violation::Line::row ? "row" : "column";
    one["index"] = viol.index;
    one["distinct_ids"] = viol.set_size;
    one["rank"] = viol.rank;
    one["deficit"] = viol.deficit(a.degree());
    list.push_back(std::move(one));
  }
  out["violations"] = std::move(list);
  return out;
}

ordered_json report_to_json(const Mls& a, const SolveReport& r) {
  ordered_json j;
  j["method"] = r.method;
  j["n"] = r.n;
  j["size"] = r.best.size();
  ordered_json cells = ordered_json::array();
  for (const Cell& cell : r.best.cells)
    cells.push_back(ordered_json::array({cell.row, cell.col}));
  j["cells"] = std::move(cells);
  j["ids"] = cell_ids(a, r.best.cells);
  j["optimal"] = r.optimal;
  j["nodes"] = r.nodes;
  j["anomaly"] = r.anomaly;
  j["seed"] = r.seed;
  j["budget"] = r.budget;
  j["rng"] = rng_name();
  return j;
}

ordered_json decomposition_to_json(const Decomposition& d) {
  ordered_json j;
  j["once"] = d.once;
  j["multi"] = d.multi;
  j["once_count"] = d.once.size();
  j["multi_count"] = d.multi.size();
  return j;
}

SetFamily family_from_json(const json& j) {
  if (!j.is_object()) throw InputError("family must be a JSON object");
  if (!j.contains("x") || !j.at("x").is_array())
    throw InputError("family needs a ground-set array \"x\"");
  if (!j.contains("subsets") || !j.at("subsets").is_array())
    throw InputError("family needs a \"subsets\" array");
  std::vector<int> ground;
  for (const json& xv : j.at("x"))
    ground.push_back(int(require_int(xv, "ground element")));
  std::vector<std::vector<int>> subsets;
  for (const json& sv : j.at("subsets")) {
    if (!sv.is_array()) throw InputError("each subset must be an array");
    std::vector<int> subset;
    for (const json& xv : sv)
      subset.push_back(int(require_int(xv, "subset element")));
    subsets.push_back(std::move(subset));
  }
  return make_family(std::move(ground), std::move(subsets));
}

}  // namespace mlt
