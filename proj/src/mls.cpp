#include "mls.hpp"

#include <algorithm>
#include <set>

#include "errors.hpp"

namespace mlt {

Mls::Mls(std::shared_ptr<const Matroid> matroid, int n,
         std::vector<ElementId> grid_row_major)
    : matroid_(std::move(matroid)), n_(n), grid_(std::move(grid_row_major)) {
  if (!matroid_) throw InputError("mls requires a matroid");
  if (n_ < 1) throw InputError("mls degree must be >= 1");
  if (grid_.size() != std::size_t(n_) * std::size_t(n_))
    throw InputError("grid has " + std::to_string(grid_.size()) +
                     " cells, expected " + std::to_string(n_ * n_));
  for (ElementId id : grid_)
    if (id < 0 || std::size_t(id) >= matroid_->ground_size())
      throw InputError("grid references unknown element id " +
                       std::to_string(id));
}

std::vector<ElementId> Mls::row_ids(int row) const {
  std::vector<ElementId> out(std::size_t(n_), 0);
  for (int c = 0; c < n_; ++c) out[std::size_t(c)] = id_at(row, c);
  return out;
}

std::vector<ElementId> Mls::col_ids(int col) const {
  std::vector<ElementId> out(std::size_t(n_), 0);
  for (int r = 0; r < n_; ++r) out[std::size_t(r)] = id_at(r, col);
  return out;
}

std::string Violation::describe(int n) const {
  const char* what = line == Line::row ? "row" : "column";
  std::string out = std::string(what) + " " + std::to_string(index);
  if (set_size < n)
    out += " repeats ids (distinct " + std::to_string(set_size) + " of " +
           std::to_string(n) + ")";
  out += ", rank " + std::to_string(rank) + " of " + std::to_string(n) +
         " (deficit " + std::to_string(deficit(n)) + ")";
  return out;
}

std::vector<Violation> validate(const Mls& a) {
  const int n = a.degree();
  std::vector<Violation> out;
  auto check_line = [&](Violation::Line line, int index,
                        std::vector<ElementId> ids) {
    std::sort(ids.begin(), ids.end());
    ids.erase(std::unique(ids.begin(), ids.end()), ids.end());
    const int rank = a.matroid().rank(ids);
    if (int(ids.size()) != n || rank != n)
      out.push_back({line, index, int(ids.size()), rank});
  };
  for (int r = 0; r < n; ++r)
    check_line(Violation::Line::row, r, a.row_ids(r));
  for (int c = 0; c < n; ++c)
    check_line(Violation::Line::column, c, a.col_ids(c));
  return out;
}

Mls from_latin_square(const LatinSquare& square) {
  if (const auto why = latin_violation(square))
    throw InputError("not a latin square: " + *why);
  const int n = int(square.size());
  std::vector<int> class_of(std::size_t(n) * n);
  std::vector<ElementId> grid(std::size_t(n) * n);
  for (int r = 0; r < n; ++r)
    for (int c = 0; c < n; ++c) {
      const std::size_t id = std::size_t(r) * n + c;
      class_of[id] = square[r][c];
      grid[id] = ElementId(id);
    }
  return Mls(std::make_shared<PartitionMatroid>(std::move(class_of)), n,
             std::move(grid));
}

Mls embed_latin(const LatinSquare& square, std::uint64_t p,
                const std::vector<std::vector<Residue>>& basis_cols) {
  if (const auto why = latin_violation(square))
    throw InputError("not a latin square: " + *why);
  const int n = int(square.size());
  const FieldSpec field(p);
  if (int(basis_cols.size()) != n)
    throw InputError("basis needs " + std::to_string(n) + " columns, got " +
                     std::to_string(basis_cols.size()));
  {
    LinearMatroid probe(field, std::size_t(n), basis_cols);
    std::vector<ElementId> all(std::size_t(n), 0);
    for (int i = 0; i < n; ++i) all[std::size_t(i)] = i;
    if (probe.rank(all) != n) throw InputError("singular basis matrix");
  }
  std::vector<std::vector<Residue>> elements(std::size_t(n) * n);
  std::vector<ElementId> grid(std::size_t(n) * n);
  for (int r = 0; r < n; ++r)
    for (int c = 0; c < n; ++c) {
      const std::size_t id = std::size_t(r) * n + c;
      elements[id] = basis_cols[std::size_t(square[r][c] - 1)];
      grid[id] = ElementId(id);
    }
  return Mls(
      std::make_shared<LinearMatroid>(field, std::size_t(n), std::move(elements)),
      n, std::move(grid));
}

Mls theorem2(int n, std::uint64_t p) {
  if (n < 1) throw InputError("degree must be >= 1");
  const FieldSpec field(p);
  std::vector<std::vector<Residue>> elements;
  elements.reserve(std::size_t(n) * n - n + 1);
  elements.emplace_back(std::size_t(n), 0);
  elements[0][0] = 1;  // the shared diagonal element e_1
  std::vector<ElementId> grid(std::size_t(n) * n, 0);
  for (int i = 0; i < n; ++i)
    for (int j = 0; j < n; ++j) {
      if (i == j) continue;
      std::vector<Residue> v(std::size_t(n), 0);
      v[std::size_t(i)] = 1;
      v[std::size_t(j)] = field.neg(1);
      grid[std::size_t(i) * n + j] = ElementId(elements.size());
      elements.push_back(std::move(v));
    }
  return Mls(
      std::make_shared<LinearMatroid>(field, std::size_t(n), std::move(elements)),
      n, std::move(grid));
}

BlockView block_decompose(const Mls& a, std::span<const Cell> cells) {
  const int n = a.degree();
  std::vector<Cell> sorted(cells.begin(), cells.end());
  std::sort(sorted.begin(), sorted.end());
  const int t = int(sorted.size());
  if (t > n) throw ContractError("block_decompose: more cells than rows");
  std::set<int> rows, cols;
  for (const Cell& cell : sorted) {
    if (cell.row < 0 || cell.row >= n || cell.col < 0 || cell.col >= n)
      throw ContractError("block_decompose: cell out of range");
    if (!rows.insert(cell.row).second || !cols.insert(cell.col).second)
      throw ContractError("block_decompose: cells share a row or column");
  }
  BlockView bv;
  bv.n = n;
  bv.t = t;
  bv.row_at.reserve(std::size_t(n));
  bv.col_at.reserve(std::size_t(n));
  for (const Cell& cell : sorted) {
    bv.row_at.push_back(cell.row);
    bv.col_at.push_back(cell.col);
  }
  for (int r = 0; r < n; ++r)
    if (!rows.count(r)) bv.row_at.push_back(r);
  for (int c = 0; c < n; ++c)
    if (!cols.count(c)) bv.col_at.push_back(c);
  return bv;
}

}  // namespace mlt
