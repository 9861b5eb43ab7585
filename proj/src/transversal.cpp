#include "transversal.hpp"

#include <algorithm>
#include <map>
#include <numeric>
#include <set>

#include "errors.hpp"
#include "rng.hpp"

namespace mlt {

std::vector<ElementId> cell_ids(const Mls& a, std::span<const Cell> cells) {
  std::vector<ElementId> out;
  out.reserve(cells.size());
  for (const Cell& cell : cells) out.push_back(a.id_at(cell.row, cell.col));
  return out;
}

bool is_valid_transversal(const Mls& a, std::span<const Cell> cells) {
  const int n = a.degree();
  std::set<int> rows, cols;
  for (const Cell& cell : cells) {
    if (cell.row < 0 || cell.row >= n || cell.col < 0 || cell.col >= n)
      throw InputError("cell (" + std::to_string(cell.row) + "," +
                       std::to_string(cell.col) + ") is out of range");
    if (!rows.insert(cell.row).second) return false;
    if (!cols.insert(cell.col).second) return false;
  }
  std::vector<ElementId> ids = cell_ids(a, cells);
  std::sort(ids.begin(), ids.end());
  if (std::adjacent_find(ids.begin(), ids.end()) != ids.end()) return false;
  return a.matroid().is_independent(ids);
}

namespace {

bool holds_id(const std::vector<ElementId>& ids, ElementId id) {
  return std::find(ids.begin(), ids.end(), id) != ids.end();
}

// Whether ids + extra stays independent, honoring multiset semantics.
bool extends(const Matroid& m, std::vector<ElementId>& ids, ElementId extra) {
  if (holds_id(ids, extra)) return false;
  ids.push_back(extra);
  const bool ok = m.is_independent(ids);
  ids.pop_back();
  return ok;
}

void sort_by_row(std::vector<Cell>& cells) {
  std::sort(cells.begin(), cells.end());
}

}  // namespace

bool is_maximal(const Mls& a, const Transversal& t) {
  const int n = a.degree();
  std::vector<char> row_used(std::size_t(n), 0), col_used(std::size_t(n), 0);
  for (const Cell& cell : t.cells) {
    row_used[std::size_t(cell.row)] = 1;
    col_used[std::size_t(cell.col)] = 1;
  }
  std::vector<ElementId> ids = cell_ids(a, t.cells);
  for (int r = 0; r < n; ++r) {
    if (row_used[std::size_t(r)]) continue;
    for (int c = 0; c < n; ++c) {
      if (col_used[std::size_t(c)]) continue;
      if (extends(a.matroid(), ids, a.id_at(r, c))) return false;
    }
  }
  return true;
}

Transversal greedy_complete(const Mls& a, const Transversal& base,
                            std::uint64_t order_seed) {
  if (!is_valid_transversal(a, base.cells))
    throw ContractError(
        "greedy_complete: base is not an independent partial transversal");
  const int n = a.degree();
  std::vector<int> row_order(std::size_t(n), 0), col_order(std::size_t(n), 0);
  std::iota(row_order.begin(), row_order.end(), 0);
  std::iota(col_order.begin(), col_order.end(), 0);
  if (order_seed != 0) {
    SeededRng rng(order_seed);
    rng.shuffle(row_order);
    rng.shuffle(col_order);
  }

  std::vector<char> row_used(std::size_t(n), 0), col_used(std::size_t(n), 0);
  std::vector<Cell> cells = base.cells;
  std::vector<ElementId> ids = cell_ids(a, cells);
  for (const Cell& cell : cells) {
    row_used[std::size_t(cell.row)] = 1;
    col_used[std::size_t(cell.col)] = 1;
  }

  for (int r : row_order) {
    if (row_used[std::size_t(r)]) continue;
    for (int c : col_order) {
      if (col_used[std::size_t(c)]) continue;
      const ElementId id = a.id_at(r, c);
      if (!extends(a.matroid(), ids, id)) continue;
      ids.push_back(id);
      cells.push_back({r, c});
      row_used[std::size_t(r)] = 1;
      col_used[std::size_t(c)] = 1;
      break;
    }
  }
  sort_by_row(cells);
  return {std::move(cells)};
}

Transversal greedy_maximal(const Mls& a, std::uint64_t order_seed) {
  return greedy_complete(a, Transversal{}, order_seed);
}

std::optional<Transversal> augment_step(const Mls& a, const Transversal& t) {
  if (!is_valid_transversal(a, t.cells))
    throw ContractError(
        "augment_step: input is not an independent partial transversal");
  const int n = a.degree();
  Transversal base = t;
  sort_by_row(base.cells);
  const int size = base.size();
  if (size == n)
    throw ContractError("augment_step: transversal already uses every row");

  const Matroid& m = a.matroid();
  const BlockView bv = block_decompose(a, base.cells);
  // ids[j] is the diagonal element of block column j.
  const std::vector<ElementId> ids = cell_ids(a, base.cells);

  auto checked = [&](std::vector<Cell> cells) {
    sort_by_row(cells);
    Transversal out{std::move(cells)};
    if (!is_valid_transversal(a, out.cells))
      throw AnomalyError("augment_step: exchange failed the independence re-check");
    return out;
  };

  // A free-block cell unspanned by the transversal extends it directly.
  for (int bi = size; bi < n; ++bi)
    for (int bj = size; bj < n; ++bj) {
      const Cell cell = bv.original(bi, bj);
      if (m.spans(ids, a.id_at(cell.row, cell.col))) continue;
      std::vector<Cell> cells = base.cells;
      cells.push_back(cell);
      return checked(std::move(cells));
    }

  struct FreeCell {
    Cell cell;
    ElementId id;
  };
  std::vector<FreeCell> free_block;
  std::map<ElementId, std::vector<ElementId>> support_of;
  for (int bi = size; bi < n; ++bi)
    for (int bj = size; bj < n; ++bj) {
      const Cell cell = bv.original(bi, bj);
      const ElementId id = a.id_at(cell.row, cell.col);
      free_block.push_back({cell, id});
      if (!support_of.count(id)) support_of.emplace(id, m.support(ids, id));
    }
  // The minimal subset of the transversal spanning the whole free block.
  std::set<ElementId> spanning_core;
  for (const auto& [id, sup] : support_of)
    spanning_core.insert(sup.begin(), sup.end());

  for (int j = 0; j < size; ++j) {
    const ElementId removed = ids[std::size_t(j)];
    if (!spanning_core.count(removed)) continue;
    // Unspanned cells of block column j below the diagonal, top first.
    std::vector<Cell> fresh;
    for (int bi = size; bi < n; ++bi) {
      const Cell cell = bv.original(bi, j);
      if (!m.spans(ids, a.id_at(cell.row, cell.col))) fresh.push_back(cell);
    }
    if (fresh.size() < 2) continue;
    for (const FreeCell& x : free_block) {
      const auto& sup = support_of.at(x.id);
      if (!std::binary_search(sup.begin(), sup.end(), removed)) continue;
      const Cell* y = nullptr;
      for (const Cell& cand : fresh)
        if (cand.row != x.cell.row) {
          y = &cand;
          break;
        }
      // fresh holds >= 2 cells of one column, hence >= 2 distinct rows.
      std::vector<Cell> cells;
      cells.reserve(std::size_t(size) + 1);
      for (int k = 0; k < size; ++k)
        if (k != j) cells.push_back(base.cells[std::size_t(k)]);
      cells.push_back(x.cell);
      cells.push_back(*y);
      return checked(std::move(cells));
    }
  }
  return std::nullopt;
}

int two_thirds_target(int n) { return (2 * n + 2) / 3; }

namespace {

struct ExactSearch {
  const Mls& a;
  const Matroid& m;
  int n;
  std::uint64_t budget;
  int stop_at;

  std::uint64_t nodes = 0;
  bool out_of_budget = false;
  bool reached_stop = false;
  bool reached_full = false;
  std::vector<Cell> cur, best;
  std::vector<ElementId> ids;
  std::vector<char> col_used;

  bool halted() const { return out_of_budget || reached_stop || reached_full; }

  void dfs(int row) {
    ++nodes;
    if (budget != 0 && nodes > budget) {
      out_of_budget = true;
      return;
    }
    if (cur.size() > best.size()) {
      best = cur;
      if (int(best.size()) == n) {
        reached_full = true;
        return;
      }
      if (stop_at != 0 && int(best.size()) >= stop_at) {
        reached_stop = true;
        return;
      }
    }
    if (row == n) return;

    int cols_left = 0;
    for (char used : col_used) cols_left += used ? 0 : 1;
    std::vector<ElementId> pool = ids;
    for (int r = row; r < n; ++r)
      for (int c = 0; c < n; ++c)
        if (!col_used[std::size_t(c)]) pool.push_back(a.id_at(r, c));
    const int gain = m.rank(pool) - int(cur.size());
    const int bound =
        int(cur.size()) + std::min({n - row, cols_left, gain});
    if (bound <= int(best.size())) return;

    for (int c = 0; c < n && !halted(); ++c) {
      if (col_used[std::size_t(c)]) continue;
      const ElementId id = a.id_at(row, c);
      if (!extends(m, ids, id)) continue;
      ids.push_back(id);
      cur.push_back({row, c});
      col_used[std::size_t(c)] = 1;
      dfs(row + 1);
      col_used[std::size_t(c)] = 0;
      cur.pop_back();
      ids.pop_back();
    }
    if (!halted()) dfs(row + 1);
  }
};

}  // namespace

SolveReport exact_max(const Mls& a, std::uint64_t node_budget, int stop_at) {
  const int n = a.degree();
  ExactSearch search{a,  a.matroid(), n,  node_budget, stop_at, 0, false,
                     false, false,    {}, {},          {},      {}};
  search.col_used.assign(std::size_t(n), 0);
  search.dfs(0);

  SolveReport report;
  report.method = "exact";
  report.n = n;
  report.best.cells = std::move(search.best);
  report.optimal =
      search.reached_full || (!search.out_of_budget && !search.reached_stop);
  report.nodes = search.nodes;
  report.budget = node_budget;
  return report;
}

SolveReport two_thirds_solve(const Mls& a, std::uint64_t seed) {
  const int n = a.degree();
  const int target = two_thirds_target(n);
  Transversal best = greedy_maximal(a, seed);
  std::uint64_t iterations = 0;
  bool anomaly = false;

  while (best.size() < target) {
    if (auto next = augment_step(a, best)) {
      best = greedy_complete(a, *next, seed);
      ++iterations;
      continue;
    }
    // No augmenting configuration although the floor is not reached yet.
    // Hand over to the exhaustive search before giving up on the bound.
    SolveReport fallback = exact_max(a, 0, target);
    iterations += fallback.nodes;
    if (fallback.best.size() >= target) {
      best = fallback.best;
      anomaly = true;
      break;
    }
    throw TheoremViolation(n, target, fallback.best.size());
  }

  SolveReport report;
  report.method = "augment";
  report.n = n;
  report.best = std::move(best);
  report.optimal = report.best.size() == n;
  report.nodes = iterations;
  report.anomaly = anomaly;
  report.seed = seed;
  return report;
}

bool maximality_floor_check(const Mls& a, const Transversal& t) {
  if (!is_valid_transversal(a, t.cells))
    throw ContractError(
        "maximality_floor_check: input is not an independent partial transversal");
  if (!is_maximal(a, t))
    throw ContractError("maximality_floor_check: transversal is not maximal");
  return t.size() >= (a.degree() + 1) / 2;
}

}  // namespace mlt
