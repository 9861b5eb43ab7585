#pragma once

#include <cstdint>
#include <optional>
#include <span>
#include <string>
#include <vector>

#include "mls.hpp"

namespace mlt {

// Cells with pairwise-distinct rows and columns whose referenced elements
// form an independent set. Kept sorted by row.
struct Transversal {
  std::vector<Cell> cells;

  int size() const { return int(cells.size()); }
};

// Referenced element ids in cell order (may repeat when cells share an id).
std::vector<ElementId> cell_ids(const Mls& a, std::span<const Cell> cells);

// Independence is judged on the referenced multiset: two cells holding the
// same id make the set dependent.
bool is_valid_transversal(const Mls& a, std::span<const Cell> cells);

// No free cell (free row, free column) extends the transversal.
bool is_maximal(const Mls& a, const Transversal& t);

// Single row-major pass that keeps every addable cell, scanning rows and
// columns under permutations drawn from `order_seed` (seed 0 keeps the
// identity order). A cell rejected once stays rejectable - the span only
// grows - so one pass is enough for maximality.
Transversal greedy_maximal(const Mls& a, std::uint64_t order_seed);

// Same scan, but seeded with an existing transversal that must stay intact.
Transversal greedy_complete(const Mls& a, const Transversal& base,
                            std::uint64_t order_seed);

// One augmentation of a maximal transversal T (|T| = t < n):
//
//   * If some free-block cell is unspanned by T (T was not maximal after
//     all), that trivial extension is returned directly.
//   * Otherwise the grid is viewed with T on the leading diagonal. The
//     search visits diagonal positions j in ascending order and looks for
//     (1) diagonal element a_jj lying in the minimal subset of T spanning
//     the free block, and (2) at least two cells of column j below the
//     diagonal unspanned by T. Any free-block cell x whose support
//     contains a_jj then combines with an unspanned column-j cell y from a
//     different row, and T - {a_jj} + {x, y} has size t+1: T - {a_jj} + {y}
//     is independent and cannot span x, since every expansion of x over T
//     uses a_jj.
//
// The search over (j, x, y) is exhaustive in ascending row order, so the
// result is deterministic. Every returned transversal is re-checked; a
// failed re-check raises an anomaly instead of returning silently.
// Returns nullopt when no configuration exists.
std::optional<Transversal> augment_step(const Mls& a, const Transversal& t);

struct SolveReport {
  std::string method;
  int n = 0;
  Transversal best;
  bool optimal = false;     // search space exhausted or the bound n was met
  std::uint64_t nodes = 0;  // search nodes (exact) or augment iterations
  bool anomaly = false;     // the exact fallback was needed to reach the floor
  std::uint64_t seed = 0;
  std::uint64_t budget = 0;
};

// ceil(2n/3), the floor the augmentation loop drives toward.
int two_thirds_target(int n);

// Greedy start, then augment and re-greedify until the size reaches
// ceil(2n/3). If no augmenting configuration exists first, an exhaustive
// search restricted to the target takes over and the report is flagged as
// an anomaly; if that search proves the optimum is below the target, a
// TheoremViolation is thrown rather than returning a weaker answer.
SolveReport two_thirds_solve(const Mls& a, std::uint64_t seed = 0);

// Depth-first branch and bound over rows in increasing order; each row is
// either skipped or assigned the lowest feasible column first, so the
// first optimum found is the lexicographically least cell set. At every
// node the size is bounded by free rows, free columns, and the rank the
// free cells can still add over the current set. node_budget 0 means
// unbounded; an exhausted budget yields optimal=false. stop_at > 0 ends
// the search once a transversal of that size is found.
SolveReport exact_max(const Mls& a, std::uint64_t node_budget,
                      int stop_at = 0);

// t must be a maximal independent transversal (contract error otherwise);
// returns t >= ceil(n/2).
bool maximality_floor_check(const Mls& a, const Transversal& t);

}  // namespace mlt
