#pragma once

#include <compare>
#include <cstdint>
#include <memory>
#include <span>
#include <string>
#include <vector>

#include "latin.hpp"
#include "matroid.hpp"

namespace mlt {

// Grid position, 0-based everywhere (files, reports, API).
struct Cell {
  int row = 0;
  int col = 0;
  auto operator<=>(const Cell&) const = default;
};

// An n x n grid of element ids over a shared matroid. Construction checks
// shape and id range only; whether every row and column is a base is the
// job of validate(), so defective instances can still be loaded and
// inspected.
class Mls {
public:
  Mls(std::shared_ptr<const Matroid> matroid, int n,
      std::vector<ElementId> grid_row_major);

  int degree() const { return n_; }
  ElementId id_at(int row, int col) const {
    return grid_[std::size_t(row) * n_ + col];
  }
  const Matroid& matroid() const { return *matroid_; }
  const std::shared_ptr<const Matroid>& matroid_ptr() const { return matroid_; }

  std::vector<ElementId> row_ids(int row) const;
  std::vector<ElementId> col_ids(int col) const;

private:
  std::shared_ptr<const Matroid> matroid_;
  int n_;
  std::vector<ElementId> grid_;
};

// A line (row or column) whose id set is not a base: either it repeats an
// id (set_size < n) or its rank falls short.
struct Violation {
  enum class Line { row, column };
  Line line = Line::row;
  int index = 0;
  int set_size = 0;
  int rank = 0;

  int deficit(int n) const { return n - rank; }
  std::string describe(int n) const;
};

// Every row and column must be a base of the matroid.
std::vector<Violation> validate(const Mls& a);

// Partition encoding of a Latin square: one element per cell occurrence,
// classed by its symbol. Throws an input error naming the first offending
// row or column when the grid is not Latin.
Mls from_latin_square(const LatinSquare& square);

// Linear encoding of a Latin square over GF(p): symbol k becomes column
// k-1 of `basis_cols`, which must be n independent vectors of dimension n
// (input error otherwise, e.g. a singular basis matrix).
Mls embed_latin(const LatinSquare& square, std::uint64_t p,
                const std::vector<std::vector<Residue>>& basis_cols);

// The exclusion grid over GF(p): every diagonal cell holds the one shared
// element v1 = e_1, and each off-diagonal cell (i, j) holds its own element
// with vector e_i - e_j (one id per cell even when vectors coincide).
// Every row and column is a base for every prime p, yet no full
// independent transversal exists.
Mls theorem2(int n, std::uint64_t p);

// Row/column relabeling that moves a partial transversal onto the leading
// diagonal: transversal cell k (in row-sorted order) lands at (k, k).
// Positions t..n-1 hold the remaining rows/columns in ascending original
// order. A view only; the grid is never copied.
struct BlockView {
  int n = 0;
  int t = 0;
  std::vector<int> row_at;  // block row index -> original row
  std::vector<int> col_at;  // block col index -> original column

  Cell original(int block_row, int block_col) const {
    return {row_at[std::size_t(block_row)], col_at[std::size_t(block_col)]};
  }
};

// `cells` must form a partial transversal (distinct rows, distinct
// columns, in range); independence is not required here.
BlockView block_decompose(const Mls& a, std::span<const Cell> cells);

}  // namespace mlt
