#include "latin.hpp"

#include <numeric>

#include "errors.hpp"
#include "rng.hpp"

namespace mlt {

std::optional<std::string> latin_violation(const LatinSquare& square) {
  const int n = int(square.size());
  if (n == 0) return "square is empty";
  for (int r = 0; r < n; ++r)
    if (int(square[r].size()) != n)
      return "row " + std::to_string(r) + " has " +
             std::to_string(square[r].size()) + " entries, expected " +
             std::to_string(n);
  for (int r = 0; r < n; ++r)
    for (int c = 0; c < n; ++c)
      if (square[r][c] < 1 || square[r][c] > n)
        return "row " + std::to_string(r) + " holds symbol " +
               std::to_string(square[r][c]) + " outside 1.." +
               std::to_string(n);
  for (int r = 0; r < n; ++r) {
    std::vector<char> seen(n + 1, 0);
    for (int c = 0; c < n; ++c) {
      if (seen[square[r][c]])
        return "row " + std::to_string(r) + " repeats symbol " +
               std::to_string(square[r][c]);
      seen[square[r][c]] = 1;
    }
  }
  for (int c = 0; c < n; ++c) {
    std::vector<char> seen(n + 1, 0);
    for (int r = 0; r < n; ++r) {
      if (seen[square[r][c]])
        return "column " + std::to_string(c) + " repeats symbol " +
               std::to_string(square[r][c]);
      seen[square[r][c]] = 1;
    }
  }
  return std::nullopt;
}

namespace {

// Completes row r of the partially built square, trying symbols in the
// order given. col_used[c][s] tracks symbols already fixed in column c.
bool fill_row(LatinSquare& square, std::vector<std::vector<char>>& col_used,
              const std::vector<int>& order, int r, int c) {
  const int n = int(square.size());
  if (c == n) return true;
  for (int s : order) {
    bool in_row = false;
    for (int k = 0; k < c; ++k)
      if (square[r][k] == s) {
        in_row = true;
        break;
      }
    if (in_row || col_used[c][s]) continue;
    square[r][c] = s;
    col_used[c][s] = 1;
    if (fill_row(square, col_used, order, r, c + 1)) return true;
    col_used[c][s] = 0;
  }
  return false;
}

void enumerate_rows(LatinSquare& square,
                    std::vector<std::vector<char>>& col_used, int r, int c,
                    const std::function<void(const LatinSquare&)>& visit) {
  const int n = int(square.size());
  if (r == n) {
    visit(square);
    return;
  }
  const int nr = c + 1 == n ? r + 1 : r;
  const int nc = c + 1 == n ? 0 : c + 1;
  for (int s = 1; s <= n; ++s) {
    bool in_row = false;
    for (int k = 0; k < c; ++k)
      if (square[r][k] == s) {
        in_row = true;
        break;
      }
    if (in_row || col_used[c][s]) continue;
    square[r][c] = s;
    col_used[c][s] = 1;
    enumerate_rows(square, col_used, nr, nc, visit);
    col_used[c][s] = 0;
  }
}

}  // namespace

LatinSquare random_latin_square(int n, std::uint64_t seed) {
  if (n < 1) throw InputError("latin square order must be >= 1");
  SeededRng rng(seed);
  LatinSquare square(n, std::vector<int>(n, 0));
  std::vector<std::vector<char>> col_used(n, std::vector<char>(n + 1, 0));
  std::vector<int> order(n);
  std::iota(order.begin(), order.end(), 1);
  for (int r = 0; r < n; ++r) {
    rng.shuffle(order);
    if (!fill_row(square, col_used, order, r, 0))
      throw AnomalyError("latin row extension failed");  // unreachable
  }
  return square;
}

void enumerate_latin_squares(
    int n, const std::function<void(const LatinSquare&)>& visit) {
  if (n < 1) throw InputError("latin square order must be >= 1");
  if (n > 5)
    throw InputError("exhaustive latin enumeration is limited to order <= 5");
  LatinSquare square(n, std::vector<int>(n, 0));
  std::vector<std::vector<char>> col_used(n, std::vector<char>(n + 1, 0));
  enumerate_rows(square, col_used, 0, 0, visit);
}

}  // namespace mlt
