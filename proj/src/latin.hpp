#pragma once

#include <cstdint>
#include <functional>
#include <optional>
#include <string>
#include <vector>

namespace mlt {

using LatinSquare = std::vector<std::vector<int>>;

// Reason the grid is not an order-n Latin square over symbols 1..n, or
// nullopt when it is one. Rows are examined before columns, lowest index
// first, so the message always names the first offender.
std::optional<std::string> latin_violation(const LatinSquare& square);

// Deterministic per (n, seed): each row draws a fresh symbol permutation
// from the seeded stream and is completed by backtracking within the row.
// A completed set of rows always extends, so the search never reorders
// earlier rows.
LatinSquare random_latin_square(int n, std::uint64_t seed);

// Visits every order-n Latin square in lexicographic cell order.
// Feasible for n <= 5 (161280 squares); larger n is an input error.
void enumerate_latin_squares(int n,
                             const std::function<void(const LatinSquare&)>& visit);

}  // namespace mlt
