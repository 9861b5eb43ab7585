#pragma once

#include <optional>
#include <vector>

namespace mlt {

// A family X_0..X_{s-1} of subsets of a finite ground set X. Ground set
// and subsets are kept sorted and deduplicated.
struct SetFamily {
  std::vector<int> ground;
  std::vector<std::vector<int>> subsets;
};

// Sorts, deduplicates, and checks every subset against the ground set.
SetFamily make_family(std::vector<int> ground,
                      std::vector<std::vector<int>> subsets);

// Ground elements split by how many subsets contain them.
struct Decomposition {
  std::vector<int> once;   // in exactly one subset
  std::vector<int> multi;  // in at least two subsets
};

Decomposition decompose(const SetFamily& f);

// Smallest index i such that every element of X_i also appears in another
// subset of the family. Requires s > |X|/2 and |X_i| >= s for every i
// (contract error naming the failed precondition otherwise).
//
// Under these preconditions a covered subset always exists when |X| is
// even. For odd |X| the guarantee can fail - ground {1,2,3} with subsets
// {1,2}, {2,3} meets the preconditions yet covers nothing - so the result
// is optional and a caller must treat nullopt as a legitimate answer.
std::optional<std::size_t> find_covered_subset(const SetFamily& f);

}  // namespace mlt
