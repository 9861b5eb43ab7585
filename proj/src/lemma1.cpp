#include "lemma1.hpp"

#include <algorithm>
#include <map>
#include <string>

#include "errors.hpp"

namespace mlt {

namespace {

void sort_unique(std::vector<int>& v) {
  std::sort(v.begin(), v.end());
  v.erase(std::unique(v.begin(), v.end()), v.end());
}

}  // namespace

SetFamily make_family(std::vector<int> ground,
                      std::vector<std::vector<int>> subsets) {
  sort_unique(ground);
  for (std::size_t i = 0; i < subsets.size(); ++i) {
    sort_unique(subsets[i]);
    for (int x : subsets[i])
      if (!std::binary_search(ground.begin(), ground.end(), x))
        throw InputError("subset " + std::to_string(i) + " holds " +
                         std::to_string(x) + ", which is outside the ground set");
  }
  return {std::move(ground), std::move(subsets)};
}

Decomposition decompose(const SetFamily& f) {
  std::map<int, int> count;
  for (const auto& subset : f.subsets)
    for (int x : subset) ++count[x];
  Decomposition d;
  for (const auto& [x, c] : count)
    (c == 1 ? d.once : d.multi).push_back(x);
  return d;
}

std::optional<std::size_t> find_covered_subset(const SetFamily& f) {
  const std::size_t s = f.subsets.size();
  if (2 * s <= f.ground.size())
    throw ContractError("find_covered_subset: needs more than |X|/2 subsets (" +
                        std::to_string(s) + " given for |X| = " +
                        std::to_string(f.ground.size()) + ")");
  for (std::size_t i = 0; i < s; ++i)
    if (f.subsets[i].size() < s)
      throw ContractError("find_covered_subset: subset " + std::to_string(i) +
                          " has " + std::to_string(f.subsets[i].size()) +
                          " elements, fewer than the family size " +
                          std::to_string(s));

  const Decomposition d = decompose(f);
  for (std::size_t i = 0; i < s; ++i) {
    bool covered = true;
    for (int x : f.subsets[i])
      if (std::binary_search(d.once.begin(), d.once.end(), x)) {
        covered = false;
        break;
      }
    if (covered) return i;
  }
  return std::nullopt;
}

}  // namespace mlt
