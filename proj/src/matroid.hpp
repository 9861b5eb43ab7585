#pragma once

#include <cstddef>
#include <span>
#include <vector>

#include "field.hpp"

namespace mlt {

// Ground set elements are dense integer ids starting at 0.
using ElementId = int;

// Exact rank oracle over an indexed ground set.
//
// All operations take ids with set semantics: duplicates collapse and the
// order does not matter. An id outside [0, ground_size()) is an input error.
class Matroid {
public:
  virtual ~Matroid() = default;

  virtual std::size_t ground_size() const = 0;

  virtual int rank(std::span<const ElementId> ids) const = 0;

  // The unique minimal subset of `independent` whose closure contains x,
  // returned in ascending id order. `independent` must be independent
  // (contract error otherwise) and must span x (domain error otherwise).
  virtual std::vector<ElementId> support(std::span<const ElementId> independent,
                                         ElementId x) const = 0;

  bool is_independent(std::span<const ElementId> ids) const;

  // True when adding x does not raise the rank of the set.
  bool spans(std::span<const ElementId> ids, ElementId x) const;

  // Union of the supports of every target: the unique minimal subset of
  // `independent` spanning all of them.
  std::vector<ElementId> min_spanning_subset(
      std::span<const ElementId> independent,
      std::span<const ElementId> targets) const;

protected:
  // Sorted, deduplicated, bounds-checked copy.
  std::vector<ElementId> canonical_ids(std::span<const ElementId> ids) const;
  void check_id(ElementId id) const;
};

// Vectors over GF(p); a set is independent iff its vectors are linearly
// independent. Rank runs a fraction-free elimination mod p that consumes
// the vectors in ascending id order and pivots on each one's lowest
// nonzero coordinate.
class LinearMatroid final : public Matroid {
public:
  LinearMatroid(FieldSpec field, std::size_t dim,
                std::vector<std::vector<Residue>> elements);

  std::size_t ground_size() const override { return elements_.size(); }
  std::size_t dim() const { return dim_; }
  const FieldSpec& field() const { return field_; }
  const std::vector<Residue>& element(ElementId id) const;

  int rank(std::span<const ElementId> ids) const override;
  std::vector<ElementId> support(std::span<const ElementId> independent,
                                 ElementId x) const override;

private:
  FieldSpec field_;
  std::size_t dim_;
  std::vector<std::vector<Residue>> elements_;
};

// Every element carries a class label; independent sets take at most one
// element per class.
class PartitionMatroid final : public Matroid {
public:
  explicit PartitionMatroid(std::vector<int> class_of);

  std::size_t ground_size() const override { return class_of_.size(); }
  int class_of(ElementId id) const;
  const std::vector<int>& classes() const { return class_of_; }

  int rank(std::span<const ElementId> ids) const override;
  std::vector<ElementId> support(std::span<const ElementId> independent,
                                 ElementId x) const override;

private:
  std::vector<int> class_of_;
};

}  // namespace mlt
