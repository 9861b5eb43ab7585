#include "matroid.hpp"

#include <algorithm>
#include <cassert>
#include <set>
#include <string>

#include "errors.hpp"

namespace mlt {

namespace {

// Incremental row basis in echelon form. Row k has zeros at the lead
// columns of rows 0..k-1, so reducing a fresh vector against the rows in
// insertion order never reintroduces an eliminated coordinate. Updates are
// fraction-free (cross-multiplied), which keeps everything in GF(p) without
// computing inverses.
class Echelon {
public:
  explicit Echelon(const FieldSpec& f) : field_(&f) {}

  // Returns true (and keeps the reduced vector) when v is independent of
  // the rows inserted so far.
  bool insert(std::vector<Residue> v) {
    for (std::size_t k = 0; k < rows_.size(); ++k) {
      const Residue c = v[lead_[k]];
      if (c == 0) continue;
      const Residue pv = rows_[k][lead_[k]];
      for (std::size_t i = 0; i < v.size(); ++i)
        v[i] = field_->sub(field_->mul(pv, v[i]), field_->mul(c, rows_[k][i]));
    }
    for (std::size_t i = 0; i < v.size(); ++i) {
      if (v[i] != 0) {
        lead_.push_back(i);
        rows_.push_back(std::move(v));
        return true;
      }
    }
    return false;
  }

  std::size_t size() const { return rows_.size(); }

private:
  const FieldSpec* field_;
  std::vector<std::vector<Residue>> rows_;
  std::vector<std::size_t> lead_;
};

}  // namespace

void Matroid::check_id(ElementId id) const {
  if (id < 0 || std::size_t(id) >= ground_size())
    throw InputError("unknown element id " + std::to_string(id));
}

std::vector<ElementId> Matroid::canonical_ids(
    std::span<const ElementId> ids) const {
  std::vector<ElementId> out(ids.begin(), ids.end());
  std::sort(out.begin(), out.end());
  out.erase(std::unique(out.begin(), out.end()), out.end());
  for (ElementId id : out) check_id(id);
  return out;
}

bool Matroid::is_independent(std::span<const ElementId> ids) const {
  const auto s = canonical_ids(ids);
  return rank(s) == int(s.size());
}

bool Matroid::spans(std::span<const ElementId> ids, ElementId x) const {
  check_id(x);
  auto s = canonical_ids(ids);
  const int base = rank(s);
  s.push_back(x);
  return rank(s) == base;
}

std::vector<ElementId> Matroid::min_spanning_subset(
    std::span<const ElementId> independent,
    std::span<const ElementId> targets) const {
  const auto base = canonical_ids(independent);
  if (rank(base) != int(base.size()))
    throw ContractError("min_spanning_subset: the reference set is dependent");
  std::set<ElementId> acc;
  for (ElementId x : canonical_ids(targets)) {
    const auto sup = support(base, x);
    acc.insert(sup.begin(), sup.end());
  }
  return {acc.begin(), acc.end()};
}

LinearMatroid::LinearMatroid(FieldSpec field, std::size_t dim,
                             std::vector<std::vector<Residue>> elements)
    : field_(field), dim_(dim), elements_(std::move(elements)) {
  if (dim_ == 0) throw InputError("vector dimension must be positive");
  for (std::size_t id = 0; id < elements_.size(); ++id) {
    if (elements_[id].size() != dim_)
      throw InputError("element " + std::to_string(id) + " has " +
                       std::to_string(elements_[id].size()) +
                       " coordinates, expected " + std::to_string(dim_));
    for (Residue r : elements_[id])
      if (std::uint64_t(r) >= field_.p)
        throw InputError("element " + std::to_string(id) +
                         " has a coordinate outside [0, p)");
  }
}

const std::vector<Residue>& LinearMatroid::element(ElementId id) const {
  check_id(id);
  return elements_[std::size_t(id)];
}

int LinearMatroid::rank(std::span<const ElementId> ids) const {
  Echelon ech(field_);
  int r = 0;
  for (ElementId id : canonical_ids(ids))
    if (ech.insert(elements_[std::size_t(id)])) ++r;
  return r;
}

std::vector<ElementId> LinearMatroid::support(
    std::span<const ElementId> independent, ElementId x) const {
  const auto base = canonical_ids(independent);
  const std::size_t t = base.size();
  if (rank(base) != int(t))
    throw ContractError("support: the reference set is dependent");
  check_id(x);

  // Solve  sum_j c_j * base[j] = x  by Gaussian elimination on the
  // augmented dim x (t+1) system. Independence of the base means every
  // one of the first t columns receives a pivot.
  std::vector<std::vector<Residue>> a(dim_, std::vector<Residue>(t + 1, 0));
  for (std::size_t j = 0; j < t; ++j) {
    const auto& v = elements_[std::size_t(base[j])];
    for (std::size_t i = 0; i < dim_; ++i) a[i][j] = v[i];
  }
  {
    const auto& v = elements_[std::size_t(x)];
    for (std::size_t i = 0; i < dim_; ++i) a[i][t] = v[i];
  }

  std::size_t row = 0;
  std::vector<std::size_t> pivot_row(t, 0);
  for (std::size_t c = 0; c < t; ++c) {
    std::size_t pr = row;
    while (pr < dim_ && a[pr][c] == 0) ++pr;
    assert(pr < dim_);
    std::swap(a[row], a[pr]);
    const Residue piv_inv = field_.inv(a[row][c]);
    for (std::size_t i = row + 1; i < dim_; ++i) {
      if (a[i][c] == 0) continue;
      const Residue f = field_.mul(a[i][c], piv_inv);
      for (std::size_t k = c; k <= t; ++k)
        a[i][k] = field_.sub(a[i][k], field_.mul(f, a[row][k]));
    }
    pivot_row[c] = row;
    ++row;
  }
  for (std::size_t i = row; i < dim_; ++i)
    if (a[i][t] != 0)
      throw DomainError("support: element " + std::to_string(x) +
                        " is not spanned by the set");

  std::vector<Residue> coef(t, 0);
  for (std::size_t c = t; c-- > 0;) {
    const std::size_t r = pivot_row[c];
    Residue sum = a[r][t];
    for (std::size_t k = c + 1; k < t; ++k)
      sum = field_.sub(sum, field_.mul(a[r][k], coef[k]));
    coef[c] = field_.mul(sum, field_.inv(a[r][c]));
  }

  std::vector<ElementId> out;
  for (std::size_t j = 0; j < t; ++j)
    if (coef[j] != 0) out.push_back(base[j]);
  return out;
}

PartitionMatroid::PartitionMatroid(std::vector<int> class_of)
    : class_of_(std::move(class_of)) {}

int PartitionMatroid::class_of(ElementId id) const {
  check_id(id);
  return class_of_[std::size_t(id)];
}

int PartitionMatroid::rank(std::span<const ElementId> ids) const {
  std::set<int> seen;
  for (ElementId id : canonical_ids(ids)) seen.insert(class_of_[std::size_t(id)]);
  return int(seen.size());
}

std::vector<ElementId> PartitionMatroid::support(
    std::span<const ElementId> independent, ElementId x) const {
  const auto base = canonical_ids(independent);
  if (rank(base) != int(base.size()))
    throw ContractError("support: the reference set is dependent");
  check_id(x);
  const int cls = class_of_[std::size_t(x)];
  for (ElementId id : base)
    if (class_of_[std::size_t(id)] == cls) return {id};
  throw DomainError("support: element " + std::to_string(x) +
                    " is not spanned by the set");
}

}  // namespace mlt
