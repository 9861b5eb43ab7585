#include <doctest.h>

#include <random>
#include <vector>

#include "errors.hpp"
#include "field.hpp"
#include "matroid.hpp"
#include "oracles.hpp"

using mlt::ElementId;
using mlt::FieldSpec;
using mlt::LinearMatroid;
using mlt::PartitionMatroid;
using mlt::Residue;

namespace {

std::vector<Residue> unit(std::size_t dim, std::size_t at) {
  std::vector<Residue> v(dim, 0);
  v[at] = 1;
  return v;
}

}  // namespace

TEST_CASE("primality") {
  CHECK(mlt::is_prime(2));
  CHECK(mlt::is_prime(3));
  CHECK(mlt::is_prime(5));
  CHECK(mlt::is_prime(7));
  CHECK(mlt::is_prime(2147483647));  // 2^31 - 1
  CHECK_FALSE(mlt::is_prime(0));
  CHECK_FALSE(mlt::is_prime(1));
  CHECK_FALSE(mlt::is_prime(4));
  CHECK_FALSE(mlt::is_prime(9));
  CHECK_FALSE(mlt::is_prime(91));  // 7 * 13
}

TEST_CASE("field construction rejects bad moduli") {
  CHECK_THROWS_AS(FieldSpec(1), mlt::InputError);
  CHECK_THROWS_AS(FieldSpec(6), mlt::InputError);
  CHECK_THROWS_AS(FieldSpec(std::uint64_t(1) << 32), mlt::InputError);
  CHECK_NOTHROW(FieldSpec(2147483647));
}

TEST_CASE("field arithmetic over GF(7)") {
  const FieldSpec f(7);
  CHECK(f.add(3, 5) == 1);
  CHECK(f.sub(2, 5) == 4);
  CHECK(f.mul(3, 5) == 1);
  CHECK(f.neg(0) == 0);
  CHECK(f.neg(2) == 5);
  for (Residue a = 1; a < 7; ++a) {
    CHECK(f.mul(a, f.inv(a)) == 1);
  }
}

TEST_CASE("field inverses over a large prime") {
  const FieldSpec f(2147483647);
  for (Residue a : {Residue(1), Residue(2), Residue(12345), Residue(2147483646)}) {
    CHECK(f.mul(a, f.inv(a)) == 1);
  }
}

TEST_CASE("linear rank on a hand-checked triple") {
  const FieldSpec f(5);
  LinearMatroid m(f, 2, {{1, 0}, {0, 1}, {1, 1}});
  const std::vector<ElementId> all{0, 1, 2};
  CHECK(m.rank(all) == 2);
  CHECK(m.is_independent(std::vector<ElementId>{0, 1}));
  CHECK(m.is_independent(std::vector<ElementId>{0, 2}));
  CHECK(m.is_independent(std::vector<ElementId>{1, 2}));
  CHECK_FALSE(m.is_independent(all));
}

TEST_CASE("zero vectors are rank-0 loops") {
  const FieldSpec f(3);
  LinearMatroid m(f, 2, {{0, 0}, {1, 0}});
  CHECK(m.rank(std::vector<ElementId>{0}) == 0);
  CHECK(m.rank(std::vector<ElementId>{0, 1}) == 1);
}

TEST_CASE("parallel elements collapse under set semantics") {
  const FieldSpec f(5);
  LinearMatroid m(f, 2, {{1, 0}, {1, 0}, {2, 0}});
  // Distinct ids, equal or parallel vectors: rank of the pair is 1.
  CHECK(m.rank(std::vector<ElementId>{0, 1}) == 1);
  CHECK(m.rank(std::vector<ElementId>{0, 2}) == 1);
  // Duplicate ids collapse before elimination.
  CHECK(m.rank(std::vector<ElementId>{0, 0}) == 1);
}

TEST_CASE("rank rejects out-of-range ids") {
  const FieldSpec f(5);
  LinearMatroid m(f, 2, {{1, 0}});
  CHECK_THROWS_AS(m.rank(std::vector<ElementId>{1}), mlt::InputError);
  CHECK_THROWS_AS(m.rank(std::vector<ElementId>{-1}), mlt::InputError);
}

TEST_CASE("linear rank matches subset enumeration on random matroids") {
  std::mt19937_64 gen(20240517);
  for (std::uint64_t p : {2, 3, 5}) {
    const FieldSpec f(p);
    for (int round = 0; round < 40; ++round) {
      const std::size_t dim = 2 + gen() % 3;       // 2..4
      const std::size_t ground = 1 + gen() % 7;    // 1..7
      std::vector<std::vector<Residue>> elements(ground);
      for (auto& v : elements) {
        v.resize(dim);
        for (Residue& r : v) r = Residue(gen() % p);
      }
      LinearMatroid m(f, dim, elements);

      std::vector<ElementId> ids;
      for (std::size_t i = 0; i < ground; ++i)
        if (gen() % 2) ids.push_back(ElementId(i));
      CHECK(m.rank(ids) == oracle::ids_rank(m, ids));
    }
  }
}

TEST_CASE("spans is closure membership") {
  const FieldSpec f(5);
  // v1, v1 - v3, v3 - v1, v2 in dimension 3.
  LinearMatroid m(f, 3, {{1, 0, 0}, {1, 0, 4}, {4, 0, 1}, {0, 1, 0}});
  CHECK(m.spans(std::vector<ElementId>{0, 1}, 2));
  CHECK_FALSE(m.spans(std::vector<ElementId>{0, 1, 2}, 3));
  CHECK(m.spans(std::vector<ElementId>{}, 0) == false);
  // The zero combination: an empty set spans nothing but a zero vector.
  LinearMatroid z(f, 2, {{0, 0}});
  CHECK(z.spans(std::vector<ElementId>{}, 0));
}

TEST_CASE("support on hand-checked cases") {
  const FieldSpec f(5);
  SUBCASE("sum of two basis vectors") {
    LinearMatroid m(f, 2, {{1, 0}, {0, 1}, {1, 1}});
    CHECK(m.support(std::vector<ElementId>{0, 1}, 2) ==
          std::vector<ElementId>{0, 1});
  }
  SUBCASE("triangular reference set") {
    // T = {e1, e1 - e2}, x = e2 = 1*e1 + (p-1)*(e1 - e2) ... both needed.
    LinearMatroid m(f, 2, {{1, 0}, {1, 4}, {0, 1}});
    CHECK(m.support(std::vector<ElementId>{0, 1}, 2) ==
          std::vector<ElementId>{0, 1});
  }
  SUBCASE("irrelevant member excluded") {
    LinearMatroid m(f, 3, {{1, 0, 0}, {0, 1, 0}, {0, 0, 1}, {1, 0, 1}});
    CHECK(m.support(std::vector<ElementId>{0, 1, 2}, 3) ==
          std::vector<ElementId>{0, 2});
  }
  SUBCASE("member of the set supports itself") {
    LinearMatroid m(f, 2, {{1, 0}, {0, 1}});
    CHECK(m.support(std::vector<ElementId>{0, 1}, 0) ==
          std::vector<ElementId>{0});
  }
}

TEST_CASE("support rejects bad inputs") {
  const FieldSpec f(5);
  LinearMatroid m(f, 2, {{1, 0}, {2, 0}, {0, 1}});
  // Reference set dependent.
  CHECK_THROWS_AS(m.support(std::vector<ElementId>{0, 1}, 2), mlt::ContractError);
  // Element outside the span.
  CHECK_THROWS_AS(m.support(std::vector<ElementId>{0}, 2), mlt::DomainError);
}

TEST_CASE("support equals the nonzero combination coefficients") {
  std::mt19937_64 gen(7130);
  const FieldSpec f(5);
  for (int round = 0; round < 200; ++round) {
    const std::size_t dim = 2 + gen() % 4;  // 2..5
    // Draw an independent reference set by oracle-checked rejection.
    std::vector<std::vector<Residue>> elements;
    std::vector<ElementId> ref;
    const std::size_t want = 1 + gen() % dim;
    while (ref.size() < want) {
      std::vector<Residue> v(dim);
      for (Residue& r : v) r = Residue(gen() % 5);
      std::vector<std::vector<Residue>> trial;
      for (ElementId id : ref) trial.push_back(elements[std::size_t(id)]);
      trial.push_back(v);
      if (!oracle::vectors_independent(5, trial)) continue;
      elements.push_back(v);
      ref.push_back(ElementId(elements.size() - 1));
    }
    // x = a known combination; its support must be the nonzero terms.
    std::vector<Residue> x(dim, 0);
    std::vector<ElementId> expected;
    for (ElementId id : ref) {
      const Residue c = Residue(gen() % 5);
      if (c != 0) expected.push_back(id);
      for (std::size_t d = 0; d < dim; ++d)
        x[d] = Residue((x[d] + c * elements[std::size_t(id)][d]) % 5);
    }
    elements.push_back(x);
    const ElementId xid = ElementId(elements.size() - 1);

    LinearMatroid m(f, dim, elements);
    CHECK(m.support(ref, xid) == expected);
  }
}

TEST_CASE("min spanning subset unions the supports") {
  const FieldSpec f(5);
  LinearMatroid m(f, 3,
                  {{1, 0, 0}, {0, 1, 0}, {0, 0, 1}, {1, 1, 0}, {0, 0, 2}});
  const std::vector<ElementId> ref{0, 1, 2};
  CHECK(m.min_spanning_subset(ref, std::vector<ElementId>{3}) ==
        std::vector<ElementId>{0, 1});
  CHECK(m.min_spanning_subset(ref, std::vector<ElementId>{3, 4}) ==
        std::vector<ElementId>{0, 1, 2});
  CHECK(m.min_spanning_subset(ref, std::vector<ElementId>{}).empty());
}

TEST_CASE("partition matroid counts distinct classes") {
  PartitionMatroid m({0, 0, 1, 2, 1});
  CHECK(m.ground_size() == 5);
  CHECK(m.rank(std::vector<ElementId>{0, 1}) == 1);
  CHECK(m.rank(std::vector<ElementId>{0, 2, 3}) == 3);
  CHECK(m.is_independent(std::vector<ElementId>{1, 4}));
  CHECK_FALSE(m.is_independent(std::vector<ElementId>{2, 4}));
  CHECK(m.spans(std::vector<ElementId>{0}, 1));
  CHECK_FALSE(m.spans(std::vector<ElementId>{0}, 2));
}

TEST_CASE("partition support is the same-class member") {
  PartitionMatroid m({0, 0, 1});
  CHECK(m.support(std::vector<ElementId>{0, 2}, 1) == std::vector<ElementId>{0});
  CHECK(m.support(std::vector<ElementId>{0, 2}, 0) == std::vector<ElementId>{0});
  CHECK_THROWS_AS(m.support(std::vector<ElementId>{2}, 0), mlt::DomainError);
  CHECK_THROWS_AS(m.support(std::vector<ElementId>{0, 1}, 2),
                  mlt::ContractError);
}

TEST_CASE("partition rank matches subset enumeration") {
  std::mt19937_64 gen(99);
  for (int round = 0; round < 50; ++round) {
    const std::size_t ground = 1 + gen() % 8;
    std::vector<int> classes(ground);
    for (int& c : classes) c = int(gen() % 4);
    PartitionMatroid m(classes);
    std::vector<ElementId> ids;
    for (std::size_t i = 0; i < ground; ++i)
      if (gen() % 2) ids.push_back(ElementId(i));
    CHECK(m.rank(ids) == oracle::ids_rank(m, ids));
  }
}

TEST_CASE("standard basis spans everything") {
  const FieldSpec f(7);
  const std::size_t dim = 4;
  std::vector<std::vector<Residue>> elements;
  for (std::size_t i = 0; i < dim; ++i) elements.push_back(unit(dim, i));
  elements.push_back({3, 1, 4, 1});
  LinearMatroid m(f, dim, elements);
  const std::vector<ElementId> basis{0, 1, 2, 3};
  CHECK(m.rank(basis) == 4);
  CHECK(m.spans(basis, 4));
  CHECK(m.support(basis, 4) == basis);
}
