#include <doctest.h>

#include <algorithm>
#include <vector>

#include "errors.hpp"
#include "latin.hpp"
#include "mls.hpp"
#include "oracles.hpp"
#include "scan.hpp"
#include "transversal.hpp"

using mlt::Cell;
using mlt::Mls;
using mlt::Transversal;

namespace {

// L[i][j] = ((i + j) mod n) + 1, the cyclic square of order n.
mlt::LatinSquare cyclic_square(int n) {
  mlt::LatinSquare square(std::size_t(n), std::vector<int>(std::size_t(n), 0));
  for (int i = 0; i < n; ++i)
    for (int j = 0; j < n; ++j) square[std::size_t(i)][std::size_t(j)] = (i + j) % n + 1;
  return square;
}

}  // namespace

TEST_CASE("transversal validity") {
  const Mls a = mlt::theorem2(3, 5);
  CHECK(mlt::is_valid_transversal(a, std::vector<Cell>{}));
  CHECK(mlt::is_valid_transversal(a, std::vector<Cell>{{0, 0}, {1, 2}}));
  // Shared row, shared column, shared id, dependent ids.
  CHECK_FALSE(mlt::is_valid_transversal(a, std::vector<Cell>{{0, 0}, {0, 2}}));
  CHECK_FALSE(mlt::is_valid_transversal(a, std::vector<Cell>{{0, 0}, {2, 0}}));
  CHECK_FALSE(mlt::is_valid_transversal(a, std::vector<Cell>{{0, 0}, {1, 1}}));
  CHECK_FALSE(mlt::is_valid_transversal(
      a, std::vector<Cell>{{0, 1}, {1, 0}}));  // e1-e2 and e2-e1
  CHECK_THROWS_AS(mlt::is_valid_transversal(a, std::vector<Cell>{{0, 3}}),
                  mlt::InputError);
}

TEST_CASE("greedy on the exclusion grid, identity order") {
  const Mls a = mlt::theorem2(3, 5);
  const Transversal t = mlt::greedy_maximal(a, 0);
  // Row 0 takes (0,0). Row 1: column 1 repeats the diagonal id, so (1,2).
  // Row 2: only column 1 is free and e3-e2 = -(e2-e3) is already spanned.
  CHECK(t.cells == std::vector<Cell>{{0, 0}, {1, 2}});
  CHECK(mlt::is_maximal(a, t));
  CHECK(mlt::maximality_floor_check(a, t));
}

TEST_CASE("greedy outputs are maximal under any seed") {
  const std::vector<Mls> corpus{
      mlt::theorem2(4, 5),
      mlt::theorem2(5, 2),
      mlt::from_latin_square(cyclic_square(4)),
      mlt::from_latin_square(cyclic_square(5)),
      mlt::embedded_instance(4, 7, 3),
  };
  for (const Mls& a : corpus) {
    for (std::uint64_t seed : {0, 1, 2, 77}) {
      const Transversal t = mlt::greedy_maximal(a, seed);
      CHECK(mlt::is_valid_transversal(a, t.cells));
      CHECK(mlt::is_maximal(a, t));
      // Maximality forces at least ceil(n/2) cells.
      CHECK(t.size() >= (a.degree() + 1) / 2);
      CHECK(mlt::maximality_floor_check(a, t));
    }
  }
}

TEST_CASE("greedy_complete keeps the base cells") {
  const Mls a = mlt::from_latin_square(cyclic_square(5));
  const Transversal base{{{1, 0}, {3, 2}}};
  REQUIRE(mlt::is_valid_transversal(a, base.cells));
  const Transversal full = mlt::greedy_complete(a, base, 0);
  for (const Cell& cell : base.cells)
    CHECK(std::find(full.cells.begin(), full.cells.end(), cell) !=
          full.cells.end());
  CHECK(full.size() >= base.size());
  CHECK(mlt::is_maximal(a, full));
  CHECK_THROWS_AS(mlt::greedy_complete(a, Transversal{{{0, 0}, {0, 1}}}, 0),
                  mlt::ContractError);
}

TEST_CASE("augment finds nothing on the saturated exclusion grid") {
  const Mls a = mlt::theorem2(3, 5);
  const Transversal t = mlt::greedy_maximal(a, 0);
  REQUIRE(t.size() == 2);
  CHECK_FALSE(mlt::augment_step(a, t).has_value());
}

TEST_CASE("augment performs the exchange on the cyclic square") {
  // T = {(0,2),(1,0),(2,1)} is maximal of size 3 in the order-5 cyclic
  // square; the target floor is 4, and one exchange reaches it.
  const Mls a = mlt::from_latin_square(cyclic_square(5));
  const Transversal t{{{0, 2}, {1, 0}, {2, 1}}};
  REQUIRE(mlt::is_valid_transversal(a, t.cells));
  REQUIRE(mlt::is_maximal(a, t));

  const auto next = mlt::augment_step(a, t);
  REQUIRE(next.has_value());
  CHECK(next->size() == 4);
  CHECK(mlt::is_valid_transversal(a, next->cells));

  // The exchange touches at most one original cell.
  int kept = 0;
  for (const Cell& cell : t.cells)
    kept += std::find(next->cells.begin(), next->cells.end(), cell) !=
            next->cells.end();
  CHECK(kept >= t.size() - 1);
}

TEST_CASE("augment stalls where no exchange configuration exists") {
  // Two order-5 embedded instances whose seed-0 greedy run lands on a
  // maximal transversal of size 3. In the block frame of either one, the
  // only column holding two unspanned cells has its diagonal element
  // outside the support of the free block, so the single-diagonal
  // exchange has no footing and the step reports none. The exhaustive
  // fallback still reaches the floor of 4; the report owns up to it.
  for (auto [p, seed] :
       {std::pair<std::uint64_t, std::uint64_t>{2, 5010}, {11, 5039}}) {
    const Mls a = mlt::embedded_instance(5, p, seed);
    const Transversal start = mlt::greedy_maximal(a, 0);
    REQUIRE(start.size() == 3);
    REQUIRE(mlt::is_maximal(a, start));
    CHECK_FALSE(mlt::augment_step(a, start).has_value());

    const mlt::SolveReport r = mlt::two_thirds_solve(a);
    CHECK(r.best.size() == 4);
    CHECK(r.anomaly);

    // The floor itself is intact; only the constructive step misses.
    CHECK(mlt::exact_max(a, 0).best.size() == 5);
  }
}

TEST_CASE("augment returns the direct extension of a non-maximal input") {
  const Mls a = mlt::from_latin_square(cyclic_square(5));
  const Transversal t{{{0, 0}, {1, 1}}};  // symbols 1, 3; extendable
  REQUIRE(mlt::is_valid_transversal(a, t.cells));
  REQUIRE_FALSE(mlt::is_maximal(a, t));
  const auto next = mlt::augment_step(a, t);
  REQUIRE(next.has_value());
  CHECK(next->size() == 3);
  CHECK(mlt::is_valid_transversal(a, next->cells));
  // The original cells survive a direct extension.
  for (const Cell& cell : t.cells)
    CHECK(std::find(next->cells.begin(), next->cells.end(), cell) !=
          next->cells.end());
}

TEST_CASE("augment contract errors") {
  const Mls a = mlt::theorem2(3, 5);
  CHECK_THROWS_AS(mlt::augment_step(a, Transversal{{{0, 0}, {0, 2}}}),
                  mlt::ContractError);
  const Mls l3 = mlt::from_latin_square(cyclic_square(3));
  const Transversal full{{{0, 0}, {1, 1}, {2, 2}}};  // symbols 1, 3, 2
  REQUIRE(mlt::is_valid_transversal(l3, full.cells));
  CHECK_THROWS_AS(mlt::augment_step(l3, full), mlt::ContractError);
}

TEST_CASE("two_thirds_target values") {
  const std::vector<int> expected{1, 2, 2, 3, 4, 4, 5, 6, 6};
  for (int n = 1; n <= 9; ++n)
    CHECK(mlt::two_thirds_target(n) == expected[std::size_t(n - 1)]);
}

TEST_CASE("two_thirds_solve reaches the floor across small instances") {
  const std::vector<Mls> corpus{
      mlt::theorem2(3, 5),  mlt::theorem2(4, 2),  mlt::theorem2(5, 5),
      mlt::theorem2(6, 2),  mlt::theorem2(7, 5),
      mlt::from_latin_square(cyclic_square(3)),
      mlt::from_latin_square(cyclic_square(4)),
      mlt::from_latin_square(cyclic_square(6)),
      mlt::embedded_instance(5, 3, 11),
  };
  for (const Mls& a : corpus) {
    const mlt::SolveReport r = mlt::two_thirds_solve(a);
    CHECK(r.method == "augment");
    CHECK(r.best.size() >= mlt::two_thirds_target(a.degree()));
    CHECK(mlt::is_valid_transversal(a, r.best.cells));
    CHECK_FALSE(r.anomaly);
  }
}

TEST_CASE("two_thirds_solve throws on the degree-2 exclusion") {
  // Degree 2 sits below the floor machinery: the only independent partial
  // transversals have size 1 while the target is 2. The solver proves the
  // optimum and refuses instead of returning a weaker answer.
  for (const Mls& a : {mlt::from_latin_square({{1, 2}, {2, 1}}),
                       mlt::theorem2(2, 2), mlt::theorem2(2, 5)}) {
    CHECK_THROWS_AS((void)mlt::two_thirds_solve(a), mlt::TheoremViolation);
    try {
      (void)mlt::two_thirds_solve(a);
    } catch (const mlt::TheoremViolation& tv) {
      CHECK(tv.degree() == 2);
      CHECK(tv.target() == 2);
      CHECK(tv.optimum() == 1);
    }
  }
}

TEST_CASE("exact search on the exclusion grid") {
  const Mls a = mlt::theorem2(3, 5);
  const mlt::SolveReport r = mlt::exact_max(a, 0);
  CHECK(r.method == "exact");
  CHECK(r.best.size() == 2);
  CHECK(r.optimal);
  CHECK(r.nodes > 0);
  CHECK(mlt::is_valid_transversal(a, r.best.cells));
}

TEST_CASE("exact search agrees with raw enumeration") {
  std::vector<Mls> corpus{
      mlt::theorem2(1, 2),  mlt::theorem2(2, 5),  mlt::theorem2(3, 2),
      mlt::theorem2(4, 5),
      mlt::from_latin_square(cyclic_square(2)),
      mlt::from_latin_square(cyclic_square(3)),
      mlt::from_latin_square(cyclic_square(4)),
      mlt::embedded_instance(3, 2, 5),
      mlt::embedded_instance(4, 7, 9),
  };
  mlt::enumerate_latin_squares(3, [&](const mlt::LatinSquare& square) {
    corpus.push_back(mlt::from_latin_square(square));
  });
  for (const Mls& a : corpus) {
    const mlt::SolveReport r = mlt::exact_max(a, 0);
    CHECK(r.best.size() == oracle::max_transversal(a));
    CHECK(r.optimal);
  }
}

TEST_CASE("exact search reports the lexicographically least optimum") {
  // Rows ascend and lower columns are tried before the skip, so the first
  // optimum reached is the least cell sequence; raw enumeration confirms.
  const std::vector<Mls> corpus{
      mlt::theorem2(3, 5),
      mlt::theorem2(4, 2),
      mlt::from_latin_square(cyclic_square(4)),
      mlt::embedded_instance(3, 5, 2),
  };
  for (const Mls& a : corpus) {
    std::vector<Cell> expected;
    oracle::max_transversal(a, &expected);
    const mlt::SolveReport r = mlt::exact_max(a, 0);
    REQUIRE(int(expected.size()) == r.best.size());
    CHECK(r.best.cells == expected);
  }
}

TEST_CASE("exact search budget and stop controls") {
  const Mls a = mlt::theorem2(5, 5);
  SUBCASE("a tiny budget ends the search inconclusively") {
    const mlt::SolveReport r = mlt::exact_max(a, 3);
    CHECK_FALSE(r.optimal);
    CHECK(r.nodes <= 4);
    CHECK(r.budget == 3);
    CHECK(r.best.size() <= 4);
  }
  SUBCASE("stop_at halts at the requested size") {
    const mlt::SolveReport r = mlt::exact_max(a, 0, 2);
    CHECK(r.best.size() == 2);
    CHECK_FALSE(r.optimal);
  }
  SUBCASE("unbounded run proves the sharp optimum") {
    const mlt::SolveReport r = mlt::exact_max(a, 0);
    CHECK(r.best.size() == 4);
    CHECK(r.optimal);
  }
}

TEST_CASE("degree-1 instances are trivially solvable") {
  const Mls a = mlt::from_latin_square({{1}});
  CHECK(mlt::exact_max(a, 0).best.size() == 1);
  CHECK(mlt::greedy_maximal(a, 0).size() == 1);
  const mlt::SolveReport r = mlt::two_thirds_solve(a);
  CHECK(r.best.size() == 1);
  CHECK(r.optimal);
}

TEST_CASE("maximality floor check rejects non-maximal input") {
  const Mls a = mlt::from_latin_square(cyclic_square(4));
  CHECK_THROWS_AS(mlt::maximality_floor_check(a, Transversal{}),
                  mlt::ContractError);
  CHECK_THROWS_AS(
      mlt::maximality_floor_check(a, Transversal{{{0, 0}, {0, 1}}}),
      mlt::ContractError);
}

TEST_CASE("solve reports are deterministic") {
  const Mls a = mlt::embedded_instance(5, 5, 40);
  const mlt::SolveReport r1 = mlt::two_thirds_solve(a, 9);
  const mlt::SolveReport r2 = mlt::two_thirds_solve(a, 9);
  CHECK(r1.best.cells == r2.best.cells);
  CHECK(r1.nodes == r2.nodes);
  const mlt::SolveReport e1 = mlt::exact_max(a, 0);
  const mlt::SolveReport e2 = mlt::exact_max(a, 0);
  CHECK(e1.best.cells == e2.best.cells);
  CHECK(e1.nodes == e2.nodes);
}
