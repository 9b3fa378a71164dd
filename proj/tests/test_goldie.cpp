#include "doctest.h"

#include "goldie/goldie.hpp"

using namespace goldie;

namespace {

Weight W(std::vector<Rational> c) { return Weight(std::move(c)); }

}  // namespace

TEST_CASE("coset-sum polynomial in rank two") {
  KLTable table = KLTable::build(2);
  MultiPoly p = goldie_poly_bform(table, Permutation({2, 1}));
  CHECK(p.to_string() == "x2 - x1");
  CHECK(goldie_poly_bform(table, Permutation::identity(2)) ==
        MultiPoly::constant(2, Rational(1)));
}

TEST_CASE("non-minimal members are substituted or rejected") {
  KLTable table = KLTable::build(3);
  Permutation w({3, 1, 2});
  REQUIRE(!is_minimal_in_cell(w));
  CHECK(goldie_poly_bform(table, w) ==
        goldie_poly_bform(table, minimal_cell_rep(w)));
  CHECK_THROWS_AS(goldie_poly_bform(table, w, /*strict=*/true),
                  std::invalid_argument);
}

TEST_CASE("column product formula on extreme shapes") {
  // single column: the full discriminant of the block
  Tableau col = Tableau::from_rows_bottom_up({{1}, {2}});
  MultiPoly p = goldie_poly_product(col);
  KLTable table = KLTable::build(2);
  CHECK(p == goldie_poly_bform(table, longest_element(2)));

  // single row: empty product
  Tableau row = Tableau::from_rows_bottom_up({{1, 2, 3}});
  CHECK(goldie_poly_product(row) == MultiPoly::constant(3, Rational(1)));
}

TEST_CASE("value-one witness") {
  KLTable table = KLTable::build(4);
  for (const auto& w : all_permutations(4)) {
    if (!is_minimal_in_cell(w)) continue;
    WitnessResult witness = theorem_one_witness(table, w);
    CHECK(witness.value == Rational(1));
    CHECK(evaluate(goldie_poly_bform(table, w), witness.alpha) == Rational(1));
  }
}

TEST_CASE("rank pipeline on frozen inputs") {
  KLCache cache(1);

  GoldieReport r1 = goldie_rank(W({3, 1}), cache);
  CHECK(r1.total_rank == 2);
  REQUIRE(r1.factors.size() == 1);
  CHECK(r1.factors[0].rank == 2);

  GoldieReport r2 = goldie_rank(W({1, 2, 3}), cache);
  CHECK(r2.total_rank == 1);
  CHECK(r2.completely_prime);

  GoldieReport r3 =
      goldie_rank(W({Rational(1, 2), 2, Rational(3, 2), 1}), cache);
  CHECK(r3.total_rank == 1);
  CHECK(r3.completely_prime);
  REQUIRE(r3.factors.size() == 2);
  CHECK(r3.factors[0].coset_rep == Rational(0));
  CHECK(r3.factors[0].positions == std::vector<int>{2, 4});
  CHECK(r3.factors[1].coset_rep == Rational(1, 2));
  CHECK(r3.factors[1].positions == std::vector<int>{1, 3});
  for (const auto& f : r3.factors) {
    CHECK(f.factor_completely_prime);
    CHECK(evaluate(f.poly, f.delta) == Rational(f.rank));
  }
}

TEST_CASE("complete primality needs every factor column-connected") {
  KLCache cache(1);
  // antidominant integral weight: one-dimensional quotient, rank one
  GoldieReport flat = goldie_rank(W({2, 2, 2}), cache);
  CHECK(flat.total_rank == 1);
  CHECK(flat.completely_prime);

  // (2,1,3): recording tableau is a hook whose rearrangements stay linked
  GoldieReport hook = goldie_rank(W({2, 1, 3}), cache);
  CHECK(hook.factors.size() == 1);
  CHECK(hook.completely_prime == hook.factors[0].factor_completely_prime);
  CHECK((hook.total_rank == 1) == hook.completely_prime);
}

TEST_CASE("column-strict enumeration") {
  Pyramid pi = Pyramid::left_justified(Partition({2, 1}));
  std::vector<Rational> content = {1, 2, 3};
  auto tabs = enumerate_column_strict(pi, content);
  CHECK(!tabs.empty());
  for (const auto& t : tabs) {
    CHECK(is_column_strict(t));
    CHECK(t.content() == content);
  }
  // entries 1..3 on a hook: the column pair must rise, giving 3 fillings
  CHECK(tabs.size() == 3);
  CHECK_THROWS(enumerate_column_strict(pi, {1, 2}));
}

TEST_CASE("dimension sum demands column-strict integral input") {
  KLTable table = KLTable::build(3);
  Tableau good = Tableau::from_rows_bottom_up({{1, 2}, {3}});
  Integer d = dimension_sum(table, good);
  CHECK(d > 0);
  Tableau bad = Tableau::from_rows_bottom_up({{1, 2}, {1}});
  CHECK_THROWS(dimension_sum(table, bad));
}
