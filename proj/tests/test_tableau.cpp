#include "doctest.h"

#include <algorithm>
#include <random>

#include "goldie/tableau.hpp"

using namespace goldie;

namespace {

std::vector<Rational> R(std::vector<int> v) {
  return std::vector<Rational>(v.begin(), v.end());
}

}  // namespace

TEST_CASE("partitions") {
  Partition p({3, 1});
  CHECK(p.total() == 4);
  CHECK(p.transpose() == Partition({2, 1, 1}));
  CHECK(p.transpose().transpose() == p);
  CHECK_THROWS(Partition({1, 3}));
  CHECK_THROWS(Partition({2, 0}));
  CHECK(partitions_of(4).size() == 5);
  CHECK(partitions_of(6).size() == 11);
}

TEST_CASE("shift matrices") {
  ShiftMatrix s = ShiftMatrix::from_diagonals({0, 1}, {1, 0});
  CHECK(s.at(1, 3) == 1);  // s_{13} = s_{12} + s_{23}
  CHECK(s.at(3, 1) == 1);
  CHECK(s.transpose().at(3, 1) == s.at(1, 3));
  // broken additivity rejected
  CHECK_THROWS(ShiftMatrix({{0, 0, 1}, {1, 0, 0}, {1, 1, 0}}));
}

TEST_CASE("pyramid geometry and box numbering") {
  // zero shifts cannot carry unequal row lengths
  CHECK_THROWS(Pyramid({1, 2}, ShiftMatrix({{0, 0}, {0, 0}})));

  Pyramid pi({1, 2}, ShiftMatrix({{0, 0}, {1, 0}}));
  CHECK(pi.level() == 2);
  CHECK(pi.boxes() == 3);
  CHECK(pi.row_start_col(1) == 2);
  CHECK(pi.row_start_col(2) == 1);
  CHECK(pi.column_height(1) == 1);
  CHECK(pi.column_height(2) == 2);
  // boxes run down columns, leftmost first
  CHECK(pi.box_number(2, 1) == 1);
  CHECK(pi.box_number(1, 2) == 2);
  CHECK(pi.box_number(2, 2) == 3);
  CHECK(pi.box_number(1, 1) == 0);

  Pyramid lj = Pyramid::left_justified(Partition({2, 1}));
  CHECK(lj.is_left_justified());
  CHECK(lj.rows() == 2);
  CHECK(lj.row_length(1) == 1);
  CHECK(lj.row_length(2) == 2);
  CHECK(lj.partition() == Partition({2, 1}));
  CHECK(lj.column_blocks().block_sizes == std::vector<int>{2, 1});
}

TEST_CASE("three-row pyramid with interior shifts and its transpose") {
  ShiftMatrix sigma({{0, 0, 1}, {1, 0, 1}, {1, 0, 0}});
  Pyramid pi({1, 2, 3}, sigma);
  CHECK(pi.level() == 3);
  CHECK(pi.column_height(1) == 2);
  CHECK(pi.column_height(2) == 3);
  CHECK(pi.column_height(3) == 1);
  CHECK(pi.shift_matrix() == sigma);
  CHECK(!pi.is_left_justified());
  CHECK(pi.partition() == Partition({3, 2, 1}));

  // fill each box with its own number and flip the pyramid
  Tableau numbered(pi, {{3}, {1, 4}, {2, 5, 6}});
  CHECK(gamma(numbered) ==
        Weight({Rational(1), Rational(2), Rational(3), Rational(4),
                Rational(5), Rational(6)}));
  Tableau flipped = transpose_pyramid(numbered);
  CHECK(flipped.pyramid().shift_matrix() == sigma.transpose());
  CHECK(flipped.pyramid().column_height(1) == 1);
  CHECK(flipped.pyramid().column_height(2) == 3);
  CHECK(flipped.pyramid().column_height(3) == 2);
  CHECK(gamma(flipped) ==
        Weight({Rational(6), Rational(3), Rational(4), Rational(5),
                Rational(1), Rational(2)}));

  Tableau lj = left_justify(numbered);
  CHECK(lj.pyramid().is_left_justified());
  CHECK(lj.content() == numbered.content());
}

TEST_CASE("reading maps") {
  Tableau t = Tableau::from_rows_bottom_up({R({5, 7}), R({6})});
  CHECK(gamma(t) == Weight({Rational(6), Rational(5), Rational(7)}));

  Tableau u = Tableau::from_rows_bottom_up({R({1, 3}), R({2, 4})});
  CHECK(rho_read(u) ==
        Weight({Rational(2), Rational(4), Rational(1), Rational(3)}));
}

TEST_CASE("row standardization") {
  Tableau t = Tableau::from_rows_bottom_up(
      {{Rational(3, 2), Rational(1), Rational(1, 2)}});
  Tableau s = row_standardize(t);
  // the only comparable pair is (3/2, 1/2); 1 is incomparable to both and
  // keeps its position
  CHECK(s.rows()[0] ==
        std::vector<Rational>{Rational(1, 2), Rational(1), Rational(3, 2)});
  CHECK(is_row_standard(s));
  CHECK(row_standardize(s) == s);  // fixpoint
}

TEST_CASE("the swap fixpoint does not depend on the swap order") {
  std::mt19937 gen(2024);
  std::uniform_int_distribution<int> num(-4, 4);
  std::uniform_int_distribution<int> den(1, 3);
  for (int trial = 0; trial < 200; ++trial) {
    int len = 2 + static_cast<int>(gen() % 4);
    std::vector<Rational> row;
    for (int j = 0; j < len; ++j)
      row.push_back(Rational(num(gen), den(gen)));
    Tableau t = Tableau::from_rows_bottom_up({row});

    // apply out-of-order comparable swaps in random order until none remain
    std::vector<Rational> cur = row;
    while (true) {
      std::vector<std::pair<int, int>> swaps;
      for (int i = 0; i < len; ++i)
        for (int j = i + 1; j < len; ++j)
          if (z_greater(cur[i], cur[j])) swaps.push_back({i, j});
      if (swaps.empty()) break;
      auto [i, j] = swaps[gen() % swaps.size()];
      std::swap(cur[i], cur[j]);
    }
    CHECK(row_standardize(t).rows()[0] == cur);
  }
}

TEST_CASE("column predicates") {
  Tableau separated = Tableau::from_rows_bottom_up({R({1, 3}), R({2})});
  CHECK(is_column_separated(separated));
  CHECK(is_column_strict(separated));

  Tableau linked = Tableau::from_rows_bottom_up({R({1, 2}), R({3})});
  CHECK(!is_column_separated(linked));  // 3 > 2 > 1 interleaves the columns
  CHECK(columns_linked(linked.column_bottom_up(1), R({2})));
  CHECK(!columns_linked(separated.column_bottom_up(1), R({3})));

  Tableau standard = Tableau::from_rows_bottom_up({R({1, 2}), R({3})});
  CHECK(is_standard(standard));
  CHECK(!is_standard(Tableau::from_rows_bottom_up({R({2, 3}), R({1})})));
}

TEST_CASE("row equivalence and canonical form") {
  Tableau a = Tableau::from_rows_bottom_up({R({3, 1, 2}), R({5, 4})});
  Tableau b = Tableau::from_rows_bottom_up({R({1, 2, 3}), R({4, 5})});
  CHECK(row_equivalent(a, b));
  CHECK(canonical_row_form(a) == canonical_row_form(b));
  Tableau c = Tableau::from_rows_bottom_up({R({1, 2, 4}), R({3, 5})});
  CHECK(!row_equivalent(a, c));
}

namespace {

bool brute_force_exists(const Tableau& t, TableauPredicate pred) {
  auto holds = [&](const Tableau& u) {
    switch (pred) {
      case TableauPredicate::ColumnStrict: return is_column_strict(u);
      case TableauPredicate::ColumnConnected: return is_column_connected(u);
      case TableauPredicate::ColumnSeparated: return is_column_separated(u);
    }
    return false;
  };
  std::vector<std::vector<Rational>> rows = t.rows();
  for (auto& r : rows) std::sort(r.begin(), r.end());
  // odometer over per-row permutations
  std::vector<std::vector<Rational>> cur = rows;
  std::size_t i = 0;
  while (true) {
    if (holds(Tableau(t.pyramid(), cur))) return true;
    for (i = 0; i < cur.size(); ++i) {
      if (std::next_permutation(cur[i].begin(), cur[i].end())) break;
    }
    if (i == cur.size()) return false;
    for (std::size_t j = 0; j < i; ++j) cur[j] = rows[j];
  }
}

}  // namespace

TEST_CASE("row-equivalent search agrees with exhaustive enumeration") {
  std::vector<Tableau> samples = {
      Tableau::from_rows_bottom_up({R({1, 2}), R({3})}),
      Tableau::from_rows_bottom_up({R({1, 3}), R({2})}),
      Tableau::from_rows_bottom_up({R({2, 2, 3}), R({1, 2})}),
      Tableau::from_rows_bottom_up({R({1, 4, 2}), R({3, 0})}),
      Tableau::from_rows_bottom_up({R({5, 1, 3}), R({2, 4}), R({6})}),
      Tableau(Pyramid({1, 2}, ShiftMatrix({{0, 0}, {1, 0}})),
              {{Rational(2)}, {Rational(0), Rational(1)}}),
  };
  for (const auto& t : samples) {
    for (auto pred :
         {TableauPredicate::ColumnStrict, TableauPredicate::ColumnConnected,
          TableauPredicate::ColumnSeparated}) {
      auto found = find_row_equivalent(t, pred);
      CHECK(found.has_value() == brute_force_exists(t, pred));
      if (found) {
        CHECK(row_equivalent(*found, t));
        CHECK(brute_force_exists(*found, pred));
      }
    }
  }
}

TEST_CASE("column separation weight") {
  Pyramid row2 = Pyramid::left_justified(Partition({2}));
  CHECK(beta(row2) == Weight({Rational(-1), Rational(1)}));
  Pyramid hook = Pyramid::left_justified(Partition({2, 1}));
  CHECK(beta(hook) == Weight({Rational(-1), Rational(-1), Rational(2)}));
}

TEST_CASE("coset split of a tableau") {
  Tableau t = Tableau::from_rows_bottom_up(
      {{Rational(1), Rational(1, 2)}, {Rational(2)}});
  auto parts = dimred_split(t);
  REQUIRE(parts.size() == 2);
  CHECK(parts[0].boxes() + parts[1].boxes() == 3);
  for (const auto& p : parts) {
    CHECK(p.pyramid().is_left_justified());
    auto c = p.content();
    for (const auto& v : c) CHECK(z_comparable(v, c.front()));
  }
}

TEST_CASE("sliding a label onto an incompatible pyramid is rejected") {
  Weight alpha({Rational(3), Rational(1), Rational(2)});
  // Q(3,1,2) has two boxes over one; a single-row pyramid cannot carry it
  CHECK_THROWS_AS(q_pi(alpha, Pyramid::left_justified(Partition({3}))),
                  std::domain_error);
}
