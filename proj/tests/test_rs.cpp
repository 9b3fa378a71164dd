#include "doctest.h"

#include <map>
#include <set>

#include "goldie/rs.hpp"

using namespace goldie;

namespace {

Weight W(std::vector<int> c) {
  std::vector<Rational> r(c.begin(), c.end());
  return Weight(std::move(r));
}

// Hook length formula, computed from scratch.
long long syt_count(const Partition& lambda) {
  Partition mu = lambda.transpose();
  long long num = 1;
  for (int k = 1; k <= lambda.total(); ++k) num *= k;
  long long den = 1;
  for (std::size_t i = 0; i < lambda.parts.size(); ++i)
    for (int j = 1; j <= lambda.parts[i]; ++j)
      den *= lambda.parts[i] - j + mu.parts[j - 1] - static_cast<int>(i);
  return num / den;
}

}  // namespace

TEST_CASE("single insertions") {
  Tableau one = schensted_insert(Rational(5));
  CHECK(one.boxes() == 1);
  CHECK(one.box_entry(1) == Rational(5));

  // no bumping across incomparable or equal entries
  Tableau t = schensted_insert(schensted_insert(Rational(1)), Rational(1));
  CHECK(t.rows() == std::vector<std::vector<Rational>>{{1, 1}});
  Tableau u =
      schensted_insert(schensted_insert(Rational(1, 2)), Rational(1));
  CHECK(u.rows() ==
        std::vector<std::vector<Rational>>{{Rational(1, 2), Rational(1)}});
}

TEST_CASE("insertion tableau of a weight") {
  Tableau q = q_of_weight(W({3, 1, 2}));
  CHECK(q == Tableau::from_rows_bottom_up({{1, 2}, {3}}));
  CHECK(is_standard(q));
}

TEST_CASE("pair correspondence is a shape-preserving bijection") {
  for (int n = 2; n <= 5; ++n) {
    std::set<std::pair<std::vector<std::vector<Rational>>,
                       std::vector<std::vector<Rational>>>>
        images;
    long long count = 0;
    for (const auto& w : all_permutations(n)) {
      RSPair pq = rs_pair(w);
      CHECK(is_standard(pq.p));
      CHECK(is_standard(pq.q));
      CHECK(pq.p.pyramid().partition() == pq.shape);
      CHECK(pq.q.pyramid().partition() == pq.shape);
      // recording tableau of w is the insertion tableau of w^-1
      RSPair inv = rs_pair(w.inverse());
      CHECK(pq.q == inv.p);
      CHECK(pq.p == inv.q);
      images.insert({pq.p.rows(), pq.q.rows()});
      ++count;
    }
    CHECK(static_cast<long long>(images.size()) == count);  // injective
  }
}

TEST_CASE("standard tableau enumeration matches hook lengths") {
  for (int n = 1; n <= 6; ++n) {
    long long square_sum = 0;
    for (const auto& lambda : partitions_of(n)) {
      auto tabs = standard_tableaux(lambda);
      long long f = syt_count(lambda);
      CHECK(static_cast<long long>(tabs.size()) == f);
      std::set<std::vector<std::vector<Rational>>> distinct;
      for (const auto& t : tabs) {
        CHECK(is_standard(t));
        CHECK(t.pyramid().partition() == lambda);
        distinct.insert(t.rows());
      }
      CHECK(distinct.size() == tabs.size());
      square_sum += f * f;
    }
    long long fact = 1;
    for (int k = 1; k <= n; ++k) fact *= k;
    CHECK(square_sum == fact);
  }
}

TEST_CASE("left cells are the recording-tableau fibers") {
  auto all = all_permutations(4);
  for (const auto& x : all) {
    RSPair px = rs_pair(x);
    for (const auto& y : all) {
      CHECK(same_left_cell(x, y) == (px.q == rs_pair(y).q));
    }
  }
}

TEST_CASE("column-superstandard tableaux and minimal cell members") {
  Tableau c = column_superstandard(Partition({2, 1}));
  CHECK(c == Tableau::from_rows_bottom_up({{1, 3}, {2}}));
  CHECK(is_standard(c));

  for (int n = 2; n <= 5; ++n) {
    std::map<std::vector<std::vector<Rational>>, int> minimal_per_cell;
    for (const auto& w : all_permutations(n)) {
      Permutation m = minimal_cell_rep(w);
      CHECK(same_left_cell(m, w));
      CHECK(is_minimal_in_cell(m));
      CHECK(minimal_cell_rep(m) == m);
      if (is_minimal_in_cell(w)) {
        CHECK(m == w);
        minimal_per_cell[rs_pair(w).q.rows()]++;
      }
    }
    // exactly one minimal member in every cell
    std::set<std::vector<std::vector<Rational>>> cells;
    for (const auto& w : all_permutations(n)) cells.insert(rs_pair(w).q.rows());
    CHECK(minimal_per_cell.size() == cells.size());
    for (const auto& [q, k] : minimal_per_cell) CHECK(k == 1);
  }
}
