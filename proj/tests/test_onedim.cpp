#include "doctest.h"

#include <cmath>
#include <random>

#include "goldie/onedim.hpp"

using namespace goldie;

namespace {

// Builds the prescribed values a_i^{(r)} from chosen rows of roots.
StupInput input_from_roots(const std::vector<std::vector<Complex>>& rows) {
  StupInput in;
  int prev = 0;
  for (const auto& row : rows) {
    in.row_lengths.push_back(static_cast<int>(row.size()));
    std::vector<Complex> e(row.size() + 1, Complex(0));
    e[0] = Complex(1);
    std::size_t used = 0;
    for (const Complex& v : row) {
      ++used;
      for (std::size_t r = used; r >= 1; --r) e[r] += v * e[r - 1];
    }
    in.a.push_back(std::vector<Complex>(
        e.begin() + 1, e.begin() + 1 + (static_cast<int>(row.size()) - prev)));
    prev = static_cast<int>(row.size());
  }
  return in;
}

std::vector<Complex> sorted(std::vector<Complex> v) {
  std::sort(v.begin(), v.end(), [](const Complex& a, const Complex& b) {
    if (a.real() != b.real()) return a.real() < b.real();
    return a.imag() < b.imag();
  });
  return v;
}

}  // namespace

TEST_CASE("input validation") {
  StupInput in;
  CHECK_THROWS_AS(in.validate(), std::invalid_argument);
  in.row_lengths = {2, 1};
  in.a = {{Complex(1), Complex(1)}, {}};
  CHECK_THROWS_AS(in.validate(), std::invalid_argument);  // decreasing rows
  in.row_lengths = {1, 2};
  in.a = {{Complex(1)}, {Complex(1), Complex(1)}};
  CHECK_THROWS_AS(in.validate(), std::invalid_argument);  // row 2 needs 1 value
}

TEST_CASE("known roots are recovered row by row") {
  std::vector<std::vector<Complex>> rows = {
      {Complex(3)},
      {Complex(-1), Complex(3), Complex(2)},
      {Complex(0.5), Complex(-1), Complex(3), Complex(2)},
  };
  // each row extends the previous one, as the solver assumes
  StupSolution sol = stup_solve(input_from_roots(rows));
  REQUIRE(sol.roots.size() == 3);
  for (int i = 0; i < 3; ++i) {
    auto want = sorted(rows[i]);
    auto got = sorted(sol.roots[i]);
    REQUIRE(got.size() == want.size());
    for (std::size_t k = 0; k < want.size(); ++k)
      CHECK(std::abs(got[k] - want[k]) < 1e-8);
  }
  CHECK(sol.max_residual <= 1e-9);

  // the previous row's values are carried forward exactly, not re-solved
  for (const Complex& v : sol.roots[0]) {
    CHECK(std::count(sol.roots[1].begin(), sol.roots[1].end(), v) >= 1);
    CHECK(std::count(sol.roots[2].begin(), sol.roots[2].end(), v) >= 1);
  }
}

TEST_CASE("random instances stay within tolerance") {
  std::mt19937 gen(12345);
  std::uniform_real_distribution<double> dist(-3.0, 3.0);
  for (int trial = 0; trial < 25; ++trial) {
    std::vector<std::vector<Complex>> rows;
    std::vector<Complex> cur;
    int n = 2 + static_cast<int>(gen() % 3);
    for (int i = 0; i < n; ++i) {
      int grow = 1 + static_cast<int>(gen() % 2);
      for (int g = 0; g < grow; ++g) cur.push_back(Complex(dist(gen), dist(gen)));
      rows.push_back(cur);
    }
    StupSolution sol = stup_solve(input_from_roots(rows));
    CHECK(sol.max_residual <= 1e-9);
  }
}

TEST_CASE("tableau emission") {
  // target tableau on the two-row pyramid with the bottom row sticking out
  // to the left: top entry 2 over bottom entries 0, 1
  StupInput in;
  in.row_lengths = {1, 2};
  in.a = {{Complex(3)}, {Complex(5)}};  // row 1 root 3; row 2 adds root 2
  StupSolution sol = stup_solve(in);
  TableauEmission em =
      connected_tableau_of(sol, ShiftMatrix({{0, 0}, {1, 0}}));
  REQUIRE(em.tableau.has_value());
  CHECK(is_column_connected(*em.tableau));
  CHECK(em.tableau->entry(1, 2) == Rational(2));  // 3 - 1
  std::vector<Rational> bottom = em.tableau->rows()[1];
  std::sort(bottom.begin(), bottom.end());
  CHECK(bottom == std::vector<Rational>{Rational(0), Rational(1)});

  // complex-conjugate roots cannot be placed in a tableau
  StupInput cx;
  cx.row_lengths = {2};
  cx.a = {{Complex(0), Complex(1)}};  // u^2 + 1, roots +-i
  TableauEmission none = connected_tableau_of(
      stup_solve(cx), ShiftMatrix(std::vector<std::vector<int>>{{0}}));
  CHECK(!none.tableau.has_value());
  CHECK(!none.message.empty());
}
