#include "doctest.h"

#include <filesystem>
#include <fstream>
#include <map>
#include <set>

#include <unistd.h>

#include "goldie/kl.hpp"

using namespace goldie;

namespace {

struct TempDir {
  std::filesystem::path path;
  TempDir() {
    path = std::filesystem::temp_directory_path() /
           ("goldie-test-" + std::to_string(::getpid()) + "-" +
            std::to_string(counter()++));
    std::filesystem::create_directories(path);
  }
  ~TempDir() { std::filesystem::remove_all(path); }
  static int& counter() {
    static int c = 0;
    return c;
  }
};

}  // namespace

TEST_CASE("polynomial container") {
  UniPoly p({1, 0, 2, 0});
  CHECK(p.coeffs == std::vector<long long>{1, 0, 2});
  CHECK(p.degree() == 2);
  CHECK(p.coeff(1) == 0);
  CHECK(p.coeff(5) == 0);
  CHECK(p.at_one() == 3);
  CHECK(UniPoly().is_zero());
}

TEST_CASE("table structure through S_4") {
  for (int n = 2; n <= 4; ++n) {
    KLTable table = KLTable::build(n);
    auto all = all_permutations(n);
    Permutation w0 = longest_element(n);
    for (const auto& x : all) {
      for (const auto& y : all) {
        const UniPoly& p = table.poly(x, y);
        if (!bruhat_leq(x, y)) {
          CHECK(p.is_zero());
          continue;
        }
        CHECK(p.coeff(0) == 1);
        if (x == y) CHECK(p == UniPoly({1}));
        if (x != y) CHECK(2 * p.degree() < y.length() - x.length());
        for (long long c : p.coeffs) CHECK(c > 0);
        // inversion and conjugation symmetries
        CHECK(p == table.poly(x.inverse(), y.inverse()));
        CHECK(p == table.poly(compose(compose(w0, x), w0),
                              compose(compose(w0, y), w0)));
      }
    }
  }
  // S_3 is entirely trivial; S_4 is not
  KLTable t3 = KLTable::build(3);
  for (const auto& x : all_permutations(3))
    for (const auto& y : all_permutations(3))
      CHECK(t3.poly(x, y).degree() <= 0);
  KLTable t4 = KLTable::build(4);
  int nontrivial = 0;
  for (const auto& x : all_permutations(4))
    for (const auto& y : all_permutations(4))
      if (t4.poly(x, y) == UniPoly({1, 1})) ++nontrivial;
  CHECK(nontrivial > 0);
}

TEST_CASE("parallel build is bitwise identical") {
  KLTable seq = KLTable::build(4, 1);
  KLTable par = KLTable::build(4, 4);
  CHECK(seq.pool().size() == par.pool().size());
  for (std::size_t i = 0; i < seq.pool().size(); ++i)
    CHECK(seq.pool()[i] == par.pool()[i]);
  CHECK(seq.grid() == par.grid());
}

TEST_CASE("persistence round trip") {
  TempDir dir;
  std::string file = (dir.path / "kl-n4.jsonl").string();
  KLTable table = KLTable::build(4);
  table.save(file);

  auto loaded = KLTable::load(file, 4);
  REQUIRE(loaded.has_value());
  CHECK(loaded->grid() == table.grid());
  for (std::size_t i = 0; i < table.pool().size(); ++i)
    CHECK(loaded->pool()[i] == table.pool()[i]);

  CHECK(!KLTable::load(file, 5).has_value());  // wrong N
  CHECK(!KLTable::load((dir.path / "absent.jsonl").string(), 4).has_value());

  std::ofstream(file) << "not a table\n";
  CHECK(!KLTable::load(file, 4).has_value());

  // the cache rebuilds over a corrupted file
  KLCache cache(1, dir.path.string());
  const KLTable& rebuilt = cache.table(4);
  CHECK(rebuilt.poly(Permutation::identity(4), longest_element(4)) ==
        UniPoly({1}));
  auto reloaded = KLTable::load(file, 4);
  CHECK(reloaded.has_value());
}

TEST_CASE("cache size guard") {
  KLCache cache(1, std::nullopt, 5);
  CHECK_THROWS_AS(cache.table(6), std::domain_error);
  CHECK(cache.table(3).n() == 3);
}

TEST_CASE("decomposition matrices over a regular block invert each other") {
  KLTable table = KLTable::build(3);
  auto all = all_permutations(3);
  const int m = static_cast<int>(all.size());
  for (int i = 0; i < m; ++i) {
    for (int j = 0; j < m; ++j) {
      long long s = 0;
      for (int k = 0; k < m; ++k)
        s += inv_mult(table, all[i], all[k]) * mult(table, all[k], all[j]);
      CHECK(s == (i == j ? 1 : 0));
    }
  }
}

namespace {

// Distinct points of the orbit of delta, ascending.
std::vector<Weight> orbit_of(const Weight& delta) {
  std::set<Weight> orbit;
  for (const auto& w : all_permutations(delta.n()))
    orbit.insert(act(w, delta));
  return std::vector<Weight>(orbit.begin(), orbit.end());
}

// Independent oracle: on a singular block the (L:M) matrix must invert the
// [M:L] matrix taken at the minimal-length conjugators.
void check_singular_inverse(const Weight& delta) {
  KLTable table = KLTable::build(delta.n());
  std::vector<Weight> reps = orbit_of(delta);
  const int m = static_cast<int>(reps.size());
  std::vector<std::vector<long long>> a(m, std::vector<long long>(m));
  std::vector<std::vector<long long>> b(m, std::vector<long long>(m));
  for (int i = 0; i < m; ++i) {
    Permutation di = antidominant_conjugate(reps[i]).d;
    for (int j = 0; j < m; ++j) {
      a[i][j] = mult(table, di, antidominant_conjugate(reps[j]).d);
      b[i][j] = singular_inv_mult(table, reps[i], reps[j]);
    }
  }
  for (int i = 0; i < m; ++i) {
    for (int j = 0; j < m; ++j) {
      long long s = 0;
      for (int k = 0; k < m; ++k) s += b[i][k] * a[k][j];
      CHECK(s == (i == j ? 1 : 0));
    }
  }
}

}  // namespace

TEST_CASE("singular block inverse decomposition numbers") {
  check_singular_inverse(Weight({Rational(1), Rational(1), Rational(2)}));
  check_singular_inverse(
      Weight({Rational(1), Rational(1), Rational(2), Rational(2)}));

  KLTable table = KLTable::build(3);
  CHECK_THROWS_AS(
      singular_inv_mult(table, Weight({Rational(1), Rational(1), Rational(2)}),
                        Weight({Rational(1), Rational(2), Rational(3)})),
      std::domain_error);
  CHECK_THROWS_AS(
      singular_inv_mult(table,
                        Weight({Rational(1, 2), Rational(1, 2), Rational(1)}),
                        Weight({Rational(1, 2), Rational(1, 2), Rational(1)})),
      std::domain_error);
}

TEST_CASE("tableau decomposition numbers vanish on content mismatch") {
  KLTable table = KLTable::build(3);
  Tableau a = Tableau::from_rows_bottom_up({{1, 2}, {3}});
  Tableau b = Tableau::from_rows_bottom_up({{1, 2}, {4}});
  CHECK(tableau_inv_mult(table, a, b) == 0);
  CHECK(tableau_inv_mult(table, a, a) == 1);
}
