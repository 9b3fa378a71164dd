#pragma once

#include <cstdint>
#include <map>
#include <optional>
#include <string>
#include <vector>

#include "goldie/permutation.hpp"
#include "goldie/rational.hpp"
#include "goldie/tableau.hpp"
#include "goldie/weight.hpp"

namespace goldie {

/// Integer polynomial in t, coefficients by ascending degree, no trailing
/// zeros. The zero polynomial has an empty coefficient list.
struct UniPoly {
  std::vector<long long> coeffs;

  UniPoly() = default;
  explicit UniPoly(std::vector<long long> c) : coeffs(std::move(c)) {
    normalize();
  }
  void normalize() {
    while (!coeffs.empty() && coeffs.back() == 0) coeffs.pop_back();
  }
  bool is_zero() const { return coeffs.empty(); }
  int degree() const { return static_cast<int>(coeffs.size()) - 1; }
  long long coeff(int d) const {
    return (d >= 0 && d < static_cast<int>(coeffs.size())) ? coeffs[d] : 0;
  }
  long long at_one() const {
    long long s = 0;
    for (long long c : coeffs) s += c;
    return s;
  }
  std::string to_string() const;

  bool operator==(const UniPoly& o) const { return coeffs == o.coeffs; }
  bool operator!=(const UniPoly& o) const { return coeffs != o.coeffs; }
};

/// Full table of Kazhdan-Lusztig polynomials P_{x,y} for S_N. Polynomials
/// live in a dedup pool; the (x,y) grid stores pool indices keyed by lex
/// rank. Immutable once built; safe for concurrent readers.
class KLTable {
 public:
  /// Builds the table by the defining recursion; with threads > 1 the
  /// same-length strata are computed in parallel and merged in a fixed
  /// order, so the result is bitwise identical to the sequential build.
  static KLTable build(int n, unsigned threads = 1);

  int n() const { return n_; }
  std::int64_t group_order() const { return order_; }
  const UniPoly& poly(const Permutation& x, const Permutation& y) const;
  const UniPoly& poly_by_rank(std::int64_t xr, std::int64_t yr) const {
    return pool_[grid_[yr * order_ + xr]];
  }

  /// Pool and grid, exposed for the bitwise determinism check.
  const std::vector<UniPoly>& pool() const { return pool_; }
  const std::vector<std::int32_t>& grid() const { return grid_; }

  /// Writes "GOLDIE-KL v1 N=<n>" then one JSON line per nonzero polynomial;
  /// atomic via temp file + rename.
  void save(const std::string& path) const;
  /// Returns nullopt on missing file, bad header, or wrong N.
  static std::optional<KLTable> load(const std::string& path, int n);

 private:
  KLTable() = default;
  friend struct KLBuilder;

  int n_ = 0;
  std::int64_t order_ = 0;
  std::vector<UniPoly> pool_;        // pool_[0] = 0, pool_[1] = 1
  std::vector<std::int32_t> grid_;   // [y * order + x]
};

/// Lazily built per-N tables with optional on-disk persistence (one file
/// kl-n<N>.jsonl per N under dir). Not thread-safe while building.
class KLCache {
 public:
  explicit KLCache(unsigned threads = 1,
                   std::optional<std::string> dir = std::nullopt,
                   int n_guard = 7)
      : threads_(threads), dir_(std::move(dir)), n_guard_(n_guard) {}

  int n_guard() const { return n_guard_; }
  /// Throws std::domain_error beyond the guard. When a cache file exists
  /// with a bad header or wrong N it is rebuilt and overwritten.
  const KLTable& table(int n);

 private:
  unsigned threads_;
  std::optional<std::string> dir_;
  int n_guard_;
  std::map<int, KLTable> tables_;
};

const UniPoly& kl_polynomial(const KLTable& table, const Permutation& x,
                             const Permutation& y);

/// [M(x):L(y)] = P_{x w0, y w0}(1).
long long mult(const KLTable& table, const Permutation& x,
               const Permutation& y);

/// (L(x):M(y)) = (-1)^{l(x)+l(y)} P_{y,x}(1).
long long inv_mult(const KLTable& table, const Permutation& x,
                   const Permutation& y);

/// Singular-block inverse decomposition number: sum of
/// inv_mult(d(alpha), d(beta) z) over z in the stabilizer of the common
/// anti-dominant conjugate. Throws std::domain_error when the conjugates
/// differ or the weights are not integral.
long long singular_inv_mult(const KLTable& table, const Weight& alpha,
                            const Weight& beta);

/// (L(A):M(B)) for column-strict tableaux on one pyramid; zero on content
/// mismatch.
long long tableau_inv_mult(const KLTable& table, const Tableau& a,
                           const Tableau& b);

}  // namespace goldie
