#pragma once

#include <map>
#include <string>
#include <vector>

#include "goldie/permutation.hpp"
#include "goldie/rational.hpp"
#include "goldie/tableau.hpp"
#include "goldie/weight.hpp"

namespace goldie {

/// Sparse exact polynomial in x_1..x_N. Exponent vectors are dense length-N
/// keys; zero coefficients are never stored.
class MultiPoly {
 public:
  explicit MultiPoly(int n);  // zero polynomial
  static MultiPoly constant(int n, const Rational& c);
  static MultiPoly variable(int n, int i);  // x_i, 1-based

  int n() const { return n_; }
  bool is_zero() const { return terms_.empty(); }
  const std::map<std::vector<int>, Rational>& terms() const { return terms_; }

  MultiPoly& operator+=(const MultiPoly& o);
  MultiPoly& operator-=(const MultiPoly& o);
  friend MultiPoly operator+(MultiPoly a, const MultiPoly& b) { return a += b; }
  friend MultiPoly operator-(MultiPoly a, const MultiPoly& b) { return a -= b; }
  friend MultiPoly operator*(const MultiPoly& a, const MultiPoly& b);

  bool operator==(const MultiPoly& o) const {
    return n_ == o.n_ && terms_ == o.terms_;
  }
  bool operator!=(const MultiPoly& o) const { return !(*this == o); }

  /// Stable text form: terms by total degree descending, then exponent
  /// vector lex ascending, e.g. "1/2*x1^2*x3 - 2*x2".
  std::string to_string() const;

 private:
  int n_;
  std::map<std::vector<int>, Rational> terms_;

  void add_term(const std::vector<int>& expo, const Rational& c);
  friend MultiPoly scale(const MultiPoly& p, const Rational& c);
  friend MultiPoly act(const Permutation& w, const MultiPoly& p);
  friend Rational evaluate(const MultiPoly& p, const Weight& alpha);
};

MultiPoly scale(const MultiPoly& p, const Rational& c);
Rational evaluate(const MultiPoly& p, const Weight& alpha);
/// Variable substitution x_i -> x_{w(i)}.
MultiPoly act(const Permutation& w, const MultiPoly& p);

/// Product of (x_i-x_j)/(j-i) over transpositions (i j) inside the
/// consecutive blocks of sizes lambda'_1, lambda'_2, ...
MultiPoly h_lambda(const Partition& lambda, int n);

/// Product of (x_i-x_j)/(j-i) over box-number pairs i < j sharing a column.
MultiPoly h_pi(const Pyramid& pi);

}  // namespace goldie
