#include "doctest.h"

#include "goldie/multipoly.hpp"
#include "goldie/tableau.hpp"

using namespace goldie;

TEST_CASE("construction and text form") {
  MultiPoly zero(3);
  CHECK(zero.is_zero());
  CHECK(zero.to_string() == "0");

  MultiPoly x1 = MultiPoly::variable(3, 1);
  MultiPoly x2 = MultiPoly::variable(3, 2);
  MultiPoly x3 = MultiPoly::variable(3, 3);
  MultiPoly p = scale(x1 * x1 * x3, Rational(1, 2)) - scale(x2, Rational(2));
  CHECK(p.to_string() == "1/2*x1^2*x3 - 2*x2");
  CHECK((x1 - x2).to_string() == "-x2 + x1");
  CHECK(MultiPoly::constant(3, Rational(5, 3)).to_string() == "5/3");
}

TEST_CASE("ring laws and cancellation") {
  MultiPoly x1 = MultiPoly::variable(2, 1);
  MultiPoly x2 = MultiPoly::variable(2, 2);
  CHECK((x1 + x2) * (x1 - x2) == x1 * x1 - x2 * x2);
  CHECK((x1 - x1).is_zero());
  CHECK(scale(x1, Rational(0)).is_zero());
}

TEST_CASE("evaluation and variable substitution") {
  MultiPoly x1 = MultiPoly::variable(3, 1);
  MultiPoly x3 = MultiPoly::variable(3, 3);
  MultiPoly p = x1 * x3 - MultiPoly::constant(3, Rational(1));
  Weight a({Rational(2), Rational(0), Rational(5)});
  CHECK(evaluate(p, a) == Rational(9));

  // x_i -> x_{w(i)}
  Permutation w({2, 3, 1});
  CHECK(act(w, x1) == MultiPoly::variable(3, 2));
  // substitution then evaluation equals evaluation at the pulled-back point
  CHECK(evaluate(act(w, p), act(w, a)) == evaluate(p, a));
}

TEST_CASE("block discriminant polynomials") {
  MultiPoly h = h_lambda(Partition({1, 1}), 2);
  CHECK(h == MultiPoly::variable(2, 1) - MultiPoly::variable(2, 2));
  CHECK(evaluate(h, Weight({Rational(1), Rational(3)})) == Rational(-2));

  // column version on a left-justified pyramid agrees with the block version
  for (const auto& lambda : partitions_of(4)) {
    CHECK(h_pi(Pyramid::left_justified(lambda)) == h_lambda(lambda, 4));
  }

  // anti-invariant under block transpositions
  MultiPoly g = h_lambda(Partition({2, 1}), 3);
  CHECK(act(Permutation({2, 1, 3}), g) == scale(g, Rational(-1)));
  // a single row has no column pairs
  CHECK(h_lambda(Partition({3}), 3) == MultiPoly::constant(3, Rational(1)));
}
