#pragma once

#include <vector>

#include "goldie/permutation.hpp"
#include "goldie/tableau.hpp"
#include "goldie/weight.hpp"

namespace goldie {

/// Insertion and recording tableaux of a permutation, equal shape, both
/// standard and left-justified.
struct RSPair {
  Tableau p;
  Tableau q;
  Partition shape;
};

/// Single-box tableau holding value (insertion into the empty state).
Tableau schensted_insert(const Rational& value);
/// Inserts value into the bottom row; bumped entries cascade upward. The
/// bumping rule picks the leftmost entry b with b - value a positive integer.
Tableau schensted_insert(const Tableau& state, const Rational& value);

/// Insertion tableau of the coordinate sequence a_1..a_N; the Duflo label
/// Q(alpha).
Tableau q_of_weight(const Weight& alpha);

RSPair rs_pair(const Permutation& w);

/// Q(x) = Q(y) entrywise.
bool same_left_cell(const Permutation& x, const Permutation& y);

/// Left-justified standard tableau of shape lambda with 1..N in order up
/// columns, leftmost column first.
Tableau column_superstandard(const Partition& lambda);

/// P(w) is column-superstandard.
bool is_minimal_in_cell(const Permutation& w);
/// The unique minimal member of w's left cell, by reverse bumping from the
/// column-superstandard insertion tableau.
Permutation minimal_cell_rep(const Permutation& w);

/// All standard tableaux of shape lambda, deterministic order. Guarded at
/// N <= 10.
std::vector<Tableau> standard_tableaux(const Partition& lambda);

}  // namespace goldie
