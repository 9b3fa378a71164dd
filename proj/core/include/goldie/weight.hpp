#pragma once

#include <vector>

#include "goldie/permutation.hpp"
#include "goldie/rational.hpp"

namespace goldie {

/// Point of t* in coordinates: coords[i-1] = x_i(alpha). Exact rationals only.
struct Weight {
  std::vector<Rational> coords;

  Weight() = default;
  explicit Weight(std::vector<Rational> c) : coords(std::move(c)) {}

  int n() const { return static_cast<int>(coords.size()); }
  const Rational& operator[](int i) const { return coords[i - 1]; }  // 1-based
  Rational& operator[](int i) { return coords[i - 1]; }

  bool operator==(const Weight& o) const { return coords == o.coords; }
  bool operator!=(const Weight& o) const { return coords != o.coords; }
  bool operator<(const Weight& o) const { return coords < o.coords; }

  bool is_integral() const;
  /// All coordinate pairs Z-comparable (single coset of C mod Z).
  bool single_coset() const;
};

/// rho = (-1, -2, ..., -N).
Weight rho(int n);

/// beta with beta_{w(i)} = alpha_i.
Weight act(const Permutation& w, const Weight& alpha);

struct AntidominantConjugate {
  Weight delta;    // nondecreasing coordinates
  Permutation d;   // minimal length with act(d, delta) = alpha
};

/// Requires all coordinates pairwise Z-comparable; throws std::domain_error
/// otherwise (split cosets first).
AntidominantConjugate antidominant_conjugate(const Weight& alpha);

/// Stabilizer W_delta of a nondecreasing weight, as consecutive equal runs.
ParabolicShape stabilizer_shape(const Weight& delta);

/// alpha lies in the upper closure C^_w, i.e. d(alpha) = w.
bool upper_closure_contains(const Permutation& w, const Weight& alpha);

struct CosetPart {
  Rational rep;                // coset representative in [0,1)
  std::vector<int> positions;  // ascending, 1-based
  Weight sub_weight;           // all-integer coordinates
};

struct CosetSplit {
  std::vector<CosetPart> parts;  // ordered by ascending representative
};

CosetSplit coset_split(const Weight& alpha);

/// Inverse of coset_split: add each part's representative back at its
/// recorded positions.
Weight coset_assemble(const CosetSplit& split);

}  // namespace goldie
