#pragma once

#include <optional>
#include <vector>

#include "goldie/kl.hpp"
#include "goldie/multipoly.hpp"
#include "goldie/permutation.hpp"
#include "goldie/rational.hpp"
#include "goldie/rs.hpp"
#include "goldie/tableau.hpp"
#include "goldie/weight.hpp"

namespace goldie {

/// Raised when an exact invariant fails (e.g. a rank evaluates to a
/// non-integer); never a user-input problem.
struct InternalConsistencyError : std::logic_error {
  using std::logic_error::logic_error;
};

/// Induction data: the ideal is induced from a parabolic determined by the
/// column heights of a column-separated rearrangement.
struct InducedData {
  Tableau rearrangement;   // column-separated, row-equivalent to Q
  std::vector<int> column_heights;
  Weight gamma_a;
  Integer dim_f;           // h_lambda evaluated at gamma_a
};

struct GoldieFactor {
  Rational coset_rep;
  std::vector<int> positions;
  Weight sub_weight;       // integral
  Tableau q;               // insertion tableau of the sub-weight
  Partition shape;
  Permutation w_min;       // minimal member of the left cell
  MultiPoly poly;          // Goldie rank polynomial of the cell
  Weight delta;            // anti-dominant conjugate of the sub-weight
  Integer rank;
  bool factor_completely_prime;  // column-connected rearrangement exists
  std::optional<InducedData> induced;
};

struct GoldieReport {
  Weight input;
  std::vector<GoldieFactor> factors;
  Integer total_rank;      // product over factors
  bool completely_prime;
};

/// Coset-representative sum Sum_z (L(w):M(z)) z^{-1}(h_lambda) over the
/// maximal-length representatives of W^lambda \ W, lambda = shape of Q(w).
/// Non-minimal w: substituted by its minimal cell member, or rejected when
/// strict.
MultiPoly goldie_poly_bform(const KLTable& table, const Permutation& w,
                            bool strict = false);

/// Pyramid variant: Sum_z (L(w):M(z)) z^{-1}(h_pi) over maximal-length
/// W^pi \ W representatives.
MultiPoly goldie_poly_pi(const KLTable& table, const Permutation& w,
                         const Pyramid& pi);

/// Product over same-column entry pairs (i above j) of (x_i - x_j) divided
/// by the row distance. Requires a column-separated tableau with entries
/// exactly 1..N.
MultiPoly goldie_poly_product(const Tableau& a);

GoldieReport goldie_rank(const Weight& alpha, KLCache& cache);

struct WitnessResult {
  Weight alpha;
  Rational value;
};

/// The evaluation point where the Goldie rank polynomial of a minimal cell
/// member takes value one: C has all r's in the r-th row from the bottom.
WitnessResult theorem_one_witness(const KLTable& table, const Permutation& w);

/// All column-strict tableaux on pi with the given content (sorted
/// multiset), deterministic order.
std::vector<Tableau> enumerate_column_strict(const Pyramid& pi,
                                             const std::vector<Rational>& content);

/// Sum over same-content column-strict B of (L(A):M(B)) h_pi(gamma(B));
/// zero unless A is semi-standard. Integer entries required.
Integer dimension_sum(const KLTable& table, const Tableau& a);

}  // namespace goldie
