#pragma once

#include <string>
#include <vector>

#include "goldie/kl.hpp"

namespace goldie {

struct VerifyResult {
  std::string suite;
  long long checks = 0;
  std::vector<std::string> failures;  // serialized counterexamples, capped

  bool passed() const { return failures.empty(); }
};

/// Value-one witness for every minimal-in-cell w, N <= n_max.
VerifyResult verify_one(KLCache& cache, int n_max = 6);

/// Coset-sum polynomial equals the column-product formula whenever the
/// recording tableau has a column-separated rearrangement; includes the
/// forced endpoints p_id = 1 and the full Vandermonde for w0.
VerifyResult verify_myg(KLCache& cache, int n_max = 5);

/// Dimension-polynomial evaluation equals the decomposition-number sum for
/// all column-strict left-justified tableaux with entries in {1..N}.
VerifyResult verify_maing(KLCache& cache, int n_max = 5);

/// The [M:L] and (L:M) matrices over S_N are exact mutual inverses.
VerifyResult verify_inverse(KLCache& cache, int n_max = 5);

/// completely_prime <=> total rank 1 for all integral weights with
/// coordinates in {1,2,3}.
VerifyResult verify_moeglin(KLCache& cache, int n_max = 5);

/// Mixed-coset pipeline: total rank equals the product of the per-factor
/// induced-module dimensions when every factor is column-separated.
/// Coordinates drawn from {0,1,2} u {1/2,3/2}.
VerifyResult verify_red(KLCache& cache, int n_max = 5);

/// Insertion suite: bijectivity onto same-shape pairs, Q(w) = P(w^-1),
/// the recording-tableau fixpoint on upper-closure samples, and the
/// rectification round trip over two pyramids per shape.
VerifyResult verify_rs(int n_max = 6, unsigned seed = 20260823);

/// Dimension polynomials constant on left cells: exhaustive at n_exhaustive,
/// sampled pairs at n_exhaustive + 1.
VerifyResult verify_cells(KLCache& cache, int n_exhaustive = 4,
                          int sample_pairs = 50, unsigned seed = 97);

/// Random solver instances (residuals, exact tail copying) plus the
/// rational round trip from column-connected tableaux.
VerifyResult verify_stup(int instances = 100, unsigned seed = 4242);

/// KL positivity/constant-term, bitwise-identical parallel build, and the
/// independent check of a non-constant S_4 polynomial.
VerifyResult verify_kl(KLCache& cache, int n_max = 5, unsigned threads = 4);

}  // namespace goldie
