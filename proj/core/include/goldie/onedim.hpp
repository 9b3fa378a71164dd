#pragma once

#include <complex>
#include <optional>
#include <string>
#include <vector>

#include "goldie/tableau.hpp"

namespace goldie {

/// Raised when residuals stay above tolerance after refinement.
struct NumericFailure : std::runtime_error {
  using std::runtime_error::runtime_error;
};

using Complex = std::complex<double>;

/// Highest-weight data for the one-dimensional-module solver: row lengths
/// p_1 <= ... <= p_n and the l = p_n prescribed elementary-symmetric values
/// a_i^{(r)} for 1 <= r <= p_i - p_{i-1}.
struct StupInput {
  std::vector<int> row_lengths;
  std::vector<std::vector<Complex>> a;  // a[i-1][r-1]

  void validate() const;  // throws std::invalid_argument
};

struct StupSolution {
  std::vector<std::vector<Complex>> roots;  // roots[i-1] = a_{i,1..p_i}
  std::vector<double> residuals;            // per row, max |e_r - a_i^{(r)}|
  double max_residual = 0.0;
};

/// Row-by-row triangular solve for the b_i^{(r)} followed by root extraction
/// of u^k + b^(1) u^{k-1} + ... + b^(k). Tail entries are copied exactly
/// from the previous row; roots are canonicalized by (real, imag).
StupSolution stup_solve(const StupInput& input, double tol = 1e-9);

struct TableauEmission {
  std::optional<Tableau> tableau;
  std::string message;  // reason when emission is declined
};

/// Builds the column-connected tableau with row i holding a_{i,1}-i, ...,
/// a_{i,p_i}-i on the pyramid of sigma. Declines (without error) when the
/// numeric entries do not round to rationals within tol or no
/// column-connected arrangement exists.
TableauEmission connected_tableau_of(const StupSolution& solution,
                                     const ShiftMatrix& sigma,
                                     double tol = 1e-9);

}  // namespace goldie
