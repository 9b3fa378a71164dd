#include "goldie/onedim.hpp"

#include <algorithm>
#include <cmath>
#include <sstream>
#include <stdexcept>

#include <Eigen/Eigenvalues>

namespace goldie {

namespace {

// Coefficients c_1..c_k of prod (u + x_i) = u^k + c_1 u^{k-1} + ... + c_k,
// i.e. c_r = e_r(x).
std::vector<Complex> elementary_symmetric(const std::vector<Complex>& x) {
  std::vector<Complex> e(x.size() + 1, Complex(0));
  e[0] = Complex(1);
  std::size_t used = 0;
  for (const Complex& v : x) {
    ++used;
    for (std::size_t r = used; r >= 1; --r) e[r] += v * e[r - 1];
  }
  return e;  // e[r] = e_r
}

// Roots of u^k + c[0] u^{k-1} + ... + c[k-1], one Newton step each,
// sorted by (real, imag).
std::vector<Complex> monic_roots(const std::vector<Complex>& c) {
  const int k = static_cast<int>(c.size());
  std::vector<Complex> roots;
  if (k == 0) return roots;
  if (k == 1) {
    roots.push_back(-c[0]);
    return roots;
  }
  Eigen::MatrixXcd comp = Eigen::MatrixXcd::Zero(k, k);
  for (int i = 1; i < k; ++i) comp(i, i - 1) = 1.0;
  for (int i = 0; i < k; ++i) comp(i, k - 1) = -c[k - 1 - i];
  Eigen::ComplexEigenSolver<Eigen::MatrixXcd> solver(comp, false);
  auto eval_poly = [&](Complex u, Complex& f, Complex& df) {
    f = Complex(1);
    df = Complex(0);
    for (int r = 0; r < k; ++r) {
      df = df * u + f;
      f = f * u + c[r];
    }
  };
  for (int i = 0; i < k; ++i) {
    Complex u = solver.eigenvalues()(i);
    Complex f, df;
    eval_poly(u, f, df);
    if (std::abs(df) > 1e-14) u -= f / df;
    roots.push_back(u);
  }
  std::sort(roots.begin(), roots.end(), [](const Complex& a, const Complex& b) {
    if (a.real() != b.real()) return a.real() < b.real();
    return a.imag() < b.imag();
  });
  return roots;
}

std::optional<Rational> round_to_rational(double x, double tol) {
  // continued fraction expansion with a small denominator bound
  const long long kMaxDen = 1 << 20;
  long long p0 = 1, q0 = 0, p1 = static_cast<long long>(std::floor(x)), q1 = 1;
  double frac = x - std::floor(x);
  for (int iter = 0; iter < 64 && q1 <= kMaxDen; ++iter) {
    if (std::abs(x - static_cast<double>(p1) / static_cast<double>(q1)) <= tol)
      return Rational(Integer(p1), Integer(q1));
    if (frac < 1e-15) break;
    double inv = 1.0 / frac;
    double a = std::floor(inv);
    frac = inv - a;
    long long p2 = static_cast<long long>(a) * p1 + p0;
    long long q2 = static_cast<long long>(a) * q1 + q0;
    p0 = p1;
    q0 = q1;
    p1 = p2;
    q1 = q2;
  }
  if (q1 <= kMaxDen &&
      std::abs(x - static_cast<double>(p1) / static_cast<double>(q1)) <= tol)
    return Rational(Integer(p1), Integer(q1));
  return std::nullopt;
}

}  // namespace

void StupInput::validate() const {
  const int n = static_cast<int>(row_lengths.size());
  if (n < 1) throw std::invalid_argument("StupInput: no rows");
  int prev = 0;
  if (static_cast<int>(a.size()) != n)
    throw std::invalid_argument("StupInput: value rows != n");
  for (int i = 0; i < n; ++i) {
    if (row_lengths[i] < prev)
      throw std::invalid_argument("StupInput: row lengths must be nondecreasing");
    if (static_cast<int>(a[i].size()) != row_lengths[i] - prev)
      throw std::invalid_argument(
          "StupInput: row " + std::to_string(i + 1) + " needs p_i - p_{i-1} = " +
          std::to_string(row_lengths[i] - prev) + " values");
    prev = row_lengths[i];
  }
}

StupSolution stup_solve(const StupInput& input, double tol) {
  input.validate();
  const int n = static_cast<int>(input.row_lengths.size());
  StupSolution sol;
  std::vector<Complex> prev_row;  // a_{i-1, 1..p_{i-1}}
  for (int i = 0; i < n; ++i) {
    const int k = input.row_lengths[i] - static_cast<int>(prev_row.size());
    // b^{(r)} = a^{(r)} - sum_{s<r} b^{(s)} e_{r-s}(previous row)
    std::vector<Complex> eprev = elementary_symmetric(prev_row);
    std::vector<Complex> b(k + 1, Complex(0));
    b[0] = Complex(1);
    for (int r = 1; r <= k; ++r) {
      Complex acc = input.a[i][r - 1];
      for (int s = 0; s < r; ++s) {
        if (r - s <= static_cast<int>(prev_row.size()))
          acc -= b[s] * eprev[r - s];
      }
      b[r] = acc;
    }
    std::vector<Complex> coeffs(b.begin() + 1, b.end());
    std::vector<Complex> fresh = monic_roots(coeffs);
    for (Complex& u : fresh) u = -u;  // factors are (u + a_{i,j})
    std::vector<Complex> row = fresh;
    row.insert(row.end(), prev_row.begin(), prev_row.end());  // exact copy
    // relative residuals against the prescribed e_r of the full row
    // (absolute residuals punish rows whose e_r are large in magnitude)
    std::vector<Complex> efull = elementary_symmetric(row);
    double res = 0.0;
    for (int r = 1; r <= k; ++r) {
      double scale = std::max(1.0, std::abs(input.a[i][r - 1]));
      res = std::max(res, std::abs(efull[r] - input.a[i][r - 1]) / scale);
    }
    sol.residuals.push_back(res);
    sol.max_residual = std::max(sol.max_residual, res);
    sol.roots.push_back(row);
    prev_row = std::move(row);
  }
  if (sol.max_residual > tol) {
    std::ostringstream os;
    os << "stup_solve: residual " << sol.max_residual << " exceeds tolerance "
       << tol;
    throw NumericFailure(os.str());
  }
  return sol;
}

TableauEmission connected_tableau_of(const StupSolution& solution,
                                     const ShiftMatrix& sigma, double tol) {
  std::vector<int> p;
  for (const auto& row : solution.roots)
    p.push_back(static_cast<int>(row.size()));
  Pyramid pi(p, sigma);
  std::vector<std::vector<Rational>> rows(p.size());
  for (std::size_t i = 0; i < solution.roots.size(); ++i) {
    for (const Complex& v : solution.roots[i]) {
      if (std::abs(v.imag()) > tol)
        return {std::nullopt,
                "entry with non-real value cannot be placed in a tableau"};
      auto r = round_to_rational(v.real(), tol);
      if (!r)
        return {std::nullopt,
                "entry does not round to a rational within tolerance"};
      rows[i].push_back(*r - Rational(static_cast<int>(i) + 1));
    }
  }
  Tableau raw(pi, std::move(rows));
  auto connected =
      find_row_equivalent(raw, TableauPredicate::ColumnConnected);
  if (!connected)
    return {std::nullopt,
            "row multisets admit no column-connected arrangement"};
  return {std::move(connected), ""};
}

}  // namespace goldie
