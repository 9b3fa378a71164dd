#include "goldie/goldie.hpp"

#include <algorithm>
#include <sstream>
#include <stdexcept>

namespace goldie {

namespace {

std::string one_line(const Permutation& w) {
  std::ostringstream os;
  os << "[";
  for (int i = 1; i <= w.n(); ++i) {
    if (i > 1) os << ",";
    os << w(i);
  }
  os << "]";
  return os.str();
}

MultiPoly coset_sum(const KLTable& table, const Permutation& w,
                    const ParabolicShape& blocks, const MultiPoly& h) {
  const int n = w.n();
  MultiPoly out(n);
  for (const Permutation& z : max_coset_reps(blocks, n)) {
    long long c = inv_mult(table, w, z);
    if (c == 0) continue;
    out += scale(act(z.inverse(), h), Rational(c));
  }
  return out;
}

}  // namespace

MultiPoly goldie_poly_bform(const KLTable& table, const Permutation& w,
                            bool strict) {
  Permutation wm = w;
  if (!is_minimal_in_cell(w)) {
    if (strict)
      throw std::invalid_argument(
          "goldie_poly_bform: " + one_line(w) +
          " is not minimal in its left cell; minimal member is " +
          one_line(minimal_cell_rep(w)));
    wm = minimal_cell_rep(w);
  }
  Partition lambda = rs_pair(wm).shape;
  ParabolicShape blocks(lambda.transpose().parts);
  return coset_sum(table, wm, blocks, h_lambda(lambda, w.n()));
}

MultiPoly goldie_poly_pi(const KLTable& table, const Permutation& w,
                         const Pyramid& pi) {
  if (pi.boxes() != w.n())
    throw std::invalid_argument("goldie_poly_pi: box count != N");
  return coset_sum(table, w, pi.column_blocks(), h_pi(pi));
}

MultiPoly goldie_poly_product(const Tableau& a) {
  const int n = a.boxes();
  std::vector<Rational> want(n);
  for (int k = 1; k <= n; ++k) want[k - 1] = Rational(k);
  if (a.content() != want)
    throw std::invalid_argument(
        "goldie_poly_product: entries must be exactly 1..N");
  if (!is_column_separated(a))
    throw std::invalid_argument("goldie_poly_product: not column-separated");
  const Pyramid& pi = a.pyramid();
  MultiPoly out = MultiPoly::constant(n, 1);
  for (int j = 1; j <= pi.level(); ++j) {
    std::vector<std::pair<int, int>> col;  // (row, entry), top to bottom
    for (int i = 1; i <= pi.rows(); ++i)
      if (pi.has_box(i, j))
        col.emplace_back(i, static_cast<int>(numerator(a.entry(i, j))));
    for (std::size_t u = 0; u < col.size(); ++u)
      for (std::size_t v = u + 1; v < col.size(); ++v) {
        // col[u] sits above col[v]
        MultiPoly diff = MultiPoly::variable(n, col[u].second) -
                         MultiPoly::variable(n, col[v].second);
        out = out * scale(diff, Rational(1, col[v].first - col[u].first));
      }
  }
  return out;
}

GoldieReport goldie_rank(const Weight& alpha, KLCache& cache) {
  GoldieReport report{alpha, {}, Integer(1), true};
  for (CosetPart& part : coset_split(alpha).parts) {
    const int nz = part.sub_weight.n();
    Tableau q = q_of_weight(part.sub_weight);
    AntidominantConjugate conj = antidominant_conjugate(part.sub_weight);
    Permutation wmin = minimal_cell_rep(conj.d);
    const KLTable& table = cache.table(nz);
    MultiPoly poly = goldie_poly_bform(table, wmin, /*strict=*/true);
    Rational value = evaluate(poly, conj.delta);
    if (!is_integer(value) || value <= 0)
      throw InternalConsistencyError(
          "goldie_rank: factor rank " + goldie::to_string(value) +
          " is not a positive integer");
    Partition shape = q.pyramid().partition();
    bool prime = find_row_equivalent(q, TableauPredicate::ColumnConnected)
                     .has_value();
    std::optional<InducedData> induced;
    if (auto sep = find_row_equivalent(q, TableauPredicate::ColumnSeparated)) {
      Weight ga = gamma(*sep);
      Rational dimf = evaluate(h_lambda(shape, nz), ga);
      if (!is_integer(dimf) || dimf <= 0)
        throw InternalConsistencyError(
            "goldie_rank: induced-module dimension " +
            goldie::to_string(dimf) + " is not a positive integer");
      std::vector<int> heights;
      for (int j = 1; j <= sep->pyramid().level(); ++j)
        heights.push_back(sep->pyramid().column_height(j));
      induced = InducedData{*sep, std::move(heights), std::move(ga),
                            numerator(dimf)};
    }
    report.total_rank *= numerator(value);
    report.completely_prime = report.completely_prime && prime;
    report.factors.push_back(GoldieFactor{
        part.rep, std::move(part.positions), std::move(part.sub_weight),
        std::move(q), std::move(shape), std::move(wmin), std::move(poly),
        std::move(conj.delta), numerator(value), prime, std::move(induced)});
  }
  if (report.completely_prime != (report.total_rank == 1))
    throw InternalConsistencyError(
        "goldie_rank: connectedness test disagrees with rank "
        + report.total_rank.str());
  return report;
}

WitnessResult theorem_one_witness(const KLTable& table, const Permutation& w) {
  if (!is_minimal_in_cell(w))
    throw std::invalid_argument("theorem_one_witness: " + one_line(w) +
                                " is not minimal in its left cell");
  Partition lambda = rs_pair(w).shape;
  std::vector<std::vector<Rational>> rows_bottom_up;
  for (std::size_t r = 0; r < lambda.parts.size(); ++r)
    rows_bottom_up.emplace_back(lambda.parts[r],
                                Rational(static_cast<int>(r) + 1));
  Tableau c = Tableau::from_rows_bottom_up(std::move(rows_bottom_up));
  Weight alpha = act(w.inverse(), gamma(c));
  Rational value = evaluate(goldie_poly_bform(table, w), alpha);
  return {std::move(alpha), std::move(value)};
}

std::vector<Tableau> enumerate_column_strict(
    const Pyramid& pi, const std::vector<Rational>& content) {
  if (static_cast<int>(content.size()) != pi.boxes())
    throw std::invalid_argument("enumerate_column_strict: content size != N");
  std::vector<Rational> pool = content;
  std::sort(pool.begin(), pool.end());
  std::vector<std::vector<Rational>> cols(pi.level());
  std::vector<Tableau> out;

  auto emit = [&]() {
    std::vector<std::vector<Rational>> rows(pi.rows());
    for (int i = 1; i <= pi.rows(); ++i)
      rows[i - 1].resize(pi.row_length(i));
    for (int j = 1; j <= pi.level(); ++j) {
      int depth = 0;
      for (int i = pi.rows(); i >= 1; --i)
        if (pi.has_box(i, j))
          rows[i - 1][j - pi.row_start_col(i)] = cols[j - 1][depth++];
    }
    out.emplace_back(pi, std::move(rows));
  };

  auto rec = [&](auto&& self, int j, int depth) -> void {
    if (j > pi.level()) {
      emit();
      return;
    }
    if (depth == pi.column_height(j)) {
      self(self, j + 1, 0);
      return;
    }
    for (std::size_t idx = 0; idx < pool.size(); ++idx) {
      if (idx > 0 && pool[idx] == pool[idx - 1]) continue;
      Rational v = pool[idx];
      if (depth > 0 && !z_greater(v, cols[j - 1][depth - 1])) continue;
      pool.erase(pool.begin() + idx);
      cols[j - 1].push_back(v);
      self(self, j, depth + 1);
      cols[j - 1].pop_back();
      pool.insert(std::upper_bound(pool.begin(), pool.end(), v), v);
    }
  };
  rec(rec, 1, 0);
  return out;
}

Integer dimension_sum(const KLTable& table, const Tableau& a) {
  Weight ga = gamma(a);
  if (!ga.is_integral())
    throw std::domain_error("dimension_sum: entries must be integers");
  if (!is_column_strict(a))
    throw std::invalid_argument("dimension_sum: input not column-strict");
  MultiPoly h = h_pi(a.pyramid());
  Rational sum = 0;
  for (const Tableau& b : enumerate_column_strict(a.pyramid(), a.content())) {
    long long c = tableau_inv_mult(table, a, b);
    if (c == 0) continue;
    sum += Rational(c) * evaluate(h, gamma(b));
  }
  if (!is_integer(sum) || sum < 0)
    throw InternalConsistencyError("dimension_sum: value " +
                                   goldie::to_string(sum) +
                                   " is not a nonnegative integer");
  return numerator(sum);
}

}  // namespace goldie
