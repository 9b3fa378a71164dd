#include "goldie/tableau.hpp"

#include <algorithm>
#include <map>
#include <numeric>
#include <stdexcept>

namespace goldie {

Partition::Partition(std::vector<int> p) : parts(std::move(p)) {
  if (parts.empty()) throw std::invalid_argument("Partition: no parts");
  for (std::size_t i = 0; i < parts.size(); ++i) {
    if (parts[i] < 1) throw std::invalid_argument("Partition: nonpositive part");
    if (i > 0 && parts[i] > parts[i - 1])
      throw std::invalid_argument("Partition: parts must be weakly decreasing");
  }
}

int Partition::total() const {
  return std::accumulate(parts.begin(), parts.end(), 0);
}

Partition Partition::transpose() const {
  std::vector<int> t(parts[0], 0);
  for (int p : parts)
    for (int j = 0; j < p; ++j) ++t[j];
  return Partition(std::move(t));
}

std::vector<Partition> partitions_of(int n) {
  std::vector<Partition> out;
  std::vector<int> cur;
  auto rec = [&](auto&& self, int rest, int maxPart) -> void {
    if (rest == 0) {
      out.emplace_back(cur);
      return;
    }
    for (int p = std::min(rest, maxPart); p >= 1; --p) {
      cur.push_back(p);
      self(self, rest - p, p);
      cur.pop_back();
    }
  };
  rec(rec, n, n);
  return out;
}

ShiftMatrix::ShiftMatrix(std::vector<std::vector<int>> e) : entries(std::move(e)) {
  const int n = static_cast<int>(entries.size());
  if (n < 1) throw std::invalid_argument("ShiftMatrix: empty");
  for (const auto& row : entries)
    if (static_cast<int>(row.size()) != n)
      throw std::invalid_argument("ShiftMatrix: not square");
  for (int i = 0; i < n; ++i) {
    if (entries[i][i] != 0)
      throw std::invalid_argument("ShiftMatrix: nonzero diagonal");
    for (int j = 0; j < n; ++j)
      if (entries[i][j] < 0)
        throw std::invalid_argument("ShiftMatrix: negative entry");
  }
  for (int i = 0; i < n; ++i) {
    for (int j = i + 2; j < n; ++j) {
      int upper = 0, lower = 0;
      for (int k = i; k < j; ++k) {
        upper += entries[k][k + 1];
        lower += entries[k + 1][k];
      }
      if (entries[i][j] != upper || entries[j][i] != lower)
        throw std::invalid_argument("ShiftMatrix: off-diagonal sums inconsistent");
    }
  }
}

ShiftMatrix ShiftMatrix::from_diagonals(const std::vector<int>& upper,
                                        const std::vector<int>& lower) {
  if (upper.size() != lower.size())
    throw std::invalid_argument("ShiftMatrix: diagonal length mismatch");
  const int n = static_cast<int>(upper.size()) + 1;
  std::vector<std::vector<int>> e(n, std::vector<int>(n, 0));
  for (int i = 0; i < n; ++i) {
    for (int j = i + 1; j < n; ++j) {
      int u = 0, l = 0;
      for (int k = i; k < j; ++k) {
        u += upper[k];
        l += lower[k];
      }
      e[i][j] = u;
      e[j][i] = l;
    }
  }
  return ShiftMatrix(std::move(e));
}

ShiftMatrix ShiftMatrix::transpose() const {
  const int n = this->n();
  std::vector<std::vector<int>> e(n, std::vector<int>(n));
  for (int i = 0; i < n; ++i)
    for (int j = 0; j < n; ++j) e[i][j] = entries[j][i];
  return ShiftMatrix(std::move(e));
}

Pyramid::Pyramid(std::vector<int> row_lengths, const ShiftMatrix& sigma)
    : row_lengths_(std::move(row_lengths)) {
  const int n = static_cast<int>(row_lengths_.size());
  if (n < 1) throw std::invalid_argument("Pyramid: no rows");
  if (sigma.n() != n) throw std::invalid_argument("Pyramid: shift matrix size");
  for (int i = 0; i < n; ++i) {
    if (row_lengths_[i] < 1)
      throw std::invalid_argument("Pyramid: nonpositive row length");
    if (i > 0 && row_lengths_[i] < row_lengths_[i - 1])
      throw std::invalid_argument("Pyramid: row lengths must be nondecreasing");
  }
  level_ = row_lengths_[n - 1];
  row_start_.resize(n);
  for (int i = 1; i <= n; ++i) {
    int start = 1 + sigma.at(n, i);
    int end = level_ - sigma.at(i, n);
    if (end - start + 1 != row_lengths_[i - 1])
      throw std::invalid_argument("Pyramid: shifts incompatible with row lengths");
    row_start_[i - 1] = start;
  }
  finalize();
}

Pyramid Pyramid::left_justified(const Partition& lambda) {
  Pyramid out;
  out.row_lengths_.assign(lambda.parts.rbegin(), lambda.parts.rend());
  out.row_start_.assign(out.row_lengths_.size(), 1);
  out.level_ = out.row_lengths_.back();
  out.finalize();
  return out;
}

void Pyramid::finalize() {
  const int n = rows();
  col_height_.assign(level_, 0);
  box_row_.clear();
  box_col_.clear();
  for (int j = 1; j <= level_; ++j) {
    for (int i = 1; i <= n; ++i) {
      if (has_box(i, j)) {
        ++col_height_[j - 1];
        box_row_.push_back(i);
        box_col_.push_back(j);
      }
    }
  }
  n_boxes_ = static_cast<int>(box_row_.size());
}

bool Pyramid::has_box(int i, int j) const {
  if (i < 1 || i > rows()) return false;
  return j >= row_start_[i - 1] && j < row_start_[i - 1] + row_lengths_[i - 1];
}

int Pyramid::box_number(int i, int j) const {
  for (int k = 1; k <= n_boxes_; ++k)
    if (box_row_[k - 1] == i && box_col_[k - 1] == j) return k;
  return 0;
}

bool Pyramid::is_left_justified() const {
  return std::all_of(row_start_.begin(), row_start_.end(),
                     [](int s) { return s == 1; });
}

Partition Pyramid::partition() const {
  std::vector<int> parts(row_lengths_.rbegin(), row_lengths_.rend());
  return Partition(std::move(parts));
}

ParabolicShape Pyramid::column_blocks() const {
  return ParabolicShape(col_height_);
}

ShiftMatrix Pyramid::shift_matrix() const {
  const int n = rows();
  // a_i = left shift of row i, b_i = right shift; s_{i,j} = b_i - b_j above
  // the diagonal and a_j - a_i below it.
  std::vector<int> a(n), b(n);
  for (int i = 0; i < n; ++i) {
    a[i] = row_start_[i] - 1;
    b[i] = level_ - (row_start_[i] + row_lengths_[i] - 1);
  }
  std::vector<std::vector<int>> e(n, std::vector<int>(n, 0));
  for (int i = 0; i < n; ++i)
    for (int j = i + 1; j < n; ++j) {
      e[i][j] = b[i] - b[j];
      e[j][i] = a[i] - a[j];
    }
  return ShiftMatrix(std::move(e));
}

Tableau::Tableau(Pyramid pyramid, std::vector<std::vector<Rational>> rows)
    : pyramid_(std::move(pyramid)), rows_(std::move(rows)) {
  if (static_cast<int>(rows_.size()) != pyramid_.rows())
    throw std::invalid_argument("Tableau: wrong number of rows");
  for (int i = 1; i <= pyramid_.rows(); ++i)
    if (static_cast<int>(rows_[i - 1].size()) != pyramid_.row_length(i))
      throw std::invalid_argument("Tableau: row length mismatch");
}

Tableau Tableau::from_rows_bottom_up(std::vector<std::vector<Rational>> rows) {
  std::vector<int> parts;
  parts.reserve(rows.size());
  for (const auto& r : rows) parts.push_back(static_cast<int>(r.size()));
  Pyramid pi = Pyramid::left_justified(Partition(parts));
  std::reverse(rows.begin(), rows.end());
  return Tableau(std::move(pi), std::move(rows));
}

const Rational& Tableau::entry(int i, int j) const {
  if (!pyramid_.has_box(i, j))
    throw std::out_of_range("Tableau::entry: no box there");
  return rows_[i - 1][j - pyramid_.row_start_col(i)];
}

const Rational& Tableau::box_entry(int k) const {
  return entry(pyramid_.box_row(k), pyramid_.box_col(k));
}

std::vector<Rational> Tableau::column_bottom_up(int j) const {
  std::vector<Rational> out;
  for (int i = pyramid_.rows(); i >= 1; --i)
    if (pyramid_.has_box(i, j)) out.push_back(entry(i, j));
  return out;
}

std::vector<Rational> Tableau::content() const {
  std::vector<Rational> out;
  for (const auto& r : rows_) out.insert(out.end(), r.begin(), r.end());
  std::sort(out.begin(), out.end());
  return out;
}

Weight gamma(const Tableau& a) {
  std::vector<Rational> c(a.boxes());
  for (int k = 1; k <= a.boxes(); ++k) c[k - 1] = a.box_entry(k);
  return Weight(std::move(c));
}

namespace {

// Sorting key grouping Z-comparable entries: (coset representative, value).
bool canonical_entry_less(const Rational& x, const Rational& y) {
  Rational fx = fractional_part(x), fy = fractional_part(y);
  if (fx != fy) return fx < fy;
  return x < y;
}

}  // namespace

Tableau row_standardize(const Tableau& a) {
  // Swapping an out-of-order comparable pair permutes entries within one
  // coset class and leaves each class's set of positions fixed, so the
  // fixpoint puts each class's values in increasing order on its positions.
  std::vector<std::vector<Rational>> rows = a.rows();
  for (auto& row : rows) {
    std::map<Rational, std::vector<std::size_t>> class_positions;
    for (std::size_t j = 0; j < row.size(); ++j)
      class_positions[fractional_part(row[j])].push_back(j);
    for (const auto& [rep, positions] : class_positions) {
      std::vector<Rational> vals;
      vals.reserve(positions.size());
      for (std::size_t j : positions) vals.push_back(row[j]);
      std::sort(vals.begin(), vals.end());
      for (std::size_t t = 0; t < positions.size(); ++t)
        row[positions[t]] = vals[t];
    }
  }
  return Tableau(a.pyramid(), std::move(rows));
}

Weight rho_read(const Tableau& a) {
  Tableau s = row_standardize(a);
  std::vector<Rational> c;
  c.reserve(a.boxes());
  for (const auto& row : s.rows()) c.insert(c.end(), row.begin(), row.end());
  return Weight(std::move(c));
}

bool is_column_strict(const Tableau& a) {
  for (int j = 1; j <= a.pyramid().level(); ++j) {
    auto col = a.column_bottom_up(j);
    for (std::size_t r = 1; r < col.size(); ++r)
      if (!z_greater(col[r], col[r - 1])) return false;
  }
  return true;
}

bool is_column_connected(const Tableau& a) {
  for (int j = 1; j <= a.pyramid().level(); ++j) {
    auto col = a.column_bottom_up(j);
    for (std::size_t r = 1; r < col.size(); ++r)
      if (col[r] != col[r - 1] + 1) return false;
  }
  return true;
}

bool is_row_standard(const Tableau& a) {
  for (const auto& row : a.rows())
    for (std::size_t i = 0; i < row.size(); ++i)
      for (std::size_t j = i + 1; j < row.size(); ++j)
        if (z_greater(row[i], row[j])) return false;
  return true;
}

bool is_standard(const Tableau& a) {
  if (!a.pyramid().is_left_justified()) return false;
  const int n = a.boxes();
  std::vector<Rational> want(n);
  for (int k = 1; k <= n; ++k) want[k - 1] = Rational(k);
  if (a.content() != want) return false;
  for (const auto& row : a.rows())
    for (std::size_t j = 1; j < row.size(); ++j)
      if (!(row[j - 1] < row[j])) return false;
  return is_column_strict(a);
}

bool columns_linked(const std::vector<Rational>& c1,
                    const std::vector<Rational>& c2) {
  const std::vector<Rational>* big = &c1;
  const std::vector<Rational>* small = &c2;
  if (big->size() < small->size()) std::swap(big, small);
  auto contains = [](const std::vector<Rational>& v, const Rational& x) {
    return std::find(v.begin(), v.end(), x) != v.end();
  };
  std::vector<Rational> I, J;  // set differences big \ small, small \ big
  for (const auto& x : *big)
    if (!contains(*small, x)) I.push_back(x);
  for (const auto& x : *small)
    if (!contains(*big, x)) J.push_back(x);
  if (big->size() > small->size()) {
    for (const auto& i : I)
      for (const auto& ip : I)
        for (const auto& j : J)
          if (z_greater(i, j) && z_greater(j, ip)) return true;
    return false;
  }
  for (const auto& i : I)
    for (const auto& ip : I)
      for (const auto& j : J)
        for (const auto& jp : J) {
          if (z_greater(i, j) && z_greater(j, ip) && z_greater(ip, jp))
            return true;
          if (z_greater(j, i) && z_greater(i, jp) && z_greater(jp, ip))
            return true;
        }
  return false;
}

bool is_column_separated(const Tableau& a) {
  if (!is_column_strict(a)) return false;
  const int l = a.pyramid().level();
  std::vector<std::vector<Rational>> cols(l);
  for (int j = 1; j <= l; ++j) cols[j - 1] = a.column_bottom_up(j);
  for (int j = 0; j < l; ++j)
    for (int k = j + 1; k < l; ++k)
      if (columns_linked(cols[j], cols[k])) return false;
  return true;
}

bool row_equivalent(const Tableau& a, const Tableau& b) {
  if (a.pyramid() != b.pyramid()) return false;
  for (int i = 0; i < a.pyramid().rows(); ++i) {
    std::vector<Rational> ra = a.rows()[i], rb = b.rows()[i];
    std::sort(ra.begin(), ra.end());
    std::sort(rb.begin(), rb.end());
    if (ra != rb) return false;
  }
  return true;
}

Tableau canonical_row_form(const Tableau& a) {
  std::vector<std::vector<Rational>> rows = a.rows();
  for (auto& row : rows) std::sort(row.begin(), row.end(), canonical_entry_less);
  return Tableau(a.pyramid(), std::move(rows));
}

namespace {

struct ColumnSearch {
  const Pyramid* pi;
  TableauPredicate pred;
  // remaining entries per row, kept sorted
  std::vector<std::vector<Rational>> pool;
  // assigned entries per column, bottom to top
  std::vector<std::vector<Rational>> cols;

  bool take(int row, const Rational& v) {
    auto& p = pool[row - 1];
    auto it = std::find(p.begin(), p.end(), v);
    if (it == p.end()) return false;
    p.erase(it);
    return true;
  }
  void put_back(int row, const Rational& v) {
    auto& p = pool[row - 1];
    p.insert(std::upper_bound(p.begin(), p.end(), v), v);
  }

  bool column_ok_so_far(int j) const {
    if (pred != TableauPredicate::ColumnSeparated) return true;
    for (int k = 1; k < j; ++k)
      if (columns_linked(cols[k - 1], cols[j - 1])) return false;
    return true;
  }

  bool fill_column(int j, int depth) {
    const int h = pi->column_height(j);
    if (depth == h) {
      if (!column_ok_so_far(j)) return false;
      return fill_from(j + 1);
    }
    // depth-th box from the bottom of column j
    int row = 0;
    int seen = 0;
    for (int i = pi->rows(); i >= 1; --i) {
      if (pi->has_box(i, j) && seen++ == depth) {
        row = i;
        break;
      }
    }
    if (pred == TableauPredicate::ColumnConnected && depth > 0) {
      Rational v = cols[j - 1][depth - 1] + 1;
      if (!take(row, v)) return false;
      cols[j - 1].push_back(v);
      if (fill_column(j, depth + 1)) return true;
      cols[j - 1].pop_back();
      put_back(row, v);
      return false;
    }
    // distinct remaining values in ascending order
    std::vector<Rational> candidates;
    for (const auto& v : pool[row - 1])
      if (candidates.empty() || candidates.back() != v) candidates.push_back(v);
    for (const auto& v : candidates) {
      if (depth > 0 && !z_greater(v, cols[j - 1][depth - 1])) continue;
      take(row, v);
      cols[j - 1].push_back(v);
      if (fill_column(j, depth + 1)) return true;
      cols[j - 1].pop_back();
      put_back(row, v);
    }
    return false;
  }

  bool fill_from(int j) {
    if (j > pi->level()) return true;
    return fill_column(j, 0);
  }
};

}  // namespace

std::optional<Tableau> find_row_equivalent(const Tableau& a,
                                           TableauPredicate predicate) {
  const Pyramid& pi = a.pyramid();
  ColumnSearch search;
  search.pi = &pi;
  search.pred = predicate;
  search.pool = a.rows();
  for (auto& p : search.pool) std::sort(p.begin(), p.end());
  search.cols.assign(pi.level(), {});
  if (!search.fill_from(1)) return std::nullopt;
  std::vector<std::vector<Rational>> rows(pi.rows());
  for (int j = 1; j <= pi.level(); ++j) {
    const auto& col = search.cols[j - 1];
    int depth = 0;
    for (int i = pi.rows(); i >= 1; --i)
      if (pi.has_box(i, j)) {
        rows[i - 1].resize(pi.row_length(i));
        rows[i - 1][j - pi.row_start_col(i)] = col[depth++];
      }
  }
  return Tableau(pi, std::move(rows));
}

Tableau left_justify(const Tableau& a) {
  return Tableau(Pyramid::left_justified(a.pyramid().partition()), a.rows());
}

Tableau transpose_pyramid(const Tableau& a) {
  std::vector<int> lengths;
  for (int i = 1; i <= a.pyramid().rows(); ++i)
    lengths.push_back(a.pyramid().row_length(i));
  Pyramid pit(lengths, a.pyramid().shift_matrix().transpose());
  std::vector<std::vector<Rational>> rows = a.rows();
  for (auto& row : rows) std::reverse(row.begin(), row.end());
  return Tableau(std::move(pit), std::move(rows));
}

Weight beta(const Pyramid& pi) {
  const int l = pi.level();
  std::vector<Integer> prefix(l + 1, 0);
  for (int j = 1; j <= l; ++j)
    prefix[j] = prefix[j - 1] + pi.column_height(j);
  std::vector<Rational> c(pi.boxes());
  for (int k = 1; k <= pi.boxes(); ++k) {
    int col = pi.box_col(k);
    Integer left = prefix[col - 1];
    Integer right = prefix[l] - prefix[col];
    c[k - 1] = Rational(left - right);
  }
  return Weight(std::move(c));
}

std::vector<Tableau> dimred_split(const Tableau& a) {
  const int l = a.pyramid().level();
  std::map<Rational, std::vector<int>> groups;  // coset rep -> column indices
  for (int j = 1; j <= l; ++j) {
    auto col = a.column_bottom_up(j);
    if (col.empty()) continue;
    groups[fractional_part(col.front())].push_back(j);
  }
  std::vector<Tableau> out;
  for (auto& [rep, col_indices] : groups) {
    std::stable_sort(col_indices.begin(), col_indices.end(), [&](int x, int y) {
      return a.pyramid().column_height(x) > a.pyramid().column_height(y);
    });
    std::vector<std::vector<Rational>> cols;
    cols.reserve(col_indices.size());
    for (int j : col_indices) cols.push_back(a.column_bottom_up(j));
    const int height = static_cast<int>(cols.front().size());
    std::vector<std::vector<Rational>> rows_bottom_up;
    for (int r = 0; r < height; ++r) {
      std::vector<Rational> row;
      for (const auto& col : cols)
        if (r < static_cast<int>(col.size())) row.push_back(col[r]);
      rows_bottom_up.push_back(std::move(row));
    }
    out.push_back(Tableau::from_rows_bottom_up(std::move(rows_bottom_up)));
  }
  return out;
}

}  // namespace goldie
