#include "goldie/rs.hpp"

#include <algorithm>
#include <stdexcept>

namespace goldie {

namespace {

using Rows = std::vector<std::vector<Rational>>;  // bottom row first

Rows to_rows_bottom_up(const Tableau& t) {
  Rows rows(t.rows().rbegin(), t.rows().rend());
  return rows;
}

// Inserts v into the bottom row, cascading upward. Reports where the new box
// appeared (bottom-up row index, column index).
void insert_value(Rows& rows, Rational v, int& out_row, int& out_col) {
  for (std::size_t r = 0;; ++r) {
    if (r == rows.size()) {
      rows.push_back({std::move(v)});
      out_row = static_cast<int>(r);
      out_col = 0;
      return;
    }
    auto& row = rows[r];
    std::size_t idx = row.size();
    for (std::size_t j = 0; j < row.size(); ++j) {
      if (z_greater(row[j], v)) {
        idx = j;
        break;
      }
    }
    if (idx == row.size()) {
      row.push_back(std::move(v));
      out_row = static_cast<int>(r);
      out_col = static_cast<int>(row.size()) - 1;
      return;
    }
    std::swap(row[idx], v);  // bump upward
  }
}

}  // namespace

Tableau schensted_insert(const Rational& value) {
  return Tableau::from_rows_bottom_up({{value}});
}

Tableau schensted_insert(const Tableau& state, const Rational& value) {
  Rows rows = to_rows_bottom_up(state);
  int r, c;
  insert_value(rows, value, r, c);
  return Tableau::from_rows_bottom_up(std::move(rows));
}

Tableau q_of_weight(const Weight& alpha) {
  if (alpha.n() < 1) throw std::invalid_argument("q_of_weight: empty weight");
  Rows rows;
  int r, c;
  for (int i = 1; i <= alpha.n(); ++i) insert_value(rows, alpha[i], r, c);
  return Tableau::from_rows_bottom_up(std::move(rows));
}

RSPair rs_pair(const Permutation& w) {
  Rows prows, qrows;
  for (int i = 1; i <= w.n(); ++i) {
    int r, c;
    insert_value(prows, Rational(w(i)), r, c);
    if (r == static_cast<int>(qrows.size())) qrows.emplace_back();
    qrows[r].resize(c + 1);
    qrows[r][c] = Rational(i);
  }
  Tableau p = Tableau::from_rows_bottom_up(std::move(prows));
  Tableau q = Tableau::from_rows_bottom_up(std::move(qrows));
  Partition shape = p.pyramid().partition();
  return {std::move(p), std::move(q), std::move(shape)};
}

bool same_left_cell(const Permutation& x, const Permutation& y) {
  if (x.n() != y.n())
    throw std::invalid_argument("same_left_cell: mismatched N");
  return rs_pair(x).q == rs_pair(y).q;
}

Tableau column_superstandard(const Partition& lambda) {
  Partition conj = lambda.transpose();
  Rows rows(conj.parts[0]);
  int next = 1;
  for (int j = 0; j < lambda.parts[0]; ++j) {
    int height = conj.parts[j];
    for (int r = 0; r < height; ++r) rows[r].push_back(Rational(next++));
  }
  return Tableau::from_rows_bottom_up(std::move(rows));
}

bool is_minimal_in_cell(const Permutation& w) {
  RSPair pq = rs_pair(w);
  return pq.p == column_superstandard(pq.shape);
}

Permutation minimal_cell_rep(const Permutation& w) {
  RSPair pq = rs_pair(w);
  Rows prows = to_rows_bottom_up(column_superstandard(pq.shape));
  Rows qrows = to_rows_bottom_up(pq.q);
  const int n = w.n();
  std::vector<int> images(n);
  for (int i = n; i >= 1; --i) {
    // the box labelled i in Q is at the end of its row
    int r = -1;
    for (std::size_t rr = 0; rr < qrows.size(); ++rr) {
      if (!qrows[rr].empty() && qrows[rr].back() == Rational(i)) {
        r = static_cast<int>(rr);
        break;
      }
    }
    if (r < 0) throw std::logic_error("minimal_cell_rep: recording tableau corrupt");
    qrows[r].pop_back();
    Rational v = prows[r].back();
    prows[r].pop_back();
    for (int rr = r - 1; rr >= 0; --rr) {
      // reverse bump: rightmost entry smaller than v in the partial order
      auto& row = prows[rr];
      int idx = -1;
      for (int j = static_cast<int>(row.size()) - 1; j >= 0; --j) {
        if (z_greater(v, row[j])) {
          idx = j;
          break;
        }
      }
      if (idx < 0) throw std::logic_error("minimal_cell_rep: reverse bump failed");
      std::swap(v, row[idx]);
    }
    images[i - 1] = static_cast<int>(numerator(v));
    while (!qrows.empty() && qrows.back().empty()) qrows.pop_back();
    while (!prows.empty() && prows.back().empty()) prows.pop_back();
  }
  return Permutation(std::move(images));
}

std::vector<Tableau> standard_tableaux(const Partition& lambda) {
  const int n = lambda.total();
  if (n > 10)
    throw std::invalid_argument("standard_tableaux: N > 10 exceeds the guard");
  std::vector<Tableau> out;
  const int nrows = static_cast<int>(lambda.parts.size());
  Rows rows(nrows);
  auto rec = [&](auto&& self, int value) -> void {
    if (value > n) {
      Rows trimmed;
      for (const auto& row : rows)
        if (!row.empty()) trimmed.push_back(row);
      out.push_back(Tableau::from_rows_bottom_up(std::move(trimmed)));
      return;
    }
    for (int r = 0; r < nrows; ++r) {
      int len = static_cast<int>(rows[r].size());
      if (len >= lambda.parts[r]) continue;
      if (r > 0 && len >= static_cast<int>(rows[r - 1].size())) continue;
      rows[r].push_back(Rational(value));
      self(self, value + 1);
      rows[r].pop_back();
    }
  };
  rec(rec, 1);
  return out;
}

}  // namespace goldie
