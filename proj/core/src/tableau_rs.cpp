// Tableau operations that need the insertion algorithm; kept out of
// tableau.cpp so the headers stay acyclic.

#include <set>
#include <sstream>
#include <stdexcept>

#include "goldie/rs.hpp"
#include "goldie/tableau.hpp"

namespace goldie {

namespace {

std::string shape_string(const Partition& p) {
  std::ostringstream os;
  os << "(";
  for (std::size_t i = 0; i < p.parts.size(); ++i) {
    if (i) os << ",";
    os << p.parts[i];
  }
  os << ")";
  return os.str();
}

}  // namespace

Tableau q_pi(const Weight& alpha, const Pyramid& pi) {
  Tableau q = q_of_weight(alpha);
  Partition qs = q.pyramid().partition();
  Partition ps = pi.partition();
  if (qs != ps)
    throw std::domain_error("q_pi: recording shape " + shape_string(qs) +
                            " does not match pyramid shape " + shape_string(ps));
  // Both row sequences are the parts in nondecreasing order top to bottom,
  // so rows carry over directly; only the column offsets change.
  return Tableau(pi, q.rows());
}

bool is_semi_standard(const Tableau& a) {
  if (!is_column_strict(a)) return false;
  return q_of_weight(gamma(a)).pyramid().partition() == a.pyramid().partition();
}

bool is_parallel(const Tableau& a, const Tableau& b) {
  if (a.pyramid() != b.pyramid()) return false;
  const Pyramid& pi = a.pyramid();
  const int l = pi.level();
  // coset class of a column, or nullopt when the column mixes cosets
  auto column_class =
      [&](const std::vector<std::vector<Rational>>& rows,
          int j) -> std::optional<Rational> {
    std::optional<Rational> cls;
    for (int i = 1; i <= pi.rows(); ++i) {
      if (!pi.has_box(i, j)) continue;
      Rational f = fractional_part(rows[i - 1][j - pi.row_start_col(i)]);
      if (!cls)
        cls = f;
      else if (*cls != f)
        return std::nullopt;
    }
    return cls;
  };
  std::set<std::vector<std::vector<Rational>>> seen;
  std::vector<std::vector<std::vector<Rational>>> frontier{a.rows()};
  seen.insert(a.rows());
  while (!frontier.empty()) {
    auto state = std::move(frontier.back());
    frontier.pop_back();
    if (state == b.rows()) return true;
    for (int j = 1; j <= l; ++j) {
      for (int k = j + 1; k <= l; ++k) {
        if (pi.column_height(j) != pi.column_height(k)) continue;
        auto cj = column_class(state, j);
        auto ck = column_class(state, k);
        if (!cj || !ck || *cj == *ck) continue;
        auto next = state;
        for (int i = 1; i <= pi.rows(); ++i) {
          if (!pi.has_box(i, j)) continue;
          // equal heights put both columns in exactly the same rows
          std::swap(next[i - 1][j - pi.row_start_col(i)],
                    next[i - 1][k - pi.row_start_col(i)]);
        }
        if (seen.insert(next).second) frontier.push_back(std::move(next));
      }
    }
  }
  return false;
}

Tableau rect_map(const Tableau& a) {
  if (!is_semi_standard(a))
    throw std::invalid_argument("rect_map: input is not semi-standard");
  return canonical_row_form(q_pi(gamma(a), a.pyramid()));
}

}  // namespace goldie
