#pragma once

#include <optional>
#include <vector>

#include "goldie/rational.hpp"
#include "goldie/weight.hpp"

namespace goldie {

/// Weakly decreasing positive parts summing to N.
struct Partition {
  std::vector<int> parts;

  Partition() = default;
  explicit Partition(std::vector<int> p);

  int total() const;
  Partition transpose() const;

  bool operator==(const Partition& o) const { return parts == o.parts; }
  bool operator!=(const Partition& o) const { return parts != o.parts; }
  bool operator<(const Partition& o) const { return parts < o.parts; }
};

/// All partitions of n, deterministic order.
std::vector<Partition> partitions_of(int n);

/// n x n nonnegative integer matrix with the additive off-diagonal structure
/// s_{i,j} = s_{i,i+1} + ... + s_{j-1,j} (and dually below the diagonal).
struct ShiftMatrix {
  std::vector<std::vector<int>> entries;

  explicit ShiftMatrix(std::vector<std::vector<int>> e);
  /// Builds from the superdiagonal and subdiagonal entries.
  static ShiftMatrix from_diagonals(const std::vector<int>& upper,
                                    const std::vector<int>& lower);
  int n() const { return static_cast<int>(entries.size()); }
  int at(int i, int j) const { return entries[i - 1][j - 1]; }  // 1-based

  ShiftMatrix transpose() const;

  bool operator==(const ShiftMatrix& o) const { return entries == o.entries; }
};

/// Box diagram in an n x l rectangle: row i (top to bottom, matrix style)
/// holds p_i boxes in columns 1+s_{n,i} .. l-s_{i,n}. Boxes are numbered
/// 1..N in order down columns, leftmost column first.
class Pyramid {
 public:
  /// General pyramid: row lengths p_1 <= ... <= p_n plus a shift matrix.
  Pyramid(std::vector<int> row_lengths, const ShiftMatrix& sigma);
  /// Left-justified pyramid of a partition (rows = reversed parts).
  static Pyramid left_justified(const Partition& lambda);

  int rows() const { return static_cast<int>(row_lengths_.size()); }
  int level() const { return level_; }  // l = p_n
  int boxes() const { return n_boxes_; }
  int row_length(int i) const { return row_lengths_[i - 1]; }   // 1-based
  int row_start_col(int i) const { return row_start_[i - 1]; }
  int column_height(int j) const { return col_height_[j - 1]; }
  bool has_box(int i, int j) const;

  int box_row(int k) const { return box_row_[k - 1]; }  // k = 1..N
  int box_col(int k) const { return box_col_[k - 1]; }
  /// Box number at (row, col); 0 if absent.
  int box_number(int i, int j) const;

  bool is_left_justified() const;
  /// Row lengths sorted decreasingly.
  Partition partition() const;
  /// Column heights as the blocks (q_1, ..., q_l); the column stabilizer
  /// W^pi consists of the box-number permutations with these blocks.
  ParabolicShape column_blocks() const;

  ShiftMatrix shift_matrix() const;

  bool operator==(const Pyramid& o) const {
    return row_lengths_ == o.row_lengths_ && row_start_ == o.row_start_;
  }
  bool operator!=(const Pyramid& o) const { return !(*this == o); }

 private:
  Pyramid() = default;
  void finalize();

  std::vector<int> row_lengths_;  // p_1..p_n, nondecreasing (row 1 on top)
  std::vector<int> row_start_;    // first column of each row, 1-based
  int level_ = 0;
  int n_boxes_ = 0;
  std::vector<int> col_height_;
  std::vector<int> box_row_, box_col_;
};

/// Filling of a pyramid's boxes with exact rationals.
class Tableau {
 public:
  /// rows given top to bottom, matching the pyramid's rows.
  Tableau(Pyramid pyramid, std::vector<std::vector<Rational>> rows);
  /// Left-justified tableau from rows listed bottom row first.
  static Tableau from_rows_bottom_up(std::vector<std::vector<Rational>> rows);

  const Pyramid& pyramid() const { return pyramid_; }
  int boxes() const { return pyramid_.boxes(); }
  const std::vector<std::vector<Rational>>& rows() const { return rows_; }
  /// Entry at (row, col), 1-based.
  const Rational& entry(int i, int j) const;
  /// Entry of box k in the column-reading numbering.
  const Rational& box_entry(int k) const;

  /// Entries of column j, bottom to top.
  std::vector<Rational> column_bottom_up(int j) const;
  /// Whole content as a sorted multiset.
  std::vector<Rational> content() const;

  bool operator==(const Tableau& o) const {
    return pyramid_ == o.pyramid_ && rows_ == o.rows_;
  }
  bool operator!=(const Tableau& o) const { return !(*this == o); }

 private:
  Pyramid pyramid_;
  std::vector<std::vector<Rational>> rows_;
};

/// Column reading: coordinate k is the entry of box k.
Weight gamma(const Tableau& a);

/// Fixpoint of swapping in-row pairs a > b (partial order) with a to the left.
Tableau row_standardize(const Tableau& a);

/// Row-standardize, then read along rows starting with the top row.
Weight rho_read(const Tableau& a);

bool is_column_strict(const Tableau& a);
bool is_column_connected(const Tableau& a);
bool is_row_standard(const Tableau& a);
bool is_standard(const Tableau& a);
bool is_column_separated(const Tableau& a);

/// Two columns (as entry sets) interleave in the forbidden way.
bool columns_linked(const std::vector<Rational>& c1,
                    const std::vector<Rational>& c2);

bool row_equivalent(const Tableau& a, const Tableau& b);
/// Rows sorted by (coset representative, value); the canonical member of the
/// row-equivalence class.
Tableau canonical_row_form(const Tableau& a);

enum class TableauPredicate { ColumnStrict, ColumnConnected, ColumnSeparated };

/// First row-equivalent tableau (in canonical search order) satisfying the
/// predicate, or nullopt if none exists.
std::optional<Tableau> find_row_equivalent(const Tableau& a,
                                           TableauPredicate predicate);

Tableau left_justify(const Tableau& a);
/// Reverses the order of the columns (the pyramid becomes pi^t).
Tableau transpose_pyramid(const Tableau& a);

/// Weight with coordinate i equal to
/// (q_1+...+q_{col(i)-1}) - (q_{col(i)+1}+...+q_l).
Weight beta(const Pyramid& pi);

/// Columns grouped by the coset class of their entries, each group
/// re-assembled as its own left-justified tableau (original order kept
/// within a group, stably arranged by height).
std::vector<Tableau> dimred_split(const Tableau& a);

// Implemented with the Robinson-Schensted machinery (see rs.hpp):

/// Q(alpha) slid onto the pyramid pi; throws std::domain_error on shape
/// mismatch.
Tableau q_pi(const Weight& alpha, const Pyramid& pi);

/// Column-strict with Q(gamma(A)) of the pyramid's shape.
bool is_semi_standard(const Tableau& a);

/// Related by swaps of equal-height columns whose entries lie in different
/// cosets of C mod Z.
bool is_parallel(const Tableau& a, const Tableau& b);

/// Canonical representative B ~ Q_pi(gamma(A)); requires is_semi_standard(a).
Tableau rect_map(const Tableau& a);

}  // namespace goldie
