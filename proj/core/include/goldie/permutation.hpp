#pragma once

#include <cstdint>
#include <vector>

namespace goldie {

/// Hard ceiling on N; factorial enumeration beyond this is not desk-scale.
inline constexpr int kMaxN = 12;

/// Element of S_N in one-line notation: w(i) = images[i-1], values 1..N.
class Permutation {
 public:
  explicit Permutation(std::vector<int> images);
  static Permutation identity(int n);

  int n() const { return static_cast<int>(images_.size()); }
  int operator()(int i) const { return images_[i - 1]; }
  const std::vector<int>& images() const { return images_; }

  Permutation inverse() const;
  int length() const;  // inversion count

  bool operator==(const Permutation& o) const { return images_ == o.images_; }
  bool operator!=(const Permutation& o) const { return images_ != o.images_; }
  bool operator<(const Permutation& o) const { return images_ < o.images_; }

  /// Lex rank within S_N, 0-based (Lehmer code).
  std::int64_t lex_rank() const;
  static Permutation from_lex_rank(int n, std::int64_t rank);

 private:
  std::vector<int> images_;
};

/// w(i) = u(v(i)).
Permutation compose(const Permutation& u, const Permutation& v);

inline int length(const Permutation& w) { return w.length(); }
inline Permutation inverse(const Permutation& w) { return w.inverse(); }

/// w0(i) = N+1-i.
Permutation longest_element(int n);

/// x <= y in Bruhat order, by the rank-matrix criterion.
bool bruhat_leq(const Permutation& x, const Permutation& y);

/// All of S_N in lex order.
std::vector<Permutation> all_permutations(int n);

/// Composition of N into consecutive index blocks; carrier of W^lambda,
/// W_delta and W^pi as block structures.
struct ParabolicShape {
  std::vector<int> block_sizes;

  explicit ParabolicShape(std::vector<int> sizes);
  int total() const;
  /// block index (0-based) containing value v in 1..N
  int block_of(int v) const;
};

/// Every element of the parabolic subgroup W_J (all products of in-block
/// permutations), lex order.
std::vector<Permutation> parabolic_subgroup(const ParabolicShape& shape);

/// Maximal-length representatives of the right cosets W_J \ W.
std::vector<Permutation> max_coset_reps(const ParabolicShape& shape, int n);

/// Minimal-length representatives of the left cosets W / W_J.
std::vector<Permutation> min_coset_reps(const ParabolicShape& shape, int n);

}  // namespace goldie
