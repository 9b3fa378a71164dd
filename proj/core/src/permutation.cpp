#include "goldie/permutation.hpp"

#include <algorithm>
#include <numeric>
#include <stdexcept>

namespace goldie {

Permutation::Permutation(std::vector<int> images) : images_(std::move(images)) {
  const int n = static_cast<int>(images_.size());
  if (n < 1 || n > kMaxN)
    throw std::invalid_argument("Permutation: N must be in 1..12, got " +
                                std::to_string(n));
  std::vector<bool> seen(n, false);
  for (int v : images_) {
    if (v < 1 || v > n || seen[v - 1])
      throw std::invalid_argument("Permutation: images are not a bijection of 1..N");
    seen[v - 1] = true;
  }
}

Permutation Permutation::identity(int n) {
  std::vector<int> im(n);
  std::iota(im.begin(), im.end(), 1);
  return Permutation(std::move(im));
}

Permutation Permutation::inverse() const {
  std::vector<int> im(images_.size());
  for (int i = 1; i <= n(); ++i) im[images_[i - 1] - 1] = i;
  return Permutation(std::move(im));
}

int Permutation::length() const {
  int count = 0;
  for (int i = 0; i < n(); ++i)
    for (int j = i + 1; j < n(); ++j)
      if (images_[i] > images_[j]) ++count;
  return count;
}

std::int64_t Permutation::lex_rank() const {
  std::int64_t rank = 0;
  std::int64_t fact = 1;
  for (int k = 2; k <= n(); ++k) fact *= k;
  for (int i = 0; i < n(); ++i) {
    fact /= (n() - i);
    int smaller = 0;
    for (int j = i + 1; j < n(); ++j)
      if (images_[j] < images_[i]) ++smaller;
    rank += smaller * fact;
  }
  return rank;
}

Permutation Permutation::from_lex_rank(int n, std::int64_t rank) {
  std::vector<int> pool(n);
  std::iota(pool.begin(), pool.end(), 1);
  std::int64_t fact = 1;
  for (int k = 2; k <= n; ++k) fact *= k;
  std::vector<int> im;
  im.reserve(n);
  for (int i = 0; i < n; ++i) {
    fact /= (n - i);
    int idx = static_cast<int>(rank / fact);
    rank %= fact;
    im.push_back(pool[idx]);
    pool.erase(pool.begin() + idx);
  }
  return Permutation(std::move(im));
}

Permutation compose(const Permutation& u, const Permutation& v) {
  if (u.n() != v.n()) throw std::invalid_argument("compose: mismatched N");
  std::vector<int> im(u.n());
  for (int i = 1; i <= u.n(); ++i) im[i - 1] = u(v(i));
  return Permutation(std::move(im));
}

Permutation longest_element(int n) {
  std::vector<int> im(n);
  for (int i = 0; i < n; ++i) im[i] = n - i;
  return Permutation(std::move(im));
}

bool bruhat_leq(const Permutation& x, const Permutation& y) {
  if (x.n() != y.n()) throw std::invalid_argument("bruhat_leq: mismatched N");
  const int n = x.n();
  // x <= y iff #{k <= i : x(k) >= j} <= #{k <= i : y(k) >= j} for all i, j.
  std::vector<int> cx(n + 2, 0), cy(n + 2, 0);
  for (int i = 1; i <= n; ++i) {
    for (int j = x(i); j >= 1; --j) ++cx[j];
    for (int j = y(i); j >= 1; --j) ++cy[j];
    for (int j = 1; j <= n; ++j)
      if (cx[j] > cy[j]) return false;
  }
  return true;
}

std::vector<Permutation> all_permutations(int n) {
  std::vector<int> im(n);
  std::iota(im.begin(), im.end(), 1);
  std::vector<Permutation> out;
  do {
    out.emplace_back(im);
  } while (std::next_permutation(im.begin(), im.end()));
  return out;
}

ParabolicShape::ParabolicShape(std::vector<int> sizes)
    : block_sizes(std::move(sizes)) {
  if (block_sizes.empty())
    throw std::invalid_argument("ParabolicShape: empty composition");
  for (int b : block_sizes)
    if (b < 1) throw std::invalid_argument("ParabolicShape: nonpositive block");
}

int ParabolicShape::total() const {
  int t = 0;
  for (int b : block_sizes) t += b;
  return t;
}

int ParabolicShape::block_of(int v) const {
  int upto = 0;
  for (std::size_t b = 0; b < block_sizes.size(); ++b) {
    upto += block_sizes[b];
    if (v <= upto) return static_cast<int>(b);
  }
  throw std::out_of_range("ParabolicShape::block_of");
}

std::vector<Permutation> parabolic_subgroup(const ParabolicShape& shape) {
  const int n = shape.total();
  std::vector<std::vector<std::vector<int>>> block_perms;
  int start = 1;
  for (int size : shape.block_sizes) {
    std::vector<int> vals(size);
    std::iota(vals.begin(), vals.end(), start);
    std::vector<std::vector<int>> perms;
    do {
      perms.push_back(vals);
    } while (std::next_permutation(vals.begin(), vals.end()));
    block_perms.push_back(std::move(perms));
    start += size;
  }
  std::vector<Permutation> out;
  std::vector<std::size_t> idx(block_perms.size(), 0);
  while (true) {
    std::vector<int> im;
    im.reserve(n);
    for (std::size_t b = 0; b < block_perms.size(); ++b)
      for (int v : block_perms[b][idx[b]]) im.push_back(v);
    out.emplace_back(std::move(im));
    std::size_t b = block_perms.size();
    while (b > 0) {
      --b;
      if (++idx[b] < block_perms[b].size()) break;
      idx[b] = 0;
      if (b == 0) {
        std::sort(out.begin(), out.end());
        return out;
      }
    }
  }
}

namespace {

// All arrangements of the multiset of block labels (block b appearing
// block_sizes[b] times), lex order.
std::vector<std::vector<int>> block_patterns(const ParabolicShape& shape) {
  std::vector<int> labels;
  for (std::size_t b = 0; b < shape.block_sizes.size(); ++b)
    labels.insert(labels.end(), shape.block_sizes[b], static_cast<int>(b));
  std::vector<std::vector<int>> out;
  do {
    out.push_back(labels);
  } while (std::next_permutation(labels.begin(), labels.end()));
  return out;
}

}  // namespace

std::vector<Permutation> max_coset_reps(const ParabolicShape& shape, int n) {
  if (shape.total() != n)
    throw std::invalid_argument("max_coset_reps: shape does not partition 1..N");
  // A right coset W_J w is determined by the label pattern i -> block(w(i)).
  // The maximal-length member assigns each block's values in decreasing order.
  std::vector<std::vector<int>> block_values;
  int start = 1;
  for (int size : shape.block_sizes) {
    std::vector<int> vals(size);
    std::iota(vals.begin(), vals.end(), start);
    std::reverse(vals.begin(), vals.end());
    block_values.push_back(std::move(vals));
    start += size;
  }
  std::vector<Permutation> out;
  for (const auto& pattern : block_patterns(shape)) {
    std::vector<std::size_t> used(shape.block_sizes.size(), 0);
    std::vector<int> im(n);
    for (int i = 0; i < n; ++i) {
      int b = pattern[i];
      im[i] = block_values[b][used[b]++];
    }
    out.emplace_back(std::move(im));
  }
  return out;
}

std::vector<Permutation> min_coset_reps(const ParabolicShape& shape, int n) {
  if (shape.total() != n)
    throw std::invalid_argument("min_coset_reps: shape does not partition 1..N");
  // A left coset w W_J is determined by the value sets on each position
  // block; the minimal member lists each set in increasing order.
  std::vector<std::vector<int>> patterns = block_patterns(shape);
  std::vector<Permutation> out;
  for (const auto& pattern : patterns) {
    // pattern[v-1] = position block receiving value v
    std::vector<std::vector<int>> per_block(shape.block_sizes.size());
    for (int v = 1; v <= n; ++v) per_block[pattern[v - 1]].push_back(v);
    std::vector<int> im;
    im.reserve(n);
    for (auto& vals : per_block)
      im.insert(im.end(), vals.begin(), vals.end());
    out.emplace_back(std::move(im));
  }
  std::sort(out.begin(), out.end());
  return out;
}

}  // namespace goldie
