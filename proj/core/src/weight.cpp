#include "goldie/weight.hpp"

#include <algorithm>
#include <map>
#include <numeric>
#include <stdexcept>

namespace goldie {

bool Weight::is_integral() const {
  return std::all_of(coords.begin(), coords.end(),
                     [](const Rational& c) { return is_integer(c); });
}

bool Weight::single_coset() const {
  for (int i = 1; i < n(); ++i)
    if (!z_comparable(coords[i], coords[0])) return false;
  return true;
}

Weight rho(int n) {
  if (n < 1) throw std::invalid_argument("rho: N >= 1 required");
  std::vector<Rational> c(n);
  for (int i = 0; i < n; ++i) c[i] = Rational(-(i + 1));
  return Weight(std::move(c));
}

Weight act(const Permutation& w, const Weight& alpha) {
  if (w.n() != alpha.n()) throw std::invalid_argument("act: mismatched N");
  std::vector<Rational> c(alpha.n());
  for (int i = 1; i <= alpha.n(); ++i) c[w(i) - 1] = alpha[i];
  return Weight(std::move(c));
}

AntidominantConjugate antidominant_conjugate(const Weight& alpha) {
  if (!alpha.single_coset())
    throw std::domain_error(
        "antidominant_conjugate: coordinates lie in distinct cosets mod Z; "
        "split cosets first");
  const int n = alpha.n();
  std::vector<int> order(n);
  std::iota(order.begin(), order.end(), 0);
  // Stable sort keeps ties in original order, which yields the minimal
  // length conjugator d.
  std::stable_sort(order.begin(), order.end(), [&](int a, int b) {
    return alpha.coords[a] < alpha.coords[b];
  });
  std::vector<Rational> delta(n);
  std::vector<int> d(n);
  for (int j = 0; j < n; ++j) {
    delta[j] = alpha.coords[order[j]];
    d[j] = order[j] + 1;  // d(j) = position in alpha of the j-th smallest
  }
  return {Weight(std::move(delta)), Permutation(std::move(d))};
}

ParabolicShape stabilizer_shape(const Weight& delta) {
  std::vector<int> blocks;
  int run = 1;
  for (int i = 2; i <= delta.n(); ++i) {
    if (delta[i] == delta[i - 1]) {
      ++run;
    } else {
      if (delta[i] < delta[i - 1])
        throw std::invalid_argument("stabilizer_shape: weight not anti-dominant");
      blocks.push_back(run);
      run = 1;
    }
  }
  blocks.push_back(run);
  return ParabolicShape(std::move(blocks));
}

bool upper_closure_contains(const Permutation& w, const Weight& alpha) {
  if (w.n() != alpha.n())
    throw std::invalid_argument("upper_closure_contains: mismatched N");
  Permutation winv = w.inverse();
  for (int i = 1; i <= alpha.n(); ++i) {
    for (int j = i + 1; j <= alpha.n(); ++j) {
      if (winv(i) < winv(j)) {
        if (!(alpha[i] <= alpha[j])) return false;
      } else {
        if (!(alpha[i] > alpha[j])) return false;
      }
    }
  }
  return true;
}

CosetSplit coset_split(const Weight& alpha) {
  std::map<Rational, std::vector<int>> groups;  // rep -> positions
  for (int i = 1; i <= alpha.n(); ++i)
    groups[fractional_part(alpha[i])].push_back(i);
  CosetSplit out;
  for (const auto& [rep, positions] : groups) {
    CosetPart part;
    part.rep = rep;
    part.positions = positions;
    std::vector<Rational> sub;
    sub.reserve(positions.size());
    for (int i : positions) sub.push_back(alpha[i] - rep);
    part.sub_weight = Weight(std::move(sub));
    out.parts.push_back(std::move(part));
  }
  return out;
}

Weight coset_assemble(const CosetSplit& split) {
  int n = 0;
  for (const auto& p : split.parts) n += p.sub_weight.n();
  std::vector<Rational> coords(n);
  for (const auto& p : split.parts)
    for (std::size_t j = 0; j < p.positions.size(); ++j)
      coords[p.positions[j] - 1] = p.sub_weight.coords[j] + p.rep;
  return Weight(std::move(coords));
}

}  // namespace goldie
