#include "goldie/multipoly.hpp"

#include <algorithm>
#include <numeric>
#include <sstream>
#include <stdexcept>

namespace goldie {

MultiPoly::MultiPoly(int n) : n_(n) {
  if (n < 1 || n > kMaxN)
    throw std::invalid_argument("MultiPoly: N must be in 1..12");
}

MultiPoly MultiPoly::constant(int n, const Rational& c) {
  MultiPoly p(n);
  if (c != 0) p.terms_[std::vector<int>(n, 0)] = c;
  return p;
}

MultiPoly MultiPoly::variable(int n, int i) {
  if (i < 1 || i > n) throw std::invalid_argument("MultiPoly::variable: index");
  MultiPoly p(n);
  std::vector<int> e(n, 0);
  e[i - 1] = 1;
  p.terms_[std::move(e)] = 1;
  return p;
}

void MultiPoly::add_term(const std::vector<int>& expo, const Rational& c) {
  if (c == 0) return;
  auto it = terms_.find(expo);
  if (it == terms_.end()) {
    terms_.emplace(expo, c);
    return;
  }
  it->second += c;
  if (it->second == 0) terms_.erase(it);
}

MultiPoly& MultiPoly::operator+=(const MultiPoly& o) {
  if (n_ != o.n_) throw std::invalid_argument("MultiPoly: mismatched N");
  for (const auto& [e, c] : o.terms_) add_term(e, c);
  return *this;
}

MultiPoly& MultiPoly::operator-=(const MultiPoly& o) {
  if (n_ != o.n_) throw std::invalid_argument("MultiPoly: mismatched N");
  for (const auto& [e, c] : o.terms_) add_term(e, -c);
  return *this;
}

MultiPoly operator*(const MultiPoly& a, const MultiPoly& b) {
  if (a.n() != b.n()) throw std::invalid_argument("MultiPoly: mismatched N");
  MultiPoly out(a.n());
  std::vector<int> e(a.n());
  for (const auto& [ea, ca] : a.terms()) {
    for (const auto& [eb, cb] : b.terms()) {
      for (int i = 0; i < a.n(); ++i) e[i] = ea[i] + eb[i];
      out.add_term(e, ca * cb);
    }
  }
  return out;
}

MultiPoly scale(const MultiPoly& p, const Rational& c) {
  MultiPoly out(p.n_);
  if (c == 0) return out;
  for (const auto& [e, coef] : p.terms_) out.terms_[e] = coef * c;
  return out;
}

Rational evaluate(const MultiPoly& p, const Weight& alpha) {
  if (alpha.n() != p.n_) throw std::invalid_argument("evaluate: mismatched N");
  Rational sum = 0;
  for (const auto& [e, c] : p.terms_) {
    Rational term = c;
    for (int i = 0; i < p.n_; ++i)
      for (int k = 0; k < e[i]; ++k) term *= alpha.coords[i];
    sum += term;
  }
  return sum;
}

MultiPoly act(const Permutation& w, const MultiPoly& p) {
  if (w.n() != p.n_) throw std::invalid_argument("act: mismatched N");
  MultiPoly out(p.n_);
  for (const auto& [e, c] : p.terms_) {
    std::vector<int> ne(p.n_, 0);
    for (int i = 1; i <= p.n_; ++i) ne[w(i) - 1] = e[i - 1];
    out.terms_[std::move(ne)] = c;
  }
  return out;
}

std::string MultiPoly::to_string() const {
  if (terms_.empty()) return "0";
  std::vector<const std::pair<const std::vector<int>, Rational>*> order;
  order.reserve(terms_.size());
  for (const auto& t : terms_) order.push_back(&t);
  auto degree = [](const std::vector<int>& e) {
    return std::accumulate(e.begin(), e.end(), 0);
  };
  std::sort(order.begin(), order.end(), [&](const auto* a, const auto* b) {
    int da = degree(a->first), db = degree(b->first);
    if (da != db) return da > db;
    return a->first < b->first;
  });
  std::ostringstream os;
  bool first = true;
  for (const auto* t : order) {
    const Rational& c = t->second;
    Rational mag = c < 0 ? Rational(-c) : c;
    if (first) {
      if (c < 0) os << "-";
      first = false;
    } else {
      os << (c < 0 ? " - " : " + ");
    }
    std::string mono;
    for (int i = 0; i < n_; ++i) {
      if (t->first[i] == 0) continue;
      if (!mono.empty()) mono += "*";
      mono += "x" + std::to_string(i + 1);
      if (t->first[i] > 1) mono += "^" + std::to_string(t->first[i]);
    }
    if (mono.empty()) {
      os << goldie::to_string(mag);
    } else if (mag == 1) {
      os << mono;
    } else {
      os << goldie::to_string(mag) << "*" << mono;
    }
  }
  return os.str();
}

MultiPoly h_lambda(const Partition& lambda, int n) {
  if (lambda.total() != n)
    throw std::invalid_argument("h_lambda: |lambda| != N");
  Partition conj = lambda.transpose();
  MultiPoly out = MultiPoly::constant(n, 1);
  int start = 1;
  for (int block : conj.parts) {
    for (int i = start; i < start + block; ++i)
      for (int j = i + 1; j < start + block; ++j) {
        MultiPoly diff =
            MultiPoly::variable(n, i) - MultiPoly::variable(n, j);
        out = out * scale(diff, Rational(1, j - i));
      }
    start += block;
  }
  return out;
}

MultiPoly h_pi(const Pyramid& pi) {
  const int n = pi.boxes();
  MultiPoly out = MultiPoly::constant(n, 1);
  for (int i = 1; i <= n; ++i)
    for (int j = i + 1; j <= n; ++j) {
      if (pi.box_col(i) != pi.box_col(j)) continue;
      MultiPoly diff = MultiPoly::variable(n, i) - MultiPoly::variable(n, j);
      out = out * scale(diff, Rational(1, j - i));
    }
  return out;
}

}  // namespace goldie
