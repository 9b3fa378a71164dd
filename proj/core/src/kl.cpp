#include "goldie/kl.hpp"

#include <unistd.h>

#include <algorithm>
#include <atomic>
#include <filesystem>
#include <fstream>
#include <map>
#include <sstream>
#include <stdexcept>
#include <thread>

#include "json.hpp"

namespace goldie {

std::string UniPoly::to_string() const {
  if (coeffs.empty()) return "0";
  std::ostringstream os;
  bool first = true;
  for (int d = static_cast<int>(coeffs.size()) - 1; d >= 0; --d) {
    if (coeffs[d] == 0) continue;
    if (!first) os << (coeffs[d] < 0 ? " - " : " + ");
    else if (coeffs[d] < 0) os << "-";
    long long mag = coeffs[d] < 0 ? -coeffs[d] : coeffs[d];
    if (d == 0) {
      os << mag;
    } else {
      if (mag != 1) os << mag << "*";
      os << "t";
      if (d > 1) os << "^" << d;
    }
    first = false;
  }
  return os.str();
}

namespace {

UniPoly poly_add(const UniPoly& a, const UniPoly& b) {
  std::vector<long long> c(std::max(a.coeffs.size(), b.coeffs.size()), 0);
  for (std::size_t i = 0; i < a.coeffs.size(); ++i) c[i] += a.coeffs[i];
  for (std::size_t i = 0; i < b.coeffs.size(); ++i) c[i] += b.coeffs[i];
  return UniPoly(std::move(c));
}

// a - m * t^shift * b
UniPoly poly_sub_shifted(const UniPoly& a, long long m, int shift,
                         const UniPoly& b) {
  std::vector<long long> c(
      std::max(a.coeffs.size(), b.coeffs.size() + shift), 0);
  for (std::size_t i = 0; i < a.coeffs.size(); ++i) c[i] += a.coeffs[i];
  for (std::size_t i = 0; i < b.coeffs.size(); ++i)
    c[i + shift] -= m * b.coeffs[i];
  return UniPoly(std::move(c));
}

UniPoly poly_shift(const UniPoly& a, int shift) {
  if (a.is_zero()) return a;
  std::vector<long long> c(a.coeffs.size() + shift, 0);
  for (std::size_t i = 0; i < a.coeffs.size(); ++i) c[i + shift] = a.coeffs[i];
  return UniPoly(std::move(c));
}

}  // namespace

struct KLBuilder {
  int n;
  std::int64_t order;
  std::vector<Permutation> perms;        // by lex rank
  std::vector<int> len;                  // length by rank
  std::vector<std::int64_t> left_mul;    // [(k-1)*order + r] = rank of s_k * w
  std::vector<std::vector<std::int64_t>> strata;  // ranks by length
  KLTable table;
  std::map<std::vector<long long>, std::int32_t> intern_map;

  explicit KLBuilder(int nn) : n(nn) {
    perms = all_permutations(n);
    order = static_cast<std::int64_t>(perms.size());
    len.resize(order);
    const int maxlen = n * (n - 1) / 2;
    strata.assign(maxlen + 1, {});
    for (std::int64_t r = 0; r < order; ++r) {
      len[r] = perms[r].length();
      strata[len[r]].push_back(r);
    }
    left_mul.resize(static_cast<std::size_t>(n - 1) * order);
    for (std::int64_t r = 0; r < order; ++r) {
      for (int k = 1; k < n; ++k) {
        std::vector<int> im = perms[r].images();
        for (int& v : im) {
          if (v == k) v = k + 1;
          else if (v == k + 1) v = k;
        }
        left_mul[static_cast<std::size_t>(k - 1) * order + r] =
            Permutation(std::move(im)).lex_rank();
      }
    }
    table.n_ = n;
    table.order_ = order;
    table.grid_.assign(order * order, 0);
    table.pool_.push_back(UniPoly{});                 // index 0: zero
    table.pool_.push_back(UniPoly({1}));              // index 1: one
    intern_map[{}] = 0;
    intern_map[{1}] = 1;
  }

  std::int32_t intern(const UniPoly& p) {
    auto it = intern_map.find(p.coeffs);
    if (it != intern_map.end()) return it->second;
    auto idx = static_cast<std::int32_t>(table.pool_.size());
    table.pool_.push_back(p);
    intern_map.emplace(p.coeffs, idx);
    return idx;
  }

  const UniPoly& stored(std::int64_t xr, std::int64_t yr) const {
    return table.pool_[table.grid_[yr * order + xr]];
  }

  // left descent: smallest k with l(s_k y) < l(y)
  int descent_of(std::int64_t yr) const {
    for (int k = 1; k < n; ++k)
      if (len[left_mul[static_cast<std::size_t>(k - 1) * order + yr]] <
          len[yr])
        return k;
    throw std::logic_error("KLBuilder: identity has no descent");
  }

  // Full column P_{*, y} for one y of positive length, using only strata of
  // smaller length from the merged table.
  std::vector<UniPoly> compute_column(std::int64_t yr) const {
    const int k = descent_of(yr);
    const std::int64_t vr = left_mul[static_cast<std::size_t>(k - 1) * order + yr];
    const int leny = len[yr];
    const int lenv = len[vr];

    // mu(z, v) over z with s z < z; P_{z,v} = 0 already excludes z !<= v
    std::vector<std::pair<std::int64_t, long long>> mu_list;
    for (std::int64_t zr = 0; zr < order; ++zr) {
      if (len[zr] >= lenv || (lenv - len[zr]) % 2 == 0) continue;
      if (len[left_mul[static_cast<std::size_t>(k - 1) * order + zr]] >= len[zr])
        continue;
      const UniPoly& p = stored(zr, vr);
      long long m = p.coeff((lenv - len[zr] - 1) / 2);
      if (m != 0) mu_list.emplace_back(zr, m);
    }

    std::vector<UniPoly> col(order);
    col[yr] = UniPoly({1});
    // decreasing length so P_{s x, y} is ready when needed
    for (int L = leny - 1; L >= 0; --L) {
      for (std::int64_t xr : strata_at(L)) {
        if (!bruhat_leq(perms[xr], perms[yr])) continue;
        const std::int64_t sxr =
            left_mul[static_cast<std::size_t>(k - 1) * order + xr];
        if (len[sxr] > L) {
          col[xr] = col[sxr];
          continue;
        }
        UniPoly p = poly_add(stored(sxr, vr), poly_shift(stored(xr, vr), 1));
        for (const auto& [zr, m] : mu_list) {
          const UniPoly& pxz = stored(xr, zr);
          if (pxz.is_zero()) continue;
          p = poly_sub_shifted(p, m, (leny - len[zr]) / 2, pxz);
        }
        col[xr] = std::move(p);
      }
    }
    return col;
  }

  const std::vector<std::int64_t>& strata_at(int L) const { return strata[L]; }

  void run(unsigned threads) {
    table.grid_[0] = 1;  // P_{id,id} = 1
    const int maxlen = n * (n - 1) / 2;
    for (int L = 1; L <= maxlen; ++L) {
      const auto& ys = strata[L];
      std::vector<std::vector<UniPoly>> columns(ys.size());
      if (threads <= 1 || ys.size() < 2) {
        for (std::size_t i = 0; i < ys.size(); ++i)
          columns[i] = compute_column(ys[i]);
      } else {
        const unsigned nt =
            std::min<unsigned>(threads, static_cast<unsigned>(ys.size()));
        std::vector<std::thread> workers;
        std::atomic<std::size_t> next{0};
        for (unsigned t = 0; t < nt; ++t) {
          workers.emplace_back([&]() {
            while (true) {
              std::size_t i = next.fetch_add(1);
              if (i >= ys.size()) break;
              columns[i] = compute_column(ys[i]);
            }
          });
        }
        for (auto& w : workers) w.join();
      }
      // deterministic merge: ys ascends by rank within the stratum
      for (std::size_t i = 0; i < ys.size(); ++i) {
        for (std::int64_t xr = 0; xr < order; ++xr) {
          const UniPoly& p = columns[i][xr];
          if (!p.is_zero()) table.grid_[ys[i] * order + xr] = intern(p);
        }
      }
    }
  }
};

KLTable KLTable::build(int n, unsigned threads) {
  if (n < 1 || n > kMaxN) throw std::invalid_argument("KLTable::build: N range");
  KLBuilder builder(n);
  builder.run(threads);
  return std::move(builder.table);
}

const UniPoly& KLTable::poly(const Permutation& x, const Permutation& y) const {
  if (x.n() != n_ || y.n() != n_)
    throw std::invalid_argument("KLTable::poly: mismatched N");
  return poly_by_rank(x.lex_rank(), y.lex_rank());
}

void KLTable::save(const std::string& path) const {
  namespace fs = std::filesystem;
  fs::path target(path);
  if (target.has_parent_path()) fs::create_directories(target.parent_path());
  fs::path tmp = target;
  tmp += ".tmp." + std::to_string(::getpid());
  {
    std::ofstream out(tmp);
    if (!out) throw std::runtime_error("KLTable::save: cannot open " + tmp.string());
    out << "GOLDIE-KL v1 N=" << n_ << "\n";
    for (std::int64_t yr = 0; yr < order_; ++yr) {
      Permutation y = Permutation::from_lex_rank(n_, yr);
      for (std::int64_t xr = 0; xr < order_; ++xr) {
        const UniPoly& p = poly_by_rank(xr, yr);
        if (p.is_zero()) continue;
        nlohmann::json rec;
        rec["x"] = Permutation::from_lex_rank(n_, xr).images();
        rec["y"] = y.images();
        rec["p"] = p.coeffs;
        out << rec.dump() << "\n";
      }
    }
    if (!out) throw std::runtime_error("KLTable::save: write failed");
  }
  fs::rename(tmp, target);
}

std::optional<KLTable> KLTable::load(const std::string& path, int n) {
  std::ifstream in(path);
  if (!in) return std::nullopt;
  std::string header;
  if (!std::getline(in, header)) return std::nullopt;
  if (header != "GOLDIE-KL v1 N=" + std::to_string(n)) return std::nullopt;
  KLTable t;
  t.n_ = n;
  t.order_ = 1;
  for (int k = 2; k <= n; ++k) t.order_ *= k;
  t.grid_.assign(t.order_ * t.order_, 0);
  t.pool_.push_back(UniPoly{});
  t.pool_.push_back(UniPoly({1}));
  std::map<std::vector<long long>, std::int32_t> seen{{{}, 0}, {{1}, 1}};
  std::string line;
  while (std::getline(in, line)) {
    if (line.empty()) continue;
    nlohmann::json rec = nlohmann::json::parse(line, nullptr, false);
    if (rec.is_discarded()) return std::nullopt;
    try {
      std::vector<int> xi = rec.at("x").get<std::vector<int>>();
      std::vector<int> yi = rec.at("y").get<std::vector<int>>();
      UniPoly p(rec.at("p").get<std::vector<long long>>());
      std::int64_t xr = Permutation(std::move(xi)).lex_rank();
      std::int64_t yr = Permutation(std::move(yi)).lex_rank();
      std::int32_t idx;
      auto it = seen.find(p.coeffs);
      if (it != seen.end()) {
        idx = it->second;
      } else {
        idx = static_cast<std::int32_t>(t.pool_.size());
        seen.emplace(p.coeffs, idx);
        t.pool_.push_back(std::move(p));
      }
      t.grid_[yr * t.order_ + xr] = idx;
    } catch (const std::exception&) {
      return std::nullopt;
    }
  }
  // sanity: diagonal must be all ones
  for (std::int64_t r = 0; r < t.order_; ++r)
    if (t.grid_[r * t.order_ + r] != 1) return std::nullopt;
  return t;
}

const KLTable& KLCache::table(int n) {
  if (n < 1 || n > n_guard_)
    throw std::domain_error("KLCache: N=" + std::to_string(n) +
                            " outside guard 1.." + std::to_string(n_guard_));
  auto it = tables_.find(n);
  if (it != tables_.end()) return it->second;
  if (dir_) {
    std::string path =
        (std::filesystem::path(*dir_) / ("kl-n" + std::to_string(n) + ".jsonl"))
            .string();
    if (auto loaded = KLTable::load(path, n))
      return tables_.emplace(n, std::move(*loaded)).first->second;
    KLTable built = KLTable::build(n, threads_);
    built.save(path);
    return tables_.emplace(n, std::move(built)).first->second;
  }
  return tables_.emplace(n, KLTable::build(n, threads_)).first->second;
}

const UniPoly& kl_polynomial(const KLTable& table, const Permutation& x,
                             const Permutation& y) {
  return table.poly(x, y);
}

long long mult(const KLTable& table, const Permutation& x,
               const Permutation& y) {
  Permutation w0 = longest_element(table.n());
  return table.poly(compose(x, w0), compose(y, w0)).at_one();
}

long long inv_mult(const KLTable& table, const Permutation& x,
                   const Permutation& y) {
  long long v = table.poly(y, x).at_one();
  return ((x.length() + y.length()) % 2 == 0) ? v : -v;
}

long long singular_inv_mult(const KLTable& table, const Weight& alpha,
                            const Weight& beta) {
  if (!alpha.is_integral() || !beta.is_integral())
    throw std::domain_error("singular_inv_mult: weights must be integral");
  AntidominantConjugate a = antidominant_conjugate(alpha);
  AntidominantConjugate b = antidominant_conjugate(beta);
  if (a.delta != b.delta)
    throw std::domain_error(
        "singular_inv_mult: weights lie in different linkage classes");
  long long sum = 0;
  for (const Permutation& z : parabolic_subgroup(stabilizer_shape(a.delta)))
    sum += inv_mult(table, a.d, compose(b.d, z));
  return sum;
}

long long tableau_inv_mult(const KLTable& table, const Tableau& a,
                           const Tableau& b) {
  if (a.pyramid() != b.pyramid())
    throw std::invalid_argument("tableau_inv_mult: pyramids differ");
  if (a.content() != b.content()) return 0;
  return singular_inv_mult(table, gamma(a), gamma(b));
}

}  // namespace goldie
