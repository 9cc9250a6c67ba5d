#pragma once
#include "cjac/dyck.hpp"

#include <algorithm>
#include <functional>
#include <numeric>
#include <queue>
#include <stdexcept>
#include <string>
#include <vector>

namespace cjac {

inline long fmod_pos(long x, long n) {
  long r = x % n;
  return r < 0 ? r + n : r;
}

struct Params {
  int n = 1, m = 1, d = 1, s = 1;

  long N() const { return long(n) * d; }
  long M() const { return long(m) * d; }

  void validate() const {
    if (n < 1 || m < 1 || d < 1 || s < 1) throw std::invalid_argument("params: n,m,d,s must be >= 1");
    if (std::gcd(n, m) != 1) throw std::invalid_argument("params: gcd(n,m) must be 1");
    if (std::gcd(d, s) != 1) throw std::invalid_argument("params: gcd(d,s) must be 1");
  }
  friend bool operator==(const Params&, const Params&) = default;
};

// carries the residue or value that broke the rule
struct SubsetError : std::invalid_argument {
  long witness;
  SubsetError(const std::string& what, long w) : std::invalid_argument(what + " (at " + std::to_string(w) + ")"), witness(w) {}
};

// cofinite (nd,md)-invariant subset of Z>=0, one nd-generator per residue mod nd
class Subset {
 public:
  Subset() = default;

  static Subset from_generators(Params p, std::vector<long> gens) {
    p.validate();
    const long N = p.N(), M = p.M();
    if (long(gens.size()) != N) throw SubsetError("from_generators: need one generator per residue mod nd", long(gens.size()));
    for (long r = 0; r < N; ++r) {
      if (gens[r] < 0) throw SubsetError("from_generators: negative generator for residue", r);
      if (gens[r] % N != r) throw SubsetError("from_generators: generator not congruent to its residue", r);
    }
    for (long r = 0; r < N; ++r)
      if (gens[fmod_pos(r + M, N)] > gens[r] + M) throw SubsetError("from_generators: not md-invariant at residue", r);
    if (gens[0] != 0) throw SubsetError("from_generators: not 0-normalized, residue 0 generator", gens[0]);
    return unchecked(p, std::move(gens));
  }
  static Subset unchecked(Params p, std::vector<long> gens) {
    Subset s;
    s.p_ = p;
    s.g_ = std::move(gens);
    return s;
  }
  // Z>=0 minus a finite set
  static Subset from_missing(Params p, const std::vector<long>& missing) {
    const long N = p.N();
    std::vector<long> g(static_cast<size_t>(N));
    for (long r = 0; r < N; ++r) g[r] = r;
    std::vector<long> ms(missing);
    std::sort(ms.begin(), ms.end());
    for (long x : ms) {
      long r = x % N;
      if (g[r] == x) g[r] += N;
    }
    auto s = from_generators(p, g);
    for (long x : ms)
      if (s.contains(x)) throw SubsetError("from_missing: removed set is not closed under the invariance", x);
    return s;
  }

  const Params& params() const { return p_; }
  const std::vector<long>& gens() const { return g_; }
  long gen(long r) const { return g_[size_t(fmod_pos(r, p_.N()))]; }
  bool contains(long x) const { return x >= 0 && x >= g_[size_t(x % p_.N())]; }

  long gap_count(long x) const {
    const long N = p_.N();
    long c = 0;
    for (long r = 0; r < N; ++r) {
      long lo = std::max(x, long(r));
      if (lo >= g_[r]) continue;
      long first = lo + fmod_pos(r - lo, N);
      if (first < g_[r]) c += (g_[r] - first + N - 1) / N;
    }
    return c;
  }
  std::vector<long> gaps(long x) const {
    std::vector<long> out;
    const long N = p_.N();
    for (long r = 0; r < N; ++r)
      for (long v = r; v < g_[r]; v += N)
        if (v >= x) out.push_back(v);
    std::sort(out.begin(), out.end());
    return out;
  }
  std::vector<long> md_cogenerators() const {
    const long N = p_.N(), M = p_.M();
    std::vector<long> out;
    for (long r = 0; r < N; ++r) {
      long lo = g_[size_t(fmod_pos(r + M, N))] - M;
      for (long b = lo; b < g_[r]; b += N)
        if (b >= 0) out.push_back(b);
    }
    std::sort(out.begin(), out.end());
    return out;
  }

  // residue-j component is contained in residue-k component shifted by c
  bool component_contained(long j, long k, long c) const {
    const long N = p_.N(), d = p_.d;
    if (fmod_pos(j - k - c, d) != 0) return false;
    for (long r = fmod_pos(j, d); r < N; r += d)
      if (!contains(g_[r] - c)) return false;
    return true;
  }
  long component_min(long j) const {
    long best = -1;
    for (long r = fmod_pos(j, p_.d); r < p_.N(); r += p_.d)
      if (best < 0 || g_[r] < best) best = g_[r];
    return best;
  }

  friend bool operator==(const Subset& a, const Subset& b) { return a.p_ == b.p_ && a.g_ == b.g_; }
  friend bool operator<(const Subset& a, const Subset& b) { return a.g_ < b.g_; }

 private:
  Params p_;
  std::vector<long> g_;
};

// a[j][i] = generator in residue j + i*md; a[j][i]+md = a[j][i+1] + alpha[j][i]*nd
struct GeneratorGrid {
  std::vector<std::vector<long>> a, alpha;
};

inline GeneratorGrid generator_grid(const Subset& D) {
  const auto& p = D.params();
  const long N = p.N(), M = p.M();
  GeneratorGrid G;
  G.a.assign(size_t(p.d), std::vector<long>(size_t(p.n)));
  G.alpha = G.a;
  for (int j = 0; j < p.d; ++j)
    for (int i = 0; i < p.n; ++i) G.a[j][i] = D.gen(j + i * M);
  for (int j = 0; j < p.d; ++j)
    for (int i = 0; i < p.n; ++i) {
      long nx = G.a[j][(i + 1) % p.n];
      long al = (G.a[j][i] + M - nx) / N;
      if (al < 0 || (G.a[j][i] + M - nx) % N) throw SubsetError("generator_grid: md-invariance violated at residue", G.a[j][i] % N);
      G.alpha[j][i] = al;
    }
  return G;
}

inline bool is_suspicious(const Subset& D, long x, int j) {
  if (x <= 0) throw std::invalid_argument("is_suspicious: x must be positive");
  const auto& p = D.params();
  for (int i = 0; i < p.n; ++i)
    if (D.contains(D.gen(j + i * p.M()) + p.M() + x)) return false;
  return true;
}

inline bool is_s_admissible(const Subset& D, long s) {
  if (std::gcd(long(D.params().d), s) != 1) throw std::invalid_argument("is_s_admissible: gcd(d,s) must be 1");
  for (int j = 0; j < D.params().d; ++j)
    if (is_suspicious(D, s, j)) return false;
  return true;
}

// sum over generators of |Gaps(a)| - |Gaps(a+md)|
inline long dim(const Subset& D) {
  long t = 0;
  for (long a : D.gens()) t += D.gap_count(a) - D.gap_count(a + D.params().M());
  return t;
}

// pairs (generator a, md-cogenerator b) with a < b
inline long dim_pairs(const Subset& D) {
  auto cog = D.md_cogenerators();
  long t = 0;
  for (long a : D.gens()) t += long(cog.end() - std::upper_bound(cog.begin(), cog.end(), a));
  return t;
}

inline long default_bound(const Params& p) { return long(p.d) * (long(p.n) * p.m * p.d + long(p.n) * p.d + long(p.m) * p.d); }

// all 0-normalized subsets with generators <= B, ascending on the generator vector
inline void for_each_bounded(const Params& p, long B, const std::function<void(const Subset&)>& f) {
  p.validate();
  const long N = p.N(), M = p.M();
  if (B < N) throw std::invalid_argument("enumerate_bounded: bound must be >= nd");
  std::vector<long> g(size_t(N), -1);
  g[0] = 0;
  auto ok = [&](long r) {
    long up = fmod_pos(r + M, N), dn = fmod_pos(r - M, N);
    if (g[up] >= 0 && g[up] > g[r] + M) return false;
    if (g[dn] >= 0 && g[r] > g[dn] + M) return false;
    return true;
  };
  std::function<void(long)> rec = [&](long r) {
    if (r == N) {
      f(Subset::unchecked(p, g));
      return;
    }
    for (long v = r; v <= B; v += N) {
      g[r] = v;
      if (ok(r)) rec(r + 1);
    }
    g[r] = -1;
  };
  if (N == 1) {
    f(Subset::unchecked(p, g));
    return;
  }
  rec(1);
}

inline std::vector<Subset> enumerate_bounded(const Params& p, long B) {
  std::vector<Subset> out;
  for_each_bounded(p, B, [&](const Subset& s) { out.push_back(s); });
  return out;
}

struct BoundInstability : std::runtime_error {
  using std::runtime_error::runtime_error;
};

// s-admissible subsets at bound B, certified by the same count at 2B
inline std::vector<Subset> admissible_subsets(const Params& p, long s, long B = 0) {
  if (B <= 0) B = default_bound(p);
  std::vector<Subset> out;
  for_each_bounded(p, B, [&](const Subset& D) {
    if (is_s_admissible(D, s)) out.push_back(D);
  });
  size_t twice = 0;
  for_each_bounded(p, 2 * B, [&](const Subset& D) { twice += is_s_admissible(D, s); });
  if (twice != out.size())
    throw BoundInstability("admissible count not stable: " + std::to_string(out.size()) + " at B=" + std::to_string(B) + ", " +
                           std::to_string(twice) + " at 2B");
  return out;
}

inline long count_s_admissible(const Params& p, long B = 0) { return long(admissible_subsets(p, p.s, B).size()); }

// gaps of <nd, md, nmd+1> via the Apery set with respect to nd
inline long semigroup_delta(const Params& p) {
  const long N = p.N();
  const long steps[2] = {p.M(), long(p.n) * p.m * p.d + 1};
  std::vector<long> w(size_t(N), -1);
  using E = std::pair<long, long>;
  std::priority_queue<E, std::vector<E>, std::greater<>> pq;
  w[0] = 0;
  pq.push({0, 0});
  while (!pq.empty()) {
    auto [c, r] = pq.top();
    pq.pop();
    if (c != w[r]) continue;
    for (long st : steps) {
      long nr = (r + st) % N, nc = c + st;
      if (w[nr] < 0 || nc < w[nr]) {
        w[nr] = nc;
        pq.push({nc, nr});
      }
    }
  }
  long g = 0;
  for (long r = 0; r < N; ++r) g += (w[r] - r) / N;
  return g;
}

}  // namespace cjac
