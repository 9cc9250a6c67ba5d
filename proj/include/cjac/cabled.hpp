#pragma once
#include "cjac/classes.hpp"

#include <algorithm>
#include <functional>
#include <stdexcept>
#include <vector>

namespace cjac {

// (d,s)-Dyck path by run lengths: v_1 up, h_1 right, v_2 up, ...
struct Pattern {
  int d = 1, s = 1;
  std::vector<int> v, h;

  bool valid() const {
    if (v.empty() || v.size() != h.size()) return false;
    long t = 0, q = 0;
    for (size_t i = 0; i < v.size(); ++i) {
      if (v[i] < 1 || h[i] < 1) return false;
      t += v[i];
      q += h[i];
      if (q * d > long(s) * t) return false;
    }
    return t == d && q == s;
  }
  friend bool operator==(const Pattern&, const Pattern&) = default;
};

inline std::vector<Pattern> enumerate_patterns(int d, int s) {
  if (d < 1 || s < 1 || std::gcd(d, s) != 1) throw std::invalid_argument("enumerate_patterns: need coprime d,s >= 1");
  std::vector<Pattern> out;
  Pattern cur{d, s, {}, {}};
  std::function<void(int, int)> rec = [&](int t, int q) {
    for (int vi = d - t; vi >= 1; --vi) {
      int T = t + vi;
      cur.v.push_back(vi);
      if (T == d) {
        cur.h.push_back(s - q);
        if (s - q >= 1) out.push_back(cur);
        cur.h.pop_back();
      } else {
        for (int hi = s - q - 1; hi >= 1; --hi) {
          if (long(q + hi) * d > long(s) * T) continue;
          cur.h.push_back(hi);
          rec(T, q + hi);
          cur.h.pop_back();
        }
      }
      cur.v.pop_back();
    }
  };
  rec(0, 0);
  return out;
}

inline Int cabled_count(int n, int m, int d, int s) {
  require_coprime(n, m, "cabled_count");
  Int tot = 0;
  for (auto& P : enumerate_patterns(d, s)) {
    Int prod = 1;
    for (int vi : P.v) prod *= count_paths(vi * n, vi * m);
    tot += prod;
  }
  return tot;
}

enum class Family { two_q, three_four, three_five };

inline Rational piontkowski_chi(Family f, int q, int s) {
  if (s < 1 || s % 2 == 0) throw std::invalid_argument("piontkowski_chi: s must be odd");
  switch (f) {
    case Family::two_q: {
      if (q < 1 || q % 2 == 0) throw std::invalid_argument("piontkowski_chi: q must be odd for the (2,q) family");
      Rational Q = q;
      return (Q + 1) * (Q * Q + 5 * Q + 3) / 12 + (Q + 1) * (Q + 1) * (2 * Q + s) / 8;
    }
    case Family::three_four:
      return Rational(229, 2) + Rational(25, 2) * (8 + s);
    case Family::three_five:
      return Rational(511, 2) + Rational(49, 2) * (10 + s);
  }
  throw std::invalid_argument("piontkowski_chi: unknown family");
}

// bar_j = Delta_{sj mod d} - (s-1)j, kept by its nd-generators (all congruent to j mod d)
struct BarComponent {
  int j = 0;
  std::vector<long> gens;
  long min() const { return *std::min_element(gens.begin(), gens.end()); }
  bool contains(long x, long N) const {
    for (long g : gens)
      if (fmod_pos(x - g, N) == 0) return x >= g;
    return false;
  }
};

inline std::vector<BarComponent> bar_transform(const Subset& D, int s) {
  const auto& p = D.params();
  if (std::gcd(p.d, s) != 1) throw std::invalid_argument("bar_transform: gcd(d,s) must be 1");
  std::vector<BarComponent> out;
  for (int j = 0; j < p.d; ++j) {
    long r = (long(s) * j) % p.d;
    BarComponent b{j, {}};
    for (int k = 0; k < p.n; ++k) b.gens.push_back(D.gen(r + long(p.d) * k) - long(s - 1) * j);
    std::sort(b.gens.begin(), b.gens.end());
    out.push_back(b);
  }
  return out;
}

// run i carries a 0-normalized 1-admissible (v_i n, v_i m)-subset: the bar components of
// the run shifted down to the run floor, residues compressed from mod d to mod v_i
struct CabledPath {
  Pattern pattern;
  std::vector<Subset> runs;
  friend bool operator==(const CabledPath& a, const CabledPath& b) { return a.pattern == b.pattern && a.runs == b.runs; }
  friend bool operator<(const CabledPath& a, const CabledPath& b) {
    if (a.pattern.v != b.pattern.v) return a.pattern.v < b.pattern.v;
    if (a.pattern.h != b.pattern.h) return a.pattern.h < b.pattern.h;
    return a.runs < b.runs;
  }
};

inline CabledPath to_cabled(const Subset& D, int s) {
  if (!is_s_admissible(D, s)) throw std::invalid_argument("to_cabled: subset is not s-admissible");
  const auto& p = D.params();
  const long d = p.d;
  auto bar = bar_transform(D, s);
  std::vector<long> t{0};
  long floor = bar[0].min();
  for (long j = 1; j < d; ++j)
    if (bar[j].min() < floor) {
      t.push_back(j);
      floor = bar[j].min();
    }
  t.push_back(d);
  CabledPath cp;
  cp.pattern.d = p.d;
  cp.pattern.s = s;
  long qprev = 0;
  for (size_t i = 0; i + 1 < t.size(); ++i) {
    long vi = t[i + 1] - t[i];
    long q = i + 2 < t.size() ? (t[i + 1] - bar[t[i + 1]].min()) / d : s;
    cp.pattern.v.push_back(int(vi));
    cp.pattern.h.push_back(int(q - qprev));
    qprev = q;
    long F = bar[t[i]].min();
    Params rp{p.n, p.m, int(vi), 1};
    std::vector<long> g(size_t(rp.N()), -1);
    for (long j = t[i]; j < t[i + 1]; ++j) {
      long r = j - t[i];
      for (long x : bar[j].gens) {
        long y = (x - F - r) / d;
        long val = vi * y + r;
        g[size_t(fmod_pos(val, rp.N()))] = val;
      }
    }
    cp.runs.push_back(Subset::from_generators(rp, g));
  }
  if (!cp.pattern.valid()) throw std::logic_error("to_cabled: produced an invalid pattern");
  return cp;
}

inline Subset from_cabled(const Params& p, const CabledPath& cp) {
  const auto& P = cp.pattern;
  if (P.d != p.d || P.s != p.s || !P.valid() || cp.runs.size() != P.v.size())
    throw std::invalid_argument("from_cabled: pattern does not match parameters");
  const long N = p.N(), d = p.d, s = p.s;
  std::vector<long> g(size_t(N), -1);
  long t = 0, q = 0;
  for (size_t i = 0; i < P.v.size(); ++i) {
    const long vi = P.v[i];
    const auto& run = cp.runs[i];
    if (run.params().n != p.n || run.params().m != p.m || run.params().d != vi)
      throw std::invalid_argument("from_cabled: run data has the wrong shape");
    if (!is_s_admissible(run, 1)) throw std::invalid_argument("from_cabled: run data is not 1-admissible");
    long F = t - q * d;
    for (long val : run.gens()) {
      long r = val % vi, y = val / vi;
      long j = t + r;
      long e = d * y + r + F + (s - 1) * j;
      g[size_t(fmod_pos(e, N))] = e;
    }
    t += vi;
    q += P.h[i];
  }
  return Subset::from_generators(p, g);
}

}  // namespace cjac
