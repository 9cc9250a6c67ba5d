#pragma once
#include "cjac/algebra.hpp"

#include <functional>
#include <numeric>
#include <stdexcept>
#include <vector>

namespace cjac {

struct Rect {
  int a = 1, b = 1;  // height nd, width md
  Rect() = default;
  Rect(int a_, int b_) : a(a_), b(b_) {
    if (a < 1 || b < 1) throw std::invalid_argument("Rect: sides must be >= 1");
  }
  // m'/n' = b/a in lowest terms
  int np() const { return a / std::gcd(a, b); }
  int mp() const { return b / std::gcd(a, b); }
};

// row i (1-indexed) has floor(b(a-i)/a) boxes
inline std::vector<int> staircase(int a, int b) {
  Rect r(a, b);
  std::vector<int> rows;
  for (int i = 1; i <= a; ++i) rows.push_back(int((long long)b * (a - i) / a));
  return rows;
}

inline int delta(int a, int b) {
  auto s = staircase(a, b);
  return std::accumulate(s.begin(), s.end(), 0);
}

// subdiagram of the staircase; rows has length a (zeros kept)
struct DyckPath {
  Rect rect;
  std::vector<int> rows;

  int size() const { return std::accumulate(rows.begin(), rows.end(), 0); }
  // rows whose staircase row is nonempty, e.g. [4,3,1] for (4,6)
  std::vector<int> visible_rows() const {
    auto lam = staircase(rect.a, rect.b);
    std::vector<int> out;
    for (size_t i = 0; i < rows.size(); ++i)
      if (lam[i] > 0) out.push_back(rows[i]);
    return out;
  }
  friend bool operator==(const DyckPath& x, const DyckPath& y) {
    return x.rect.a == y.rect.a && x.rect.b == y.rect.b && x.rows == y.rows;
  }
};

inline DyckPath make_path(int a, int b, std::vector<int> rows) {
  auto lam = staircase(a, b);
  rows.resize(size_t(a), 0);
  for (int i = 0; i < a; ++i) {
    if (rows[i] < 0 || rows[i] > lam[i]) throw std::invalid_argument("make_path: row exceeds staircase");
    if (i && rows[i] > rows[i - 1]) throw std::invalid_argument("make_path: rows must weakly decrease");
  }
  return DyckPath{Rect(a, b), rows};
}

// lexicographic on rows, largest first
inline void for_each_path(int a, int b, const std::function<void(const DyckPath&)>& f) {
  auto lam = staircase(a, b);
  DyckPath p{Rect(a, b), std::vector<int>(size_t(a), 0)};
  std::function<void(int, int)> rec = [&](int i, int prev) {
    if (i == a) {
      f(p);
      return;
    }
    for (int v = std::min(prev, lam[i]); v >= 0; --v) {
      p.rows[i] = v;
      rec(i + 1, v);
    }
    p.rows[i] = 0;
  };
  rec(0, lam.empty() ? 0 : lam[0]);
}

inline std::vector<DyckPath> enumerate_paths(int a, int b) {
  std::vector<DyckPath> out;
  for_each_path(a, b, [&](const DyckPath& p) { out.push_back(p); });
  return out;
}

// number of paths without listing them: DP over rows on the last row length
inline Int count_paths(int a, int b) {
  auto lam = staircase(a, b);
  int w = lam.empty() ? 0 : lam[0];
  std::vector<Int> ways(size_t(w) + 1, 0);  // ways[v]: sequences so far ending with value v
  ways[size_t(w)] = 1;
  for (int i = 0; i < a; ++i) {
    std::vector<Int> nxt(size_t(w) + 1, 0);
    Int suffix = 0;
    for (int v = w; v >= 0; --v) {
      suffix += ways[size_t(v)];
      if (v <= lam[i]) nxt[size_t(v)] = suffix;
    }
    ways = std::move(nxt);
  }
  Int tot = 0;
  for (auto& x : ways) tot += x;
  return tot;
}

inline int area(const DyckPath& D) { return delta(D.rect.a, D.rect.b) - D.size(); }

// arm/(leg+1) <= m'/n' < (arm+1)/leg, arm and leg inside D, leg=0 means no upper bound
inline int dinv(const DyckPath& D) {
  const long np = D.rect.np(), mp = D.rect.mp();
  const auto& mu = D.rows;
  int width = mu.empty() ? 0 : mu[0];
  std::vector<int> conj(size_t(width), 0);
  for (int r : mu)
    for (int j = 0; j < r; ++j) ++conj[size_t(j)];
  int cnt = 0;
  for (size_t i = 0; i < mu.size(); ++i) {
    for (int j = 0; j < mu[i]; ++j) {
      long arm = mu[i] - j - 1;
      long leg = conj[size_t(j)] - long(i) - 1;
      bool lo = arm * np <= mp * (leg + 1);
      bool hi = leg == 0 || mp * leg < np * (arm + 1);
      if (lo && hi) ++cnt;
    }
  }
  return cnt;
}

inline QTPoly qt_catalan(int a, int b) {
  QTPoly p;
  for_each_path(a, b, [&](const DyckPath& D) { p.add(area(D), dinv(D), 1); });
  return p;
}

inline void require_coprime(int n, int m, const char* who) {
  if (n < 1 || m < 1 || std::gcd(n, m) != 1)
    throw std::invalid_argument(std::string(who) + ": need coprime n,m >= 1, got " + std::to_string(n) + "," +
                                std::to_string(m));
}

// sum_D t^(delta - dinv(D)); doubled exponents when cohomological
inline UPoly poincare(int n, int m, int d, bool cohomological = false) {
  require_coprime(n, m, "poincare");
  if (d < 1) throw std::invalid_argument("poincare: d must be >= 1");
  int a = n * d, b = m * d, dl = delta(a, b);
  UPoly u;
  for_each_path(a, b, [&](const DyckPath& D) { u.add((dl - dinv(D)) * (cohomological ? 2 : 1), 1); });
  return u;
}

inline Int binom(long n, long k) {
  if (k < 0 || k > n) return 0;
  Int r = 1;
  for (long i = 1; i <= k; ++i) r = r * (n - k + i) / i;
  return r;
}

// exp( sum_d z^d binom((m+n)d, md) / ((m+n)d) ) to order d_max
inline Series bizley_series(int n, int m, int d_max) {
  require_coprime(n, m, "bizley");
  Series s(d_max);
  for (int d = 1; d <= d_max; ++d) s[d] = Rational(binom(long(m + n) * d, long(m) * d)) / ((m + n) * d);
  return series_exp(s);
}

inline bool bizley_check(int n, int m, int d_max) {
  auto e = bizley_series(n, m, d_max);
  for (int d = 1; d <= d_max; ++d)
    if (e[d] != Rational(count_paths(n * d, m * d))) return false;
  return true;
}

}  // namespace cjac
